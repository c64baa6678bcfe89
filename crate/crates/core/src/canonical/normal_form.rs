use crate::coisotropic::ElementaryDecomposition;
use crate::error::{ensure, Result};
use crate::linalg::{zero_vector, Mat, Subspace, Vector};
use crate::relations::Relation;

use super::classify::Side;
use super::CanonicalRelation;

/// Spanning pairs of `L0 ⊆ (F ⊕ G ⊕ H) ⊕ (F ⊕ G ⊕ H)⁻`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L0Block {
    /// `(g, 0)` for `g ∈ G1`.
    pub g1: Vec<(Vector, Vector)>,
    /// `(f, φ(f))` for `f ∈ F`.
    pub f: Vec<(Vector, Vector)>,
    /// `(h, φ(h))` for `h ∈ H`.
    pub h: Vec<(Vector, Vector)>,
    /// `(0, h)` for `h ∈ H1`.
    pub h1: Vec<(Vector, Vector)>,
}

/// `L = L_D ⊕ L_E ⊕ L0` over the elementary decomposition of `(dom L, ran L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockNormalForm {
    pub decomposition: ElementaryDecomposition,
    /// `(i, 0)` and `(0, i)` for `i ∈ I`.
    pub lambda: Vec<(Vector, Vector)>,
    /// `(e, 0)` for `e ∈ E1` and `(0, e)` for `e ∈ E2`.
    pub delta: Vec<(Vector, Vector)>,
    pub l0: L0Block,
    /// `φ_{L0}` in the bases `(F, H1, H2)` and `(F, G1, G2)`.
    pub phi: Mat,
    /// Always false: `phi` is the raw matrix, not a normal form.
    pub phi_is_canonical: bool,
}

impl BlockNormalForm {
    pub fn dim(&self) -> usize {
        self.decomposition.i.ambient()
    }

    /// The subspace spanned by every emitted pair.
    pub fn reassemble(&self) -> Relation {
        let l0 = &self.l0;
        let pairs: Vec<(Vector, Vector)> = [&self.lambda, &self.delta, &l0.g1, &l0.f, &l0.h, &l0.h1]
            .into_iter()
            .flatten()
            .cloned()
            .collect();
        Relation::from_pairs(self.dim(), self.dim(), &pairs)
    }
}

pub fn block_normal_form(l: &CanonicalRelation) -> Result<BlockNormalForm> {
    let side = Side::analyze(l)?;
    let n = l.source().dim();
    let d = &side.d;
    let left = |s: &Subspace| -> Vec<(Vector, Vector)> {
        s.basis_vectors().into_iter().map(|v| (v, zero_vector(n))).collect()
    };
    let right = |s: &Subspace| -> Vec<(Vector, Vector)> {
        s.basis_vectors().into_iter().map(|v| (zero_vector(n), v)).collect()
    };
    let graph = |s: &Subspace| -> Result<Vec<(Vector, Vector)>> {
        s.basis_vectors()
            .into_iter()
            .map(|v| {
                let w = side.phi(&v)?;
                Ok((v, w))
            })
            .collect()
    };
    let mut lambda = left(&d.i);
    lambda.extend(right(&d.i));
    let mut delta = left(&d.e1);
    delta.extend(right(&d.e2));
    let l0 = L0Block {
        g1: left(&d.g1),
        f: graph(&d.f)?,
        h: graph(&d.h())?,
        h1: right(&d.h1),
    };
    let out = BlockNormalForm {
        decomposition: d.clone(),
        lambda,
        delta,
        l0,
        phi: side.phi_map()?.matrix().clone(),
        phi_is_canonical: false,
    };
    ensure(out.reassemble() == *l.rel(), "block normal form does not reassemble")?;
    Ok(out)
}
