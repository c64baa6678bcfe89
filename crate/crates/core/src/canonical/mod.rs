//! Linear canonical relations: lagrangian subspaces `L ⊆ X ⊕ Y⁻`.

mod classify;
mod factor;
mod normal_form;

pub use classify::{
    decide_equivalence, intersection_profile, ReducedProblem, Verdict, Witness, WitnessKind, WitnessValue,
};
pub use factor::{equivalence_by_parts, factorize, induced_phi, is_equivalence, Factorization, InducedMap};
pub use normal_form::{block_normal_form, BlockNormalForm, L0Block};

use crate::error::{check_dim, ensure, Error, Result};
use crate::linalg::{add, scale, zero_vector, Mat, Scalar, Subspace, Vector};
use crate::relations::Relation;
use crate::symplectic::{SympMap, SympSpace};

/// A lagrangian subspace of `X ⊕ Y⁻`, carried as a relation from `X` to `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalRelation {
    x: SympSpace,
    y: SympSpace,
    rel: Relation,
}

/// Whether `W ⊆ V ⊕ V` is lagrangian for the form `ω ⊕ -ω`.
pub fn is_canonical(v: &SympSpace, w: &Subspace) -> bool {
    is_canonical_between(v, v, w)
}

/// Whether `W ⊆ X ⊕ Y` is lagrangian for the form `ω_X ⊕ -ω_Y`.
pub fn is_canonical_between(x: &SympSpace, y: &SympSpace, w: &Subspace) -> bool {
    w.ambient() == x.dim() + y.dim() && x.dsum(&y.minus()).is_lagrangian(w)
}

impl CanonicalRelation {
    pub fn new(x: SympSpace, y: SympSpace, rel: Relation) -> Result<Self> {
        check_dim(x.dim(), rel.source_dim())?;
        check_dim(y.dim(), rel.target_dim())?;
        if !is_canonical_between(&x, &y, rel.space()) {
            return Err(Error::NotCanonical);
        }
        Ok(CanonicalRelation { x, y, rel })
    }

    /// An endo-relation on `V`.
    pub fn endo(v: SympSpace, rel: Relation) -> Result<Self> {
        CanonicalRelation::new(v.clone(), v, rel)
    }

    /// The graph of a symplectomorphism.
    pub fn from_symplectomorphism(s: &SympMap) -> Self {
        CanonicalRelation {
            x: s.source().clone(),
            y: s.target().clone(),
            rel: Relation::graph(s.matrix()),
        }
    }

    pub fn source(&self) -> &SympSpace {
        &self.x
    }

    pub fn target(&self) -> &SympSpace {
        &self.y
    }

    pub fn rel(&self) -> &Relation {
        &self.rel
    }

    pub fn is_endo(&self) -> bool {
        self.x == self.y
    }

    /// `X ⊕ Y⁻`.
    pub fn ambient(&self) -> SympSpace {
        self.x.dsum(&self.y.minus())
    }

    /// The symplectomorphism when the relation is a graph.
    pub fn as_map(&self) -> Option<SympMap> {
        let m = self.rel.as_matrix()?;
        SympMap::new(self.x.clone(), self.y.clone(), m).ok()
    }

    pub fn converse(&self) -> CanonicalRelation {
        CanonicalRelation {
            x: self.y.clone(),
            y: self.x.clone(),
            rel: self.rel.converse(),
        }
    }

    /// Transpose with respect to the two symplectic forms.
    pub fn transpose(&self) -> Result<Relation> {
        self.rel.transpose(self.x.form(), self.y.form())
    }

    /// `(S ⊕ S)(L)` for a symplectomorphism `S` out of the source space of an
    /// endo-relation.
    pub fn conjugate(&self, s: &SympMap) -> Result<CanonicalRelation> {
        if !self.is_endo() || s.source() != &self.x {
            return Err(Error::InvalidArgument("conjugation needs an endo-relation on the map's source".into()));
        }
        let rel = self.rel.conjugate(s.matrix())?;
        CanonicalRelation::endo(s.target().clone(), rel)
    }

    /// Some `w` with `(v, w) ∈ L`.
    pub(crate) fn some_image(&self, v: &[Scalar]) -> Option<Vector> {
        let c = self.rel.source_block().solve(v)?;
        Some(self.rel.target_block().mul_vec(&c))
    }
}

/// `L2 ∘ L1`, checked to be lagrangian.
pub fn compose_canonical(l2: &CanonicalRelation, l1: &CanonicalRelation) -> Result<CanonicalRelation> {
    if l1.y != l2.x {
        return Err(Error::DimensionMismatch {
            expected: l2.x.dim(),
            found: l1.y.dim(),
        });
    }
    let rel = Relation::compose(&l2.rel, &l1.rel)?;
    ensure(
        is_canonical_between(&l1.x, &l2.y, rel.space()),
        "composite of canonical relations is not lagrangian",
    )?;
    Ok(CanonicalRelation {
        x: l1.x.clone(),
        y: l2.y.clone(),
        rel,
    })
}

/// `{(c, ρ(c)) : c ∈ C} ⊆ V ⊕ (V^C)⁻` for coisotropic `C`.
pub fn reduction_relation(v: &SympSpace, c: &Subspace) -> Result<CanonicalRelation> {
    if !v.is_coisotropic(c) {
        return Err(Error::NotCoisotropic);
    }
    let red = v.reduce(c)?;
    let pairs: Vec<(Vector, Vector)> = c
        .basis_vectors()
        .into_iter()
        .zip(red.rho.column_vectors())
        .collect();
    let rel = Relation::from_pairs(v.dim(), red.reduced.dim(), &pairs);
    ensure(
        2 * rel.dim() == v.dim() + red.reduced.dim(),
        "reduction relation dimension count",
    )?;
    CanonicalRelation::new(v.clone(), red.reduced.clone(), rel)
}

/// Components of `v` in `first ⊕ second` (ambient vectors), when `v` lies
/// in that sum and the sum is direct.
pub(crate) fn split(v: &[Scalar], first: &Subspace, second: &Subspace) -> Option<(Vector, Vector)> {
    let mut cols = first.basis_vectors();
    cols.extend(second.basis_vectors());
    let m = Mat::from_columns(&cols, v.len());
    let c = m.solve(v)?;
    let (cf, cs) = c.split_at(first.dim());
    let combine = |s: &Subspace, coeffs: &[Scalar]| {
        s.basis_vectors()
            .iter()
            .zip(coeffs)
            .fold(zero_vector(v.len()), |acc, (b, x)| {
                add(&acc, &scale(b, x))
            })
    };
    Some((combine(first, cf), combine(second, cs)))
}
