//! Classification of ordered pairs of coisotropic subspaces up to
//! symplectomorphism.
//!
//! Invariants `k = (dim A^ω∩B^ω, dim A^ω, dim B^ω, ½ dim V, dim A^ω∩B)` are
//! complete. The elementary invariants `n = M⁻¹ k` are the half-dimensions
//! of the five blocks `λ, δ, σ, μ_B, μ_A`, in that order.

use crate::error::{check_dim, ensure, Error, Result};
use crate::linalg::{Mat, Subspace, Vector};
use crate::symplectic::{standard_space, SympBasis, SympMap, SympSpace};

/// `k = M · n`.
pub const M: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 1, 0],
    [1, 1, 0, 0, 1],
    [1, 1, 1, 1, 1],
    [1, 0, 0, 1, 0],
];

/// `n = M⁻¹ · k`.
pub const M_INV: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, -1],
    [1, 0, -1, 1, -1],
    [-1, 0, 0, 0, 1],
    [-1, -1, 1, 0, 1],
];

/// The pair `(A, B)` of coisotropic subspaces of `space`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoisoPair {
    pub space: SympSpace,
    pub a: Subspace,
    pub b: Subspace,
}

impl CoisoPair {
    pub fn new(space: SympSpace, a: Subspace, b: Subspace) -> Result<Self> {
        check_dim(space.dim(), a.ambient())?;
        check_dim(space.dim(), b.ambient())?;
        if !space.is_coisotropic(&a) || !space.is_coisotropic(&b) {
            return Err(Error::NotCoisotropic);
        }
        Ok(CoisoPair { space, a, b })
    }

    /// `(B, A)`.
    pub fn swap(&self) -> CoisoPair {
        CoisoPair {
            space: self.space.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Image under a symplectomorphism out of `space`.
    pub fn transform(&self, s: &SympMap) -> Result<CoisoPair> {
        if s.source() != &self.space {
            return Err(Error::InvalidArgument("map source is not the pair's space".into()));
        }
        Ok(CoisoPair {
            space: s.target().clone(),
            a: s.image(&self.a)?,
            b: s.image(&self.b)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalInvariants(pub [usize; 5]);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryInvariants(pub [usize; 5]);

/// `(dim V, dim A, dim B, dim A∩B)` plus `dim A^ω∩B`, which the first four
/// do not determine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinalgInvariants {
    pub dim_v: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_a_cap_b: usize,
    pub dim_ao_cap_b: usize,
}

impl CanonicalInvariants {
    /// `0 ≤ k1 ≤ k5 ≤ k2` and `k1 + k2 ≤ k3 + k5 ≤ k1 + k4`.
    pub fn is_valid(&self) -> bool {
        validate_k(&self.0)
    }

    /// Invariants of `(B, A)`.
    pub fn swapped(&self) -> CanonicalInvariants {
        let [k1, k2, k3, k4, k5] = self.0;
        CanonicalInvariants([k1, k3, k2, k4, k5 + k3 - k2])
    }

    pub fn to_linalg(&self) -> LinalgInvariants {
        let [k1, k2, k3, k4, k5] = self.0;
        LinalgInvariants {
            dim_v: 2 * k4,
            dim_a: 2 * k4 - k2,
            dim_b: 2 * k4 - k3,
            dim_a_cap_b: 2 * k4 + k1 - k2 - k3,
            dim_ao_cap_b: k5,
        }
    }

    pub fn from_linalg(l: &LinalgInvariants) -> Result<CanonicalInvariants> {
        let invalid = || Error::InvalidArgument("inconsistent linear-algebra invariants".into());
        if !l.dim_v.is_multiple_of(2) {
            return Err(invalid());
        }
        let k4 = l.dim_v / 2;
        let k2 = l.dim_v.checked_sub(l.dim_a).ok_or_else(invalid)?;
        let k3 = l.dim_v.checked_sub(l.dim_b).ok_or_else(invalid)?;
        let k1 = (l.dim_a_cap_b + k2 + k3).checked_sub(2 * k4).ok_or_else(invalid)?;
        let k = CanonicalInvariants([k1, k2, k3, k4, l.dim_ao_cap_b]);
        if !k.is_valid() {
            return Err(Error::InvalidInvariants(k.0));
        }
        Ok(k)
    }
}

pub fn validate_k(k: &[usize; 5]) -> bool {
    let [k1, k2, k3, k4, k5] = *k;
    k1 <= k5 && k5 <= k2 && k1 + k2 <= k3 + k5 && k3 + k5 <= k1 + k4
}

fn apply(m: &[[i64; 5]; 5], v: &[usize; 5]) -> [i64; 5] {
    let mut out = [0i64; 5];
    for (o, row) in out.iter_mut().zip(m) {
        *o = row.iter().zip(v).map(|(a, &b)| a * b as i64).sum();
    }
    out
}

/// `n = M⁻¹ k`; errors when `k` violates the inequalities.
pub fn elementary_invariants(k: &CanonicalInvariants) -> Result<ElementaryInvariants> {
    if !k.is_valid() {
        return Err(Error::InvalidInvariants(k.0));
    }
    let n = apply(&M_INV, &k.0);
    let mut out = [0usize; 5];
    for (o, x) in out.iter_mut().zip(n) {
        *o = usize::try_from(x).map_err(|_| Error::Internal("negative elementary invariant".into()))?;
    }
    Ok(ElementaryInvariants(out))
}

/// `k = M n`.
pub fn n_to_k(n: &ElementaryInvariants) -> CanonicalInvariants {
    let k = apply(&M, &n.0);
    CanonicalInvariants(k.map(|x| x as usize))
}

pub fn canonical_invariants(pair: &CoisoPair) -> Result<CanonicalInvariants> {
    let v = &pair.space;
    let ao = v.orthogonal(&pair.a)?;
    let bo = v.orthogonal(&pair.b)?;
    Ok(CanonicalInvariants([
        ao.intersect(&bo)?.dim(),
        ao.dim(),
        bo.dim(),
        v.half_dim(),
        ao.intersect(&pair.b)?.dim(),
    ]))
}

pub fn pairs_equivalent(p: &CoisoPair, q: &CoisoPair) -> Result<bool> {
    Ok(p.space.dim() == q.space.dim() && canonical_invariants(p)? == canonical_invariants(q)?)
}

/// The nine-part splitting
/// `V = (I⊕J) ⊕ (E1⊕E2) ⊕ F ⊕ (G1⊕G2) ⊕ (H1⊕H2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryDecomposition {
    pub i: Subspace,
    pub j: Subspace,
    pub e1: Subspace,
    pub e2: Subspace,
    pub f: Subspace,
    pub g1: Subspace,
    pub g2: Subspace,
    pub h1: Subspace,
    pub h2: Subspace,
}

impl ElementaryDecomposition {
    fn sum(parts: &[&Subspace]) -> Subspace {
        let n = parts[0].ambient();
        Subspace::sum_all(n, parts).expect("same ambient")
    }

    pub fn d(&self) -> Subspace {
        Self::sum(&[&self.i, &self.j])
    }

    pub fn e(&self) -> Subspace {
        Self::sum(&[&self.e1, &self.e2])
    }

    pub fn g(&self) -> Subspace {
        Self::sum(&[&self.g1, &self.g2])
    }

    pub fn h(&self) -> Subspace {
        Self::sum(&[&self.h1, &self.h2])
    }

    /// `K = I ⊕ G1 ⊕ H1`.
    pub fn k(&self) -> Subspace {
        Self::sum(&[&self.i, &self.g1, &self.h1])
    }

    /// `K′ = J ⊕ G2 ⊕ H2`.
    pub fn kprime(&self) -> Subspace {
        Self::sum(&[&self.j, &self.g2, &self.h2])
    }

    pub fn half_dims(&self) -> ElementaryInvariants {
        ElementaryInvariants([
            self.i.dim(),
            self.e1.dim(),
            self.f.dim() / 2,
            self.g1.dim(),
            self.h1.dim(),
        ])
    }

    /// All structural identities of the decomposition for the pair.
    pub fn verify(&self, pair: &CoisoPair) -> bool {
        let v = &pair.space;
        let blocks = [self.d(), self.e(), self.f.clone(), self.g(), self.h()];
        let splittings = [
            (&self.i, &self.j, &blocks[0]),
            (&self.e1, &self.e2, &blocks[1]),
            (&self.g1, &self.g2, &blocks[3]),
            (&self.h1, &self.h2, &blocks[4]),
        ];
        let refs: Vec<&Subspace> = blocks.iter().collect();
        let blocks_ok = Subspace::independent(&refs)
            && blocks.iter().map(Subspace::dim).sum::<usize>() == v.dim()
            && blocks.iter().all(|b| b.is_zero() || v.is_symplectic_subspace(b))
            && (0..5).all(|x| (x + 1..5).all(|y| v.orthogonal_pair(&blocks[x], &blocks[y])));
        let split_ok = splittings.iter().all(|(l1, l2, blk)| {
            v.is_lagrangian_in(l1, blk) && v.is_lagrangian_in(l2, blk) && Subspace::independent(&[l1, l2])
        });
        let a_parts = [&self.i, &self.e1, &self.g1, &self.f, &self.h1, &self.h2];
        let b_parts = [&self.i, &self.e2, &self.h1, &self.f, &self.g1, &self.g2];
        let reassembles = |parts: &[&Subspace], target: &Subspace| {
            Subspace::independent(parts) && Self::sum(parts) == *target
        };
        let kp = self.kprime();
        let meet = |x: &Subspace| x.intersect(&kp).expect("same ambient");
        let n_ok = canonical_invariants(pair)
            .and_then(|k| elementary_invariants(&k))
            .is_ok_and(|n| n == self.half_dims());
        blocks_ok
            && split_ok
            && reassembles(&a_parts, &pair.a)
            && reassembles(&b_parts, &pair.b)
            && meet(&pair.b) == self.g2
            && meet(&pair.a) == self.h2
            && n_ok
    }
}

pub fn elementary_decomposition(pair: &CoisoPair) -> Result<ElementaryDecomposition> {
    let v = &pair.space;
    let (a, b) = (&pair.a, &pair.b);
    let ao = v.orthogonal(a)?;
    let bo = v.orthogonal(b)?;
    let i = ao.intersect(&bo)?;
    let ao_b = ao.intersect(b)?;
    let bo_a = bo.intersect(a)?;
    let g1 = i.complement_in(&ao_b)?;
    let e1 = ao_b.complement_in(&ao)?;
    let h1 = i.complement_in(&bo_a)?;
    let e2 = bo_a.complement_in(&bo)?;
    let k = Subspace::sum_all(v.dim(), &[&i, &g1, &h1])?;
    let f = k.complement_in(&a.intersect(b)?)?;
    let ef = Subspace::sum_all(v.dim(), &[&e1, &e2, &f])?;
    let rest = v.orthogonal(&ef)?;
    let kprime = v.lagrangian_complement_in(&k, &rest)?;

    let mut qs: Vec<Vector> = i.basis_vectors();
    qs.extend(g1.basis_vectors());
    qs.extend(h1.basis_vectors());
    let ps = v.dual_basis(&qs, &kprime)?;
    let (ni, ng) = (i.dim(), g1.dim());
    let j = Subspace::span(&ps[..ni], v.dim());
    let g2 = Subspace::span(&ps[ni..ni + ng], v.dim());
    let h2 = Subspace::span(&ps[ni + ng..], v.dim());

    let d = ElementaryDecomposition {
        i,
        j,
        e1,
        e2,
        f,
        g1,
        g2,
        h1,
        h2,
    };
    ensure(d.verify(pair), "elementary decomposition failed its checks")?;
    Ok(d)
}

/// The model pair in `standard(n1) ⊕ … ⊕ standard(n5)`:
/// `A0 = Q ⊕ Q ⊕ V3 ⊕ Q ⊕ V5`, `B0 = Q ⊕ P ⊕ V3 ⊕ V4 ⊕ Q`.
pub fn normal_form_pair(n: &ElementaryInvariants) -> CoisoPair {
    let total: usize = n.0.iter().sum();
    let dim = 2 * total;
    let space = n.0[1..]
        .iter()
        .fold(standard_space(n.0[0]), |acc, &ni| acc.dsum(&standard_space(ni)));
    // per block: Q, P or all of it
    let shape_a = ['q', 'q', 'v', 'q', 'v'];
    let shape_b = ['q', 'p', 'v', 'v', 'q'];
    let build = |shape: &[char; 5]| {
        let mut gens = Vec::new();
        let mut offset = 0;
        for (blk, &ni) in n.0.iter().enumerate() {
            let range = match shape[blk] {
                'q' => offset..offset + ni,
                'p' => offset + ni..offset + 2 * ni,
                _ => offset..offset + 2 * ni,
            };
            gens.extend(range.map(|c| crate::linalg::unit_vector(dim, c)));
            offset += 2 * ni;
        }
        Subspace::span(&gens, dim)
    };
    let a = build(&shape_a);
    let b = build(&shape_b);
    CoisoPair { space, a, b }
}

/// Ordered basis adapted to the decomposition: for each of the blocks
/// `D, E, G, H` the lagrangian basis of the first half followed by its dual
/// in the second half; for `F` a Darboux basis.
fn adapted_basis(pair: &CoisoPair, d: &ElementaryDecomposition) -> Result<Vec<Vector>> {
    let v = &pair.space;
    let mut out = Vec::with_capacity(v.dim());
    let mut push_split = |l1: &Subspace, l2: &Subspace| -> Result<()> {
        let qs = l1.basis_vectors();
        let ps = v.dual_basis(&qs, l2)?;
        out.extend(SympBasis::from_parts(qs, ps).vectors().iter().cloned());
        Ok(())
    };
    push_split(&d.i, &d.j)?;
    push_split(&d.e1, &d.e2)?;
    push_split(&d.g1, &d.g2)?;
    push_split(&d.h1, &d.h2)?;
    let fb = v.darboux_basis_of(&d.f)?;
    out.extend(fb.vectors().iter().cloned());
    Ok(out)
}

/// A symplectomorphism `S` with `S(A) = Â` and `S(B) = B̂`, assembled block
/// by block and verified before it is returned.
pub fn build_equivalence(p: &CoisoPair, q: &CoisoPair) -> Result<SympMap> {
    check_dim(p.space.dim(), q.space.dim())?;
    if canonical_invariants(p)? != canonical_invariants(q)? {
        return Err(Error::Inequivalent);
    }
    let dp = elementary_decomposition(p)?;
    let dq = elementary_decomposition(q)?;
    let bp = Mat::from_columns(&adapted_basis(p, &dp)?, p.space.dim());
    let bq = Mat::from_columns(&adapted_basis(q, &dq)?, q.space.dim());
    let inv = bp
        .inverse()
        .ok_or_else(|| Error::Internal("adapted basis is not a basis".into()))?;
    let s = SympMap::new(p.space.clone(), q.space.clone(), bq.mul(&inv))
        .map_err(|_| Error::Internal("assembled map is not symplectic".into()))?;
    ensure(
        s.image(&p.a)? == q.a && s.image(&p.b)? == q.b,
        "assembled map does not carry the pair",
    )?;
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryType {
    Lambda,
    Delta,
    Sigma,
    MuB,
    MuA,
}

impl ElementaryType {
    pub fn name(self) -> &'static str {
        match self {
            ElementaryType::Lambda => "lambda",
            ElementaryType::Delta => "delta",
            ElementaryType::Sigma => "sigma",
            ElementaryType::MuB => "mu_B",
            ElementaryType::MuA => "mu_A",
        }
    }
}

/// The elementary type of the pair by the defining conditions, checked in
/// the order `λ, δ, σ, μ_B, μ_A`.
pub fn is_elementary_type(pair: &CoisoPair) -> Option<ElementaryType> {
    let v = &pair.space;
    let (a, b) = (&pair.a, &pair.b);
    let lag_a = v.is_lagrangian(a);
    let lag_b = v.is_lagrangian(b);
    if lag_a && a == b {
        Some(ElementaryType::Lambda)
    } else if lag_a && lag_b && a.intersect(b).is_ok_and(|m| m.is_zero()) {
        Some(ElementaryType::Delta)
    } else if a.is_full() && b.is_full() {
        Some(ElementaryType::Sigma)
    } else if b.is_full() && lag_a {
        Some(ElementaryType::MuB)
    } else if a.is_full() && lag_b {
        Some(ElementaryType::MuA)
    } else {
        None
    }
}
