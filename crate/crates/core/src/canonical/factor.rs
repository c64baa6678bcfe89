use crate::error::{ensure, Error, Result};
use crate::linalg::{Mat, Scalar, Subspace, Vector};
use crate::symplectic::{Reduction, SympMap, SympSpace};

use super::{compose_canonical, reduction_relation, split, CanonicalRelation};

/// `L = R_Bᵗ ∘ [L] ∘ R_A` with `A = dom L`, `B = ran L`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub a: Subspace,
    pub b: Subspace,
    pub rho_a: Reduction,
    pub rho_b: Reduction,
    /// `[L] : A/A^ω → B/B^ω` in reduced coordinates.
    pub induced: SympMap,
}

impl Factorization {
    pub fn reduced_a(&self) -> &SympSpace {
        &self.rho_a.reduced
    }

    pub fn reduced_b(&self) -> &SympSpace {
        &self.rho_b.reduced
    }

    /// `converse(R_B) ∘ graph([L]) ∘ R_A`.
    pub fn recompose(&self) -> Result<CanonicalRelation> {
        let ra = reduction_relation(&self.rho_a.source, &self.a)?;
        let rb = reduction_relation(&self.rho_b.source, &self.b)?;
        let middle = CanonicalRelation::from_symplectomorphism(&self.induced);
        compose_canonical(&rb.converse(), &compose_canonical(&middle, &ra)?)
    }
}

pub fn factorize(l: &CanonicalRelation) -> Result<Factorization> {
    let (x, y) = (l.source(), l.target());
    let c = l.rel().corners();
    ensure(x.is_coisotropic(&c.dom) && y.is_coisotropic(&c.ran), "domain or range not coisotropic")?;
    ensure(
        x.orthogonal(&c.dom)? == c.ker && y.orthogonal(&c.ran)? == c.hal,
        "kernel or halo is not the orthogonal of domain or range",
    )?;
    let rho_a = x.reduce(&c.dom)?;
    let rho_b = y.reduce(&c.ran)?;
    let cols: Vec<Vector> = rho_a
        .complement
        .basis_vectors()
        .iter()
        .map(|v| {
            let w = l
                .some_image(v)
                .ok_or_else(|| Error::Internal("domain vector without image".into()))?;
            rho_b.project(&w)
        })
        .collect::<Result<_>>()?;
    let m = Mat::from_columns(&cols, rho_b.reduced.dim());
    let induced = SympMap::new(rho_a.reduced.clone(), rho_b.reduced.clone(), m)
        .map_err(|_| Error::Internal("induced map is not symplectic".into()))?;
    let f = Factorization {
        a: c.dom,
        b: c.ran,
        rho_a,
        rho_b,
        induced,
    };
    ensure(f.recompose()?.rel() == l.rel(), "factorization does not recompose")?;
    Ok(f)
}

/// `φ_L : A1 → B1`, in the coordinates of the canonical bases of `A1` and
/// `B1`.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub a1: Subspace,
    pub b1: Subspace,
    pub map: SympMap,
}

impl InducedMap {
    /// `φ_L(v)` for `v ∈ A1`, as an ambient vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        let c = self.a1.coordinates(v).ok_or(Error::NotContained)?;
        let w = self.map.apply(&c);
        Ok(self.b1.basis().transpose().mul_vec(&w))
    }
}

fn is_complement(space: &SympSpace, part: &Subspace, radical: &Subspace, whole: &Subspace) -> bool {
    part.is_subspace_of(whole)
        && Subspace::independent(&[radical, part])
        && radical.dim() + part.dim() == whole.dim()
        && space.is_symplectic_subspace(part)
}

/// The `B1`-component of any image of `v` under `L`.
pub(crate) fn phi_apply(l: &CanonicalRelation, hal: &Subspace, b1: &Subspace, v: &[Scalar]) -> Result<Vector> {
    let w = l
        .some_image(v)
        .ok_or_else(|| Error::InvalidArgument("vector outside the domain".into()))?;
    let (_, w1) = split(&w, hal, b1).ok_or_else(|| Error::Internal("image outside the range".into()))?;
    Ok(w1)
}

/// The map `φ_L` for the decompositions `A = A^ω ⊕ A1`, `B = B^ω ⊕ B1`.
pub fn induced_phi(l: &CanonicalRelation, a1: &Subspace, b1: &Subspace) -> Result<InducedMap> {
    let (x, y) = (l.source(), l.target());
    let c = l.rel().corners();
    if !is_complement(x, a1, &c.ker, &c.dom) || !is_complement(y, b1, &c.hal, &c.ran) {
        return Err(Error::InvalidArgument("invalid symplectic complements".into()));
    }
    let cols: Vec<Vector> = a1
        .basis_vectors()
        .iter()
        .map(|v| {
            let w1 = phi_apply(l, &c.hal, b1, v)?;
            b1.coordinates(&w1)
                .ok_or_else(|| Error::Internal("component outside B1".into()))
        })
        .collect::<Result<_>>()?;
    let map = SympMap::new(x.restrict(a1)?, y.restrict(b1)?, Mat::from_columns(&cols, b1.dim()))
        .map_err(|_| Error::Internal("induced map is not symplectic".into()))?;
    Ok(InducedMap {
        a1: a1.clone(),
        b1: b1.clone(),
        map,
    })
}

/// Whether `(v, u) ∈ L ⇔ (Sv, Su) ∈ L̂`.
pub fn is_equivalence(s: &SympMap, l: &CanonicalRelation, lh: &CanonicalRelation) -> bool {
    l.is_endo()
        && lh.is_endo()
        && s.source() == l.source()
        && s.target() == lh.source()
        && l.rel().conjugate(s.matrix()).is_ok_and(|r| r == *lh.rel())
}

/// The two-part criterion: `S(A^ω) = Â^ω`, `S(B^ω) = B̂^ω`, and
/// `φ_L̂ ∘ S = S ∘ φ_L` on `A1`, with `φ_L̂` taken for `S(A1)`, `S(B1)`.
pub fn equivalence_by_parts(
    s: &SympMap,
    l: &CanonicalRelation,
    lh: &CanonicalRelation,
    a1: &Subspace,
    b1: &Subspace,
) -> Result<bool> {
    let phi = induced_phi(l, a1, b1)?;
    if !l.is_endo() || !lh.is_endo() || s.source() != l.source() || s.target() != lh.source() {
        return Ok(false);
    }
    let c = l.rel().corners();
    let ch = lh.rel().corners();
    if s.image(&c.ker)? != ch.ker || s.image(&c.hal)? != ch.hal {
        return Ok(false);
    }
    let sb1 = s.image(b1)?;
    for v in a1.basis_vectors() {
        let left = phi_apply(lh, &ch.hal, &sb1, &s.apply(&v))?;
        let right = s.apply(&phi.apply(&v)?);
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;
    use crate::relations::Relation;
    use crate::symplectic::standard_space;

    #[test]
    fn graph_factorizes_trivially() {
        let v = standard_space(1);
        let s = SympMap::new(v.clone(), v.clone(), Mat::from_i64(&[&[2, 1], &[1, 1]])).unwrap();
        let l = CanonicalRelation::from_symplectomorphism(&s);
        let f = factorize(&l).unwrap();
        assert!(f.a.is_full() && f.b.is_full());
        assert_eq!(f.induced.matrix(), s.matrix());
        let phi = induced_phi(&l, &Subspace::full(2), &Subspace::full(2)).unwrap();
        assert_eq!(phi.map.matrix(), s.matrix());
    }

    #[test]
    fn lambda_sum_factorizes_through_zero() {
        let v = standard_space(1);
        let lag = Subspace::span(&[ivec(&[1, 0])], 2);
        let l = CanonicalRelation::endo(v, Relation::product(&lag, &lag)).unwrap();
        let f = factorize(&l).unwrap();
        assert_eq!((&f.a, &f.b), (&lag, &lag));
        assert_eq!(f.reduced_a().dim(), 0);
        let phi = induced_phi(&l, &Subspace::zero(2), &Subspace::zero(2)).unwrap();
        assert_eq!(phi.map.matrix().rows(), 0);
        assert!(induced_phi(&l, &lag, &lag).is_err());
    }

    #[test]
    fn identity_is_an_equivalence_both_ways() {
        let v = standard_space(1);
        let l = CanonicalRelation::from_symplectomorphism(&SympMap::identity(&v));
        let s = SympMap::identity(&v);
        assert!(is_equivalence(&s, &l, &l));
        let full = Subspace::full(2);
        assert!(equivalence_by_parts(&s, &l, &l, &full, &full).unwrap());
        let lag = Subspace::span(&[ivec(&[1, 0])], 2);
        let lam = CanonicalRelation::endo(v, Relation::product(&lag, &lag)).unwrap();
        assert!(!is_equivalence(&s, &l, &lam));
        assert!(!equivalence_by_parts(&s, &l, &lam, &full, &full).unwrap());
    }
}
