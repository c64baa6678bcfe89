use crate::coisotropic::{
    build_equivalence, canonical_invariants, elementary_decomposition, CanonicalInvariants, CoisoPair,
    ElementaryDecomposition,
};
use crate::error::{check_dim, ensure, Error, Result};
use crate::linalg::poly::invariant_factors;
use crate::linalg::{Mat, Poly, Scalar, Subspace, Vector};
use crate::relations::{towber_signature, TowberSignature};
use crate::symplectic::{SympMap, SympSpace};

use super::factor::{induced_phi, is_equivalence, phi_apply};
use super::CanonicalRelation;

/// `(dim, sp_rank)` of `φ_L(S_i) ∩ T_j` for the flags `S1 = H1 ⊆ S2 = F ⊕ H1`
/// in `A1` and `T1 = G1 ⊆ T2 = F ⊕ G1` in `B1`.
pub type Profile = [[(usize, usize); 2]; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    CanonicalInvariants,
    IntersectionProfile,
    /// Similarity class of `φ_L|_F`; an invariant when `G = H = 0`.
    InvariantFactors,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::CanonicalInvariants => "canonical_invariants",
            WitnessKind::IntersectionProfile => "intersection_profile",
            WitnessKind::InvariantFactors => "invariant_factors",
        }
    }

    pub fn evaluate(self, l: &CanonicalRelation) -> Result<WitnessValue> {
        let side = Side::analyze(l)?;
        Ok(match self {
            WitnessKind::CanonicalInvariants => WitnessValue::Invariants(side.k),
            WitnessKind::IntersectionProfile => WitnessValue::Profile(side.profile()?),
            WitnessKind::InvariantFactors => WitnessValue::Factors(invariant_factors(&side.blocks()?[0])),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessValue {
    Invariants(CanonicalInvariants),
    Profile(Profile),
    Factors(Vec<Poly>),
}

/// An invariant that takes different values on the two relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub left: WitnessValue,
    pub right: WitnessValue,
}

/// The data of an instance that no implemented test settles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedProblem {
    pub f: Subspace,
    pub g: Subspace,
    pub h: Subspace,
    pub f_hat: Subspace,
    pub g_hat: Subspace,
    pub h_hat: Subspace,
    /// `φ_L : F ⊕ H → F ⊕ G` in the bases `(F, H1, H2)` and `(F, G1, G2)`.
    pub phi: SympMap,
    pub phi_hat: SympMap,
    /// `[M1, M2, M3, M4]`: the `F→F`, `H→F`, `F→G`, `H→G` blocks of `phi`.
    pub blocks: [Mat; 4],
    pub blocks_hat: [Mat; 4],
    pub towber: TowberSignature,
    pub towber_hat: TowberSignature,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent(SympMap),
    Inequivalent(Witness),
    Undecided(Box<ReducedProblem>),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Equivalent(_) => "equivalent",
            Verdict::Inequivalent(_) => "inequivalent",
            Verdict::Undecided(_) => "undecided",
        }
    }
}

pub(super) struct Side<'a> {
    pub(super) l: &'a CanonicalRelation,
    pub(super) k: CanonicalInvariants,
    pub(super) d: ElementaryDecomposition,
    hal: Subspace,
}

impl<'a> Side<'a> {
    pub(super) fn analyze(l: &'a CanonicalRelation) -> Result<Self> {
        if !l.is_endo() {
            return Err(Error::InvalidArgument("equivalence is defined for endo-relations".into()));
        }
        let c = l.rel().corners();
        let pair = CoisoPair::new(l.source().clone(), c.dom, c.ran)?;
        let k = canonical_invariants(&pair)?;
        let d = elementary_decomposition(&pair)?;
        Ok(Side { l, k, d, hal: c.hal })
    }

    fn space(&self) -> &SympSpace {
        self.l.source()
    }

    fn b1(&self) -> Result<Subspace> {
        self.d.f.sum(&self.d.g())
    }

    pub(super) fn phi(&self, v: &[Scalar]) -> Result<Vector> {
        phi_apply(self.l, &self.hal, &self.b1()?, v)
    }

    fn profile(&self) -> Result<Profile> {
        let v = self.space();
        let d = &self.d;
        let image = |s: &Subspace| -> Result<Subspace> {
            let imgs = s.basis_vectors().iter().map(|x| self.phi(x)).collect::<Result<Vec<_>>>()?;
            Ok(Subspace::span(&imgs, v.dim()))
        };
        let sources = [image(&d.h1)?, image(&d.f.sum(&d.h1)?)?];
        let targets = [d.g1.clone(), d.f.sum(&d.g1)?];
        let mut out = [[(0, 0); 2]; 2];
        for (i, s) in sources.iter().enumerate() {
            for (j, t) in targets.iter().enumerate() {
                let m = s.intersect(t)?;
                out[i][j] = (m.dim(), v.sp_rank(&m)?);
            }
        }
        Ok(out)
    }

    pub(super) fn source_basis(&self) -> Vec<Vector> {
        let d = &self.d;
        [&d.f, &d.h1, &d.h2].iter().flat_map(|s| s.basis_vectors()).collect()
    }

    pub(super) fn target_basis(&self) -> Vec<Vector> {
        let d = &self.d;
        [&d.f, &d.g1, &d.g2].iter().flat_map(|s| s.basis_vectors()).collect()
    }

    pub(super) fn phi_map(&self) -> Result<SympMap> {
        let v = self.space();
        let (sb, tb) = (self.source_basis(), self.target_basis());
        let tmat = Mat::from_columns(&tb, v.dim());
        let cols = sb
            .iter()
            .map(|x| {
                let w = self.phi(x)?;
                tmat.solve(&w)
                    .ok_or_else(|| Error::Internal("image outside F ⊕ G".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let source = SympSpace::new(v.gram(&sb, &sb))?;
        let target = SympSpace::new(v.gram(&tb, &tb))?;
        SympMap::new(source, target, Mat::from_columns(&cols, tb.len()))
            .map_err(|_| Error::Internal("induced map is not symplectic".into()))
    }

    fn blocks(&self) -> Result<[Mat; 4]> {
        Ok(split_blocks(self.phi_map()?.matrix(), self.d.f.dim()))
    }
}

fn split_blocks(m: &Mat, f: usize) -> [Mat; 4] {
    let g = m.rows() - f;
    let h = m.cols() - f;
    [
        m.submatrix(0, 0, f, f),
        m.submatrix(0, f, f, h),
        m.submatrix(f, 0, g, f),
        m.submatrix(f, f, g, h),
    ]
}

/// The intersection profile of the induced map; an equivalence invariant.
pub fn intersection_profile(l: &CanonicalRelation) -> Result<Profile> {
    Side::analyze(l)?.profile()
}

fn witness(kind: WitnessKind, left: WitnessValue, right: WitnessValue) -> Verdict {
    Verdict::Inequivalent(Witness { kind, left, right })
}

pub fn decide_equivalence(l: &CanonicalRelation, lh: &CanonicalRelation) -> Result<Verdict> {
    check_dim(l.source().dim(), lh.source().dim())?;
    let p = Side::analyze(l)?;
    let q = Side::analyze(lh)?;
    if l == lh {
        return Ok(Verdict::Equivalent(SympMap::identity(l.source())));
    }
    if p.k != q.k {
        return Ok(witness(
            WitnessKind::CanonicalInvariants,
            WitnessValue::Invariants(p.k),
            WitnessValue::Invariants(q.k),
        ));
    }
    let (pp, qp) = (p.profile()?, q.profile()?);
    if pp != qp {
        return Ok(witness(
            WitnessKind::IntersectionProfile,
            WitnessValue::Profile(pp),
            WitnessValue::Profile(qp),
        ));
    }
    if p.d.f.is_zero() {
        return Ok(Verdict::Equivalent(construct_without_f(&p, &q)?));
    }
    let (bp, bq) = (p.blocks()?, q.blocks()?);
    if p.d.g1.is_zero() && p.d.h1.is_zero() {
        let (fp, fq) = (invariant_factors(&bp[0]), invariant_factors(&bq[0]));
        if fp != fq {
            return Ok(witness(
                WitnessKind::InvariantFactors,
                WitnessValue::Factors(fp),
                WitnessValue::Factors(fq),
            ));
        }
    }
    Ok(Verdict::Undecided(Box::new(ReducedProblem {
        f: p.d.f.clone(),
        g: p.d.g(),
        h: p.d.h(),
        f_hat: q.d.f.clone(),
        g_hat: q.d.g(),
        h_hat: q.d.h(),
        phi: p.phi_map()?,
        phi_hat: q.phi_map()?,
        blocks: bp,
        blocks_hat: bq,
        towber: towber_signature(l.rel())?,
        towber_hat: towber_signature(lh.rel())?,
    })))
}

/// Images of `(I, J)` or `(E1, E2)` under the splitting-preserving map: the
/// canonical basis of the first part and its dual in the second.
fn splitting_basis(v: &SympSpace, l1: &Subspace, l2: &Subspace) -> Result<Vec<Vector>> {
    let qs = l1.basis_vectors();
    let mut ps = v.dual_basis(&qs, l2)?;
    let mut out = qs;
    out.append(&mut ps);
    Ok(out)
}

fn combine(basis: &Subspace, coords: &[Scalar]) -> Vector {
    basis.basis().transpose().mul_vec(coords)
}

/// The case `F = 0`: `S = S_D ⊕ S_E ⊕ S_G ⊕ S_H` where `S_H` carries the
/// lagrangian pair `(H1, φ⁻¹G1)` onto `(Ĥ1, φ̂⁻¹Ĝ1)` and `S_G = φ̂ S_H φ⁻¹`.
fn construct_without_f(p: &Side, q: &Side) -> Result<SympMap> {
    let v = p.space();
    let vh = q.space();
    let (dp, dq) = (&p.d, &q.d);
    let (h, g, hh, gh) = (dp.h(), dp.g(), dq.h(), dq.g());
    let phi = induced_phi(p.l, &h, &g)?;
    let phih = induced_phi(q.l, &hh, &gh)?;

    let pair = CoisoPair::new(
        phi.map.source().clone(),
        coords_in(&dp.h1, &h),
        coords_in(&dp.g1, &g).preimage(phi.map.matrix())?,
    )?;
    let pair_h = CoisoPair::new(
        phih.map.source().clone(),
        coords_in(&dq.h1, &hh),
        coords_in(&dq.g1, &gh).preimage(phih.map.matrix())?,
    )?;
    let s5 = build_equivalence(&pair, &pair_h)?;
    let phi_inv = phi
        .map
        .matrix()
        .inverse()
        .ok_or_else(|| Error::Internal("induced map is not invertible".into()))?;
    let s4 = phih.map.matrix().mul(&s5.matrix().mul(&phi_inv));

    let mut basis = splitting_basis(v, &dp.i, &dp.j)?;
    let mut images = splitting_basis(vh, &dq.i, &dq.j)?;
    basis.extend(splitting_basis(v, &dp.e1, &dp.e2)?);
    images.extend(splitting_basis(vh, &dq.e1, &dq.e2)?);
    for (sub, sub_h, m) in [(&h, &hh, s5.matrix()), (&g, &gh, &s4)] {
        for (j, b) in sub.basis_vectors().into_iter().enumerate() {
            basis.push(b);
            images.push(combine(sub_h, &m.column(j)));
        }
    }
    let bm = Mat::from_columns(&basis, v.dim());
    let im = Mat::from_columns(&images, vh.dim());
    let inv = bm
        .inverse()
        .ok_or_else(|| Error::Internal("block basis is not a basis".into()))?;
    let s = SympMap::new(v.clone(), vh.clone(), im.mul(&inv))
        .map_err(|_| Error::Internal("assembled map is not symplectic".into()))?;
    ensure(is_equivalence(&s, p.l, q.l), "assembled map is not an equivalence")?;
    Ok(s)
}

/// `s ⊆ outer` in the coordinates of the canonical basis of `outer`.
fn coords_in(s: &Subspace, outer: &Subspace) -> Subspace {
    let cs: Vec<Vector> = s
        .basis_vectors()
        .iter()
        .map(|x| outer.coordinates(x).expect("nested subspace"))
        .collect();
    Subspace::span(&cs, outer.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;
    use crate::relations::Relation;
    use crate::symplectic::standard_space;

    fn lambda_sum(v: &SympSpace, lag: &Subspace) -> CanonicalRelation {
        CanonicalRelation::endo(v.clone(), Relation::product(lag, lag)).unwrap()
    }

    #[test]
    fn identity_against_itself_and_lambda() {
        let v = standard_space(1);
        let id = CanonicalRelation::from_symplectomorphism(&SympMap::identity(&v));
        assert_eq!(
            decide_equivalence(&id, &id).unwrap(),
            Verdict::Equivalent(SympMap::identity(&v))
        );
        let lam = lambda_sum(&v, &Subspace::span(&[ivec(&[1, 0])], 2));
        match decide_equivalence(&id, &lam).unwrap() {
            Verdict::Inequivalent(w) => assert_eq!(w.kind, WitnessKind::CanonicalInvariants),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lambda_sums_are_equivalent_by_construction() {
        let v = standard_space(2);
        let l = lambda_sum(&v, &Subspace::span(&[ivec(&[1, 0, 0, 0]), ivec(&[0, 1, 0, 0])], 4));
        let lh = lambda_sum(&v, &Subspace::span(&[ivec(&[1, 0, 1, 0]), ivec(&[0, 0, 0, 1])], 4));
        match decide_equivalence(&l, &lh).unwrap() {
            Verdict::Equivalent(s) => assert!(is_equivalence(&s, &l, &lh)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn similarity_class_separates_graphs() {
        let v = standard_space(1);
        let shear = SympMap::new(v.clone(), v.clone(), Mat::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
        let l = CanonicalRelation::from_symplectomorphism(&shear);
        let id = CanonicalRelation::from_symplectomorphism(&SympMap::identity(&v));
        match decide_equivalence(&l, &id).unwrap() {
            Verdict::Inequivalent(w) => assert_eq!(w.kind, WitnessKind::InvariantFactors),
            other => panic!("unexpected {other:?}"),
        }
        let other = SympMap::new(v.clone(), v.clone(), Mat::from_i64(&[&[1, 0], &[-1, 1]])).unwrap();
        let lh = CanonicalRelation::from_symplectomorphism(&other);
        match decide_equivalence(&l, &lh).unwrap() {
            Verdict::Undecided(p) => {
                assert_eq!(p.blocks[0], *shear.matrix());
                assert_eq!(p.towber.nonsingular_part, p.towber_hat.nonsingular_part);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_endo_relations_are_rejected() {
        let v = standard_space(1);
        let r = crate::canonical::reduction_relation(&v, &Subspace::span(&[ivec(&[1, 0])], 2)).unwrap();
        assert!(decide_equivalence(&r, &r).is_err());
    }
}
