//! Symplectic vector spaces over the rationals: orthogonals, subspace
//! classes, Darboux bases, lagrangian splittings, reduction and the
//! Witt–Artin decomposition.

use num_traits::{One, Zero};

use crate::error::{check_dim, ensure, Error, Result};
use crate::linalg::{axpy, dot, scale, sub, unit_vector, zero_vector, Echelon, Mat, Scalar, Subspace, Vector};

/// A finite-dimensional space with a nondegenerate antisymmetric form,
/// `ω(u, v) = uᵀ · form · v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SympSpace {
    form: Mat,
}

/// The five classes reported by [`SympSpace::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceClass {
    Symplectic,
    Isotropic,
    Coisotropic,
    Lagrangian,
    Generic,
}

impl SubspaceClass {
    pub fn name(self) -> &'static str {
        match self {
            SubspaceClass::Symplectic => "symplectic",
            SubspaceClass::Isotropic => "isotropic",
            SubspaceClass::Coisotropic => "coisotropic",
            SubspaceClass::Lagrangian => "lagrangian",
            SubspaceClass::Generic => "generic",
        }
    }
}

/// `ℚ^{2n}` with the form `[[0, I], [-I, 0]]`.
pub fn standard_space(n: usize) -> SympSpace {
    SympSpace::standard(n)
}

/// Block-diagonal sum of two symplectic spaces.
pub fn dsum(a: &SympSpace, b: &SympSpace) -> SympSpace {
    a.dsum(b)
}

impl SympSpace {
    /// Validates `form` as antisymmetric and nondegenerate.
    pub fn new(form: Mat) -> Result<Self> {
        if !form.is_antisymmetric() || form.rank() != form.rows() {
            return Err(Error::NotSymplecticForm);
        }
        Ok(SympSpace { form })
    }

    pub fn standard(n: usize) -> Self {
        let mut form = Mat::zeros(2 * n, 2 * n);
        for i in 0..n {
            form[(i, n + i)] = Scalar::one();
            form[(n + i, i)] = -Scalar::one();
        }
        SympSpace { form }
    }

    pub fn dim(&self) -> usize {
        self.form.rows()
    }

    pub fn half_dim(&self) -> usize {
        self.dim() / 2
    }

    pub fn form(&self) -> &Mat {
        &self.form
    }

    /// The same space with the negated form.
    pub fn minus(&self) -> Self {
        SympSpace {
            form: self.form.neg(),
        }
    }

    pub fn dsum(&self, other: &SympSpace) -> Self {
        SympSpace {
            form: Mat::block_diag(&[&self.form, &other.form]),
        }
    }

    pub fn omega(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        dot(u, &self.form.mul_vec(v))
    }

    /// Gram matrix `G_ij = ω(a_i, b_j)`.
    pub fn gram(&self, a: &[Vector], b: &[Vector]) -> Mat {
        let fb: Vec<Vector> = b.iter().map(|v| self.form.mul_vec(v)).collect();
        let mut g = Mat::zeros(a.len(), b.len());
        for (i, u) in a.iter().enumerate() {
            for (j, w) in fb.iter().enumerate() {
                g[(i, j)] = dot(u, w);
            }
        }
        g
    }

    fn check(&self, w: &Subspace) -> Result<()> {
        check_dim(self.dim(), w.ambient())
    }

    /// `W^ω = {v : ω(w, v) = 0 for all w ∈ W}`.
    pub fn orthogonal(&self, w: &Subspace) -> Result<Subspace> {
        self.check(w)?;
        Ok(Subspace::kernel(&w.basis().mul(&self.form)))
    }

    /// Whether every pair from `a × b` pairs to zero.
    pub fn orthogonal_pair(&self, a: &Subspace, b: &Subspace) -> bool {
        self.gram(&a.basis_vectors(), &b.basis_vectors()).is_zero()
    }

    pub fn sp_rank(&self, w: &Subspace) -> Result<usize> {
        let radical = w.intersect(&self.orthogonal(w)?)?;
        Ok(w.dim() - radical.dim())
    }

    /// Class of `W`; lagrangian takes precedence, then symplectic, then
    /// isotropic, then coisotropic.
    pub fn classify(&self, w: &Subspace) -> Result<SubspaceClass> {
        let wo = self.orthogonal(w)?;
        let class = if wo == *w {
            SubspaceClass::Lagrangian
        } else if !w.is_zero() && w.intersect(&wo)?.is_zero() {
            SubspaceClass::Symplectic
        } else if w.is_subspace_of(&wo) {
            SubspaceClass::Isotropic
        } else if wo.is_subspace_of(w) {
            SubspaceClass::Coisotropic
        } else {
            SubspaceClass::Generic
        };
        Ok(class)
    }

    pub fn is_isotropic(&self, w: &Subspace) -> bool {
        w.ambient() == self.dim() && self.orthogonal_pair(w, w)
    }

    pub fn is_coisotropic(&self, w: &Subspace) -> bool {
        self.orthogonal(w).is_ok_and(|wo| wo.is_subspace_of(w))
    }

    pub fn is_lagrangian(&self, w: &Subspace) -> bool {
        2 * w.dim() == self.dim() && self.is_isotropic(w)
    }

    /// Whether the restricted form on `W` is nondegenerate.
    pub fn is_symplectic_subspace(&self, w: &Subspace) -> bool {
        w.ambient() == self.dim() && {
            let b = w.basis_vectors();
            self.gram(&b, &b).rank() == w.dim()
        }
    }

    /// Whether `L` is lagrangian inside the symplectic subspace `U`.
    pub fn is_lagrangian_in(&self, l: &Subspace, u: &Subspace) -> bool {
        l.is_subspace_of(u) && 2 * l.dim() == u.dim() && self.is_isotropic(l)
    }

    /// The form restricted to a symplectic subspace, in the coordinates of
    /// its canonical basis.
    pub fn restrict(&self, w: &Subspace) -> Result<SympSpace> {
        self.check(w)?;
        let b = w.basis_vectors();
        SympSpace::new(self.gram(&b, &b))
    }

    /// Symplectic projection onto `span(E)` along `E^ω` for a partial
    /// symplectic basis `E = (q_j, p_j)`.
    fn project_onto(&self, v: &[Scalar], pairs: &[(Vector, Vector)]) -> Vector {
        let mut out = zero_vector(v.len());
        for (q, p) in pairs {
            axpy(&mut out, &self.omega(v, p), q);
            axpy(&mut out, &-self.omega(v, q), p);
        }
        out
    }

    /// Darboux basis of the whole space.
    pub fn darboux_basis(&self) -> SympBasis {
        let candidates: Vec<Vector> = (0..self.dim()).map(|i| unit_vector(self.dim(), i)).collect();
        self.darboux_from(&candidates)
            .expect("nondegenerate form always admits a symplectic basis")
    }

    /// Darboux basis of a symplectic subspace, built from its canonical
    /// basis rows.
    pub fn darboux_basis_of(&self, w: &Subspace) -> Result<SympBasis> {
        self.check(w)?;
        if !self.is_symplectic_subspace(w) {
            return Err(Error::InvalidArgument("subspace is not symplectic".into()));
        }
        self.darboux_from(&w.basis_vectors())
    }

    fn darboux_from(&self, candidates: &[Vector]) -> Result<SympBasis> {
        let mut pairs: Vec<(Vector, Vector)> = Vec::new();
        let mut seen = Echelon::new(self.dim());
        while 2 * pairs.len() < candidates.len() {
            let c = candidates
                .iter()
                .find(|c| !seen.contains(c))
                .ok_or_else(|| Error::Internal("darboux: candidates exhausted".into()))?;
            let q = sub(c, &self.project_onto(c, &pairs));
            let (p, w) = candidates
                .iter()
                .find_map(|c| {
                    let p = sub(c, &self.project_onto(c, &pairs));
                    let w = self.omega(&q, &p);
                    (!w.is_zero()).then_some((p, w))
                })
                .ok_or(Error::NotSymplecticForm)?;
            let p = scale(&p, &w.recip());
            seen.insert(&q);
            seen.insert(&p);
            pairs.push((q, p));
        }
        let (qs, ps): (Vec<Vector>, Vec<Vector>) = pairs.into_iter().unzip();
        Ok(SympBasis::from_parts(qs, ps))
    }

    /// Requires `L` lagrangian in the symplectic subspace `U`; returns a
    /// basis `(q, p)` of `U` with `q` the canonical basis of `L` and
    /// `span(p)` lagrangian.
    pub fn extend_lagrangian_basis_in(&self, l: &Subspace, u: &Subspace) -> Result<SympBasis> {
        self.check(l)?;
        self.check(u)?;
        if !self.is_lagrangian_in(l, u) || !self.is_symplectic_subspace(u) {
            return Err(Error::NotLagrangian);
        }
        let qs = l.basis_vectors();
        let ub = u.basis();
        let fu = self.form.mul(&ub.transpose());
        let mut ps: Vec<Vector> = Vec::new();
        for i in 0..qs.len() {
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for (j, q) in qs.iter().enumerate() {
                rows.push(fu.transpose().mul_vec(q));
                rhs.push(if i == j { Scalar::one() } else { Scalar::zero() });
            }
            for p in &ps {
                rows.push(fu.transpose().mul_vec(p));
                rhs.push(Scalar::zero());
            }
            let system = Mat::from_rows(rows, ub.rows());
            let y = system
                .solve(&rhs)
                .ok_or_else(|| Error::Internal("lagrangian complement system inconsistent".into()))?;
            ps.push(ub.transpose().mul_vec(&y));
        }
        Ok(SympBasis::from_parts(qs, ps))
    }

    pub fn extend_lagrangian_basis(&self, l: &Subspace) -> Result<SympBasis> {
        self.extend_lagrangian_basis_in(l, &Subspace::full(self.dim()))
    }

    /// A lagrangian complement of `L` inside the symplectic subspace `U`.
    pub fn lagrangian_complement_in(&self, l: &Subspace, u: &Subspace) -> Result<Subspace> {
        let b = self.extend_lagrangian_basis_in(l, u)?;
        Ok(Subspace::span(b.ps(), self.dim()))
    }

    pub fn lagrangian_complement(&self, l: &Subspace) -> Result<Subspace> {
        self.lagrangian_complement_in(l, &Subspace::full(self.dim()))
    }

    /// For isotropic, mutually transverse `span(q)` and `L2` of equal
    /// dimension, the unique basis `p` of `L2` with `ω(q_i, p_j) = δ_ij`.
    pub fn dual_basis(&self, qs: &[Vector], l2: &Subspace) -> Result<Vec<Vector>> {
        self.check(l2)?;
        let l1 = Subspace::span(qs, self.dim());
        if l1.dim() != qs.len() || l2.dim() != qs.len() {
            return Err(Error::NotSplitting);
        }
        if !self.is_isotropic(&l1) || !self.is_isotropic(l2) {
            return Err(Error::NotLagrangian);
        }
        let bs = l2.basis_vectors();
        let g = self.gram(qs, &bs);
        let ginv = g.inverse().ok_or(Error::NotSplitting)?;
        Ok((0..qs.len())
            .map(|j| {
                let mut p = zero_vector(self.dim());
                for (k, b) in bs.iter().enumerate() {
                    axpy(&mut p, &ginv[(k, j)], b);
                }
                p
            })
            .collect())
    }

    /// Dual basis for a lagrangian splitting `(span(q), L2)` of the whole
    /// space.
    pub fn dual_completion(&self, qs: &[Vector], l2: &Subspace) -> Result<Vec<Vector>> {
        if 2 * qs.len() != self.dim() {
            return Err(Error::NotSplitting);
        }
        self.dual_basis(qs, l2)
    }

    pub fn is_lagrangian_splitting(&self, l1: &Subspace, l2: &Subspace) -> bool {
        self.is_lagrangian(l1)
            && self.is_lagrangian(l2)
            && l1.intersect(l2).is_ok_and(|m| m.is_zero())
    }

    pub fn witt_artin(&self, w: &Subspace) -> Result<WittArtin> {
        let wo = self.orthogonal(w)?;
        let k = w.intersect(&wo)?;
        let e = k.complement_in(w)?;
        let f = k.complement_in(&wo)?;
        let ef = e.sum(&f)?;
        let efo = self.orthogonal(&ef)?;
        let kprime = self.lagrangian_complement_in(&k, &efo)?;
        let wa = WittArtin {
            w: w.clone(),
            e,
            f,
            k,
            kprime,
        };
        ensure(wa.verify(self), "Witt–Artin decomposition failed its checks")?;
        Ok(wa)
    }

    pub fn reduce(&self, w: &Subspace) -> Result<Reduction> {
        let wo = self.orthogonal(w)?;
        let radical = w.intersect(&wo)?;
        let complement = radical.complement_in(w)?;
        let reduced = self.restrict(&complement)?;
        let mut cols = complement.basis_vectors();
        cols.extend(radical.basis_vectors());
        let c = Mat::from_columns(&cols, self.dim());
        let ct = c.transpose();
        let left = ct
            .mul(&c)
            .inverse()
            .ok_or_else(|| Error::Internal("reduction basis not independent".into()))?
            .mul(&ct)
            .submatrix(0, 0, complement.dim(), self.dim());
        let rho = left.mul(&w.basis().transpose());
        Ok(Reduction {
            source: self.clone(),
            sub: w.clone(),
            radical,
            complement,
            reduced,
            left,
            rho,
        })
    }

    /// `ρ(L ∩ C)` inside the reduction by the coisotropic `C`.
    pub fn reduce_subspace(&self, c: &Subspace, l: &Subspace) -> Result<Subspace> {
        self.check(l)?;
        if !self.is_coisotropic(c) {
            return Err(Error::NotCoisotropic);
        }
        self.reduce(c)?.push_forward(l)
    }
}

/// An ordered basis `q_1..q_n, p_1..p_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SympBasis {
    vectors: Vec<Vector>,
}

impl SympBasis {
    pub fn from_parts(qs: Vec<Vector>, ps: Vec<Vector>) -> Self {
        assert_eq!(qs.len(), ps.len());
        let mut vectors = qs;
        vectors.extend(ps);
        SympBasis { vectors }
    }

    pub fn n(&self) -> usize {
        self.vectors.len() / 2
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn qs(&self) -> &[Vector] {
        &self.vectors[..self.n()]
    }

    pub fn ps(&self) -> &[Vector] {
        &self.vectors[self.n()..]
    }

    /// Basis vectors as the columns of a matrix with `rows` rows.
    pub fn to_columns(&self, rows: usize) -> Mat {
        Mat::from_columns(&self.vectors, rows)
    }

    /// `ω(q_i, p_j) = δ_ij` and all `q`–`q`, `p`–`p` pairings vanish.
    pub fn is_symplectic_in(&self, space: &SympSpace) -> bool {
        let n = self.n();
        let g = space.gram(&self.vectors, &self.vectors);
        (0..2 * n).all(|i| {
            (0..2 * n).all(|j| {
                let expected = if j == i + n {
                    Scalar::one()
                } else if i == j + n {
                    -Scalar::one()
                } else {
                    Scalar::zero()
                };
                g[(i, j)] == expected
            })
        })
    }
}

/// Exact check `Sᵀ · F_target · S = F_source` together with invertibility.
pub fn is_symplectic_map(source: &SympSpace, target: &SympSpace, m: &Mat) -> bool {
    m.rows() == target.dim()
        && m.cols() == source.dim()
        && m.is_square()
        && m.transpose().mul(target.form()).mul(m) == *source.form()
        && m.is_invertible()
}

/// A linear symplectomorphism between two symplectic spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SympMap {
    source: SympSpace,
    target: SympSpace,
    matrix: Mat,
}

impl SympMap {
    pub fn new(source: SympSpace, target: SympSpace, matrix: Mat) -> Result<Self> {
        if !is_symplectic_map(&source, &target, &matrix) {
            return Err(Error::InvalidArgument("matrix is not symplectic".into()));
        }
        Ok(SympMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(space: &SympSpace) -> Self {
        SympMap {
            source: space.clone(),
            target: space.clone(),
            matrix: Mat::identity(space.dim()),
        }
    }

    pub fn source(&self) -> &SympSpace {
        &self.source
    }

    pub fn target(&self) -> &SympSpace {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    pub fn image(&self, w: &Subspace) -> Result<Subspace> {
        w.image(&self.matrix)
    }

    pub fn inverse(&self) -> SympMap {
        SympMap {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: self.matrix.inverse().expect("symplectic maps are invertible"),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SympMap) -> Result<SympMap> {
        if other.target != self.source {
            return Err(Error::DimensionMismatch {
                expected: self.source.dim(),
                found: other.target.dim(),
            });
        }
        Ok(SympMap {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    pub fn direct_sum(&self, other: &SympMap) -> SympMap {
        SympMap {
            source: self.source.dsum(&other.source),
            target: self.target.dsum(&other.target),
            matrix: Mat::block_diag(&[&self.matrix, &other.matrix]),
        }
    }
}

/// A symplectomorphism carrying the splitting `(L1, L2)` of `V` onto the
/// splitting `(L̂1, L̂2)` of `V̂`.
pub fn map_lagrangian_splitting(
    v: &SympSpace,
    (l1, l2): (&Subspace, &Subspace),
    vh: &SympSpace,
    (lh1, lh2): (&Subspace, &Subspace),
) -> Result<SympMap> {
    check_dim(v.dim(), vh.dim())?;
    if !v.is_lagrangian_splitting(l1, l2) || !vh.is_lagrangian_splitting(lh1, lh2) {
        return Err(Error::NotSplitting);
    }
    let basis = |space: &SympSpace, a: &Subspace, b: &Subspace| -> Result<Mat> {
        let qs = a.basis_vectors();
        let ps = space.dual_completion(&qs, b)?;
        Ok(SympBasis::from_parts(qs, ps).to_columns(space.dim()))
    };
    let b = basis(v, l1, l2)?;
    let bh = basis(vh, lh1, lh2)?;
    let s = bh.mul(&b.inverse().ok_or(Error::NotSplitting)?);
    SympMap::new(v.clone(), vh.clone(), s)
}

/// The decomposition `V = E ⊕ F ⊕ (E ⊕ F)^ω` attached to a subspace `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittArtin {
    pub w: Subspace,
    pub e: Subspace,
    pub f: Subspace,
    pub k: Subspace,
    pub kprime: Subspace,
}

impl WittArtin {
    /// `(E ⊕ F)^ω`.
    pub fn rest(&self, space: &SympSpace) -> Subspace {
        let ef = self.e.sum(&self.f).expect("same ambient");
        space.orthogonal(&ef).expect("same ambient")
    }

    /// All structural predicates of the decomposition.
    pub fn verify(&self, space: &SympSpace) -> bool {
        let rest = self.rest(space);
        let Ok(wo) = space.orthogonal(&self.w) else {
            return false;
        };
        let sum_is = |a: &Subspace, b: &Subspace, target: &Subspace| {
            Subspace::independent(&[a, b]) && a.sum(b).is_ok_and(|s| s == *target)
        };
        space.is_symplectic_subspace(&self.e)
            && space.is_symplectic_subspace(&self.f)
            && space.orthogonal_pair(&self.e, &self.f)
            && space.orthogonal_pair(&self.e, &rest)
            && space.orthogonal_pair(&self.f, &rest)
            && Subspace::independent(&[&self.e, &self.f, &rest])
            && self.e.dim() + self.f.dim() + rest.dim() == space.dim()
            && space.is_lagrangian_in(&self.k, &rest)
            && space.is_lagrangian_in(&self.kprime, &rest)
            && sum_is(&self.k, &self.kprime, &rest)
            && sum_is(&self.e, &self.k, &self.w)
            && sum_is(&self.f, &self.k, &wo)
    }
}

/// The reduction `W / (W ∩ W^ω)`, coordinatized by the deterministic
/// complement of the radical in `W`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub source: SympSpace,
    pub sub: Subspace,
    pub radical: Subspace,
    pub complement: Subspace,
    pub reduced: SympSpace,
    left: Mat,
    /// Reduced coordinates of the canonical basis vectors of `sub`, as
    /// columns.
    pub rho: Mat,
}

impl Reduction {
    /// Reduced coordinates of `v ∈ W`.
    pub fn project(&self, v: &[Scalar]) -> Result<Vector> {
        if !self.sub.contains(v) {
            return Err(Error::NotContained);
        }
        Ok(self.left.mul_vec(v))
    }

    /// The representative in the coordinatizing complement.
    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        let mut v = zero_vector(self.source.dim());
        for (c, b) in coords.iter().zip(self.complement.basis_vectors()) {
            axpy(&mut v, c, &b);
        }
        v
    }

    /// `ρ(L ∩ W)`.
    pub fn push_forward(&self, l: &Subspace) -> Result<Subspace> {
        let meet = l.intersect(&self.sub)?;
        let images: Vec<Vector> = meet
            .basis_vectors()
            .iter()
            .map(|v| self.project(v))
            .collect::<Result<_>>()?;
        Ok(Subspace::span(&images, self.reduced.dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ivec, ratio};

    fn span(vs: &[&[i64]], n: usize) -> Subspace {
        let v: Vec<Vector> = vs.iter().map(|r| ivec(r)).collect();
        Subspace::span(&v, n)
    }

    #[test]
    fn standard_and_minus() {
        assert_eq!(standard_space(1).form(), &Mat::from_i64(&[&[0, 1], &[-1, 0]]));
        assert_eq!(standard_space(0).dim(), 0);
        let v = standard_space(2);
        assert_eq!(v.minus().minus(), v);
        assert_eq!(v.minus().form()[(0, 2)], int(-1));
        assert_eq!(v.dsum(&standard_space(1)).dim(), 6);
    }

    #[test]
    fn orthogonal_examples() {
        let v = standard_space(2);
        let q1 = span(&[&[1, 0, 0, 0]], 4);
        assert_eq!(
            v.orthogonal(&q1).unwrap(),
            span(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]], 4)
        );
        assert!(v.orthogonal(&Subspace::full(4)).unwrap().is_zero());
        let w = span(&[&[1, 0, 0, 0], &[0, 0, 1, 0]], 4);
        assert_eq!(v.orthogonal(&v.orthogonal(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn classify_examples() {
        let v = standard_space(2);
        let q1 = span(&[&[1, 0, 0, 0]], 4);
        assert_eq!(v.classify(&q1).unwrap(), SubspaceClass::Isotropic);
        assert_eq!(v.sp_rank(&q1).unwrap(), 0);
        let l = span(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], 4);
        assert_eq!(v.classify(&l).unwrap(), SubspaceClass::Lagrangian);
        let c = span(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]], 4);
        assert_eq!(v.classify(&c).unwrap(), SubspaceClass::Coisotropic);
        assert_eq!(v.sp_rank(&c).unwrap(), 2);
        let s = span(&[&[1, 0, 0, 0], &[0, 0, 1, 0]], 4);
        assert_eq!(v.classify(&s).unwrap(), SubspaceClass::Symplectic);
        let g = span(&[&[1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 1, 0, 0, 0, 0]], 6);
        assert_eq!(standard_space(3).classify(&g).unwrap(), SubspaceClass::Generic);
    }

    #[test]
    fn darboux_examples() {
        let v = standard_space(2);
        let b = v.darboux_basis();
        assert_eq!(b.to_columns(4), Mat::identity(4));
        let w = SympSpace::new(Mat::from_i64(&[&[0, 2], &[-2, 0]])).unwrap();
        let b = w.darboux_basis();
        assert_eq!(b.vectors(), &[ivec(&[1, 0]), vec![int(0), ratio(1, 2)]]);
        assert!(b.is_symplectic_in(&w));
    }

    #[test]
    fn rejects_bad_forms() {
        assert_eq!(
            SympSpace::new(Mat::from_i64(&[&[0, 1], &[1, 0]])),
            Err(Error::NotSymplecticForm)
        );
        assert_eq!(
            SympSpace::new(Mat::zeros(2, 2)),
            Err(Error::NotSymplecticForm)
        );
    }

    #[test]
    fn lagrangian_complement_examples() {
        let v = standard_space(2);
        let l = span(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], 4);
        assert_eq!(
            v.lagrangian_complement(&l).unwrap(),
            span(&[&[0, 0, 1, 0], &[0, 0, 0, 1]], 4)
        );
        let v1 = standard_space(1);
        let diag = span(&[&[1, 1]], 2);
        let l2 = v1.lagrangian_complement(&diag).unwrap();
        assert!(v1.is_lagrangian_splitting(&diag, &l2));
        assert!(standard_space(0)
            .lagrangian_complement(&Subspace::zero(0))
            .unwrap()
            .is_zero());
        assert_eq!(
            v.lagrangian_complement(&span(&[&[1, 0, 0, 0]], 4)),
            Err(Error::NotLagrangian)
        );
    }

    #[test]
    fn dual_completion_scales_inversely() {
        let v = standard_space(1);
        let l2 = span(&[&[0, 1]], 2);
        let p = v.dual_completion(&[ivec(&[2, 0])], &l2).unwrap();
        assert_eq!(p, vec![vec![int(0), ratio(1, 2)]]);
        assert_eq!(
            v.dual_completion(&[ivec(&[1, 0])], &span(&[&[1, 0]], 2)),
            Err(Error::NotSplitting)
        );
    }

    #[test]
    fn splitting_map_swaps_q_and_p() {
        let v = standard_space(1);
        let q = span(&[&[1, 0]], 2);
        let p = span(&[&[0, 1]], 2);
        let s = map_lagrangian_splitting(&v, (&q, &p), &v, (&q, &p)).unwrap();
        assert_eq!(s.matrix(), &Mat::identity(2));
        let s = map_lagrangian_splitting(&v, (&q, &p), &v, (&p, &q)).unwrap();
        assert_eq!(s.image(&q).unwrap(), p);
        assert_eq!(s.image(&p).unwrap(), q);
    }

    #[test]
    fn symplectic_map_checks() {
        let v = standard_space(1);
        assert!(is_symplectic_map(&v, &v, &Mat::identity(2)));
        assert!(is_symplectic_map(&v, &v, &Mat::diagonal(&[int(2), ratio(1, 2)])));
        assert!(!is_symplectic_map(&v, &v, &Mat::diagonal(&[int(2), int(2)])));
    }

    #[test]
    fn witt_artin_examples() {
        let v = standard_space(2);
        let q1 = span(&[&[1, 0, 0, 0]], 4);
        let wa = v.witt_artin(&q1).unwrap();
        assert!(wa.e.is_zero());
        assert_eq!(wa.k, q1);
        assert_eq!(wa.f.dim(), 2);
        let wa = v.witt_artin(&Subspace::full(4)).unwrap();
        assert_eq!(wa.e, Subspace::full(4));
        assert!(wa.f.is_zero() && wa.k.is_zero());
        let l = span(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], 4);
        let wa = v.witt_artin(&l).unwrap();
        assert!(wa.e.is_zero() && wa.f.is_zero());
        assert_eq!(wa.k, l);
    }

    #[test]
    fn reduction_examples() {
        let v = standard_space(2);
        let r = v.reduce(&Subspace::full(4)).unwrap();
        assert_eq!(r.reduced, v);
        assert_eq!(r.rho, Mat::identity(4));
        let c = span(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]], 4);
        let r = v.reduce(&c).unwrap();
        assert_eq!(r.reduced.dim(), 2);
        let l = span(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], 4);
        let image = v.reduce_subspace(&c, &l).unwrap();
        assert!(r.reduced.is_lagrangian(&image));
        assert_eq!(v.reduce(&l).unwrap().reduced.dim(), 0);
        assert_eq!(v.reduce_subspace(&span(&[&[1, 0, 0, 0]], 4), &l).unwrap_err(), Error::NotCoisotropic);
    }
}
