use std::fmt;

use num_traits::Zero;

use super::{concat, zero_vector, Echelon, Mat, Scalar, Vector};
use crate::error::{check_dim, Error, Result};

/// A linear subspace of `Q^ambient`, stored by its canonical basis: the
/// nonzero rows of the reduced row echelon form of any spanning set.
///
/// Two values are equal as sets exactly when they are equal as values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span<V: AsRef<[Scalar]>>(vectors: &[V], ambient: usize) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            assert_eq!(v.as_ref().len(), ambient, "vector length mismatch");
            e.insert(v.as_ref());
        }
        Subspace::from_echelon(&e)
    }

    /// Row space of `m`.
    pub fn row_space(m: &Mat) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        Subspace {
            ambient: m.cols(),
            basis: r.submatrix(0, 0, pivots.len(), m.cols()),
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Mat) -> Self {
        Subspace::row_space(&m.transpose())
    }

    /// `{x : m · x = 0}`.
    pub fn kernel(m: &Mat) -> Self {
        Subspace::span(&m.null_space(), m.cols())
    }

    pub fn from_echelon(e: &Echelon) -> Self {
        Subspace {
            ambient: e.ambient(),
            basis: e.to_mat(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis as the rows of a matrix.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    fn echelon(&self) -> Echelon {
        Echelon::from_rows(self.ambient, (0..self.dim()).map(|i| self.basis.row(i)))
    }

    /// Pivot column of each canonical basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("canonical basis has no zero rows")
            })
            .collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        self.echelon().contains(v)
    }

    /// Coordinates of `v` with respect to the canonical basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots().into_iter().map(|p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        if self.ambient != other.ambient || self.dim() > other.dim() {
            return false;
        }
        let e = other.echelon();
        (0..self.dim()).all(|i| e.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        let mut e = self.echelon();
        for i in 0..other.dim() {
            e.insert(other.basis.row(i));
        }
        Ok(Subspace::from_echelon(&e))
    }

    /// Intersection by the Zassenhaus construction: row-reduce `[u | u]`
    /// over `u` in `self` stacked on `[w | 0]` over `w` in `other`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(n));
        }
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in self.basis_vectors() {
            rows.push(concat(&u, &u));
        }
        for w in other.basis_vectors() {
            rows.push(concat(&w, &zero_vector(n)));
        }
        let mut e = Echelon::new(2 * n);
        for r in &rows {
            e.insert(r);
        }
        let m = e.to_mat();
        let meet: Vec<Vector> = (0..m.rows())
            .filter(|&i| m.row(i)[..n].iter().all(Zero::is_zero))
            .map(|i| m.row(i)[n..].to_vec())
            .collect();
        Ok(Subspace::span(&meet, n))
    }

    /// The subspace of linear functionals (as coefficient vectors) vanishing
    /// on `self`.
    pub fn annihilator(&self) -> Subspace {
        Subspace::kernel(&self.basis)
    }

    /// A complement `C` of `self` inside `outer`, so `self ⊕ C = outer`.
    ///
    /// Greedy rule: walk the canonical basis rows of `outer` in order and keep
    /// each row that is independent of `self` and the rows already kept.
    pub fn complement_in(&self, outer: &Subspace) -> Result<Subspace> {
        check_dim(outer.ambient, self.ambient)?;
        if !self.is_subspace_of(outer) {
            return Err(Error::NotContained);
        }
        let mut e = self.echelon();
        let mut kept = Vec::new();
        for v in outer.basis_vectors() {
            if e.insert(&v) {
                kept.push(v);
            }
        }
        Ok(Subspace::span(&kept, self.ambient))
    }

    /// Image under `m`, viewed as a map `Q^ambient -> Q^{m.rows}`.
    pub fn image(&self, m: &Mat) -> Result<Subspace> {
        check_dim(m.cols(), self.ambient)?;
        let images: Vec<Vector> = self
            .basis_vectors()
            .iter()
            .map(|b| m.mul_vec(b))
            .collect();
        Ok(Subspace::span(&images, m.rows()))
    }

    /// `{x : m · x ∈ self}`.
    pub fn preimage(&self, m: &Mat) -> Result<Subspace> {
        check_dim(m.rows(), self.ambient)?;
        let ann = self.annihilator().basis().clone();
        Ok(Subspace::kernel(&ann.mul(m)))
    }

    /// The coordinate block `[offset, offset + len)` of every vector.
    pub fn project(&self, offset: usize, len: usize) -> Subspace {
        assert!(offset + len <= self.ambient);
        let rows: Vec<Vector> = self
            .basis_vectors()
            .into_iter()
            .map(|v| v[offset..offset + len].to_vec())
            .collect();
        Subspace::span(&rows, len)
    }

    /// Vectors of `self` whose coordinates outside `[offset, offset + len)`
    /// vanish, restricted to that block.
    pub fn slice(&self, offset: usize, len: usize) -> Subspace {
        let mut block = Vec::new();
        for i in 0..self.ambient {
            if i < offset || i >= offset + len {
                block.push(super::unit_vector(self.ambient, i));
            }
        }
        let outside = Subspace::span(&block, self.ambient);
        let inside = outside.annihilator();
        self.intersect(&inside)
            .expect("same ambient")
            .project(offset, len)
    }

    /// Places `self` into the coordinate block starting at `offset` of a
    /// space of dimension `total`.
    pub fn embed(&self, offset: usize, total: usize) -> Subspace {
        assert!(offset + self.ambient <= total);
        let rows: Vec<Vector> = self
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let mut w = zero_vector(total);
                for (i, x) in v.into_iter().enumerate() {
                    w[offset + i] = x;
                }
                w
            })
            .collect();
        Subspace::span(&rows, total)
    }

    /// External direct sum in `Q^{a + b}`.
    pub fn direct_sum(&self, other: &Subspace) -> Subspace {
        let total = self.ambient + other.ambient;
        self.embed(0, total)
            .sum(&other.embed(self.ambient, total))
            .expect("same ambient")
    }

    /// Sum of many subspaces of the same ambient space.
    pub fn sum_all(ambient: usize, parts: &[&Subspace]) -> Result<Subspace> {
        let mut e = Echelon::new(ambient);
        for p in parts {
            check_dim(ambient, p.ambient)?;
            for i in 0..p.dim() {
                e.insert(p.basis.row(i));
            }
        }
        Ok(Subspace::from_echelon(&e))
    }

    /// Whether the given subspaces form an internal direct sum.
    pub fn independent(parts: &[&Subspace]) -> bool {
        let Some(first) = parts.first() else {
            return true;
        };
        let total: usize = parts.iter().map(|p| p.dim()).sum();
        match Subspace::sum_all(first.ambient, parts) {
            Ok(s) => s.dim() == total,
            Err(_) => false,
        }
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; {:?})", self.dim(), self.ambient, self.basis)
    }
}
