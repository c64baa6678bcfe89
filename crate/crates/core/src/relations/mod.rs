//! Linear relations `R ⊆ X ⊕ Y` and their algebra.
//!
//! Coordinates of a relation are ordered source block first, target block
//! second. Composition is written right to left: `compose(Q, R) = Q ∘ R`.

mod towber;

pub use towber::{endrel_isomorphic, towber_block, towber_signature, TowberKind, TowberSignature};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{concat, one, unit_vector, zero_vector, Mat, Scalar, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    source: usize,
    target: usize,
    space: Subspace,
}

/// Domain, range, kernel and halo of a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corners {
    pub dom: Subspace,
    pub ran: Subspace,
    pub ker: Subspace,
    pub hal: Subspace,
}

/// `cosurjective ⇔ dom = X`, `coinjective ⇔ hal = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub cosurjective: bool,
    pub coinjective: bool,
    pub is_map: bool,
}

impl Relation {
    pub fn new(source: usize, target: usize, space: Subspace) -> Result<Self> {
        check_dim(source + target, space.ambient())?;
        Ok(Relation {
            source,
            target,
            space,
        })
    }

    /// Span of the pairs `(x, y)`.
    pub fn from_pairs(source: usize, target: usize, pairs: &[(Vector, Vector)]) -> Self {
        let rows: Vec<Vector> = pairs
            .iter()
            .map(|(x, y)| {
                assert_eq!((x.len(), y.len()), (source, target), "pair length mismatch");
                concat(x, y)
            })
            .collect();
        Relation {
            source,
            target,
            space: Subspace::span(&rows, source + target),
        }
    }

    /// Graph of the map with matrix `m` (shape target × source).
    pub fn graph(m: &Mat) -> Self {
        let pairs: Vec<(Vector, Vector)> = (0..m.cols())
            .map(|j| {
                let x = unit_vector(m.cols(), j);
                let y = m.column(j);
                (x, y)
            })
            .collect();
        Relation::from_pairs(m.cols(), m.rows(), &pairs)
    }

    /// The diagonal `Δ = {(x, x)}`.
    pub fn identity(n: usize) -> Self {
        Relation::graph(&Mat::identity(n))
    }

    pub fn zero(source: usize, target: usize) -> Self {
        Relation {
            source,
            target,
            space: Subspace::zero(source + target),
        }
    }

    pub fn full(source: usize, target: usize) -> Self {
        Relation {
            source,
            target,
            space: Subspace::full(source + target),
        }
    }

    /// `S ⊕ T` for `S ⊆ X`, `T ⊆ Y`.
    pub fn product(s: &Subspace, t: &Subspace) -> Self {
        Relation {
            source: s.ambient(),
            target: t.ambient(),
            space: s.direct_sum(t),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source
    }

    pub fn target_dim(&self) -> usize {
        self.target
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    pub fn contains(&self, x: &[Scalar], y: &[Scalar]) -> bool {
        self.space.contains(&concat(x, y))
    }

    /// Basis pairs `(x_i, y_i)` from the canonical basis.
    pub fn pairs(&self) -> Vec<(Vector, Vector)> {
        self.space
            .basis_vectors()
            .into_iter()
            .map(|v| (v[..self.source].to_vec(), v[self.source..].to_vec()))
            .collect()
    }

    /// Source components of the canonical basis, as columns.
    pub fn source_block(&self) -> Mat {
        self.space
            .basis()
            .submatrix(0, 0, self.dim(), self.source)
            .transpose()
    }

    /// Target components of the canonical basis, as columns.
    pub fn target_block(&self) -> Mat {
        self.space
            .basis()
            .submatrix(0, self.source, self.dim(), self.target)
            .transpose()
    }

    /// `Q ∘ R = {(x, z) : ∃y, (x, y) ∈ R, (y, z) ∈ Q}`.
    ///
    /// Intersects `R ⊕ Q ⊆ X ⊕ Y ⊕ Y ⊕ Z` with `X ⊕ Δ_Y ⊕ Z`, then projects
    /// to `X ⊕ Z`.
    pub fn compose(q: &Relation, r: &Relation) -> Result<Relation> {
        check_dim(r.target, q.source)?;
        let (x, y, z) = (r.source, r.target, q.target);
        let total = x + 2 * y + z;
        let rq = r.space.direct_sum(&q.space);
        let mut diag = Vec::with_capacity(x + y + z);
        for i in 0..x {
            diag.push(unit_vector(total, i));
        }
        for i in 0..y {
            let mut v = zero_vector(total);
            v[x + i] = one();
            v[x + y + i] = one();
            diag.push(v);
        }
        for i in 0..z {
            diag.push(unit_vector(total, x + 2 * y + i));
        }
        let meet = rq.intersect(&Subspace::span(&diag, total))?;
        let rows: Vec<Vector> = meet
            .basis_vectors()
            .into_iter()
            .map(|v| concat(&v[..x], &v[x + 2 * y..]))
            .collect();
        Relation::new(x, z, Subspace::span(&rows, x + z))
    }

    /// `{(y, x) : (x, y) ∈ R}`.
    pub fn converse(&self) -> Relation {
        let pairs: Vec<(Vector, Vector)> = self.pairs().into_iter().map(|(x, y)| (y, x)).collect();
        Relation::from_pairs(self.target, self.source, &pairs)
    }

    /// `R* ⊆ Y* ⊕ X*`: `(α, β) ∈ R*` iff `α(y) = β(x)` for all `(x, y) ∈ R`.
    pub fn adjoint(&self) -> Relation {
        let rows: Vec<Vector> = self
            .pairs()
            .into_iter()
            .map(|(x, y)| concat(&y, &x.iter().map(|c| -c).collect::<Vector>()))
            .collect();
        let m = Mat::from_rows(rows, self.source + self.target);
        Relation {
            source: self.target,
            target: self.source,
            space: Subspace::kernel(&m),
        }
    }

    /// `R^t ⊆ Y ⊕ X` with respect to nondegenerate bilinear forms `B_X`,
    /// `B_Y`: `y R^t x` iff `B_Y(y, w) = B_X(x, z)` whenever `z R w`.
    pub fn transpose(&self, bx: &Mat, by: &Mat) -> Result<Relation> {
        check_dim(self.source, bx.rows())?;
        check_dim(self.target, by.rows())?;
        let byt = by.transpose().inverse().ok_or(Error::Degenerate)?;
        let bxt = bx.transpose().inverse().ok_or(Error::Degenerate)?;
        let adj = self.adjoint();
        let space = adj.space.image(&Mat::block_diag(&[&byt, &bxt]))?;
        Relation::new(self.target, self.source, space)
    }

    pub fn corners(&self) -> Corners {
        let (x, y) = (self.source, self.target);
        Corners {
            dom: self.space.project(0, x),
            ran: self.space.project(x, y),
            ker: self.space.slice(0, x),
            hal: self.space.slice(x, y),
        }
    }

    pub fn flags(&self) -> Flags {
        let c = self.corners();
        let cosurjective = c.dom.is_full();
        let coinjective = c.hal.is_zero();
        Flags {
            cosurjective,
            coinjective,
            is_map: cosurjective && coinjective,
        }
    }

    /// Matrix of the map when the relation is a graph.
    pub fn as_matrix(&self) -> Option<Mat> {
        if !self.flags().is_map {
            return None;
        }
        // a graph has exactly the canonical rows (e_j, M e_j)
        let cols: Vec<Vector> = (0..self.source)
            .map(|j| self.space.basis().row(j)[self.source..].to_vec())
            .collect();
        Some(Mat::from_columns(&cols, self.target))
    }

    /// `R ⊕ Q ⊆ (X_R ⊕ X_Q) ⊕ (Y_R ⊕ Y_Q)`.
    pub fn direct_sum(&self, other: &Relation) -> Relation {
        let (xs, ys) = (self.source + other.source, self.target + other.target);
        let mut pairs = Vec::new();
        for (x, y) in self.pairs() {
            pairs.push((concat(&x, &zero_vector(other.source)), concat(&y, &zero_vector(other.target))));
        }
        for (x, y) in other.pairs() {
            pairs.push((concat(&zero_vector(self.source), &x), concat(&zero_vector(self.target), &y)));
        }
        Relation::from_pairs(xs, ys, &pairs)
    }

    /// `(S ⊕ S)(R)` for an endo-relation.
    pub fn conjugate(&self, s: &Mat) -> Result<Relation> {
        self.transform(s, s)
    }

    /// `(S ⊕ T)(R)`.
    pub fn transform(&self, s: &Mat, t: &Mat) -> Result<Relation> {
        check_dim(self.source, s.cols())?;
        check_dim(self.target, t.cols())?;
        let space = self.space.image(&Mat::block_diag(&[s, t]))?;
        Relation::new(s.rows(), t.rows(), space)
    }

    /// Whether `x R x' ⇒ (Sx) Q (Sx')`.
    pub fn endrel_morphism(s: &Mat, r: &Relation, q: &Relation) -> Result<bool> {
        check_dim(r.source, r.target)?;
        check_dim(q.source, q.target)?;
        let image = r.conjugate(s)?;
        check_dim(q.source, image.source)?;
        Ok(image.space.is_subspace_of(&q.space))
    }
}
