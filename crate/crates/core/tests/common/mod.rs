//! Oracles that recompute properties from raw matrices without going through
//! the library's predicates.

#![allow(dead_code)]

use symplin::linalg::{Mat, Scalar, Subspace, Vector};
use symplin::relations::Relation;
use symplin::symplectic::{SympMap, SympSpace};

pub fn pairing(form: &Mat, u: &[Scalar], v: &[Scalar]) -> Scalar {
    let fv = apply(form, v);
    dot(u, &fv)
}

fn apply(form: &Mat, v: &[Scalar]) -> Vector {
    (0..form.rows())
        .map(|i| {
            let mut acc = Scalar::from_integer(0.into());
            for (j, x) in v.iter().enumerate() {
                if !is_zero(x) && !is_zero(&form[(i, j)]) {
                    acc += &form[(i, j)] * x;
                }
            }
            acc
        })
        .collect()
}

fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    let mut acc = Scalar::from_integer(0.into());
    for (a, b) in u.iter().zip(v) {
        if !is_zero(a) && !is_zero(b) {
            acc += a * b;
        }
    }
    acc
}

/// `ω(a_i, b_j)` for all `i, j`.
pub fn pairing_table(form: &Mat, a: &[Vector], b: &[Vector]) -> Vec<Vec<Scalar>> {
    let fb: Vec<Vector> = b.iter().map(|v| apply(form, v)).collect();
    a.iter().map(|u| fb.iter().map(|w| dot(u, w)).collect()).collect()
}

pub fn is_zero(x: &Scalar) -> bool {
    *x == Scalar::from_integer(0.into())
}

pub fn is_one(x: &Scalar) -> bool {
    *x == Scalar::from_integer(1.into())
}

pub fn rank_of(vs: &[Vector], ambient: usize) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Mat::from_rows(vs.to_vec(), ambient).rank()
}

/// `span(a) = span(b)` by ranks.
pub fn same_span(a: &[Vector], b: &[Vector], ambient: usize) -> bool {
    let both: Vec<Vector> = a.iter().chain(b).cloned().collect();
    let r = rank_of(&both, ambient);
    rank_of(a, ambient) == r && rank_of(b, ambient) == r
}

pub fn in_span(basis: &[Vector], v: &[Scalar], ambient: usize) -> bool {
    let mut both = basis.to_vec();
    both.push(v.to_vec());
    rank_of(&both, ambient) == rank_of(basis, ambient)
}

pub fn isotropic(form: &Mat, vs: &[Vector]) -> bool {
    pairing_table(form, vs, vs).iter().flatten().all(is_zero)
}

/// `q_1…q_n, p_1…p_n` with `ω(q_i, p_j) = δ_ij` and all other pairings zero.
pub fn is_darboux(form: &Mat, vs: &[Vector]) -> bool {
    let n = vs.len() / 2;
    if 2 * n != vs.len() {
        return false;
    }
    let t = pairing_table(form, vs, vs);
    (0..2 * n).all(|i| {
        (0..2 * n).all(|j| {
            let w = &t[i][j];
            match (i < n, j < n) {
                (true, false) if j - n == i => is_one(w),
                (false, true) if i - n == j => *w == -Scalar::from_integer(1.into()),
                _ => is_zero(w),
            }
        })
    })
}

/// `SᵀF̂S = F` computed entrywise.
pub fn preserves_form(s: &SympMap) -> bool {
    let (f, fh, m) = (s.source().form(), s.target().form(), s.matrix());
    let cols = m.column_vectors();
    let t = pairing_table(fh, &cols, &cols);
    (0..cols.len()).all(|i| (0..cols.len()).all(|j| t[i][j] == f[(i, j)]))
}

/// `W ⊆ X ⊕ Y⁻` with `ω_X(x,x′) = ω_Y(y,y′)` on a basis and
/// `dim W = (dim X + dim Y)/2`.
pub fn lagrangian_relation(x: &SympSpace, y: &SympSpace, r: &Relation) -> bool {
    let (xs, ys): (Vec<Vector>, Vec<Vector>) = r.pairs().into_iter().unzip();
    2 * rank_of(&r.space().basis_vectors(), x.dim() + y.dim()) == x.dim() + y.dim()
        && pairing_table(x.form(), &xs, &xs) == pairing_table(y.form(), &ys, &ys)
}

/// `(S ⊕ S)(L) = L̂` by mapping spanning pairs and comparing spans.
pub fn conjugates(s: &SympMap, l: &Relation, lh: &Relation) -> bool {
    let n = l.source_dim();
    let moved: Vec<Vector> = l
        .pairs()
        .iter()
        .map(|(x, y)| {
            let mut v = s.apply(x);
            v.extend(s.apply(y));
            v
        })
        .collect();
    same_span(&moved, &lh.space().basis_vectors(), 2 * n)
}

/// `span{ω(·, w) = 0 for all w ∈ W}` checked against the given answer.
pub fn is_orthogonal_of(form: &Mat, w: &Subspace, wo: &Subspace) -> bool {
    let n = w.ambient();
    let ws = w.basis_vectors();
    let wos = wo.basis_vectors();
    pairing_table(form, &wos, &ws).iter().flatten().all(is_zero)
        && rank_of(&wos, n) + rank_of(&ws, n) == n
}

pub fn subspace_eq(a: &Subspace, b: &Subspace) -> bool {
    a.ambient() == b.ambient() && same_span(&a.basis_vectors(), &b.basis_vectors(), a.ambient())
}

/// A symplectomorphism matching Darboux bases of two equal-dimension spaces.
pub fn identify(from: &SympSpace, to: &SympSpace) -> SympMap {
    let b_from = from.darboux_basis().to_columns(from.dim());
    let b_to = to.darboux_basis().to_columns(to.dim());
    let m = b_to.mul(&b_from.inverse().expect("basis"));
    SympMap::new(from.clone(), to.clone(), m).expect("Darboux bases")
}
