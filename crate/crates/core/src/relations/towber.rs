//! Complete isomorphism invariants of endo-relations.
//!
//! An endo-relation `R ⊆ V ⊕ V` with basis pairs `(p_i, q_i)` is read as the
//! pencil `Q - λP` (columns `q_i` and `p_i`). Conjugating `R` and changing
//! its basis act on the pencil by strict equivalence, so the Kronecker data
//! of the pencil classify `R`:
//!
//! | pencil datum                        | block        |
//! |-------------------------------------|--------------|
//! | column minimal index `ε ≥ 1`        | `⁺τ⁺(ε)`     |
//! | row minimal index `η ≥ 0`           | `τ(η + 1)`   |
//! | elementary divisor `λ^k`            | `τ⁺(k)`      |
//! | infinite elementary divisor, size k | `⁺τ(k)`      |
//! | remaining finite divisors           | nonsingular  |

use std::collections::BTreeMap;

use crate::error::{check_dim, ensure, Error, Result};
use crate::linalg::poly::{invariant_factors, rational_canonical, smith_diagonal};
use crate::linalg::{int, unit_vector, zero_vector, Mat, Poly, Vector};

use super::Relation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TowberKind {
    /// `τ(n)`: the chain `(e_1,e_2), …, (e_{n-1},e_n)`.
    Tau,
    /// `τ⁺(n)`: the chain closed by `(e_n, 0)`.
    TauPlus,
    /// `⁺τ(n)`: the chain opened by `(0, e_1)`.
    PlusTau,
    /// `⁺τ⁺(n)`: opened by `(0, e_1)` and closed by `(e_n, 0)`.
    PlusTauPlus,
}

impl TowberKind {
    pub const ALL: [TowberKind; 4] = [
        TowberKind::Tau,
        TowberKind::TauPlus,
        TowberKind::PlusTau,
        TowberKind::PlusTauPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TowberKind::Tau => "tau",
            TowberKind::TauPlus => "tau_plus",
            TowberKind::PlusTau => "plus_tau",
            TowberKind::PlusTauPlus => "plus_tau_plus",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        TowberKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown block kind {s:?}")))
    }

    /// Dimension of the block relation on `V_n`.
    pub fn relation_dim(self, n: usize) -> usize {
        match self {
            TowberKind::Tau => n - 1,
            TowberKind::TauPlus | TowberKind::PlusTau => n,
            TowberKind::PlusTauPlus => n + 1,
        }
    }
}

/// The model block of the given kind on `V_n = ℚ^n`.
pub fn towber_block(kind: TowberKind, n: usize) -> Result<Relation> {
    if n < 1 {
        return Err(Error::InvalidArgument("block size must be at least 1".into()));
    }
    let e = |i: usize| unit_vector(n, i);
    let mut pairs: Vec<(Vector, Vector)> = Vec::new();
    if matches!(kind, TowberKind::PlusTau | TowberKind::PlusTauPlus) {
        pairs.push((zero_vector(n), e(0)));
    }
    for i in 0..n - 1 {
        pairs.push((e(i), e(i + 1)));
    }
    if matches!(kind, TowberKind::TauPlus | TowberKind::PlusTauPlus) {
        pairs.push((e(n - 1), zero_vector(n)));
    }
    Ok(Relation::from_pairs(n, n, &pairs))
}

/// Multiplicities of the four block families and the invariant factors of
/// the nonsingular part.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TowberSignature {
    pub tau_plain: BTreeMap<usize, usize>,
    pub tau_plus: BTreeMap<usize, usize>,
    pub plus_tau: BTreeMap<usize, usize>,
    pub plus_tau_plus: BTreeMap<usize, usize>,
    /// Monic, each dividing the next, none divisible by `x`.
    pub nonsingular_part: Vec<Poly>,
}

impl TowberSignature {
    pub fn blocks(&self, kind: TowberKind) -> &BTreeMap<usize, usize> {
        match kind {
            TowberKind::Tau => &self.tau_plain,
            TowberKind::TauPlus => &self.tau_plus,
            TowberKind::PlusTau => &self.plus_tau,
            TowberKind::PlusTauPlus => &self.plus_tau_plus,
        }
    }

    fn blocks_mut(&mut self, kind: TowberKind) -> &mut BTreeMap<usize, usize> {
        match kind {
            TowberKind::Tau => &mut self.tau_plain,
            TowberKind::TauPlus => &mut self.tau_plus,
            TowberKind::PlusTau => &mut self.plus_tau,
            TowberKind::PlusTauPlus => &mut self.plus_tau_plus,
        }
    }

    pub fn add_block(&mut self, kind: TowberKind, n: usize, count: usize) {
        if count > 0 {
            *self.blocks_mut(kind).entry(n).or_default() += count;
        }
    }

    fn all_blocks(&self) -> impl Iterator<Item = (TowberKind, usize, usize)> + '_ {
        TowberKind::ALL
            .into_iter()
            .flat_map(move |k| self.blocks(k).iter().map(move |(&n, &c)| (k, n, c)))
    }

    fn nonsingular_degree(&self) -> usize {
        self.nonsingular_part
            .iter()
            .map(|p| p.degree().unwrap_or(0))
            .sum()
    }

    /// Dimension of the underlying space.
    pub fn source_dim(&self) -> usize {
        self.all_blocks().map(|(_, n, c)| n * c).sum::<usize>() + self.nonsingular_degree()
    }

    /// Dimension of the relation.
    pub fn relation_dim(&self) -> usize {
        self.all_blocks()
            .map(|(k, n, c)| k.relation_dim(n) * c)
            .sum::<usize>()
            + self.nonsingular_degree()
    }

    /// Signature of the direct sum.
    pub fn combine(&self, other: &TowberSignature) -> TowberSignature {
        let mut out = self.clone();
        for (k, n, c) in other.all_blocks() {
            out.add_block(k, n, c);
        }
        let m = Mat::block_diag(&[
            &rational_canonical(&self.nonsingular_part),
            &rational_canonical(&other.nonsingular_part),
        ]);
        out.nonsingular_part = invariant_factors(&m);
        out
    }
}

/// Signature of an endo-relation.
pub fn towber_signature(r: &Relation) -> Result<TowberSignature> {
    check_dim(r.source_dim(), r.target_dim())?;
    let a = r.target_block();
    let b = r.source_block();
    let normal_rank = normal_rank(&a, &b);
    let mut sig = TowberSignature::default();

    for (eps, c) in column_minimal_indices(&a, &b, normal_rank)? {
        ensure(eps >= 1, "zero column index in a relation pencil")?;
        sig.add_block(TowberKind::PlusTauPlus, eps, c);
    }
    for (eta, c) in column_minimal_indices(&a.transpose(), &b.transpose(), normal_rank)? {
        sig.add_block(TowberKind::Tau, eta + 1, c);
    }
    for (k, c) in local_sizes(&a, &b, normal_rank)? {
        sig.add_block(TowberKind::TauPlus, k, c);
    }
    for (k, c) in local_sizes(&b, &a, normal_rank)? {
        sig.add_block(TowberKind::PlusTau, k, c);
    }

    let pencil: Vec<Vec<Poly>> = (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| Poly::from_coeffs(vec![a[(i, j)].clone(), -b[(i, j)].clone()]))
                .collect()
        })
        .collect();
    sig.nonsingular_part = smith_diagonal(pencil)
        .into_iter()
        .map(|p| p.strip_x())
        .filter(|p| !p.is_one())
        .collect();

    ensure(
        sig.source_dim() == r.source_dim() && sig.relation_dim() == r.dim(),
        "signature dimension accounting",
    )?;
    Ok(sig)
}

/// Whether two endo-relations are isomorphic (equal signatures).
pub fn endrel_isomorphic(r: &Relation, q: &Relation) -> Result<bool> {
    check_dim(r.source_dim(), q.source_dim())?;
    Ok(r.dim() == q.dim() && towber_signature(r)? == towber_signature(q)?)
}

/// Rank of `a - t b` for generic `t`: the maximum over enough distinct
/// sample points to avoid every finite eigenvalue.
fn normal_rank(a: &Mat, b: &Mat) -> usize {
    let samples = a.rows().min(a.cols()) + 1;
    (0..samples as i64)
        .map(|t| a.sub(&b.scale(&int(t))).rank())
        .max()
        .unwrap_or(0)
}

/// Block Toeplitz matrix with `rows × cols` blocks, `d0` on the diagonal
/// and `d1` on the subdiagonal.
fn toeplitz(d0: &Mat, d1: &Mat, rows: usize, cols: usize) -> Mat {
    let (m, n) = (d0.rows(), d0.cols());
    let mut t = Mat::zeros(rows * m, cols * n);
    for j in 0..cols {
        for (blk, r) in [(d0, j), (d1, j + 1)] {
            if r >= rows {
                continue;
            }
            for i in 0..m {
                for k in 0..n {
                    t[(r * m + i, j * n + k)] = blk[(i, k)].clone();
                }
            }
        }
    }
    t
}

/// Column minimal indices of `a - λ b` as `index ↦ multiplicity`.
///
/// With `T_d` the coefficient matrix of `(a - λb) x(λ) = 0` for `deg x ≤ d`,
/// `dim ker T_d - dim ker T_{d-1}` counts the indices `≤ d`.
fn column_minimal_indices(a: &Mat, b: &Mat, normal_rank: usize) -> Result<BTreeMap<usize, usize>> {
    let total = a.cols() - normal_rank;
    let mut out = BTreeMap::new();
    let (mut prev_kernel, mut prev_count) = (0usize, 0usize);
    let mut d = 0;
    while prev_count < total {
        if d > a.rows() {
            return Err(Error::Internal("column minimal indices did not terminate".into()));
        }
        let t = toeplitz(a, &b.neg(), d + 2, d + 1);
        let kernel = (d + 1) * a.cols() - t.rank();
        let count = kernel - prev_kernel;
        if count > prev_count {
            out.insert(d, count - prev_count);
        }
        prev_kernel = kernel;
        prev_count = count;
        d += 1;
    }
    Ok(out)
}

/// Sizes of the elementary divisors `λ^k` of `p0 - λ p1`.
///
/// With `S_k` the `k × k` block Toeplitz matrix, the number of divisors of
/// size at least `k` is `r - (rank S_k - rank S_{k-1})`.
fn local_sizes(p0: &Mat, p1: &Mat, normal_rank: usize) -> Result<BTreeMap<usize, usize>> {
    let limit = p0.rows().min(p0.cols()) + 1;
    let mut at_least = Vec::new();
    let mut prev = 0;
    for k in 1..=limit {
        let rank = toeplitz(p0, &p1.neg(), k, k).rank();
        let g = normal_rank - (rank - prev);
        prev = rank;
        if g == 0 {
            break;
        }
        at_least.push(g);
    }
    if at_least.len() == limit {
        return Err(Error::Internal("local multiplicities did not terminate".into()));
    }
    let mut out = BTreeMap::new();
    for (i, &g) in at_least.iter().enumerate() {
        let next = at_least.get(i + 1).copied().unwrap_or(0);
        if g > next {
            out.insert(i + 1, g - next);
        }
    }
    Ok(out)
}
