use crate::canonical::CanonicalRelation;
use crate::coisotropic::{n_to_k, normal_form_pair, CanonicalInvariants, CoisoPair, ElementaryInvariants};
use crate::error::{ensure, Error, Result};
use crate::linalg::{int, one, zero_vector, Mat, Poly, Subspace, Vector};
use crate::relations::{towber_block, Relation, TowberKind, TowberSignature};
use crate::symplectic::{standard_space, SympMap, SympSpace};

use super::Rng;

/// Product of `steps` transvections `v ↦ v + c·ω(v,u)·u`.
pub fn random_symplectic_map(v: &SympSpace, rng: &mut Rng, steps: usize) -> SympMap {
    let n = v.dim();
    let mut m = Mat::identity(n);
    for _ in 0..steps {
        let u = loop {
            let u: Vector = (0..n).map(|_| int(rng.range(-1, 1))).collect();
            if u.iter().any(|x| *x != int(0)) || n == 0 {
                break u;
            }
        };
        let c = rng.unit_rational();
        let fu = v.form().mul_vec(&u);
        let t = Mat::from_rows(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = if i == j { one() } else { int(0) };
                            d + &c * &u[i] * &fu[j]
                        })
                        .collect()
                })
                .collect(),
            n,
        );
        m = t.mul(&m);
    }
    SympMap::new(v.clone(), v.clone(), m).expect("transvections are symplectic")
}

/// `D·L·U` with unit triangular `L`, `U` and a nonzero rational diagonal `D`.
pub fn random_invertible(n: usize, rng: &mut Rng) -> Mat {
    let mut triangular = |lower: bool| {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match (i == j, (j < i) == lower) {
                        (true, _) => one(),
                        (false, true) => rng.small_int(),
                        (false, false) => int(0),
                    })
                    .collect()
            })
            .collect();
        Mat::from_rows(rows, n)
    };
    let l = triangular(true);
    let u = triangular(false);
    let d: Vec<_> = (0..n).map(|_| rng.nonzero_rational()).collect();
    Mat::diagonal(&d).mul(&l).mul(&u)
}

/// `Pᵀ J P` for a random invertible `P`.
pub fn random_form(half_dim: usize, rng: &mut Rng) -> SympSpace {
    let p = random_invertible(2 * half_dim, rng);
    let j = standard_space(half_dim).form().clone();
    SympSpace::new(p.transpose().mul(&j).mul(&p)).expect("congruent to the standard form")
}

/// Span of `k` random vectors; the dimension may drop below `k`.
pub fn random_subspace(ambient: usize, k: usize, rng: &mut Rng) -> Subspace {
    let vs: Vec<Vector> = (0..k).map(|_| rng.int_vector(ambient)).collect();
    Subspace::span(&vs, ambient)
}

/// Random elementary invariants with `n_1 + … + n_5 = total`.
pub fn random_elementary(total: usize, rng: &mut Rng) -> ElementaryInvariants {
    let mut n = [0; 5];
    for _ in 0..total {
        n[rng.below(5)] += 1;
    }
    ElementaryInvariants(n)
}

#[derive(Clone, Debug)]
pub struct GeneratedPair {
    pub pair: CoisoPair,
    pub n: ElementaryInvariants,
    pub k: CanonicalInvariants,
    /// Carries the normal form onto `pair`.
    pub map: SympMap,
}

/// The normal form for `n` moved by a random symplectomorphism.
pub fn random_coisotropic_pair(n: &ElementaryInvariants, rng: &mut Rng) -> GeneratedPair {
    let nf = normal_form_pair(n);
    let steps = nf.space.dim() + 2;
    let map = random_symplectic_map(&nf.space, rng, steps);
    let pair = nf.transform(&map).expect("symplectomorphisms preserve coisotropy");
    GeneratedPair {
        pair,
        n: *n,
        k: n_to_k(n),
        map,
    }
}

#[derive(Clone, Debug)]
pub struct GeneratedRelation {
    pub relation: CanonicalRelation,
    pub n: ElementaryInvariants,
    pub k: CanonicalInvariants,
    pub a: Subspace,
    pub b: Subspace,
    /// Complements of `A^ω` in `A` and of `B^ω` in `B`.
    pub a1: Subspace,
    pub b1: Subspace,
    /// `(v, φ(v))` for a basis `v` of `a1`.
    pub phi: Vec<(Vector, Vector)>,
}

impl GeneratedRelation {
    /// The same instance moved by `(S ⊕ S)`.
    pub fn conjugate(&self, s: &SympMap) -> Result<GeneratedRelation> {
        let img = |w: &Subspace| s.image(w);
        Ok(GeneratedRelation {
            relation: self.relation.conjugate(s)?,
            n: self.n,
            k: self.k,
            a: img(&self.a)?,
            b: img(&self.b)?,
            a1: img(&self.a1)?,
            b1: img(&self.b1)?,
            phi: self.phi.iter().map(|(x, y)| (s.apply(x), s.apply(y))).collect(),
        })
    }
}

/// Darboux-ordered bases `(q_F, q_X, p_F, p_X)` where `X` is the given block
/// of the normal form and `q_X` spans its `Q` half.
fn normal_darboux(n: &ElementaryInvariants, block: usize) -> Vec<Vector> {
    let dim = 2 * n.0.iter().sum::<usize>();
    let offset = |b: usize| 2 * n.0[..b].iter().sum::<usize>();
    let unit = |i: usize| crate::linalg::unit_vector(dim, i);
    let (f0, x0) = (offset(2), offset(block));
    let (nf, nx) = (n.0[2], n.0[block]);
    let mut out: Vec<Vector> = (0..nf).map(|i| unit(f0 + i)).collect();
    out.extend((0..nx).map(|i| unit(x0 + i)));
    out.extend((0..nf).map(|i| unit(f0 + nf + i)));
    out.extend((0..nx).map(|i| unit(x0 + nx + i)));
    out
}

/// `L = (A^ω × 0) + (0 × B^ω) + graph(φ)` over the normal-form pair for `n`,
/// where `φ : F ⊕ H → F ⊕ G` has matrix `r` in the Darboux bases whose
/// `q`-halves span `F_Q ⊕ H1` and `F_Q ⊕ G1`. Needs `n_4 = n_5`.
pub fn canonical_relation_in_normal_form(n: &ElementaryInvariants, r: &Mat) -> Result<GeneratedRelation> {
    if n.0[3] != n.0[4] {
        return Err(Error::InvalidArgument("canonical relations need n4 = n5".into()));
    }
    let m = n.0[2] + n.0[4];
    let model = standard_space(m);
    if r.rows() != 2 * m || !crate::symplectic::is_symplectic_map(&model, &model, r) {
        return Err(Error::InvalidArgument("phi must be symplectic on the model block".into()));
    }
    let pair = normal_form_pair(n);
    let v = &pair.space;
    let dim = v.dim();
    let ao = v.orthogonal(&pair.a)?;
    let bo = v.orthogonal(&pair.b)?;
    let src = normal_darboux(n, 4);
    let tgt = normal_darboux(n, 3);
    let tgt_mat = Mat::from_columns(&tgt, dim);
    let phi: Vec<(Vector, Vector)> = src
        .iter()
        .enumerate()
        .map(|(j, x)| (x.clone(), tgt_mat.mul_vec(&r.column(j))))
        .collect();
    let mut pairs: Vec<(Vector, Vector)> = ao.basis_vectors().into_iter().map(|x| (x, zero_vector(dim))).collect();
    pairs.extend(bo.basis_vectors().into_iter().map(|y| (zero_vector(dim), y)));
    pairs.extend(phi.iter().cloned());
    let rel = Relation::from_pairs(dim, dim, &pairs);
    let relation = CanonicalRelation::endo(v.clone(), rel)?;
    Ok(GeneratedRelation {
        relation,
        n: *n,
        k: n_to_k(n),
        a1: Subspace::span(&src, dim),
        b1: Subspace::span(&tgt, dim),
        a: pair.a,
        b: pair.b,
        phi,
    })
}

/// A random `φ` over the normal form for `n`, then a random conjugation.
pub fn random_canonical_relation(n: &ElementaryInvariants, rng: &mut Rng) -> Result<GeneratedRelation> {
    let m = n.0[2] + n.0[4];
    let r = random_symplectic_map(&standard_space(m), rng, m + 2);
    let base = canonical_relation_in_normal_form(n, r.matrix())?;
    let s = random_symplectic_map(base.relation.source(), rng, base.relation.source().dim() + 2);
    base.conjugate(&s)
}

/// Random elementary invariants with `n_4 = n_5` and
/// `1 ≤ n_1 + … + n_5 ≤ max_half` (all zero when `max_half = 0`).
pub fn random_relation_invariants(max_half: usize, rng: &mut Rng) -> ElementaryInvariants {
    let mut n = [0; 5];
    let mut left = if max_half == 0 { 0 } else { 1 + rng.below(max_half) };
    while left > 0 {
        match rng.below(4) {
            3 if left >= 2 => {
                n[3] += 1;
                n[4] += 1;
                left -= 2;
            }
            3 => {}
            b => {
                n[b] += 1;
                left -= 1;
            }
        }
    }
    ElementaryInvariants(n)
}

#[derive(Clone, Debug)]
pub struct GeneratedSum {
    pub relation: Relation,
    pub signature: TowberSignature,
    /// The conjugating map.
    pub map: Mat,
}

/// The direct sum of the model blocks and a rational-canonical nonsingular
/// map realizing `signature`, conjugated by a random invertible map.
pub fn random_relation_sum(signature: &TowberSignature, rng: &mut Rng) -> Result<GeneratedSum> {
    let mut parts: Vec<Relation> = Vec::new();
    for kind in TowberKind::ALL {
        for (&size, &count) in signature.blocks(kind) {
            for _ in 0..count {
                parts.push(towber_block(kind, size)?);
            }
        }
    }
    if !signature.nonsingular_part.is_empty() {
        for pair in signature.nonsingular_part.windows(2) {
            ensure(pair[0].divides(&pair[1]), "invariant factors must form a divisor chain")?;
        }
        if signature
            .nonsingular_part
            .iter()
            .any(|f| f.degree().unwrap_or(0) == 0 || f.eval(&int(0)) == int(0))
        {
            return Err(Error::InvalidArgument("nonsingular factors need a nonzero constant term".into()));
        }
        let m = crate::linalg::poly::rational_canonical(&signature.nonsingular_part);
        parts.push(Relation::graph(&m));
    }
    let sum = parts
        .into_iter()
        .reduce(|a, b| a.direct_sum(&b))
        .unwrap_or_else(|| Relation::zero(0, 0));
    let map = random_invertible(sum.source_dim(), rng);
    Ok(GeneratedSum {
        relation: sum.conjugate(&map)?,
        signature: signature.clone(),
        map,
    })
}

/// A random monic polynomial of degree 1 or 2 with nonzero constant term.
fn random_unit_poly(rng: &mut Rng) -> Poly {
    let deg = 1 + rng.below(2);
    let mut c: Vec<_> = (0..deg).map(|_| rng.small_int()).collect();
    if c[0] == int(0) {
        c[0] = rng.nonzero_int();
    }
    c.push(one());
    Poly::from_coeffs(c)
}

/// Random blocks and nonsingular factors with total source dimension at
/// most `max_dim`.
pub fn random_signature(max_dim: usize, rng: &mut Rng) -> TowberSignature {
    let mut sig = TowberSignature::default();
    let mut left = max_dim;
    let blocks = rng.below(4);
    for _ in 0..blocks {
        if left == 0 {
            break;
        }
        let kind = TowberKind::ALL[rng.below(4)];
        let size = 1 + rng.below(left.min(3));
        sig.add_block(kind, size, 1);
        left -= size;
    }
    if left > 0 && rng.coin() {
        let f = random_unit_poly(rng);
        let d = f.degree().unwrap_or(0);
        if d <= left {
            left -= d;
            let mut factors = vec![f.clone()];
            if 2 * d <= left && rng.coin() {
                factors.push(f.mul(&f));
            }
            sig.nonsingular_part = factors;
        }
    }
    sig
}
