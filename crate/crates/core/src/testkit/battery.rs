use crate::canonical::{block_normal_form, decide_equivalence, equivalence_by_parts, factorize, is_equivalence, Verdict};
use crate::coisotropic::{build_equivalence, canonical_invariants, elementary_invariants, normal_form_pair};
use crate::error::{Error, Result};
use crate::relations::{towber_signature, Relation};
use crate::symplectic::SympSpace;

use super::{
    brute_compose_oracle, random_canonical_relation, random_coisotropic_pair, random_elementary, random_form,
    random_relation_invariants, random_relation_sum, random_signature, random_subspace, random_symplectic_map,
    Rng,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Size {
    Small,
    Medium,
}

impl Size {
    pub fn parse(s: &str) -> Result<Size> {
        match s {
            "small" => Ok(Size::Small),
            "medium" => Ok(Size::Medium),
            _ => Err(Error::InvalidArgument(format!("unknown size {s:?}"))),
        }
    }

    fn draws(self) -> usize {
        match self {
            Size::Small => 6,
            Size::Medium => 30,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub draws: usize,
    /// Indices of failing draws with their diagnostics.
    pub failures: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryReport {
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }
}

type Check = fn(&mut Rng) -> Result<bool>;

fn space(rng: &mut Rng) -> SympSpace {
    let half = 1 + rng.below(3);
    random_form(half, rng)
}

fn darboux(rng: &mut Rng) -> Result<bool> {
    let v = space(rng);
    Ok(v.darboux_basis().is_symplectic_in(&v))
}

fn orthogonality(rng: &mut Rng) -> Result<bool> {
    let v = space(rng);
    let k = rng.below(v.dim() + 1);
    let e = random_subspace(v.dim(), k, rng);
    let f = random_subspace(v.dim(), rng.below(v.dim() + 1), rng);
    let eo = v.orthogonal(&e)?;
    Ok(e.dim() + eo.dim() == v.dim()
        && v.orthogonal(&eo)? == e
        && v.orthogonal(&e.intersect(&f)?)? == eo.sum(&v.orthogonal(&f)?)?)
}

fn witt_artin(rng: &mut Rng) -> Result<bool> {
    let v = space(rng);
    let w = random_subspace(v.dim(), rng.below(v.dim() + 1), rng);
    Ok(v.witt_artin(&w)?.verify(&v))
}

fn composition(rng: &mut Rng) -> Result<bool> {
    let dims: Vec<usize> = (0..4).map(|_| 1 + rng.below(3)).collect();
    let rel = |rng: &mut Rng, s: usize, t: usize| {
        let w = random_subspace(s + t, rng.below(s + t + 1), rng);
        Relation::new(s, t, w)
    };
    let r = rel(rng, dims[0], dims[1])?;
    let q = rel(rng, dims[1], dims[2])?;
    let p = rel(rng, dims[2], dims[3])?;
    let qr = Relation::compose(&q, &r)?;
    Ok(qr == brute_compose_oracle(&q, &r)?
        && Relation::compose(&p, &qr)? == Relation::compose(&Relation::compose(&p, &q)?, &r)?
        && Relation::compose(&Relation::identity(dims[1]), &r)? == r)
}

fn towber(rng: &mut Rng) -> Result<bool> {
    let sig = random_signature(6, rng);
    let g = random_relation_sum(&sig, rng)?;
    Ok(towber_signature(&g.relation)? == sig)
}

fn coisotropic(rng: &mut Rng) -> Result<bool> {
    let n = random_elementary(1 + rng.below(3), rng);
    let g = random_coisotropic_pair(&n, rng);
    let k = canonical_invariants(&g.pair)?;
    let nf = normal_form_pair(&elementary_invariants(&k)?);
    let s = build_equivalence(&g.pair, &nf)?;
    Ok(k == g.k && s.image(&g.pair.a)? == nf.a && s.image(&g.pair.b)? == nf.b)
}

fn canonical(rng: &mut Rng) -> Result<bool> {
    let n = random_relation_invariants(3, rng);
    let g = random_canonical_relation(&n, rng)?;
    let f = factorize(&g.relation)?;
    let nf = block_normal_form(&g.relation)?;
    Ok(f.a == g.a && f.b == g.b && nf.reassemble() == *g.relation.rel())
}

fn equivalence(rng: &mut Rng) -> Result<bool> {
    let n = random_relation_invariants(3, rng);
    let g = random_canonical_relation(&n, rng)?;
    let s = random_symplectic_map(g.relation.source(), rng, 4);
    let lh = if rng.coin() {
        g.relation.conjugate(&s)?
    } else {
        random_canonical_relation(&n, rng)?.relation
    };
    let direct = is_equivalence(&s, &g.relation, &lh);
    Ok(direct == equivalence_by_parts(&s, &g.relation, &lh, &g.a1, &g.b1)?)
}

fn decide_without_f(rng: &mut Rng) -> Result<bool> {
    let mut n = random_relation_invariants(3, rng);
    n.0[2] = 0;
    let g = random_canonical_relation(&n, rng)?;
    let s = random_symplectic_map(g.relation.source(), rng, 6);
    let lh = g.relation.conjugate(&s)?;
    Ok(match decide_equivalence(&g.relation, &lh)? {
        Verdict::Equivalent(t) => is_equivalence(&t, &g.relation, &lh),
        _ => false,
    })
}

const CHECKS: [(&str, Check); 9] = [
    ("darboux_basis", darboux),
    ("orthogonality", orthogonality),
    ("witt_artin", witt_artin),
    ("composition", composition),
    ("towber_signature", towber),
    ("coisotropic_pairs", coisotropic),
    ("canonical_relations", canonical),
    ("equivalence_by_parts", equivalence),
    ("decide_without_f", decide_without_f),
];

/// A quick pass over every generator/analyzer round trip.
pub fn battery(seed: u64, size: Size) -> BatteryReport {
    let mut root = Rng::new(seed);
    let checks = CHECKS
        .iter()
        .map(|&(name, check)| {
            let mut rng = root.split();
            let draws = size.draws();
            let failures = (0..draws)
                .filter_map(|i| match check(&mut rng) {
                    Ok(true) => None,
                    Ok(false) => Some((i, "property violated".to_string())),
                    Err(e) => Some((i, e.to_string())),
                })
                .collect();
            CheckReport { name, draws, failures }
        })
        .collect();
    BatteryReport { seed, checks }
}
