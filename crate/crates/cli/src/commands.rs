//! One handler per subcommand, each wrapping a single library operation.

use serde_json::Value;
use symplin::canonical::{
    block_normal_form, compose_canonical, decide_equivalence, factorize, ReducedProblem, Verdict,
    WitnessValue,
};
use symplin::coisotropic::{
    build_equivalence, canonical_invariants, elementary_invariants, normal_form_pair,
    CanonicalInvariants, ElementaryInvariants,
};
use symplin::linalg::{Poly, Subspace, Vector};
use symplin::relations::{towber_signature, Relation, TowberSignature};
use symplin::symplectic::{SympSpace, SubspaceClass};
use symplin::testkit::{
    battery, random_canonical_relation, random_coisotropic_pair, random_form, random_subspace,
    random_symplectic_map, Rng, Size,
};

use crate::doc::Document;
use crate::error::{invalid, CliResult};
use crate::json::{matrix, object, rows, scalar, usizes, Fields};

/// A command's JSON body with its exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub body: Value,
    pub code: u8,
}

pub const INEQUIVALENT: u8 = 3;
pub const UNDECIDED: u8 = 4;

impl Output {
    fn ok(body: Value) -> Self {
        Output { body, code: 0 }
    }
}

fn doc(d: Document) -> Value {
    d.to_json()
}

fn subspace(w: &Subspace) -> Value {
    doc(Document::Subspace(w.clone()))
}

fn poly(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(scalar).collect())
}

fn pairs(ps: &[(Vector, Vector)]) -> Value {
    let joined: Vec<Vector> = ps.iter().map(|(x, y)| x.iter().chain(y).cloned().collect()).collect();
    rows(&joined)
}

fn k_and_n(k: &CanonicalInvariants, n: &ElementaryInvariants) -> Value {
    object([("k", usizes(&k.0)), ("n", usizes(&n.0))])
}

pub fn classify(space: Document, w: Document) -> CliResult<Output> {
    let (space, w) = (space.into_space()?, w.into_subspace()?);
    let class: SubspaceClass = space.classify(&w)?;
    Ok(Output::ok(object([("class", Value::from(class.name()))])))
}

pub fn invariants(pair: Document) -> CliResult<Output> {
    let k = canonical_invariants(&pair.into_pair()?)?;
    Ok(Output::ok(k_and_n(&k, &elementary_invariants(&k)?)))
}

pub fn normal_form(d: Document) -> CliResult<Output> {
    match d {
        Document::Pair(p) => {
            let k = canonical_invariants(&p)?;
            let n = elementary_invariants(&k)?;
            let nf = normal_form_pair(&n);
            let s = build_equivalence(&p, &nf)?;
            Ok(Output::ok(object([
                ("invariants", k_and_n(&k, &n)),
                ("normal_form", doc(Document::Pair(nf))),
                ("map", doc(Document::Map(s))),
            ])))
        }
        Document::CanonicalRelation(l) => {
            let nf = block_normal_form(&l)?;
            let d = &nf.decomposition;
            let parts = object([
                ("i", subspace(&d.i)),
                ("j", subspace(&d.j)),
                ("e1", subspace(&d.e1)),
                ("e2", subspace(&d.e2)),
                ("f", subspace(&d.f)),
                ("g1", subspace(&d.g1)),
                ("g2", subspace(&d.g2)),
                ("h1", subspace(&d.h1)),
                ("h2", subspace(&d.h2)),
            ]);
            let l0 = object([
                ("g1", pairs(&nf.l0.g1)),
                ("f", pairs(&nf.l0.f)),
                ("h", pairs(&nf.l0.h)),
                ("h1", pairs(&nf.l0.h1)),
            ]);
            Ok(Output::ok(object([
                ("half_dims", usizes(&d.half_dims().0)),
                ("decomposition", parts),
                ("lambda", pairs(&nf.lambda)),
                ("delta", pairs(&nf.delta)),
                ("l0", l0),
                ("phi", matrix(&nf.phi)),
                ("phi_is_canonical", Value::from(nf.phi_is_canonical)),
            ])))
        }
        other => Err(invalid(format!("normal-form takes a pair or canonical_relation, found {}", other.kind()))),
    }
}

fn witness_value(v: &WitnessValue) -> Value {
    match v {
        WitnessValue::Invariants(k) => usizes(&k.0),
        WitnessValue::Profile(p) => Value::Array(
            p.iter()
                .map(|row| Value::Array(row.iter().map(|&(d, r)| usizes(&[d, r])).collect()))
                .collect(),
        ),
        WitnessValue::Factors(fs) => Value::Array(fs.iter().map(poly).collect()),
    }
}

fn inequivalent(kind: &str, left: Value, right: Value) -> Output {
    let witness = object([("kind", Value::from(kind)), ("left", left), ("right", right)]);
    Output {
        body: object([("verdict", Value::from("inequivalent")), ("witness", witness)]),
        code: INEQUIVALENT,
    }
}

fn signature(t: &TowberSignature) -> Value {
    let blocks = |m: &std::collections::BTreeMap<usize, usize>| {
        Value::Array(m.iter().map(|(&n, &c)| usizes(&[n, c])).collect())
    };
    object([
        ("tau", blocks(&t.tau_plain)),
        ("tau_plus", blocks(&t.tau_plus)),
        ("plus_tau", blocks(&t.plus_tau)),
        ("plus_tau_plus", blocks(&t.plus_tau_plus)),
        ("nonsingular_part", Value::Array(t.nonsingular_part.iter().map(poly).collect())),
    ])
}

fn reduced_problem(r: &ReducedProblem) -> Value {
    let side = |f: &Subspace, g: &Subspace, h: &Subspace, phi, blocks: &[symplin::linalg::Mat; 4], t| {
        object([
            ("f", subspace(f)),
            ("g", subspace(g)),
            ("h", subspace(h)),
            ("phi", doc(Document::Map(phi))),
            ("blocks", Value::Array(blocks.iter().map(matrix).collect())),
            ("towber", signature(t)),
        ])
    };
    object([
        ("left", side(&r.f, &r.g, &r.h, r.phi.clone(), &r.blocks, &r.towber)),
        ("right", side(&r.f_hat, &r.g_hat, &r.h_hat, r.phi_hat.clone(), &r.blocks_hat, &r.towber_hat)),
    ])
}

pub fn equivalence(a: Document, b: Document) -> CliResult<Output> {
    match (a, b) {
        (Document::Pair(p), Document::Pair(q)) => {
            let (kp, kq) = (canonical_invariants(&p)?, canonical_invariants(&q)?);
            if kp != kq {
                return Ok(inequivalent("canonical_invariants", usizes(&kp.0), usizes(&kq.0)));
            }
            let s = build_equivalence(&p, &q)?;
            Ok(Output::ok(object([
                ("verdict", Value::from("equivalent")),
                ("map", doc(Document::Map(s))),
            ])))
        }
        (Document::CanonicalRelation(l), Document::CanonicalRelation(lh)) => Ok(match decide_equivalence(&l, &lh)? {
            Verdict::Equivalent(s) => Output::ok(object([
                ("verdict", Value::from("equivalent")),
                ("map", doc(Document::Map(s))),
            ])),
            Verdict::Inequivalent(w) => {
                inequivalent(w.kind.name(), witness_value(&w.left), witness_value(&w.right))
            }
            Verdict::Undecided(r) => Output {
                body: object([
                    ("verdict", Value::from("undecided")),
                    ("reduced_problem", reduced_problem(&r)),
                ]),
                code: UNDECIDED,
            },
        }),
        (a, b) => Err(invalid(format!(
            "equivalence takes two pairs or two canonical_relations, found {} and {}",
            a.kind(),
            b.kind()
        ))),
    }
}

/// `Q ∘ R`: apply `R` first.
pub fn compose(q: Document, r: Document) -> CliResult<Output> {
    let out = match (q, r) {
        (Document::CanonicalRelation(q), Document::CanonicalRelation(r)) => {
            Document::CanonicalRelation(compose_canonical(&q, &r)?)
        }
        (q, r) => Document::Relation(Relation::compose(&q.into_relation()?, &r.into_relation()?)?),
    };
    Ok(Output::ok(doc(out)))
}

pub fn factorize_cmd(l: Document) -> CliResult<Output> {
    let f = factorize(&l.into_canonical()?)?;
    let reduction = |r: &symplin::symplectic::Reduction| {
        object([
            ("reduced", doc(Document::Space(r.reduced.clone()))),
            ("radical", subspace(&r.radical)),
            ("complement", subspace(&r.complement)),
            ("rho", matrix(&r.rho)),
        ])
    };
    Ok(Output::ok(object([
        ("a", subspace(&f.a)),
        ("b", subspace(&f.b)),
        ("reduction_a", reduction(&f.rho_a)),
        ("reduction_b", reduction(&f.rho_b)),
        ("induced", doc(Document::Map(f.induced.clone()))),
    ])))
}

pub fn towber(r: Document) -> CliResult<Output> {
    Ok(Output::ok(signature(&towber_signature(&r.into_relation()?)?)))
}

pub fn witt_artin(space: Document, w: Document) -> CliResult<Output> {
    let (space, w) = (space.into_space()?, w.into_subspace()?);
    let wa = space.witt_artin(&w)?;
    Ok(Output::ok(object([
        ("e", subspace(&wa.e)),
        ("f", subspace(&wa.f)),
        ("k", subspace(&wa.k)),
        ("kprime", subspace(&wa.kprime)),
    ])))
}

pub fn darboux(space: Document, w: Option<Document>) -> CliResult<Output> {
    let space: SympSpace = space.into_space()?;
    let basis = match w {
        None => space.darboux_basis(),
        Some(w) => space.darboux_basis_of(&w.into_subspace()?)?,
    };
    Ok(Output::ok(object([("q", rows(basis.qs())), ("p", rows(basis.ps()))])))
}

/// Builds the document described by a parameter object
/// `{"format": 1, "generate": <kind>, ...}`.
pub fn gen(params: &Value, seed: u64) -> CliResult<Output> {
    let what = params
        .get("generate")
        .and_then(Value::as_str)
        .ok_or_else(|| invalid("parameters have no string field \"generate\""))?;
    let allowed: &[&str] = match what {
        "space" => &["half_dim"],
        "subspace" => &["ambient", "dim"],
        "map" => &["space", "steps"],
        "pair" | "canonical_relation" => &["n"],
        _ => return Err(invalid(format!("cannot generate {what:?}"))),
    };
    let keys: Vec<&str> = ["format", "generate"].into_iter().chain(allowed.iter().copied()).collect();
    let f = Fields::new(params, "parameters", &keys)?;
    if f.get("format")?.as_u64() != Some(crate::doc::FORMAT) {
        return Err(invalid("parameters need \"format\": 1"));
    }
    let mut rng = Rng::new(seed);
    let out = match what {
        "space" => Document::Space(random_form(f.usize("half_dim")?, &mut rng)),
        "subspace" => {
            let (n, k) = (f.usize("ambient")?, f.usize("dim")?);
            if k > n {
                return Err(invalid(format!("dim {k} exceeds ambient {n}")));
            }
            Document::Subspace(random_subspace(n, k, &mut rng))
        }
        "map" => {
            let space = Document::from_json(f.get("space")?)?.into_space()?;
            Document::Map(random_symplectic_map(&space, &mut rng, f.usize("steps")?))
        }
        "pair" => {
            let n = ElementaryInvariants(f.usize_array::<5>("n")?);
            Document::Pair(random_coisotropic_pair(&n, &mut rng).pair)
        }
        _ => {
            let n = ElementaryInvariants(f.usize_array::<5>("n")?);
            let g = random_canonical_relation(&n, &mut rng)?;
            Document::CanonicalRelation(g.relation)
        }
    };
    Ok(Output::ok(doc(out)))
}

pub fn selftest(seed: u64, size: &str) -> CliResult<Output> {
    let report = battery(seed, Size::parse(size)?);
    let checks = report
        .checks
        .iter()
        .map(|c| {
            let failures = c
                .failures
                .iter()
                .map(|(i, m)| object([("draw", Value::from(*i)), ("message", Value::from(m.as_str()))]))
                .collect();
            object([
                ("name", Value::from(c.name)),
                ("draws", Value::from(c.draws)),
                ("failures", Value::Array(failures)),
            ])
        })
        .collect();
    let passed = report.passed();
    Ok(Output {
        body: object([
            ("seed", Value::from(seed)),
            ("size", Value::from(size)),
            ("passed", Value::from(passed)),
            ("checks", Value::Array(checks)),
        ]),
        code: if passed { 0 } else { 1 },
    })
}
