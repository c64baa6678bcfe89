//! Tagged input/output documents, versioned by `"format": 1`.

use serde_json::Value;
use symplin::canonical::CanonicalRelation;
use symplin::coisotropic::CoisoPair;
use symplin::linalg::{Mat, Subspace};
use symplin::relations::Relation;
use symplin::symplectic::{SympMap, SympSpace};

use crate::error::{invalid, CliResult};
use crate::json::{matrix, object, parse_matrix, rows, span_rows, Fields};

pub const FORMAT: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Space(SympSpace),
    Subspace(Subspace),
    Pair(CoisoPair),
    Relation(Relation),
    CanonicalRelation(CanonicalRelation),
    Map(SympMap),
}

fn tagged<const N: usize>(kind: &str, fields: [(&str, Value); N]) -> Value {
    let mut v = object(fields);
    let m = v.as_object_mut().expect("object");
    m.insert("kind".into(), Value::from(kind));
    m.insert("format".into(), Value::from(FORMAT));
    v
}

fn form_of(f: &Fields, dim_key: &str, form_key: &str) -> CliResult<SympSpace> {
    let n = f.usize(dim_key)?;
    Ok(SympSpace::new(parse_matrix(f.get(form_key)?, n, n)?)?)
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Space(_) => "space",
            Document::Subspace(_) => "subspace",
            Document::Pair(_) => "pair",
            Document::Relation(_) => "relation",
            Document::CanonicalRelation(_) => "canonical_relation",
            Document::Map(_) => "map",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Document::Space(v) => tagged("space", [("dim", v.dim().into()), ("form", matrix(v.form()))]),
            Document::Subspace(w) => {
                tagged("subspace", [("ambient", w.ambient().into()), ("basis", rows(&w.basis_vectors()))])
            }
            Document::Pair(p) => tagged(
                "pair",
                [
                    ("dim", p.space.dim().into()),
                    ("form", matrix(p.space.form())),
                    ("a", rows(&p.a.basis_vectors())),
                    ("b", rows(&p.b.basis_vectors())),
                ],
            ),
            Document::Relation(r) => tagged(
                "relation",
                [
                    ("source_dim", r.source_dim().into()),
                    ("target_dim", r.target_dim().into()),
                    ("basis", rows(&r.space().basis_vectors())),
                ],
            ),
            Document::CanonicalRelation(l) => tagged(
                "canonical_relation",
                [
                    ("source_dim", l.source().dim().into()),
                    ("target_dim", l.target().dim().into()),
                    ("source_form", matrix(l.source().form())),
                    ("target_form", matrix(l.target().form())),
                    ("basis", rows(&l.rel().space().basis_vectors())),
                ],
            ),
            Document::Map(s) => tagged(
                "map",
                [
                    ("source_dim", s.source().dim().into()),
                    ("target_dim", s.target().dim().into()),
                    ("source_form", matrix(s.source().form())),
                    ("target_form", matrix(s.target().form())),
                    ("matrix", matrix(s.matrix())),
                ],
            ),
        }
    }

    pub fn from_json(v: &Value) -> CliResult<Document> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| invalid("document has no string field \"kind\""))?;
        let allowed: &[&str] = match kind {
            "space" => &["dim", "form"],
            "subspace" => &["ambient", "basis"],
            "pair" => &["dim", "form", "a", "b"],
            "relation" => &["source_dim", "target_dim", "basis"],
            "canonical_relation" => &["source_dim", "target_dim", "source_form", "target_form", "basis"],
            "map" => &["source_dim", "target_dim", "source_form", "target_form", "matrix"],
            _ => return Err(invalid(format!("unknown document kind {kind:?}"))),
        };
        let keys: Vec<&str> = ["kind", "format"].into_iter().chain(allowed.iter().copied()).collect();
        let f = Fields::new(v, kind, &keys)?;
        if f.get("format")?.as_u64() != Some(FORMAT) {
            return Err(invalid(format!("unsupported format {}; expected {FORMAT}", f.get("format")?)));
        }
        Ok(match kind {
            "space" => Document::Space(form_of(&f, "dim", "form")?),
            "subspace" => {
                let n = f.usize("ambient")?;
                Document::Subspace(span_rows(f.get("basis")?, n)?)
            }
            "pair" => {
                let space = form_of(&f, "dim", "form")?;
                let n = space.dim();
                let a = span_rows(f.get("a")?, n)?;
                let b = span_rows(f.get("b")?, n)?;
                Document::Pair(CoisoPair::new(space, a, b)?)
            }
            "relation" => {
                let (x, y) = (f.usize("source_dim")?, f.usize("target_dim")?);
                Document::Relation(Relation::new(x, y, span_rows(f.get("basis")?, x + y)?)?)
            }
            "canonical_relation" => {
                let x = form_of(&f, "source_dim", "source_form")?;
                let y = form_of(&f, "target_dim", "target_form")?;
                let rel = Relation::new(x.dim(), y.dim(), span_rows(f.get("basis")?, x.dim() + y.dim())?)?;
                Document::CanonicalRelation(CanonicalRelation::new(x, y, rel)?)
            }
            _ => {
                let x = form_of(&f, "source_dim", "source_form")?;
                let y = form_of(&f, "target_dim", "target_form")?;
                let m: Mat = parse_matrix(f.get("matrix")?, y.dim(), x.dim())?;
                Document::Map(SympMap::new(x, y, m)?)
            }
        })
    }
}

fn wrong<T>(expected: &str, found: &Document) -> CliResult<T> {
    Err(invalid(format!("expected a {expected} document, found {}", found.kind())))
}

impl Document {
    pub fn into_space(self) -> CliResult<SympSpace> {
        match self {
            Document::Space(x) => Ok(x),
            other => wrong("space", &other),
        }
    }

    pub fn into_subspace(self) -> CliResult<Subspace> {
        match self {
            Document::Subspace(x) => Ok(x),
            other => wrong("subspace", &other),
        }
    }

    pub fn into_pair(self) -> CliResult<CoisoPair> {
        match self {
            Document::Pair(x) => Ok(x),
            other => wrong("pair", &other),
        }
    }

    pub fn into_canonical(self) -> CliResult<CanonicalRelation> {
        match self {
            Document::CanonicalRelation(x) => Ok(x),
            other => wrong("canonical_relation", &other),
        }
    }

    /// Plain relations, and the underlying relation of canonical ones.
    pub fn into_relation(self) -> CliResult<Relation> {
        match self {
            Document::Relation(x) => Ok(x),
            Document::CanonicalRelation(l) => Ok(l.rel().clone()),
            other => wrong("relation", &other),
        }
    }
}
