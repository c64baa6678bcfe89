use proptest::prelude::*;
use serde_json::Value;
use symplin::coisotropic::ElementaryInvariants;
use symplin::linalg::Scalar;
use symplin::relations::Relation;
use symplin::testkit::{
    random_canonical_relation, random_coisotropic_pair, random_elementary, random_form, random_relation_invariants,
    random_subspace, random_symplectic_map, Rng,
};
use symplin_cli::doc::Document;
use symplin_cli::json::{parse_scalar, scalar};
use symplin_cli::render;

fn round_trip(d: &Document) -> Result<(), TestCaseError> {
    let text = render(&d.to_json());
    let v: Value = serde_json::from_str(&text).unwrap();
    let back = Document::from_json(&v).unwrap();
    prop_assert_eq!(&back, d);
    prop_assert_eq!(render(&back.to_json()), text);
    Ok(())
}

fn any_document(rng: &mut Rng) -> Document {
    match rng.below(6) {
        0 => Document::Space(random_form(rng.below(4), rng)),
        1 => {
            let n = rng.below(6);
            Document::Subspace(random_subspace(n, rng.below(n + 1), rng))
        }
        2 => {
            let total = 1 + rng.below(3);
            Document::Pair(random_coisotropic_pair(&random_elementary(total, rng), rng).pair)
        }
        3 => {
            let (x, y) = (rng.below(4), rng.below(4));
            let k = rng.below(x + y + 1);
            Document::Relation(Relation::new(x, y, random_subspace(x + y, k, rng)).unwrap())
        }
        4 => {
            let n: ElementaryInvariants = random_relation_invariants(3, rng);
            Document::CanonicalRelation(random_canonical_relation(&n, rng).unwrap().relation)
        }
        _ => {
            let v = random_form(1 + rng.below(2), rng);
            Document::Map(random_symplectic_map(&v, rng, 4))
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn scalars_round_trip(p: i64, q in 1i64..1_000_000) {
        let x = Scalar::new(p.into(), q.into());
        prop_assert_eq!(parse_scalar(&scalar(&x)).unwrap(), x);
    }

    #[test]
    fn documents_round_trip(seed: u64) {
        let mut rng = Rng::new(seed);
        round_trip(&any_document(&mut rng))?;
    }
}
