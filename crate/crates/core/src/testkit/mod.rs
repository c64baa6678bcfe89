//! Seeded generators with known ground truth, and independent oracles.

mod battery;
mod generators;
mod oracle;
mod rng;

pub use battery::{battery, BatteryReport, CheckReport, Size};
pub use generators::{
    canonical_relation_in_normal_form, random_canonical_relation, random_coisotropic_pair, random_elementary,
    random_form, random_invertible, random_relation_invariants, random_relation_sum, random_signature,
    random_subspace, random_symplectic_map, GeneratedPair, GeneratedRelation, GeneratedSum,
};
pub use oracle::brute_compose_oracle;
pub use rng::Rng;
