//! Set-partition monoids of types A, B and D, tied monoids built as
//! semidirect products with braid-like monoids, and a brute-force verifier
//! for their presentations.

pub mod battery;
pub mod coxeter;
pub mod error;
pub mod partition;
pub mod rewrite;
pub mod suites;
pub mod tied;
pub mod verify;

pub use battery::{battery, run_parallel, Job, Selector};
pub use coxeter::{GroupElement, GroupFamily};
pub use error::{Error, Result};
pub use partition::{
    compare_blocks, eps_pair, epsilon, mu, mu_pair, Ground, GroundLimits, PartitionClassFlags,
    SetPartition,
};
pub use rewrite::{Alphabet, CommWord, RewriteSystem};
pub use suites::{lemma_identity_suites, relation_suite, RangeMode, Relation, RelationSuite};
pub use tied::{EqOutcome, Family, FamilyKind, Letter, MonoidWord, TiedElement};
pub use verify::{
    Carrier, CheckRecord, EnumeratedMonoid, Presentation, Status, VerificationReport,
    DEFAULT_MAX_ELEMENTS,
};
