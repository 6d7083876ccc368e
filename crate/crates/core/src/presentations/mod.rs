//! The two categories presented by generators and relations, their
//! evaluation into diagram categories and into arbitrary targets.

mod canonical;
mod datum;
mod eval;
mod relations;
mod word;

pub use canonical::{canonical_word, canonical_word_colored, permutation_term};
pub use datum::{datum_axioms, datum_reports, verify_datum, DatumViolation, VerifiedDatum};
pub use eval::{
    e_prime_word, eval, eval_gtilde, eval_htilde, generator_diagram, DiagramTarget, Target,
};
pub use relations::{base_relations, check_relation, relation_suite, verify_relations, Relation};
pub use word::{parse_term, Gen, GenWord, Presentation, Term, WordError};
