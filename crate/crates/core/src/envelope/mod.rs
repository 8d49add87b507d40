//! The Poisson enveloping algebra A^pe: PBW normal forms, two independent reduction routes,
//! the filtration and quotient checks, and the ν-twist for log-canonical brackets.

mod algebra;
mod checks;
mod element;
mod rewrite;

use thiserror::Error;

pub use algebra::Envelope;
pub use checks::{
    confluence_check, confluence_check_words, gr_dimension_check, gr_dimension_check_with,
    j_generators_match_traces, j_quotient_action, j_quotient_check, nu_check, random_poly,
    random_word, symmetric_algebra_count, top_boundary_generators, word_is_confluent,
    ConfluenceReport, GrReport, GrRow, JReport, NuReport,
};
pub use element::{Atom, EnvelopeElement, PbwMonomial, Word};
pub use rewrite::{rewrite, Strategy};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnvelopeError {
    #[error("bracket is not log-canonical")]
    NotLogCanonical,
}
