//! Brute force against closed formulas: per-case verification, exactness checks for
//! the polynomial-group sequences, corpus campaigns and JSON reports.

pub mod checks;
pub mod corpus;
pub mod report;
pub mod series;

pub use checks::{
    verify_dim3, verify_exact_sequence, verify_fox, verify_polynomial_sequence, Caps, Dim3Options, Setting,
};
pub use corpus::{run_corpus, CorpusConfig, Counterexample, SubgroupPolicy, DEFAULT_GROUPS};
pub use report::{Aggregate, Case, Check, Containments, Report, SCHEMA_VERSION};
pub use series::{LabeledSeries, SeriesSpec};
