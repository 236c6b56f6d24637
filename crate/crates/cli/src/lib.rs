//! Command-line front end: graph6 I/O, the verification suites and their
//! JSON reports.

pub mod graph6;
pub mod report;
pub mod suites;

pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use report::{CaseOutcome, CaseRecord, VerifyReport};
pub use suites::{Suite, SuiteConfig, DEFAULT_CONFIG};
