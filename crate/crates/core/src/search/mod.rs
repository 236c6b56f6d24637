//! Desk-scale ground truth: exhaustive enumeration, exact Turán numbers of
//! small orders, saturation probes, randomized lower bounds, and checks of
//! the symmetric-block decomposition structure.

pub mod enumerate;
pub mod saturation;
pub mod structure;
pub mod turan;

pub use enumerate::{all_graphs, enumerate_filtered, Enumeration, Verdict, ENUMERATION_CAP};
pub use saturation::{saturation_report, EdgeProbe, EdgeSample, ProbeOutcome, SaturationReport};
pub use structure::{dnpr_check, symmetric_check, Decomposition, SymmetryWitness, DNPR_EXCEPTIONAL_CAP, DNPR_ORDER_CAP};
pub use turan::{
    ex_bruteforce, ex_bruteforce_with, random_maximal_lowerbound, RandomLowerBound, TuranResult, EX_BRUTEFORCE_CAP,
};
