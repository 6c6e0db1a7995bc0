//! Workbench on top of `artin-core`: JSON input bundles, a rayon-backed prime
//! mapper, text and structured reports, and the `artin` command line.

pub mod bundle;
pub mod cli;
pub mod parallel;
pub mod report;
