//! Configuration, suite orchestration and report emission.

pub mod config;
pub mod report;
pub mod run;
pub mod sample;

pub use config::{Config, ConfigError, Suite};
pub use report::{Category, CheckEntry, CheckReport, Verdict};
pub use run::{export_csv, fit_relations, run, RunError, OPERATOR_NAMES};
pub use sample::{SampleError, Sampler};
