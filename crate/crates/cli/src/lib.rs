//! Library side of the `pcseg` command: run descriptions, reports, the
//! benchmark ladder and the self-test.

mod bench;
mod error;
mod run;
mod selftest;

pub use bench::{bench, format_tsv, ladder, BenchRow, BenchSpec};
pub use error::{CliError, ErrorEnvelope, ErrorReport};
pub use run::{
    digest, run, ConfigEcho, Counters, GenSpec, InputDigest, ResultBody, RunReport, RunSpec,
    Source, Timing,
};
pub use selftest::{selftest, Check};
