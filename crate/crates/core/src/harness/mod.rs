//! Generation, ingestion and sweeping of graph corpora, plus the builtin
//! sharpness instances.

pub mod figure1;
pub mod generate;
pub mod sweep;

use std::path::PathBuf;

use thiserror::Error;

use crate::graph::{Graph6Error, GraphError};

pub use figure1::{verify_figure1, Figure1Entry, Figure1Report};
pub use generate::{canonical_code, generate_all_graphs, GENERATE_MAX_N};
pub use sweep::{
    read_graph6_file, run_sweep, Certificate, Check, CheckCounts, Extremal, Filters, InputSource, SweepConfig,
    SweepReport,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("exhaustive generation is limited to n <= {GENERATE_MAX_N}, got {0}")]
    GenerateTooLarge(usize),
    #[error("{path}:{line}: {source}")]
    Parse {
        path: PathBuf,
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("a sweep needs at least one check")]
    NoChecks,
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
