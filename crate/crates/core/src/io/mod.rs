//! File formats and synthetic fixtures.
//!
//! * `.node`/`.ele` text pairs (TetGen interchange layout) for input;
//! * legacy-format unstructured-grid text output with polyhedron face
//!   streams;
//! * a JSON schema for [`StatsRecord`](crate::metrics::StatsRecord) lists;
//! * a deterministic structured tetrahedral grid generator.

mod kuhn;
mod node_ele;
mod stats;
mod vtk;

pub use kuhn::generate_kuhn_grid;
pub use node_ele::{load_node_ele, read_node_ele};
pub use stats::{read_stats_json, write_stats_json, write_stats_json_to};
pub use vtk::{write_polymesh_vtk, write_polymesh_vtk_to};

use thiserror::Error;

/// Errors from readers and writers in this module.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{file} file, line {line}: {message}")]
    Parse { file: &'static str, line: usize, message: String },
    #[error("polyhedron {polyhedron} is not simple; repair it before writing")]
    NotSimple { polyhedron: usize },
}

impl FormatError {
    pub(crate) fn parse(file: &'static str, line: usize, message: impl Into<String>) -> Self {
        Self::Parse { file, line, message: message.into() }
    }
}
