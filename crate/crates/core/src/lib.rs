//! Polyhedral mesh generation from tetrahedral meshes.
//!
//! Tetrahedra are merged along a largest-face relation: a joining criterion
//! ranks each tet's four faces, faces that are largest on both sides become
//! terminal, and everything whose propagation path reaches the same terminal
//! face is fused into one polyhedral cell. The pipeline has three phases:
//!
//! 1. **label** ([`labeling::label`]) computes largest faces, frontier bits
//!    and one seed tet per region;
//! 2. **traverse** ([`traversal::traverse_all`]) grows one polyhedron per
//!    seed with a DFS bounded by frontier faces;
//! 3. **repair** ([`repair::repair_all`]) splits or dissolves cells whose
//!    face list contains duplicates, so every output cell is simple.
//!
//! ```
//! use polytet::{convert, criteria, io, RepairMode, TetMeshF64};
//!
//! let (positions, quads) = io::generate_kuhn_grid(4, 1.0);
//! let mesh = TetMeshF64::build_from_tets(positions, &quads).unwrap();
//! let crit = criteria::MaxArea;
//! let eps = criteria::default_tie_epsilon();
//! let out = convert(&mesh, &crit, eps, RepairMode::Split);
//! assert!(out.repaired.polyhedra.iter().all(|p| p.simple));
//! assert!(out.repaired.len() < mesh.num_tets());
//! ```

pub mod criteria;
pub mod ids;
pub mod io;
pub mod labeling;
pub mod mesh;
pub mod metrics;
pub mod repair;
pub mod scalar;
pub mod traversal;

pub(crate) mod vec3;

#[cfg(test)]
pub(crate) mod testfix;

pub use criteria::JoiningCriterion;
pub use ids::{EdgeId, FaceId, TetId, VertexId};
pub use labeling::{FaceClass, FaceLabels};
pub use mesh::{MeshError, TetMesh};
pub use metrics::{DualCounts, StatsRecord, SummaryRecord};
pub use repair::RepairMode;
pub use scalar::Real;
pub use traversal::{PolyMesh, Polyhedron};

/// Double-precision mesh, the default for file I/O and the CLI.
pub type TetMeshF64 = TetMesh<f64>;
/// Single-precision mesh.
pub type TetMeshF32 = TetMesh<f32>;

/// Everything a full conversion run produces.
pub struct ConversionOutcome {
    /// Final labeling, including faces promoted or dropped by repair.
    pub labels: FaceLabels,
    /// Raw traversal output; barrier statistics are measured on this.
    pub raw: PolyMesh,
    /// Output after repair.
    pub repaired: PolyMesh,
}

/// Run label, traversal and repair in one call.
pub fn convert<S: Real>(
    mesh: &TetMesh<S>,
    criterion: &dyn JoiningCriterion<S>,
    tie_epsilon: S,
    mode: RepairMode,
) -> ConversionOutcome {
    let mut labels = labeling::label(mesh, criterion, tie_epsilon);
    let raw = traversal::traverse_all(mesh, &labels);
    let repaired = repair::repair_all(mesh, &mut labels, &raw, mode);
    ConversionOutcome { labels, raw, repaired }
}
