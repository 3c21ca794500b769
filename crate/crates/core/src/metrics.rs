//! Run statistics and the combinatorial Voronoi-dual comparison.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ids::FaceId;
use crate::labeling::FaceLabels;
use crate::mesh::TetMesh;
use crate::scalar::Real;
use crate::traversal::PolyMesh;

/// One row of run statistics.
///
/// Counts describe the input mesh and the raw traversal output: barrier
/// numbers only exist before repair, so `P` and the per-cell aggregates are
/// measured on the pre-repair polyhedra while `F_out` reflects the frontier
/// bitvector as handed in (i.e. after repair when repair ran).
/// `P_repaired` carries the post-repair cell count when known.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsRecord {
    #[serde(rename = "V")]
    pub vertices: u64,
    #[serde(rename = "F")]
    pub faces: u64,
    #[serde(rename = "T")]
    pub tets: u64,
    #[serde(rename = "E")]
    pub edges: u64,
    #[serde(rename = "P")]
    pub polyhedra: u64,
    pub barrier_faces: u64,
    pub polys_with_barriers: u64,
    /// Polyhedra that are still single tetrahedra.
    pub poly_tetras: u64,
    pub max_tetras: u64,
    /// Exact tets-per-polyhedron ratio; `avg_tetras * P == T`.
    pub avg_tetras: f64,
    #[serde(rename = "F_out")]
    pub frontier_faces: u64,
    pub time_ms: f64,
    #[serde(rename = "P_repaired", skip_serializing_if = "Option::is_none", default)]
    pub polyhedra_after_repair: Option<u64>,
}

impl StatsRecord {
    pub fn reduction_fraction(&self) -> f64 {
        1.0 - self.polyhedra as f64 / self.tets as f64
    }
}

/// Means over a batch of runs, percentages in `[0, 100]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRecord {
    /// Mean of `1 - P/T`, as a percentage: tetrahedra removed by merging.
    pub reduction_pct: f64,
    /// Mean of `T/P`, rounded to one decimal.
    pub avg_tetras: f64,
    /// Mean share of polyhedra containing barrier faces, as a percentage.
    pub barriers_pct: f64,
    /// Mean share of polyhedra that remain single tets, as a percentage.
    pub tetra_retention_pct: f64,
}

#[derive(Debug, Error)]
pub enum SummaryError {
    #[error("cannot summarize an empty record list")]
    Empty,
}

/// Collect the statistics row for one run.
///
/// `output` must be the raw traversal output (pre-repair); `labels` should be
/// the final labeling so `F_out` counts the faces of the delivered mesh.
pub fn collect_stats<S: Real>(
    input: &TetMesh<S>,
    output: &PolyMesh,
    labels: &FaceLabels,
    time_ms: f64,
) -> StatsRecord {
    let mut barrier_faces = 0u64;
    let mut polys_with_barriers = 0u64;
    let mut poly_tetras = 0u64;
    let mut max_tetras = 0u64;
    for poly in &output.polyhedra {
        let dups = poly.duplicate_faces().len() as u64;
        barrier_faces += dups;
        if dups > 0 {
            polys_with_barriers += 1;
        }
        if poly.is_single_tet() {
            poly_tetras += 1;
        }
        max_tetras = max_tetras.max(poly.tets.len() as u64);
    }
    let polyhedra = output.len() as u64;
    StatsRecord {
        vertices: input.num_vertices() as u64,
        faces: input.num_faces() as u64,
        tets: input.num_tets() as u64,
        edges: input.num_edges() as u64,
        polyhedra,
        barrier_faces,
        polys_with_barriers,
        poly_tetras,
        max_tetras,
        avg_tetras: input.num_tets() as f64 / polyhedra as f64,
        frontier_faces: labels.frontier_count() as u64,
        time_ms,
        polyhedra_after_repair: None,
    }
}

/// Aggregate a batch of records into the summary means.
pub fn summarize(records: &[StatsRecord]) -> Result<SummaryRecord, SummaryError> {
    if records.is_empty() {
        return Err(SummaryError::Empty);
    }
    let n = records.len() as f64;
    let mean = |f: &dyn Fn(&StatsRecord) -> f64| records.iter().map(|r| f(r)).sum::<f64>() / n;
    let avg = mean(&|r| r.tets as f64 / r.polyhedra as f64);
    Ok(SummaryRecord {
        reduction_pct: mean(&|r| r.reduction_fraction()) * 100.0,
        avg_tetras: (avg * 10.0).round() / 10.0,
        barriers_pct: mean(&|r| r.polys_with_barriers as f64 / r.polyhedra as f64) * 100.0,
        tetra_retention_pct: mean(&|r| r.poly_tetras as f64 / r.polyhedra as f64) * 100.0,
    })
}

/// Element counts of the Voronoi diagram dual to a Delaunay tetrahedralization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualCounts {
    pub cells: u64,
    pub faces: u64,
    pub edges: u64,
    pub vertices: u64,
}

impl DualCounts {
    /// Pure relabeling: cell per vertex, face per edge, edge per face,
    /// vertex per tet. No circumcenters are computed.
    pub fn from_mesh_counts(vertices: u64, edges: u64, faces: u64, tets: u64) -> Self {
        Self { cells: vertices, faces: edges, edges: faces, vertices: tets }
    }
}

/// Dual element counts of `mesh`, assuming it is Delaunay.
pub fn voronoi_dual_counts<S: Real>(mesh: &TetMesh<S>) -> DualCounts {
    DualCounts::from_mesh_counts(
        mesh.num_vertices() as u64,
        mesh.num_edges() as u64,
        mesh.num_faces() as u64,
        mesh.num_tets() as u64,
    )
}

/// Count the distinct output-mesh faces used by `pm`'s polyhedra.
///
/// For a consistent run this equals `pm.frontier_face_count()`; it exists as
/// an independent cross-check for tests.
pub fn distinct_used_faces(pm: &PolyMesh) -> usize {
    let mut seen: HashSet<FaceId> = HashSet::new();
    for poly in &pm.polyhedra {
        seen.extend(poly.faces.iter().copied());
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{default_tie_epsilon, MaxArea};
    use crate::labeling::label;
    use crate::traversal::traverse_all;

    #[test]
    fn single_tet_stats() {
        let mesh = TetMesh::build_from_tets(
            vec![[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            &[[0, 1, 2, 3]],
        )
        .unwrap();
        let labels = label(&mesh, &MaxArea, default_tie_epsilon());
        let pm = traverse_all(&mesh, &labels);
        let rec = collect_stats(&mesh, &pm, &labels, 0.0);
        assert_eq!(rec.vertices, 4);
        assert_eq!(rec.faces, 4);
        assert_eq!(rec.tets, 1);
        assert_eq!(rec.edges, 6);
        assert_eq!(rec.polyhedra, 1);
        assert_eq!(rec.poly_tetras, 1);
        assert_eq!(rec.avg_tetras, 1.0);
        assert_eq!(rec.frontier_faces, 4);
        assert_eq!(rec.barrier_faces, 0);
    }

    #[test]
    fn frontier_count_matches_recount() {
        let (pos, quads) = crate::io::generate_kuhn_grid::<f64>(3, 1.0);
        let mesh = TetMesh::build_from_tets(pos, &quads).unwrap();
        let labels = label(&mesh, &MaxArea, default_tie_epsilon());
        let pm = traverse_all(&mesh, &labels);
        let rec = collect_stats(&mesh, &pm, &labels, 0.0);
        assert_eq!(rec.frontier_faces as usize, pm.frontier_face_count());
        assert_eq!(rec.frontier_faces as usize, distinct_used_faces(&pm));
        // avg_tetras * P == T exactly before rounding.
        assert_eq!((rec.avg_tetras * rec.polyhedra as f64).round() as u64, rec.tets);
    }

    #[test]
    fn summarize_single_record_with_no_merging() {
        let rec = StatsRecord {
            vertices: 4,
            faces: 4,
            tets: 10,
            edges: 6,
            polyhedra: 10,
            barrier_faces: 0,
            polys_with_barriers: 0,
            poly_tetras: 10,
            max_tetras: 1,
            avg_tetras: 1.0,
            frontier_faces: 4,
            time_ms: 0.0,
            polyhedra_after_repair: None,
        };
        let s = summarize(&[rec]).unwrap();
        assert_eq!(s.reduction_pct, 0.0);
        assert_eq!(s.avg_tetras, 1.0);
        assert_eq!(s.tetra_retention_pct, 100.0);
        assert!(summarize(&[]).is_err());
    }

    #[test]
    fn dual_counts_single_tet() {
        let mesh = TetMesh::build_from_tets(
            vec![[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            &[[0, 1, 2, 3]],
        )
        .unwrap();
        let dual = voronoi_dual_counts(&mesh);
        assert_eq!(dual, DualCounts { cells: 4, faces: 6, edges: 4, vertices: 1 });
    }
}
