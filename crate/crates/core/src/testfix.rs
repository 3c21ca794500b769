//! Fixture builders shared across this crate's unit tests.

use std::collections::HashMap;

use crate::criteria::JoiningCriterion;
use crate::ids::FaceId;
use crate::mesh::TetMesh;

/// Criterion driven by a per-face table of metric values, keyed by the
/// face's sorted vertex triple. Lets tests pin down label outcomes exactly.
pub(crate) struct TableCriterion {
    pub table: HashMap<[usize; 3], f64>,
    pub fallback: f64,
}

impl JoiningCriterion<f64> for TableCriterion {
    fn name(&self) -> &str {
        "table"
    }

    fn metric(&self, mesh: &TetMesh<f64>, face: FaceId) -> f64 {
        let key = mesh.face(face).vertices.map(|v| v.index());
        *self.table.get(&key).unwrap_or(&self.fallback)
    }
}

pub(crate) fn tri_key(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut k = [a, b, c];
    k.sort_unstable();
    k
}

/// Wheel of `m` tets around the vertical edge (0,1), ring vertices 2..m+2.
pub(crate) fn edge_fan_mesh(m: usize) -> TetMesh<f64> {
    let mut pos = vec![[0.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
    for i in 0..m {
        let theta = std::f64::consts::TAU * i as f64 / m as f64;
        pos.push([theta.cos(), theta.sin(), 0.5]);
    }
    let quads: Vec<[usize; 4]> = (0..m).map(|i| [0, 1, 2 + i, 2 + (i + 1) % m]).collect();
    TetMesh::build_from_tets(pos, &quads).unwrap()
}

/// Metric table making an `m`-wheel one region whose inner face (0,1,2) is a
/// barrier: tet 0 walks toward the terminal face (0,1,4) shared by tets 1
/// and 2, and the remaining tets walk back around the wheel toward it.
pub(crate) fn fan_criterion(m: usize) -> TableCriterion {
    assert!((4..=11).contains(&m), "table values stay above the fallback for m <= 11");
    let mut table = HashMap::new();
    table.insert(tri_key(0, 1, 2), 1.0); // largest of neither side: barrier
    table.insert(tri_key(0, 1, 3), 5.0); // largest of tet 0
    table.insert(tri_key(0, 1, 4), 10.0); // largest of tets 1 and 2: terminal
    for r in 5..m + 2 {
        // Decreasing toward the barrier so each remaining tet steps backward.
        table.insert(tri_key(0, 1, r), 10.0 - (r - 4) as f64);
    }
    TableCriterion { table, fallback: 0.1 }
}

/// Two tets where the shared face is the largest of exactly one of them.
pub(crate) fn one_sided_pair() -> TetMesh<f64> {
    TetMesh::build_from_tets(
        vec![
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, 1.0],
            [1.2, 1.2, 1.2],
        ],
        &[[0, 1, 2, 3], [1, 2, 3, 4]],
    )
    .unwrap()
}
