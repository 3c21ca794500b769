//! Traversal phase: grow one polyhedron per seed, bounded by frontier-faces.
//!
//! The depth-first search crosses every non-frontier face (internal faces and
//! interior terminal faces both connect tets of the same region) and records
//! every frontier face it meets, once per incident region tet. A frontier
//! face lying strictly inside a region therefore shows up twice, which is
//! exactly the duplicate the repair phase looks for.
//!
//! [`lfpp`] / [`regions_by_lfpp`] re-derive the same partition by following
//! largest faces directly, independent of the DFS, and serve as its oracle.

use std::collections::BTreeMap;

use crate::ids::{FaceId, TetId};
use crate::labeling::FaceLabels;
use crate::mesh::TetMesh;
use crate::scalar::Real;

/// One output cell: the tets merged into it and its boundary faces.
///
/// `faces` may contain duplicates until the repair phase runs; `simple` is
/// true iff it does not.
#[derive(Debug, Clone)]
pub struct Polyhedron {
    pub id: usize,
    /// Terminal face of the region this cell was grown from.
    pub terminal_face: FaceId,
    pub tets: Vec<TetId>,
    pub faces: Vec<FaceId>,
    pub simple: bool,
}

impl Polyhedron {
    pub fn is_single_tet(&self) -> bool {
        self.tets.len() == 1
    }

    /// Distinct faces recorded twice, ascending. Empty iff the cell is simple.
    pub fn duplicate_faces(&self) -> Vec<FaceId> {
        let mut sorted = self.faces.clone();
        sorted.sort_unstable();
        let mut dups = Vec::new();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] && dups.last() != Some(&pair[0]) {
                dups.push(pair[0]);
            }
        }
        dups
    }

    pub(crate) fn rescan_simple(&mut self) {
        self.simple = self.duplicate_faces().is_empty();
    }
}

/// Polyhedral mesh over the input vertex set.
#[derive(Debug, Clone)]
pub struct PolyMesh {
    pub polyhedra: Vec<Polyhedron>,
    /// Faces of the output mesh, indexed by input face id.
    pub frontier: Vec<bool>,
}

impl PolyMesh {
    pub fn len(&self) -> usize {
        self.polyhedra.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polyhedra.is_empty()
    }

    pub fn frontier_face_count(&self) -> usize {
        self.frontier.iter().filter(|&&b| b).count()
    }
}

/// Grow the polyhedron of `seed`'s region, marking its tets in `visited`.
///
/// Uses an explicit stack; recursion depth would otherwise grow with region
/// size. Neighbors are expanded in local face order, so the output is
/// independent of how seeds are scheduled.
pub fn build_polyhedron<S: Real>(
    mesh: &TetMesh<S>,
    labels: &FaceLabels,
    seed: TetId,
    visited: &mut [bool],
) -> Polyhedron {
    debug_assert!(!visited[seed.index()]);
    let mut tets = Vec::new();
    let mut faces = Vec::new();
    let mut stack = vec![seed];
    visited[seed.index()] = true;
    while let Some(t) = stack.pop() {
        tets.push(t);
        let tet = mesh.tet(t);
        for k in 0..4 {
            let f = tet.faces[k];
            if labels.is_frontier(f) {
                faces.push(f);
            } else {
                let n = tet.neighbors[k]
                    .expect("non-frontier faces are interior: border faces are always frontier");
                if !visited[n.index()] {
                    visited[n.index()] = true;
                    stack.push(n);
                }
            }
        }
    }
    let mut poly =
        Polyhedron { id: 0, terminal_face: labels.largest_of(seed), tets, faces, simple: true };
    poly.rescan_simple();
    poly
}

/// Convert every region into a polyhedron, ordered by terminal face id.
///
/// Panics if the regions fail to partition the mesh, which would indicate a
/// labeling bug rather than bad input.
pub fn traverse_all<S: Real>(mesh: &TetMesh<S>, labels: &FaceLabels) -> PolyMesh {
    let mut visited = vec![false; mesh.num_tets()];
    let mut polyhedra = Vec::with_capacity(labels.seeds().len());
    for &(terminal, seed) in labels.seeds() {
        assert!(
            !visited[seed.index()],
            "seed tet {seed} already claimed: region has two terminal faces"
        );
        let mut poly = build_polyhedron(mesh, labels, seed, &mut visited);
        debug_assert_eq!(poly.terminal_face, terminal);
        poly.id = polyhedra.len();
        polyhedra.push(poly);
    }
    assert!(
        visited.iter().all(|&v| v),
        "every tet must belong to exactly one region"
    );
    PolyMesh { polyhedra, frontier: labels.frontier_bits().to_vec() }
}

/// Largest-face propagation path of `t`: the tets visited by repeatedly
/// stepping through the current tet's largest face, stopping before a
/// terminal face is crossed.
pub fn lfpp<S: Real>(mesh: &TetMesh<S>, labels: &FaceLabels, t: TetId) -> Vec<TetId> {
    let mut path = vec![t];
    let mut current = t;
    loop {
        let f = labels.largest_of(current);
        if labels.is_terminal(f) {
            break;
        }
        let Some(next) = mesh.face(f).other_tet(current) else {
            // A largest border face is terminal by construction, so the path
            // cannot actually leave the mesh; stop defensively anyway.
            break;
        };
        current = next;
        path.push(current);
        assert!(path.len() <= mesh.num_tets(), "largest-face path must not cycle");
    }
    path
}

/// Group all tets by the terminal face their propagation path ends at.
///
/// This is a direct reading of the region definition and intentionally does
/// not share code with the DFS; the two must agree on every mesh.
pub fn regions_by_lfpp<S: Real>(
    mesh: &TetMesh<S>,
    labels: &FaceLabels,
) -> BTreeMap<FaceId, Vec<TetId>> {
    let mut regions: BTreeMap<FaceId, Vec<TetId>> = BTreeMap::new();
    for i in 0..mesh.num_tets() {
        let t = TetId::new(i);
        let path = lfpp(mesh, labels, t);
        let last = *path.last().unwrap();
        let terminal = labels.largest_of(last);
        debug_assert!(labels.is_terminal(terminal));
        regions.entry(terminal).or_default().push(t);
    }
    regions
}
