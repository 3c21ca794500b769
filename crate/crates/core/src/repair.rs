//! Repair phase: detect barrier tips and make every polyhedron simple.
//!
//! A frontier face recorded twice by the traversal lies strictly inside its
//! region (a barrier face) and leaves the cell without a closed boundary.
//! An edge of such a face is a *barrier tip* when exactly one frontier face
//! of the polyhedron is incident to it, every other incident face of the
//! region being internal.
//!
//! Split repair promotes, per tip, the middle internal face of the fan around
//! the tip edge to frontier and regrows the pieces from the two tets adjacent
//! to the promoted face. Dissolve repair simply drops both copies of every
//! duplicated face.

use std::collections::{HashMap, HashSet};
use std::str::FromStr;

use log::warn;

use crate::ids::{EdgeId, FaceId, TetId};
use crate::labeling::FaceLabels;
use crate::mesh::TetMesh;
use crate::scalar::Real;
use crate::traversal::{PolyMesh, Polyhedron};
use crate::vec3;

/// Barrier tip: an edge of a barrier face with its ordered internal fan.
#[derive(Debug, Clone)]
pub struct BarrierTip {
    pub edge: EdgeId,
    pub barrier_face: FaceId,
    /// Internal faces around `edge`, swept by rotation away from the barrier
    /// face; the middle one is promoted by the split repair.
    pub internal_fan: Vec<FaceId>,
}

/// How [`repair_all`] handles non-simple polyhedra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepairMode {
    /// Split along promoted internal faces until every cell is simple.
    Split,
    /// Remove both copies of every duplicated face.
    Dissolve,
    /// Leave cells untouched (raw traversal output, for statistics).
    None,
}

impl FromStr for RepairMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "split" => Ok(Self::Split),
            "dissolve" => Ok(Self::Dissolve),
            "none" => Ok(Self::None),
            other => Err(format!("unknown repair mode '{other}' (expected split|dissolve|none)")),
        }
    }
}

/// Splits nested deeper than this fall back to dissolving the cell.
pub const DEFAULT_MAX_SPLIT_DEPTH: usize = 32;

/// Find all barrier tips of `poly` per the counting test above.
///
/// Returns an empty list for simple polyhedra. Each tip carries the internal
/// fan around its edge, ordered by the dihedral sweep that starts at the
/// barrier face; the sweep direction follows the edge axis from its lower to
/// its higher vertex id.
pub fn find_barrier_tips<S: Real>(
    mesh: &TetMesh<S>,
    labels: &FaceLabels,
    poly: &Polyhedron,
) -> Vec<BarrierTip> {
    let barriers = poly.duplicate_faces();
    if barriers.is_empty() {
        return Vec::new();
    }
    let frontier_set: HashSet<FaceId> = poly.faces.iter().copied().collect();
    let region: HashSet<TetId> = poly.tets.iter().copied().collect();
    let in_region = |f: FaceId| mesh.face(f).incident_tets().any(|t| region.contains(&t));

    let mut tips = Vec::new();
    for &barrier in &barriers {
        for edge in mesh.face(barrier).edges {
            let incident_frontier = mesh
                .edge(edge)
                .faces
                .iter()
                .filter(|f| frontier_set.contains(f))
                .count();
            if incident_frontier != 1 {
                continue;
            }
            let mut fan: Vec<FaceId> = mesh
                .edge(edge)
                .faces
                .iter()
                .copied()
                .filter(|&f| f != barrier && in_region(f))
                .collect();
            debug_assert!(fan.iter().all(|&f| !labels.is_frontier(f)));
            order_fan_by_rotation(mesh, edge, barrier, &mut fan);
            tips.push(BarrierTip { edge, barrier_face: barrier, internal_fan: fan });
        }
    }
    tips
}

/// Sort `fan` by rotation angle about `edge`, measured from `barrier`.
fn order_fan_by_rotation<S: Real>(
    mesh: &TetMesh<S>,
    edge: EdgeId,
    barrier: FaceId,
    fan: &mut [FaceId],
) {
    let [p, q] = mesh.edge(edge).vertices.map(|v| mesh.position(v));
    let axis = vec3::normalize(vec3::sub(q, p));
    let radial = |f: FaceId| {
        let w = mesh.position(mesh.face_vertex_opposite_edge(f, edge));
        let d = vec3::sub(w, p);
        let along = vec3::dot(d, axis);
        vec3::normalize([
            d[0] - along * axis[0],
            d[1] - along * axis[1],
            d[2] - along * axis[2],
        ])
    };
    let r0 = radial(barrier);
    let s = vec3::cross(axis, r0);
    let angle = |f: FaceId| {
        let d = radial(f);
        let theta = vec3::dot(d, s).atan2(vec3::dot(d, r0));
        if theta < S::zero() {
            theta + S::from_f64(std::f64::consts::TAU).unwrap()
        } else {
            theta
        }
    };
    fan.sort_by(|&a, &b| {
        angle(a)
            .partial_cmp(&angle(b))
            .expect("fan angles must not be NaN")
            .then(a.cmp(&b))
    });
}

/// Split a non-simple polyhedron along its tips.
///
/// For every tip the middle internal face of its fan is promoted to frontier
/// in `labels`, then the region is regrown from the not-yet-used tets
/// adjacent to promoted faces. The children's tet sets partition `poly`'s;
/// children are not guaranteed simple and may need further rounds.
pub fn split_polyhedron<S: Real>(
    mesh: &TetMesh<S>,
    labels: &mut FaceLabels,
    poly: &Polyhedron,
    tips: &[BarrierTip],
) -> Vec<Polyhedron> {
    if tips.is_empty() {
        return vec![poly.clone()];
    }
    let region: HashSet<TetId> = poly.tets.iter().copied().collect();

    let mut sub_seeds: Vec<TetId> = Vec::new();
    let mut usable: HashSet<TetId> = HashSet::new();
    for tip in tips {
        debug_assert!(!tip.internal_fan.is_empty());
        let middle = tip.internal_fan[tip.internal_fan.len() / 2];
        labels.set_frontier(middle);
        for t in mesh.face(middle).incident_tets() {
            debug_assert!(region.contains(&t));
            sub_seeds.push(t);
            usable.insert(t);
        }
    }

    let mut children = Vec::new();
    for &seed in &sub_seeds {
        if !usable.contains(&seed) {
            continue;
        }
        let child = grow_within_region(mesh, labels, seed, &region, poly.terminal_face);
        for t in &child.tets {
            usable.remove(t);
        }
        children.push(child);
    }

    let covered: usize = children.iter().map(|c| c.tets.len()).sum();
    assert_eq!(covered, poly.tets.len(), "split children must partition the region");
    children
}

/// DFS bounded by the current frontier bits, restricted to `region`.
fn grow_within_region<S: Real>(
    mesh: &TetMesh<S>,
    labels: &FaceLabels,
    seed: TetId,
    region: &HashSet<TetId>,
    terminal_face: FaceId,
) -> Polyhedron {
    let mut visited: HashSet<TetId> = HashSet::new();
    let mut stack = vec![seed];
    visited.insert(seed);
    let mut tets = Vec::new();
    let mut faces = Vec::new();
    while let Some(t) = stack.pop() {
        tets.push(t);
        let tet = mesh.tet(t);
        for k in 0..4 {
            let f = tet.faces[k];
            if labels.is_frontier(f) {
                faces.push(f);
            } else {
                let n = tet.neighbors[k].expect("non-frontier faces are interior");
                debug_assert!(region.contains(&n));
                if region.contains(&n) && visited.insert(n) {
                    stack.push(n);
                }
            }
        }
    }
    let mut poly = Polyhedron { id: 0, terminal_face, tets, faces, simple: true };
    poly.rescan_simple();
    poly
}

/// Remove both copies of every duplicated face; tets are untouched.
pub fn dissolve_barriers(poly: &Polyhedron) -> Polyhedron {
    let mut mult: HashMap<FaceId, u32> = HashMap::new();
    for &f in &poly.faces {
        *mult.entry(f).or_insert(0) += 1;
    }
    let faces: Vec<FaceId> = poly.faces.iter().copied().filter(|f| mult[f] < 2).collect();
    let mut out = Polyhedron {
        id: poly.id,
        terminal_face: poly.terminal_face,
        tets: poly.tets.clone(),
        faces,
        simple: true,
    };
    out.rescan_simple();
    debug_assert!(out.simple, "faces have at most two incident tets");
    out
}

/// Repair every polyhedron of `pm` under `mode`, with the default split
/// depth bound.
///
/// All modes preserve the tet partition. Split and dissolve leave every
/// output cell simple; dissolved barrier faces are also dropped from the
/// frontier bitvector so the output face count stays consistent.
pub fn repair_all<S: Real>(
    mesh: &TetMesh<S>,
    labels: &mut FaceLabels,
    pm: &PolyMesh,
    mode: RepairMode,
) -> PolyMesh {
    repair_all_with_depth(mesh, labels, pm, mode, DEFAULT_MAX_SPLIT_DEPTH)
}

/// [`repair_all`] with an explicit split recursion bound.
pub fn repair_all_with_depth<S: Real>(
    mesh: &TetMesh<S>,
    labels: &mut FaceLabels,
    pm: &PolyMesh,
    mode: RepairMode,
    max_split_depth: usize,
) -> PolyMesh {
    let mut out: Vec<Polyhedron> = Vec::with_capacity(pm.polyhedra.len());
    for poly in &pm.polyhedra {
        match mode {
            RepairMode::None => out.push(poly.clone()),
            RepairMode::Dissolve => {
                if poly.simple {
                    out.push(poly.clone());
                } else {
                    out.push(dissolve_with_labels(labels, poly));
                }
            }
            RepairMode::Split => {
                let mut pending = vec![(poly.clone(), 0usize)];
                while let Some((p, depth)) = pending.pop() {
                    if p.simple {
                        out.push(p);
                        continue;
                    }
                    if depth >= max_split_depth {
                        warn!(
                            "polyhedron {} exceeded split depth {max_split_depth}; dissolving",
                            poly.id
                        );
                        out.push(dissolve_with_labels(labels, &p));
                        continue;
                    }
                    let tips = find_barrier_tips(mesh, labels, &p);
                    if tips.is_empty() {
                        // Duplicates without an edge tip (e.g. a vertex-pinched
                        // region) cannot be split; fall back to dissolving.
                        warn!(
                            "polyhedron {} has barrier faces but no tips; dissolving",
                            poly.id
                        );
                        out.push(dissolve_with_labels(labels, &p));
                        continue;
                    }
                    for child in split_polyhedron(mesh, labels, &p, &tips) {
                        pending.push((child, depth + 1));
                    }
                }
            }
        }
    }
    for (i, poly) in out.iter_mut().enumerate() {
        poly.id = i;
        poly.rescan_simple();
    }
    PolyMesh { polyhedra: out, frontier: labels.frontier_bits().to_vec() }
}

fn dissolve_with_labels(labels: &mut FaceLabels, poly: &Polyhedron) -> Polyhedron {
    for f in poly.duplicate_faces() {
        labels.clear_frontier(f);
    }
    dissolve_barriers(poly)
}
