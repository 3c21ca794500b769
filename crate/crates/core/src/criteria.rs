//! Joining criteria: rank a tet's four faces and pick the unique largest one.

use crate::ids::{FaceId, TetId};
use crate::mesh::TetMesh;
use crate::scalar::Real;

/// A metric over faces used to rank the four faces of a tetrahedron.
///
/// Implementations must be pure functions of the face geometry. Two metric
/// values within the relative tie epsilon are considered equal and fall back
/// to the smallest-FaceId rule, so the resulting ranking is a total order.
pub trait JoiningCriterion<S: Real>: Sync {
    fn name(&self) -> &str;
    fn metric(&self, mesh: &TetMesh<S>, face: FaceId) -> S;
}

/// Rank by triangle area.
pub struct MaxArea;

impl<S: Real> JoiningCriterion<S> for MaxArea {
    fn name(&self) -> &str {
        "area"
    }

    fn metric(&self, mesh: &TetMesh<S>, face: FaceId) -> S {
        mesh.face_area(face)
    }
}

/// Rank by in-circle radius.
pub struct MaxIncircle;

impl<S: Real> JoiningCriterion<S> for MaxIncircle {
    fn name(&self) -> &str {
        "incircle"
    }

    fn metric(&self, mesh: &TetMesh<S>, face: FaceId) -> S {
        mesh.face_incircle_radius(face)
    }
}

/// Names accepted by [`builtin`], in CLI order.
pub const BUILTIN_CRITERIA: &[&str] = &["area", "incircle"];

/// Look up a built-in criterion by name.
pub fn builtin<S: Real>(name: &str) -> Option<Box<dyn JoiningCriterion<S>>> {
    match name {
        "area" => Some(Box::new(MaxArea)),
        "incircle" => Some(Box::new(MaxIncircle)),
        _ => None,
    }
}

/// Default relative epsilon under which two metric values tie.
pub fn default_tie_epsilon<S: Real>() -> S {
    S::from_f64(1e-9).unwrap()
}

#[inline]
fn ties<S: Real>(a: S, b: S, eps: S) -> bool {
    (a - b).abs() <= eps * a.abs().max(b.abs())
}

/// The four faces of `t` ordered from largest to smallest under `criterion`.
///
/// Metrics within `tie_epsilon` (relative) are grouped and ordered by
/// ascending FaceId inside the group, which pins down the "arbitrary" choice
/// for meshes whose points are not in general position.
pub fn rank_faces<S: Real>(
    mesh: &TetMesh<S>,
    t: TetId,
    criterion: &dyn JoiningCriterion<S>,
    tie_epsilon: S,
) -> [FaceId; 4] {
    let mut ranked: [(S, FaceId); 4] =
        mesh.tet(t).faces.map(|f| (criterion.metric(mesh, f), f));
    ranked.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("face metrics must not be NaN"));

    // Re-sort each epsilon-tied run by face id.
    let mut start = 0;
    for i in 1..=4 {
        if i == 4 || !ties(ranked[start].0, ranked[i].0, tie_epsilon) {
            ranked[start..i].sort_by_key(|&(_, f)| f);
            start = i;
        }
    }
    ranked.map(|(_, f)| f)
}

/// The unique largest face of `t` under `criterion`.
pub fn largest_face<S: Real>(
    mesh: &TetMesh<S>,
    t: TetId,
    criterion: &dyn JoiningCriterion<S>,
    tie_epsilon: S,
) -> FaceId {
    rank_faces(mesh, t, criterion, tie_epsilon)[0]
}
