//! Label phase: largest faces, frontier-face bits, and seed tetrahedra.
//!
//! For every face the phase decides whether it survives into the output mesh
//! (frontier) and whether it terminates a merge region (terminal):
//!
//! * a face is *frontier* iff it is a border face, or the largest face of
//!   neither incident tet;
//! * a face is *terminal* iff it is the largest face of both incident tets,
//!   or a border face that is the largest face of its single tet;
//! * each terminal face gets exactly one *seed* tet: the smaller-id incident
//!   tet for interior terminal faces, the unique tet for border ones.
//!
//! Border terminal faces are therefore both terminal and frontier, while
//! interior terminal faces are never frontier.

use rayon::prelude::*;

use crate::criteria::{largest_face, JoiningCriterion};
use crate::ids::{FaceId, TetId};
use crate::mesh::TetMesh;
use crate::scalar::Real;

/// Coarse face classification; `Internal` iff not frontier.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FaceClass {
    Frontier,
    Internal,
}

/// Output of the label phase.
#[derive(Debug, Clone)]
pub struct FaceLabels {
    largest_of_tet: Vec<FaceId>,
    frontier: Vec<bool>,
    terminal: Vec<bool>,
    seeds: Vec<(FaceId, TetId)>,
}

impl FaceLabels {
    /// The largest face of tet `t` under the criterion used to label.
    #[inline]
    pub fn largest_of(&self, t: TetId) -> FaceId {
        self.largest_of_tet[t.index()]
    }

    #[inline]
    pub fn is_frontier(&self, f: FaceId) -> bool {
        self.frontier[f.index()]
    }

    #[inline]
    pub fn is_terminal(&self, f: FaceId) -> bool {
        self.terminal[f.index()]
    }

    /// Promote `f` to frontier (used when splitting non-simple polyhedra).
    #[inline]
    pub(crate) fn set_frontier(&mut self, f: FaceId) {
        self.frontier[f.index()] = true;
    }

    /// Drop `f` from the frontier (used when dissolving barrier faces).
    #[inline]
    pub(crate) fn clear_frontier(&mut self, f: FaceId) {
        self.frontier[f.index()] = false;
    }

    /// One `(terminal face, seed tet)` entry per region, ascending by face id.
    #[inline]
    pub fn seeds(&self) -> &[(FaceId, TetId)] {
        &self.seeds
    }

    /// Total classification of a face: frontier/internal plus terminal flag.
    pub fn classify(&self, f: FaceId) -> (FaceClass, bool) {
        let class = if self.is_frontier(f) { FaceClass::Frontier } else { FaceClass::Internal };
        (class, self.is_terminal(f))
    }

    /// Number of faces currently marked frontier.
    pub fn frontier_count(&self) -> usize {
        self.frontier.iter().filter(|&&b| b).count()
    }

    /// Frontier bitvector, indexed by face id.
    pub fn frontier_bits(&self) -> &[bool] {
        &self.frontier
    }
}

/// Run the label phase over the whole mesh.
pub fn label<S: Real>(
    mesh: &TetMesh<S>,
    criterion: &dyn JoiningCriterion<S>,
    tie_epsilon: S,
) -> FaceLabels {
    // Largest-face pass; independent per tet.
    let largest_of_tet: Vec<FaceId> = (0..mesh.num_tets())
        .into_par_iter()
        .map(|i| largest_face(mesh, TetId::new(i), criterion, tie_epsilon))
        .collect();

    let is_largest_of =
        |t: TetId, f: FaceId| largest_of_tet[t.index()] == f;

    let mut frontier = vec![false; mesh.num_faces()];
    let mut terminal = vec![false; mesh.num_faces()];
    let mut seeds = Vec::new();
    for (f, face) in mesh.faces() {
        match face.tets {
            [Some(t), None] => {
                frontier[f.index()] = true;
                if is_largest_of(t, f) {
                    terminal[f.index()] = true;
                    seeds.push((f, t));
                }
            }
            [Some(t1), Some(t2)] => {
                let l1 = is_largest_of(t1, f);
                let l2 = is_largest_of(t2, f);
                if !l1 && !l2 {
                    frontier[f.index()] = true;
                } else if l1 && l2 {
                    terminal[f.index()] = true;
                    seeds.push((f, t1.min(t2)));
                }
            }
            _ => unreachable!("slot 0 of face.tets is always set"),
        }
    }

    FaceLabels { largest_of_tet, frontier, terminal, seeds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{default_tie_epsilon, MaxArea};

    fn label_area(mesh: &TetMesh<f64>) -> FaceLabels {
        label(mesh, &MaxArea, default_tie_epsilon())
    }

    #[test]
    fn single_tet_all_frontier_one_seed() {
        let mesh = TetMesh::build_from_tets(
            vec![[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            &[[0, 1, 2, 3]],
        )
        .unwrap();
        let labels = label_area(&mesh);
        for (f, _) in mesh.faces() {
            assert!(labels.is_frontier(f));
        }
        assert_eq!(labels.seeds().len(), 1);
        let (f, t) = labels.seeds()[0];
        assert_eq!(t, TetId::new(0));
        assert!(labels.is_terminal(f));
        assert_eq!(f, labels.largest_of(t));
    }

    /// Three tets: t0-t1 share the largest face of both (terminal), t0-t2
    /// share a face that is the largest of neither (frontier).
    fn three_tet_chain() -> TetMesh<f64> {
        TetMesh::build_from_tets(
            vec![
                [0.0, 0.0, 0.0],   // A
                [4.0, 0.0, 0.0],   // B
                [2.0, 3.0, 0.0],   // C
                [2.0, 0.8, 1.0],   // D
                [2.0, 1.0, -1.0],  // E
                [2.0, 0.8, 2.5],   // F
            ],
            // t0 = ABCD, t1 = ABCE (shares ABC), t2 = ABDF (shares ABD)
            &[[0, 1, 2, 3], [0, 1, 2, 4], [0, 1, 3, 5]],
        )
        .unwrap()
    }

    fn face_of(mesh: &TetMesh<f64>, verts: [usize; 3]) -> FaceId {
        let mut key = verts;
        key.sort_unstable();
        mesh.faces()
            .find(|(_, face)| face.vertices.map(|v| v.index()) == key)
            .map(|(f, _)| f)
            .unwrap()
    }

    #[test]
    fn chain_labels_terminal_and_frontier() {
        let mesh = three_tet_chain();
        // Confirm the intended area ordering straight from coordinates.
        let abc = face_of(&mesh, [0, 1, 2]);
        let abd = face_of(&mesh, [0, 1, 3]);
        for t in [TetId::new(0), TetId::new(1)] {
            for f in mesh.tet(t).faces {
                if f != abc {
                    assert!(mesh.face_area(f) < mesh.face_area(abc));
                }
            }
        }
        for t in [TetId::new(0), TetId::new(2)] {
            assert_ne!(
                crate::criteria::largest_face(&mesh, t, &MaxArea, default_tie_epsilon()),
                abd
            );
        }

        let labels = label_area(&mesh);
        assert!(labels.is_terminal(abc));
        assert!(!labels.is_frontier(abc));
        assert_eq!(labels.classify(abc), (FaceClass::Internal, true));
        assert!(labels.is_frontier(abd));
        assert!(!labels.is_terminal(abd));
        assert_eq!(labels.classify(abd), (FaceClass::Frontier, false));
        // Interior terminal seed is the smaller incident tet id.
        assert!(labels.seeds().contains(&(abc, TetId::new(0))));
    }

    /// Two tets whose shared face is the largest of both.
    fn terminal_pair() -> TetMesh<f64> {
        let d = 0.2 + 1.0 / 3.0;
        TetMesh::build_from_tets(
            vec![
                [0.0, 0.0, 0.0],
                [1.0, 0.0, 0.0],
                [0.0, 1.0, 0.0],
                [0.0, 0.0, 1.0],
                [d, d, d],
            ],
            &[[0, 1, 2, 3], [1, 2, 3, 4]],
        )
        .unwrap()
    }

    #[test]
    fn shared_largest_face_is_terminal_non_frontier() {
        let mesh = terminal_pair();
        let shared = face_of(&mesh, [1, 2, 3]);
        let labels = label_area(&mesh);
        assert!(labels.is_terminal(shared));
        assert!(!labels.is_frontier(shared));
        let borders: Vec<FaceId> =
            mesh.faces().filter(|(_, f)| f.is_border()).map(|(f, _)| f).collect();
        assert_eq!(borders.len(), 6);
        for f in borders {
            assert!(labels.is_frontier(f));
        }
        assert_eq!(labels.seeds(), &[(shared, TetId::new(0))]);
    }

    #[test]
    fn one_sided_largest_is_internal_non_terminal() {
        let mesh = crate::testfix::one_sided_pair();
        let shared = face_of(&mesh, [1, 2, 3]);
        let labels = label_area(&mesh);
        assert_eq!(labels.largest_of(TetId::new(0)), shared);
        assert_ne!(labels.largest_of(TetId::new(1)), shared);
        assert_eq!(labels.classify(shared), (FaceClass::Internal, false));
        // The far tet's largest face is a border face: border terminal seed.
        let term = labels.largest_of(TetId::new(1));
        assert!(mesh.face(term).is_border());
        assert!(labels.is_terminal(term) && labels.is_frontier(term));
        assert_eq!(labels.seeds(), &[(term, TetId::new(1))]);
    }

    #[test]
    fn seed_count_matches_terminal_count() {
        let (pos, quads) = crate::io::generate_kuhn_grid::<f64>(3, 1.0);
        let mesh = TetMesh::build_from_tets(pos, &quads).unwrap();
        let labels = label_area(&mesh);
        let terminals = mesh.faces().filter(|(f, _)| labels.is_terminal(*f)).count();
        assert_eq!(labels.seeds().len(), terminals);
        // Every border face is frontier.
        for (f, face) in mesh.faces() {
            if face.is_border() {
                assert!(labels.is_frontier(f));
            }
            if labels.is_terminal(f) && !face.is_border() {
                assert!(!labels.is_frontier(f));
            }
        }
    }
}
