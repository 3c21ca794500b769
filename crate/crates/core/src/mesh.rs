//! Immutable tetrahedral-mesh incidence structure.
//!
//! A [`TetMesh`] is built once from raw vertex coordinates and tetra vertex
//! quadruples; afterwards it is read-only and safe to share across threads.
//! Faces and edges are derived by merging canonical (sorted) vertex keys, so
//! identical input always produces identical id assignment:
//!
//! * face `k` of a tetrahedron is the face opposite vertex `k` of its quad;
//! * faces and edges are numbered in first-encounter order, scanning tets by
//!   ascending id and local faces/edges in the fixed order below.

use std::collections::HashMap;

use thiserror::Error;

use crate::ids::{EdgeId, FaceId, TetId, VertexId};
use crate::scalar::Real;
use crate::vec3;

/// Local edges of a tet quad, in numbering order.
const TET_EDGES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Errors rejected while building a [`TetMesh`].
#[derive(Debug, Error)]
pub enum MeshError {
    #[error("mesh must contain at least one tetrahedron")]
    NoTets,
    #[error("vertex {vertex} has non-finite coordinates")]
    NonFiniteCoordinate { vertex: usize },
    #[error("tet {tet} references vertex {vertex} but only {count} vertices exist")]
    VertexOutOfRange { tet: usize, vertex: usize, count: usize },
    #[error("tet {tet} repeats a vertex")]
    RepeatedVertex { tet: usize },
    #[error("tet {tet} duplicates tet {earlier}")]
    DuplicateTet { tet: usize, earlier: usize },
    #[error("tet {tet} is degenerate (|volume| = {volume:e} below tolerance)")]
    DegenerateTet { tet: usize, volume: f64 },
    #[error("tet {tet} contains a degenerate face (area = {area:e} below tolerance)")]
    DegenerateFace { tet: usize, area: f64 },
    #[error("face of tet {tet} is shared by more than two tetrahedra")]
    NonManifoldFace { tet: usize },
}

/// Triangular face; `vertices` are stored sorted so the triple is a unique key.
#[derive(Debug, Clone)]
pub struct Face {
    pub vertices: [VertexId; 3],
    /// Incident tets; slot 0 is always set, slot 1 is `None` for border faces.
    pub tets: [Option<TetId>; 2],
    pub edges: [EdgeId; 3],
}

impl Face {
    #[inline]
    pub fn is_border(&self) -> bool {
        self.tets[1].is_none()
    }

    /// The incident tet that is not `t`, if any.
    #[inline]
    pub fn other_tet(&self, t: TetId) -> Option<TetId> {
        match self.tets {
            [Some(a), b] if a == t => b,
            [a, Some(b)] if b == t => a,
            _ => None,
        }
    }

    pub fn incident_tets(&self) -> impl Iterator<Item = TetId> + '_ {
        self.tets.iter().flatten().copied()
    }
}

/// Edge with its full face incidence (needed by the barrier-tip test).
#[derive(Debug, Clone)]
pub struct Edge {
    pub vertices: [VertexId; 2],
    pub faces: Vec<FaceId>,
}

#[derive(Debug, Clone)]
pub struct Tetrahedron {
    pub vertices: [VertexId; 4],
    /// `faces[k]` is opposite `vertices[k]`.
    pub faces: [FaceId; 4],
    /// `neighbors[k]` shares `faces[k]`; `None` iff that face is border.
    pub neighbors: [Option<TetId>; 4],
}

/// Immutable tetrahedral mesh with all adjacency maps populated.
#[derive(Debug, Clone)]
pub struct TetMesh<S> {
    positions: Vec<[S; 3]>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    tets: Vec<Tetrahedron>,
    bbox_diagonal: S,
}

impl<S: Real> TetMesh<S> {
    /// Build the incidence structure from raw coordinates and vertex quads.
    ///
    /// Rejects out-of-range or repeated vertex indices, duplicate quads, and
    /// degenerate elements: tets with |volume| <= 1e-12 * diag^3 and faces
    /// with area <= 1e-12 * diag^2, where diag is the bounding-box diagonal.
    pub fn build_from_tets(
        positions: Vec<[S; 3]>,
        tet_quads: &[[usize; 4]],
    ) -> Result<Self, MeshError> {
        if tet_quads.is_empty() {
            return Err(MeshError::NoTets);
        }
        for (i, p) in positions.iter().enumerate() {
            if !p.iter().all(|c| c.is_finite()) {
                return Err(MeshError::NonFiniteCoordinate { vertex: i });
            }
        }

        let bbox_diagonal = bbox_diagonal(&positions);
        let eps = S::from_f64(1e-12).unwrap();
        let vol_tol = eps * bbox_diagonal.powi(3);
        let area_tol = eps * bbox_diagonal.powi(2);

        let nv = positions.len();
        let mut seen_quads: HashMap<[usize; 4], usize> = HashMap::with_capacity(tet_quads.len());
        for (i, quad) in tet_quads.iter().enumerate() {
            for &v in quad {
                if v >= nv {
                    return Err(MeshError::VertexOutOfRange { tet: i, vertex: v, count: nv });
                }
            }
            let mut key = *quad;
            key.sort_unstable();
            if key.windows(2).any(|w| w[0] == w[1]) {
                return Err(MeshError::RepeatedVertex { tet: i });
            }
            if let Some(&earlier) = seen_quads.get(&key) {
                return Err(MeshError::DuplicateTet { tet: i, earlier });
            }
            seen_quads.insert(key, i);

            let [a, b, c, d] = quad.map(|v| positions[v]);
            let vol = vec3::det3(vec3::sub(b, a), vec3::sub(c, a), vec3::sub(d, a)).abs()
                / S::from_f64(6.0).unwrap();
            if vol <= vol_tol {
                return Err(MeshError::DegenerateTet {
                    tet: i,
                    volume: vol.to_f64().unwrap_or(0.0),
                });
            }
        }

        let mut tets: Vec<Tetrahedron> = tet_quads
            .iter()
            .map(|quad| Tetrahedron {
                vertices: quad.map(VertexId::new),
                faces: [FaceId::new(0); 4],
                neighbors: [None; 4],
            })
            .collect();

        // Faces: merge by sorted vertex triple; face k is opposite vertex k.
        let mut faces: Vec<Face> = Vec::new();
        let mut face_ids: HashMap<[usize; 3], FaceId> = HashMap::new();
        for (i, quad) in tet_quads.iter().enumerate() {
            let t = TetId::new(i);
            for k in 0..4 {
                let mut tri = [0usize; 3];
                let mut w = 0;
                for (m, &v) in quad.iter().enumerate() {
                    if m != k {
                        tri[w] = v;
                        w += 1;
                    }
                }
                tri.sort_unstable();
                let fid = match face_ids.get(&tri) {
                    Some(&fid) => {
                        let face = &mut faces[fid.index()];
                        if face.tets[1].is_some() {
                            return Err(MeshError::NonManifoldFace { tet: i });
                        }
                        face.tets[1] = Some(t);
                        fid
                    }
                    None => {
                        let fid = FaceId::new(faces.len());
                        let [a, b, c] = tri.map(|v| positions[v]);
                        let area = triangle_area(a, b, c);
                        if area <= area_tol {
                            return Err(MeshError::DegenerateFace {
                                tet: i,
                                area: area.to_f64().unwrap_or(0.0),
                            });
                        }
                        faces.push(Face {
                            vertices: tri.map(VertexId::new),
                            tets: [Some(t), None],
                            edges: [EdgeId::new(0); 3],
                        });
                        face_ids.insert(tri, fid);
                        fid
                    }
                };
                tets[i].faces[k] = fid;
            }
        }

        // Neighbors across shared faces.
        for i in 0..tets.len() {
            let t = TetId::new(i);
            for k in 0..4 {
                tets[i].neighbors[k] = faces[tets[i].faces[k].index()].other_tet(t);
            }
        }

        // Edges: merge by sorted vertex pair, scanning tets in order.
        let mut edges: Vec<Edge> = Vec::new();
        let mut edge_ids: HashMap<[usize; 2], EdgeId> = HashMap::new();
        for quad in tet_quads {
            for [p, q] in TET_EDGES {
                let mut pair = [quad[p], quad[q]];
                pair.sort_unstable();
                edge_ids.entry(pair).or_insert_with(|| {
                    let eid = EdgeId::new(edges.len());
                    edges.push(Edge { vertices: pair.map(VertexId::new), faces: Vec::new() });
                    eid
                });
            }
        }

        // Edge <-> face incidence, scanning faces in id order.
        for (i, face) in faces.iter_mut().enumerate() {
            let [a, b, c] = face.vertices.map(VertexId::index);
            for (slot, pair) in [[a, b], [a, c], [b, c]].into_iter().enumerate() {
                let eid = edge_ids[&pair];
                face.edges[slot] = eid;
                edges[eid.index()].faces.push(FaceId::new(i));
            }
        }

        Ok(Self { positions, edges, faces, tets, bbox_diagonal })
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.positions.len()
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn num_tets(&self) -> usize {
        self.tets.len()
    }

    #[inline]
    pub fn position(&self, v: VertexId) -> [S; 3] {
        self.positions[v.index()]
    }

    #[inline]
    pub fn positions(&self) -> &[[S; 3]] {
        &self.positions
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    #[inline]
    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.index()]
    }

    #[inline]
    pub fn tet(&self, t: TetId) -> &Tetrahedron {
        &self.tets[t.index()]
    }

    pub fn faces(&self) -> impl Iterator<Item = (FaceId, &Face)> {
        self.faces.iter().enumerate().map(|(i, f)| (FaceId::new(i), f))
    }

    pub fn tets(&self) -> impl Iterator<Item = (TetId, &Tetrahedron)> {
        self.tets.iter().enumerate().map(|(i, t)| (TetId::new(i), t))
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &Edge)> {
        self.edges.iter().enumerate().map(|(i, e)| (EdgeId::new(i), e))
    }

    /// V - E + F - T; equals 1 for a mesh of a topological ball.
    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
            - self.num_tets() as i64
    }

    #[inline]
    pub fn bbox_diagonal(&self) -> S {
        self.bbox_diagonal
    }

    /// Triangle area of face `f`.
    pub fn face_area(&self, f: FaceId) -> S {
        let [a, b, c] = self.faces[f.index()].vertices.map(|v| self.position(v));
        triangle_area(a, b, c)
    }

    /// In-circle radius of face `f` (area over semiperimeter).
    pub fn face_incircle_radius(&self, f: FaceId) -> S {
        let [a, b, c] = self.faces[f.index()].vertices.map(|v| self.position(v));
        let area = triangle_area(a, b, c);
        let two = S::from_f64(2.0).unwrap();
        let semi = (vec3::norm(vec3::sub(b, a))
            + vec3::norm(vec3::sub(c, b))
            + vec3::norm(vec3::sub(a, c)))
            / two;
        area / semi
    }

    /// Unsigned volume of tet `t`.
    pub fn tet_volume(&self, t: TetId) -> S {
        let [a, b, c, d] = self.tets[t.index()].vertices.map(|v| self.position(v));
        vec3::det3(vec3::sub(b, a), vec3::sub(c, a), vec3::sub(d, a)).abs()
            / S::from_f64(6.0).unwrap()
    }

    /// Sum of all tet volumes.
    pub fn total_volume(&self) -> S {
        (0..self.num_tets()).fold(S::zero(), |acc, i| acc + self.tet_volume(TetId::new(i)))
    }

    /// The vertex of face `f` that is not an endpoint of edge `e`.
    ///
    /// `e` must be one of the face's three edges.
    pub fn face_vertex_opposite_edge(&self, f: FaceId, e: EdgeId) -> VertexId {
        let edge = &self.edges[e.index()];
        *self.faces[f.index()]
            .vertices
            .iter()
            .find(|v| !edge.vertices.contains(v))
            .expect("edge must belong to the face")
    }

    /// The vertex of tet `t` that is not on face `f`.
    pub fn tet_vertex_opposite_face(&self, t: TetId, f: FaceId) -> VertexId {
        let face = &self.faces[f.index()];
        *self.tets[t.index()]
            .vertices
            .iter()
            .find(|v| !face.vertices.contains(v))
            .expect("face must belong to the tet")
    }
}

fn triangle_area<S: Real>(a: [S; 3], b: [S; 3], c: [S; 3]) -> S {
    vec3::norm(vec3::cross(vec3::sub(b, a), vec3::sub(c, a))) / S::from_f64(2.0).unwrap()
}

fn bbox_diagonal<S: Real>(positions: &[[S; 3]]) -> S {
    let mut lo = [S::infinity(); 3];
    let mut hi = [S::neg_infinity(); 3];
    for p in positions {
        for k in 0..3 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    vec3::norm(vec3::sub(hi, lo))
}
