//! Legacy-format unstructured-grid writer with polyhedron cells.
//!
//! Every polyhedron is emitted as one cell of type 42 whose connectivity is a
//! face stream: number of faces, then per face its vertex count and vertex
//! ids. Output is ASCII with coordinates printed to 17 significant digits,
//! so identical inputs yield byte-identical files.

use std::collections::HashSet;
use std::io::Write;
use std::path::Path;

use crate::ids::{FaceId, TetId, VertexId};
use crate::mesh::TetMesh;
use crate::scalar::Real;
use crate::traversal::PolyMesh;
use crate::vec3;

use super::FormatError;

/// Write `pm` over `mesh`'s vertex set. All polyhedra must be simple.
pub fn write_polymesh_vtk_to<S: Real, W: Write>(
    writer: &mut W,
    mesh: &TetMesh<S>,
    pm: &PolyMesh,
) -> Result<(), FormatError> {
    if let Some(poly) = pm.polyhedra.iter().find(|p| !p.simple) {
        return Err(FormatError::NotSimple { polyhedron: poly.id });
    }

    writeln!(writer, "# vtk DataFile Version 3.0")?;
    writeln!(writer, "polyhedral mesh")?;
    writeln!(writer, "ASCII")?;
    writeln!(writer, "DATASET UNSTRUCTURED_GRID")?;

    writeln!(writer, "POINTS {} double", mesh.num_vertices())?;
    for p in mesh.positions() {
        let [x, y, z] = p.map(|c| c.to_f64().unwrap());
        writeln!(writer, "{x:.16e} {y:.16e} {z:.16e}")?;
    }

    // Face streams: per cell, [stream length] nFaces (nPts ids...)*.
    let mut streams: Vec<Vec<usize>> = Vec::with_capacity(pm.len());
    for poly in &pm.polyhedra {
        let inside: HashSet<TetId> = poly.tets.iter().copied().collect();
        let mut stream = vec![poly.faces.len()];
        for &f in &poly.faces {
            let [a, b, c] = oriented_face(mesh, f, &inside);
            stream.extend([3, a.index(), b.index(), c.index()]);
        }
        streams.push(stream);
    }

    let total: usize = streams.iter().map(|s| s.len() + 1).sum();
    writeln!(writer, "CELLS {} {}", streams.len(), total)?;
    for stream in &streams {
        write!(writer, "{}", stream.len())?;
        for v in stream {
            write!(writer, " {v}")?;
        }
        writeln!(writer)?;
    }

    writeln!(writer, "CELL_TYPES {}", streams.len())?;
    for _ in &streams {
        writeln!(writer, "42")?;
    }
    Ok(())
}

/// Write to a file path.
pub fn write_polymesh_vtk<S: Real>(
    path: impl AsRef<Path>,
    mesh: &TetMesh<S>,
    pm: &PolyMesh,
) -> Result<(), FormatError> {
    let mut writer = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_polymesh_vtk_to(&mut writer, mesh, pm)?;
    Ok(())
}

/// Face vertices wound so the normal points out of the polyhedron.
///
/// The cell is on exactly one side of each of its faces, so orienting against
/// the off-face vertex of the inside tet is exact even for the strongly
/// non-convex cells this pipeline produces.
fn oriented_face<S: Real>(
    mesh: &TetMesh<S>,
    f: FaceId,
    inside: &HashSet<TetId>,
) -> [VertexId; 3] {
    let face = mesh.face(f);
    let tet = face
        .incident_tets()
        .find(|t| inside.contains(t))
        .expect("every recorded face touches a tet of its polyhedron");
    let [a, b, c] = face.vertices;
    let w = mesh.position(mesh.tet_vertex_opposite_face(tet, f));
    let pa = mesh.position(a);
    let normal = vec3::cross(
        vec3::sub(mesh.position(b), pa),
        vec3::sub(mesh.position(c), pa),
    );
    if vec3::dot(normal, vec3::sub(w, pa)) < S::zero() {
        [a, b, c]
    } else {
        [a, c, b]
    }
}
