//! Dense, zero-based element ids.
//!
//! Ids are plain indices into the owning [`TetMesh`](crate::mesh::TetMesh)
//! arrays and stay valid for the lifetime of the mesh.

macro_rules! define_id {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
        pub struct $name(u32);

        impl $name {
            #[inline]
            pub fn new(index: usize) -> Self {
                debug_assert!(index < u32::MAX as usize);
                Self(index as u32)
            }

            #[inline]
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

define_id!(
    /// Index of a vertex.
    VertexId
);
define_id!(
    /// Index of an edge.
    EdgeId
);
define_id!(
    /// Index of a triangular face.
    FaceId
);
define_id!(
    /// Index of a tetrahedron.
    TetId
);
