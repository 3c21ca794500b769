//! Structured tetrahedral grid: each cube of an n-by-n-by-n lattice is split
//! into the six tetrahedra that share the cube's main diagonal.

use crate::scalar::Real;

/// The six axis orders; each one traces a monotone path from a cube's base
/// corner to the opposite corner and yields one tetrahedron.
const AXIS_ORDERS: [[usize; 3]; 6] =
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Parity of each entry in `AXIS_ORDERS`; odd permutations need a vertex
/// swap to keep the quad positively oriented.
const AXIS_ORDER_ODD: [bool; 6] = [false, true, true, false, false, true];

/// Generate the grid with `(n + 1)^3` vertices and `6 n^3` tets.
///
/// Vertex `(i, j, k)` sits at `(i, j, k) * spacing` and gets id
/// `i + j (n+1) + k (n+1)^2`; cubes are scanned z-major, with the six tets
/// per cube emitted in the fixed order above. All quads are positively
/// oriented, and repeated calls return identical output.
pub fn generate_kuhn_grid<S: Real>(n: usize, spacing: S) -> (Vec<[S; 3]>, Vec<[usize; 4]>) {
    assert!(n >= 1, "grid must have at least one cube per side");
    let m = n + 1;
    let vid = |i: usize, j: usize, k: usize| i + j * m + k * m * m;

    let mut positions = Vec::with_capacity(m * m * m);
    for k in 0..m {
        for j in 0..m {
            for i in 0..m {
                positions.push([
                    S::from_usize(i).unwrap() * spacing,
                    S::from_usize(j).unwrap() * spacing,
                    S::from_usize(k).unwrap() * spacing,
                ]);
            }
        }
    }

    let mut quads = Vec::with_capacity(6 * n * n * n);
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                for (order, &odd) in AXIS_ORDERS.iter().zip(&AXIS_ORDER_ODD) {
                    let mut corner = [i, j, k];
                    let mut quad = [vid(corner[0], corner[1], corner[2]); 4];
                    for (step, &axis) in order.iter().enumerate() {
                        corner[axis] += 1;
                        quad[step + 1] = vid(corner[0], corner[1], corner[2]);
                    }
                    if odd {
                        quad.swap(2, 3);
                    }
                    quads.push(quad);
                }
            }
        }
    }

    (positions, quads)
}
