//! Minimal 3-vector arithmetic over a generic scalar.

use crate::scalar::Real;

#[inline]
pub(crate) fn sub<S: Real>(a: [S; 3], b: [S; 3]) -> [S; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub(crate) fn dot<S: Real>(a: [S; 3], b: [S; 3]) -> S {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub(crate) fn cross<S: Real>(a: [S; 3], b: [S; 3]) -> [S; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub(crate) fn norm<S: Real>(a: [S; 3]) -> S {
    dot(a, a).sqrt()
}

#[inline]
pub(crate) fn normalize<S: Real>(a: [S; 3]) -> [S; 3] {
    let n = norm(a);
    [a[0] / n, a[1] / n, a[2] / n]
}

/// det(a, b, c), i.e. the scalar triple product.
#[inline]
pub(crate) fn det3<S: Real>(a: [S; 3], b: [S; 3], c: [S; 3]) -> S {
    dot(a, cross(b, c))
}
