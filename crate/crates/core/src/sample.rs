//! Seeded random choices: scalar coefficients and modules built so that the
//! relations hold by construction.

use rand::Rng;

use crate::homext::{direct_sum, ext1, middle_term, Representation};
use crate::linalg::{Field, Matrix, Scalar};
use crate::variety::gl_action;

/// `count` integers drawn uniformly from `[-bound, bound]`.
pub fn random_coefficients<R: Rng>(field: Field, rng: &mut R, count: usize, bound: i64) -> Vec<Scalar> {
    (0..count).map(|_| field.from_i64(rng.gen_range(-bound..=bound))).collect()
}

/// Random matrix with entries in `[-bound, bound]`.
pub fn random_matrix<R: Rng>(field: Field, rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = random_coefficients(field, rng, rows * cols, bound);
    let rows_v = (0..rows).map(|i| data[i * cols..(i + 1) * cols].to_vec()).collect();
    Matrix::from_rows(field, rows_v, cols).expect("shape")
}

/// Random invertible matrix, retrying until the determinant is nonzero.
pub fn random_invertible<R: Rng>(field: Field, rng: &mut R, n: usize, bound: i64) -> Matrix {
    loop {
        let m = random_matrix(field, rng, n, n, bound);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Random element of `GL(d)`.
pub fn random_group_element<R: Rng>(field: Field, rng: &mut R, dims: &[usize], bound: i64) -> Vec<Matrix> {
    dims.iter().map(|&n| random_invertible(field, rng, n, bound)).collect()
}

/// A random module assembled from `pool`: either a direct sum of two pool
/// members or the middle term of a random extension between them, then
/// moved along its orbit by a random base change. Relations hold by
/// construction; the result is re-checked anyway.
pub fn random_module<R: Rng>(pool: &[Representation], rng: &mut R) -> Representation {
    assert!(!pool.is_empty(), "empty module pool");
    let field = pool[0].field();
    let a = &pool[rng.gen_range(0..pool.len())];
    let b = &pool[rng.gen_range(0..pool.len())];
    let base = match rng.gen_range(0..3) {
        0 => a.clone(),
        1 => direct_sum(a, b),
        _ => {
            let e = ext1(b, a);
            let coeffs = random_coefficients(field, rng, e.z().dim(), 3);
            let z = e.cocycle(&coeffs);
            middle_term(b, a, &z).expect("cocycle").w
        }
    };
    let g = random_group_element(field, rng, base.dims(), 3);
    let moved = gl_action(&g, &base).expect("invertible");
    debug_assert!(moved.violated_relation().is_none());
    moved
}
