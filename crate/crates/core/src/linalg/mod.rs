//! Exact rational linear algebra: scalars, dense matrices, canonical
//! subspaces, and the solvers every other module is built on.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{parse_scalar, ratio, scalar_from_int, Scalar};
pub use subspace::Subspace;

use crate::error::{Error, Result};

/// Componentwise sum of two vectors of equal length.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Scale a vector by `c`.
pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * c).collect()
}

/// Standard dot product.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Scalar::from_integer(0.into()), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Length { expected, got })
    }
}

use num::Zero;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_helpers() {
        let a = vec![ratio(1, 2), ratio(1, 3)];
        let b = vec![ratio(1, 2), ratio(2, 3)];
        assert_eq!(vec_add(&a, &b), vec![ratio(1, 1), ratio(1, 1)]);
        assert_eq!(dot(&a, &b), ratio(1, 4) + ratio(2, 9));
        assert!(!is_zero_vec(&a));
        assert!(is_zero_vec(&vec_scale(&a, &ratio(0, 1))));
    }
}
