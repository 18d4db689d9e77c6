//! Canonically echelonized subspaces of ℚⁿ.
//!
//! A `Subspace` stores its basis in reduced row echelon form, so two values
//! are equal as Rust data exactly when they are equal as subspaces. Every
//! later "⊆" or "=" between spans reduces to this structural equality.

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};
use num::{One, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    /// Canonicalize the span of `vectors` inside ℚ^ambient.
    pub fn span(vectors: &[Vec<Scalar>], ambient: usize) -> Result<Self> {
        for v in vectors {
            super::check_len(ambient, v.len())?;
        }
        Ok(Self::span_unchecked(vectors.to_vec(), ambient))
    }

    pub(crate) fn span_unchecked(vectors: Vec<Vec<Scalar>>, ambient: usize) -> Self {
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: Vec::new(),
            };
        }
        let rows = vectors.len();
        let data: Vec<Scalar> = vectors.into_iter().flatten().collect();
        let m = Matrix::new(rows, ambient, data).expect("row lengths checked");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Scalar::zero(); ambient];
                v[i] = Scalar::one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    pub fn line(v: Vec<Scalar>) -> Self {
        let ambient = v.len();
        Self::span_unchecked(vec![v], ambient)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Residual of `v` after elimination against the basis; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for row in &self.basis {
            let p = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("canonical rows are nonzero");
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (wj, rj) in w.iter_mut().zip(row) {
                *wj -= &c * rj;
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        super::is_zero_vec(&self.reduce(v))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    /// With an RREF basis these are just the pivot-column entries.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(
            self.basis
                .iter()
                .map(|row| {
                    let p = row.iter().position(|x| !x.is_zero()).unwrap();
                    v[p].clone()
                })
                .collect(),
        )
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Subspace::span_unchecked(vs, self.ambient))
    }

    /// Intersection, computed from the kernel of the stacked-basis system:
    /// a vector lies in both spans iff it is `a·B₁ = b·B₂` for some
    /// coefficient rows `a`, `b`, i.e. `(a, b)` is in the kernel of the
    /// matrix whose columns are the basis vectors of `self` and `-other`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let k1 = self.dim();
        let k2 = other.dim();
        if k1 == 0 || k2 == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let m = Matrix::from_fn(self.ambient, k1 + k2, |i, j| {
            if j < k1 {
                self.basis[j][i].clone()
            } else {
                -other.basis[j - k1][i].clone()
            }
        });
        let ker = m.kernel();
        let vecs: Vec<Vec<Scalar>> = ker
            .basis()
            .iter()
            .map(|coef| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (j, row) in self.basis.iter().enumerate() {
                    if coef[j].is_zero() {
                        continue;
                    }
                    for (vi, ri) in v.iter_mut().zip(row) {
                        *vi += &coef[j] * ri;
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span_unchecked(vecs, self.ambient))
    }

    /// Image of the subspace under a linear map on coordinates.
    pub fn map(&self, f: impl Fn(&[Scalar]) -> Vec<Scalar>, new_ambient: usize) -> Subspace {
        let vecs: Vec<Vec<Scalar>> = self.basis.iter().map(|v| f(v)).collect();
        Subspace::span_unchecked(vecs, new_ambient)
    }

    /// True iff `basis` rows are literally in reduced row echelon form.
    pub fn is_canonical_basis(ambient: usize, basis: &[Vec<Scalar>]) -> bool {
        let mut last_pivot: Option<usize> = None;
        for row in basis {
            if row.len() != ambient {
                return false;
            }
            let Some(p) = row.iter().position(|x| !x.is_zero()) else {
                return false;
            };
            if !row[p].is_one() {
                return false;
            }
            if let Some(lp) = last_pivot {
                if p <= lp {
                    return false;
                }
            }
            last_pivot = Some(p);
        }
        // pivot columns must vanish on the other rows
        for (i, row) in basis.iter().enumerate() {
            let p = row.iter().position(|x| !x.is_zero()).unwrap();
            for (k, other) in basis.iter().enumerate() {
                if k != i && !other[p].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Rebuild from a basis that is required to be canonical already.
    pub fn from_canonical_basis(ambient: usize, basis: Vec<Vec<Scalar>>) -> Result<Self> {
        if !Self::is_canonical_basis(ambient, &basis) {
            return Err(Error::invalid(
                "basis is not in reduced row echelon form".to_string(),
            ));
        }
        Ok(Subspace { ambient, basis })
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Subspace dim {} in Q^{} [", self.dim(), self.ambient)?;
        for row in &self.basis {
            let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ratio, scalar_from_int};

    fn iv(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| scalar_from_int(x)).collect()
    }

    #[test]
    fn scaling_collapses() {
        let s = Subspace::span(&[iv(&[0, 2]), iv(&[0, 1])], 2).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis()[0], iv(&[0, 1]));
    }

    #[test]
    fn empty_span_is_zero() {
        let s = Subspace::span(&[], 3).unwrap();
        assert!(s.is_zero());
        assert_eq!(s, Subspace::zero(3));
    }

    #[test]
    fn dependent_triple_has_rank_two() {
        // hand row reduction: (1,1,0),(0,1,1),(1,0,-1) -> rank 2,
        // canonical rows (1,0,-1),(0,1,1)
        let s = Subspace::span(&[iv(&[1, 1, 0]), iv(&[0, 1, 1]), iv(&[1, 0, -1])], 3).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis()[0], iv(&[1, 0, -1]));
        assert_eq!(s.basis()[1], iv(&[0, 1, 1]));
    }

    #[test]
    fn sum_is_idempotent() {
        let s = Subspace::span(&[iv(&[1, 2, 3]), iv(&[0, 0, 7])], 3).unwrap();
        assert_eq!(s.sum(&s).unwrap(), s);
    }

    #[test]
    fn coordinate_planes_intersect_in_shared_axis() {
        let xy = Subspace::span(&[iv(&[1, 0, 0]), iv(&[0, 1, 0])], 3).unwrap();
        let yz = Subspace::span(&[iv(&[0, 1, 0]), iv(&[0, 0, 1])], 3).unwrap();
        let axis = xy.intersect(&yz).unwrap();
        assert_eq!(axis, Subspace::span(&[iv(&[0, 1, 0])], 3).unwrap());
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(Subspace::span(&[iv(&[1, 0])], 3).is_err());
    }

    #[test]
    fn canonical_basis_validation() {
        assert!(Subspace::is_canonical_basis(2, &[iv(&[1, 0]), iv(&[0, 1])]));
        assert!(!Subspace::is_canonical_basis(2, &[iv(&[0, 1]), iv(&[1, 0])]));
        assert!(!Subspace::is_canonical_basis(2, &[iv(&[2, 0])]));
        assert!(!Subspace::is_canonical_basis(2, &[iv(&[1, 1]), iv(&[0, 1])]));
        let sp = Subspace::from_canonical_basis(3, vec![iv(&[1, 0, -1])]).unwrap();
        assert_eq!(sp.dim(), 1);
        assert!(Subspace::from_canonical_basis(3, vec![iv(&[0, 0, 0])]).is_err());
    }

    #[test]
    fn coordinates_read_off_pivots() {
        let s = Subspace::span(&[iv(&[1, 0, 2]), iv(&[0, 1, -1])], 3).unwrap();
        let v: Vec<Scalar> = vec![ratio(3, 1), ratio(-2, 1), ratio(8, 1)];
        let c = s.coordinates_of(&v).unwrap();
        assert_eq!(c, vec![ratio(3, 1), ratio(-2, 1)]);
        assert!(s.coordinates_of(&iv(&[0, 0, 1])).is_none());
    }
}
