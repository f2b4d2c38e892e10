//! Linear subspaces of a coordinate vector space, stored by a reduced
//! row-echelon basis so that each subspace has exactly one representation.

use super::field::Field;
use super::matrix::Matrix;
use super::GeometryError;

#[derive(Debug, Clone, PartialEq)]
pub struct LinearSubspace<F: Field> {
    field: F,
    ambient: usize,
    /// Nonzero rows of the reduced row-echelon form; unique per subspace.
    basis: Vec<Vec<F::Elem>>,
}

impl<F: Field> LinearSubspace<F> {
    /// The span of the given vectors; dependencies are allowed and removed.
    pub fn from_span(
        field: F,
        ambient: usize,
        vectors: Vec<Vec<F::Elem>>,
    ) -> Result<Self, GeometryError> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(GeometryError::AmbientMismatch {
                    left: ambient,
                    right: v.len(),
                });
            }
        }
        let m = Matrix::from_rows(field.clone(), vectors)?;
        let (reduced, rank) = m.rref();
        let basis = (0..rank).map(|r| reduced.row(r).to_vec()).collect();
        Ok(LinearSubspace {
            field,
            ambient,
            basis,
        })
    }

    /// Like [`LinearSubspace::from_span`] but the vectors must already be
    /// linearly independent.
    pub fn from_basis(
        field: F,
        ambient: usize,
        vectors: Vec<Vec<F::Elem>>,
    ) -> Result<Self, GeometryError> {
        let claimed = vectors.len();
        let space = Self::from_span(field, ambient, vectors)?;
        if space.dim() != claimed {
            return Err(GeometryError::DependentBasis {
                claimed,
                rank: space.dim(),
            });
        }
        Ok(space)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical reduced basis rows.
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.field.clone(), self.basis.clone())
            .expect("stored basis rows share the ambient length")
    }

    /// True when the two subspaces intersect nontrivially: the stacked bases
    /// have rank below the dimension sum.
    pub fn meets(&self, other: &LinearSubspace<F>) -> Result<bool, GeometryError> {
        if self.field != other.field {
            return Err(GeometryError::MixedFields);
        }
        if self.ambient != other.ambient {
            return Err(GeometryError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let stacked = self.basis_matrix().stack(&other.basis_matrix())?;
        Ok(stacked.rank() < self.dim() + other.dim())
    }

    /// True when `v` lies in the subspace.
    pub fn contains(&self, v: &[F::Elem]) -> Result<bool, GeometryError> {
        if v.len() != self.ambient {
            return Err(GeometryError::AmbientMismatch {
                left: self.ambient,
                right: v.len(),
            });
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        let m = Matrix::from_rows(self.field.clone(), rows)?;
        Ok(m.rank() == self.dim())
    }
}
