//! Dense matrices over an exact field, with reduced row-echelon form, rank,
//! and kernel computation. Gauss-Jordan with the first nonzero pivot in each
//! column keeps the reduced form canonical.

use super::field::Field;
use super::GeometryError;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self, GeometryError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(GeometryError::RaggedRows);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Stacks `other` below `self`. Fields and widths must match; stacking
    /// matrices over different moduli is a mixed-field error.
    pub fn stack(&self, other: &Matrix<F>) -> Result<Matrix<F>, GeometryError> {
        if self.field != other.field {
            return Err(GeometryError::MixedFields);
        }
        if self.cols != other.cols {
            return Err(GeometryError::AmbientMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &F::Elem) {
        for c in 0..self.cols {
            let v = self.field.mul(self.at(r, c), factor);
            self.set(r, c, v);
        }
    }

    /// row[target] -= factor * row[source]
    fn eliminate(&mut self, target: usize, source: usize, factor: &F::Elem) {
        for c in 0..self.cols {
            let delta = self.field.mul(self.at(source, c), factor);
            let v = self.field.sub(self.at(target, c), &delta);
            self.set(target, c, v);
        }
    }

    /// Reduced row-echelon form and rank. Exact; the reduced form is the
    /// unique canonical representative of the row space.
    pub fn rref(&self) -> (Matrix<F>, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.field.is_zero(m.at(r, col))) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m
                .field
                .inv(m.at(pivot_row, col))
                .expect("pivot is nonzero");
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.field.is_zero(m.at(r, col)) {
                    let factor = m.at(r, col).clone();
                    m.eliminate(r, pivot_row, &factor);
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Pivot columns of an already reduced matrix.
    fn pivot_columns(&self, rank: usize) -> Vec<usize> {
        let mut pivots = Vec::with_capacity(rank);
        for r in 0..rank {
            let col = (0..self.cols)
                .find(|&c| !self.field.is_zero(self.at(r, c)))
                .expect("reduced row within rank has a pivot");
            pivots.push(col);
        }
        pivots
    }

    /// A basis of the right null space `{x : Mx = 0}`, one vector per free
    /// column, in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let (reduced, rank) = self.rref();
        let pivots = reduced.pivot_columns(rank);
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = self.field.neg(reduced.at(r, free));
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{PrimeField, Rationals};
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qmat(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_rows(
            Rationals,
            rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_is_its_own_reduction() {
        let m = Matrix::identity(Rationals, 3);
        let (r, rank) = m.rref();
        assert_eq!(r, m);
        assert_eq!(rank, 3);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let m: Matrix<Rationals> = Matrix::zero(Rationals, 2, 4);
        let (r, rank) = m.rref();
        assert_eq!(r, m);
        assert_eq!(rank, 0);
    }

    #[test]
    fn dependent_rows_collapse() {
        let m = qmat(&[&[1, 2], &[2, 4]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, qmat(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![q(1), q(2)], vec![q(3)]];
        assert!(matches!(
            Matrix::from_rows(Rationals, rows),
            Err(GeometryError::RaggedRows)
        ));
    }

    #[test]
    fn mixed_moduli_cannot_stack() {
        let a = Matrix::identity(PrimeField::new(5).unwrap(), 2);
        let b = Matrix::identity(PrimeField::new(7).unwrap(), 2);
        assert!(matches!(a.stack(&b), Err(GeometryError::MixedFields)));
    }

    #[test]
    fn kernel_solves_the_system() {
        let m = qmat(&[&[1, 2, 3], &[0, 1, 1]]);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        for v in kernel {
            for r in 0..m.rows() {
                let mut acc = q(0);
                for c in 0..m.cols() {
                    acc += m.at(r, c) * &v[c];
                }
                assert_eq!(acc, q(0));
            }
        }
    }

    #[test]
    fn rank_over_a_prime_field() {
        let f = PrimeField::new(3).unwrap();
        // Second row is 2x the first mod 3.
        let m = Matrix::from_rows(f, vec![vec![1u64, 2], vec![2, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    fn arb_qmat() -> impl Strategy<Value = Matrix<Rationals>> {
        (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-5i64..=5, r * c).prop_map(move |vals| {
                let rows = vals
                    .chunks(c)
                    .map(|chunk| chunk.iter().map(|&v| q(v)).collect())
                    .collect();
                Matrix::from_rows(Rationals, rows).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rref_is_idempotent(m in arb_qmat()) {
            let (once, rank1) = m.rref();
            let (twice, rank2) = once.rref();
            prop_assert_eq!(once, twice);
            prop_assert_eq!(rank1, rank2);
        }

        #[test]
        fn rank_survives_row_shuffles(m in arb_qmat(), seed in any::<u64>()) {
            let mut rows = m.row_vecs();
            // Deterministic shuffle from the seed.
            let n = rows.len();
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                rows.swap(i, j);
            }
            let shuffled = Matrix::from_rows(Rationals, rows).unwrap();
            prop_assert_eq!(shuffled.rank(), m.rank());
        }
    }
}
