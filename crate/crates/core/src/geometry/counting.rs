//! Brute-force counting of subspaces over a finite field.
//!
//! Every `a`-dimensional subspace of `F_q^N` has a unique reduced
//! row-echelon basis, so enumerating choices of pivot columns and free
//! entries visits each subspace exactly once. The total is the Gaussian
//! binomial, computed independently by the product formula and used as the
//! enumeration-size guard.

use super::field::{EnumerableField, Field};
use super::matrix::Matrix;
use super::subspace::LinearSubspace;
use super::GeometryError;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Default upper bound on the number of subspaces the enumerator will visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// The Gaussian binomial `[n choose a]_q` by the product formula
/// `prod_(i=0)^(a-1) (q^(n-i) - 1) / (q^(i+1) - 1)`, evaluated exactly.
pub fn gaussian_binomial(q: u64, n: u32, a: u32) -> BigUint {
    if a > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for i in 0..a {
        numerator *= q.pow(n - i) - BigUint::one();
        denominator *= q.pow(i + 1) - BigUint::one();
    }
    let (quot, rem) = numerator.div_rem(&denominator);
    assert!(rem.is_zero(), "Gaussian binomial is an integer");
    quot
}

/// Counts the `a`-dimensional subspaces of `F^n` meeting every condition
/// subspace nontrivially, by exhaustive enumeration of reduced echelon
/// bases. Refuses to run when the subspace total exceeds `cap`.
pub fn finite_field_count<F: EnumerableField>(
    field: &F,
    a: u32,
    n: u32,
    conditions: &[LinearSubspace<F>],
    cap: u64,
) -> Result<u64, GeometryError> {
    if a > n {
        return Ok(0);
    }
    for cond in conditions {
        if cond.ambient_dim() != n as usize {
            return Err(GeometryError::AmbientMismatch {
                left: n as usize,
                right: cond.ambient_dim(),
            });
        }
        if *cond.field() != *field {
            return Err(GeometryError::MixedFields);
        }
    }
    let total = gaussian_binomial(field.order(), n, a);
    if total > BigUint::from(cap) {
        return Err(GeometryError::EnumerationTooLarge { size: total, cap });
    }

    let condition_matrices: Vec<Matrix<F>> =
        conditions.iter().map(LinearSubspace::basis_matrix).collect();
    let mut count = 0u64;
    for pivots in combinations(n as usize, a as usize) {
        // Free entries sit to the right of their row's pivot, outside every
        // pivot column.
        let mut free_slots: Vec<(usize, usize)> = Vec::new();
        for (row, &pc) in pivots.iter().enumerate() {
            for col in pc + 1..n as usize {
                if !pivots.contains(&col) {
                    free_slots.push((row, col));
                }
            }
        }
        let order = field.order();
        let mut odometer = vec![0u64; free_slots.len()];
        loop {
            // Assemble the reduced echelon basis for this odometer state.
            let mut rows = vec![vec![field.zero(); n as usize]; a as usize];
            for (row, &pc) in pivots.iter().enumerate() {
                rows[row][pc] = field.one();
            }
            for (slot, &(row, col)) in free_slots.iter().enumerate() {
                rows[row][col] = field.element_at(odometer[slot]);
            }
            if meets_all(field, &rows, &condition_matrices, a as usize) {
                count += 1;
            }
            // Advance the odometer.
            let mut pos = 0;
            loop {
                if pos == odometer.len() {
                    break;
                }
                odometer[pos] += 1;
                if odometer[pos] < order {
                    break;
                }
                odometer[pos] = 0;
                pos += 1;
            }
            if pos == odometer.len() {
                break;
            }
        }
    }
    Ok(count)
}

fn meets_all<F: Field>(
    field: &F,
    candidate_rows: &[Vec<F::Elem>],
    conditions: &[Matrix<F>],
    candidate_dim: usize,
) -> bool {
    for cond in conditions {
        let mut rows = candidate_rows.to_vec();
        rows.extend(cond.row_vecs());
        let stacked = Matrix::from_rows(field.clone(), rows)
            .expect("enumerated rows share the ambient length");
        if stacked.rank() >= candidate_dim + cond.rows() {
            return false;
        }
    }
    true
}

/// All ascending `k`-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for i in start..=n.saturating_sub(needed) {
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::field::PrimeField;
    use super::*;

    #[test]
    fn gaussian_binomial_small_values() {
        // [2 choose 1]_2 = 3, [4 choose 2]_2 = 35, [4 choose 2]_3 = 130.
        assert_eq!(gaussian_binomial(2, 2, 1), BigUint::from(3u32));
        assert_eq!(gaussian_binomial(2, 4, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(3, 4, 2), BigUint::from(130u32));
        assert_eq!(gaussian_binomial(5, 3, 3), BigUint::one());
        assert_eq!(gaussian_binomial(5, 3, 4), BigUint::zero());
    }

    #[test]
    fn unconditioned_enumeration_matches_gaussian_binomial() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(finite_field_count(&f2, 1, 2, &[], 100).unwrap(), 3);
        assert_eq!(finite_field_count(&f2, 2, 4, &[], 100).unwrap(), 35);
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(finite_field_count(&f3, 2, 4, &[], 1000).unwrap(), 130);
    }

    #[test]
    fn cap_is_enforced() {
        let f3 = PrimeField::new(3).unwrap();
        assert!(matches!(
            finite_field_count(&f3, 2, 4, &[], 100),
            Err(GeometryError::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn four_coordinate_pair_lines_over_f3() {
        let f3 = PrimeField::new(3).unwrap();
        let line = |i: usize, j: usize| {
            let mut u = vec![0u64; 4];
            let mut v = vec![0u64; 4];
            u[i] = 1;
            v[j] = 1;
            LinearSubspace::from_basis(f3, 4, vec![u, v]).unwrap()
        };
        let conditions = [line(0, 1), line(2, 3), line(0, 2), line(1, 3)];
        let count = finite_field_count(&f3, 2, 4, &conditions, 1000).unwrap();
        assert_eq!(count, 2);
    }

    #[test]
    fn combinations_cover_and_stay_sorted() {
        let all = combinations(5, 2);
        assert_eq!(all.len(), 10);
        for c in &all {
            assert!(c[0] < c[1]);
        }
    }
}
