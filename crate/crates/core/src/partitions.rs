//! Integer partitions, hook lengths, and standard Young tableau counts.
//!
//! A partition is a weakly decreasing sequence of positive integers. Its
//! diagram is drawn in English notation: row `i` holds `parts[i]` cells.
//! A standard Young tableau (SYT) of shape `lambda` fills the `n` cells with
//! `1..=n`, increasing along every row and down every column.
//!
//! Three routes to the same numbers live here:
//!
//! * [`hook_length_count`]: `n! / prod(hooks)`, evaluated exactly with a
//!   divisibility assertion.
//! * [`enumerate_standard_tableaux`]: exhaustive backtracking, the slow but
//!   independent oracle.
//! * [`castelnuovo_factorial`]: the closed product
//!   `1!2!...(h-1)! * 1!2!...(k-1)! * (hk)! / (1!2!...(h+k-1)!)`,
//!   which counts SYT of the `h x k` rectangle.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;

/// Default cap, in cells, for the exhaustive tableau enumerator.
pub const DEFAULT_ENUMERATION_CAP: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// Parts must be weakly decreasing.
    NotWeaklyDecreasing,
    /// Parts must be positive; drop trailing zeros before constructing.
    ZeroPart,
    /// Rectangle sides must both be at least 1.
    ZeroSide,
    /// The shape has too many cells for exhaustive enumeration.
    TooManyCells { size: u64, cap: u64 },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotWeaklyDecreasing => {
                write!(f, "partition parts must be weakly decreasing")
            }
            PartitionError::ZeroPart => write!(f, "partition parts must be positive"),
            PartitionError::ZeroSide => write!(f, "rectangle sides must be at least 1"),
            PartitionError::TooManyCells { size, cap } => {
                write!(f, "shape has {size} cells, enumeration cap is {cap}")
            }
        }
    }
}

impl std::error::Error for PartitionError {}

/// A weakly decreasing sequence of positive integers. The empty partition is
/// allowed and has size 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for window in parts.windows(2) {
            if window[0] < window[1] {
                return Err(PartitionError::NotWeaklyDecreasing);
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(PartitionError::ZeroPart);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The partition with `h` parts equal to `k`, the shape behind the
    /// factorial formula.
    pub fn rectangle(h: u32, k: u32) -> Result<Self, PartitionError> {
        if h == 0 || k == 0 {
            return Err(PartitionError::ZeroSide);
        }
        Ok(Partition {
            parts: vec![k; h as usize],
        })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Row `i`, or 0 past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Total number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the diagram: column lengths become row lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            let len = self.parts.iter().filter(|&&p| p as usize > j).count() as u32;
            parts.push(len);
        }
        Partition { parts }
    }

    /// True when the diagram has at most `rows` rows and every part is at
    /// most `cols`.
    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.parts.len() <= rows && self.parts.first().is_none_or(|&p| p <= cols)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A count of standard Young tableaux. Always at least 1 for a valid shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TableauCount(BigUint);

impl TableauCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<u64> for TableauCount {
    fn from(v: u64) -> Self {
        TableauCount(BigUint::from(v))
    }
}

impl fmt::Display for TableauCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// `1! 2! ... n!`; the empty product for n = 0.
fn superfactorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut fact = BigUint::one();
    for i in 1..=n {
        fact *= i;
        acc *= &fact;
    }
    acc
}

/// Exact division that panics if the divisor does not divide the dividend.
/// A remainder here means a genuine bug, not a rounding artifact.
fn exact_div(numerator: BigUint, denominator: &BigUint) -> BigUint {
    let (q, r) = num_integer::Integer::div_rem(&numerator, denominator);
    assert!(r.is_zero(), "exact division left remainder {r}");
    q
}

/// Hook length of every cell: arm + leg + 1.
fn hook_lengths(shape: &Partition) -> Vec<u64> {
    let conj = shape.conjugate();
    let mut hooks = Vec::with_capacity(shape.size() as usize);
    for (i, &row_len) in shape.parts().iter().enumerate() {
        for j in 0..row_len as usize {
            let arm = u64::from(row_len) - j as u64 - 1;
            let leg = u64::from(conj.part(j)) - i as u64 - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

/// Number of standard Young tableaux of the given shape, by the hook length
/// formula `n! / prod(hooks)`. The division is verified exact.
pub fn hook_length_count(shape: &Partition) -> TableauCount {
    let n = shape.size();
    let mut denominator = BigUint::one();
    for h in hook_lengths(shape) {
        denominator *= h;
    }
    TableauCount(exact_div(factorial(n), &denominator))
}

/// Counts standard Young tableaux by exhaustive backtracking: numbers are
/// placed in increasing order, each at the end of some row whose cell above
/// is already filled. Every leaf of the search tree is one tableau, so this
/// is a genuinely independent check on [`hook_length_count`].
///
/// Fails with [`PartitionError::TooManyCells`] when `size(shape) > cap`.
pub fn enumerate_standard_tableaux(
    shape: &Partition,
    cap: u64,
) -> Result<TableauCount, PartitionError> {
    let size = shape.size();
    if size > cap {
        return Err(PartitionError::TooManyCells { size, cap });
    }
    let mut filled = vec![0u32; shape.rows()];
    let count = backtrack(shape.parts(), &mut filled, size);
    Ok(TableauCount(count))
}

fn backtrack(shape: &[u32], filled: &mut [u32], remaining: u64) -> BigUint {
    if remaining == 0 {
        return BigUint::one();
    }
    let mut total = BigUint::zero();
    for i in 0..shape.len() {
        // The next number may extend row i only if the row has space and the
        // cell directly above is already filled.
        if filled[i] < shape[i] && (i == 0 || filled[i - 1] > filled[i]) {
            filled[i] += 1;
            total += backtrack(shape, filled, remaining - 1);
            filled[i] -= 1;
        }
    }
    total
}

/// The closed factorial product
/// `1!2!...(h-1)! * 1!2!...(k-1)! * (hk)! / (1!2!...(h+k-1)!)`,
/// evaluated exactly. Numerator and denominator are built separately and the
/// quotient is checked to be an integer; it equals the number of standard
/// Young tableaux of the `h x k` rectangle.
pub fn castelnuovo_factorial(h: u32, k: u32) -> Result<TableauCount, PartitionError> {
    if h == 0 || k == 0 {
        return Err(PartitionError::ZeroSide);
    }
    let (h, k) = (u64::from(h), u64::from(k));
    let numerator = superfactorial(h - 1) * superfactorial(k - 1) * factorial(h * k);
    let denominator = superfactorial(h + k - 1);
    Ok(TableauCount(exact_div(numerator, &denominator)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn shape(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// All partitions of n, largest part first.
    fn partitions_of(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition::new(stack.clone()).unwrap());
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                stack.push(p);
                rec(remaining - p, p, stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn rectangle_shapes() {
        assert_eq!(Partition::rectangle(2, 2).unwrap(), shape(&[2, 2]));
        assert_eq!(Partition::rectangle(3, 2).unwrap(), shape(&[2, 2, 2]));
        assert_eq!(Partition::rectangle(1, 5).unwrap(), shape(&[5]));
        assert_eq!(Partition::rectangle(0, 3), Err(PartitionError::ZeroSide));
        assert_eq!(Partition::rectangle(3, 0), Err(PartitionError::ZeroSide));
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotWeaklyDecreasing)
        );
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(shape(&[3, 1]).conjugate(), shape(&[2, 1, 1]));
        assert_eq!(shape(&[2, 2]).conjugate(), shape(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hook_count_examples() {
        // Frozen from the backtracking enumerator below.
        assert_eq!(hook_length_count(&shape(&[2, 2])), TableauCount::from(2));
        assert_eq!(hook_length_count(&shape(&[1])), TableauCount::from(1));
        assert_eq!(hook_length_count(&shape(&[2, 2, 2])), TableauCount::from(5));
        assert_eq!(hook_length_count(&Partition::empty()), TableauCount::from(1));
    }

    #[test]
    fn enumeration_examples() {
        let cap = DEFAULT_ENUMERATION_CAP;
        assert_eq!(
            enumerate_standard_tableaux(&shape(&[2, 1]), cap).unwrap(),
            TableauCount::from(2)
        );
        assert_eq!(
            enumerate_standard_tableaux(&shape(&[3]), cap).unwrap(),
            TableauCount::from(1)
        );
        assert_eq!(
            enumerate_standard_tableaux(&shape(&[2, 2]), cap).unwrap(),
            TableauCount::from(2)
        );
        assert_eq!(
            enumerate_standard_tableaux(&Partition::empty(), cap).unwrap(),
            TableauCount::from(1)
        );
    }

    #[test]
    fn enumeration_cap_enforced() {
        let big = Partition::rectangle(5, 4).unwrap();
        assert_eq!(
            enumerate_standard_tableaux(&big, 16),
            Err(PartitionError::TooManyCells { size: 20, cap: 16 })
        );
    }

    #[test]
    fn factorial_formula_examples() {
        // Frozen from enumerate_standard_tableaux on the matching rectangles.
        assert_eq!(castelnuovo_factorial(2, 2).unwrap(), TableauCount::from(2));
        assert_eq!(castelnuovo_factorial(2, 3).unwrap(), TableauCount::from(5));
        for k in 1..=8 {
            assert_eq!(castelnuovo_factorial(1, k).unwrap(), TableauCount::from(1));
        }
        assert_eq!(castelnuovo_factorial(0, 2), Err(PartitionError::ZeroSide));
    }

    #[test]
    fn hook_formula_matches_enumeration_up_to_12_cells() {
        for n in 0..=12 {
            for lambda in partitions_of(n) {
                let enumerated = enumerate_standard_tableaux(&lambda, 12).unwrap();
                assert_eq!(
                    hook_length_count(&lambda),
                    enumerated,
                    "disagreement on shape {lambda}"
                );
            }
        }
    }

    #[test]
    fn factorial_formula_matches_hook_count_on_rectangles() {
        for h in 1..=12u32 {
            for k in 1..=12u32 {
                if h * k > 12 {
                    continue;
                }
                let rect = Partition::rectangle(h, k).unwrap();
                assert_eq!(
                    castelnuovo_factorial(h, k).unwrap(),
                    hook_length_count(&rect),
                    "disagreement at h={h} k={k}"
                );
            }
        }
    }

    #[test]
    fn factorial_formula_symmetric_in_h_and_k() {
        for h in 1..=6u32 {
            for k in 1..=6u32 {
                assert_eq!(
                    castelnuovo_factorial(h, k).unwrap(),
                    castelnuovo_factorial(k, h).unwrap()
                );
            }
        }
    }

    proptest! {
        #[test]
        fn conjugate_is_an_involution(parts in proptest::collection::vec(1u32..=6, 0..6)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let lambda = Partition::new(sorted).unwrap();
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda);
        }

        #[test]
        fn conjugate_preserves_tableau_count(parts in proptest::collection::vec(1u32..=5, 0..5)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let lambda = Partition::new(sorted).unwrap();
            prop_assert_eq!(
                hook_length_count(&lambda),
                hook_length_count(&lambda.conjugate())
            );
        }
    }
}
