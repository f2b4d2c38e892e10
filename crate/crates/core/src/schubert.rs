//! Schubert calculus on a Grassmannian, restricted to powers of one special
//! class.
//!
//! `G(a, N)` is the variety of `a`-dimensional linear subspaces of an
//! `N`-dimensional vector space. Its cohomology has a basis of Schubert
//! classes `sigma_lambda` indexed by partitions inside the `a x (N-a)` box,
//! and the special class `sigma_c` is the locus of subspaces meeting a fixed
//! subspace of dimension `N - a - c + 1` nontrivially.
//!
//! Multiplication by `sigma_c` follows the Pieri rule: add `c` boxes to the
//! shape, no two in the same column, and discard anything that leaves the
//! box. Iterating from the identity computes `sigma_c^m`; when
//! `m * c = a(N-a)` the coefficient of the full-box class is the finite
//! answer to the corresponding incidence problem.

use crate::partitions::Partition;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchubertError {
    /// Requires 1 <= a <= N-1.
    InvalidGrassmannian { a: u32, n: u32 },
    /// The shape does not fit in the a x (N-a) box.
    ShapeOutsideBox,
    /// The Pieri degree must satisfy 1 <= c <= N-a.
    CodimOutOfRange { c: u32, max: u32 },
    /// repetitions * c must equal a(N-a) for a zero-dimensional problem.
    DimensionMismatch { expected: u64, got: u64 },
    /// Every subspace meets every line; the incidence condition is empty.
    DegenerateIncidence,
    /// Elements of different Grassmannians cannot be combined.
    GrassmannianMismatch,
    /// The factorial comparison needs h >= 2; with h = 1 there are no
    /// condition lines and the ambient space degenerates.
    TrivialFamily,
}

impl fmt::Display for SchubertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchubertError::InvalidGrassmannian { a, n } => {
                write!(f, "invalid Grassmannian G({a},{n}): need 1 <= a <= N-1")
            }
            SchubertError::ShapeOutsideBox => write!(f, "shape does not fit the Schubert box"),
            SchubertError::CodimOutOfRange { c, max } => {
                write!(f, "special class degree {c} outside [1, {max}]")
            }
            SchubertError::DimensionMismatch { expected, got } => {
                write!(
                    f,
                    "total condition codimension {got} does not match variety dimension {expected}"
                )
            }
            SchubertError::DegenerateIncidence => {
                write!(f, "meeting a line imposes no condition on this Grassmannian")
            }
            SchubertError::GrassmannianMismatch => {
                write!(f, "elements live on different Grassmannians")
            }
            SchubertError::TrivialFamily => {
                write!(f, "h must be at least 2 for the incidence construction")
            }
        }
    }
}

impl std::error::Error for SchubertError {}

/// The Grassmannian of `a`-dimensional subspaces of an `N`-dimensional
/// vector space; projectively, `(a-1)`-planes in `P^(N-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrassmannianSpec {
    a: u32,
    n: u32,
}

impl GrassmannianSpec {
    pub fn new(a: u32, n: u32) -> Result<Self, SchubertError> {
        if a < 1 || a >= n {
            return Err(SchubertError::InvalidGrassmannian { a, n });
        }
        Ok(GrassmannianSpec { a, n })
    }

    pub fn subspace_dim(&self) -> u32 {
        self.a
    }

    pub fn ambient_dim(&self) -> u32 {
        self.n
    }

    /// Rows of the Schubert box.
    pub fn box_rows(&self) -> u32 {
        self.a
    }

    /// Columns of the Schubert box.
    pub fn box_cols(&self) -> u32 {
        self.n - self.a
    }

    /// Dimension of the variety, `a(N-a)`.
    pub fn dimension(&self) -> u64 {
        u64::from(self.a) * u64::from(self.n - self.a)
    }

    /// Shape of the point class: the full box.
    pub fn point_class_shape(&self) -> Partition {
        Partition::rectangle(self.box_rows(), self.box_cols())
            .expect("box sides are positive by construction")
    }

    fn admits_shape(&self, shape: &Partition) -> bool {
        shape.fits_in_box(self.box_rows() as usize, self.box_cols())
    }
}

impl fmt::Display for GrassmannianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.a, self.n)
    }
}

/// A Schubert basis class on a fixed Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    shape: Partition,
}

impl SchubertClass {
    pub fn new(g: &GrassmannianSpec, shape: Partition) -> Result<Self, SchubertError> {
        if !g.admits_shape(&shape) {
            return Err(SchubertError::ShapeOutsideBox);
        }
        Ok(SchubertClass { shape })
    }

    /// The special class `sigma_c`: a single row of length `c`.
    pub fn special(g: &GrassmannianSpec, c: u32) -> Result<Self, SchubertError> {
        if c < 1 || c > g.box_cols() {
            return Err(SchubertError::CodimOutOfRange {
                c,
                max: g.box_cols(),
            });
        }
        Ok(SchubertClass {
            shape: Partition::new(vec![c]).expect("single positive part"),
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }
}

/// A formal integer combination of Schubert classes on one Grassmannian.
/// Terms are kept in a sorted map with no zero coefficients, so equality is
/// structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyElement {
    grassmannian: GrassmannianSpec,
    terms: BTreeMap<Partition, BigInt>,
}

impl CohomologyElement {
    pub fn zero(g: GrassmannianSpec) -> Self {
        CohomologyElement {
            grassmannian: g,
            terms: BTreeMap::new(),
        }
    }

    /// The identity class `sigma_()`.
    pub fn identity(g: GrassmannianSpec) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), BigInt::one());
        CohomologyElement {
            grassmannian: g,
            terms,
        }
    }

    pub fn from_class(g: GrassmannianSpec, class: &SchubertClass) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(class.shape().clone(), BigInt::one());
        CohomologyElement {
            grassmannian: g,
            terms,
        }
    }

    pub fn grassmannian(&self) -> &GrassmannianSpec {
        &self.grassmannian
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, shape: &Partition) -> BigInt {
        self.terms.get(shape).cloned().unwrap_or_else(BigInt::zero)
    }

    fn insert(&mut self, shape: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(shape);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &CohomologyElement) -> Result<CohomologyElement, SchubertError> {
        if self.grassmannian != other.grassmannian {
            return Err(SchubertError::GrassmannianMismatch);
        }
        let mut out = self.clone();
        for (shape, coeff) in &other.terms {
            out.insert(shape.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> CohomologyElement {
        if factor.is_zero() {
            return CohomologyElement::zero(self.grassmannian);
        }
        CohomologyElement {
            grassmannian: self.grassmannian,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c * factor))
                .collect(),
        }
    }
}

/// All partitions obtained from `base` by adding `c` boxes, no two in the
/// same column, staying inside a `max_rows x max_cols` box.
fn horizontal_strip_additions(
    base: &Partition,
    c: u32,
    max_rows: u32,
    max_cols: u32,
) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc: Vec<u32> = Vec::with_capacity(max_rows as usize);
    strips(base, 0, c, max_rows, max_cols, &mut acc, &mut out);
    out
}

fn strips(
    base: &Partition,
    row: u32,
    remaining: u32,
    max_rows: u32,
    max_cols: u32,
    acc: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == max_rows {
        if remaining == 0 {
            let parts: Vec<u32> = acc.iter().copied().take_while(|&p| p > 0).collect();
            out.push(Partition::new(parts).expect("strip rows are weakly decreasing"));
        }
        return;
    }
    let lo = base.part(row as usize);
    // New boxes in this row occupy columns lo..hi; the row above the added
    // boxes must already exist, which bounds the new length by the previous
    // row of the old shape.
    let ceiling = if row == 0 {
        max_cols
    } else {
        base.part(row as usize - 1)
    };
    let hi = ceiling.min(lo + remaining);
    for v in lo..=hi {
        acc.push(v);
        strips(base, row + 1, remaining - (v - lo), max_rows, max_cols, acc, out);
        acc.pop();
    }
}

/// Multiplies `x` by the special class `sigma_c` via the Pieri rule. Shapes
/// pushed outside the box are dropped on the spot; they are zero in the
/// cohomology of this Grassmannian and can never reach the point class.
pub fn pieri_multiply(
    g: &GrassmannianSpec,
    x: &CohomologyElement,
    c: u32,
) -> Result<CohomologyElement, SchubertError> {
    if x.grassmannian() != g {
        return Err(SchubertError::GrassmannianMismatch);
    }
    if c < 1 || c > g.box_cols() {
        return Err(SchubertError::CodimOutOfRange {
            c,
            max: g.box_cols(),
        });
    }
    let mut out = CohomologyElement::zero(*g);
    for (shape, coeff) in x.terms() {
        for grown in horizontal_strip_additions(shape, c, g.box_rows(), g.box_cols()) {
            out.insert(grown, coeff.clone());
        }
    }
    Ok(out)
}

/// A zero-dimensional power of one special class: compute the coefficient of
/// the point class in `sigma_c^repetitions` on `grassmannian`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchubertProblemInstance {
    grassmannian: GrassmannianSpec,
    condition_codim: u32,
    repetitions: u32,
}

impl SchubertProblemInstance {
    pub fn new(
        grassmannian: GrassmannianSpec,
        condition_codim: u32,
        repetitions: u32,
    ) -> Result<Self, SchubertError> {
        if condition_codim < 1 || condition_codim > grassmannian.box_cols() {
            return Err(SchubertError::CodimOutOfRange {
                c: condition_codim,
                max: grassmannian.box_cols(),
            });
        }
        let total = u64::from(condition_codim) * u64::from(repetitions);
        if total != grassmannian.dimension() {
            return Err(SchubertError::DimensionMismatch {
                expected: grassmannian.dimension(),
                got: total,
            });
        }
        Ok(SchubertProblemInstance {
            grassmannian,
            condition_codim,
            repetitions,
        })
    }

    pub fn grassmannian(&self) -> &GrassmannianSpec {
        &self.grassmannian
    }

    pub fn condition_codim(&self) -> u32 {
        self.condition_codim
    }

    pub fn repetitions(&self) -> u32 {
        self.repetitions
    }
}

/// Evaluates `sigma_c^repetitions` by iterated Pieri multiplication and
/// returns the coefficient of the point class. Zero when the power misses
/// the point class entirely.
pub fn intersection_number(problem: &SchubertProblemInstance) -> BigUint {
    let g = problem.grassmannian;
    let mut acc = CohomologyElement::identity(g);
    for _ in 0..problem.repetitions {
        acc = pieri_multiply(&g, &acc, problem.condition_codim)
            .expect("codimension validated at construction");
    }
    let coeff = acc.coefficient(&g.point_class_shape());
    assert!(
        !coeff.is_negative(),
        "Pieri products of effective classes cannot go negative"
    );
    coeff.magnitude().clone()
}

/// Codimension of the condition that a variable `a`-dimensional subspace of
/// an `N`-dimensional space meets a fixed 2-dimensional subspace: `N - a - 1`.
/// Degenerate when that is below 1, i.e. every subspace already meets every
/// line.
pub fn incidence_with_line_class(g: &GrassmannianSpec) -> Result<u32, SchubertError> {
    let c = g.ambient_dim() - g.subspace_dim() - 1;
    if c < 1 {
        return Err(SchubertError::DegenerateIncidence);
    }
    Ok(c)
}

/// The incidence count behind the factorial formula: `hk` lines in a
/// projective space of dimension `(k+1)(h-1)`, met by projective
/// `(k(h-1)-1)`-planes. In linear-algebra form that is `sigma_(h-1)^(hk)` on
/// `G(k(h-1), k(h-1)+h)`, and the result equals `castelnuovo_factorial(h, k)`.
pub fn castelnuovo_schubert_count(h: u32, k: u32) -> Result<BigUint, SchubertError> {
    if h < 2 {
        return Err(SchubertError::TrivialFamily);
    }
    if k < 1 {
        return Err(SchubertError::InvalidGrassmannian { a: 0, n: h });
    }
    let a = k * (h - 1);
    let n = a + h;
    let g = GrassmannianSpec::new(a, n)?;
    let c = incidence_with_line_class(&g)?;
    debug_assert_eq!(c, h - 1);
    let problem = SchubertProblemInstance::new(g, c, h * k)
        .expect("h*k repetitions of codim h-1 always fill the box");
    Ok(intersection_number(&problem))
}
