//! Rational normal curves, their chords, and the series cut out by
//! hyperplanes through a fixed center.
//!
//! The degree-`d` rational normal curve embeds the projective line in `P^d`
//! by `(s:t) -> (s^d, s^(d-1) t, ..., t^d)`. A chord is the span of two
//! points with distinct parameters. Hyperplanes through a fixed linear
//! center pull back to a space of degree-`d` binary forms, and the chord
//! incidence question becomes a vanishing question for those forms.

use super::field::{BigRational, Field, Rationals};
use super::matrix::Matrix;
use super::subspace::LinearSubspace;
use super::GeometryError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

/// A point of the projective line: a homogeneous pair `(s : t)`, not both
/// zero, stored in lowest terms with a canonical sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveParameter {
    s: BigInt,
    t: BigInt,
}

impl CurveParameter {
    pub fn new(s: BigInt, t: BigInt) -> Result<Self, GeometryError> {
        if s.is_zero() && t.is_zero() {
            return Err(GeometryError::ZeroParameter);
        }
        let g = s.gcd(&t);
        let (mut s, mut t) = (s / &g, t / &g);
        let lead_negative = if s.is_zero() { t.is_negative() } else { s.is_negative() };
        if lead_negative {
            s = -s;
            t = -t;
        }
        Ok(CurveParameter { s, t })
    }

    /// The affine parameter value `(n : 1)`.
    pub fn from_integer(n: i64) -> Self {
        CurveParameter::new(BigInt::from(n), BigInt::from(1)).expect("t = 1 is nonzero")
    }

    /// The point at infinity `(1 : 0)`.
    pub fn infinity() -> Self {
        CurveParameter::new(BigInt::from(1), BigInt::zero()).expect("s = 1 is nonzero")
    }

    pub fn numerator(&self) -> &BigInt {
        &self.s
    }

    pub fn denominator(&self) -> &BigInt {
        &self.t
    }

    /// Projective equality `s1 t2 == s2 t1`; with the canonical storage this
    /// is plain equality, kept explicit for clarity at call sites.
    pub fn same_point(&self, other: &CurveParameter) -> bool {
        &self.s * &other.t == &other.s * &self.t
    }
}

impl fmt::Display for CurveParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.s, self.t)
    }
}

/// A point on the degree-`d` rational normal curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalNormalCurvePoint {
    degree: u32,
    parameter: CurveParameter,
}

impl RationalNormalCurvePoint {
    pub fn new(degree: u32, parameter: CurveParameter) -> Self {
        RationalNormalCurvePoint { degree, parameter }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn parameter(&self) -> &CurveParameter {
        &self.parameter
    }

    /// Coordinates `(s^d, s^(d-1) t, ..., t^d)` in any field.
    pub fn embed<F: Field>(&self, field: &F) -> Vec<F::Elem> {
        let d = self.degree as usize;
        let s = field.from_bigint(&self.parameter.s);
        let t = field.from_bigint(&self.parameter.t);
        let mut s_pows = vec![field.one()];
        let mut t_pows = vec![field.one()];
        for i in 1..=d {
            s_pows.push(field.mul(&s_pows[i - 1], &s));
            t_pows.push(field.mul(&t_pows[i - 1], &t));
        }
        (0..=d).map(|i| field.mul(&s_pows[d - i], &t_pows[i])).collect()
    }
}

/// The chord of the degree-`d` rational normal curve through two points with
/// distinct parameters. Tangent lines (coincident parameters) are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chord {
    degree: u32,
    first: CurveParameter,
    second: CurveParameter,
}

impl Chord {
    pub fn new(
        degree: u32,
        first: CurveParameter,
        second: CurveParameter,
    ) -> Result<Self, GeometryError> {
        if first.same_point(&second) {
            return Err(GeometryError::CoincidentParameters);
        }
        Ok(Chord {
            degree,
            first,
            second,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn endpoints(&self) -> (&CurveParameter, &CurveParameter) {
        (&self.first, &self.second)
    }

    /// The 2-dimensional span of the two embedded endpoints. Two distinct
    /// points of a rational normal curve are always independent; this is
    /// asserted rather than trusted.
    pub fn subspace<F: Field>(&self, field: &F) -> LinearSubspace<F> {
        let p = RationalNormalCurvePoint::new(self.degree, self.first.clone()).embed(field);
        let q = RationalNormalCurvePoint::new(self.degree, self.second.clone()).embed(field);
        LinearSubspace::from_basis(field.clone(), self.degree as usize + 1, vec![p, q])
            .expect("distinct curve points span a plane")
    }
}

/// A homogeneous binary form of degree `d` with rational coefficients;
/// `coeffs[i]` multiplies `s^(d-i) t^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<BigRational>,
}

impl BinaryForm {
    pub fn new(degree: u32, coeffs: Vec<BigRational>) -> Result<Self, GeometryError> {
        if coeffs.len() != degree as usize + 1 {
            return Err(GeometryError::AmbientMismatch {
                left: degree as usize + 1,
                right: coeffs.len(),
            });
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Evaluation at a homogeneous parameter. The value depends on the
    /// chosen representative of the point, its vanishing does not.
    pub fn eval(&self, at: &CurveParameter) -> BigRational {
        let field = Rationals;
        let point = RationalNormalCurvePoint::new(self.degree, at.clone());
        let coords = point.embed(&field);
        let mut acc = field.zero();
        for (c, x) in self.coeffs.iter().zip(coords.iter()) {
            acc += c * x;
        }
        acc
    }

    pub fn vanishes_at(&self, at: &CurveParameter) -> bool {
        self.eval(at).is_zero()
    }
}

/// The linear series cut out on the degree-`d` rational normal curve by
/// hyperplanes containing `center`: a basis of the hyperplane coefficient
/// vectors vanishing on `center`, read as binary forms. For a center of
/// dimension `d - r` the space of forms has dimension `r + 1`.
pub fn pullback_series(
    center: &LinearSubspace<Rationals>,
) -> Result<Vec<BinaryForm>, GeometryError> {
    let ambient = center.ambient_dim();
    if ambient < 2 {
        return Err(GeometryError::SeriesDimension {
            ambient,
            dim: center.dim(),
        });
    }
    let d = (ambient - 1) as u32;
    let dim = center.dim();
    // dim = d - r with 1 <= r < d keeps the series nontrivial and proper.
    if dim == 0 || dim >= ambient - 1 {
        return Err(GeometryError::SeriesDimension { ambient, dim });
    }
    let kernel = center.basis_matrix().kernel_basis();
    debug_assert_eq!(kernel.len(), ambient - dim);
    kernel
        .into_iter()
        .map(|coeffs| BinaryForm::new(d, coeffs))
        .collect()
}

/// True when every form in the span of `series` vanishing at `t_p` also
/// vanishes at `t_q`. Decided by ranks of the evaluation constraints: the
/// condition holds exactly when the evaluation row at `t_q` is a multiple of
/// the one at `t_p`.
pub fn imposes_identification(
    series: &[BinaryForm],
    t_p: &CurveParameter,
    t_q: &CurveParameter,
) -> Result<bool, GeometryError> {
    if series.is_empty() {
        return Err(GeometryError::EmptySeries);
    }
    if t_p.same_point(t_q) {
        return Err(GeometryError::CoincidentParameters);
    }
    let eval_p: Vec<BigRational> = series.iter().map(|f| f.eval(t_p)).collect();
    let eval_q: Vec<BigRational> = series.iter().map(|f| f.eval(t_q)).collect();
    let single = Matrix::from_rows(Rationals, vec![eval_p.clone()])?;
    let stacked = Matrix::from_rows(Rationals, vec![eval_p, eval_q])?;
    Ok(single.rank() == stacked.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qvec(vals: &[i64]) -> Vec<BigRational> {
        vals.iter().map(|&v| q(v)).collect()
    }

    #[test]
    fn parameters_normalize() {
        let a = CurveParameter::new(BigInt::from(2), BigInt::from(4)).unwrap();
        let b = CurveParameter::new(BigInt::from(-1), BigInt::from(-2)).unwrap();
        assert_eq!(a, b);
        assert!(a.same_point(&b));
        assert!(CurveParameter::new(BigInt::zero(), BigInt::zero()).is_err());
    }

    #[test]
    fn embedding_at_zero_and_infinity() {
        let zero = RationalNormalCurvePoint::new(3, CurveParameter::from_integer(0));
        assert_eq!(zero.embed(&Rationals), qvec(&[0, 0, 0, 1]));
        let inf = RationalNormalCurvePoint::new(3, CurveParameter::infinity());
        assert_eq!(inf.embed(&Rationals), qvec(&[1, 0, 0, 0]));
    }

    #[test]
    fn chord_spans_of_monomial_points() {
        // Degree 3, parameters 0 and infinity: the two coordinate axes.
        let chord = Chord::new(
            3,
            CurveParameter::from_integer(0),
            CurveParameter::infinity(),
        )
        .unwrap();
        let space = chord.subspace(&Rationals);
        let expected = LinearSubspace::from_span(
            Rationals,
            4,
            vec![qvec(&[1, 0, 0, 0]), qvec(&[0, 0, 0, 1])],
        )
        .unwrap();
        assert_eq!(space, expected);

        // Degree 2, parameters 0 and 1.
        let chord = Chord::new(
            2,
            CurveParameter::from_integer(0),
            CurveParameter::from_integer(1),
        )
        .unwrap();
        let space = chord.subspace(&Rationals);
        let expected = LinearSubspace::from_span(
            Rationals,
            3,
            vec![qvec(&[1, 1, 1]), qvec(&[0, 0, 1])],
        )
        .unwrap();
        assert_eq!(space, expected);
    }

    #[test]
    fn coincident_parameters_rejected() {
        let t = CurveParameter::from_integer(5);
        assert!(matches!(
            Chord::new(3, t.clone(), t),
            Err(GeometryError::CoincidentParameters)
        ));
    }

    #[test]
    fn pullback_of_the_middle_axis() {
        // d = 2, center spanned by (0,1,0): hyperplanes a0 x0 + a2 x2 = 0,
        // i.e. the forms s^2 and t^2.
        let center =
            LinearSubspace::from_span(Rationals, 3, vec![qvec(&[0, 1, 0])]).unwrap();
        let series = pullback_series(&center).unwrap();
        assert_eq!(series.len(), 2);
        let coeff_rows: Vec<&[BigRational]> =
            series.iter().map(|f| f.coefficients()).collect();
        assert_eq!(coeff_rows[0], &qvec(&[1, 0, 0])[..]);
        assert_eq!(coeff_rows[1], &qvec(&[0, 0, 1])[..]);
    }

    #[test]
    fn pullback_of_a_coordinate_plane() {
        // d = 3, center = span(e0, e1): forms with no s^3 or s^2 t term.
        let center = LinearSubspace::from_span(
            Rationals,
            4,
            vec![qvec(&[1, 0, 0, 0]), qvec(&[0, 1, 0, 0])],
        )
        .unwrap();
        let series = pullback_series(&center).unwrap();
        assert_eq!(series.len(), 2);
        for form in &series {
            assert!(form.coefficients()[0].is_zero());
            assert!(form.coefficients()[1].is_zero());
        }
    }

    #[test]
    fn pullback_rejects_trivial_and_full_centers() {
        let full = LinearSubspace::from_span(
            Rationals,
            3,
            vec![qvec(&[1, 0, 0]), qvec(&[0, 1, 0]), qvec(&[0, 0, 1])],
        )
        .unwrap();
        assert!(matches!(
            pullback_series(&full),
            Err(GeometryError::SeriesDimension { .. })
        ));
        let trivial = LinearSubspace::from_span(Rationals, 3, vec![]).unwrap();
        assert!(matches!(
            pullback_series(&trivial),
            Err(GeometryError::SeriesDimension { .. })
        ));
    }

    #[test]
    fn identification_examples() {
        // Series {s^2, t^2} on d = 2: t^2 vanishes at (1:0) but s^2 does
        // not vanish at (0:1), so no identification either way.
        let series = vec![
            BinaryForm::new(2, qvec(&[1, 0, 0])).unwrap(),
            BinaryForm::new(2, qvec(&[0, 0, 1])).unwrap(),
        ];
        let zero = CurveParameter::from_integer(0);
        let inf = CurveParameter::infinity();
        assert!(!imposes_identification(&series, &zero, &inf).unwrap());

        // The single form s t vanishes at both 0 and infinity.
        let st = vec![BinaryForm::new(2, qvec(&[0, 1, 0])).unwrap()];
        assert!(imposes_identification(&st, &inf, &zero).unwrap());

        assert!(matches!(
            imposes_identification(&st, &zero, &zero),
            Err(GeometryError::CoincidentParameters)
        ));
    }

    #[test]
    fn form_evaluation() {
        // f = s^2 - t^2 vanishes at (1:1) and (1:-1) only.
        let f = BinaryForm::new(2, qvec(&[1, 0, -1])).unwrap();
        assert!(f.vanishes_at(&CurveParameter::from_integer(1)));
        assert!(f.vanishes_at(&CurveParameter::from_integer(-1)));
        assert!(!f.vanishes_at(&CurveParameter::from_integer(2)));
        assert!(!f.vanishes_at(&CurveParameter::infinity()));
    }
}
