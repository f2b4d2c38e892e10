//! Exact coefficient fields for the geometry kernels: the rationals, prime
//! fields `F_p`, and quadratic extensions `F_(p^2)`.
//!
//! Elements stay plain data; a field object carries the context (modulus,
//! non-residue) and performs the arithmetic. No floating point anywhere.

use super::GeometryError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub use num_rational::BigRational;

/// Context object for an exact field. All operations are total except
/// inversion of zero.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// None exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Embed a signed machine integer.
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Embed an arbitrary-precision integer.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Short field name for diagnostics and file headers.
    fn name(&self) -> String;
}

/// A finite field whose elements can be exhaustively enumerated.
pub trait EnumerableField: Field {
    fn order(&self) -> u64;
    /// The element with the given index in `0..order()`.
    fn element_at(&self, index: u64) -> Self::Elem;
}

/// The field of exact rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn name(&self) -> String {
        "rational".to_string()
    }
}

/// Largest modulus accepted for prime fields.
pub const MAX_PRIME_MODULUS: u64 = 1 << 31;

/// Deterministic Miller-Rabin, valid far beyond the 2^31 modulus bound.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The prime field `F_p`, elements represented as `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, GeometryError> {
        if p > MAX_PRIME_MODULUS {
            return Err(GeometryError::ModulusTooLarge { p });
        }
        if !is_prime(p) {
            return Err(GeometryError::NotPrime { p });
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        let m = self.p as i64;
        (n.rem_euclid(m)) as u64
    }

    /// Legendre symbol for odd p: 1, p-1 (for -1), or 0.
    fn euler_criterion(&self, a: u64) -> u64 {
        pow_mod(a, (self.p - 1) / 2, self.p)
    }

    /// True when `a` is a nonzero square modulo p.
    pub fn is_quadratic_residue(&self, a: u64) -> bool {
        let a = a % self.p;
        if a == 0 {
            return false;
        }
        if self.p == 2 {
            return true;
        }
        self.euler_criterion(a) == 1
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a % self.p == 0 {
            None
        } else {
            Some(pow_mod(*a, self.p - 2, self.p))
        }
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a % self.p == 0
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let mut r = n % &m;
        if r.is_negative() {
            r += &m;
        }
        let digits = r.to_u64_digits().1;
        digits.first().copied().unwrap_or(0)
    }

    fn name(&self) -> String {
        format!("{}", self.p)
    }
}

impl EnumerableField for PrimeField {
    fn order(&self) -> u64 {
        self.p
    }

    fn element_at(&self, index: u64) -> u64 {
        debug_assert!(index < self.p);
        index
    }
}

/// An element `a + b*theta` of `F_(p^2)` with `theta^2` a fixed non-residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadExtElem {
    pub a: u64,
    pub b: u64,
}

/// The quadratic extension `F_(p^2) = F_p(theta)`, `theta^2 = nonresidue`.
/// Irreducibility of `x^2 - nonresidue` is verified at construction, which
/// also forces `p` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticField {
    base: PrimeField,
    nonresidue: u64,
}

impl QuadraticField {
    pub fn new(p: u64) -> Result<Self, GeometryError> {
        let base = PrimeField::new(p)?;
        if p == 2 {
            // x^2 - c is never irreducible over F_2; this representation
            // cannot model F_4.
            return Err(GeometryError::NoQuadraticExtension { p });
        }
        let nonresidue = (2..p)
            .find(|&n| !base.is_quadratic_residue(n))
            .expect("every odd prime field has a non-residue");
        let field = QuadraticField { base, nonresidue };
        assert!(
            base.euler_criterion(nonresidue) == p - 1,
            "chosen constant is not a non-residue"
        );
        Ok(field)
    }

    pub fn modulus(&self) -> u64 {
        self.base.p
    }

    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    /// The subfield embedding of `F_p`.
    pub fn lift(&self, a: u64) -> QuadExtElem {
        QuadExtElem { a: a % self.base.p, b: 0 }
    }
}

impl Field for QuadraticField {
    type Elem = QuadExtElem;

    fn zero(&self) -> QuadExtElem {
        QuadExtElem { a: 0, b: 0 }
    }

    fn one(&self) -> QuadExtElem {
        QuadExtElem { a: 1, b: 0 }
    }

    fn add(&self, x: &QuadExtElem, y: &QuadExtElem) -> QuadExtElem {
        QuadExtElem {
            a: self.base.add(&x.a, &y.a),
            b: self.base.add(&x.b, &y.b),
        }
    }

    fn sub(&self, x: &QuadExtElem, y: &QuadExtElem) -> QuadExtElem {
        QuadExtElem {
            a: self.base.sub(&x.a, &y.a),
            b: self.base.sub(&x.b, &y.b),
        }
    }

    fn mul(&self, x: &QuadExtElem, y: &QuadExtElem) -> QuadExtElem {
        // (a + b t)(c + d t) = ac + nr bd + (ad + bc) t
        let f = &self.base;
        let ac = f.mul(&x.a, &y.a);
        let bd = f.mul(&x.b, &y.b);
        let ad = f.mul(&x.a, &y.b);
        let bc = f.mul(&x.b, &y.a);
        QuadExtElem {
            a: f.add(&ac, &f.mul(&self.nonresidue, &bd)),
            b: f.add(&ad, &bc),
        }
    }

    fn neg(&self, x: &QuadExtElem) -> QuadExtElem {
        QuadExtElem {
            a: self.base.neg(&x.a),
            b: self.base.neg(&x.b),
        }
    }

    fn inv(&self, x: &QuadExtElem) -> Option<QuadExtElem> {
        // (a + b t)^-1 = (a - b t) / (a^2 - nr b^2); the norm vanishes only
        // at zero because nr is a non-residue.
        let f = &self.base;
        let norm = f.sub(&f.mul(&x.a, &x.a), &f.mul(&self.nonresidue, &f.mul(&x.b, &x.b)));
        let ninv = f.inv(&norm)?;
        Some(QuadExtElem {
            a: f.mul(&x.a, &ninv),
            b: f.mul(&f.neg(&x.b), &ninv),
        })
    }

    fn is_zero(&self, x: &QuadExtElem) -> bool {
        x.a == 0 && x.b == 0
    }

    fn from_i64(&self, n: i64) -> QuadExtElem {
        QuadExtElem {
            a: self.base.from_i64(n),
            b: 0,
        }
    }

    fn from_bigint(&self, n: &BigInt) -> QuadExtElem {
        QuadExtElem {
            a: self.base.from_bigint(n),
            b: 0,
        }
    }

    fn name(&self) -> String {
        format!("{}^2", self.base.p)
    }
}

impl EnumerableField for QuadraticField {
    fn order(&self) -> u64 {
        self.base.p * self.base.p
    }

    fn element_at(&self, index: u64) -> QuadExtElem {
        debug_assert!(index < self.order());
        QuadExtElem {
            a: index % self.base.p,
            b: index / self.base.p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_checker() {
        let primes = [2u64, 3, 5, 7, 11, 101, 65537, 2147483647];
        for p in primes {
            assert!(is_prime(p), "{p} is prime");
        }
        let composites = [0u64, 1, 4, 9, 91, 561, 65539 * 3, 2147483647 - 1];
        for c in composites {
            assert!(!is_prime(c), "{c} is composite");
        }
    }

    #[test]
    fn prime_field_construction() {
        assert!(PrimeField::new(7).is_ok());
        assert!(matches!(
            PrimeField::new(6),
            Err(GeometryError::NotPrime { p: 6 })
        ));
        assert!(matches!(
            PrimeField::new((1 << 31) + 11),
            Err(GeometryError::ModulusTooLarge { .. })
        ));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.neg(&3), 4);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
        for a in 1..7u64 {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
        }
    }

    #[test]
    fn quadratic_field_arithmetic() {
        let f = QuadraticField::new(7).unwrap();
        // 3 is the least non-residue mod 7 (1, 2, 4 are squares).
        assert_eq!(f.nonresidue(), 3);
        let theta = QuadExtElem { a: 0, b: 1 };
        assert_eq!(f.mul(&theta, &theta), QuadExtElem { a: 3, b: 0 });
        for idx in 1..f.order() {
            let x = f.element_at(idx);
            let inv = f.inv(&x).unwrap();
            assert_eq!(f.mul(&x, &inv), f.one());
        }
        assert_eq!(f.inv(&f.zero()), None);
    }

    #[test]
    fn quadratic_field_rejects_p2() {
        assert!(matches!(
            QuadraticField::new(2),
            Err(GeometryError::NoQuadraticExtension { p: 2 })
        ));
    }

    #[test]
    fn enumeration_is_a_bijection() {
        let f = QuadraticField::new(5).unwrap();
        let mut seen = std::collections::HashSet::new();
        for i in 0..f.order() {
            let e = f.element_at(i);
            assert!(seen.insert((e.a, e.b)));
        }
        assert_eq!(seen.len(), 25);
    }
}
