//! Exact scalar rings and the common interface the rest of the crate is
//! generic over.
//!
//! Three concrete rings are supported: arbitrary-precision integers,
//! rationals in lowest terms, and sparse multivariate polynomials with
//! integer coefficients (see [`crate::poly`]). Everything downstream
//! (sequences, matrices, determinants) only needs the operations of a
//! commutative ring with identity plus exact division, so it is written
//! against the [`Ring`] trait and instantiated per scalar type.

use std::fmt::{Debug, Display};

use num_integer::Integer as IntegerOps;
use num_traits::Zero;
use thiserror::Error;

/// Arbitrary-precision signed integer, canonical sign-magnitude form.
pub type Integer = num_bigint::BigInt;

/// Arbitrary-precision rational, reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors raised by exact scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// Binary operation applied to values from two different ambient rings.
    /// Values are never coerced silently.
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("division by zero")]
    DivisionByZero,
    /// Division left a nonzero remainder. Inside elimination code this
    /// signals an algorithm bug, not a data error.
    #[error("non-exact division: ({dividend}) / ({divisor})")]
    NotDivisible { dividend: String, divisor: String },
    #[error("missing variable in assignment: {0}")]
    MissingVariable(&'static str),
}

/// Commutative ring with identity and exact division.
///
/// All implementations are immutable value types: no operation mutates its
/// inputs, so values can be shared freely across threads.
pub trait Ring: Clone + Eq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_integer(n: &Integer) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Exact division: returns `q` with `q * rhs == self`, or an error if
    /// `rhs` is zero or does not divide exactly.
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError>;

    /// Name of the ambient ring, used in mismatch reports.
    fn ring_name() -> &'static str;

    /// Exponentiation by squaring, with the convention `0^0 = 1`.
    fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }
}

/// `(-1)^k` in an arbitrary ring.
pub fn neg_one_pow<R: Ring>(k: usize) -> R {
    if k % 2 == 0 {
        R::one()
    } else {
        R::one().neg()
    }
}

impl Ring for Integer {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn from_i64(n: i64) -> Self {
        Integer::from(n)
    }

    fn from_integer(n: &Integer) -> Self {
        n.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if Zero::is_zero(rhs) {
            return Err(ArithError::DivisionByZero);
        }
        let (q, r) = self.div_rem(rhs);
        if !Zero::is_zero(&r) {
            return Err(ArithError::NotDivisible {
                dividend: self.to_string(),
                divisor: rhs.to_string(),
            });
        }
        Ok(q)
    }

    fn ring_name() -> &'static str {
        "integer"
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(Integer::from(n))
    }

    fn from_integer(n: &Integer) -> Self {
        Rational::from_integer(n.clone())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if Zero::is_zero(rhs) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn ring_name() -> &'static str {
        "rational"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_int(rng: &mut ChaCha8Rng) -> Integer {
        Integer::from(rng.gen_range(-1_000_000i64..=1_000_000))
    }

    fn rand_rat(rng: &mut ChaCha8Rng) -> Rational {
        let n = Integer::from(rng.gen_range(-999i64..=999));
        let mut d = rng.gen_range(-99i64..=99);
        if d == 0 {
            d = 7;
        }
        Rational::new(n, Integer::from(d))
    }

    fn axioms<R: Ring>(a: &R, b: &R, c: &R) {
        assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
        assert_eq!(a.add(b), b.add(a));
        assert_eq!(a.mul(b), b.mul(a));
        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
        assert_eq!(a.add(&R::zero()), *a);
        assert_eq!(a.mul(&R::one()), *a);
        assert_eq!(a.add(&a.neg()), R::zero());
        assert_eq!(a.sub(b), a.add(&b.neg()));
    }

    #[test]
    fn integer_ring_axioms_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let (a, b, c) = (rand_int(&mut rng), rand_int(&mut rng), rand_int(&mut rng));
            axioms(&a, &b, &c);
        }
    }

    #[test]
    fn rational_ring_axioms_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..1000 {
            let (a, b, c) = (rand_rat(&mut rng), rand_rat(&mut rng), rand_rat(&mut rng));
            axioms(&a, &b, &c);
        }
    }

    #[test]
    fn exact_div_inverts_mul() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let a = rand_int(&mut rng);
            let mut b = rand_int(&mut rng);
            if Ring::is_zero(&b) {
                b = Integer::from(3);
            }
            assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);

            let ar = rand_rat(&mut rng);
            let mut br = rand_rat(&mut rng);
            if Ring::is_zero(&br) {
                br = Rational::from_i64(5);
            }
            assert_eq!(ar.mul(&br).exact_div(&br).unwrap(), ar);
        }
    }

    #[test]
    fn integer_small_examples() {
        let five = Integer::from(2).add(&Integer::from(3));
        assert_eq!(five, Integer::from(5));
        assert_eq!(
            Integer::from(-12).exact_div(&Integer::from(4)).unwrap(),
            Integer::from(-3)
        );
        assert!(matches!(
            Integer::from(7).exact_div(&Integer::from(2)),
            Err(ArithError::NotDivisible { .. })
        ));
        assert!(matches!(
            Integer::from(7).exact_div(&Integer::from(0)),
            Err(ArithError::DivisionByZero)
        ));
    }

    #[test]
    fn rational_reduction() {
        let half = Rational::new(Integer::from(1), Integer::from(2));
        let third = Rational::new(Integer::from(1), Integer::from(3));
        let sum = half.add(&third);
        assert_eq!(sum, Rational::new(Integer::from(5), Integer::from(6)));
        // canonical form keeps the denominator positive
        let r = Rational::new(Integer::from(2), Integer::from(-4));
        assert_eq!(r, Rational::new(Integer::from(-1), Integer::from(2)));
    }

    #[test]
    fn zero_pow_zero_is_one() {
        assert_eq!(Ring::pow(&Integer::from(0), 0), Integer::from(1));
        assert_eq!(
            Ring::pow(&<Rational as Ring>::zero(), 0),
            <Rational as Ring>::one()
        );
        assert_eq!(Ring::pow(&Integer::from(2), 10), Integer::from(1024));
    }
}
