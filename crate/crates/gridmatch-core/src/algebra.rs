//! Exact arithmetic in real quadratic fields `Q(sqrt(d))`.
//!
//! Every value is an exact `a + b*sqrt(d)` with rational `a`, `b` and a
//! square-free `d >= 2`. Casting back to an integer is deliberately strict:
//! a leftover irrational or fractional part is reported as an error, which
//! is what lets the closed-form audit catch a wrong printed formula instead
//! of silently rounding it away.

use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator (guaranteed by `BigRational`'s constructors).
pub type Rational = BigRational;

/// `p / q` as an exact rational.
///
/// Panics if `q == 0`; callers only pass literal denominators.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `p` as an exact rational.
pub fn rat(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// An element `a + b*sqrt(d)` of the quadratic field `Q(sqrt(d))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticElement {
    a: Rational,
    b: Rational,
    d: u64,
}

/// Errors from quadratic-field arithmetic and integer casts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// The radicand must be a square-free integer `>= 2`.
    InvalidField(u64),
    /// Both operands of a field operation must share one radicand.
    MixedFields(u64, u64),
    /// An integer (or rational) was required but the value kept an
    /// irrational part; carries the rendered value.
    IrrationalResidue(String),
    /// An integer was required but the value is a non-integer rational;
    /// carries the rendered value.
    FractionalResidue(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::InvalidField(d) => {
                write!(f, "radicand {d} is not a square-free integer >= 2")
            }
            AlgebraError::MixedFields(l, r) => {
                write!(f, "cannot combine elements of Q(sqrt({l})) and Q(sqrt({r}))")
            }
            AlgebraError::IrrationalResidue(v) => {
                write!(f, "value {v} has an irrational part")
            }
            AlgebraError::FractionalResidue(v) => {
                write!(f, "value {v} is not an integer")
            }
        }
    }
}

impl core::error::Error for AlgebraError {}

fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut f = 2u64;
    while f.saturating_mul(f) <= d {
        if d % (f * f) == 0 {
            return false;
        }
        f += 1;
    }
    true
}

impl QuadraticElement {
    /// Builds `a + b*sqrt(d)`, rejecting radicands that are not square-free
    /// integers `>= 2`.
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self, AlgebraError> {
        if !is_square_free(d) {
            return Err(AlgebraError::InvalidField(d));
        }
        Ok(QuadraticElement { a, b, d })
    }

    /// Embeds a rational into `Q(sqrt(d))`.
    pub fn from_rational(a: Rational, d: u64) -> Result<Self, AlgebraError> {
        Self::new(a, Rational::zero(), d)
    }

    /// The multiplicative identity of `Q(sqrt(d))`.
    pub fn one(d: u64) -> Result<Self, AlgebraError> {
        Self::from_rational(Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// True when the irrational part vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field norm `N(a + b*sqrt(d)) = a^2 - d*b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rat(self.d as i64) * &self.b * &self.b
    }

    /// Exact rational value, or an error if an irrational part remains.
    pub fn to_rational(&self) -> Result<Rational, AlgebraError> {
        if !self.is_rational() {
            return Err(AlgebraError::IrrationalResidue(format!("{self}")));
        }
        Ok(self.a.clone())
    }

    /// Exact integer value; errors on irrational or fractional residue.
    /// The strictness here is the audit mechanism: a closed form that fails
    /// to collapse to an integer is a wrong closed form.
    pub fn to_integer(&self) -> Result<BigInt, AlgebraError> {
        let r = self.to_rational()?;
        if !r.denom().is_one() {
            return Err(AlgebraError::FractionalResidue(format!("{self}")));
        }
        Ok(r.numer().clone())
    }
}

impl fmt::Display for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = |out: &mut fmt::Formatter<'_>, b: &Rational| -> fmt::Result {
            if b.is_one() {
                write!(out, "sqrt({})", self.d)
            } else {
                write!(out, "{}*sqrt({})", b, self.d)
            }
        };
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-")?;
            }
            return root(f, &self.b.abs());
        }
        write!(f, "{}", self.a)?;
        write!(f, "{}", if self.b.is_negative() { " - " } else { " + " })?;
        root(f, &self.b.abs())
    }
}

fn require_same_field(x: &QuadraticElement, y: &QuadraticElement) -> Result<(), AlgebraError> {
    if x.d == y.d {
        Ok(())
    } else {
        Err(AlgebraError::MixedFields(x.d, y.d))
    }
}

/// `x + y` in a common field.
pub fn quad_add(
    x: &QuadraticElement,
    y: &QuadraticElement,
) -> Result<QuadraticElement, AlgebraError> {
    require_same_field(x, y)?;
    Ok(QuadraticElement {
        a: &x.a + &y.a,
        b: &x.b + &y.b,
        d: x.d,
    })
}

/// `x - y` in a common field.
pub fn quad_sub(
    x: &QuadraticElement,
    y: &QuadraticElement,
) -> Result<QuadraticElement, AlgebraError> {
    require_same_field(x, y)?;
    Ok(QuadraticElement {
        a: &x.a - &y.a,
        b: &x.b - &y.b,
        d: x.d,
    })
}

/// `x * y` in a common field:
/// `(a1 + b1 r)(a2 + b2 r) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) r`.
pub fn quad_mul(
    x: &QuadraticElement,
    y: &QuadraticElement,
) -> Result<QuadraticElement, AlgebraError> {
    require_same_field(x, y)?;
    Ok(mul_same_field(x, y))
}

fn mul_same_field(x: &QuadraticElement, y: &QuadraticElement) -> QuadraticElement {
    let d = rat(x.d as i64);
    QuadraticElement {
        a: &x.a * &y.a + d * &x.b * &y.b,
        b: &x.a * &y.b + &y.a * &x.b,
        d: x.d,
    }
}

/// Galois conjugate `a - b*sqrt(d)`.
pub fn quad_conj(x: &QuadraticElement) -> QuadraticElement {
    QuadraticElement {
        a: x.a.clone(),
        b: -x.b.clone(),
        d: x.d,
    }
}

/// `x^e` by repeated squaring; `x^0 = 1`.
pub fn quad_pow(x: &QuadraticElement, e: u64) -> QuadraticElement {
    let mut result = QuadraticElement {
        a: Rational::one(),
        b: Rational::zero(),
        d: x.d,
    };
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_same_field(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul_same_field(&base, &base);
        }
    }
    result
}

/// `x` scaled by a rational factor.
pub fn quad_scale(x: &QuadraticElement, r: &Rational) -> QuadraticElement {
    QuadraticElement {
        a: &x.a * r,
        b: &x.b * r,
        d: x.d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64), d: u64) -> QuadraticElement {
        QuadraticElement::new(ratio(a.0, a.1), ratio(b.0, b.1), d).unwrap()
    }

    #[test]
    fn fundamental_unit_products() {
        // (2 + sqrt 3)(2 - sqrt 3) = 1
        let x = q((2, 1), (1, 1), 3);
        let got = quad_mul(&x, &quad_conj(&x)).unwrap();
        assert_eq!(got, q((1, 1), (0, 1), 3));
        // ((5 + sqrt 21)/2)((5 - sqrt 21)/2) = 1
        let y = q((5, 2), (1, 2), 21);
        assert_eq!(quad_mul(&y, &quad_conj(&y)).unwrap(), q((1, 1), (0, 1), 21));
    }

    #[test]
    fn powers_match_frozen_values() {
        // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
        let x = q((1, 1), (1, 1), 2);
        assert_eq!(quad_pow(&x, 2), q((3, 1), (2, 1), 2));
        // (2 + sqrt 3)^2 = 7 + 4 sqrt 3
        let y = q((2, 1), (1, 1), 3);
        assert_eq!(quad_pow(&y, 2), q((7, 1), (4, 1), 3));
        // anything^0 = 1
        assert_eq!(quad_pow(&y, 0), q((1, 1), (0, 1), 3));
    }

    #[test]
    fn cube_matches_repeated_multiplication() {
        // ((5 + sqrt 21)/2)^3 = 55 + 12 sqrt 21, cross-checked against a
        // plain multiplication chain rather than the squaring ladder.
        let y = q((5, 2), (1, 2), 21);
        let chain = quad_mul(&quad_mul(&y, &y).unwrap(), &y).unwrap();
        assert_eq!(chain, q((55, 1), (12, 1), 21));
        assert_eq!(quad_pow(&y, 3), chain);
    }

    #[test]
    fn norm_is_multiplicative() {
        let x = q((3, 2), (-1, 3), 5);
        let y = q((2, 1), (7, 4), 5);
        let xy = quad_mul(&x, &y).unwrap();
        assert_eq!(xy.norm(), x.norm() * y.norm());
        // norm(2 + sqrt 3) = 1
        assert_eq!(q((2, 1), (1, 1), 3).norm(), rat(1));
    }

    #[test]
    fn integer_casts_are_strict() {
        assert_eq!(q((7, 1), (0, 1), 3).to_integer().unwrap(), BigInt::from(7));
        assert!(matches!(
            q((1, 2), (0, 1), 3).to_integer(),
            Err(AlgebraError::FractionalResidue(_))
        ));
        assert!(matches!(
            q((0, 1), (1, 1), 3).to_integer(),
            Err(AlgebraError::IrrationalResidue(_))
        ));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let x = q((1, 1), (1, 1), 2);
        let y = q((1, 1), (1, 1), 3);
        assert_eq!(quad_add(&x, &y), Err(AlgebraError::MixedFields(2, 3)));
        assert_eq!(quad_mul(&x, &y), Err(AlgebraError::MixedFields(2, 3)));
    }

    #[test]
    fn invalid_radicands_are_rejected() {
        for d in [0, 1, 4, 8, 9, 12, 18] {
            assert_eq!(
                QuadraticElement::new(rat(1), rat(1), d),
                Err(AlgebraError::InvalidField(d))
            );
        }
        // 21 = 3 * 7 is square-free.
        assert!(QuadraticElement::new(rat(1), rat(1), 21).is_ok());
    }

    #[test]
    fn rendering_uses_p_over_q_and_sqrt() {
        assert_eq!(format!("{}", q((1, 2), (5, 42), 21)), "1/2 + 5/42*sqrt(21)");
        assert_eq!(format!("{}", q((2, 1), (-1, 1), 3)), "2 - sqrt(3)");
        assert_eq!(format!("{}", q((-3, 4), (0, 1), 5)), "-3/4");
        assert_eq!(format!("{}", q((0, 1), (-2, 7), 2)), "-2/7*sqrt(2)");
    }
}
