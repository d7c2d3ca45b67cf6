//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! `IntPoly` is kept in canonical form: the highest stored coefficient is
//! nonzero, and the zero polynomial has no coefficients at all. Every
//! constructor and arithmetic operation re-establishes that form, so derived
//! equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// `t^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] -= 1;
        coeffs[n] += 1;
        IntPoly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients indexed by exponent; trailing
    /// zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient `i` equals coefficient `deg - i` for every `i`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Index of the first negative coefficient, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(Signed::is_negative)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        // Leading coefficient is a product of nonzero integers.
        IntPoly { coeffs }
    }

    /// Product of an iterator of polynomials; the empty product is 1.
    pub fn product<'a, I>(polys: I) -> IntPoly
    where
        I: IntoIterator<Item = &'a IntPoly>,
    {
        polys.into_iter().fold(IntPoly::one(), |acc, p| acc.mul(p))
    }

    /// Returns `R` with `divisor * R == self`, or `NotDivisible` as soon as a
    /// quotient coefficient would be fractional or a nonzero remainder is left.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let not_divisible = || Error::NotDivisible {
            dividend: self.clone(),
            divisor: divisor.clone(),
        };
        let Some(lead) = divisor.leading_coeff() else {
            return Err(Error::InvalidInput(
                "division by the zero polynomial".into(),
            ));
        };
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let (n, d) = (self.coeffs.len(), divisor.coeffs.len());
        if n < d {
            return Err(not_divisible());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(not_divisible());
            }
            let q = top / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        if rem[..d - 1].iter().any(|c| !c.is_zero()) {
            return Err(not_divisible());
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Exact evaluation at an integer point.
    pub fn eval<T: Into<BigInt>>(&self, x: T) -> BigInt {
        let x = x.into();
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

/// `(t^a - 1) / (t^b - 1) = 1 + t^b + t^{2b} + ... + t^{a-b}` for `b | a`.
pub fn geom_quotient(a: usize, b: usize) -> Result<IntPoly> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidInput(format!(
            "geometric quotient needs positive arguments, got ({a}, {b})"
        )));
    }
    if !a.is_multiple_of(b) {
        return Err(Error::NotDivisible {
            dividend: IntPoly::t_pow_minus_one(a),
            divisor: IntPoly::t_pow_minus_one(b),
        });
    }
    let mut coeffs = vec![BigInt::zero(); a - b + 1];
    for c in coeffs.iter_mut().step_by(b) {
        *c = BigInt::one();
    }
    Ok(IntPoly { coeffs })
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::add(self, rhs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::sub(self, rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::neg(self)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[1, 1]).add(&p(&[1, -1])), p(&[2]));
        assert_eq!(p(&[3, 0, 5]).add(&IntPoly::zero()), p(&[3, 0, 5]));
        assert_eq!(p(&[1, 1]).add(&p(&[0, 1, 1])), p(&[1, 2, 1]));
        assert!(p(&[0, 1]).add(&p(&[0, -1])).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[1, 1]).mul(&p(&[1, 1, 1])), p(&[1, 2, 2, 1]));
        assert_eq!(p(&[4, 0, -2]).mul(&IntPoly::one()), p(&[4, 0, -2]));
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), p(&[-1, 0, 1]));
        assert!(p(&[1, 1]).mul(&IntPoly::zero()).is_zero());
    }

    #[test]
    fn exact_div_examples() {
        let q = IntPoly::t_pow_minus_one(4)
            .exact_div(&IntPoly::t_pow_minus_one(2))
            .unwrap();
        assert_eq!(q, p(&[1, 0, 1]));

        let err = IntPoly::t_pow_minus_one(3)
            .exact_div(&IntPoly::t_pow_minus_one(2))
            .unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));

        assert_eq!(
            p(&[1, 2, 2, 1]).exact_div(&p(&[1, 1])).unwrap(),
            p(&[1, 1, 1])
        );
    }

    #[test]
    fn exact_div_rejects_fractional_step() {
        // 2t + 1 over 2: leading step gives t but the constant 1/2 is fractional
        assert!(p(&[1, 2]).exact_div(&p(&[2])).is_err());
        assert_eq!(p(&[2, 4]).exact_div(&p(&[2])).unwrap(), p(&[1, 2]));
        assert!(p(&[1]).exact_div(&p(&[1, 1])).is_err());
        assert!(p(&[1]).exact_div(&IntPoly::zero()).is_err());
        assert!(IntPoly::zero().exact_div(&p(&[1, 1])).unwrap().is_zero());
    }

    #[test]
    fn geom_quotient_examples() {
        assert_eq!(geom_quotient(8, 2).unwrap(), p(&[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(geom_quotient(5, 5).unwrap(), IntPoly::one());
        assert_eq!(
            geom_quotient(6, 2).unwrap(),
            IntPoly::t_pow_minus_one(6)
                .exact_div(&IntPoly::t_pow_minus_one(2))
                .unwrap()
        );
        assert!(matches!(
            geom_quotient(6, 4),
            Err(Error::NotDivisible { .. })
        ));
        assert!(geom_quotient(0, 1).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 2, 2, 1]).eval(1), BigInt::from(6));
        assert_eq!(p(&[7, 3, 9]).eval(0), BigInt::from(7));
        assert_eq!(p(&[-1, 0, 1]).eval(2), BigInt::from(3));
        assert_eq!(IntPoly::zero().eval(5), BigInt::zero());
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let big = IntPoly::constant(i64::MAX).mul(&p(&[1, 1]));
        let sq = big.mul(&big);
        let expected = BigInt::from(i64::MAX) * BigInt::from(i64::MAX) * 4;
        assert_eq!(sq.eval(1), expected);
        assert_eq!(sq.exact_div(&big).unwrap(), big);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "1 - 2t + t^3");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-50i64..50, 0..12).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn degree_of_product(a in small_poly(), b in small_poly()) {
            let prod = a.mul(&b);
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly(), x in -6i64..6) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b).eval(x), a.eval(x) * b.eval(x));
            prop_assert_eq!(a.add(&b).eval(x), a.eval(x) + b.eval(x));
        }

        #[test]
        fn exact_div_reconstructs(a in small_poly(), b in small_poly(), noise in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
            // whatever exact_div accepts must multiply back bit-exactly
            let perturbed = prod.add(&noise);
            if let Ok(q) = perturbed.exact_div(&b) {
                prop_assert_eq!(b.mul(&q), perturbed);
            }
        }

        #[test]
        fn geom_quotient_matches_division(b in 1usize..=64, k in 1usize..=16) {
            let a = b * k;
            prop_assert!(a <= 1024);
            let expect = IntPoly::t_pow_minus_one(a).exact_div(&IntPoly::t_pow_minus_one(b)).unwrap();
            prop_assert_eq!(geom_quotient(a, b).unwrap(), expect);
        }
    }
}
