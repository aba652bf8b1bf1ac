//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! `coeffs[i]` holds the coefficient of `t^i`. The representation is
//! canonical: no trailing zero coefficients, and the zero polynomial is the
//! empty coefficient vector, so two polynomials are equal iff their
//! coefficient vectors are identical. Values are immutable after
//! construction and safe to share across threads.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A univariate polynomial with `BigInt` coefficients in ascending order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    /// The zero polynomial (empty coefficient vector).
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly::constant(1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Poly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// The linear polynomial `t - c`.
    pub fn t_minus(c: i64) -> Self {
        Poly {
            coeffs: vec![BigInt::from(-c), BigInt::one()],
        }
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::from_coeffs(vec![c.into()])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Build from ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Build from ascending machine-integer coefficients.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (canonical, no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Convenience wrapper for machine-integer points.
    pub fn eval_int(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Long division over the integers; every quotient step checks that the
    /// leading coefficient divides exactly, and a nonzero remainder yields
    /// [`Error::NonDivisible`]. This is the self-verifying workhorse behind
    /// every quotient formula: a misapplied hypothesis surfaces as an error
    /// instead of a silently wrong polynomial.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Err(Error::NonDivisible);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(Error::NonDivisible);
            }
            for i in 0..dd {
                let sub = &q * &divisor.coeffs[i];
                rem[k + i] -= sub;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonDivisible);
        }
        Ok(Poly::from_coeffs(quot))
    }

    /// Coefficients as decimal strings, ascending powers.
    ///
    /// The machine rendering used by the JSON output: arbitrary precision
    /// survives any JSON reader. The zero polynomial renders as `[]`.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    /// Schoolbook convolution; degrees are bounded by vertex counts, so
    /// nothing fancier pays off.
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident, $method:ident;)*) => {$(
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned_ops! {
    Add, add;
    Sub, sub;
    Mul, mul;
}

impl fmt::Display for Poly {
    /// Human rendering in descending powers: `t^4 - 5t^3 + 8t^2 - 4t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
