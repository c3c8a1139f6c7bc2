//! Finite Laurent series `Σ aₙxⁿ` (n ∈ ℤ) with unbounded integer coefficients.
//!
//! Storage is dense: a lowest exponent plus the coefficient run up to the
//! highest exponent. Both ends of the run are nonzero, and the zero series
//! is the empty run, so structural equality is value equality. The
//! two-list view `L [a₀,a₁,…] [a₋₁,a₋₂,…]` is derived on demand by
//! [`LaurentSeries::pos`] and [`LaurentSeries::neg`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("series has negative powers and cannot be evaluated at x = 0")]
    PoleAtZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentSeries {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentSeries {
    pub fn zero() -> Self {
        LaurentSeries::default()
    }

    pub fn one() -> Self {
        LaurentSeries::monomial(0, 1)
    }

    /// The single term `c·xⁿ`.
    pub fn monomial(n: i64, c: impl Into<BigInt>) -> Self {
        LaurentSeries::from_dense(n, vec![c.into()])
    }

    /// Builds a canonical series from a lowest exponent and a coefficient run.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut s = LaurentSeries { low, coeffs };
        s.trim();
        s
    }

    /// Builds from the two-list form: `pos = [a₀, a₁, …]`, `neg = [a₋₁, a₋₂, …]`.
    /// Trailing zeros in either list are accepted and dropped.
    pub fn from_parts(pos: Vec<BigInt>, neg: Vec<BigInt>) -> Self {
        let low = -(neg.len() as i64);
        let mut coeffs: Vec<BigInt> = neg.into_iter().rev().collect();
        coeffs.extend(pos);
        LaurentSeries::from_dense(low, coeffs)
    }

    /// `from_parts` for small literals.
    pub fn from_i64(pos: &[i64], neg: &[i64]) -> Self {
        LaurentSeries::from_parts(
            pos.iter().copied().map(BigInt::from).collect(),
            neg.iter().copied().map(BigInt::from).collect(),
        )
    }

    /// Sums an arbitrary bag of `(exponent, coefficient)` terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(n, c)| (n, c.into())).collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return LaurentSeries::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap_or(low);
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (n, c) in terms {
            coeffs[(n - low) as usize] += c;
        }
        LaurentSeries::from_dense(low, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn highest_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `xⁿ` (zero outside the stored range).
    pub fn coeff(&self, n: i64) -> BigInt {
        let i = n - self.low;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// `[a₀, a₁, …]` without trailing zeros.
    pub fn pos(&self) -> Vec<BigInt> {
        match self.highest_exponent() {
            Some(high) if high >= 0 => (0..=high).map(|n| self.coeff(n)).collect(),
            _ => Vec::new(),
        }
    }

    /// `[a₋₁, a₋₂, …]` without trailing zeros.
    pub fn neg(&self) -> Vec<BigInt> {
        match self.lowest_exponent() {
            Some(low) if low < 0 => (1..=-low).map(|j| self.coeff(-j)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        LaurentSeries::from_dense(self.low, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `xᵏ`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentSeries::zero();
        }
        LaurentSeries { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// Term-wise derivative `aₙxⁿ ↦ n·aₙxⁿ⁻¹`.
    pub fn diff(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(self.low + i as i64))
            .collect();
        LaurentSeries::from_dense(self.low - 1, coeffs)
    }

    /// Positive gcd of all coefficients; zero for the zero series.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by the positive gcd. Signs are kept.
    pub fn gcd_normalize(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        LaurentSeries { low: self.low, coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// The rational `c` with `other = c·self`, if one exists. `self` must be nonzero.
    pub fn ratio_to(&self, other: &LaurentSeries) -> Option<BigRational> {
        if self.is_zero() || self.low != other.low || self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let c = BigRational::new(other.coeffs[0].clone(), self.coeffs[0].clone());
        let proportional = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| BigRational::from_integer(a.clone()) * &c == BigRational::from_integer(b.clone()));
        proportional.then_some(c)
    }

    /// Floating-point value at `x`.
    pub fn eval_float(&self, x: f64) -> Result<f64, EvalError> {
        if self.is_zero() {
            return Ok(0.0);
        }
        if x == 0.0 {
            return if self.low < 0 { Err(EvalError::PoleAtZero) } else { Ok(self.coeff(0).to_f64().unwrap_or(0.0)) };
        }
        // Horner over the run, then scale by x^low.
        let mut acc = 0.0f64;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        Ok(acc * powi(x, self.low))
    }

    /// The two-list form, e.g. `L [0,2] [1]`.
    pub fn list_form(&self) -> String {
        fn list(out: &mut String, xs: &[BigInt]) {
            out.push('[');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&x.to_str_radix(10));
            }
            out.push(']');
        }
        let mut out = String::from("L ");
        list(&mut out, &self.pos());
        out.push(' ');
        list(&mut out, &self.neg());
        out
    }

    /// Terms in display order: ascending nonnegative powers, then `1/x`, `1/x²`, ….
    pub fn display_terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms().filter(|t| t.0 >= 0).chain(self.terms().filter(|t| t.0 < 0).collect::<Vec<_>>().into_iter().rev())
    }
}

fn powi(x: f64, n: i64) -> f64 {
    let mut base = if n < 0 { 1.0 / x } else { x };
    let mut e = n.unsigned_abs();
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Human form with ascending powers, e.g. `18x - 36x^3 + 8x^5 + 3/x`.
impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (n, c)) in self.display_terms().enumerate() {
            let m = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = m.is_one();
            match n {
                0 => write!(f, "{m}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{m}x")?,
                n if n > 1 && unit => write!(f, "x^{n}")?,
                n if n > 1 => write!(f, "{m}x^{n}")?,
                -1 => write!(f, "{m}/x")?,
                n => write!(f, "{m}/x^{}", -n)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentSeries> for &'a LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &'a LaurentSeries) -> LaurentSeries {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.highest_exponent().max(rhs.highest_exponent()).unwrap_or(low);
        let coeffs = (low..=high).map(|n| self.coeff(n) + rhs.coeff(n)).collect();
        LaurentSeries::from_dense(low, coeffs)
    }
}

impl<'a> Sub<&'a LaurentSeries> for &'a LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &'a LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentSeries> for &'a LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &'a LaurentSeries) -> LaurentSeries {
        if self.is_zero() || rhs.is_zero() {
            return LaurentSeries::zero();
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
        LaurentSeries::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, rhs: LaurentSeries) -> LaurentSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        -&self
    }
}
