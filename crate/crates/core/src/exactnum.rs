//! Exact scalars: arbitrary-precision rationals, the extension ℚ[√π] and
//! decimal rendering of both.
//!
//! Every Gaussian inner product of two Laurent series lands in ℚ + ℚ·√π, so
//! [`PiScalar`] is closed under everything the bracket code needs: addition
//! and scaling by a rational. There is deliberately no `PiScalar × PiScalar`
//! product, since `√π·√π = π` leaves the field.
//!
//! Decimal output truncates toward zero. Because √π is irrational, a value
//! with a nonzero `√π` part is never exactly on a digit boundary, so the
//! renderer encloses it in a shrinking rational interval until both ends
//! print the same digits.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational;

/// Returned by [`rat_div`] when the divisor is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("division by zero")]
pub struct DivisionByZero;

/// Checked rational division.
pub fn rat_div(x: &BigRational, y: &BigRational) -> Result<BigRational, DivisionByZero> {
    if y.is_zero() {
        return Err(DivisionByZero);
    }
    Ok(x / y)
}

/// Shorthand for the rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn pow10(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), exp as usize)
}

/// An element `rat + pi·√π` of ℚ[√π].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiScalar {
    rat: BigRational,
    pi: BigRational,
}

impl PiScalar {
    pub fn new(rat: BigRational, pi: BigRational) -> Self {
        PiScalar { rat, pi }
    }

    pub fn zero() -> Self {
        PiScalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn from_rational(rat: BigRational) -> Self {
        PiScalar::new(rat, BigRational::zero())
    }

    /// The scalar `q·√π`.
    pub fn sqrt_pi_multiple(q: BigRational) -> Self {
        PiScalar::new(BigRational::zero(), q)
    }

    pub fn rat_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn pi_part(&self) -> &BigRational {
        &self.pi
    }

    /// Exact zero test. Sound because √π is irrational.
    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.pi.is_zero()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        PiScalar::new(&self.rat * q, &self.pi * q)
    }

    /// Rational interval guaranteed to contain the value, using √π to
    /// `precision` decimals.
    pub fn enclose(&self, precision: u32) -> (BigRational, BigRational) {
        if self.pi.is_zero() {
            return (self.rat.clone(), self.rat.clone());
        }
        let s = sqrt_pi_digits(precision);
        let slack = BigRational::new(BigInt::one(), pow10(precision + 2));
        let a = &self.rat + &self.pi * (&s - &slack);
        let b = &self.rat + &self.pi * (&s + &slack);
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Decimal rendering truncated toward zero to `digits` places.
    /// Exact zero renders as `"0"`.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut precision = digits + 4;
        loop {
            let (lo, hi) = self.enclose(precision);
            let a = truncate_decimal(&lo, digits);
            if a == truncate_decimal(&hi, digits) {
                return a;
            }
            precision += 8;
        }
    }

    /// Nearest-ish `f64`, good to about 1e-15 relative.
    pub fn to_f64(&self) -> f64 {
        let (lo, _) = self.enclose(20);
        lo.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for PiScalar {
    fn default() -> Self {
        PiScalar::zero()
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.pi.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "({})√π", self.pi),
            (false, false) => write!(f, "{} + ({})√π", self.rat, self.pi),
        }
    }
}

impl<'a> Add<&'a PiScalar> for &'a PiScalar {
    type Output = PiScalar;
    fn add(self, rhs: &'a PiScalar) -> PiScalar {
        PiScalar::new(&self.rat + &rhs.rat, &self.pi + &rhs.pi)
    }
}

impl Add for PiScalar {
    type Output = PiScalar;
    fn add(self, rhs: PiScalar) -> PiScalar {
        &self + &rhs
    }
}

impl AddAssign<&PiScalar> for PiScalar {
    fn add_assign(&mut self, rhs: &PiScalar) {
        self.rat += &rhs.rat;
        self.pi += &rhs.pi;
    }
}

impl<'a> Sub<&'a PiScalar> for &'a PiScalar {
    type Output = PiScalar;
    fn sub(self, rhs: &'a PiScalar) -> PiScalar {
        PiScalar::new(&self.rat - &rhs.rat, &self.pi - &rhs.pi)
    }
}

impl Sub for PiScalar {
    type Output = PiScalar;
    fn sub(self, rhs: PiScalar) -> PiScalar {
        &self - &rhs
    }
}

impl Neg for PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        PiScalar::new(-self.rat, -self.pi)
    }
}

impl Sum for PiScalar {
    fn sum<I: Iterator<Item = PiScalar>>(iter: I) -> Self {
        iter.fold(PiScalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// `Σ (-1)^j / ((2j+1)·x^(2j+1))` in fixed point with scale `unity`.
/// Each term is floored, so the error is at most two units per term.
fn arctan_inv(x: u32, unity: &BigInt) -> BigInt {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = unity / BigInt::from(x);
    let mut sum = power.clone();
    let mut j: u64 = 1;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * j + 1);
        if j % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        j += 1;
    }
    sum
}

/// π·10^digits as an integer, within ±1.
fn pi_scaled(digits: u32) -> BigInt {
    const GUARD: u32 = 12;
    let unity = pow10(digits + GUARD);
    // Machin: π = 16·atan(1/5) − 4·atan(1/239).
    let pi = BigInt::from(16) * arctan_inv(5, &unity) - BigInt::from(4) * arctan_inv(239, &unity);
    pi / pow10(GUARD)
}

/// A rational `r` with `|r − √π| < 10^(−d−2)`.
///
/// π comes from Machin's formula in fixed point with twelve guard digits;
/// the root is the integer square root of `π·10^(2w)` with `w = d + 3`,
/// which leaves an error of at most `10^-w` plus a negligible term from
/// the π error.
pub fn sqrt_pi_digits(d: u32) -> BigRational {
    let w = d.max(1) + 3;
    let scaled = pi_scaled(2 * w);
    BigRational::new(scaled.sqrt(), pow10(w))
}

/// Decimal rendering of `q` truncated toward zero to `digits` places.
/// Exact zero renders as `"0"`; values that truncate to zero carry no sign.
pub fn truncate_decimal(q: &BigRational, digits: u32) -> String {
    if q.is_zero() {
        return String::from("0");
    }
    let magnitude = (q.numer().abs() * pow10(digits)) / q.denom();
    render_scaled(q.is_negative(), &magnitude, digits)
}

/// Decimal rendering of `q` rounded half away from zero to `digits` places.
pub fn round_decimal(q: &BigRational, digits: u32) -> String {
    if q.is_zero() {
        return String::from("0");
    }
    let num = q.numer().abs() * pow10(digits) * BigInt::from(2) + q.denom();
    let magnitude = num.div_floor(&(q.denom() * BigInt::from(2)));
    render_scaled(q.is_negative(), &magnitude, digits)
}

fn render_scaled(negative: bool, magnitude: &BigInt, digits: u32) -> String {
    let (int_part, frac_part) = magnitude.div_rem(&pow10(digits));
    let mut out = String::new();
    if negative && !magnitude.is_zero() {
        out.push('-');
    }
    out.push_str(&int_part.to_str_radix(10));
    if digits > 0 {
        out.push('.');
        let frac = frac_part.to_str_radix(10);
        for _ in frac.len()..digits as usize {
            out.push('0');
        }
        out.push_str(&frac);
    }
    out
}

/// Parses the decimal strings produced by this module back into rationals.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() || !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut digits: Vec<u8> = int_part.bytes().collect();
    digits.extend(frac_part.bytes());
    let n = BigInt::parse_bytes(&digits, 10)?;
    let n = if negative { -n } else { n };
    Some(BigRational::new(n, pow10(frac_part.len() as u32)))
}

/// Formats a rational as `p/q` with an explicit denominator.
pub fn rational_to_fraction_string(q: &BigRational) -> String {
    let mut s = q.numer().to_str_radix(10);
    s.push('/');
    s.push_str(&q.denom().to_str_radix(10));
    s
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_fraction(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::parse_bytes(n.trim().as_bytes(), 10)?;
    let d = BigInt::parse_bytes(d.trim().as_bytes(), 10)?;
    if d.sign() == Sign::NoSign {
        return None;
    }
    Some(BigRational::new(n, d))
}
