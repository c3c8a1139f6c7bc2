//! Gaussian-weighted inner products, square-integrability, Gram matrices
//! and staggered bases.
//!
//! Two families of measures share one dimension argument. Dimension `0` is
//! the full line, `∫ · e^(−x²) dx` over ℝ. Dimension `n ≥ 1` is the radial
//! measure `2∫₀^∞ · x^(n−1) e^(−x²) dx`; the sphere-volume constant is
//! dropped since it cancels in every orthogonality statement and in
//! normalized brackets.
//!
//! Power moments follow `Pₘ = (m−1)/2 · Pₘ₋₂` from `P₀ = √π` and `P₁ = 0`
//! (full line) or `P₁ = 1` (radial), so every bracket of two Laurent series
//! is an exact element of ℚ + ℚ√π.

mod gram;
mod quadrature;

pub use gram::{gram, GramReport, Pattern};
pub use quadrature::{integrate_adaptive, quadrature_oracle};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::exactnum::{pow10, truncate_decimal, PiScalar};
use crate::laurent::LaurentSeries;
use crate::operators::{wavefunction, wavefunctions, StateLabel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MeasureError {
    #[error("integrand is not integrable: term x^{exponent} survives at the origin")]
    NonIntegrable { exponent: i64 },
    #[error("the zero series is not a state")]
    ZeroSeries,
    #[error("bracket normalization by a zero norm")]
    ZeroNorm,
    #[error("physicality needs a radial dimension n >= 1")]
    LinearDimension,
}

/// Dimension selector: `0` is the full line, `n ≥ 1` the radial measure with `x^(n−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MeasureSpec(u32);

impl MeasureSpec {
    pub const LINEAR: MeasureSpec = MeasureSpec(0);

    pub const fn new(dim: u32) -> Self {
        MeasureSpec(dim)
    }

    pub const fn radial(n: u32) -> Self {
        assert!(n >= 1, "radial dimension must be positive");
        MeasureSpec(n)
    }

    pub const fn dim(self) -> u32 {
        self.0
    }

    pub const fn is_linear(self) -> bool {
        self.0 == 0
    }

    /// Power of `x` in the volume element.
    pub const fn volume_power(self) -> u32 {
        self.0.saturating_sub(1)
    }

    /// Whether `f` is square-integrable under this measure.
    pub fn admits(self, f: &LaurentSeries) -> bool {
        match f.lowest_exponent() {
            Some(low) => 2 * low + i64::from(self.volume_power()) >= 0,
            None => false,
        }
    }
}

impl fmt::Display for MeasureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_linear() {
            f.write_str("linear")
        } else {
            write!(f, "radial N={}", self.0)
        }
    }
}

/// Exact `Pₘ` under `spec`.
pub fn moment(spec: MeasureSpec, m: u32) -> PiScalar {
    let mut p = if m % 2 == 0 {
        PiScalar::sqrt_pi_multiple(BigRational::one())
    } else if spec.is_linear() {
        return PiScalar::zero();
    } else {
        PiScalar::from_rational(BigRational::one())
    };
    let mut j = 2 + m % 2;
    while j <= m {
        p = p.scale(&BigRational::new(BigInt::from(j - 1), BigInt::from(2)));
        j += 2;
    }
    p
}

/// `⟨f, g⟩` under `spec`, exactly.
pub fn inner(spec: MeasureSpec, f: &LaurentSeries, g: &LaurentSeries) -> Result<PiScalar, MeasureError> {
    let integrand = (f * g).shift(i64::from(spec.volume_power()));
    if let Some(low) = integrand.lowest_exponent().filter(|&low| low < 0) {
        return Err(MeasureError::NonIntegrable { exponent: low });
    }
    let moments = moments_up_to(spec, integrand.highest_exponent().unwrap_or(0) as u32);
    Ok(integrand
        .terms()
        .map(|(m, c)| moments[m as usize].scale(&BigRational::from_integer(c.clone())))
        .sum())
}

/// `[P₀, P₁, …, P_max]` by the two-step recurrence.
fn moments_up_to(spec: MeasureSpec, max: u32) -> Vec<PiScalar> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(moment(spec, 0));
    out.push(moment(spec, 1));
    for m in 2..=max as usize {
        let next = out[m - 2].scale(&BigRational::new(BigInt::from(m - 1), BigInt::from(2)));
        out.push(next);
    }
    out.truncate(max as usize + 1);
    out
}

/// Unnormalized bracket of two canonical wavefunctions.
pub fn bracket_raw(spec: MeasureSpec, a: StateLabel, b: StateLabel) -> Result<PiScalar, MeasureError> {
    inner(spec, &wavefunction(a.l, a.k), &wavefunction(b.l, b.k))
}

/// `⟨a|b⟩ / √(⟨a|a⟩⟨b|b⟩)` rendered to `digits` places, truncated toward zero.
pub fn bracket_normalized(
    spec: MeasureSpec,
    a: StateLabel,
    b: StateLabel,
    digits: u32,
) -> Result<String, MeasureError> {
    normalized_series(spec, &wavefunction(a.l, a.k), &wavefunction(b.l, b.k), digits)
}

/// [`bracket_normalized`] for arbitrary series.
pub fn normalized_series(
    spec: MeasureSpec,
    f: &LaurentSeries,
    g: &LaurentSeries,
    digits: u32,
) -> Result<String, MeasureError> {
    let ab = inner(spec, f, g)?;
    let aa = inner(spec, f, f)?;
    let bb = inner(spec, g, g)?;
    if aa.is_zero() || bb.is_zero() {
        return Err(MeasureError::ZeroNorm);
    }
    if ab.is_zero() {
        return Ok(String::from("0"));
    }
    // Cauchy–Schwarz equality case: exactly ±1.
    if let Some(c) = f.ratio_to(g) {
        let unit = if c.is_negative() { -BigRational::one() } else { BigRational::one() };
        return Ok(truncate_decimal(&unit, digits));
    }
    Ok(normalized_decimal(&ab, &aa, &bb, digits))
}

fn sqrt_bounds(lo: &BigRational, hi: &BigRational, places: u32) -> (BigRational, BigRational) {
    let scale = pow10(2 * places);
    let lo_int = (lo.numer() * &scale) / lo.denom();
    let hi_num = hi.numer() * &scale;
    let hi_int = (&hi_num + hi.denom() - BigInt::one()) / hi.denom();
    let den = pow10(places);
    (
        BigRational::new(lo_int.sqrt(), den.clone()),
        BigRational::new(hi_int.sqrt() + BigInt::one(), den),
    )
}

fn normalized_decimal(ab: &PiScalar, aa: &PiScalar, bb: &PiScalar, digits: u32) -> String {
    let mut precision = digits + 8;
    loop {
        let (al, ah) = ab.enclose(precision);
        let (bl, bh) = aa.enclose(precision);
        let (cl, ch) = bb.enclose(precision);
        if bl.is_positive() && cl.is_positive() {
            let (sl, sh) = sqrt_bounds(&(&bl * &cl), &(&bh * &ch), precision + 4);
            let candidates = [&al / &sh, &al / &sl, &ah / &sh, &ah / &sl];
            let lo = candidates.iter().min().cloned().unwrap_or_default();
            let hi = candidates.iter().max().cloned().unwrap_or_default();
            let a = truncate_decimal(&lo, digits);
            if a == truncate_decimal(&hi, digits) {
                return a;
            }
            if precision > digits + 400 {
                return truncate_decimal(&((lo + hi) / BigRational::from_integer(BigInt::from(2))), digits);
            }
        }
        precision += 8;
    }
}

/// Whether `f²·x^(n−1)` is free of negative powers.
pub fn is_physical(n: u32, f: &LaurentSeries) -> Result<bool, MeasureError> {
    if n == 0 {
        return Err(MeasureError::LinearDimension);
    }
    if f.is_zero() {
        return Err(MeasureError::ZeroSeries);
    }
    Ok(MeasureSpec::new(n).admits(f))
}

/// Unbounded stream of `is_physical(n, f(l,k))` for `k = 0, 1, 2, …`.
pub fn physical_pattern(n: u32, l: u32) -> impl Iterator<Item = bool> {
    let n = n.max(1);
    wavefunctions(l).map(move |f| MeasureSpec::new(n).admits(&f))
}

/// Even-`k` states of oscillator `l` are square-integrable in dimension `n`
/// exactly when `n ≥ 2l + 1`.
pub fn even_rule(n: u32, l: u32) -> bool {
    u64::from(n) >= 2 * u64::from(l) + 1
}

/// States `(l,k)` of the 3-D isotropic oscillator at level `n = l + k − 1`
/// (odd `k` only), ordered by increasing `l`.
pub fn level_states(n_level: u32) -> Vec<StateLabel> {
    (0..=n_level)
        .filter(|l| (n_level - l) % 2 == 0)
        .map(|l| StateLabel::new(l, n_level + 1 - l))
        .collect()
}

/// `(n+1)(n+2)/2`, counting the `2l+1` angular states of each `l`.
pub fn degeneracy(n_level: u32) -> u64 {
    let n = u64::from(n_level);
    (n + 1) * (n + 2) / 2
}

/// Sum of `2l+1` over [`level_states`]; agrees with [`degeneracy`].
pub fn angular_count(n_level: u32) -> u64 {
    level_states(n_level).iter().map(|s| 2 * u64::from(s.l) + 1).sum()
}
