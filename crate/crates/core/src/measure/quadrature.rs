//! Floating-point cross-check for exact brackets.
//!
//! The oracle never multiplies series or touches the moment recurrence: it
//! evaluates `f` and `g` separately at each node and integrates
//! `f·g·x^(n−1)·e^(−x²)` with adaptive 7/15-point Gauss–Kronrod.
//!
//! Domain: `[ε, X]` (radial, doubled) or `[−X, −ε] ∪ [ε, X]` (full line),
//! with `ε = 1e-12`. Once the integrand is known to carry no negative power
//! the dropped `[0, ε]` piece is `O(ε)`. `X` starts at 12 and grows with
//! the degree `m` of the integrand until `X^m e^(−X²)` is below `e^(−92)`
//! times the peak of `x^m e^(−x²)`, which bounds the neglected tail by about
//! `1e-40` relative to the integral's scale.

use super::{MeasureError, MeasureSpec};
use crate::laurent::LaurentSeries;

const LOWER_CUTOFF: f64 = 1e-12;
const MIN_UPPER: f64 = 12.0;
const REL_TOL: f64 = 1e-12;
const MAX_DEPTH: u32 = 48;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
// Gauss weights for nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One Gauss–Kronrod panel: `(kronrod, |kronrod − gauss|, ∫|f|)`.
fn panel(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs = fc.abs() * WGK[7];
    for (i, &x) in XGK[..7].iter().enumerate() {
        let f1 = f(center - half * x);
        let f2 = f(center + half * x);
        kronrod += WGK[i] * (f1 + f2);
        abs += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs(), abs * half.abs())
}

fn refine(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let mid = 0.5 * (a + b);
    let (left, left_err, _) = panel(f, a, mid);
    let (right, right_err, _) = panel(f, mid, b);
    if depth >= MAX_DEPTH || (left_err + right_err <= tol && (left + right - whole).abs() <= 2.0 * tol) {
        return left + right;
    }
    refine(f, a, mid, left, 0.5 * tol, depth + 1) + refine(f, mid, b, right, 0.5 * tol, depth + 1)
}

/// Adaptive Gauss–Kronrod on `[a, b]`; the tolerance is `rel_tol` times a
/// coarse estimate of `∫|f|`, so integrals that cancel to zero still finish.
pub fn integrate_adaptive(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    const PANELS: usize = 32;
    let width = (b - a) / PANELS as f64;
    let mut pieces = [(0.0f64, 0.0f64); PANELS];
    let mut scale = 0.0;
    for (i, piece) in pieces.iter_mut().enumerate() {
        let lo = a + width * i as f64;
        let (value, _, abs) = panel(&mut f, lo, lo + width);
        *piece = (lo, value);
        scale += abs;
    }
    let tol = rel_tol * scale.max(f64::MIN_POSITIVE) / PANELS as f64;
    pieces.iter().map(|&(lo, value)| refine(&mut f, lo, lo + width, value, tol, 0)).sum()
}

fn upper_limit(degree: u32) -> f64 {
    let m = f64::from(degree);
    let peak = if degree == 0 { 0.0 } else { 0.5 * m * libm::log(0.5 * m) - 0.5 * m };
    let mut x = MIN_UPPER;
    while m * libm::log(x) - x * x > peak - 92.0 {
        x += 1.0;
    }
    x
}

/// Numerical `⟨f, g⟩` under `spec`; an independent check on [`super::inner`].
pub fn quadrature_oracle(spec: MeasureSpec, f: &LaurentSeries, g: &LaurentSeries) -> Result<f64, MeasureError> {
    let (Some(lf), Some(lg)) = (f.lowest_exponent(), g.lowest_exponent()) else {
        return Ok(0.0);
    };
    let power = spec.volume_power();
    let low = lf + lg + i64::from(power);
    if low < 0 {
        return Err(MeasureError::NonIntegrable { exponent: low });
    }
    let degree = f.highest_exponent().unwrap_or(0) + g.highest_exponent().unwrap_or(0) + i64::from(power);
    let upper = upper_limit(degree.max(0) as u32);
    let integrand = |x: f64| {
        let fx = f.eval_float(x).unwrap_or(f64::NAN);
        let gx = g.eval_float(x).unwrap_or(f64::NAN);
        let mut w = libm::exp(-x * x);
        for _ in 0..power {
            w *= x;
        }
        fx * gx * w
    };
    let right = integrate_adaptive(integrand, LOWER_CUTOFF, upper, REL_TOL);
    if spec.is_linear() {
        let left = integrate_adaptive(integrand, -upper, -LOWER_CUTOFF, REL_TOL);
        Ok(left + right)
    } else {
        Ok(2.0 * right)
    }
}
