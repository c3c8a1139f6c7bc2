//! Intertwining and ladder operators acting on the Gaussian-stripped factor.
//!
//! Every eigenfunction has the form `φ(x) = f(x)·e^(−x²/2)`, and the
//! operators here act on `f` alone. With `βₗ(x) = x + l/x`:
//!
//! ```text
//! bₗ† = −d/dx + βₗ   acts as   f ↦ −f′ + (2x + l/x)·f
//! bₗ  =  d/dx + βₗ   acts as   f ↦  f′ + (l/x)·f
//! ```
//!
//! The `+x` in `βₗ` cancels or doubles against the derivative of the
//! Gaussian. For the Hamiltonian `Hₗ = −d²/dx² + x² + l(l+1)/x²`, expanding
//! `(f·e^(−x²/2))″ = (f″ − 2x·f′ + (x² − 1)·f)·e^(−x²/2)` gives the stripped
//! form used by [`hamiltonian_apply`]:
//!
//! ```text
//! H̃ₗ f = −f″ + 2x·f′ + f + l(l+1)·x⁻²·f
//! ```
//!
//! Each operator comes in two [`Form`]s. `Raw` is the linear differential
//! operator, for which all factorization and commutator identities hold.
//! `Canonical` gcd-normalizes after every elementary step, which keeps
//! integers small and gives a scale-free standard for comparing outputs,
//! but is not linear.
//!
//! Cost: `a_dag(l, ·)` and `a(l, ·)` recurse through `l` levels, so one
//! ladder step is `2l + 1` elementary applications; `ladder_dag(l, k, ·)`
//! is `O(l·k)`. Nothing is memoized.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::laurent::LaurentSeries;

/// Ket label `|l, k⟩`: oscillator index `l`, excitation index `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateLabel {
    pub l: u32,
    pub k: u32,
}

impl StateLabel {
    pub const fn new(l: u32, k: u32) -> Self {
        StateLabel { l, k }
    }

    pub fn energy(self) -> Energy {
        energy(self.l, self.k)
    }
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l, self.k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a label of the form l,k with nonnegative integers")]
pub struct ParseLabelError;

impl FromStr for StateLabel {
    type Err = ParseLabelError;

    /// Accepts `l,k`, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(s);
        let (l, k) = s.split_once(',').ok_or(ParseLabelError)?;
        let l = l.trim().parse().map_err(|_| ParseLabelError)?;
        let k = k.trim().parse().map_err(|_| ParseLabelError)?;
        Ok(StateLabel { l, k })
    }
}

/// Energy in units of `ħω/2`; always a positive odd integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Energy(u64);

impl Energy {
    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `E(l,k) = 2(l + k) + 1`.
pub fn energy(l: u32, k: u32) -> Energy {
    Energy(2 * (u64::from(l) + u64::from(k)) + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// Unnormalized, exactly linear.
    Raw,
    /// gcd-normalized after each elementary step.
    Canonical,
}

impl Form {
    fn finish(self, f: LaurentSeries) -> LaurentSeries {
        match self {
            Form::Raw => f,
            Form::Canonical => f.gcd_normalize(),
        }
    }

    /// `bₗ†`: `f ↦ −f′ + (2x + l/x)·f`.
    pub fn b_dag(self, l: u32, f: &LaurentSeries) -> LaurentSeries {
        let spike = f.shift(-1).scale(&BigInt::from(l));
        let r = &(&f.shift(1).scale(&BigInt::from(2)) + &spike) - &f.diff();
        self.finish(r)
    }

    /// `bₗ`: `f ↦ f′ + (l/x)·f`.
    pub fn b(self, l: u32, f: &LaurentSeries) -> LaurentSeries {
        let spike = f.shift(-1).scale(&BigInt::from(l));
        self.finish(&f.diff() + &spike)
    }

    /// Raising operator: `a₀† = b₀†`, `aₗ† = bₗ† ∘ aₗ₋₁† ∘ bₗ`.
    pub fn a_dag(self, l: u32, f: &LaurentSeries) -> LaurentSeries {
        if l == 0 {
            return self.b_dag(0, f);
        }
        self.b_dag(l, &self.a_dag(l - 1, &self.b(l, f)))
    }

    /// Lowering operator: `a₀ = b₀`, `aₗ = bₗ† ∘ aₗ₋₁ ∘ bₗ`.
    pub fn a(self, l: u32, f: &LaurentSeries) -> LaurentSeries {
        if l == 0 {
            return self.b(0, f);
        }
        self.b_dag(l, &self.a(l - 1, &self.b(l, f)))
    }

    /// `bₗ† ∘ … ∘ b₁†`; the identity for `l = 0`.
    pub fn twine_dag(self, l: u32, f: &LaurentSeries) -> LaurentSeries {
        (1..=l).fold(f.clone(), |g, j| self.b_dag(j, &g))
    }

    /// `k`-fold `aₗ†`; the identity for `k = 0`.
    pub fn ladder_dag(self, l: u32, k: u32, f: &LaurentSeries) -> LaurentSeries {
        (0..k).fold(f.clone(), |g, _| self.a_dag(l, &g))
    }
}

/// Canonical `bₗ†`.
pub fn b_dag(l: u32, f: &LaurentSeries) -> LaurentSeries {
    Form::Canonical.b_dag(l, f)
}

/// Canonical `bₗ`.
pub fn b(l: u32, f: &LaurentSeries) -> LaurentSeries {
    Form::Canonical.b(l, f)
}

/// Canonical `aₗ†`.
pub fn a_dag(l: u32, f: &LaurentSeries) -> LaurentSeries {
    Form::Canonical.a_dag(l, f)
}

/// Canonical `aₗ`.
pub fn a(l: u32, f: &LaurentSeries) -> LaurentSeries {
    Form::Canonical.a(l, f)
}

pub fn twine_dag(l: u32, f: &LaurentSeries) -> LaurentSeries {
    Form::Canonical.twine_dag(l, f)
}

pub fn ladder_dag(l: u32, k: u32, f: &LaurentSeries) -> LaurentSeries {
    Form::Canonical.ladder_dag(l, k, f)
}

/// Stripped Hamiltonian `H̃ₗ f = −f″ + 2x·f′ + f + l(l+1)·x⁻²·f` (always raw).
pub fn hamiltonian_apply(l: u32, f: &LaurentSeries) -> LaurentSeries {
    let d1 = f.diff();
    let d2 = d1.diff();
    let spike = BigInt::from(u64::from(l) * (u64::from(l) + 1));
    let r = &(&d1.shift(1).scale(&BigInt::from(2)) - &d2) + f;
    &r + &f.shift(-2).scale(&spike)
}

/// Canonical `f(l,k) = twine_dag(l, ladder_dag(0, k, 1))`.
pub fn wavefunction(l: u32, k: u32) -> LaurentSeries {
    twine_dag(l, &ladder_dag(0, k, &LaurentSeries::one()))
}

/// Unbounded stream `f(l,0), f(l,1), …` built by lifting each ordinary
/// oscillator state through `twine_dag(l, ·)`.
pub fn wavefunctions(l: u32) -> Wavefunctions {
    Wavefunctions { l, base: LaurentSeries::one() }
}

#[derive(Clone, Debug)]
pub struct Wavefunctions {
    l: u32,
    base: LaurentSeries,
}

impl Iterator for Wavefunctions {
    type Item = LaurentSeries;

    fn next(&mut self) -> Option<LaurentSeries> {
        let out = twine_dag(self.l, &self.base);
        self.base = a_dag(0, &self.base);
        Some(out)
    }
}

/// The alternative route: start from `twine_dag(l, 1)` and iterate `aₗ†`.
pub fn ladder_route(l: u32) -> Iterate {
    Iterate { current: twine_dag(l, &LaurentSeries::one()), step: Step::Raise(l) }
}

/// Iterates canonical `aₗ` from `start`, yielding `start` first.
pub fn lowering_sequence(l: u32, start: LaurentSeries) -> Iterate {
    Iterate { current: start, step: Step::Lower(l) }
}

#[derive(Clone, Copy, Debug)]
enum Step {
    Raise(u32),
    Lower(u32),
}

#[derive(Clone, Debug)]
pub struct Iterate {
    current: LaurentSeries,
    step: Step,
}

impl Iterator for Iterate {
    type Item = LaurentSeries;

    fn next(&mut self) -> Option<LaurentSeries> {
        let next = match self.step {
            Step::Raise(l) => a_dag(l, &self.current),
            Step::Lower(l) => a(l, &self.current),
        };
        Some(core::mem::replace(&mut self.current, next))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn l(pos: &[i64], neg: &[i64]) -> LaurentSeries {
        LaurentSeries::from_i64(pos, neg)
    }

    #[test]
    fn intertwiners() {
        assert_eq!(b_dag(1, &l(&[1], &[])), l(&[0, 2], &[1]));
        assert_eq!(b_dag(2, &l(&[0, 2], &[1])), l(&[4, 0, 4], &[0, 3]));
        assert!(Form::Raw.b_dag(1, &LaurentSeries::zero()).is_zero());

        assert_eq!(b(1, &l(&[0, 2], &[1])), l(&[1], &[]));
        assert_eq!(Form::Raw.b(1, &l(&[0, 2], &[1])), l(&[4], &[]));
        assert_eq!(Form::Raw.b(1, &l(&[0, 1], &[])), l(&[2], &[]));
        assert_eq!(b(2, &l(&[4, 0, 4], &[0, 3])), l(&[0, 2], &[1]));
    }

    #[test]
    fn ladders() {
        assert!(a(0, &l(&[1], &[])).is_zero());
        assert_eq!(a_dag(0, &l(&[0, 1], &[])), l(&[-1, 0, 2], &[]));
        assert_eq!(Form::Raw.a_dag(0, &l(&[0, 1], &[])), l(&[-1, 0, 2], &[]));
        assert_eq!(Form::Raw.a(0, &l(&[0, 0, 3], &[])), l(&[0, 6], &[]));
        for j in 1..=8 {
            assert!(a(j, &wavefunction(j, 0)).is_zero(), "l = {j}");
        }
    }

    #[test]
    fn cumulative() {
        let f = l(&[0, 3], &[2]);
        assert_eq!(twine_dag(0, &f), f);
        assert_eq!(twine_dag(1, &l(&[1], &[])), l(&[0, 2], &[1]));
        assert_eq!(twine_dag(2, &l(&[1], &[])), l(&[4, 0, 4], &[0, 3]));
        assert_eq!(ladder_dag(0, 0, &f), f);
        assert_eq!(ladder_dag(0, 5, &l(&[1], &[])), l(&[0, 15, 0, -20, 0, 4], &[]));
        assert_eq!(ladder_dag(1, 2, &l(&[0, 2], &[1])), l(&[0, -4, 0, 4], &[-1]));
    }

    #[test]
    fn wavefunction_examples() {
        assert_eq!(wavefunction(0, 2), l(&[-1, 0, 2], &[]));
        assert_eq!(wavefunction(1, 4), l(&[0, 18, 0, -36, 0, 8], &[3]));
        assert_eq!(wavefunction(2, 5), l(&[0, 0, 0, 63, 0, -36, 0, 4], &[]));
        let streamed: Vec<_> = wavefunctions(2).take(6).collect();
        assert_eq!(streamed[5], wavefunction(2, 5));
    }

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(hamiltonian_apply(0, &l(&[1], &[])), l(&[1], &[]));
        assert_eq!(hamiltonian_apply(1, &l(&[0, 2], &[1])), l(&[0, 6], &[3]));
        assert_eq!(hamiltonian_apply(0, &l(&[0, 1], &[])), l(&[0, 3], &[]));
    }

    #[test]
    fn energies() {
        assert_eq!(energy(0, 0).value(), 1);
        assert_eq!(energy(2, 0).value(), 5);
        assert_eq!(energy(7, 1).value(), 17);
        assert_eq!(StateLabel::new(1, 2).energy().value(), 7);
    }

    #[test]
    fn labels_parse() {
        assert_eq!("7,1".parse(), Ok(StateLabel::new(7, 1)));
        assert_eq!("(0, 3)".parse(), Ok(StateLabel::new(0, 3)));
        assert_eq!("7".parse::<StateLabel>(), Err(ParseLabelError));
        assert_eq!("-1,2".parse::<StateLabel>(), Err(ParseLabelError));
    }

    #[test]
    fn lowering_reverses_the_ordinary_list() {
        let top = l(&[0, 15, 0, -20, 0, 4], &[]);
        let down: Vec<_> = lowering_sequence(0, top).take(6).collect();
        let up: Vec<_> = wavefunctions(0).take(6).collect();
        assert_eq!(down.into_iter().rev().collect::<Vec<_>>(), up);
    }

    #[test]
    fn l_zero_degenerates() {
        let f = l(&[3, -1, 0, 2], &[]);
        assert_eq!(Form::Raw.a_dag(0, &f), Form::Raw.b_dag(0, &f));
        assert_eq!(Form::Raw.a(0, &f), Form::Raw.b(0, &f));
        assert_eq!(Form::Raw.a(0, &f), f.diff());
    }
}
