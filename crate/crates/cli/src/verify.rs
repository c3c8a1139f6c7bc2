//! Self-check suites behind `spiked verify`.

use std::fmt;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spiked_core::measure::{self, gram, inner, moment, quadrature_oracle, MeasureSpec};
use spiked_core::operators::{
    a, energy, hamiltonian_apply, ladder_route, lowering_sequence, wavefunction, wavefunctions, Form, StateLabel,
};
use spiked_core::{BigRational, LaurentSeries, PiScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Eigen,
    Commutator,
    Annihilation,
    Routes,
    Moments,
    Orthogonality,
    Staggering,
    Oracle,
    All,
}

impl Suite {
    pub fn expand(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![Eigen, Commutator, Annihilation, Routes, Moments, Orthogonality, Staggering, Oracle],
            s => vec![s],
        }
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Report {
    fn new(name: &'static str) -> Self {
        Report { name, ..Default::default() }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {} cases, {} failures", self.name, self.cases, self.failures)?;
        if let Some(first) = &self.first_failure {
            write!(f, "\n  first failure: {first}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, seed: u64) -> Report {
    match suite {
        Suite::Eigen => eigen(),
        Suite::Commutator => commutator(seed),
        Suite::Annihilation => annihilation(),
        Suite::Routes => routes(),
        Suite::Moments => moments(),
        Suite::Orthogonality => orthogonality(),
        Suite::Staggering => staggering(),
        Suite::Oracle => oracle(seed),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn eigen() -> Report {
    let mut r = Report::new("eigen");
    for l in 0..=6 {
        for (k, f) in wavefunctions(l).take(9).enumerate() {
            let e = energy(l, k as u32);
            r.case(hamiltonian_apply(l, &f) == f.scale(&BigInt::from(e.value())), || {
                format!("H_{l} applied to ({l},{k}) is not {e} times the state")
            });
        }
    }
    r
}

fn random_series(rng: &mut StdRng) -> LaurentSeries {
    let terms = rng.random_range(1..=8);
    LaurentSeries::from_terms((0..terms).map(|_| (rng.random_range(-4..=6), rng.random_range(-9..=9))))
}

fn commutator(seed: u64) -> Report {
    let mut r = Report::new("commutator");
    let raw = Form::Raw;
    let mut rng = StdRng::seed_from_u64(seed);
    let c = |n: i64, s: &LaurentSeries| s.scale(&BigInt::from(n));
    for _ in 0..50 {
        let f = random_series(&mut rng);
        for l in 1..=5u32 {
            let li = i64::from(l);
            let h = |j: u32, s: &LaurentSeries| hamiltonian_apply(j, s);
            let bd = raw.b_dag(l, &f);
            let b = raw.b(l, &f);
            let ad = raw.a_dag(l, &f);
            let af = raw.a(l, &f);
            let checks = [
                ("b†b = H + 2l - 1", raw.b_dag(l, &b) == &h(l, &f) + &c(2 * li - 1, &f)),
                ("bb† = H + 2l + 1", raw.b(l, &bd) == &h(l - 1, &f) + &c(2 * li + 1, &f)),
                ("[H, b†] = 2b†", &h(l, &bd) - &raw.b_dag(l, &h(l - 1, &f)) == c(2, &bd)),
                ("[H, b] = -2b", &h(l - 1, &b) - &raw.b(l, &h(l, &f)) == c(-2, &b)),
                ("[H, a†] = 2a†", &h(l, &ad) - &raw.a_dag(l, &h(l, &f)) == c(2, &ad)),
                ("[H, a] = -2a", &h(l, &af) - &raw.a(l, &h(l, &f)) == c(-2, &af)),
            ];
            for (what, ok) in checks {
                r.case(ok, || format!("{what} fails for l={l} on {}", f.list_form()));
            }
        }
    }
    r
}

fn annihilation() -> Report {
    let mut r = Report::new("annihilation");
    for l in 0..=8 {
        let out = a(l, &wavefunction(l, 0));
        r.case(out.is_zero(), || format!("a_{l} on ({l},0) gives {out}"));
    }
    r
}

fn routes() -> Report {
    let mut r = Report::new("routes");
    for l in 0..=4 {
        let forward: Vec<_> = wavefunctions(l).take(8).collect();
        for (k, (x, y)) in forward.iter().zip(ladder_route(l)).enumerate() {
            r.case(*x == y, || format!("({l},{k}): {} vs {}", x.list_form(), y.list_form()));
        }
        let top = forward.last().cloned().unwrap_or_default();
        for (k, y) in (0..forward.len()).rev().zip(lowering_sequence(l, top)) {
            let x = &forward[k];
            r.case(*x == y, || format!("lowering to ({l},{k}): {} vs {}", x.list_form(), y.list_form()));
        }
    }
    r
}

/// Γ((m+1)/2) from factorials.
fn gamma_half(m: u32) -> PiScalar {
    let fact = |n: u32| (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let j = m / 2;
    if m % 2 == 1 {
        PiScalar::from_rational(BigRational::from_integer(fact(j)))
    } else {
        let four_j = num_traits::pow(BigInt::from(4), j as usize);
        PiScalar::sqrt_pi_multiple(BigRational::new(fact(2 * j), four_j * fact(j)))
    }
}

fn moments() -> Report {
    let mut r = Report::new("moments");
    for m in 0..=20 {
        let radial = moment(MeasureSpec::radial(1), m);
        let want = gamma_half(m);
        r.case(radial == want, || format!("radial moment {m}: {radial} vs {want}"));
        let linear = moment(MeasureSpec::LINEAR, m);
        let want = if m % 2 == 0 { gamma_half(m) } else { PiScalar::zero() };
        r.case(linear == want, || format!("linear moment {m}: {linear} vs {want}"));
    }
    r
}

fn orthogonality() -> Report {
    let mut r = Report::new("orthogonality");
    for i in 0..=9 {
        for j in 0..=9 {
            match measure::bracket_raw(MeasureSpec::LINEAR, StateLabel::new(0, i), StateLabel::new(0, j)) {
                Ok(v) => r.case(v.is_zero() == (i != j), || format!("<0,{i}|0,{j}> = {v}")),
                Err(e) => r.case(false, || format!("<0,{i}|0,{j}>: {e}")),
            }
        }
    }
    r
}

fn staggering() -> Report {
    let mut r = Report::new("staggering");
    for n in [1u32, 3, 5] {
        for l in 0..=5 {
            let report = gram(MeasureSpec::radial(n), l, 11);
            if report.ks.len() < 3 {
                continue;
            }
            r.case(report.step() == Some(n + 1), || format!("N={n} l={l}: {:?}", report.pattern));
            for class in report.partition().unwrap_or_default() {
                for (i, &p) in class.iter().enumerate() {
                    for &q in &class[i + 1..] {
                        let zero = report.entry(p, q).is_some_and(PiScalar::is_zero);
                        r.case(zero && q - p >= n + 1, || format!("N={n} l={l}: <{p}|{q}> in one class"));
                    }
                }
            }
        }
    }
    let even = gram(MeasureSpec::radial(2), 0, 5);
    r.case(even.partition().is_none(), || format!("N=2 l=0 partitioned as {:?}", even.classes));
    r
}

fn oracle(seed: u64) -> Report {
    let mut r = Report::new("oracle");
    let mut rng = StdRng::seed_from_u64(seed ^ 0x0dd);
    while r.cases < 20 {
        let spec = MeasureSpec::new(rng.random_range(0..=5));
        let l = rng.random_range(0..=4);
        let (k1, k2) = (rng.random_range(0..=7), rng.random_range(0..=7));
        let (f, g) = (wavefunction(l, k1), wavefunction(l, k2));
        if !spec.admits(&f) || !spec.admits(&g) {
            continue;
        }
        let norm = |x: &LaurentSeries| inner(spec, x, x).map(|v| v.to_f64()).unwrap_or(f64::NAN);
        let exact = inner(spec, &f, &g).map(|v| v.to_f64()).unwrap_or(f64::NAN);
        let numeric = quadrature_oracle(spec, &f, &g).unwrap_or(f64::NAN);
        let scale = if exact == 0.0 { (norm(&f) * norm(&g)).sqrt() } else { exact.abs() };
        r.case((numeric - exact).abs() <= 1e-6 * scale, || {
            format!("{spec} ({l},{k1})·({l},{k2}): exact {exact}, quadrature {numeric}")
        });
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for suite in Suite::All.expand() {
            let report = run(suite, 7);
            assert!(report.passed(), "{report}");
            assert!(report.cases > 0, "{report}");
        }
    }

    #[test]
    fn report_lists_first_failure() {
        let mut r = Report::new("demo");
        r.case(true, || unreachable!());
        r.case(false, || "first".into());
        r.case(false, || "second".into());
        assert_eq!(r.to_string(), "FAIL demo: 3 cases, 2 failures\n  first failure: first");
    }
}
