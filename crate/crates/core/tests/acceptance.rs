//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use spiked_core::laurent::LaurentSeries;
use spiked_core::measure::{
    bracket_normalized, bracket_raw, degeneracy, even_rule, gram, inner, is_physical, level_states,
    physical_pattern, quadrature_oracle, MeasureSpec,
};
use spiked_core::operators::{
    a, energy, hamiltonian_apply, ladder_route, wavefunction, wavefunctions, Form, StateLabel,
};

const SEED: u64 = 0x5eed_2026;
const ORACLE_REL_TOL: f64 = 1e-6;

type Outcome = Result<(), String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn series(pos: &[i64], neg: &[i64]) -> LaurentSeries {
    LaurentSeries::from_i64(pos, neg)
}

fn golden_tables() -> Outcome {
    let tables: [(u32, Vec<LaurentSeries>); 3] = [
        (
            0,
            vec![
                series(&[1], &[]),
                series(&[0, 1], &[]),
                series(&[-1, 0, 2], &[]),
                series(&[0, -3, 0, 2], &[]),
                series(&[3, 0, -12, 0, 4], &[]),
                series(&[0, 15, 0, -20, 0, 4], &[]),
            ],
        ),
        (
            1,
            vec![
                series(&[0, 2], &[1]),
                series(&[0, 0, 1], &[]),
                series(&[0, -4, 0, 4], &[-1]),
                series(&[0, 0, -5, 0, 2], &[]),
                series(&[0, 18, 0, -36, 0, 8], &[3]),
                series(&[0, 0, 35, 0, -28, 0, 4], &[]),
            ],
        ),
        (
            2,
            vec![
                series(&[4, 0, 4], &[0, 3]),
                series(&[0, 0, 0, 1], &[]),
                series(&[-6, 0, -12, 0, 8], &[0, -3]),
                series(&[0, 0, 0, -7, 0, 2], &[]),
                series(&[24, 0, 72, 0, -96, 0, 16], &[0, 9]),
                series(&[0, 0, 0, 63, 0, -36, 0, 4], &[]),
            ],
        ),
    ];
    for (l, expected) in tables {
        let got: Vec<_> = wavefunctions(l).take(6).collect();
        for (k, (g, e)) in got.iter().zip(&expected).enumerate() {
            check(g == e, || format!("(l={l}, k={k}): got {}, want {}", g.list_form(), e.list_form()))?;
        }
    }
    Ok(())
}

fn bracket_values() -> Outcome {
    let v = bracket_raw(MeasureSpec::LINEAR, StateLabel::new(7, 1), StateLabel::new(7, 1)).map_err(|e| e.to_string())?;
    let rendered = v.to_decimal(8);
    let zero = bracket_raw(MeasureSpec::LINEAR, StateLabel::new(7, 1), StateLabel::new(7, 5)).map_err(|e| e.to_string())?;
    check(zero.is_zero(), || format!("<7,1|7,5> = {zero}, want exact zero"))?;
    check(rendered == "14034.40729347", || {
        format!("<7,1|7,1> = {v} renders as {rendered}, want 14034.40729347")
    })
}

fn normalized_bracket() -> Outcome {
    let got = bracket_normalized(MeasureSpec::radial(1), StateLabel::new(0, 0), StateLabel::new(0, 1), 6)
        .map_err(|e| e.to_string())?;
    check(got == "0.797884", || format!("got {got}, want 0.797884"))
}

fn physicality() -> Outcome {
    let pattern: Vec<bool> = physical_pattern(3, 2).take(6).collect();
    check(pattern == [false, true, false, true, false, true], || format!("physical_pattern(3, 2) = {pattern:?}"))?;
    for n in [1u32, 3, 5] {
        for l in 0..=5 {
            for k in [0u32, 2, 4] {
                let direct = is_physical(n, &wavefunction(l, k)).map_err(|e| e.to_string())?;
                check(direct == even_rule(n, l), || {
                    format!("N={n} l={l} k={k}: is_physical = {direct}, even_rule = {}", even_rule(n, l))
                })?;
            }
        }
    }
    Ok(())
}

fn eigenvalues() -> Outcome {
    for l in 0..=6 {
        for k in 0..=8 {
            let f = wavefunction(l, k);
            let e = BigInt::from(energy(l, k).value());
            check(hamiltonian_apply(l, &f) == f.scale(&e), || format!("H_{l} ({l},{k}) != {e}·f"))?;
        }
    }
    Ok(())
}

fn random_series(rng: &mut StdRng) -> LaurentSeries {
    let terms = rng.random_range(1..=8);
    LaurentSeries::from_terms((0..terms).map(|_| (rng.random_range(-4..=6), rng.random_range(-9..=9))))
}

fn operator_identities() -> Outcome {
    let raw = Form::Raw;
    let mut rng = StdRng::seed_from_u64(SEED);
    for case in 0..50 {
        let f = random_series(&mut rng);
        for l in 1..=5u32 {
            let li = i64::from(l);
            let c = |n: i64, s: &LaurentSeries| s.scale(&BigInt::from(n));
            let h = |j: u32, s: &LaurentSeries| hamiltonian_apply(j, s);
            let fail = |what: &str| format!("case {case}, l={l}: {what} on {}", f.list_form());

            check(raw.b_dag(l, &raw.b(l, &f)) == &h(l, &f) + &c(2 * li - 1, &f), || fail("b†b"))?;
            check(raw.b(l, &raw.b_dag(l, &f)) == &h(l - 1, &f) + &c(2 * li + 1, &f), || fail("bb†"))?;
            let bd = raw.b_dag(l, &f);
            check(&h(l, &bd) - &raw.b_dag(l, &h(l - 1, &f)) == c(2, &bd), || fail("[H, b†]"))?;
            let b = raw.b(l, &f);
            check(&h(l - 1, &b) - &raw.b(l, &h(l, &f)) == c(-2, &b), || fail("[H, b]"))?;
            let ad = raw.a_dag(l, &f);
            check(&h(l, &ad) - &raw.a_dag(l, &h(l, &f)) == c(2, &ad), || fail("[H, a†]"))?;
            let a = raw.a(l, &f);
            check(&h(l, &a) - &raw.a(l, &h(l, &f)) == c(-2, &a), || fail("[H, a]"))?;
        }
    }
    Ok(())
}

fn annihilation_and_routes() -> Outcome {
    for l in 0..=8 {
        let r = a(l, &wavefunction(l, 0));
        check(r.is_zero(), || format!("a_{l} (l,0) = {r}"))?;
    }
    for l in 1..=2 {
        for (k, (x, y)) in wavefunctions(l).zip(ladder_route(l)).take(6).enumerate() {
            check(x == y, || format!("({l},{k}): {} vs {}", x.list_form(), y.list_form()))?;
        }
    }
    Ok(())
}

fn norm_recurrence() -> Outcome {
    let spec = MeasureSpec::LINEAR;
    for k in [1u32, 3, 5, 7] {
        let f = Form::Raw.twine_dag(0, &Form::Raw.ladder_dag(0, k, &LaurentSeries::one()));
        let g = Form::Raw.b_dag(1, &f);
        let lhs = inner(spec, &g, &g).map_err(|e| e.to_string())?;
        let factor = num_rational::BigRational::from_integer(BigInt::from(2 * k + 4));
        let rhs = inner(spec, &f, &f).map_err(|e| e.to_string())?.scale(&factor);
        check(lhs == rhs, || format!("k={k}: {lhs} vs {rhs}"))?;
    }
    Ok(())
}

fn staggered_bases() -> Outcome {
    let cases: [(u32, &[u32], u32); 3] = [(1, &[0], 2), (3, &[0, 1, 2], 4), (5, &[0], 6)];
    for (n, ls, step) in cases {
        for &l in ls {
            let report = gram(MeasureSpec::radial(n), l, 11);
            check(report.step() == Some(step), || format!("N={n} l={l}: {:?}", report.pattern))?;
            for class in report.partition().unwrap_or_default() {
                for &p in class {
                    for &q in class {
                        let v = report.entry(p, q).cloned().unwrap_or_default();
                        check(p == q || v.is_zero(), || format!("N={n} l={l}: <{p}|{q}> = {v}"))?;
                    }
                }
            }
        }
    }
    let report = gram(MeasureSpec::radial(2), 0, 5);
    check(report.partition().is_none(), || format!("N=2: unexpected partition {:?}", report.classes))?;
    let mut nonzero = false;
    for (i, row) in report.matrix.iter().enumerate() {
        nonzero |= row.iter().enumerate().any(|(j, v)| i != j && !v.is_zero());
    }
    check(nonzero, || "N=2: every admissible pair is orthogonal".into())
}

fn degeneracy_counts() -> Outcome {
    let table: [&[(u32, u32)]; 5] = [
        &[(0, 1)],
        &[(1, 1)],
        &[(0, 3), (2, 1)],
        &[(1, 3), (3, 1)],
        &[(0, 5), (2, 3), (4, 1)],
    ];
    for (n, expected) in table.iter().enumerate() {
        let n = n as u32;
        let got: Vec<(u32, u32)> = level_states(n).iter().map(|s| (s.l, s.k)).collect();
        check(got == *expected, || format!("level_states({n}) = {got:?}"))?;
        let size = if n % 2 == 0 { n / 2 + 1 } else { (n + 1) / 2 };
        check(got.len() == size as usize, || format!("level {n}: {} states, want {size}", got.len()))?;
    }
    for n in 0..=10u32 {
        let d = degeneracy(n);
        let want = u64::from((n + 1) * (n + 2) / 2);
        check(d == want, || format!("degeneracy({n}) = {d}"))?;
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 0x11);
    let mut found = 0;
    let mut draws = 0;
    while found < 20 {
        draws += 1;
        if draws > 10_000 {
            return Err("could not draw 20 physical pairs".into());
        }
        let spec = MeasureSpec::new(rng.random_range(0..=5));
        let l = rng.random_range(0..=4);
        let (k1, k2) = (rng.random_range(0..=7), rng.random_range(0..=7));
        let (f, g) = (wavefunction(l, k1), wavefunction(l, k2));
        if !spec.admits(&f) || !spec.admits(&g) {
            continue;
        }
        found += 1;
        let exact = inner(spec, &f, &g).map_err(|e| e.to_string())?.to_f64();
        let numeric = quadrature_oracle(spec, &f, &g).map_err(|e| e.to_string())?;
        let reference = if exact == 0.0 {
            let nf = inner(spec, &f, &f).map_err(|e| e.to_string())?.to_f64();
            let ng = inner(spec, &g, &g).map_err(|e| e.to_string())?.to_f64();
            (nf * ng).sqrt()
        } else {
            exact.abs()
        };
        check((numeric - exact).abs() <= ORACLE_REL_TOL * reference, || {
            format!("{spec} ({l},{k1})·({l},{k2}): exact {exact}, quadrature {numeric}")
        })?;
    }
    Ok(())
}

fn hermite() -> Outcome {
    let two_x = series(&[0, 2], &[]);
    let mut prev = LaurentSeries::zero();
    let mut h = LaurentSeries::one();
    for k in 0..=9u32 {
        let w = wavefunction(0, k);
        let want = h.gcd_normalize();
        check(w == want, || format!("k={k}: {} vs {}", w.list_form(), want.list_form()))?;
        let next = &(&two_x * &h) - &prev.scale(&BigInt::from(2 * k));
        prev = std::mem::replace(&mut h, next);
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("golden wavefunction tables", golden_tables),
        ("bracket values", bracket_values),
        ("normalized bracket", normalized_bracket),
        ("physicality", physicality),
        ("eigenvalues", eigenvalues),
        ("operator identities", operator_identities),
        ("annihilation and routes", annihilation_and_routes),
        ("norm recurrence", norm_recurrence),
        ("staggered bases", staggered_bases),
        ("degeneracy", degeneracy_counts),
        ("oracle equivalence", oracle_equivalence),
        ("hermite recovery", hermite),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
