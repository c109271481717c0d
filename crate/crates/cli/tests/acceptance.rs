//! End-to-end acceptance run. Prints one line per criterion and fails if
//! any criterion fails.

use indexlab_cli::witness::search_witness;
use indexlab_core::arith::integer::{primes_up_to, valuation, vp_factorial};
use indexlab_core::arith::{poly_discriminant, IntMatrix, IntPoly};
use indexlab_core::families::{param_grid, verify_family, Family, VerificationReport};
use indexlab_core::invariants::{full_report, InvariantReport, SearchConfig};
use indexlab_core::nf::{build_field, AlgebraicInt, NumberField, SplittingType};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn vp(x: &BigInt, p: u64) -> u32 {
    valuation(x, p).unwrap().finite().expect("nonzero")
}

struct Outcome {
    lines: Vec<(u32, bool, String)>,
}

impl Outcome {
    fn record(&mut self, n: u32, pass: bool, detail: String) {
        println!("criterion {n}: {} ({detail})", if pass { "PASS" } else { "FAIL" });
        self.lines.push((n, pass, detail));
    }
}

fn sweep(family: Family, lo: i64, hi: i64) -> VerificationReport {
    verify_family(family, &param_grid(family, lo, hi), &SearchConfig::default())
}

fn summary(r: &VerificationReport) -> (bool, String) {
    let bad = r.discrepancies();
    for row in &bad {
        let exact = row.exact.as_ref().map(|e| (e.index_k.to_string(), e.i_k.to_string()));
        println!(
            "  discrepancy {} {:?}: predicted {:?}, exact {:?}, {}",
            r.family,
            row.param.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            row.prediction.as_ref().map(|p| (&p.index_pred, &p.i_pred)),
            exact,
            row.reason.clone().unwrap_or_default()
        );
    }
    (
        bad.is_empty() && r.applicable() > 0,
        format!("{}: {} of {} applicable members agree", r.family, r.passed(), r.applicable()),
    )
}

fn reports(r: &VerificationReport) -> impl Iterator<Item = &InvariantReport> {
    r.rows.iter().filter_map(|row| row.exact.as_ref())
}

/// `[O_K : Z[t]]` as the determinant of the powers of `t` in the integral basis.
fn element_index(k: &NumberField, t: &AlgebraicInt) -> BigInt {
    let mut rows = Vec::with_capacity(k.degree());
    let mut cur = k.one();
    for _ in 0..k.degree() {
        let next = k.mul(&cur, t);
        rows.push(std::mem::replace(&mut cur, next).coords);
    }
    IntMatrix::from_rows(rows).unwrap().det().abs()
}

fn random_corpus(count: usize, seed: u64) -> Vec<NumberField> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = 2 + out.len() % 6;
        let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-6..=6)).collect();
        c.push(1);
        if let Ok(k) = build_field(&IntPoly::from_i64s(&c)) {
            out.push(k);
        }
    }
    out
}

#[test]
fn acceptance() {
    let mut out = Outcome { lines: Vec::new() };
    let mut built: Vec<InvariantReport> = Vec::new();

    let quad = sweep(Family::Quadratic, -200, 200);
    let (ok, detail) = summary(&quad);
    out.record(1, ok, detail);
    built.extend(reports(&quad).cloned());

    let cubic = sweep(Family::Cubic, -30, 30);
    let (ok, detail) = summary(&cubic);
    out.record(2, ok, detail);
    built.extend(reports(&cubic).cloned());

    let pure = sweep(Family::PureCubic, -100, 100);
    let (ok, detail) = summary(&pure);
    let both_signs = reports(&pure).any(|r| r.poly.coeff(0).is_positive())
        && reports(&pure).any(|r| r.poly.coeff(0).is_negative());
    out.record(3, ok && both_signs, detail);
    built.extend(reports(&pure).cloned());

    let simplest = sweep(Family::SimplestCubic, 0, 486);
    let (ok, detail) = summary(&simplest);
    let classes: std::collections::BTreeSet<i64> = simplest
        .rows
        .iter()
        .filter(|r| r.applicable)
        .map(|r| i64::try_from(r.param[0].mod_floor(&BigInt::from(243))).unwrap())
        .collect();
    out.record(4, ok && classes.len() == 243, format!("{detail}; {} classes mod 243", classes.len()));
    built.extend(reports(&simplest).cloned());

    let quartic = sweep(Family::SimplestQuartic, 1, 64);
    let (ok, detail) = summary(&quartic);
    out.record(5, ok, detail);
    built.extend(reports(&quartic).cloned());

    let quintic = sweep(Family::LehmerQuintic, -20, 20);
    let (ok, detail) = summary(&quintic);
    out.record(6, ok, detail);
    built.extend(reports(&quintic).cloned());

    let mut params = param_grid(Family::SimplestSextic, 1, 60);
    params.extend([120, 363, 444].map(|m| vec![BigInt::from(m)]));
    let sextic = verify_family(Family::SimplestSextic, &params, &SearchConfig::default());
    let (ok, detail) = summary(&sextic);
    let alphas: Vec<String> = sextic
        .rows
        .iter()
        .filter_map(|r| r.alpha().filter(|&a| a > 0).map(|a| format!("{}:{a}", r.param[0])))
        .collect();
    out.record(7, ok, format!("{detail}; nonzero alpha at m = {}", alphas.join(" ")));
    built.extend(reports(&sextic).cloned());

    let mut found = 0;
    let mut wanted = 0;
    for n in 2..=6usize {
        for p in primes_up_to(n as u64) {
            wanted += 1;
            match search_witness(n, p, 1, 10_000, &SearchConfig::default()) {
                Ok(Some(hit)) if hit.report.i_k.is_multiple_of(&BigInt::from(p)) => {
                    found += 1;
                    built.push(hit.report);
                }
                other => println!("  no witness for n = {n}, p = {p}: {:?}", other.map(|o| o.map(|h| h.poly))),
            }
        }
    }
    out.record(8, found == wanted, format!("{found} of {wanted} (n, p) pairs have a verified witness"));

    let mismatched: Vec<String> = built
        .iter()
        .filter(|r| {
            let divisors: Vec<u64> = primes_up_to(r.degree as u64)
                .into_iter()
                .filter(|&p| r.i_k.is_multiple_of(&BigInt::from(p)))
                .collect();
            divisors != r.support
        })
        .map(|r| r.poly.to_string())
        .collect();
    out.record(
        9,
        mismatched.is_empty(),
        format!("{} fields, mismatches: {:?}", built.len(), mismatched),
    );

    let corpus = random_corpus(20, 2024);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0usize;
    let mut failures = 0usize;
    for k in &corpus {
        let n = k.degree();
        let mut taken = 0;
        while taken < 200 {
            let t = AlgebraicInt::new((0..n).map(|_| BigInt::from(rng.gen_range(-9..=9i64))).collect());
            if !k.is_primitive(&t) {
                continue;
            }
            taken += 1;
            let d = poly_discriminant(&k.char_poly(&t)).unwrap();
            let idx = element_index(k, &t);
            for p in primes_up_to(7) {
                checked += 1;
                if vp(&d, p) != 2 * vp(&idx, p) + vp(k.disc(), p) {
                    failures += 1;
                }
            }
        }
    }
    out.record(
        10,
        failures == 0 && corpus.len() == 20,
        format!("{} fields, {checked} prime checks, {failures} failures", corpus.len()),
    );

    for k in &corpus {
        built.push(full_report(k).unwrap());
    }
    let dedekind = build_field(&"x^3 - x^2 - 2*x - 8".parse().unwrap()).unwrap();
    let ded = full_report(&dedekind).unwrap();
    built.push(ded.clone());

    let over: Vec<String> = built
        .iter()
        .flat_map(|r| {
            r.valuations
                .iter()
                .filter(|(&p, v)| v.fixed > vp_factorial(r.degree as u64, p))
                .map(move |(p, _)| format!("{} at {p}", r.poly))
        })
        .collect();
    out.record(11, over.is_empty(), format!("{} fields, violations: {:?}", built.len(), over));

    let two = BigInt::from(2);
    let split_ok = ded.splittings.get(&2) == Some(&SplittingType::new(vec![(1, 1); 3]));
    out.record(
        12,
        ded.index_k.is_multiple_of(&two) && ded.i_k.is_multiple_of(&two) && split_ok,
        format!("I(K) = {}, i(K) = {}, splitting of 2 = {}", ded.index_k, ded.i_k, ded.splittings[&2]),
    );

    let mut direction_failures = 0;
    let mut converse_counterexamples = 0;
    for r in &built {
        for v in r.valuations.values() {
            if v.index > 0 && v.fixed == 0 {
                direction_failures += 1;
            }
            if v.fixed > 0 && v.index == 0 {
                converse_counterexamples += 1;
            }
        }
    }
    out.record(
        13,
        direction_failures == 0 && converse_counterexamples > 0 && !built.iter().any(|r| r.i_k.is_zero()),
        format!(
            "{} fields, {direction_failures} direction failures, {converse_counterexamples} converse counterexamples",
            built.len()
        ),
    );

    let failed: Vec<u32> = out.lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
