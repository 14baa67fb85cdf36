//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use divisorforge::density::{
    check_theorem4_hypothesis, construct_density, cyclotomic, subgroup_poly, subgroup_poly_fixed, DensityTarget,
    SubgroupSpec,
};
use divisorforge::factor::{factor_over_q, is_irreducible_q};
use divisorforge::intersect::{fix_add, fix_remove, intersect, intersect_irreducible, FixKind};
use divisorforge::number_field::{reduce_mod_p, NFElem, NumberField};
use divisorforge::sieve::{has_root_mod_p, intersection_density, sieve};
use divisorforge::{IntPoly, Rational};
use num_bigint::{BigInt, BigUint};
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(name: &str, got: f64, want: f64, tol: f64) -> Result<String, String> {
    ensure((got - want).abs() <= tol, || format!("{name}: {got:.4} not within {tol} of {want:.4}"))?;
    Ok(format!("{name}={got:.4}"))
}

fn limit(name: &str, took: Duration, max: Duration) -> Result<(), String> {
    ensure(took <= max, || format!("{name} took {took:?}, limit {max:?}"))
}

/// x²−2 and x²+1 have a common root mod p exactly when p = 2 or p ≡ 1 (mod 8).
fn c1_worked_example() -> Outcome {
    let start = Instant::now();
    let a = ip(&[-2, 0, 1]);
    let b = ip(&[1, 0, 1]);
    let cert = intersect(&[a, b], 100_000).map_err(|e| e.to_string())?;
    let base = cert.base.primitive_part().with_positive_lc();
    ensure(base == ip(&[9, 0, -2, 0, 1]), || format!("base is {}", cert.base))?;
    ensure(cert.exceptional_primes.contains(&BigUint::from(3u32)), || "3 not examined".into())?;
    ensure(has_root_mod_p(&cert.base, 3), || "3 does not divide the base".into())?;
    let fix3 = cert.fixes.iter().find(|f| f.prime == BigUint::from(3u32)).ok_or("no fix at 3")?;
    ensure(fix3.action == FixKind::Remove, || "fix at 3 is not a removal".into())?;
    let report = sieve(&cert.result, 100_000).map_err(|e| e.to_string())?;
    let mismatches = naive_primes(100_000)
        .into_iter()
        .filter(|&p| report.contains(p) != (p == 2 || p % 8 == 1))
        .count();
    ensure(mismatches == 0, || format!("{mismatches} mismatches up to 1e5"))?;
    limit("worked example", start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("base x^4-2x^2+9, {} fixes, 0 mismatches to 1e5", cert.fixes.len()))
}

fn c2_degree_law() -> Outcome {
    let mut r = rng(2);
    for i in 0..20 {
        let a = random_irreducible(&mut r, 3, 6);
        let b = random_irreducible(&mut r, 3, 6);
        let pair = intersect_irreducible(&a, &b).map_err(|e| format!("pair {i}: {e}"))?;
        ensure(pair.d_raw.deg() == a.deg() * b.deg(), || {
            format!("pair {i} ({a}, {b}): degree {} != {}", pair.d_raw.deg(), a.deg() * b.deg())
        })?;
    }
    Ok("20 pairs".into())
}

fn c3_densities() -> Outcome {
    let mut parts = Vec::new();
    for (c, want, name) in [
        (&[1i64, 0, 1][..], 0.5, "x^2+1"),
        (&[-2, 0, 0, 1][..], 2.0 / 3.0, "x^3-2"),
        (&[9, 0, -2, 0, 1][..], 0.25, "x^4-2x^2+9"),
    ] {
        let start = Instant::now();
        let rep = sieve(&ip(c), 1_000_000).map_err(|e| e.to_string())?;
        limit(name, start.elapsed(), Duration::from_secs(300))?;
        parts.push(within(name, rep.density(), want, 0.01)?);
    }
    Ok(parts.join(", "))
}

fn c4_equality_family() -> Outcome {
    let phi3 = cyclotomic(3).map_err(|e| e.to_string())?;
    let phi4 = cyclotomic(4).map_err(|e| e.to_string())?;
    let d = intersection_density(&[phi3.clone(), phi4], 1_000_000).map_err(|e| e.to_string())?;
    let first = within("Phi3,Phi4", d, 0.25, 0.01)?;
    let d = intersection_density(&[ip(&[-2, 0, 0, 1]), phi3], 1_000_000).map_err(|e| e.to_string())?;
    let second = within("x^3-2,Phi3", d, 1.0 / 6.0, 0.01)?;
    Ok(format!("{first}, {second}"))
}

fn c5_product_rule() -> Outcome {
    let a = ip(&[-2, 0, 1]);
    let b = ip(&[1, 0, 1]);
    let c = ip(&[-8, 0, 1]);
    ensure(check_theorem4_hypothesis(&[a.clone(), b.clone()], 64).map_err(|e| e.to_string())?, || {
        "independent pair rejected".into()
    })?;
    ensure(!check_theorem4_hypothesis(&[a.clone(), c], 64).map_err(|e| e.to_string())?, || {
        "dependent pair accepted".into()
    })?;
    let da = sieve(&a, 1_000_000).map_err(|e| e.to_string())?.density();
    let db = sieve(&b, 1_000_000).map_err(|e| e.to_string())?.density();
    let both = intersection_density(&[a, b], 1_000_000).map_err(|e| e.to_string())?;
    within("joint vs product", both, da * db, 0.02)
}

fn c6_construct_density() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for t in ["1/3", "2/5", "3/4"] {
        let target: DensityTarget = t.parse().map_err(|e: divisorforge::Error| e.to_string())?;
        let c = construct_density(target, 1_000_000).map_err(|e| e.to_string())?;
        parts.push(within(t, c.report.density(), target.value(), 0.02)?);
    }
    limit("constructions", start.elapsed(), Duration::from_secs(600))?;
    Ok(parts.join(", "))
}

fn c7_fix_exactness() -> Outcome {
    let mut r = rng(7);
    let small = naive_primes(50);
    for i in 0..50 {
        let d = r.gen_range(1..=4);
        let p = random_poly(&mut r, d, 30);
        let q = small[r.gen_range(0..small.len())];
        let base = sieve(&p, 10_000).map_err(|e| e.to_string())?;
        let added = sieve(&fix_add(&p, q), 10_000).map_err(|e| e.to_string())?;
        let removed = sieve(&fix_remove(&p, q), 10_000).map_err(|e| e.to_string())?;
        let s: BTreeSet<u64> = base.members.iter().copied().collect();
        let mut want_add = s.clone();
        want_add.insert(q);
        let mut want_remove = s;
        want_remove.remove(&q);
        let got_add: BTreeSet<u64> = added.members.iter().copied().collect();
        let got_remove: BTreeSet<u64> = removed.members.iter().copied().collect();
        ensure(got_add == want_add, || format!("case {i}: fix_add({p}, {q}) changed the wrong primes"))?;
        ensure(got_remove == want_remove, || format!("case {i}: fix_remove({p}, {q}) changed the wrong primes"))?;
    }
    Ok("50 cases".into())
}

fn c8_sieve_oracle() -> Outcome {
    let primes = naive_primes(999);
    let mut checks = 0;
    for c in CORPUS {
        let poly = ip(c);
        for &p in &primes {
            ensure(has_root_mod_p(&poly, p) == brute_has_root(c, p), || format!("{poly} disagrees at {p}"))?;
            checks += 1;
        }
    }
    Ok(format!("{} polynomials, {checks} checks, 0 disagreements", CORPUS.len()))
}

fn random_elem(r: &mut impl Rng, k: &std::sync::Arc<NumberField>, p: u64) -> NFElem {
    let coords = (0..k.degree())
        .map(|_| loop {
            let den: i64 = r.gen_range(1..=12);
            if !(den as u64).is_multiple_of(p) {
                return Rational::new(BigInt::from(r.gen_range(-50..=50)), BigInt::from(den));
            }
        })
        .collect();
    NFElem::new(k, coords).unwrap()
}

/// Residue of `q(a)` for a rational polynomial `q`, computed independently.
fn eval_rat_mod(q: &divisorforge::RatPoly, a: u64, p: u64) -> u64 {
    let big = BigInt::from(p);
    let mut acc = BigInt::from(0);
    for c in q.coeffs().iter().rev() {
        let inv = c.denom().modpow(&(&big - 2u32), &big);
        acc = (acc * a + c.numer() * inv) % &big;
    }
    ((acc % &big + &big) % &big).try_into().unwrap()
}

fn c9_homomorphism() -> Outcome {
    let mut r = rng(9);
    let fields = [ip(&[-2, 0, 1]), ip(&[1, 1, 1, 1, 1])];
    let primes = naive_primes(200);
    let mut checks = 0;
    while checks < 1000 {
        let f = &fields[checks % 2];
        let k = NumberField::new(f).map_err(|e| e.to_string())?;
        let coeffs = small_coeffs(f);
        let p = primes[r.gen_range(0..primes.len())];
        let roots: Vec<u64> = (0..p).filter(|&x| naive_eval_mod(&coeffs, x, p) == 0).collect();
        if roots.is_empty() {
            continue;
        }
        let a = roots[r.gen_range(0..roots.len())];
        let x = random_elem(&mut r, &k, p);
        let y = random_elem(&mut r, &k, p);
        let phi = |e: &NFElem| reduce_mod_p(e, a as i64, p).map_err(|e| e.to_string());
        let (px, py) = (phi(&x)?, phi(&y)?);
        ensure(phi(&(&x + &y))? == (px + py) % p, || format!("additivity fails at p={p}"))?;
        ensure(phi(&(&x * &y))? == px * py % p, || format!("multiplicativity fails at p={p}"))?;
        // any representative of x modulo the minimal polynomial gives the same value
        let t = random_poly(&mut r, 2, 9).to_rat();
        let rep = &x.to_poly() + &(&t * &f.to_rat());
        ensure(eval_rat_mod(&rep, a, p) == px, || format!("well-definedness fails at p={p}"))?;
        checks += 1;
    }
    Ok(format!("{checks} checks over Q(sqrt2) and Q(zeta5)"))
}

fn c10_subgroup_poly() -> Outcome {
    let h = SubgroupSpec::new(7, &[1, 6]).map_err(|e| e.to_string())?;
    let raw = subgroup_poly(7, &h).map_err(|e| e.to_string())?;
    ensure(raw == ip(&[-1, -2, 1, 1]), || format!("got {raw}"))?;
    let fixed = subgroup_poly_fixed(7, &h).map_err(|e| e.to_string())?;
    let report = sieve(&fixed.result, 10_000).map_err(|e| e.to_string())?;
    let exceptions = naive_primes(10_000)
        .into_iter()
        .filter(|&q| report.contains(q) != matches!(q % 7, 1 | 6))
        .count();
    ensure(exceptions == 0, || format!("{exceptions} exceptions to 1e4"))?;
    Ok(format!("x^3+x^2-2x-1, {} fixes, 0 exceptions to 1e4", fixed.fixes.len()))
}

fn c11_factor_round_trip() -> Outcome {
    let mut r = rng(11);
    for i in 0..100 {
        let count = r.gen_range(1..=3);
        let mut want: Vec<IntPoly> = (0..count).map(|_| random_irreducible(&mut r, 4, 9)).collect();
        let product = want.iter().fold(IntPoly::one(), |acc, f| &acc * f);
        let fac = factor_over_q(&product).map_err(|e| format!("case {i}: {e}"))?;
        let mut got: Vec<IntPoly> = fac
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.clone().with_positive_lc(), *m))
            .collect();
        want.sort_by_key(|f| format!("{f:?}"));
        got.sort_by_key(|f| format!("{f:?}"));
        ensure(got == want, || format!("case {i}: {product} factored as {got:?}"))?;
        ensure(fac.expand() == product.to_rat(), || format!("case {i}: expansion differs"))?;
    }
    ensure(is_irreducible_q(&ip(&[9, 0, -2, 0, 1])).map_err(|e| e.to_string())?, || {
        "x^4-2x^2+9 reported reducible".into()
    })?;
    Ok("100 products, x^4-2x^2+9 irreducible".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("worked example", c1_worked_example),
        ("degree law", c2_degree_law),
        ("density estimates", c3_densities),
        ("cyclotomic equality family", c4_equality_family),
        ("product rule", c5_product_rule),
        ("density construction", c6_construct_density),
        ("fix exactness", c7_fix_exactness),
        ("sieve oracle equivalence", c8_sieve_oracle),
        ("reduction homomorphism", c9_homomorphism),
        ("subgroup polynomial", c10_subgroup_poly),
        ("factorization round trip", c11_factor_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
