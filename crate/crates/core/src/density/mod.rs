//! Cyclotomic and Gaussian-period polynomials, splitting field degrees, and
//! polynomials whose prime divisors have a prescribed rational density.

mod periods;
mod splitting;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{is_prime, moebius};
use crate::poly::{discriminant, squarefree_part};
use crate::sieve::{sieve, SieveReport};
use crate::{Error, IntPoly, Result};

pub use periods::{index_subgroup, subgroup_poly, subgroup_poly_fixed, FixedSubgroupPoly, SubgroupSpec};
pub use splitting::{check_theorem4_hypothesis, splitting_field_degree, DEFAULT_DEGREE_CAP};

/// The `k`-th cyclotomic polynomial `∏_{d | k} (x^d − 1)^{μ(k/d)}`.
pub fn cyclotomic(k: u64) -> Result<IntPoly> {
    if k < 1 {
        return Err(Error::InvalidArgument("cyclotomic index must be at least 1".into()));
    }
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in crate::arith::divisors(k) {
        let factor = &IntPoly::monomial(BigInt::from(1), d as usize) - &IntPoly::one();
        match moebius(k / d) {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    num.div_exact(&den).ok_or_else(|| Error::Internal("cyclotomic quotient is not exact".into()))
}

/// A density `m/k ∈ [0, 1]` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DensityTarget {
    m: u64,
    k: u64,
}

impl DensityTarget {
    pub fn new(m: u64, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidTarget("denominator must be positive".into()));
        }
        if m > k {
            return Err(Error::InvalidTarget(format!("{m}/{k} exceeds 1")));
        }
        let g = m.gcd(&k);
        Ok(DensityTarget { m: m / g, k: k / g })
    }

    pub fn numerator(&self) -> u64 {
        self.m
    }

    pub fn denominator(&self) -> u64 {
        self.k
    }

    pub fn value(&self) -> f64 {
        self.m as f64 / self.k as f64
    }
}

impl fmt::Display for DensityTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.m, self.k)
    }
}

impl FromStr for DensityTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTarget(format!("expected m/k, got {s:?}"));
        let (m, k) = match s.split_once('/') {
            Some((m, k)) => (m.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        DensityTarget::new(m, k)
    }
}

/// One multiplication step of the density construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityStep {
    /// Unreduced density `m/n` reached after this step.
    pub m: u64,
    pub n: u64,
    pub prime: u64,
    pub subgroup: SubgroupSpec,
    pub factor: IntPoly,
}

/// Result of [`construct_density`].
#[derive(Clone, Debug)]
pub struct DensityConstruction {
    pub target: DensityTarget,
    pub poly: IntPoly,
    pub steps: Vec<DensityStep>,
    pub report: SieveReport,
    pub warning: Option<String>,
}

/// Below this bound the empirical density is too noisy to be meaningful.
pub const MIN_VERIFY_BOUND: u64 = 1000;

/// A polynomial `P` with `δ(S(P)) = m/k`, built by the induction
/// `m/n ← (m−1)/(n−1)`: multiply by the Gaussian-period polynomial of the
/// index-`n` subgroup modulo a prime `p ≡ 1 (mod n)` unramified in the
/// splitting field built so far. The result is sieved up to `verify_bound`.
pub fn construct_density(target: DensityTarget, verify_bound: u64) -> Result<DensityConstruction> {
    let mut steps = Vec::new();
    let poly = build(target.m, target.k, &mut steps)?;
    let report = sieve(&poly, verify_bound.max(2))?;
    let warning = (verify_bound < MIN_VERIFY_BOUND)
        .then(|| format!("verify bound {verify_bound} is below {MIN_VERIFY_BOUND}; the estimate is unreliable"));
    Ok(DensityConstruction { target, poly, steps, report, warning })
}

fn build(m: u64, n: u64, steps: &mut Vec<DensityStep>) -> Result<IntPoly> {
    if m == 0 {
        return Ok(IntPoly::one());
    }
    if m == n {
        return Ok(IntPoly::x());
    }
    let prev = build(m - 1, n - 1, steps)?;
    let p = independent_prime(&prev, n)?;
    let subgroup = index_subgroup(p, n)?;
    let factor = subgroup_poly(p, &subgroup)?;
    let poly = &prev * &factor;
    steps.push(DensityStep { m, n, prime: p, subgroup, factor });
    Ok(poly)
}

/// Least odd prime `p > n` with `p ≡ 1 (mod n)` not dividing the
/// discriminant of the squarefree part of `P`.
fn independent_prime(poly: &IntPoly, n: u64) -> Result<u64> {
    let sqf = squarefree_part(poly)?;
    let disc = if sqf.deg() >= 2 { Some(discriminant(&sqf.to_rat())?.numer().clone()) } else { None };
    let mut p = n + 1;
    loop {
        if p % 2 == 1 && p % n == 1 % n && is_prime(p) {
            let ramified = disc.as_ref().is_some_and(|d| crate::arith::bigint_mod(d, p) == 0);
            if !ramified {
                return Ok(p);
            }
        }
        p += 1;
    }
}
