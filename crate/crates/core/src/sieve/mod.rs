//! Deciding `p ∈ S(P)`, sieving primes up to a bound, and statistics over
//! the primes: density estimates and splitting-type census.

mod census;
mod roots;
mod wide;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::{invmod, mulmod, primes_up_to};
use crate::modp::{x_pow_mod, ModPoly};
use crate::{Error, IntPoly, Rational, Result};

pub use census::{splitting_type_census, CensusReport};
pub use roots::{hensel_root_lift, rational_root_to_integer};
pub use wide::has_root_mod_prime;

/// Primes below this are decided by trying every residue.
pub const ENUMERATION_THRESHOLD: u64 = 257;

/// True when `P(n) ≡ 0 (mod p)` for some integer `n`. `P ≡ 0 (mod p)` counts.
pub fn has_root_mod_p(poly: &IntPoly, p: u64) -> bool {
    has_root_reduced(&poly.reduce_coeffs(p), p)
}

/// Decision by evaluating `P` at every residue.
pub fn has_root_by_enumeration(poly: &IntPoly, p: u64) -> bool {
    let c = poly.reduce_coeffs(p);
    c.iter().all(|&v| v == 0) || (0..p).any(|n| crate::arith::horner_mod(&c, n, p) == 0)
}

/// Decision by `deg gcd(x^p − x, P mod p) ≥ 1`.
pub fn has_root_by_gcd(poly: &IntPoly, p: u64) -> bool {
    root_via_gcd(&poly.reduce_coeffs(p), p)
}

pub(crate) fn has_root_reduced(coeffs: &[u64], p: u64) -> bool {
    if p < ENUMERATION_THRESHOLD {
        coeffs.iter().all(|&v| v == 0) || (0..p).any(|n| crate::arith::horner_mod(coeffs, n, p) == 0)
    } else {
        root_via_gcd(coeffs, p)
    }
}

fn root_via_gcd(coeffs: &[u64], p: u64) -> bool {
    let f = ModPoly::new(p, coeffs.to_vec());
    match f.degree() {
        None => true,
        Some(0) => false,
        Some(1) => true,
        Some(_) => {
            if f.coeffs()[0] == 0 {
                return true;
            }
            let inv = invmod(f.lc(), p).expect("nonzero leading coefficient");
            let monic: Vec<u64> = f.coeffs().iter().map(|&c| mulmod(c, inv, p)).collect();
            let xp = ModPoly::new(p, x_pow_mod(&monic, p, p));
            !xp.sub(&ModPoly::x(p)).gcd(&f).is_one()
        }
    }
}

/// Membership of every prime up to a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveReport {
    pub poly: IntPoly,
    pub bound: u64,
    /// Primes `p ≤ bound` with `p ∈ S(P)`, ascending.
    pub members: Vec<u64>,
    /// `π(bound)`.
    pub prime_count: usize,
    /// `members / prime_count`.
    pub density_estimate: Rational,
}

impl SieveReport {
    pub fn contains(&self, p: u64) -> bool {
        self.members.binary_search(&p).is_ok()
    }

    pub fn density(&self) -> f64 {
        ratio(self.members.len(), self.prime_count)
    }
}

pub(crate) fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// Exact membership `p ∈ S(P)` for all primes `p ≤ bound`.
pub fn sieve(poly: &IntPoly, bound: u64) -> Result<SieveReport> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let primes = primes_up_to(bound);
    let members = members_among(poly, &primes);
    let prime_count = primes.len();
    let density_estimate = if prime_count == 0 {
        Rational::from_integer(0.into())
    } else {
        Rational::new(members.len().into(), prime_count.into())
    };
    Ok(SieveReport { poly: poly.clone(), bound, members, prime_count, density_estimate })
}

/// The subset of `primes` lying in `S(P)`, in input order.
pub fn members_among(poly: &IntPoly, primes: &[u64]) -> Vec<u64> {
    let small: Option<Vec<i128>> = poly.coeffs().iter().map(|c| i128::try_from(c).ok()).collect();
    primes
        .par_iter()
        .with_min_len(256)
        .filter(|&&p| {
            let coeffs = match &small {
                Some(v) => v.iter().map(|&c| c.rem_euclid(p as i128) as u64).collect(),
                None => poly.reduce_coeffs(p),
            };
            has_root_reduced(&coeffs, p)
        })
        .copied()
        .collect()
}

/// Primes belonging to every report, i.e. to `⋂ S(Pᵢ)`.
pub fn common_members(reports: &[SieveReport]) -> Vec<u64> {
    let Some((first, rest)) = reports.split_first() else {
        return Vec::new();
    };
    first.members.iter().copied().filter(|&p| rest.iter().all(|r| r.contains(p))).collect()
}

/// Empirical density of `⋂ S(Pᵢ)` among primes up to `bound`.
pub fn intersection_density(polys: &[IntPoly], bound: u64) -> Result<f64> {
    if polys.is_empty() {
        return Err(Error::EmptyInput);
    }
    let reports = polys.iter().map(|p| sieve(p, bound)).collect::<Result<Vec<_>>>()?;
    Ok(ratio(common_members(&reports).len(), reports[0].prime_count))
}

/// Value of `P` at `n` modulo `m`, for big moduli.
pub(crate) fn eval_mod_big(poly: &IntPoly, n: &BigInt, m: &BigInt) -> BigInt {
    use num_integer::Integer;
    let mut acc = BigInt::from(0);
    for c in poly.coeffs().iter().rev() {
        acc = (acc * n + c).mod_floor(m);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn membership_examples() {
        let f = ip(&[1, 0, 1]);
        assert!(has_root_mod_p(&f, 5));
        assert!(!has_root_mod_p(&f, 7));
        assert!(has_root_mod_p(&f, 2));
        assert!(has_root_mod_p(&ip(&[9, 0, -2, 0, 1]), 3));
        assert!(has_root_mod_p(&ip(&[7, 0, 7]), 7));
        assert!(!has_root_mod_p(&ip(&[1]), 3));
    }

    #[test]
    fn gcd_method_agrees_with_enumeration() {
        let polys = [ip(&[1, 0, 1]), ip(&[-2, 0, 0, 1]), ip(&[3, 0, 5, 0, 7]), ip(&[0, 1]), ip(&[6, 0, 0, 3])];
        for f in &polys {
            for p in primes_up_to(600) {
                assert_eq!(has_root_by_gcd(f, p), has_root_by_enumeration(f, p), "{f} at {p}");
            }
        }
    }

    #[test]
    fn sieve_examples() {
        let r = sieve(&ip(&[1, 0, 1]), 100).unwrap();
        assert_eq!(r.members, vec![2, 5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97]);
        assert_eq!(r.prime_count, 25);
        assert_eq!(r.density_estimate, Rational::new(12.into(), 25.into()));
        let r = sieve(&ip(&[0, 1]), 100).unwrap();
        assert_eq!(r.members.len(), 25);
        let r = sieve(&ip(&[1]), 100).unwrap();
        assert!(r.members.is_empty());
        assert_eq!(r.density(), 0.0);
        assert_eq!(sieve(&IntPoly::zero(), 100), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn huge_coefficients_take_the_slow_path() {
        let big = IntPoly::new(vec![BigInt::from(10).pow(40) + 1, BigInt::from(0), BigInt::from(1)]);
        let primes = primes_up_to(2000);
        let fast = members_among(&big, &primes);
        let slow: Vec<u64> = primes.iter().copied().filter(|&p| has_root_by_enumeration(&big, p)).collect();
        assert_eq!(fast, slow);
    }
}
