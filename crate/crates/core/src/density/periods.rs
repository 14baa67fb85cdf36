//! Gaussian periods for subgroups of `(ℤ/pℤ)^×`, computed exactly in
//! `ℤ[x]/(x^p − 1)`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::arith::{is_prime, mulmod, powmod, prime_divisors, prime_divisors_of_all};
use crate::intersect::{fix_add, fix_remove, FixAction, FixKind};
use crate::poly::discriminant;
use crate::sieve::has_root_mod_prime;
use crate::{Error, IntPoly, Result};

/// A multiplicatively closed set of units modulo `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupSpec {
    modulus: u64,
    elements: Vec<u64>,
}

impl SubgroupSpec {
    pub fn new(modulus: u64, elements: &[u64]) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidSubgroup(format!("modulus {modulus} is below 2")));
        }
        let set: BTreeSet<u64> = elements.iter().map(|&e| e % modulus).collect();
        if set.is_empty() {
            return Err(Error::InvalidSubgroup("no elements".into()));
        }
        for &a in &set {
            if num_integer::gcd(a, modulus) != 1 {
                return Err(Error::InvalidSubgroup(format!("{a} is not a unit modulo {modulus}")));
            }
            for &b in &set {
                let c = mulmod(a, b, modulus);
                if !set.contains(&c) {
                    return Err(Error::InvalidSubgroup(format!("{a}·{b} = {c} is missing")));
                }
            }
        }
        Ok(SubgroupSpec { modulus, elements: set.into_iter().collect() })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, r: u64) -> bool {
        self.elements.binary_search(&(r % self.modulus)).is_ok()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// The subgroup of `n`-th powers modulo the prime `p`, of index `n`.
pub fn index_subgroup(p: u64, n: u64) -> Result<SubgroupSpec> {
    if !is_prime(p) {
        return Err(Error::InvalidSubgroup(format!("{p} is not prime")));
    }
    if n == 0 || !(p - 1).is_multiple_of(n) {
        return Err(Error::InvalidSubgroup(format!("{n} does not divide {}", p - 1)));
    }
    let elems: Vec<u64> = (1..p).map(|x| powmod(x, n, p)).collect();
    SubgroupSpec::new(p, &elems)
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let qs = prime_divisors(&BigInt::from(p - 1)).expect("small integer factors");
    (2..p)
        .find(|&g| qs.iter().all(|&q| powmod(g, (p - 1) / q, p) != 1))
        .expect("primes have primitive roots")
}

/// Element of `ℤ[x]/(x^p − 1)`.
type Cyclic = Vec<BigInt>;

fn cyclic_mul(a: &Cyclic, b: &Cyclic) -> Cyclic {
    let p = a.len();
    let mut out = vec![BigInt::zero(); p];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[(i + j) % p] += x * y;
            }
        }
    }
    out
}

/// The rational integer represented by `v` modulo `1 + ζ + … + ζ^(p−1)`, if
/// `v` lies in `ℤ`.
fn as_integer(v: &Cyclic) -> Option<BigInt> {
    let rest = &v[1..];
    rest.iter().all(|c| *c == rest[0]).then(|| &v[0] - &rest[0])
}

/// `∏_c (x − η_c)` over the cosets `c·H` in `(ℤ/pℤ)^×`, where
/// `η_c = Σ_{h∈H} ζ_p^{ch}`. Degree `(p − 1)/|H|`.
pub fn subgroup_poly(p: u64, h: &SubgroupSpec) -> Result<IntPoly> {
    if h.modulus() != p || !is_prime(p) {
        return Err(Error::InvalidSubgroup(format!("modulus {} is not the prime {p}", h.modulus())));
    }
    let n = (p - 1) / h.order() as u64;
    let g = primitive_root(p);
    let size = p as usize;
    // X-polynomial with coefficients in ℤ[ζ], lowest degree first
    let mut prod: Vec<Cyclic> = vec![unit(size)];
    for i in 0..n {
        let c = powmod(g, i, p);
        let mut eta = vec![BigInt::zero(); size];
        for &e in h.elements() {
            eta[mulmod(c, e, p) as usize] += 1;
        }
        let mut next = vec![vec![BigInt::zero(); size]; prod.len() + 1];
        for (k, coef) in prod.iter().enumerate() {
            for (slot, v) in next[k + 1].iter_mut().zip(coef) {
                *slot += v;
            }
            for (slot, v) in next[k].iter_mut().zip(cyclic_mul(coef, &eta)) {
                *slot -= v;
            }
        }
        prod = next;
    }
    let coeffs = prod
        .iter()
        .map(|c| as_integer(c).ok_or_else(|| Error::Internal("period product is not rational".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

fn unit(size: usize) -> Cyclic {
    let mut v = vec![BigInt::zero(); size];
    v[0] = BigInt::from(1);
    v
}

/// A subgroup polynomial repaired so that its prime divisors are exactly
/// the primes `q` with `q mod p ∈ H`.
#[derive(Clone, Debug)]
pub struct FixedSubgroupPoly {
    pub raw: IntPoly,
    pub result: IntPoly,
    pub examined: Vec<BigUint>,
    pub fixes: Vec<FixAction>,
}

/// [`subgroup_poly`] followed by repairs at `p` and at the primes dividing
/// the discriminant.
pub fn subgroup_poly_fixed(p: u64, h: &SubgroupSpec) -> Result<FixedSubgroupPoly> {
    let raw = subgroup_poly(p, h)?;
    let mut examined: BTreeSet<BigUint> = BTreeSet::from([BigUint::from(p)]);
    if raw.deg() >= 2 {
        let disc = discriminant(&raw.to_rat())?;
        examined.extend(prime_divisors_of_all(&[disc.numer().clone()])?);
    }
    let mut result = raw.clone();
    let mut fixes = Vec::new();
    for q in &examined {
        let residue = (q % p).to_u64().expect("below the modulus");
        let want = *q != BigUint::from(p) && h.contains(residue);
        let have = has_root_mod_prime(&result, q);
        let action = match (want, have) {
            (true, false) => FixKind::Add,
            (false, true) => FixKind::Remove,
            _ => continue,
        };
        let after = match action {
            FixKind::Add => fix_add(&result, q.clone()),
            FixKind::Remove => fix_remove(&result, q.clone()),
        };
        fixes.push(FixAction { prime: q.clone(), action, before: result.clone(), after: after.clone() });
        result = after;
    }
    Ok(FixedSubgroupPoly { raw, result, examined: examined.into_iter().collect(), fixes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn period_polynomials() {
        let h = SubgroupSpec::new(7, &[1, 6]).unwrap();
        assert_eq!(subgroup_poly(7, &h).unwrap(), ip(&[-1, -2, 1, 1]));
        let h = SubgroupSpec::new(5, &[1, 4]).unwrap();
        assert_eq!(subgroup_poly(5, &h).unwrap(), ip(&[-1, 1, 1]));
        let full = SubgroupSpec::new(11, &(1..11).collect::<Vec<_>>()).unwrap();
        assert_eq!(subgroup_poly(11, &full).unwrap(), ip(&[1, 1]));
        let trivial = SubgroupSpec::new(5, &[1]).unwrap();
        assert_eq!(subgroup_poly(5, &trivial).unwrap(), ip(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn subgroup_validation() {
        assert!(SubgroupSpec::new(7, &[1, 2]).is_err());
        assert!(SubgroupSpec::new(8, &[2]).is_err());
        assert!(SubgroupSpec::new(1, &[0]).is_err());
        assert_eq!(index_subgroup(7, 3).unwrap().elements(), &[1, 6]);
        assert!(index_subgroup(7, 4).is_err());
        let h = SubgroupSpec::new(9, &[1, 8]).unwrap();
        assert!(matches!(subgroup_poly(9, &h), Err(Error::InvalidSubgroup(_))));
    }

    #[test]
    fn seven_is_removed_from_the_cubic() {
        let h = SubgroupSpec::new(7, &[1, 6]).unwrap();
        let fixed = subgroup_poly_fixed(7, &h).unwrap();
        assert_eq!(fixed.examined, vec![BigUint::from(7u32)]);
        assert_eq!(fixed.fixes.len(), 1);
        assert_eq!(fixed.fixes[0].action, FixKind::Remove);
        assert!(!crate::sieve::has_root_mod_p(&fixed.result, 7));
    }
}
