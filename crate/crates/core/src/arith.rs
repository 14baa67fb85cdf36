//! Machine-word modular arithmetic, prime generation and integer factoring.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

#[inline]
pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (if s >= p as u128 { s - p as u128 } else { s }) as u64
}

#[inline]
pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        (a as u128 + p as u128 - b as u128) as u64
    }
}

pub fn powmod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime `p`; `None` for multiples of `p`.
pub fn invmod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    // extended Euclid on i128 to avoid Fermat's extra multiplications
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Horner evaluation of reduced coefficients (ascending) at `x` modulo `p`.
#[inline]
pub fn horner_mod(coeffs: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0;
    for &c in coeffs.iter().rev() {
        acc = addmod(mulmod(acc, x, p), c, p);
    }
    acc
}

/// Residue of a big integer modulo `p` in `[0, p)`.
pub fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let r = (n.magnitude() % p).to_u64().expect("residue below p");
    if n.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

pub fn is_prime(n: u64) -> bool {
    num_prime::nt_funcs::is_prime64(n)
}

/// Primality of an arbitrary-size integer; beyond 64 bits this is a strong
/// probable-prime test.
pub fn is_prime_big(n: &BigUint) -> bool {
    match n.to_u64() {
        Some(small) => is_prime(small),
        None => num_prime::nt_funcs::is_prime(n, None).probably(),
    }
}

/// Primes `≤ limit` by a segmented sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let root = (limit as f64).sqrt() as u64 + 1;
    let mut small = vec![true; root as usize + 1];
    let mut base = Vec::new();
    for i in 2..=root as usize {
        if small[i] {
            base.push(i as u64);
            let mut j = i * i;
            while j <= root as usize {
                small[j] = false;
                j += i;
            }
        }
    }
    const SEGMENT: u64 = 1 << 18;
    let mut out = Vec::new();
    let mut lo = 2u64;
    let mut seg = vec![true; SEGMENT as usize];
    while lo <= limit {
        let hi = (lo + SEGMENT - 1).min(limit);
        let len = (hi - lo + 1) as usize;
        seg[..len].iter_mut().for_each(|b| *b = true);
        for &q in &base {
            if q * q > hi {
                break;
            }
            let mut start = (lo.div_ceil(q) * q).max(q * q);
            while start <= hi {
                seg[(start - lo) as usize] = false;
                start += q;
            }
        }
        out.extend((0..len).filter(|&i| seg[i]).map(|i| lo + i as u64));
        lo = hi + 1;
    }
    out
}

/// Distinct prime divisors of a nonzero integer, ascending. Fails when a
/// factor cannot be split or does not fit in 64 bits.
pub fn prime_divisors(n: &BigInt) -> Result<Vec<u64>> {
    let m: BigUint = n.magnitude().clone();
    if m.is_zero() {
        return Err(Error::Internal("prime divisors of zero".into()));
    }
    if let Some(small) = m.to_u64() {
        return Ok(num_prime::nt_funcs::factorize64(small).into_keys().collect());
    }
    let mut found = std::collections::BTreeSet::new();
    factor_into(m, &mut found)?;
    found
        .into_iter()
        .map(|p| p.to_u64().ok_or_else(|| Error::PrimeTooLarge(p.to_string())))
        .collect()
}

/// Distinct primes dividing at least one of the nonzero integers, ascending.
/// Small primes are removed by trial division and the remaining cofactors
/// are split into a pairwise coprime base before any factoring, so an
/// integer whose primes all divide other inputs is never factored itself.
pub fn prime_divisors_of_all(nums: &[BigInt]) -> Result<Vec<BigUint>> {
    let small = primes_up_to(TRIAL_LIMIT);
    let mut found = std::collections::BTreeSet::new();
    let mut residues = Vec::new();
    for n in nums {
        let mut m = n.magnitude().clone();
        if m.is_zero() {
            continue;
        }
        for &p in &small {
            if m.is_one() {
                break;
            }
            let pb = BigUint::from(p);
            if (&m % &pb).is_zero() {
                found.insert(pb.clone());
                while (&m % &pb).is_zero() {
                    m /= &pb;
                }
            }
        }
        if !m.is_one() {
            residues.push(m);
        }
    }
    for b in coprime_base(residues) {
        factor_into(b, &mut found)?;
    }
    Ok(found.into_iter().collect())
}

/// Pollard rho budget per attempt; finds prime factors up to roughly 2^40.
const RHO_ITERATIONS: usize = 1 << 20;
const RHO_ATTEMPTS: u64 = 2;

/// Adds the prime factors of `n > 0` to `found`, giving up with
/// `FactorizationIncomplete` on a composite that resists the rho budget.
fn factor_into(n: BigUint, found: &mut std::collections::BTreeSet<BigUint>) -> Result<()> {
    let mut todo = vec![n];
    while let Some(m) = todo.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(w) = m.to_u128() {
            found.extend(num_prime::nt_funcs::factorize128(w).into_keys().map(BigUint::from));
            continue;
        }
        if is_prime_big(&m) {
            found.insert(m);
            continue;
        }
        if let Some(root) = perfect_power_root(&m) {
            todo.push(root);
            continue;
        }
        let d = find_divisor(&m).ok_or_else(|| Error::FactorizationIncomplete(m.to_string()))?;
        todo.push(&m / &d);
        todo.push(d);
    }
    Ok(())
}

/// `r` with `r^k = m` for some prime `k`, if `m` is a perfect power.
fn perfect_power_root(m: &BigUint) -> Option<BigUint> {
    primes_up_to(m.bits()).into_iter().find_map(|k| {
        let r = m.nth_root(k as u32);
        (r.pow(k as u32) == *m).then_some(r)
    })
}

fn find_divisor(m: &BigUint) -> Option<BigUint> {
    (0..RHO_ATTEMPTS).find_map(|i| {
        let start = BigUint::from(2 + i);
        let offset = BigUint::from(1 + 2 * i);
        let (d, _) = num_prime::factor::pollard_rho(m, start, offset, RHO_ITERATIONS);
        d.filter(|d| !d.is_one() && d != m)
    })
}

const TRIAL_LIMIT: u64 = 1 << 16;

/// Pairwise coprime integers `> 1` whose prime divisors are exactly those
/// of the inputs.
fn coprime_base(mut todo: Vec<BigUint>) -> Vec<BigUint> {
    let mut base: Vec<BigUint> = Vec::new();
    // each split divides the running product by the gcd, so this terminates
    'next: while let Some(x) = todo.pop() {
        if x.is_one() {
            continue;
        }
        for i in 0..base.len() {
            let g = x.gcd(&base[i]);
            if !g.is_one() {
                let b = base.swap_remove(i);
                todo.push(&b / &g);
                todo.push(&x / &g);
                todo.push(g);
                continue 'next;
            }
        }
        base.push(x);
    }
    base
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    num_prime::nt_funcs::factorize64(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e as u32 - 1))
}

/// Möbius function.
pub fn moebius(n: u64) -> i8 {
    let f = num_prime::nt_funcs::factorize64(n);
    if f.values().any(|&e| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=((n as f64).sqrt() as u64 + 1))
        .filter(|d| d * d <= n && n.is_multiple_of(*d))
        .flat_map(|d| if d * d == n { vec![d] } else { vec![d, n / d] })
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hard_composites_fail_instead_of_hanging() {
        // two 100-bit primes are far beyond the rho budget
        let p = BigUint::parse_bytes(b"1267650600228229401496703205653", 10).unwrap();
        let q = BigUint::parse_bytes(b"1267650600228229401496703205707", 10).unwrap();
        assert!(is_prime_big(&p) && is_prime_big(&q));
        let n = BigInt::from(&p * &q);
        assert!(matches!(prime_divisors_of_all(&[n]), Err(Error::FactorizationIncomplete(_))));
        // a prime power and a product of medium primes do split
        let power = BigInt::from(p.pow(3u32));
        assert_eq!(prime_divisors_of_all(&[power]).unwrap(), vec![p.clone()]);
        let medium = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64) * BigInt::from(p.clone());
        assert_eq!(prime_divisors_of_all(&[medium]).unwrap().len(), 3);
    }

    #[test]
    fn big_primality() {
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert!(is_prime_big(&m127));
        assert!(!is_prime_big(&(&m127 + 2u32)));
        assert!(is_prime_big(&BigUint::from(97u32)));
        assert!(!is_prime_big(&BigUint::from(91u32)));
    }

    #[test]
    fn coprime_base_avoids_redundant_factoring() {
        let big = (BigUint::one() << 127u32) - 1u32; // Mersenne prime
        let q = BigUint::from(1_000_000_007u64);
        let nums = vec![
            BigInt::from(&big * &q * 12u32),
            BigInt::from(big.pow(5u32) * q.pow(3u32)),
            BigInt::from(-35),
            BigInt::zero(),
        ];
        let got = prime_divisors_of_all(&nums).unwrap();
        let want: Vec<BigUint> = vec![2u32.into(), 3u32.into(), 5u32.into(), 7u32.into(), q, big];
        assert_eq!(got, want);
        assert!(prime_divisors_of_all(&[BigInt::one()]).unwrap().is_empty());
    }

    #[test]
    fn sieve_matches_trial_division() {
        let brute: Vec<u64> = (2..=3000u64).filter(|&n| (2..n).all(|d| n % d != 0)).collect();
        assert_eq!(primes_up_to(3000), brute);
        assert_eq!(primes_up_to(1_000_000).len(), 78_498);
        assert!(primes_up_to(1).is_empty());
        assert_eq!(primes_up_to(2), vec![2]);
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(powmod(5, 5, 7), 3);
        assert_eq!(invmod(2, 7), Some(4));
        assert_eq!(invmod(14, 7), None);
        assert_eq!(bigint_mod(&BigInt::from(-1), 7), 6);
        let big = (1u64 << 61) - 1;
        assert_eq!(mulmod(big - 1, big - 1, big), 1);
    }

    #[test]
    fn factoring_helpers() {
        assert_eq!(prime_divisors(&BigInt::from(-36)).unwrap(), vec![2, 3]);
        assert_eq!(prime_divisors(&BigInt::from(1)).unwrap(), Vec::<u64>::new());
        let n: BigInt = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64) * 12;
        assert_eq!(prime_divisors(&n).unwrap(), vec![2, 3, 998_244_353, 1_000_000_007]);
        assert_eq!(totient(12), 4);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(12), 0);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
