use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{bigint_mod, is_prime, powmod};
use crate::poly::rat_divides;
use crate::{Error, IntPoly, Rational, Result};

use super::eval_mod_big;

/// Turns a rational root `a/b` of `P` modulo `p` (`p | P(a/b)`) into the
/// integer root `n ≡ a·b^(p−2) (mod p)`.
pub fn rational_root_to_integer(poly: &IntPoly, a: &BigInt, b: &BigInt, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if b.is_zero() || bigint_mod(b, p) == 0 {
        return Err(Error::DenominatorDivisibleBy(p));
    }
    let value = poly.to_rat().eval(&Rational::new(a.clone(), b.clone()));
    if !rat_divides(&BigInt::from(p), &value) {
        return Err(Error::NotADivisor { n: p, a: a.to_string(), b: b.to_string() });
    }
    let n = crate::arith::mulmod(bigint_mod(a, p), powmod(bigint_mod(b, p), p - 2, p), p);
    debug_assert_eq!(poly.eval_mod(n, p), 0);
    Ok(n)
}

/// Lifts a simple root `r` of `P` modulo `p` to a root modulo `p^k`.
pub fn hensel_root_lift(poly: &IntPoly, p: u64, r: u64, k: u32) -> Result<BigInt> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::Internal("lifting exponent must be at least 1".into()));
    }
    let r = r % p;
    if poly.eval_mod(r, p) != 0 {
        return Err(Error::NotARootModP { a: r, p });
    }
    let dr = poly.derivative().eval_mod(r, p);
    if dr == 0 {
        return Err(Error::NonSimpleRoot { r, p });
    }
    let pb = BigInt::from(p);
    let inv = BigInt::from(crate::arith::invmod(dr, p).expect("nonzero derivative"));
    let mut s = BigInt::from(r);
    let mut m = pb.clone();
    // P'(s) ≡ P'(r) (mod p), so one correction per extra digit
    for _ in 1..k {
        m *= &pb;
        let v = eval_mod_big(poly, &s, &m);
        s = (&s - v * &inv).mod_floor(&m);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn rational_root_examples() {
        let f = ip(&[-2, 0, 1]);
        assert_eq!(rational_root_to_integer(&f, &1.into(), &5.into(), 7).unwrap(), 3);
        assert_eq!(rational_root_to_integer(&f, &3.into(), &1.into(), 7).unwrap(), 3);
        assert_eq!(
            rational_root_to_integer(&ip(&[1, 0, 1]), &1.into(), &7.into(), 7),
            Err(Error::DenominatorDivisibleBy(7))
        );
        assert!(matches!(
            rational_root_to_integer(&f, &1.into(), &1.into(), 7),
            Err(Error::NotADivisor { .. })
        ));
    }

    #[test]
    fn hensel_examples() {
        let f = ip(&[-2, 0, 1]);
        assert_eq!(hensel_root_lift(&f, 7, 3, 2).unwrap(), BigInt::from(10));
        assert_eq!(hensel_root_lift(&f, 7, 3, 1).unwrap(), BigInt::from(3));
        let sq = ip(&[1, -2, 1]);
        assert_eq!(hensel_root_lift(&sq, 5, 1, 2), Err(Error::NonSimpleRoot { r: 1, p: 5 }));
        let s = hensel_root_lift(&f, 7, 4, 12).unwrap();
        let m = BigInt::from(7).pow(12);
        assert!(eval_mod_big(&f, &s, &m).is_zero());
    }
}
