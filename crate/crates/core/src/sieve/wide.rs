//! Root test modulo primes too large for machine words.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::IntPoly;

/// Coefficients modulo `p`, lowest degree first, no trailing zeros.
type Wide = Vec<BigUint>;

fn trim(mut v: Wide) -> Wide {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn inverse(a: &BigUint, p: &BigUint) -> BigUint {
    a.modpow(&(p - 2u32), p)
}

/// Remainder of `a` by `f`, where `f` is monic.
fn rem_monic(mut a: Wide, f: &[BigUint], p: &BigUint) -> Wide {
    let d = f.len() - 1;
    while a.len() > d {
        let top = a.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let shift = a.len() - d;
        for (i, c) in f[..d].iter().enumerate() {
            let slot = &mut a[shift + i];
            // slot − top·c (mod p)
            let sub = (&top * c) % p;
            *slot = (&*slot + p - sub) % p;
        }
    }
    trim(a)
}

fn mul_mod(a: &[BigUint], b: &[BigUint], f: &[BigUint], p: &BigUint) -> Wide {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    for c in out.iter_mut() {
        *c %= p;
    }
    rem_monic(trim(out), f, p)
}

fn monic(mut a: Wide, p: &BigUint) -> Wide {
    let inv = inverse(a.last().expect("nonzero polynomial"), p);
    for c in a.iter_mut() {
        *c = (&*c * &inv) % p;
    }
    a
}

fn gcd(mut a: Wide, mut b: Wide, p: &BigUint) -> Wide {
    while !b.is_empty() {
        let r = rem_monic(a, &monic(b.clone(), p), p);
        a = b;
        b = r;
    }
    a
}

/// `P(n) ≡ 0 (mod p)` solvable, for an odd prime `p`, by
/// `deg gcd(x^p − x, P mod p) ≥ 1`.
pub(crate) fn has_root_mod_wide(poly: &IntPoly, p: &BigUint) -> bool {
    let pi = BigInt::from(p.clone());
    let f: Wide = trim(
        poly.coeffs()
            .iter()
            .map(|c| c.mod_floor(&pi).to_biguint().expect("nonnegative"))
            .collect(),
    );
    match f.len() {
        0 => return true,
        1 => return false,
        2 => return true,
        _ => {}
    }
    if f[0].is_zero() {
        return true;
    }
    let f = monic(f, p);
    let x: Wide = rem_monic(vec![BigUint::zero(), BigUint::one()], &f, p);
    let mut acc: Wide = vec![BigUint::one()];
    for i in (0..p.bits()).rev() {
        acc = mul_mod(&acc, &acc, &f, p);
        if p.bit(i) {
            acc = mul_mod(&acc, &x, &f, p);
        }
    }
    // x^p − x mod f
    let mut h = acc;
    h.resize(h.len().max(2), BigUint::zero());
    h[1] = (&h[1] + p - 1u32) % p;
    let g = gcd(f, trim(h), p);
    g.len() >= 2
}

/// Membership of `p` in `S(P)` for any prime `p`.
pub fn has_root_mod_prime(poly: &IntPoly, p: &BigUint) -> bool {
    match p.to_u64() {
        Some(small) => super::has_root_mod_p(poly, small),
        None => has_root_mod_wide(poly, p),
    }
}
