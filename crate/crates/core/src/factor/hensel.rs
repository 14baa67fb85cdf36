//! Quadratic Hensel lifting of a modular factorization along a balanced
//! factor tree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::modp::ModPoly;
use crate::IntPoly;

/// Coefficients reduced into `[0, m)`.
pub(crate) fn reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients reduced into the symmetric range `(-m/2, m/2]`.
pub(crate) fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half: BigInt = m >> 1;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Inverse of `a` modulo `m`; `a` must be a unit.
pub(crate) fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Division by a monic polynomial in `ℤ[x]`.
fn div_rem_monic(a: &IntPoly, h: &IntPoly) -> (IntPoly, IntPoly) {
    let dh = h.deg();
    if a.is_zero() || a.deg() < dh {
        return (IntPoly::zero(), a.clone());
    }
    let mut rem = a.coeffs().to_vec();
    let mut quo = vec![BigInt::zero(); a.deg() - dh + 1];
    for k in (0..quo.len()).rev() {
        let q = rem[k + dh].clone();
        if q.is_zero() {
            continue;
        }
        for (j, c) in h.coeffs().iter().enumerate() {
            rem[k + j] -= &q * c;
        }
        quo[k] = q;
    }
    rem.truncate(dh);
    (IntPoly::new(quo), IntPoly::new(rem))
}

fn lift_int(f: &ModPoly) -> IntPoly {
    f.to_int_poly()
}

/// Lifts `f ≡ lc(f)·∏ factors (mod p)` to `f ≡ lc(f)·∏ lifted (mod modulus)`,
/// where `modulus` is a power of `p`, the factors are monic, pairwise coprime
/// and `p ∤ lc(f)`. Returns monic lifts in input order.
pub(crate) fn multifactor_lift(f: &IntPoly, factors: &[ModPoly], p: u64, modulus: &BigInt) -> Vec<IntPoly> {
    let f = reduce(f, modulus);
    if factors.len() == 1 {
        let inv = inverse_mod(&f.lc(), modulus);
        return vec![reduce(&f.scale(&inv), modulus)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let lc_mod = crate::arith::bigint_mod(&f.lc(), p);
    let g0 = left
        .iter()
        .fold(ModPoly::new(p, vec![lc_mod]), |acc, u| acc.mul(u));
    let h0 = right.iter().fold(ModPoly::one(p), |acc, u| acc.mul(u));
    let (one, s0, t0) = g0.ext_gcd(&h0);
    debug_assert!(one.is_one());

    let (mut g, mut h) = (lift_int(&g0), lift_int(&h0));
    let (mut s, mut t) = (lift_int(&s0), lift_int(&t0));
    let mut m = BigInt::from(p);
    while &m < modulus {
        m = (&m * &m).min(modulus.clone());
        let e = reduce(&(&f - &(&g * &h)), &m);
        let (q, r) = div_rem_monic(&reduce(&(&s * &e), &m), &h);
        let g_new = reduce(&(&(&g + &(&t * &e)) + &(&q * &g)), &m);
        let h_new = reduce(&(&h + &r), &m);
        let b = reduce(&(&(&(&s * &g_new) + &(&t * &h_new)) - &IntPoly::one()), &m);
        let (c, d) = div_rem_monic(&reduce(&(&s * &b), &m), &h_new);
        s = reduce(&(&s - &d), &m);
        t = reduce(&(&(&t - &(&t * &b)) - &(&c * &g_new)), &m);
        g = g_new;
        h = h_new;
    }
    let mut out = multifactor_lift(&g, left, p, modulus);
    out.extend(multifactor_lift(&h, right, p, modulus));
    out
}
