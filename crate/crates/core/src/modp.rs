//! Polynomials over the prime field `𝔽_p`, for `p < 2^63`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{addmod, bigint_mod, invmod, mulmod, submod};
use crate::IntPoly;

/// Polynomial over `𝔽_p` with coefficients in `[0, p)`, ascending; the
/// leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        Self::new(p, f.coeffs().iter().map(|c| bigint_mod(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        crate::arith::horner_mod(&self.coeffs, x % self.p, self.p)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.lc(), self.p).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mulmod(a, c, self.p)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = addmod(a, b, self.p);
        }
        Self::new(self.p, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = submod(a, b, self.p);
        }
        Self::new(self.p, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = addmod(out[i + j], mulmod(a, b, p), p);
            }
        }
        Self::new(p, out)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial mod p");
        let p = self.p;
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Self::zero(p), self.clone());
        }
        let inv = invmod(d.lc(), p).expect("invertible leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u64; self.deg() - dd + 1];
        for k in (0..quo.len()).rev() {
            let q = mulmod(rem[k + dd], inv, p);
            if q == 0 {
                continue;
            }
            for (j, &c) in d.coeffs.iter().enumerate() {
                rem[k + j] = submod(rem[k + j], mulmod(q, c, p), p);
            }
            quo[k] = q;
        }
        rem.truncate(dd);
        (Self::new(p, quo), Self::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd (zero only if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    /// Inverse of the Frobenius on a polynomial in `x^p`:
    /// `Σ a_i x^{ip} ↦ Σ a_i x^i`.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Squarefree decomposition of a monic polynomial: pairwise coprime monic
    /// squarefree factors with multiplicities.
    pub fn squarefree_decomposition(&self) -> Vec<(ModPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        if df.is_zero() {
            for (g, m) in f.pth_root().squarefree_decomposition() {
                out.push((g, m * self.p as usize));
            }
            return out;
        }
        let mut c = f.gcd(&df);
        let mut w = f.div_rem(&c).0;
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_rem(&y).0;
            if !z.is_constant() {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.div_rem(&w).0;
        }
        if !c.is_constant() {
            for (g, m) in c.pth_root().squarefree_decomposition() {
                out.push((g, m * self.p as usize));
            }
        }
        out
    }

    /// Extended Euclid: `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = invmod(r0.lc(), p).expect("nonzero leading coefficient");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }
}

/// `x^e mod f` for monic `f` of degree ≥ 1, working on raw coefficient
/// buffers. This is the hot loop of root detection.
pub fn x_pow_mod(f: &[u64], e: u64, p: u64) -> Vec<u64> {
    let n = f.len() - 1;
    debug_assert!(n >= 1 && f[n] == 1);
    let mut acc = vec![0u64; n];
    if n == 1 {
        // modulo x - r the result is r^e
        let r = submod(0, f[0], p);
        acc[0] = crate::arith::powmod(r, e, p);
        return acc;
    }
    acc[0] = 1;
    let mut prod = vec![0u64; 2 * n - 1];
    for i in (0..64 - e.leading_zeros()).rev() {
        prod.iter_mut().for_each(|c| *c = 0);
        for a in 0..n {
            if acc[a] == 0 {
                continue;
            }
            for b in 0..n {
                prod[a + b] = addmod(prod[a + b], mulmod(acc[a], acc[b], p), p);
            }
        }
        reduce_in_place(&mut prod, f, p);
        acc.copy_from_slice(&prod[..n]);
        if (e >> i) & 1 == 1 {
            // multiply by x
            let top = acc[n - 1];
            for k in (1..n).rev() {
                acc[k] = acc[k - 1];
            }
            acc[0] = 0;
            if top != 0 {
                for k in 0..n {
                    acc[k] = submod(acc[k], mulmod(top, f[k], p), p);
                }
            }
        }
    }
    acc
}

fn reduce_in_place(buf: &mut [u64], f: &[u64], p: u64) {
    let n = f.len() - 1;
    for k in (n..buf.len()).rev() {
        let t = buf[k];
        if t == 0 {
            continue;
        }
        buf[k] = 0;
        for j in 0..n {
            buf[k - n + j] = submod(buf[k - n + j], mulmod(t, f[j], p), p);
        }
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_int = IntPoly::new(self.coeffs.iter().map(|&c| c.into()).collect());
        write!(f, "{as_int} (mod {})", self.p)
    }
}

impl ModPoly {
    /// Symmetric lift of the coefficients to integers.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| c.into()).collect())
    }
}

/// `(p^d - 1) / 2`, the exponent used in equal-degree splitting.
pub(crate) fn half_field_order(p: u64, d: usize) -> BigUint {
    let q = num_traits::pow(BigUint::from(p), d);
    (q - BigUint::one()) >> 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(p: u64, c: &[u64]) -> ModPoly {
        ModPoly::new(p, c.to_vec())
    }

    #[test]
    fn arithmetic_mod_p() {
        let a = mp(7, &[1, 0, 1]);
        let b = mp(7, &[6, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert_eq!(r, mp(7, &[2]));
        assert!(mp(5, &[1, 0, 1]).gcd(&mp(5, &[3, 1])).deg() == 1);
    }

    #[test]
    fn x_power_matches_generic_pow() {
        let f = mp(101, &[3, 7, 0, 1]);
        for e in [0u64, 1, 2, 5, 101, 1000, 12345] {
            let slow = ModPoly::x(101).pow_mod(&BigUint::from(e), &f);
            let fast = ModPoly::new(101, x_pow_mod(f.coeffs(), e, 101));
            assert_eq!(slow, fast, "e = {e}");
        }
        let lin = mp(13, &[4, 1]);
        assert_eq!(x_pow_mod(lin.coeffs(), 13, 13), vec![9]);
    }

    #[test]
    fn squarefree_decomposition_mod_p() {
        // (x+1)^2 (x+2) over F_5, and x^5 + 1 = (x+1)^5 over F_5
        let f = mp(5, &[1, 1]).mul(&mp(5, &[1, 1])).mul(&mp(5, &[2, 1]));
        let mut d = f.squarefree_decomposition();
        d.sort_by_key(|(_, m)| *m);
        assert_eq!(d, vec![(mp(5, &[2, 1]), 1), (mp(5, &[1, 1]), 2)]);
        let g = mp(5, &[1, 0, 0, 0, 0, 1]);
        assert_eq!(g.squarefree_decomposition(), vec![(mp(5, &[1, 1]), 5)]);
    }
}
