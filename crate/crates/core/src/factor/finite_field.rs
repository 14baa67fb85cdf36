//! Factorization over prime fields: squarefree decomposition, distinct-degree
//! factorization and Cantor–Zassenhaus equal-degree splitting.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::is_prime;
use crate::modp::{half_field_order, ModPoly};
use crate::{Error, IntPoly, Result};

/// Monic irreducible factors of `P mod p` with multiplicities, sorted by
/// degree and then coefficients. The leading coefficient of `P mod p` is
/// dropped.
pub fn factor_mod_p(poly: &IntPoly, p: u64) -> Result<Vec<(ModPoly, usize)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let f = ModPoly::from_int_poly(poly, p);
    if f.is_zero() {
        return Err(Error::ZeroModP(p));
    }
    Ok(factor_modpoly(&f))
}

pub(crate) fn factor_modpoly(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let mut rng = seeded_rng(f);
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for g in factor_squarefree(&part, &mut rng) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| canonical_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    out
}

fn canonical_order(a: &ModPoly, b: &ModPoly) -> std::cmp::Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

fn seeded_rng(f: &ModPoly) -> ChaCha8Rng {
    let mut h = DefaultHasher::new();
    f.modulus().hash(&mut h);
    f.coeffs().hash(&mut h);
    ChaCha8Rng::seed_from_u64(h.finish())
}

/// Irreducible factors of a monic squarefree polynomial.
pub(crate) fn factor_squarefree(f: &ModPoly, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        equal_degree(&g, d, rng, &mut out);
    }
    out
}

/// Distinct-degree factorization: pairs `(g_d, d)` where `g_d` is the product
/// of all irreducible factors of degree `d`.
pub(crate) fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.modulus();
    let pe = BigUint::from(p);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = ModPoly::x(p);
    let mut h = x.clone();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pe, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if !rest.is_constant() {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Number of irreducible factors of a monic squarefree polynomial.
pub(crate) fn count_factors(f: &ModPoly) -> usize {
    distinct_degree(f).iter().map(|(g, d)| g.deg() / d).sum()
}

fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    if f.deg() == d {
        out.push(f.clone());
        return;
    }
    let p = f.modulus();
    let n = f.deg();
    loop {
        let a = ModPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut acc = a.clone();
            let mut cur = a.clone();
            for _ in 1..d {
                cur = cur.mul_mod(&cur, f);
                acc = acc.add(&cur);
            }
            acc
        } else {
            let g = a.gcd(f);
            if !g.is_one() {
                split_and_recurse(f, &g, d, rng, out);
                return;
            }
            a.pow_mod(&half_field_order(p, d), f).sub(&ModPoly::one(p))
        };
        let g = b.gcd(f);
        if !g.is_one() && g.deg() < n {
            split_and_recurse(f, &g, d, rng, out);
            return;
        }
    }
}

fn split_and_recurse(f: &ModPoly, g: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let h = f.div_rem(g).0;
    equal_degree(g, d, rng, out);
    equal_degree(&h.monic(), d, rng, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn product(p: u64, fs: &[(ModPoly, usize)]) -> ModPoly {
        fs.iter().fold(ModPoly::one(p), |acc, (g, m)| (0..*m).fold(acc, |a, _| a.mul(g)))
    }

    #[test]
    fn small_examples() {
        let f = factor_mod_p(&ip(&[1, 0, 1]), 5).unwrap();
        assert_eq!(f, vec![(ModPoly::new(5, vec![2, 1]), 1), (ModPoly::new(5, vec![3, 1]), 1)]);
        let f = factor_mod_p(&ip(&[1, 0, 1]), 7).unwrap();
        assert_eq!(f, vec![(ModPoly::new(7, vec![1, 0, 1]), 1)]);
        let f = factor_mod_p(&ip(&[1, 0, 1]), 2).unwrap();
        assert_eq!(f, vec![(ModPoly::new(2, vec![1, 1]), 2)]);
        assert_eq!(factor_mod_p(&ip(&[7, 14]), 7), Err(Error::ZeroModP(7)));
        assert_eq!(factor_mod_p(&ip(&[1, 1]), 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn products_reassemble() {
        let polys = [
            ip(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
            ip(&[3, 1, 4, 1, 5, 9, 2, 6]),
            ip(&[1, 1, 0, 1, 0, 0, 1, 1]),
        ];
        for f in &polys {
            for p in [2u64, 3, 13, 101, 65537, 1_000_000_007] {
                let fm = ModPoly::from_int_poly(f, p);
                let fs = factor_mod_p(f, p).unwrap();
                assert_eq!(product(p, &fs), fm.monic(), "{f} mod {p}");
                for (g, _) in &fs {
                    assert_eq!(count_factors(g), 1, "{g} should be irreducible");
                }
            }
        }
    }

    #[test]
    fn irreducibility_by_brute_force_over_small_fields() {
        // every monic cubic over F_3 without roots is irreducible
        for a in 0..3u64 {
            for b in 0..3u64 {
                for c in 0..3u64 {
                    let f = ModPoly::new(3, vec![c, b, a, 1]);
                    let rootless = (0..3).all(|x| f.eval(x) != 0);
                    let fs = factor_modpoly(&f);
                    assert_eq!(rootless, fs.len() == 1 && fs[0].1 == 1, "{f}");
                }
            }
        }
    }
}
