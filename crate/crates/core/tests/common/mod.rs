//! Shared corpus and independent oracles for the integration tests.
#![allow(dead_code)]

use divisorforge::factor::is_irreducible_q;
use divisorforge::IntPoly;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ip(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Hand-picked polynomials, coefficients lowest degree first.
pub const CORPUS: &[&[i64]] = &[
    &[1, 1],
    &[-5, 3],
    &[0, 1],
    &[-2, 0, 1],
    &[1, 0, 1],
    &[2, 0, 1],
    &[-3, 0, 1],
    &[1, 1, 1],
    &[-1, 1, 1],
    &[3, 0, 5],
    &[7, -6, 2],
    &[-8, 0, 1],
    &[-2, 0, 0, 1],
    &[-1, -2, 1, 1],
    &[1, -1, 0, 1],
    &[-1, 0, 0, 1],
    &[3, 1, 0, 2],
    &[9, 0, -2, 0, 1],
    &[1, 0, -1, 0, 1],
    &[1, 1, 1, 1, 1],
    &[-2, 0, 0, 0, 1],
    &[1, 0, 0, 0, 1],
    &[1, 0, -10, 0, 1],
    &[-1, 1, 0, 0, 0, 1],
    &[-2, 0, 0, 0, 0, 1],
    &[1, -1, 1, -1, 1, -1, 1],
    &[-1, 0, 0, 0, 0, 0, 0, 1],
    &[-1, 0, 1, 0, 0, 1],
    &[6, -11, 6, -1],
    &[1, 2, 1],
    &[4, 0, 0, 0, 1],
    &[-1, 1, 1, 1, 0, 1],
    &[12, 0, 0, 7],
    &[30, 0, 0, 0, 0, 0, 1],
];

pub fn corpus() -> Vec<IntPoly> {
    CORPUS.iter().map(|c| ip(c)).collect()
}

/// Trial division.
pub fn naive_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn naive_primes(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&n| naive_is_prime(n)).collect()
}

/// `P(x) mod p` by Horner over `i128`, for small coefficients.
pub fn naive_eval_mod(coeffs: &[i64], x: u64, p: u64) -> u64 {
    let p = p as i128;
    coeffs.iter().rev().fold(0i128, |acc, &c| (acc * x as i128 + c as i128).rem_euclid(p)) as u64
}

/// Brute-force membership in `S(P)`: try every residue.
pub fn brute_has_root(coeffs: &[i64], p: u64) -> bool {
    (0..p).any(|x| naive_eval_mod(coeffs, x, p) == 0)
}

pub fn small_coeffs(poly: &IntPoly) -> Vec<i64> {
    poly.coeffs().iter().map(|c| i64::try_from(c).expect("small coefficient")).collect()
}

/// A random polynomial of exactly the given degree with coefficients in
/// `[-bound, bound]`.
pub fn random_poly(rng: &mut impl Rng, degree: usize, bound: i64) -> IntPoly {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[degree] == 0 {
        c[degree] = rng.gen_range(-bound..=bound);
    }
    ip(&c)
}

/// A random primitive irreducible polynomial with positive leading
/// coefficient and degree in `1..=max_degree`.
pub fn random_irreducible(rng: &mut impl Rng, max_degree: usize, bound: i64) -> IntPoly {
    loop {
        let d = rng.gen_range(1..=max_degree);
        let p = random_poly(rng, d, bound).primitive_part().with_positive_lc();
        if is_irreducible_q(&p).unwrap() {
            return p;
        }
    }
}
