//! Factorization of integer polynomials over `ℚ` and over prime fields.

mod finite_field;
mod hensel;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_prime, primes_up_to};
use crate::modp::ModPoly;
use crate::poly::squarefree_decomposition;
use crate::{Error, IntPoly, RatPoly, Rational, Result};

pub use finite_field::factor_mod_p;
pub(crate) use hensel::symmetric;

/// `content · ∏ factorᵢ^multᵢ`, with primitive irreducible factors of
/// positive leading coefficient in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: Rational,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> RatPoly {
        let prod = self
            .factors
            .iter()
            .fold(IntPoly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        prod.to_rat().scale(&self.content)
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// The distinct irreducible factors without multiplicity.
    pub fn distinct(&self) -> impl Iterator<Item = &IntPoly> {
        self.factors.iter().map(|(f, _)| f)
    }
}

/// Canonical order on primitive factors: degree, then coefficients from the
/// constant term up.
pub fn canonical_cmp(a: &IntPoly, b: &IntPoly) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Complete factorization over `ℚ`.
pub fn factor_over_q(p: &IntPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let prim = p.primitive_part();
    let content = Rational::from_integer(p.lc() / prim.lc());
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&prim)? {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    Ok(Factorization { content, factors })
}

/// Factorization of a rational polynomial; the content absorbs denominators.
pub fn factor_rat_over_q(p: &RatPoly) -> Result<Factorization> {
    let (c, prim) = p.content_primitive()?;
    let mut f = factor_over_q(&prim)?;
    f.content = c;
    Ok(f)
}

/// True when the primitive part of `P` is irreducible over `ℚ`; the integer
/// content is ignored.
pub fn is_irreducible_q(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(factor_over_q(p)?.is_irreducible())
}

/// Number of candidate primes compared before settling on one.
const PRIME_TRIALS: usize = 5;

/// Irreducible factors of a primitive squarefree polynomial with positive
/// leading coefficient (Zassenhaus).
fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    if f.deg() <= 1 {
        return vec![f.clone()];
    }
    // pull out x first, it is common and cheap
    if f.coeff(0).is_zero() {
        let rest = IntPoly::new(f.coeffs()[1..].to_vec());
        let mut out = vec![IntPoly::x()];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let (p, modular) = choose_prime(f);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let bound = factor_coefficient_bound(f);
    let mut modulus = BigInt::from(p);
    while modulus <= bound {
        modulus *= p;
    }
    let lifted = hensel::multifactor_lift(f, &modular, p, &modulus);
    recombine(f.clone(), lifted, &modulus)
}

/// Picks the good prime (odd, not dividing the leading coefficient, with a
/// squarefree reduction) giving the fewest modular factors among the first
/// few candidates.
fn choose_prime(f: &IntPoly) -> (u64, Vec<ModPoly>) {
    let mut best: Option<(u64, ModPoly, usize)> = None;
    let mut tried = 0;
    let mut limit = 1000u64;
    let mut start = 0usize;
    loop {
        let primes = primes_up_to(limit);
        for &p in &primes[start..] {
            if p == 2 {
                continue;
            }
            let fm = ModPoly::from_int_poly(f, p);
            if fm.deg() != f.deg() || !fm.is_squarefree() {
                continue;
            }
            let fm = fm.monic();
            let count = finite_field::count_factors(&fm);
            if best.as_ref().is_none_or(|b| count < b.2) {
                best = Some((p, fm, count));
            }
            tried += 1;
            if tried == PRIME_TRIALS || count == 1 {
                let (p, fm, _) = best.expect("a prime was recorded");
                let factors = finite_field::factor_modpoly(&fm).into_iter().map(|(g, _)| g).collect();
                return (p, factors);
            }
        }
        start = primes.len();
        limit *= 4;
        debug_assert!(is_prime(primes[start - 1]));
    }
}

/// `2·|lc|·2^n·⌈‖f‖₂⌉`: any factor of `f`, scaled to leading coefficient
/// `lc(f)`, has coefficients of absolute value below half of this.
fn factor_coefficient_bound(f: &IntPoly) -> BigInt {
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    let lc = f.lc().abs();
    (lc * norm) << (f.deg() + 1)
}

/// Exhaustive subset recombination of monic lifted factors modulo `modulus`.
fn recombine(mut f: IntPoly, mut factors: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= factors.len() {
        let mut hit = None;
        for subset in Combinations::new(factors.len(), size) {
            let lc = f.lc();
            let candidate = subset
                .iter()
                .fold(IntPoly::constant(lc), |acc, &i| hensel::reduce(&(&acc * &factors[i]), modulus));
            let g = symmetric(&candidate, modulus).primitive_part();
            if let Some(q) = f.div_exact(&g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                f = q.primitive_part();
                let mut i = 0;
                factors.retain(|_| {
                    i += 1;
                    !subset.contains(&(i - 1))
                });
            }
            None => size += 1,
        }
    }
    if !f.is_constant() {
        found.push(f.primitive_part());
    }
    found
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn examples_over_q() {
        let f = factor_over_q(&ip(&[-4, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(ip(&[-2, 0, 1]), 1), (ip(&[2, 0, 1]), 1)]);
        assert!(factor_over_q(&ip(&[9, 0, -2, 0, 1])).unwrap().is_irreducible());
        let f = factor_over_q(&ip(&[0, 0, 4, 0, 1])).unwrap();
        assert_eq!(f.content, Rational::one());
        assert_eq!(f.factors, vec![(ip(&[0, 1]), 2), (ip(&[4, 0, 1]), 1)]);
        assert_eq!(factor_over_q(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn content_and_sign() {
        let f = factor_over_q(&ip(&[6, -6])).unwrap();
        assert_eq!(f.content, Rational::from_integer((-6).into()));
        assert_eq!(f.factors, vec![(ip(&[-1, 1]), 1)]);
        assert_eq!(f.expand(), ip(&[6, -6]).to_rat());
        let c = factor_over_q(&ip(&[-5])).unwrap();
        assert!(c.factors.is_empty());
        assert_eq!(c.content, Rational::from_integer((-5).into()));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible_q(&ip(&[1, 1, 1])).unwrap());
        assert!(!is_irreducible_q(&ip(&[-1, 0, 1])).unwrap());
        assert!(is_irreducible_q(&ip(&[-1, -2, 1, 1])).unwrap());
        assert!(is_irreducible_q(&ip(&[4, 4])).unwrap());
        assert_eq!(is_irreducible_q(&ip(&[3])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn swinnerton_dyer_needs_recombination() {
        // minimal polynomial of √2 + √3 + √5 splits into linear and quadratic
        // factors modulo every prime
        let s = ip(&[576, 0, -960, 0, 352, 0, -40, 0, 1]);
        assert!(factor_over_q(&s).unwrap().is_irreducible());
        let prod = &s * &ip(&[1, 0, 1]);
        let f = factor_over_q(&prod).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), prod.to_rat());
    }

    #[test]
    fn cyclotomic_products() {
        // x^12 - 1 = Φ1 Φ2 Φ3 Φ4 Φ6 Φ12
        let f = factor_over_q(&ip(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        let degs: Vec<usize> = f.factors.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 4]);
        assert_eq!(f.factors[5].0, ip(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn non_monic_factors() {
        let prod = &(&ip(&[3, 2]) * &ip(&[-1, 0, 5])) * &ip(&[7, 1, 0, 4]);
        let f = factor_over_q(&prod).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(), prod.to_rat());
    }

    #[test]
    fn combinations_enumerate_binomially() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
