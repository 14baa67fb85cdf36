//! Construction of a single polynomial `D` with `S(D) = S(P₁) ∩ … ∩ S(Pₙ)`.
//!
//! For irreducible `A`, `B` the polynomial `B` is factored over `K = ℚ(α)`,
//! `A(α) = 0`, as `E₁⋯E_t`; each factor contributes the minimal polynomial
//! `Dᵢ` of a primitive element `α + nᵢβᵢ`. Outside a finite set of primes,
//! read off from leading coefficients and from denominators of the algebraic
//! identities relating `α`, `βᵢ` and `α + nᵢβᵢ`, `S(∏ Dᵢ) = S(A) ∩ S(B)`.
//! Each exceptional prime is then tested directly and repaired by
//! [`fix_add`] or [`fix_remove`].

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{prime_divisors_of_all, primes_up_to};
use crate::factor::{factor_over_q, is_irreducible_q};
use crate::number_field::{
    factor_over_nf, min_poly_of_shift, primitive_shift, NFElem, NFPoly, NumberField, RelativeExtension,
};
use crate::poly::{discriminant, resultant_int};
use crate::sieve::{has_root_mod_prime, members_among};
use crate::{Error, IntPoly, Result};

/// Direction of a single-prime repair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixKind {
    Add,
    Remove,
}

impl FixKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FixKind::Add => "add",
            FixKind::Remove => "remove",
        }
    }
}

/// A repair changing membership of exactly one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixAction {
    pub prime: BigUint,
    pub action: FixKind,
    pub before: IntPoly,
    pub after: IntPoly,
}

/// One factor `E` of `B` over `ℚ(α)` with its shift and minimal polynomial.
#[derive(Clone, Debug)]
pub struct PairComponent {
    pub factor: NFPoly,
    pub shift: u64,
    pub min_poly: IntPoly,
}

/// Output of [`intersect_irreducible`].
#[derive(Clone, Debug)]
pub struct PairConstruction {
    pub a: IntPoly,
    pub b: IntPoly,
    /// `∏ Dᵢ`, before any repair.
    pub d_raw: IntPoly,
    pub components: Vec<PairComponent>,
    /// Integers (leading coefficients, denominators, discriminants) whose
    /// prime divisors form the exceptional set.
    pub aux: Vec<BigInt>,
}

/// Result of [`intersect`].
#[derive(Clone, Debug)]
pub struct IntersectionCertificate {
    pub inputs: Vec<IntPoly>,
    /// The construction before repairs; its degree is `∏ deg(Pᵢ)` when every
    /// input is nonconstant.
    pub base: IntPoly,
    pub result: IntPoly,
    pub exceptional_primes: Vec<BigUint>,
    pub fixes: Vec<FixAction>,
    pub verified_bound: u64,
}

/// `P₁⋯Pₙ`, whose prime divisors are `⋃ S(Pᵢ)`.
pub fn union_poly(ps: &[IntPoly]) -> Result<IntPoly> {
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    if ps.iter().any(IntPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    Ok(ps.iter().fold(IntPoly::one(), |acc, p| &acc * p))
}

/// `p·P`: adds `p` to `S(P)` and changes nothing else.
pub fn fix_add(poly: &IntPoly, p: impl Into<BigUint>) -> IntPoly {
    poly.scale(&BigInt::from(p.into()))
}

/// Removes `p` from `S(P)` and changes nothing else: `P(p^j·x)/p^k` where
/// `p^k ∥ P(0)` and `j ≤ k + 1` is the least exponent leaving every
/// non-constant coefficient divisible by `p`; `p·x + 1` when `P(0) = 0`.
pub fn fix_remove(poly: &IntPoly, p: impl Into<BigUint>) -> IntPoly {
    let pb = BigInt::from(p.into());
    let c0 = poly.coeff(0);
    if c0.is_zero() {
        return IntPoly::new(vec![BigInt::one(), pb]);
    }
    let valuation = |c: &BigInt| {
        let mut v = 0u32;
        let mut rest = c.clone();
        while !rest.is_zero() && (&rest % &pb).is_zero() {
            rest /= &pb;
            v += 1;
        }
        v
    };
    let k = valuation(&c0);
    let j = (1..=k + 1)
        .find(|&j| {
            poly.coeffs()
                .iter()
                .enumerate()
                .skip(1)
                .all(|(i, c)| c.is_zero() || valuation(c) + i as u32 * j > k)
        })
        .unwrap_or(k + 1);
    let pk = pb.pow(k);
    let step = pb.pow(j);
    let mut scale = BigInt::one();
    let coeffs = poly
        .coeffs()
        .iter()
        .map(|c| {
            let v = c * &scale / &pk;
            scale *= &step;
            v
        })
        .collect();
    IntPoly::new(coeffs)
}

/// The construction for two irreducible nonconstant polynomials.
pub fn intersect_irreducible(a: &IntPoly, b: &IntPoly) -> Result<PairConstruction> {
    for p in [a, b] {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        if !is_irreducible_q(p)? {
            return Err(Error::Reducible);
        }
    }
    let k = NumberField::new(a)?;
    let factors = factor_over_nf(b, &k)?;
    let mut components = Vec::with_capacity(factors.len());
    let mut aux = vec![a.lc(), b.lc()];
    for (e, _) in factors {
        let n = primitive_shift(&k, &e)?;
        let d = min_poly_of_shift(a, &e, n as i64)?;
        aux.extend(component_denominators(a, b, &e, n as i64, &d)?);
        components.push(PairComponent { factor: e, shift: n, min_poly: d });
    }
    aux.push(discriminant(&a.to_rat())?.numer().clone());
    aux.push(discriminant(&b.to_rat())?.numer().clone());
    let res = resultant_int(a, b);
    if !res.is_zero() {
        aux.push(res);
    }
    let d_raw = components.iter().fold(IntPoly::one(), |acc, c| &acc * &c.min_poly);
    Ok(PairConstruction { a: a.clone(), b: b.clone(), d_raw, components, aux })
}

/// Denominators of `E`, of `F` in `D(α + n·x) = E(x)·F(x)`, of the
/// expressions `A_*`, `B_*` of `α`, `β` in powers of `γ = α + n·β`, and of the
/// cofactors in `A(A_*(x)) = D(x)·F_A(x)`, `B(B_*(x)) = D(x)·F_B(x)`; plus
/// `lc(D)`.
fn component_denominators(a: &IntPoly, b: &IntPoly, e: &NFPoly, n: i64, d: &IntPoly) -> Result<Vec<BigInt>> {
    let k = e.field();
    let mut out = vec![d.lc(), e.denominator()];
    let lin = NFPoly::linear(NFElem::from_int(k, n), NFElem::generator(k));
    let (f, r) = NFPoly::from_int_poly(k, d).compose(&lin).div_rem(e)?;
    if !r.is_zero() {
        return Err(Error::Internal(format!("factor {e} does not divide the shifted minimal polynomial")));
    }
    out.push(f.denominator());

    let ext = RelativeExtension::new(e)?;
    let gamma = ext.shift_element(n);
    let no_expr = || Error::Internal("shift is not a primitive element".into());
    let a_star = ext.express_in_powers(&gamma, &ext.alpha()).ok_or_else(no_expr)?;
    let b_star = ext.express_in_powers(&gamma, &ext.y()).ok_or_else(no_expr)?;
    let d_rat = d.to_rat();
    for (poly, star) in [(a, &a_star), (b, &b_star)] {
        let (cofactor, rem) = poly.to_rat().compose(star).div_rem(&d_rat);
        if !rem.is_zero() {
            return Err(Error::Internal(format!("{d} does not divide {poly} composed with its expression")));
        }
        out.push(star.denominator_lcm());
        out.push(cofactor.denominator_lcm());
    }
    Ok(out)
}

/// Primes dividing any of the nonzero auxiliary integers, together with
/// those of the leading coefficients of the inputs and of `D_raw`.
pub fn exceptional_primes(a: &IntPoly, b: &IntPoly, d_raw: &IntPoly, aux: &[BigInt]) -> Result<Vec<BigUint>> {
    let mut all = aux.to_vec();
    all.extend([a.lc(), b.lc(), d_raw.lc()]);
    prime_divisors_of_all(&all)
}

/// Raw construction for two arbitrary nonzero polynomials: `D_raw` and
/// integers whose prime divisors contain every prime where `S(D_raw)` may
/// differ from `S(P) ∩ S(Q)`.
fn pair_raw(p: &IntPoly, q: &IntPoly) -> Result<(IntPoly, Vec<BigInt>)> {
    let fp = factor_over_q(p)?;
    let fq = factor_over_q(q)?;
    let mut aux: Vec<BigInt> = vec![fp.content.numer().clone(), fq.content.numer().clone()];
    // a constant input has the finite divisor set of its value
    for f in [&fp, &fq] {
        if f.factors.is_empty() {
            let c = f.content.numer().abs();
            return Ok((IntPoly::constant(c), aux));
        }
    }
    let pairs: Vec<(&IntPoly, &IntPoly, usize)> = fp
        .factors
        .iter()
        .flat_map(|(ai, ei)| fq.factors.iter().map(move |(bj, fj)| (ai, bj, ei * fj)))
        .collect();
    let built = pairs
        .par_iter()
        .map(|&(ai, bj, m)| intersect_irreducible(ai, bj).map(|c| (m, c)))
        .collect::<Result<Vec<_>>>()?;
    let mut d = IntPoly::one();
    for (m, c) in built {
        d = &d * &c.d_raw.pow(m);
        aux.push(c.d_raw.lc());
        aux.extend(c.aux);
    }
    Ok((d, aux))
}

fn in_all(inputs: &[IntPoly], p: &BigUint) -> bool {
    inputs.iter().all(|q| has_root_mod_prime(q, p))
}

/// Builds `D` with `S(D) = ⋂ S(Pᵢ)`, repairs every exceptional prime, and
/// checks the equality for all primes up to `verify_bound`.
pub fn intersect(ps: &[IntPoly], verify_bound: u64) -> Result<IntersectionCertificate> {
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    if ps.iter().any(IntPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let mut base = ps[0].clone();
    let mut aux = vec![base.content()];
    for q in &ps[1..] {
        let (d, more) = pair_raw(&base, q)?;
        base = d;
        aux.extend(more);
    }
    let exceptional = prime_divisors_of_all(&aux)?;
    let mut result = base.clone();
    let mut fixes = Vec::new();
    for p in &exceptional {
        let want = in_all(ps, p);
        let have = has_root_mod_prime(&result, p);
        let action = match (want, have) {
            (true, false) => FixKind::Add,
            (false, true) => FixKind::Remove,
            _ => continue,
        };
        let after = match action {
            FixKind::Add => fix_add(&result, p.clone()),
            FixKind::Remove => fix_remove(&result, p.clone()),
        };
        fixes.push(FixAction { prime: p.clone(), action, before: result.clone(), after: after.clone() });
        result = after;
    }
    verify(ps, &result, verify_bound)?;
    Ok(IntersectionCertificate {
        inputs: ps.to_vec(),
        base,
        result,
        exceptional_primes: exceptional,
        fixes,
        verified_bound: verify_bound,
    })
}

/// Checks `p ∈ S(D) ⟺ ∀i p ∈ S(Pᵢ)` for all primes `p ≤ bound`.
pub fn verify(ps: &[IntPoly], d: &IntPoly, bound: u64) -> Result<()> {
    let primes = primes_up_to(bound);
    let mut expected: BTreeSet<u64> = primes.iter().copied().collect();
    for q in ps {
        let members: BTreeSet<u64> = members_among(q, &primes).into_iter().collect();
        expected.retain(|p| members.contains(p));
    }
    let actual: BTreeSet<u64> = members_among(d, &primes).into_iter().collect();
    if let Some(&p) = expected.symmetric_difference(&actual).next() {
        let detail = if actual.contains(&p) {
            "p divides the result but not every input".to_string()
        } else {
            "p divides every input but not the result".to_string()
        };
        return Err(Error::VerificationFailed { prime: p, detail });
    }
    Ok(())
}
