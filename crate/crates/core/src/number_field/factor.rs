//! Norms, Trager factorization over `ℚ(α)`, primitive-element shifts and
//! the relative extension `ℚ(α)[y]/E(y)`.

use std::sync::Arc;

#[cfg(test)]
use num_traits::One;
use num_traits::Zero;
use rayon::prelude::*;

use super::{NFElem, NFPoly, NumberField};
use crate::factor::factor_over_q;
#[cfg(test)]
use crate::linalg::first_dependency;
use crate::linalg::solve_columns;
use crate::poly::{interpolate, is_squarefree, resultant, root_sum_resultant, squarefree_decomposition, squarefree_part};
use crate::{Error, IntPoly, RatPoly, Rational, Result};

/// `Norm_{K/ℚ}(E) = ∏_σ σ(E)`, a rational polynomial of degree
/// `[K:ℚ]·deg(E)`. Computed by evaluating `x` at integer points, taking
/// `Res_t(m(t), E(t, x₀))` and interpolating.
pub fn nf_poly_norm(e: &NFPoly) -> Result<RatPoly> {
    if e.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = e.field().clone();
    let m = field.minpoly().clone();
    let total = field.degree() * e.deg();
    let alpha_polys = e.alpha_polys();
    let points: Vec<(Rational, Rational)> = (0..=total as i64)
        .into_par_iter()
        .map(|x0| {
            let xr = Rational::from_integer(x0.into());
            let mut g = RatPoly::zero();
            for c in alpha_polys.iter().rev() {
                g = &g.scale(&xr) + c;
            }
            let value = if g.is_zero() { Rational::zero() } else { resultant(&m, &g).expect("nonzero operands") };
            (xr, value)
        })
        .collect();
    Ok(interpolate(&points))
}

/// `Norm_{K/ℚ}(nᵉ·E((x − α)/n))`: the characteristic polynomial over `ℚ` of
/// `α + n·β`, where `β` is a root of `E` of degree `e`.
pub fn shifted_norm(e: &NFPoly, n: i64) -> Result<RatPoly> {
    let field = e.field();
    let inv_n = Rational::new(1.into(), n.into());
    let alpha = NFElem::generator(field);
    let lin = NFPoly::linear(NFElem::from_rational(field, inv_n.clone()), (-&alpha).scale(&inv_n));
    let scale = NFElem::from_rational(field, num_traits::pow(Rational::from_integer(n.into()), e.deg()));
    nf_poly_norm(&e.compose(&lin).scale(&scale))
}

/// Least `n ≥ 1` such that `α + n·β` generates `ℚ(α, β)`, where `β` is a
/// root of the irreducible `E` over `K = ℚ(α)`.
pub fn primitive_shift(k: &Arc<NumberField>, e: &NFPoly) -> Result<u64> {
    if e.field() != k {
        return Err(Error::FieldMismatch);
    }
    if e.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let total = k.degree() * e.deg();
    // at most total·(total−1)/2 values of n are bad
    let limit = (total * total) as i64 + 2;
    for n in 1..=limit {
        let chi = shifted_norm(e, n)?;
        let (_, prim) = chi.content_primitive()?;
        if is_squarefree(&prim) {
            return Ok(n as u64);
        }
    }
    Err(Error::NotSquarefree)
}

/// The primitive integer minimal polynomial of `α + n·β` over `ℚ`, where
/// `α` is a root of `A` (the defining polynomial of `E`'s field) and `β` a
/// root of `E`. Fails with [`Error::NotPrimitive`] when its degree is not
/// `deg(A)·deg(E)`.
pub fn min_poly_of_shift(a: &IntPoly, e: &NFPoly, n: i64) -> Result<IntPoly> {
    let k = e.field().clone();
    if a.primitive_part() != *k.int_minpoly() {
        return Err(Error::FieldMismatch);
    }
    if e.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if n == 0 {
        return Err(Error::NotPrimitive(0));
    }
    let target = k.degree() * e.deg();
    let (_, norm) = nf_poly_norm(e)?.content_primitive()?;
    let b_beta = squarefree_part(&norm)?;
    let candidates = root_sum_resultant(a, &b_beta, n)?;
    let ext = RelativeExtension::new(e)?;
    let gamma = ext.shift_element(n);
    for (f, _) in factor_over_q(&candidates)?.factors {
        if ext.eval_rat(&f.to_rat(), &gamma).is_zero() {
            if f.deg() != target {
                return Err(Error::NotPrimitive(n));
            }
            return Ok(f);
        }
    }
    Err(Error::Internal("no factor vanishes at the shifted element".into()))
}

/// Monic irreducible factors of `B` over `K` with multiplicities (Trager's
/// norm method).
pub fn factor_over_nf(b: &IntPoly, k: &Arc<NumberField>) -> Result<Vec<(NFPoly, usize)>> {
    if b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if b.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut out = Vec::new();
    if k.degree() == 1 {
        for (f, m) in factor_over_q(b)?.factors {
            out.push((NFPoly::from_int_poly(k, &f).monic(), m));
        }
        return Ok(out);
    }
    for (part, mult) in squarefree_decomposition(b)? {
        for e in factor_squarefree_over_nf(&part, k)? {
            out.push((e, mult));
        }
    }
    Ok(out)
}

fn factor_squarefree_over_nf(b: &IntPoly, k: &Arc<NumberField>) -> Result<Vec<NFPoly>> {
    if b.deg() == 1 {
        return Ok(vec![NFPoly::from_int_poly(k, b).monic()]);
    }
    let (s, norms) = squarefree_norm_factors(b, k)?;
    if norms.len() == 1 {
        return Ok(vec![NFPoly::from_int_poly(k, b).monic()]);
    }
    norms.iter().map(|nk| lift_norm_factor(b, k, s, nk)).collect()
}

/// Trager's norm step for a squarefree `b` of degree at least 2 over a field
/// of degree at least 2: the least shift `s ≥ 1` making
/// `N(x) = Norm(b(x − s·α))` squarefree, with the irreducible factors of `N`
/// over `ℚ`. Each factor `N_k` matches one irreducible factor of `b` over `K`
/// of degree `deg N_k / [K:ℚ]`.
pub(crate) fn squarefree_norm_factors(b: &IntPoly, k: &Arc<NumberField>) -> Result<(i64, Vec<IntPoly>)> {
    // s = 0 gives the norm b^d, never squarefree once d ≥ 2
    for s in 1i64.. {
        let norm = root_sum_resultant(b, k.int_minpoly(), s)?;
        if is_squarefree(&norm) {
            let factors = factor_over_q(&norm)?.factors.into_iter().map(|(f, _)| f).collect();
            return Ok((s, factors));
        }
    }
    unreachable!("shift search is unbounded")
}

/// The monic factor `gcd(b(x − sα), N_k)(x + sα)` of `b` over `K`.
pub(crate) fn lift_norm_factor(b: &IntPoly, k: &Arc<NumberField>, s: i64, nk: &IntPoly) -> Result<NFPoly> {
    let s_alpha = NFElem::generator(k).scale(&Rational::from_integer(s.into()));
    let shifted = NFPoly::from_int_poly(k, b).compose(&NFPoly::linear(NFElem::one(k), -&s_alpha));
    let g = shifted.gcd(&NFPoly::from_int_poly(k, nk))?;
    Ok(g.compose(&NFPoly::linear(NFElem::one(k), s_alpha)).monic())
}

/// `L = K[y]/E(y)` for an irreducible monic `E` over `K = ℚ(α)`. Elements
/// are [`NFPoly`]s in `y` of degree below `deg E`.
pub(crate) struct RelativeExtension {
    modulus: NFPoly,
}

impl RelativeExtension {
    pub(crate) fn new(e: &NFPoly) -> Result<Self> {
        if e.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        Ok(RelativeExtension { modulus: e.monic() })
    }

    pub(crate) fn field(&self) -> &Arc<NumberField> {
        self.modulus.field()
    }

    /// `[L : ℚ]`.
    pub(crate) fn absolute_degree(&self) -> usize {
        self.field().degree() * self.modulus.deg()
    }

    pub(crate) fn mul(&self, a: &NFPoly, b: &NFPoly) -> NFPoly {
        a.mul(b).rem(&self.modulus).expect("nonzero modulus")
    }

    /// `α + n·y`.
    pub(crate) fn shift_element(&self, n: i64) -> NFPoly {
        let k = self.field();
        NFPoly::linear(NFElem::from_int(k, n), NFElem::generator(k))
            .rem(&self.modulus)
            .expect("nonzero modulus")
    }

    pub(crate) fn alpha(&self) -> NFPoly {
        NFPoly::constant(NFElem::generator(self.field()))
    }

    pub(crate) fn y(&self) -> NFPoly {
        NFPoly::x(self.field()).rem(&self.modulus).expect("nonzero modulus")
    }

    /// Value of a rational polynomial at an element of `L`.
    pub(crate) fn eval_rat(&self, f: &RatPoly, at: &NFPoly) -> NFPoly {
        let k = self.field();
        let mut acc = NFPoly::zero(k);
        for c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, at).add(&NFPoly::constant(NFElem::from_rational(k, c.clone())));
        }
        acc
    }

    /// Coordinates over `ℚ` in the basis `αⁱ·yʲ`, index `j·d + i`.
    pub(crate) fn flatten(&self, a: &NFPoly) -> Vec<Rational> {
        let d = self.field().degree();
        let e = self.modulus.deg();
        let mut out = vec![Rational::zero(); d * e];
        for (j, c) in a.coeffs().iter().enumerate() {
            for (i, q) in c.coords().iter().enumerate() {
                out[j * d + i] = q.clone();
            }
        }
        out
    }

    fn powers(&self, gamma: &NFPoly, count: usize) -> Vec<Vec<Rational>> {
        let mut cur = NFPoly::one(self.field());
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(self.flatten(&cur));
            cur = self.mul(&cur, gamma);
        }
        out
    }

    /// Minimal polynomial of `γ` over `ℚ` by linear algebra on its powers.
    #[cfg(test)]
    pub(crate) fn min_poly(&self, gamma: &NFPoly) -> RatPoly {
        let powers = self.powers(gamma, self.absolute_degree() + 1);
        let (k, c) = first_dependency(&powers).expect("powers beyond the degree are dependent");
        let mut coeffs: Vec<Rational> = c.into_iter().map(|v| -v).collect();
        coeffs.push(Rational::one());
        debug_assert_eq!(coeffs.len(), k + 1);
        RatPoly::new(coeffs)
    }

    /// `P ∈ ℚ[x]` of degree below `[L:ℚ]` with `P(γ) = target`, when `γ`
    /// generates `L` over `ℚ`.
    pub(crate) fn express_in_powers(&self, gamma: &NFPoly, target: &NFPoly) -> Option<RatPoly> {
        let powers = self.powers(gamma, self.absolute_degree());
        solve_columns(&powers, &self.flatten(target)).map(RatPoly::new)
    }
}
