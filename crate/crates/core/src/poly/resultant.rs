use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{content_primitive, IntPoly, RatPoly, Rational};
use crate::{Error, Result};

/// Resultant of two integer polynomials by the subresultant remainder
/// sequence. Zero if either argument is zero.
pub fn resultant_int(a: &IntPoly, b: &IntPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg().is_odd() && b.deg().is_odd() {
            negate = !negate;
        }
    }
    if b.deg() == 0 {
        let r = num_traits::pow(b.lc(), a.deg());
        return if negate { -r } else { r };
    }
    let ca = a.content();
    let cb = b.content();
    a = IntPoly::new(a.coeffs().iter().map(|c| c / &ca).collect());
    b = IntPoly::new(b.coeffs().iter().map(|c| c / &cb).collect());
    let t = num_traits::pow(ca, b.deg()) * num_traits::pow(cb, a.deg());

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg().is_odd() && b.deg().is_odd() {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = IntPoly::new(r.coeffs().iter().map(|c| c / &divisor).collect());
        g = a.lc();
        if delta > 0 {
            h = num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1);
        }
        if b.deg() == 0 {
            let da = a.deg();
            let h_final = num_traits::pow(b.lc(), da) / num_traits::pow(h, da - 1);
            let r = t * h_final;
            return if negate { -r } else { r };
        }
    }
}

/// `Res(A, B) = lc(A)^deg(B) · ∏_{A(α)=0} B(α)`.
pub fn resultant(a: &RatPoly, b: &RatPoly) -> Result<Rational> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (ca, pa) = content_primitive(a)?;
    let (cb, pb) = content_primitive(b)?;
    let scale = num_traits::pow(ca, b.deg()) * num_traits::pow(cb, a.deg());
    Ok(scale * Rational::from_integer(resultant_int(&pa, &pb)))
}

/// `disc(P) = (-1)^(d(d-1)/2) · Res(P, P') / lc(P)`.
pub fn discriminant(p: &RatPoly) -> Result<Rational> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = p.deg();
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let r = resultant(p, &p.derivative())? / p.lc();
    Ok(if (d * (d - 1) / 2).is_odd() { -r } else { r })
}

/// Newton interpolation through points with distinct abscissae.
pub fn interpolate(points: &[(Rational, Rational)]) -> RatPoly {
    let n = points.len();
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            dd[i] = num / den;
        }
    }
    let mut acc = RatPoly::zero();
    for i in (0..n).rev() {
        let lin = RatPoly::new(vec![-points[i].0.clone(), Rational::one()]);
        acc = &(&acc * &lin) + &RatPoly::constant(dd[i].clone());
    }
    acc
}

/// Integer polynomial of degree `deg(A)·deg(B)` whose roots, with
/// multiplicity, are `α + n·β` over all roots `α` of `A` and `β` of `B`.
/// Computed as `Res_y(B(y), A(x − n·y))` by evaluation at integer points and
/// interpolation; returned primitive with positive leading coefficient.
pub fn root_sum_resultant(a: &IntPoly, b: &IntPoly, n: i64) -> Result<IntPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.is_constant() || b.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if n == 0 {
        return Err(Error::Internal("root_sum_resultant needs a nonzero multiplier".into()));
    }
    let total = a.deg() * b.deg();
    let points: Vec<(Rational, Rational)> = (0..=total as i64)
        .into_par_iter()
        .map(|x0| {
            let lin = IntPoly::from_i64s(&[x0, -n]);
            let shifted = a.compose(&lin);
            let v = resultant_int(b, &shifted);
            (Rational::from_integer(x0.into()), Rational::from_integer(v))
        })
        .collect();
    let poly = interpolate(&points);
    debug_assert_eq!(poly.deg(), total);
    let (_, prim) = content_primitive(&poly)?;
    Ok(prim)
}
