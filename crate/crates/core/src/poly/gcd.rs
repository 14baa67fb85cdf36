
use super::{content_primitive, IntPoly, RatPoly};
use crate::{Error, Result};

/// Monic greatest common divisor over `ℚ`.
pub fn poly_gcd(a: &RatPoly, b: &RatPoly) -> Result<RatPoly> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::BothZero),
        (true, false) => Ok(b.monic()),
        (false, true) => Ok(a.monic()),
        (false, false) => {
            let (_, pa) = content_primitive(a)?;
            let (_, pb) = content_primitive(b)?;
            Ok(primitive_gcd(&pa, &pb).to_rat().monic())
        }
    }
}

/// Gcd of two nonzero integer polynomials up to content, returned primitive
/// with positive leading coefficient (primitive remainder sequence).
pub(crate) fn primitive_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut u, mut v) = if a.deg() >= b.deg() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    while !v.is_zero() {
        let r = u.pseudo_rem(&v);
        u = v;
        v = r.primitive_part();
    }
    u.primitive_part()
}

/// Extended Euclid over `ℚ`: returns `(g, s, t)` with `s·a + t·b = g` and `g`
/// monic.
pub fn ext_gcd(a: &RatPoly, b: &RatPoly) -> Result<(RatPoly, RatPoly, RatPoly)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
    let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = r0.lc().recip();
    Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
}

pub fn is_squarefree(p: &IntPoly) -> bool {
    if p.is_constant() {
        return !p.is_zero();
    }
    primitive_gcd(p, &p.derivative()).is_constant()
}

/// Product of the distinct irreducible factors, primitive with positive
/// leading coefficient (1 for nonzero constants).
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(IntPoly::one());
    }
    let g = primitive_gcd(p, &p.derivative());
    let q = p.primitive_part().div_exact(&g).expect("gcd divides its argument");
    Ok(q.primitive_part())
}

/// Yun's squarefree decomposition of the primitive part: pairwise coprime
/// squarefree primitive `fᵢ` with `pp(P) = ∏ fᵢ^i`. Only nonconstant parts
/// are listed.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let f = p.to_rat().monic();
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df)?;
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = if d.is_zero() { b.clone() } else { poly_gcd(&b, &d)? };
        if !a.is_constant() {
            let (_, prim) = content_primitive(&a)?;
            out.push((prim, i));
        }
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}
