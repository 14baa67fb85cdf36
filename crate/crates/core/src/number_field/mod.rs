//! Arithmetic in simple number fields `ℚ(α)`, reduction maps
//! `ℤᵖ(α) → 𝔽_p`, polynomials over `ℚ(α)` and their factorization.

mod factor;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{bigint_mod, invmod, mulmod};
use crate::factor::is_irreducible_q;
use crate::poly::ext_gcd;
use crate::{Error, IntPoly, RatPoly, Rational, Result};

pub use factor::{factor_over_nf, min_poly_of_shift, nf_poly_norm, primitive_shift, shifted_norm};
pub use poly::NFPoly;
pub(crate) use factor::{lift_norm_factor, squarefree_norm_factors, RelativeExtension};

/// `ℚ(α)` given by the minimal polynomial of `α`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    minpoly: RatPoly,
    int_minpoly: IntPoly,
}

impl NumberField {
    /// Field generated by a root of an irreducible integer polynomial.
    pub fn new(p: &IntPoly) -> Result<Arc<NumberField>> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        if !is_irreducible_q(p)? {
            return Err(Error::Reducible);
        }
        Ok(Self::new_unchecked(p))
    }

    pub fn from_rat(p: &RatPoly) -> Result<Arc<NumberField>> {
        let (_, prim) = p.content_primitive()?;
        Self::new(&prim)
    }

    /// `ℚ` itself, as the field of the root of `x`.
    pub fn rationals() -> Arc<NumberField> {
        Self::new_unchecked(&IntPoly::x())
    }

    pub(crate) fn new_unchecked(p: &IntPoly) -> Arc<NumberField> {
        let int_minpoly = p.primitive_part();
        Arc::new(NumberField { minpoly: int_minpoly.to_rat().monic(), int_minpoly })
    }

    /// Monic minimal polynomial over `ℚ`.
    pub fn minpoly(&self) -> &RatPoly {
        &self.minpoly
    }

    /// Primitive integer form of the minimal polynomial.
    pub fn int_minpoly(&self) -> &IntPoly {
        &self.int_minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[a]/({})", self.int_minpoly)
    }
}

fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Element `Σ coords[i]·αⁱ` of a number field.
#[derive(Clone, Debug)]
pub struct NFElem {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl PartialEq for NFElem {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && same_field(&self.field, &other.field)
    }
}

impl Eq for NFElem {}

impl NFElem {
    /// Element from power-basis coordinates; shorter vectors are padded.
    pub fn new(field: &Arc<NumberField>, coords: Vec<Rational>) -> Result<Self> {
        let d = field.degree();
        if coords.len() > d {
            return Err(Error::Internal(format!("{} coordinates for a degree {d} field", coords.len())));
        }
        Ok(Self::from_poly(field, &RatPoly::new(coords)))
    }

    /// The class of a rational polynomial in `α`, reduced by the minimal
    /// polynomial.
    pub fn from_poly(field: &Arc<NumberField>, p: &RatPoly) -> Self {
        let r = p.rem(&field.minpoly);
        let mut coords = r.into_coeffs();
        coords.resize(field.degree(), Rational::zero());
        NFElem { field: field.clone(), coords }
    }

    pub fn from_rational(field: &Arc<NumberField>, r: Rational) -> Self {
        Self::from_poly(field, &RatPoly::constant(r))
    }

    pub fn from_int(field: &Arc<NumberField>, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(n.into()))
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        NFElem { field: field.clone(), coords: vec![Rational::zero(); field.degree()] }
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_int(field, 1)
    }

    /// The generator `α`.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, &RatPoly::x())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The element as a rational number, when it lies in `ℚ`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    /// Lcm of the coordinate denominators.
    pub fn denominator(&self) -> BigInt {
        self.coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        NFElem { field: self.field.clone(), coords: self.coords.iter().map(|c| c * r).collect() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = ext_gcd(&self.to_poly(), &self.field.minpoly)?;
        debug_assert!(g.is_one());
        Ok(Self::from_poly(&self.field, &s))
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        self.check(other).expect("operands from different number fields");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect();
        NFElem { field: self.field.clone(), coords }
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.to_poly().to_string().replace('x', "a");
        f.write_str(&text)
    }
}

impl Add for &NFElem {
    type Output = NFElem;
    fn add(self, rhs: &NFElem) -> NFElem {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &NFElem {
    type Output = NFElem;
    fn sub(self, rhs: &NFElem) -> NFElem {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &NFElem {
    type Output = NFElem;
    fn mul(self, rhs: &NFElem) -> NFElem {
        nf_mul(self, rhs).expect("operands from different number fields")
    }
}

impl Neg for &NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        NFElem { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

/// Product in `ℚ(α)`.
pub fn nf_mul(x: &NFElem, y: &NFElem) -> Result<NFElem> {
    x.check(y)?;
    Ok(NFElem::from_poly(&x.field, &(&x.to_poly() * &y.to_poly())))
}

/// Multiplicative inverse in `ℚ(α)`.
pub fn nf_inv(x: &NFElem) -> Result<NFElem> {
    x.inv()
}

/// True when no coordinate denominator is divisible by `p`, i.e. `x ∈ ℤᵖ(α)`.
pub fn denominator_ok(x: &NFElem, p: u64) -> bool {
    let pb = BigInt::from(p);
    x.coords.iter().all(|c| !(c.denom() % &pb).is_zero())
}

/// Residue of a rational with denominator prime to `p`.
pub fn rational_mod_p(r: &Rational, p: u64) -> Result<u64> {
    let den = bigint_mod(r.denom(), p);
    let inv = invmod(den, p).ok_or(Error::DenominatorDivisibleBy(p))?;
    Ok(mulmod(bigint_mod(r.numer(), p), inv, p))
}

/// The reduction `φ : ℤᵖ(α) → 𝔽_p` with `φ(α) = a`, where `a` is a root of
/// the minimal polynomial modulo `p` and `p` does not divide its leading
/// coefficient.
pub fn reduce_mod_p(x: &NFElem, a: i64, p: u64) -> Result<u64> {
    let lc = bigint_mod(&x.field.int_minpoly.lc(), p);
    if lc == 0 {
        return Err(Error::LeadingCoefficientDivisibleBy(p));
    }
    let a = a.rem_euclid(p as i64) as u64;
    if x.field.int_minpoly.eval_mod(a, p) != 0 {
        return Err(Error::NotARootModP { a, p });
    }
    let mut acc = 0u64;
    for c in x.coords.iter().rev() {
        let r = rational_mod_p(c, p)?;
        acc = crate::arith::addmod(mulmod(acc, a, p), r, p);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn sqrt2() -> Arc<NumberField> {
        NumberField::new(&IntPoly::from_i64s(&[-2, 0, 1])).unwrap()
    }

    fn el(k: &Arc<NumberField>, c: &[(i64, i64)]) -> NFElem {
        NFElem::new(k, c.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let k = sqrt2();
        assert_eq!(nf_mul(&el(&k, &[(1, 1), (1, 1)]), &el(&k, &[(-1, 1), (1, 1)])).unwrap(), el(&k, &[(1, 1)]));
        let i = NumberField::new(&IntPoly::from_i64s(&[1, 0, 1])).unwrap();
        let a = NFElem::generator(&i);
        assert_eq!(&a * &a, NFElem::from_int(&i, -1));
        assert_eq!(nf_mul(&a, &NFElem::generator(&k)), Err(Error::FieldMismatch));
    }

    #[test]
    fn inverse_examples() {
        let k = sqrt2();
        assert_eq!(nf_inv(&el(&k, &[(1, 1), (1, 1)])).unwrap(), el(&k, &[(-1, 1), (1, 1)]));
        assert_eq!(nf_inv(&el(&k, &[(0, 1), (1, 1)])).unwrap(), el(&k, &[(0, 1), (1, 2)]));
        assert!(nf_inv(&NFElem::one(&k)).unwrap().is_one());
        assert_eq!(nf_inv(&NFElem::zero(&k)), Err(Error::DivisionByZero));
    }

    #[test]
    fn denominators_and_reduction() {
        let k = sqrt2();
        assert!(denominator_ok(&el(&k, &[(1, 2), (3, 1)]), 7));
        assert!(!denominator_ok(&el(&k, &[(1, 7)]), 7));
        assert!(!denominator_ok(&el(&k, &[(5, 1), (-2, 49)]), 7));
        assert_eq!(reduce_mod_p(&el(&k, &[(1, 1), (1, 1)]), 3, 7).unwrap(), 4);
        assert_eq!(reduce_mod_p(&el(&k, &[(0, 1), (1, 2)]), 3, 7).unwrap(), 5);
        assert_eq!(reduce_mod_p(&el(&k, &[(0, 1), (1, 7)]), 3, 7), Err(Error::DenominatorDivisibleBy(7)));
        assert_eq!(reduce_mod_p(&el(&k, &[(1, 1)]), 2, 7), Err(Error::NotARootModP { a: 2, p: 7 }));
    }

    #[test]
    fn construction_rejects_bad_minpolys() {
        assert_eq!(NumberField::new(&IntPoly::from_i64s(&[-1, 0, 1])), Err(Error::Reducible));
        assert_eq!(NumberField::new(&IntPoly::from_i64s(&[5])), Err(Error::ConstantPolynomial));
        let k = NumberField::new(&IntPoly::from_i64s(&[1, 0, 2])).unwrap();
        assert_eq!(k.minpoly(), &RatPoly::from_ratios(&[(1, 2), (0, 1), (1, 1)]));
    }
}
