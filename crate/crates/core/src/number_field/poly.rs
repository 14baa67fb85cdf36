use std::fmt;
use std::sync::Arc;

use super::{NFElem, NumberField};
use crate::{Error, IntPoly, RatPoly, Rational, Result};

/// Polynomial in `x` with coefficients in a number field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NFPoly {
    field: Arc<NumberField>,
    coeffs: Vec<NFElem>,
}

impl NFPoly {
    pub fn new(field: &Arc<NumberField>, mut coeffs: Vec<NFElem>) -> Self {
        while coeffs.last().is_some_and(NFElem::is_zero) {
            coeffs.pop();
        }
        NFPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        NFPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::constant(NFElem::one(field))
    }

    pub fn x(field: &Arc<NumberField>) -> Self {
        Self::new(field, vec![NFElem::zero(field), NFElem::one(field)])
    }

    pub fn constant(c: NFElem) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![c])
    }

    /// `a·x + b`.
    pub fn linear(a: NFElem, b: NFElem) -> Self {
        let field = a.field().clone();
        Self::new(&field, vec![b, a])
    }

    pub fn from_int_poly(field: &Arc<NumberField>, p: &IntPoly) -> Self {
        Self::from_rat_poly(field, &p.to_rat())
    }

    pub fn from_rat_poly(field: &Arc<NumberField>, p: &RatPoly) -> Self {
        Self::new(
            field,
            p.coeffs().iter().map(|c| NFElem::from_rational(field, c.clone())).collect(),
        )
    }

    /// The polynomial with rational coefficients, when all coefficients are
    /// rational.
    pub fn to_rat_poly(&self) -> Option<RatPoly> {
        self.coeffs.iter().map(NFElem::as_rational).collect::<Option<Vec<_>>>().map(RatPoly::new)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> NFElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| NFElem::zero(&self.field))
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

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> NFElem {
        self.coeffs.last().cloned().unwrap_or_else(|| NFElem::zero(&self.field))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn scale(&self, c: &NFElem) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.field, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.field, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        // multiply as polynomials in (x, α) and reduce once per coefficient
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut acc = vec![RatPoly::zero(); n];
        let lhs: Vec<RatPoly> = self.coeffs.iter().map(NFElem::to_poly).collect();
        let rhs: Vec<RatPoly> = other.coeffs.iter().map(NFElem::to_poly).collect();
        for (i, a) in lhs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.iter().enumerate() {
                acc[i + j] = &acc[i + j] + &(a * b);
            }
        }
        Self::new(&self.field, acc.iter().map(|c| NFElem::from_poly(&self.field, c)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(&self.field), |acc, _| acc.mul(self))
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let inv = d.lc().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![NFElem::zero(&self.field); self.deg() - dd + 1];
        for k in (0..quo.len()).rev() {
            let q = &rem[k + dd] * &inv;
            if q.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&q * c);
            }
            quo[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(&self.field, quo), Self::new(&self.field, rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic gcd over the number field.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = std::mem::replace(&mut b, r.monic());
        }
        Ok(a.monic())
    }

    pub fn eval(&self, at: &NFElem) -> NFElem {
        let mut acc = NFElem::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    /// Coefficients as polynomials in `α`: entry `[i]` is the `α`-polynomial
    /// multiplying `x^i`.
    pub(crate) fn alpha_polys(&self) -> Vec<RatPoly> {
        self.coeffs.iter().map(NFElem::to_poly).collect()
    }

    /// Lcm of all coordinate denominators.
    pub fn denominator(&self) -> num_bigint::BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(&c.denominator()))
    }
}

impl fmt::Display for NFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let monomial = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i > 0 && c.is_one() {
                f.write_str(&monomial)?;
            } else if i == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}){monomial}")?;
            }
        }
        Ok(())
    }
}
