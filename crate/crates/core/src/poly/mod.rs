//! Dense univariate polynomials with exact integer or rational coefficients.

mod gcd;
mod resultant;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub use gcd::{
    ext_gcd, is_squarefree, poly_gcd, squarefree_decomposition, squarefree_part,
};
pub use resultant::{
    discriminant, interpolate, resultant, resultant_int, root_sum_resultant,
};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Polynomial with integer coefficients.
pub type IntPoly = Poly<BigInt>;

/// Polynomial with rational coefficients.
pub type RatPoly = Poly<Rational>;

/// Coefficient ring of a [`Poly`].
pub trait Coeff:
    Clone
    + fmt::Debug
    + fmt::Display
    + Eq
    + Hash
    + Signed
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
}

impl Coeff for BigInt {}
impl Coeff for Rational {}

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`. The leading
/// coefficient is nonzero unless the polynomial is zero (no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly { coeffs: vec![T::zero(), T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Leading coefficient, zero for the zero polynomial.
    pub fn lc(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, at: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc *= at;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut t = c.clone();
                t *= &from_usize::<T>(i);
                t
            })
            .collect();
        Self::new(coeffs)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(c·x)`.
    pub fn scale_var(&self, c: &T) -> Self {
        let mut pow = T::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let mut t = a.clone();
            t *= &pow;
            coeffs.push(t);
            pow *= c;
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let mut t = a.clone();
                    t *= c;
                    t
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Polynomial with the sign flipped if needed so the leading coefficient
    /// is positive.
    pub fn with_positive_lc(self) -> Self {
        if self.lc().is_negative() {
            -self
        } else {
            self
        }
    }
}

fn from_usize<T: Coeff>(n: usize) -> T {
    // Small counts only (degrees, indices); repeated doubling keeps this generic.
    let mut acc = T::zero();
    let mut bit = T::one();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc += &bit;
        }
        let b = bit.clone();
        bit += &b;
        n >>= 1;
    }
    acc
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, T::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let mut t = a.clone();
                t *= b;
                coeffs[i + j] += &t;
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Coeff> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$m(rhs)
            }
        }
        impl<T: Coeff> $tr<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> fmt::Display for Poly<T> {
    /// Canonical text: descending powers, juxtaposed coefficients
    /// (`x^4 - 2x^2 + 9`, `3/2x + 1`, `0`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            if k == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        Poly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    pub fn to_rat(&self) -> RatPoly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect(),
        }
    }

    /// Exact quotient `self / d` in `ℤ[x]`, or `None` when `d` does not divide
    /// `self` there.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.deg();
        let ds = self.deg();
        if ds < dd {
            return None;
        }
        // Cheap necessary condition on the constant terms.
        if !d.coeffs[0].is_zero() && !(&self.coeffs[0] % &d.coeffs[0]).is_zero() {
            return None;
        }
        let lc = d.lc();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quo[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quo))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1)·self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "pseudo-remainder by zero");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return self.clone();
        }
        let lc = d.lc();
        let mut r = self.clone();
        let mut e = self.deg() - dd + 1;
        while !r.is_zero() && r.deg() >= dd {
            let s = IntPoly::monomial(r.lc(), r.deg() - dd);
            r = r.scale(&lc) - &s * d;
            e -= 1;
        }
        r.scale(&num_traits::pow(lc, e))
    }

    /// Largest absolute coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Value modulo `p` at `n` (both reduced), for `p < 2^63`.
    pub fn eval_mod(&self, n: u64, p: u64) -> u64 {
        let reduced = self.reduce_coeffs(p);
        crate::arith::horner_mod(&reduced, n, p)
    }

    /// Coefficients reduced into `[0, p)`.
    pub fn reduce_coeffs(&self, p: u64) -> Vec<u64> {
        let pb = BigInt::from(p);
        self.coeffs
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits in u64"))
            .collect()
    }
}

impl RatPoly {
    pub fn from_int(p: &IntPoly) -> Self {
        p.to_rat()
    }

    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    /// Quotient and remainder of Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Self::zero(), self.clone());
        }
        let inv_lc = d.lc().recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); self.deg() - dd + 1];
        for k in (0..quo.len()).rev() {
            let q = &rem[k + dd] * &inv_lc;
            if q.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[k + j] -= &t;
            }
            quo[k] = q;
        }
        rem.truncate(dd);
        (Self::new(quo), Self::new(rem))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    /// Lcm of the coefficient denominators (1 for the zero polynomial).
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer polynomial when every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(Poly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }

    /// Splits into a rational content and a primitive integer polynomial with
    /// positive leading coefficient. See [`content_primitive`].
    pub fn content_primitive(&self) -> Result<(Rational, IntPoly)> {
        content_primitive(self)
    }
}

/// `m | r` in the generalized sense: `m` divides the numerator of `r` (taken
/// in lowest terms).
pub fn rat_divides(m: &BigInt, r: &Rational) -> bool {
    assert!(m.is_positive(), "divisor must be positive");
    (r.numer() % m).is_zero()
}

/// Exact value `P(r)`.
pub fn poly_eval(p: &RatPoly, r: &Rational) -> Rational {
    p.eval(r)
}

/// `P = content · primitive`, where `primitive` has coprime integer
/// coefficients and positive leading coefficient.
pub fn content_primitive(p: &RatPoly) -> Result<(Rational, IntPoly)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let den = p.denominator_lcm();
    let scaled: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let ip = IntPoly::new(scaled);
    let prim = ip.primitive_part();
    let ratio = Rational::new(ip.lc(), prim.lc()) / Rational::from_integer(den);
    Ok((ratio, prim))
}

/// Convenience constructor for rationals from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
