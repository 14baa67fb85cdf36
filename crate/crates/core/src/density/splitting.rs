use std::sync::Arc;

use crate::factor::factor_over_q;
use crate::number_field::{lift_norm_factor, min_poly_of_shift, primitive_shift, squarefree_norm_factors, NFPoly, NumberField};
use crate::poly::squarefree_part;
use crate::{Error, IntPoly, Result};

pub const DEFAULT_DEGREE_CAP: usize = 64;

/// `[F_P : ℚ]` for a squarefree nonconstant `P`, found by adjoining roots
/// of nonlinear factors one at a time.
pub fn splitting_field_degree(poly: &IntPoly, cap: usize) -> Result<usize> {
    check_input(poly)?;
    // irreducible factors over ℚ not yet known to split over the current field
    let mut pending: Vec<IntPoly> =
        factor_over_q(poly)?.factors.into_iter().map(|(f, _)| f).filter(|f| f.deg() > 1).collect();
    let mut field = NumberField::rationals();
    loop {
        let mut next = None;
        let mut unsplit = Vec::with_capacity(pending.len());
        for f in pending {
            if next.is_some() {
                unsplit.push(f);
                continue;
            }
            if field.degree() == 1 {
                next = Some(NFPoly::from_int_poly(&field, &f));
                unsplit.push(f);
                continue;
            }
            // factor degrees over K are read off the norm; only the adjoined factor is lifted
            let (s, norms) = squarefree_norm_factors(&f, &field)?;
            if let Some(nk) = norms.iter().filter(|n| n.deg() > field.degree()).min_by_key(|n| n.deg()) {
                next = Some(lift_norm_factor(&f, &field, s, nk)?);
                unsplit.push(f);
            }
        }
        pending = unsplit;
        let Some(e) = next else {
            return Ok(field.degree());
        };
        let reached = field.degree() * e.deg();
        if reached > cap {
            return Err(Error::CapExceeded { cap, reached });
        }
        field = if field.degree() == 1 {
            let rat = e.to_rat_poly().ok_or_else(|| Error::Internal("factor over ℚ has irrational coefficients".into()))?;
            NumberField::from_rat(&rat)?
        } else {
            let n = primitive_shift(&field, &e)?;
            let n = i64::try_from(n).map_err(|_| Error::Internal(format!("shift {n} overflows")))?;
            let m = min_poly_of_shift(&field.int_minpoly().clone(), &e, n)?;
            adjoin(&m)
        };
    }
}

fn adjoin(minpoly: &IntPoly) -> Arc<NumberField> {
    // irreducible by construction
    NumberField::new_unchecked(minpoly)
}

fn check_input(poly: &IntPoly) -> Result<()> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if poly.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !crate::poly::is_squarefree(poly) {
        return Err(Error::NotSquarefree);
    }
    Ok(())
}

/// Whether the splitting field of `∏ P_i` has degree `∏ [F_{P_i} : ℚ]`,
/// i.e. the fields `F_{P_i}` are linearly disjoint.
pub fn check_theorem4_hypothesis(polys: &[IntPoly], cap: usize) -> Result<bool> {
    if polys.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut product_of_degrees = 1usize;
    let mut product = IntPoly::one();
    for p in polys {
        check_input(p)?;
        product_of_degrees = product_of_degrees.saturating_mul(splitting_field_degree(p, cap)?);
        product = &product * p;
    }
    if polys.len() == 1 {
        return Ok(true);
    }
    if product_of_degrees > cap {
        return Err(Error::CapExceeded { cap, reached: product_of_degrees });
    }
    let joint = squarefree_part(&product)?;
    Ok(splitting_field_degree(&joint, cap)? == product_of_degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_degrees() {
        assert_eq!(splitting_field_degree(&ip(&[-2, 0, 1]), 64).unwrap(), 2);
        assert_eq!(splitting_field_degree(&ip(&[-2, 0, 0, 1]), 64).unwrap(), 6);
        let p = &ip(&[-2, 0, 1]) * &ip(&[1, 0, 1]);
        assert_eq!(splitting_field_degree(&p, 64).unwrap(), 4);
        assert_eq!(splitting_field_degree(&ip(&[1, 1, 1, 1, 1]), 64).unwrap(), 4);
        assert_eq!(splitting_field_degree(&ip(&[-3, 1]), 64).unwrap(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            splitting_field_degree(&ip(&[-2, 0, 0, 1]), 4),
            Err(Error::CapExceeded { cap: 4, reached: 6 })
        );
        assert_eq!(splitting_field_degree(&ip(&[1, 0, 1]).pow(2), 64), Err(Error::NotSquarefree));
    }

    #[test]
    fn disjointness() {
        assert!(check_theorem4_hypothesis(&[ip(&[-2, 0, 1]), ip(&[1, 0, 1])], 64).unwrap());
        assert!(!check_theorem4_hypothesis(&[ip(&[-2, 0, 1]), ip(&[-8, 0, 1])], 64).unwrap());
        assert!(check_theorem4_hypothesis(&[ip(&[-2, 0, 0, 1])], 64).unwrap());
        assert!(!check_theorem4_hypothesis(&[ip(&[-2, 0, 0, 1]), ip(&[1, 1, 1])], 64).unwrap());
    }
}
