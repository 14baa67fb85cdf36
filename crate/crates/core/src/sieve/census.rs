use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith::{bigint_mod, primes_up_to};
use crate::factor::factor_mod_p;
use crate::poly::{discriminant, is_squarefree};
use crate::{Error, IntPoly, Result};

/// Counts of factorization types of `P mod p` over unramified primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub poly: IntPoly,
    pub bound: u64,
    /// Sorted factor degrees (with multiplicity) mapped to prime counts.
    pub histogram: BTreeMap<Vec<usize>, u64>,
    /// Number of primes tallied.
    pub tallied: u64,
    /// Primes up to the bound dividing `lc(P)·disc(P)`, left out.
    pub skipped: Vec<u64>,
}

impl CensusReport {
    /// Share of tallied primes with the given splitting type.
    pub fn frequency(&self, degrees: &[usize]) -> f64 {
        let mut key = degrees.to_vec();
        key.sort_unstable();
        let hits = self.histogram.get(&key).copied().unwrap_or(0);
        super::ratio(hits as usize, self.tallied as usize)
    }
}

/// Splitting-type histogram for a squarefree nonconstant `P` over primes
/// `p ≤ bound` with `p ∤ lc(P)·disc(P)`.
pub fn splitting_type_census(poly: &IntPoly, bound: u64) -> Result<CensusReport> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if poly.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !is_squarefree(poly) {
        return Err(Error::NotSquarefree);
    }
    let disc = discriminant(&poly.to_rat())?;
    let bad = poly.lc() * disc.numer();
    let primes = primes_up_to(bound);
    let types: Vec<(u64, Option<Vec<usize>>)> = primes
        .par_iter()
        .with_min_len(64)
        .map(|&p| {
            if bigint_mod(&bad, p) == 0 {
                return (p, None);
            }
            let mut degs: Vec<usize> = factor_mod_p(poly, p)
                .expect("p does not divide the leading coefficient")
                .into_iter()
                .flat_map(|(g, m)| std::iter::repeat_n(g.deg(), m))
                .collect();
            degs.sort_unstable();
            (p, Some(degs))
        })
        .collect();
    let mut histogram = BTreeMap::new();
    let mut skipped = Vec::new();
    let mut tallied = 0;
    for (p, t) in types {
        match t {
            Some(degs) => {
                *histogram.entry(degs).or_insert(0) += 1;
                tallied += 1;
            }
            None => skipped.push(p),
        }
    }
    Ok(CensusReport { poly: poly.clone(), bound, histogram, tallied, skipped })
}
