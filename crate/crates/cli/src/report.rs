//! Machine-readable reports. Every number that can exceed 64 bits, and every
//! rational, is a decimal string; no floating point appears anywhere.

use divisorforge::density::{DensityConstruction, FixedSubgroupPoly};
use divisorforge::intersect::{FixAction, IntersectionCertificate};
use divisorforge::sieve::{CensusReport, SieveReport};
use divisorforge::{IntPoly, RatPoly, Rational};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// JSON schema that every report validates against.
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

/// A polynomial as ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly {
    pub coeffs: Vec<String>,
}

impl Poly {
    pub fn from_int(p: &IntPoly) -> Self {
        Poly { coeffs: p.coeffs().iter().map(BigInt::to_string).collect() }
    }

    pub fn from_rat(p: &RatPoly) -> Self {
        Poly { coeffs: p.coeffs().iter().map(Rational::to_string).collect() }
    }

    pub fn to_rat(&self) -> Option<RatPoly> {
        let coeffs = self.coeffs.iter().map(|c| c.parse().ok()).collect::<Option<Vec<Rational>>>()?;
        Some(RatPoly::new(coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// Canonical text of each input polynomial.
    pub inputs: Vec<String>,
    pub results: Vec<Poly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sieve: Vec<SieveSummary>,
    pub timing: Timing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveSummary {
    pub poly: Poly,
    pub bound: u64,
    pub prime_count: u64,
    pub member_count: u64,
    /// Exact fraction `member_count / prime_count`.
    pub density_estimate: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<u64>>,
}

impl SieveSummary {
    pub fn new(r: &SieveReport, with_members: bool) -> Self {
        SieveSummary {
            poly: Poly::from_int(&r.poly),
            bound: r.bound,
            prime_count: r.prime_count as u64,
            member_count: r.members.len() as u64,
            density_estimate: r.density_estimate.to_string(),
            members: with_members.then(|| r.members.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fix {
    pub prime: String,
    pub action: String,
    pub before: Poly,
    pub after: Poly,
}

impl From<&FixAction> for Fix {
    fn from(f: &FixAction) -> Self {
        Fix {
            prime: f.prime.to_string(),
            action: f.action.as_str().to_string(),
            before: Poly::from_int(&f.before),
            after: Poly::from_int(&f.after),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub degrees: Vec<usize>,
    pub count: u64,
    /// Exact fraction `count / tallied`.
    pub frequency: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QFactor {
    pub poly: Poly,
    pub multiplicity: usize,
}

/// A polynomial over a number field: each coefficient is its list of
/// power-basis coordinates, lowest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldFactor {
    pub coeffs: Vec<Vec<String>>,
    pub text: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub m: u64,
    pub n: u64,
    pub prime: u64,
    pub subgroup: Vec<u64>,
    pub factor: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Intersection {
        base: Poly,
        exceptional_primes: Vec<String>,
        fixes: Vec<Fix>,
        verified_bound: u64,
    },
    Census {
        bound: u64,
        tallied: u64,
        skipped: Vec<u64>,
        histogram: Vec<CensusRow>,
    },
    Factorization {
        content: String,
        factors: Vec<QFactor>,
        irreducible: bool,
    },
    FieldFactorization {
        field: Poly,
        factors: Vec<FieldFactor>,
    },
    Cyclotomic {
        k: u64,
    },
    SubgroupPoly {
        modulus: u64,
        subgroup: Vec<u64>,
        raw: Poly,
        examined_primes: Vec<String>,
        fixes: Vec<Fix>,
    },
    Density {
        target: String,
        steps: Vec<Step>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        warning: Option<String>,
    },
    SplittingDegree {
        degree: usize,
        cap: usize,
    },
    Fix {
        fix: Fix,
    },
}

impl Certificate {
    pub fn intersection(c: &IntersectionCertificate) -> Self {
        Certificate::Intersection {
            base: Poly::from_int(&c.base),
            exceptional_primes: c.exceptional_primes.iter().map(ToString::to_string).collect(),
            fixes: c.fixes.iter().map(Fix::from).collect(),
            verified_bound: c.verified_bound,
        }
    }

    pub fn census(r: &CensusReport) -> Self {
        Certificate::Census {
            bound: r.bound,
            tallied: r.tallied,
            skipped: r.skipped.clone(),
            histogram: r
                .histogram
                .iter()
                .map(|(degrees, &count)| CensusRow {
                    degrees: degrees.clone(),
                    count,
                    frequency: Rational::new(count.into(), r.tallied.max(1).into()).to_string(),
                })
                .collect(),
        }
    }

    pub fn subgroup(p: u64, elements: &[u64], f: &FixedSubgroupPoly) -> Self {
        Certificate::SubgroupPoly {
            modulus: p,
            subgroup: elements.to_vec(),
            raw: Poly::from_int(&f.raw),
            examined_primes: f.examined.iter().map(ToString::to_string).collect(),
            fixes: f.fixes.iter().map(Fix::from).collect(),
        }
    }

    pub fn density(c: &DensityConstruction) -> Self {
        Certificate::Density {
            target: c.target.to_string(),
            steps: c
                .steps
                .iter()
                .map(|s| Step {
                    m: s.m,
                    n: s.n,
                    prime: s.prime,
                    subgroup: s.subgroup.elements().to_vec(),
                    factor: Poly::from_int(&s.factor),
                })
                .collect(),
            warning: c.warning.clone(),
        }
    }
}
