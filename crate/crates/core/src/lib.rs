//! Exact polynomial arithmetic over the integers, the rationals, prime fields
//! and number fields, together with a construction that turns several integer
//! polynomials into one polynomial whose prime divisors are exactly their
//! common prime divisors.
//!
//! A prime `p` is a *prime divisor* of `P ∈ ℤ[x]` when `P(n) ≡ 0 (mod p)` for
//! some integer `n`; `S(P)` denotes the set of such primes. The crate is laid
//! out bottom-up:
//!
//! * [`poly`]: rationals, dense integer and rational polynomials, gcds,
//!   resultants and discriminants.
//! * [`factor`]: factorization modulo primes and over `ℚ` (Zassenhaus).
//! * [`number_field`]: arithmetic in `ℚ(α)`, reduction maps to `𝔽_p`,
//!   factorization over `ℚ(α)` and primitive-element shifts.
//! * [`intersect`]: the construction of `D` with `S(D) = ⋂ S(Pᵢ)`.
//! * [`sieve`]: membership tests, bulk sieving, density and splitting-type
//!   statistics.
//! * [`density`]: cyclotomic and Gaussian-period polynomials, splitting field
//!   degrees, and polynomials with a prescribed density of prime divisors.

pub mod arith;
pub mod density;
pub mod error;
pub mod factor;
pub mod intersect;
mod linalg;
pub mod modp;
pub mod number_field;
pub mod poly;
pub mod sieve;

pub use error::{Error, Result};
pub use poly::{IntPoly, RatPoly, Rational};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "DIVISORFORGE_THREADS";

/// Sizes the global worker pool from `DIVISORFORGE_THREADS` when it holds a
/// positive integer. Has no effect once the pool is running.
pub fn configure_threads_from_env() {
    let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) else {
        return;
    };
    if n > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}
