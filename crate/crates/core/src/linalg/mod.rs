//! Exact rational linear algebra.
//!
//! Vectors of a tensor product `X ⊗ Y` (dims `m`, `n`) are indexed Kronecker
//! style: the basis vector `x_i ⊗ y_j` sits at index `i * n + j` (0-based).
//! Every tensor-respecting routine in the crate uses this convention.

mod lattice;
mod matrix;
mod subspace;

pub use lattice::{complex_homology, is_distributive};
pub use matrix::Matrix;
pub use subspace::{annihilator, intersect, sum, tensor, Subspace};

use num::{BigInt, One, Zero};

pub type Rational = num::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
