//! Exact and arbitrary-precision arithmetic kernel.

pub mod ap;
pub mod bernoulli;
pub mod crt;
pub mod dedekind;
pub mod kpoly;
pub mod modz;
pub mod quad;
pub mod series;

pub use ap::ApComplex;
pub use bernoulli::{bernoulli_number, bernoulli_numbers, bernoulli_polynomial};
pub use crt::{crt_solve, mod_inverse};
pub use dedekind::dedekind_sum;
pub use kpoly::{laurent_residue, KPoly, LaurentPolySeries};
pub use modz::RationalModZ;
pub use series::{series_pow_neg, CSeries, PowerSeriesQ};

use rug::{Integer, Rational};

pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 || n < 0 || k > n {
        return Integer::new();
    }
    Integer::from(n as u64).binomial(k as u32)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
