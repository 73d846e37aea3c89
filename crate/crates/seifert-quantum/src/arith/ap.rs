//! Helpers around `rug::Complex` used as the arbitrary-precision complex type.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float, Rational};

pub type ApComplex = Complex;

pub fn zero(prec: u32) -> Complex {
    Complex::new(prec)
}

pub fn one(prec: u32) -> Complex {
    Complex::with_val(prec, 1)
}

pub fn i_unit(prec: u32) -> Complex {
    Complex::with_val(prec, (0, 1))
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// πi
pub fn pi_i(prec: u32) -> Complex {
    Complex::with_val(prec, (0, pi(prec)))
}

pub fn from_f64(prec: u32, re: f64, im: f64) -> Complex {
    Complex::with_val(prec, (re, im))
}

pub fn from_rational(prec: u32, r: &Rational) -> Complex {
    Complex::with_val(prec, r)
}

pub fn real(prec: u32, x: &Float) -> Complex {
    Complex::with_val(prec, (x, 0))
}

/// e^{iπ r} for rational r.
pub fn exp_i_pi(prec: u32, r: &Rational) -> Complex {
    let ang = pi(prec + 16) * Float::with_val(prec + 16, r);
    let (s, c) = ang.sin_cos(Float::new(prec + 16));
    Complex::with_val(prec, (c, s))
}

/// e^{2πi r} for rational r, reduced mod 1 first so large r stays exact.
pub fn exp_2pi_i(prec: u32, r: &Rational) -> Complex {
    let fl = r.clone().floor();
    let frac = r - fl;
    exp_i_pi(prec, &(frac * 2u32))
}

pub fn abs(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

pub fn abs_f64(z: &Complex) -> f64 {
    abs(z).to_f64()
}

/// 2^{-bits} as a Float.
pub fn two_pow_neg(prec: u32, bits: i32) -> Float {
    Float::with_val(prec, 2).pow(-bits)
}

/// log2 |z|, with -inf for zero.
pub fn log2_abs(z: &Complex) -> f64 {
    let a = abs(z);
    if a.is_zero() {
        f64::NEG_INFINITY
    } else {
        a.log2().to_f64()
    }
}

/// Sum in index order.
pub fn sum<'a, I: IntoIterator<Item = &'a Complex>>(prec: u32, it: I) -> Complex {
    let mut s = zero(prec);
    for z in it {
        s += z;
    }
    s
}

/// Decimal strings (re, im) with `digits` significant digits.
pub fn to_decimal(z: &Complex, digits: usize) -> (String, String) {
    (
        z.real().to_string_radix(10, Some(digits)),
        z.imag().to_string_radix(10, Some(digits)),
    )
}

/// Number of decimal digits carried by `prec` bits.
pub fn decimal_digits(prec: u32) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor() as usize
}

pub fn to_c64(z: &Complex) -> (f64, f64) {
    (z.real().to_f64(), z.imag().to_f64())
}

/// zⁿ by binary powering (mpc's own power routine is far slower).
pub fn powi(z: &Complex, n: i64) -> Complex {
    let prec = z.prec().0;
    let mut base = z.clone();
    let mut e = n.unsigned_abs();
    let mut acc = one(prec);
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base.square_mut();
        }
    }
    if n < 0 {
        acc.recip_mut();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_two_pi_i_quarter_is_i() {
        let z = exp_2pi_i(128, &Rational::from((5, 4)));
        let d = z - i_unit(128);
        assert!(abs(&d) < 1e-35);
    }

    #[test]
    fn pi_i_squared() {
        let z = pi_i(128).square();
        let expect = -pi(128).square();
        assert!((z.real().clone() - expect).abs() < 1e-35);
    }
}
