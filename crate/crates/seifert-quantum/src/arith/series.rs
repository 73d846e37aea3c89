//! Truncated power series with exact rational or arbitrary-precision complex coefficients.

use crate::error::{invalid, Result};
use rug::{Complex, Integer, Rational};

/// Σ_{i<len} c_i x^i, known modulo x^{len}.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeriesQ {
    pub coeffs: Vec<Rational>,
}

impl PowerSeriesQ {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        PowerSeriesQ { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut c = vec![Rational::new(); order];
        if order > 0 {
            c[0] = Rational::from(1);
        }
        PowerSeriesQ { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order);
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::new(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += Rational::from(a * b);
            }
        }
        PowerSeriesQ { coeffs: out }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs.first().is_none_or(|c| *c == 0) {
            return invalid("series inverse needs a nonzero constant term");
        }
        let n = self.order();
        let c0inv = Rational::from(self.coeffs[0].recip_ref());
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(c0inv.clone());
        for i in 1..n {
            let mut s = Rational::new();
            for j in 1..=i {
                s += Rational::from(&self.coeffs[j] * &out[i - j]);
            }
            out.push(-s * &c0inv);
        }
        Ok(PowerSeriesQ { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// x -> c·x
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut f = Rational::from(1);
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let r = Rational::from(a * &f);
                f *= c;
                r
            })
            .collect();
        PowerSeriesQ { coeffs }
    }

    /// Value at a complex point by Horner.
    pub fn eval(&self, x: &Complex) -> Complex {
        let prec = x.prec().0;
        let mut acc = Complex::new(prec);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += Complex::with_val(prec, c);
        }
        acc
    }

    /// sinh(x)/x = Σ x^{2i}/(2i+1)!
    pub fn sinhc(order: usize) -> Self {
        let mut c = vec![Rational::new(); order];
        let mut fact = Integer::from(1);
        for i in 0..order {
            if i > 0 {
                fact *= (i + 1) as u64;
            }
            if i % 2 == 0 {
                c[i] = Rational::from((Integer::from(1), fact.clone()));
            }
        }
        PowerSeriesQ { coeffs: c }
    }
}

/// s^e for negative e, truncated to the order of s.
pub fn series_pow_neg(s: &PowerSeriesQ, e: i32) -> Result<PowerSeriesQ> {
    if e >= 0 {
        return invalid(format!("series_pow_neg needs a negative exponent, got {e}"));
    }
    if s.coeffs.first().is_none_or(|c| *c == 0) {
        return invalid("series_pow_neg needs a nonzero constant term");
    }
    Ok(s.inverse()?.pow((-e) as u32))
}

/// Truncated complex power series.
#[derive(Clone, Debug)]
pub struct CSeries {
    pub coeffs: Vec<Complex>,
    pub prec: u32,
}

impl CSeries {
    pub fn zeros(prec: u32, order: usize) -> Self {
        CSeries {
            coeffs: vec![Complex::new(prec); order],
            prec,
        }
    }

    pub fn one(prec: u32, order: usize) -> Self {
        let mut s = Self::zeros(prec, order);
        if order > 0 {
            s.coeffs[0] = Complex::with_val(prec, 1);
        }
        s
    }

    pub fn from_q(prec: u32, s: &PowerSeriesQ) -> Self {
        CSeries {
            coeffs: s.coeffs.iter().map(|c| Complex::with_val(prec, c)).collect(),
            prec,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zeros(self.prec, n);
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out.coeffs[i + j] += Complex::with_val(self.prec, a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &Complex) -> Self {
        CSeries {
            coeffs: self.coeffs.iter().map(|a| Complex::with_val(self.prec, a * c)).collect(),
            prec: self.prec,
        }
    }

    pub fn eval(&self, x: &Complex) -> Complex {
        let mut acc = Complex::new(self.prec);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> PowerSeriesQ {
        PowerSeriesQ::new(v.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn geometric() {
        let s = series_pow_neg(&q(&[1, 1, 0, 0, 0, 0]), -1).unwrap();
        assert_eq!(s, q(&[1, -1, 1, -1, 1, -1]));
        let s = series_pow_neg(&q(&[1, 1, 0, 0]), -2).unwrap();
        assert_eq!(s.coeff(2), 3);
        assert_eq!(series_pow_neg(&q(&[1, 0, 0]), -5).unwrap(), q(&[1, 0, 0]));
        assert!(series_pow_neg(&q(&[0, 1]), -1).is_err());
    }

    #[test]
    fn sinhc_coefficients() {
        let s = PowerSeriesQ::sinhc(6);
        assert_eq!(s.coeff(0), 1);
        assert_eq!(s.coeff(2), Rational::from((1, 6)));
        assert_eq!(s.coeff(4), Rational::from((1, 120)));
        assert_eq!(s.coeff(5), 0);
    }
}
