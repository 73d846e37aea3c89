//! Polynomials in k (with a k^{-1} slot) and truncated Laurent series whose
//! coefficients are such polynomials.

use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Complex, Float};

/// Σ_{e=low}^{low+len-1} c_e k^e.
#[derive(Clone, Debug)]
pub struct KPoly {
    pub low: i32,
    pub coeffs: Vec<Complex>,
    pub prec: u32,
}

impl KPoly {
    pub fn zero(prec: u32) -> Self {
        KPoly {
            low: 0,
            coeffs: Vec::new(),
            prec,
        }
    }

    pub fn constant(c: Complex) -> Self {
        let prec = c.prec().0;
        KPoly {
            low: 0,
            coeffs: vec![c],
            prec,
        }
    }

    /// c·k^e
    pub fn monomial(c: Complex, e: i32) -> Self {
        let prec = c.prec().0;
        KPoly {
            low: e,
            coeffs: vec![c],
            prec,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Coefficient of k^e.
    pub fn coeff(&self, e: i32) -> Complex {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            Complex::new(self.prec)
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() {
            return other.clone();
        }
        if other.coeffs.is_empty() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let coeffs = (low..=high)
            .map(|e| {
                let mut c = self.coeff(e);
                c += other.coeff(e);
                c
            })
            .collect();
        KPoly {
            low,
            coeffs,
            prec: self.prec,
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return KPoly::zero(self.prec);
        }
        let mut coeffs = vec![Complex::new(self.prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += Complex::with_val(self.prec, a * b);
            }
        }
        KPoly {
            low: self.low + other.low,
            coeffs,
            prec: self.prec,
        }
    }

    pub fn scale(&self, c: &Complex) -> Self {
        KPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|a| Complex::with_val(self.prec, a * c)).collect(),
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Self {
        KPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
            prec: self.prec,
        }
    }

    pub fn eval(&self, k: &Complex) -> Complex {
        let mut acc = Complex::new(self.prec);
        for c in self.coeffs.iter().rev() {
            acc *= k;
            acc += c;
        }
        if self.low != 0 {
            let kp = Complex::with_val(self.prec, k).pow(self.low);
            acc *= kp;
        }
        acc
    }

    pub fn eval_int(&self, k: i64) -> Complex {
        self.eval(&Complex::with_val(self.prec, k))
    }

    /// Largest |c_e| over exponents e > deg.
    pub fn max_abs_above(&self, deg: i32) -> Float {
        let mut m = Float::new(self.prec);
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.low + i as i32 > deg {
                let a = Float::with_val(self.prec, c.abs_ref());
                if a > m {
                    m = a;
                }
            }
        }
        m
    }

    /// Largest |c_e| over exponents e < deg.
    pub fn max_abs_below(&self, deg: i32) -> Float {
        let mut m = Float::new(self.prec);
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.low + (i as i32) < deg {
                let a = Float::with_val(self.prec, c.abs_ref());
                if a > m {
                    m = a;
                }
            }
        }
        m
    }

    /// Copy keeping only exponents in [lo, hi].
    pub fn restrict(&self, lo: i32, hi: i32) -> Self {
        if hi < lo {
            return KPoly::zero(self.prec);
        }
        KPoly {
            low: lo,
            coeffs: (lo..=hi).map(|e| self.coeff(e)).collect(),
            prec: self.prec,
        }
    }
}

/// Σ_{i<len} c_i x^{low+i} with c_i ∈ ℂ[k, k^{-1}], known up to x^{low+len}.
#[derive(Clone, Debug)]
pub struct LaurentPolySeries {
    pub low: i64,
    pub coeffs: Vec<KPoly>,
    pub prec: u32,
}

impl LaurentPolySeries {
    pub fn new(low: i64, coeffs: Vec<KPoly>, prec: u32) -> Self {
        LaurentPolySeries { low, coeffs, prec }
    }

    /// Lift a series with constant (k-free) coefficients.
    pub fn from_constants(low: i64, coeffs: &[Complex]) -> Self {
        let prec = coeffs.first().map_or(64, |c| c.prec().0);
        LaurentPolySeries {
            low,
            coeffs: coeffs.iter().map(|c| KPoly::constant(c.clone())).collect(),
            prec,
        }
    }

    /// First exponent not represented.
    pub fn truncation(&self) -> i64 {
        self.low + self.coeffs.len() as i64
    }

    pub fn coeff(&self, e: i64) -> Option<&KPoly> {
        let i = e - self.low;
        if i < 0 {
            None
        } else {
            self.coeffs.get(i as usize)
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![KPoly::zero(self.prec); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j].add_assign(&a.mul(b));
            }
        }
        LaurentPolySeries {
            low: self.low + other.low,
            coeffs: out,
            prec: self.prec,
        }
    }
}

/// Coefficient of x^{-1}.
pub fn laurent_residue(s: &LaurentPolySeries) -> Result<KPoly> {
    if s.truncation() <= -1 {
        return Err(Error::Truncation(format!(
            "series known only below x^{}, residue needs x^-1",
            s.truncation()
        )));
    }
    Ok(s.coeff(-1).cloned().unwrap_or_else(|| KPoly::zero(s.prec)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PREC: u32 = 128;

    fn c(x: i64) -> Complex {
        Complex::with_val(PREC, x)
    }

    #[test]
    fn residue_hand_cases() {
        let s = LaurentPolySeries::from_constants(-1, &[c(1), c(0)]);
        assert_eq!(laurent_residue(&s).unwrap().coeff(0), c(1));

        let s = LaurentPolySeries::new(
            -2,
            vec![KPoly::monomial(c(1), 1), KPoly::zero(PREC), KPoly::constant(c(3))],
            PREC,
        );
        assert!(laurent_residue(&s).unwrap().is_zero());

        let inv_x = LaurentPolySeries::from_constants(-1, &[c(1), c(0), c(0)]);
        let ab = LaurentPolySeries::from_constants(0, &[c(5), c(7), c(0)]);
        assert_eq!(laurent_residue(&inv_x.mul(&ab)).unwrap().coeff(0), c(5));

        let short = LaurentPolySeries::from_constants(-3, &[c(1)]);
        assert!(laurent_residue(&short).is_err());
    }

    #[test]
    fn kpoly_with_inverse_slot() {
        let a = KPoly {
            low: -1,
            coeffs: vec![c(2), c(3)],
            prec: PREC,
        };
        let b = KPoly::monomial(c(1), 1);
        let p = a.mul(&b);
        assert_eq!(p.low, 0);
        assert_eq!(p.eval_int(2), c(8));
        assert_eq!(a.eval_int(2), c(4));
    }
}
