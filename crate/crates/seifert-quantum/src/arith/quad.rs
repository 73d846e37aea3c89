//! Quadrature at arbitrary precision: composite Gauss–Legendre with panel
//! doubling, and tanh–sinh on a finite interval.

use crate::error::{Error, Result};
use rug::float::Constant;
use rug::{Complex, Float};

#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<Float>,
    pub weights: Vec<Float>,
    pub prec: u32,
}

impl GaussLegendre {
    /// n-point rule on [-1, 1].
    pub fn new(n: usize, prec: u32) -> Self {
        let wp = prec + 32;
        let pi = Float::with_val(wp, Constant::Pi);
        let tol = Float::with_val(wp, Float::i_exp(1, -(prec as i32) - 8));
        let mut nodes = vec![Float::new(wp); n];
        let mut weights = vec![Float::new(wp); n];
        for i in 0..n.div_ceil(2) {
            let mut x = (Float::with_val(wp, &pi * (i as f64 + 0.75)) / (n as f64 + 0.5)).cos();
            let mut dp = Float::new(wp);
            for _ in 0..200 {
                let (p, d) = legendre_with_derivative(n, &x);
                dp = d;
                let dx = Float::with_val(wp, &p / &dp);
                x -= &dx;
                if dx.abs() < tol {
                    let (_, d) = legendre_with_derivative(n, &x);
                    dp = d;
                    break;
                }
            }
            let w = Float::with_val(wp, 2)
                / (Float::with_val(wp, 1 - Float::with_val(wp, x.square_ref())) * Float::with_val(wp, dp.square_ref()));
            nodes[i] = x.clone();
            weights[i] = w.clone();
            nodes[n - 1 - i] = -x;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights, prec }
    }

    /// Σ over `panels` equal panels of [a, b].
    pub fn composite<F>(&self, f: &F, a: &Float, b: &Float, panels: usize) -> Result<Complex>
    where
        F: Fn(&Float) -> Result<Complex>,
    {
        let prec = self.prec;
        let h = Float::with_val(prec + 16, b - a) / panels as u32;
        let half = Float::with_val(prec + 16, &h / 2u32);
        let mut total = Complex::new(prec);
        for p in 0..panels {
            let mid = Float::with_val(prec + 16, a + Float::with_val(prec + 16, &h * (p as f64 + 0.5)));
            let mut s = Complex::new(prec);
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                let t = Float::with_val(prec + 16, &mid + Float::with_val(prec + 16, &half * x));
                let v = f(&t)?;
                s += v * w;
            }
            total += s * &half;
        }
        Ok(total)
    }

    /// Double the number of panels until two successive values agree to `tol`.
    pub fn integrate<F>(&self, f: &F, a: &Float, b: &Float, tol: &Float, start: usize, max_panels: usize) -> Result<Complex>
    where
        F: Fn(&Float) -> Result<Complex>,
    {
        let mut m = start.max(1);
        let mut prev = self.composite(f, a, b, m)?;
        loop {
            m *= 2;
            if m > max_panels {
                return Err(Error::Quadrature(format!(
                    "Gauss-Legendre budget of {max_panels} panels exhausted"
                )));
            }
            let cur = self.composite(f, a, b, m)?;
            let d = Float::with_val(self.prec, (cur.clone() - &prev).abs_ref());
            if d < *tol {
                return Ok(cur);
            }
            prev = cur;
        }
    }
}

fn legendre_with_derivative(n: usize, x: &Float) -> (Float, Float) {
    let wp = x.prec();
    let mut p0 = Float::with_val(wp, 1);
    let mut p1 = x.clone();
    for k in 2..=n {
        let a = Float::with_val(wp, x * &p1) * (2 * k - 1) as u32;
        let b = Float::with_val(wp, &p0 * (k - 1) as u32);
        let p2 = (a - b) / k as u32;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (Float::with_val(wp, 1), Float::new(wp));
    }
    let num = Float::with_val(wp, x * &p1) - &p0;
    let den = Float::with_val(wp, x.square_ref()) - 1u32;
    let d = num * n as u32 / den;
    (p1, d)
}

/// tanh–sinh quadrature of f over [a, b]; step halving until successive
/// levels agree to `tol`. Endpoint distances are formed without cancellation,
/// so integrable endpoint singularities are fine.
pub fn tanh_sinh<F>(f: &F, a: &Float, b: &Float, tol: &Float, prec: u32, max_level: u32) -> Result<Complex>
where
    F: Fn(&Float) -> Result<Complex>,
{
    let wp = prec + 32;
    let pi_half = Float::with_val(wp, Constant::Pi) / 2u32;
    let len = Float::with_val(wp, b - a);
    // beyond t_max the nodes sit within 2^-prec·len of the endpoints
    let t_max = (prec as f64 * std::f64::consts::LN_2 / std::f64::consts::PI).asinh() + 0.5;

    // contribution of the node pair at ±t
    let pair = |t: &Float| -> Result<Complex> {
        let u = Float::with_val(wp, t.sinh_ref()) * &pi_half;
        let e2u = Float::with_val(wp, &u * 2u32).exp();
        let one_plus = Float::with_val(wp, &e2u + 1u32);
        let d = Float::with_val(wp, &len / &one_plus);
        let ch = Float::with_val(wp, t.cosh_ref());
        // w = 2·len·(π/2)·cosh t·e^{2u}/(1+e^{2u})²
        let w = Float::with_val(wp, &len * &pi_half) * 2u32 * ch * &e2u / Float::with_val(wp, one_plus.square_ref());
        let xr = Float::with_val(wp, b - &d);
        let xl = Float::with_val(wp, a + &d);
        let mut s = f(&xr)?;
        s += f(&xl)?;
        Ok(s * w)
    };

    let mut h = Float::with_val(wp, 0.5);
    let centre = Float::with_val(wp, a + b) / 2u32;
    let w0 = Float::with_val(wp, &len * &pi_half) / 2u32;
    let mut sum = f(&centre)? * &w0;
    let mut j = 1u64;
    loop {
        let t = Float::with_val(wp, &h * j);
        if t.to_f64() > t_max {
            break;
        }
        sum += pair(&t)?;
        j += 1;
    }
    let mut prev = Complex::with_val(prec, &sum * &h);
    for _level in 1..=max_level {
        h /= 2u32;
        let mut j = 1u64;
        loop {
            let t = Float::with_val(wp, &h * j);
            if t.to_f64() > t_max {
                break;
            }
            sum += pair(&t)?;
            j += 2;
        }
        let cur = Complex::with_val(prec, &sum * &h);
        let d = Float::with_val(prec, (cur.clone() - &prev).abs_ref());
        if d < *tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Quadrature(format!("tanh-sinh did not converge in {max_level} levels")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    #[test]
    fn gauss_legendre_polynomial_exactness() {
        let gl = GaussLegendre::new(10, 200);
        let f = |x: &Float| -> Result<Complex> { Ok(Complex::with_val(200, x.clone().pow(19u32))) };
        let v = gl
            .composite(&f, &Float::with_val(200, 0), &Float::with_val(200, 1), 1)
            .unwrap();
        let err = v - Complex::with_val(200, &rug::Rational::from((1, 20)));
        assert!(Float::with_val(200, err.abs_ref()) < 1e-55);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        let prec = 200;
        let f = |x: &Float| -> Result<Complex> { Ok(Complex::with_val(prec, x.clone().sqrt().recip())) };
        let tol = Float::with_val(prec, 1e-40);
        let v = tanh_sinh(&f, &Float::with_val(prec, 0), &Float::with_val(prec, 4), &tol, prec, 12).unwrap();
        let err = v - Complex::with_val(prec, 4);
        let e = Float::with_val(prec, err.abs_ref());
        assert!(e < 1e-38, "{e}");
    }
}
