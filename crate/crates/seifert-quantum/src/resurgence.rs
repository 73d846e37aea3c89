//! The Ohtsuki series z₀, its Borel transform in closed form, the pole set,
//! and ray Laplace transforms.

use crate::arith::quad::tanh_sinh;
use crate::arith::{ap, RationalModZ};
use crate::chern_simons::{enumerate_w, theta_of};
use crate::error::{invalid, Error, Result};
use crate::seifert::SeifertData;
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};
use std::collections::BTreeSet;

/// z₀ = Σ cₙ x^{−n−1/2}.
#[derive(Clone, Debug)]
pub struct OhtsukiSeries {
    pub coefficients: Vec<Complex>,
    pub n: usize,
}

/// Γ(n + 1/2) = (2n)! √π / (4ⁿ n!).
pub fn gamma_half(n: u32, prec: u32) -> Float {
    let r = Rational::from((
        Integer::from(Integer::factorial(2 * n)),
        Integer::from(Integer::factorial(n)) << (2 * n),
    ));
    Float::with_val(prec, ap::pi(prec).sqrt() * r)
}

/// cₙ = (1/2πi)√(8Pπi)·a_{2n}(8Pπi)ⁿ Γ(n+1/2), a_j the Taylor coefficients of F.
pub fn ohtsuki_coefficients(sd: &SeifertData, n: usize, prec: u32) -> Result<OhtsukiSeries> {
    if n < 1 {
        return invalid("N must be at least 1");
    }
    let wp = prec + 32;
    let taylor = sd.f_taylor(2 * n + 1)?;
    let eight = Complex::with_val(wp, ap::pi_i(wp) * 8u32 * sd.big_p);
    let pre = Complex::with_val(wp, eight.sqrt_ref()) / (ap::pi_i(wp) * 2u32);
    let mut pow = ap::one(wp);
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let a = taylor.coeff(2 * i);
        let c = Complex::with_val(wp, &pre * &pow) * a * gamma_half(i as u32, wp);
        out.push(Complex::with_val(prec, c));
        pow *= &eight;
    }
    Ok(OhtsukiSeries { coefficients: out, n })
}

/// c·λ^{−α} log^β λ.
#[derive(Clone, Debug)]
pub struct FormalTerm {
    pub coeff: Complex,
    pub alpha: Rational,
    pub log_power: u32,
}

/// c·ζ^{exponent}.
#[derive(Clone, Debug)]
pub struct BorelTerm {
    pub coeff: Complex,
    pub exponent: Rational,
}

/// c·λ^{−α} ↦ c·ζ^{α−1}/Γ(α).
pub fn formal_borel(series: &[FormalTerm]) -> Result<Vec<BorelTerm>> {
    let first = match series.first() {
        Some(t) => t,
        None => return Ok(Vec::new()),
    };
    if first.alpha <= 0 {
        return invalid("leading exponent must be positive");
    }
    for w in series.windows(2) {
        if w[1].alpha <= w[0].alpha {
            return invalid("exponents must increase");
        }
    }
    series
        .iter()
        .map(|t| {
            if t.log_power != 0 {
                return invalid("log-power terms are not supported");
            }
            let prec = t.coeff.prec().0;
            let g = Float::with_val(prec, Float::with_val(prec, &t.alpha).gamma_ref());
            Ok(BorelTerm {
                coeff: Complex::with_val(prec, &t.coeff / &g),
                exponent: Rational::from(&t.alpha - 1u32),
            })
        })
        .collect()
}

pub fn ohtsuki_formal_terms(o: &OhtsukiSeries) -> Vec<FormalTerm> {
    o.coefficients
        .iter()
        .enumerate()
        .map(|(i, c)| FormalTerm {
            coeff: c.clone(),
            alpha: Rational::from((2 * i as i64 + 1, 2)),
            log_power: 0,
        })
        .collect()
}

/// κ/(16πi s)·G(exp(κs/P)) at an explicit root s of ζ.
pub fn borel_from_root(sd: &SeifertData, s: &Complex) -> Result<Complex> {
    let prec = s.prec().0;
    if s.is_zero() {
        return Err(Error::Pole {
            what: "Borel transform (branch point)",
            at: "0".into(),
        });
    }
    let kappa = sd.kappa(prec);
    let x = Complex::with_val(prec, &kappa * s) / sd.big_p as u32;
    // G(e^x) loses about n·log₂(1/|x|) bits near x = 0
    let lost = (-ap::log2_abs(&x)).max(0.0) * sd.n() as f64;
    let wp = prec + 32 + lost.ceil() as u32;
    let xw = Complex::with_val(wp, &kappa * s) / sd.big_p as u32;
    let g = sd.eval_big_g(&xw.exp())?;
    let den = Complex::with_val(wp, s * ap::pi_i(wp)) * 16u32;
    Ok(Complex::with_val(prec, Complex::with_val(wp, &kappa * &g) / den))
}

/// B(z₀)(ζ) = (κ/(16πi√ζ))·G(exp(κ√ζ/P)), principal √ζ.
pub fn borel_closed_form(sd: &SeifertData, zeta: &Complex) -> Result<Complex> {
    if zeta.is_zero() {
        return Err(Error::Pole {
            what: "Borel transform (branch point)",
            at: "0".into(),
        });
    }
    let s = Complex::with_val(zeta.prec(), zeta.sqrt_ref());
    borel_from_root(sd, &s)
}

/// The same function as (√(2P)/√(πiζ))·F(√(8πiPζ)).
pub fn borel_f_form(sd: &SeifertData, zeta: &Complex) -> Result<Complex> {
    let prec = zeta.prec().0;
    if zeta.is_zero() {
        return Err(Error::Pole {
            what: "Borel transform (branch point)",
            at: "0".into(),
        });
    }
    let wp = prec + 32;
    let y = Complex::with_val(wp, zeta * ap::pi_i(wp) * 8u32 * sd.big_p).sqrt();
    let f = sd.eval_f(&Complex::with_val(prec, &y))?;
    let den = Complex::with_val(wp, zeta * ap::pi_i(wp)).sqrt();
    let num = Float::with_val(wp, 2 * sd.big_p).sqrt();
    Ok(Complex::with_val(prec, f * num / den))
}

/// Taylor coefficients Bₘ of s·B(s²) = Σ Bₘ s^{2m}, m < count, by the Cauchy
/// formula on |s| = √(π/2P)/2 (half the distance to the nearest pole).
pub fn borel_expansion_numeric(sd: &SeifertData, count: usize, nodes: usize, prec: u32) -> Result<Vec<Complex>> {
    let wp = prec + 32;
    let r = Float::with_val(wp, Rational::from((1, 2 * sd.big_p)) * ap::pi(wp)).sqrt() / 2u32;
    let kappa = sd.kappa(wp);
    let pre = Complex::with_val(wp, &kappa / (ap::pi_i(wp) * 16u32));
    let mut vals = Vec::with_capacity(nodes);
    for j in 0..nodes {
        let w = ap::exp_2pi_i(wp, &Rational::from((j as i64, nodes as i64)));
        let s = Complex::with_val(wp, &w * &r);
        let z = Complex::with_val(wp, Complex::with_val(wp, &kappa * &s) / sd.big_p as u32).exp();
        vals.push((w, sd.eval_big_g(&z)? * &pre));
    }
    let mut out = Vec::with_capacity(count);
    for m in 0..count {
        let e = 2 * m as i32;
        let mut acc = Complex::new(wp);
        for (w, h) in &vals {
            acc += Complex::with_val(wp, w.clone().pow(-e) * h);
        }
        let rp = Float::with_val(wp, r.clone().pow(e));
        out.push(Complex::with_val(prec, acc / nodes as u32 / rp));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Pole {
    pub m: i64,
    pub zeta: Complex,
    pub theta: RationalModZ,
}

/// ζₘ = iπm²/(2P) for m ≤ m_max divisible by at most n−3 of the pⱼ.
pub fn pole_set(sd: &SeifertData, m_max: i64, prec: u32) -> Vec<Pole> {
    (1..=m_max)
        .filter(|&m| sd.pole_order(m) > 0)
        .map(|m| Pole {
            m,
            zeta: Complex::with_val(prec, (0, ap::pi(prec) * Rational::from((m * m, 2 * sd.big_p)))),
            theta: theta_of(m, sd.big_p),
        })
        .collect()
}

pub fn check_poles_equal_cs(sd: &SeifertData, m_max: i64) -> bool {
    let poles: BTreeSet<RationalModZ> = pole_set(sd, m_max, 64).into_iter().map(|p| p.theta).collect();
    poles == enumerate_w(sd).values
}

#[derive(Clone, Debug)]
pub struct PoleProbe {
    pub m: i64,
    /// min |B| over points ζₘ(1 + δe^{iφ}).
    pub near: f64,
    /// max |B| over the same circle rotated off the pole ray.
    pub control: f64,
}

/// |B| on a circle of relative radius δ around ζₘ and around ζₘe^{0.2i}.
pub fn probe_pole(sd: &SeifertData, m: i64, delta: f64, prec: u32) -> Result<PoleProbe> {
    let prec = prec.max(128);
    let z0 = Complex::with_val(prec, (0, ap::pi(prec) * Rational::from((m * m, 2 * sd.big_p))));
    let rot = Complex::with_val(prec, (Float::with_val(prec, 0.2).cos(), Float::with_val(prec, 0.2).sin()));
    let z1 = Complex::with_val(prec, &z0 * &rot);
    let mut near = f64::INFINITY;
    let mut control = 0f64;
    for j in 0..8 {
        let w = ap::exp_2pi_i(prec, &Rational::from((2 * j + 1, 16)));
        let d = Complex::with_val(prec, &w * delta);
        let a = Complex::with_val(prec, &z0 * Complex::with_val(prec, 1 + &d));
        let b = Complex::with_val(prec, &z1 * Complex::with_val(prec, 1 + &d));
        near = near.min(ap::abs_f64(&borel_closed_form(sd, &a)?));
        control = control.max(ap::abs_f64(&borel_closed_form(sd, &b)?));
    }
    Ok(PoleProbe { m, near, control })
}

/// |f(t·d)| ≤ c·e^{a·t^power} for t ≥ t0.
#[derive(Clone, Copy, Debug)]
pub struct TailBound {
    pub c: f64,
    pub a: f64,
    pub power: f64,
    pub t0: f64,
}

/// ∫ e^{−λζ} f(ζ) dζ over ζ = t·d, t ∈ [0, ∞).
pub fn laplace_ray<F>(f: &F, direction: &Complex, lambda: &Complex, bound: &TailBound, tol: &Float) -> Result<Complex>
where
    F: Fn(&Complex) -> Result<Complex>,
{
    let prec = direction.prec().0;
    let wp = prec + 16;
    let ld = Complex::with_val(wp, lambda * direction);
    let sigma = ld.real().to_f64();
    if sigma <= 0.0 {
        return invalid("Re(λ·direction) must be positive");
    }
    if bound.power > 1.0 || (bound.power == 1.0 && bound.a >= sigma / 2.0) {
        return invalid("growth bound does not beat the exponential");
    }
    // past R: a t^p ≤ σt/2, so the tail is below 2c e^{−σR/2}/σ
    let ln_tol = tol.to_f64().ln() - 2.0;
    let mut r = bound.t0.max(1.0);
    loop {
        let grows = bound.a * r.powf(bound.power) <= sigma * r / 2.0;
        if grows && (2.0 * bound.c / sigma).ln() - sigma * r / 2.0 < ln_tol {
            break;
        }
        r *= 1.2;
        if r > 1e12 {
            return Err(Error::Quadrature("tail radius diverged".into()));
        }
    }
    let dw = Complex::with_val(wp, direction);
    let g = |t: &Float| -> Result<Complex> {
        if t.is_zero() {
            return Ok(Complex::new(wp));
        }
        let z = Complex::with_val(wp, &dw * t);
        let e = Complex::with_val(wp, -Complex::with_val(wp, &ld * t)).exp();
        Ok(f(&Complex::with_val(prec, &z))? * e * &dw)
    };
    let half = Float::with_val(wp, tol / 2u32);
    let v = tanh_sinh(&g, &Float::with_val(wp, 0), &Float::with_val(wp, r), &half, wp, 14)?;
    Ok(Complex::with_val(prec, v))
}

/// Growth of B(z₀) along ℝ₊: |B(ζ)| ≤ √(2P/π)·4ⁿ/√ζ₁ for ζ ≥ ζ₁ = (Re κ)^{−2}.
pub fn borel_tail_bound(sd: &SeifertData) -> TailBound {
    let re_k = sd.kappa(64).real().to_f64();
    let t0 = 1.0 / (re_k * re_k);
    let c = (2.0 * sd.big_p as f64 / std::f64::consts::PI).sqrt() * 4f64.powi(sd.n() as i32) / t0.sqrt();
    let n = sd.n() as f64;
    let a = (re_k * (sd.sum_inv_p().to_f64() - (n - 2.0))).max(0.0);
    TailBound { c, a, power: 0.5, t0 }
}

/// L_{ℝ₊}(B(z₀))(k).
pub fn laplace_borel(sd: &SeifertData, k: i64, prec: u32) -> Result<Complex> {
    let tol = ap::two_pow_neg(prec, prec as i32 - 24);
    let f = |z: &Complex| borel_closed_form(sd, z);
    laplace_ray(&f, &ap::one(prec), &Complex::with_val(prec, k), &borel_tail_bound(sd), &tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_half_values() {
        let g = gamma_half(1, 128);
        let e = Float::with_val(128, ap::pi(128).sqrt() / 2u32);
        assert!(Float::with_val(128, g - e).abs() < 1e-35);
    }

    #[test]
    fn smallest_pole_235() {
        let sd = SeifertData::new(&[2, 3, 5]).unwrap();
        let p = pole_set(&sd, 1, 64);
        assert_eq!(p[0].m, 1);
        assert!((p[0].zeta.imag().to_f64() - std::f64::consts::PI / 60.0).abs() < 1e-15);
        assert!(check_poles_equal_cs(&sd, 120));
    }
}
