//! Asymptotics at roots of unity: L-values of periodic functions, the Taylor
//! polynomials P_l of e^{kg}, the series R_θ and ž_θ, and the radial limit of Ψ.

use crate::arith::bernoulli::bernoulli_polynomial_with;
use crate::arith::{ap, bernoulli_numbers, KPoly, RationalModZ};
use crate::chern_simons::theta_of;
use crate::error::{invalid, Error, Result};
use crate::qseries::psi_eval_tau;
use crate::seifert::SeifertData;
use crate::wrt::{normalized_wrt, principal_part_f, PrincipalPart};
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct PeriodicFn {
    pub period: usize,
    /// C(1), …, C(M).
    pub values: Vec<Complex>,
}

impl PeriodicFn {
    pub fn new(values: Vec<Complex>) -> Result<Self> {
        if values.is_empty() {
            return invalid("periodic function needs a positive period");
        }
        Ok(PeriodicFn {
            period: values.len(),
            values,
        })
    }

    pub fn mean(&self) -> Complex {
        let prec = self.values[0].prec().0;
        ap::sum(prec, &self.values)
    }

    fn check_mean_zero(&self) -> Result<()> {
        let prec = self.values[0].prec().0;
        let scale = self.values.iter().map(ap::abs_f64).fold(0.0, f64::max).max(1.0);
        let tol = ap::two_pow_neg(prec, (prec / 2) as i32).to_f64() * scale;
        if ap::abs_f64(&self.mean()) > tol {
            return invalid("periodic function must have mean value zero");
        }
        Ok(())
    }
}

/// L(−r, C) = −(M^r/(r+1)) Σ C(m) B_{r+1}(m/M).
pub fn l_series_neg(c: &PeriodicFn, r: u32) -> Result<Complex> {
    c.check_mean_zero()?;
    let prec = c.values[0].prec().0;
    let m = c.period as i64;
    let b = bernoulli_numbers(r as usize + 2);
    let mut acc = Complex::new(prec);
    for (i, v) in c.values.iter().enumerate() {
        let x = Rational::from((i as i64 + 1, m));
        acc += Complex::with_val(prec, v * bernoulli_polynomial_with(&b, r as usize + 1, &x));
    }
    let f = Rational::from((Integer::from(m).pow(r), Integer::from(r + 1)));
    Ok(-(acc * f))
}

/// Σ_u Σ_{r≤R} q_u L(−2r−u, C)(−t)^r/r!.
pub fn qexp_asymptotics(c: &PeriodicFn, q: &[Complex], t: &Float, orders: u32) -> Result<Complex> {
    let prec = c.values[0].prec().0;
    let mut acc = Complex::new(prec);
    for (u, qu) in q.iter().enumerate() {
        if qu.is_zero() {
            continue;
        }
        let mut tp = Float::with_val(prec, 1);
        let mut fact = Integer::from(1);
        for r in 0..=orders {
            if r > 0 {
                tp *= t;
                tp = -tp;
                fact *= r;
            }
            let l = l_series_neg(c, 2 * r + u as u32)?;
            acc += l * qu * Float::with_val(prec, &tp / &fact);
        }
    }
    Ok(acc)
}

/// An element c·(πi)^e of ℚ[πi].
pub type PiMonomial = (Rational, i32);

/// P_l(k, m) = Σ p_{l,u,v} k^u m^v.
#[derive(Clone, Debug, PartialEq)]
pub struct PPoly {
    pub l: u32,
    pub terms: BTreeMap<(u32, u32), PiMonomial>,
}

impl PPoly {
    pub fn coeff(&self, u: u32, v: u32) -> Option<&PiMonomial> {
        self.terms.get(&(u, v))
    }

    pub fn eval_coeff(&self, u: u32, v: u32, prec: u32) -> Complex {
        match self.coeff(u, v) {
            Some(c) => pi_monomial(c, prec),
            None => Complex::new(prec),
        }
    }

    /// Polynomial in k at fixed m.
    pub fn k_poly(&self, m: i64, prec: u32) -> KPoly {
        let mut out = KPoly::zero(prec);
        for (&(u, v), c) in &self.terms {
            let mv = Integer::from(m).pow(v);
            let val = pi_monomial(c, prec) * mv;
            out.add_assign(&KPoly::monomial(val, u as i32));
        }
        out
    }

    pub fn eval(&self, k: &Complex, m: i64) -> Complex {
        let prec = k.prec().0;
        self.k_poly(m, prec).eval(k)
    }
}

pub fn pi_monomial(c: &PiMonomial, prec: u32) -> Complex {
    let pii = ap::pi_i(prec);
    let base = if c.1 >= 0 {
        pii
    } else {
        Complex::with_val(prec, pii.recip_ref())
    };
    let pow = base.pow(c.1.unsigned_abs());
    Complex::with_val(prec, pow * &c.0)
}

/// From g(2πim + x) − g(2πim) = −mx/(2P) + A x², A = −(1/8P)(πi)^{−1}:
/// p_{l,u,v} = A^{l−u} (−1/2P)^v / ((l−u)! v!), v = 2u − l.
pub fn p_polynomials(sd: &SeifertData, l_max: usize) -> Vec<PPoly> {
    let big_p = sd.big_p;
    let a = Rational::from((-1, 8 * big_p));
    let b = Rational::from((-1, 2 * big_p));
    (0..=l_max as u32)
        .map(|l| {
            let mut terms = BTreeMap::new();
            for u in l.div_ceil(2)..=l {
                let v = 2 * u - l;
                let e = l - u;
                let c = (a.clone().pow(e as i32) * b.clone().pow(v as i32))
                    / Integer::from(Integer::factorial(e))
                    / Integer::from(Integer::factorial(v));
                terms.insert((u, v), (c, -(e as i32)));
            }
            PPoly { l, terms }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct RadialSeries {
    pub theta: RationalModZ,
    pub k: i64,
    /// t⁰..t^T coefficients of R_θ(k, t).
    pub r_coeffs: Vec<Complex>,
    /// Same with the constant dropped: ž_θ(k, t).
    pub z_check: Vec<Complex>,
}

impl RadialSeries {
    pub fn eval(&self, t: &Float, with_constant: bool) -> Complex {
        let prec = t.prec();
        let cs = if with_constant { &self.r_coeffs } else { &self.z_check };
        let mut acc = Complex::new(prec);
        let mut tp = Float::with_val(prec, 1);
        for c in cs {
            acc += Complex::with_val(prec, c * &tp);
            tp *= t;
        }
        acc
    }
}

fn check_parity(sd: &SeifertData, k: i64) -> Result<()> {
    if sd.big_p % 2 != 0 {
        return invalid("the radial expansion needs P even");
    }
    if k % 2 != 0 {
        return invalid("the radial expansion needs k even");
    }
    Ok(())
}

/// The m-fiber {1..2P : [−m²/4P] = θ}.
fn full_fiber(sd: &SeifertData, theta: &RationalModZ) -> Vec<i64> {
    (1..=2 * sd.big_p).filter(|&m| theta_of(m, sd.big_p) == *theta).collect()
}

struct RadialContext {
    pp: Vec<PPoly>,
    principal: BTreeMap<i64, PrincipalPart>,
    bern: Vec<Rational>,
}

impl RadialContext {
    fn new(sd: &SeifertData, orders: usize, prec: u32) -> Self {
        let n = sd.n();
        let principal = (1..=2 * sd.big_p).map(|m| (m, principal_part_f(sd, m, prec))).collect();
        RadialContext {
            pp: p_polynomials(sd, n),
            principal,
            bern: bernoulli_numbers(2 * orders + 2 * n + 4),
        }
    }
}

fn r_theta_with(ctx: &RadialContext, sd: &SeifertData, theta: &RationalModZ, k: i64, orders: usize, prec: u32) -> RadialSeries {
    let two_p = 2 * sd.big_p;
    let mut r_coeffs = vec![Complex::new(prec); orders + 1];
    for m in full_fiber(sd, theta) {
        let pp_m = &ctx.principal[&m];
        let x = Rational::from((m, two_p));
        for (j1, fj) in pp_m.f.iter().enumerate() {
            if fj.is_zero() {
                continue;
            }
            for (&(u, v), c) in &ctx.pp[j1].terms {
                let base = Complex::with_val(prec, fj * pi_monomial(c, prec)) * Integer::from(k).pow(u);
                let mut fact = Integer::from(1);
                for r in 0..=orders {
                    if r > 0 {
                        fact *= r as u64;
                    }
                    let d = 2 * r as u32 + v;
                    let mut w = Rational::from((Integer::from(two_p).pow(d), Integer::from(d + 1)))
                        * bernoulli_polynomial_with(&ctx.bern, d as usize + 1, &x)
                        / &fact;
                    if r % 2 == 1 {
                        w = -w;
                    }
                    r_coeffs[r] += Complex::with_val(prec, &base * &w);
                }
            }
        }
    }
    let mut z_check = r_coeffs.clone();
    z_check[0] = Complex::new(prec);
    RadialSeries {
        theta: theta.clone(),
        k,
        r_coeffs,
        z_check,
    }
}

pub fn r_theta(sd: &SeifertData, theta: &RationalModZ, k: i64, orders: usize, prec: u32) -> Result<RadialSeries> {
    check_parity(sd, k)?;
    let ctx = RadialContext::new(sd, orders, prec);
    Ok(r_theta_with(&ctx, sd, theta, k, orders, prec))
}

/// All phases θ = [−m²/4P], m ∈ 1..2P.
fn phases(sd: &SeifertData) -> Vec<RationalModZ> {
    let mut v: Vec<RationalModZ> = (1..=2 * sd.big_p).map(|m| theta_of(m, sd.big_p)).collect();
    v.sort();
    v.dedup();
    v
}

pub fn all_r_theta(sd: &SeifertData, k: i64, orders: usize, prec: u32) -> Result<Vec<RadialSeries>> {
    check_parity(sd, k)?;
    let ctx = RadialContext::new(sd, orders, prec);
    Ok(phases(sd)
        .iter()
        .map(|th| r_theta_with(&ctx, sd, th, k, orders, prec))
        .collect())
}

/// Σ_θ e^{2πikθ} R_θ(k, 0).
pub fn r_zero(sd: &SeifertData, k: i64, prec: u32) -> Result<Complex> {
    let mut acc = Complex::new(prec);
    for s in all_r_theta(sd, k, 0, prec)? {
        acc += ap::exp_2pi_i(prec, &(s.theta.rep().clone() * k)) * &s.r_coeffs[0];
    }
    Ok(acc)
}

/// Σ_{m=1}^{2P} e^{kg(2πim)} fⱼ(m).
pub fn mean_value(sd: &SeifertData, k: i64, j: usize, prec: u32) -> Result<Complex> {
    if j == 0 || j > sd.n() - 2 {
        return invalid(format!("j must lie in 1..={}", sd.n() - 2));
    }
    let mut acc = Complex::new(prec);
    for m in 1..=2 * sd.big_p {
        let f = principal_part_f(sd, m, prec);
        let e = ap::exp_2pi_i(prec, &(theta_of(m, sd.big_p).rep().clone() * k));
        acc += e * &f.f[j - 1];
    }
    Ok(acc)
}

/// q_{k,t} = exp(2πi τ), τ = 1/(k − 2iPt/π).
pub fn tau_kt(sd: &SeifertData, k: i64, t: &Float) -> Complex {
    let prec = t.prec();
    let im = Float::with_val(prec, t * (2 * sd.big_p)) / ap::pi(prec);
    Complex::with_val(prec, (Float::with_val(prec, k), -im)).recip()
}

#[derive(Clone, Debug)]
pub struct RadialReport {
    pub k: i64,
    pub t: Vec<f64>,
    /// (√k λ)^{−1} Ψ(q_{k,t}).
    pub lhs: Vec<Complex>,
    pub wrt: Complex,
    /// |lhs − z̃_k|.
    pub residuals: Vec<f64>,
    /// |lhs − z̃_k − Σ_θ e^{2πikθ} ž_θ(k,t)| with ž through t¹.
    pub residuals_after: Vec<f64>,
    /// Log-log slope of residuals_after against t.
    pub slope: f64,
    /// Polynomial extrapolation of lhs to t = 0.
    pub extrapolated: Complex,
    pub extrapolation_error: f64,
    /// extrapolated / z̃_k.
    pub normalization_ratio: Complex,
    /// |lhs/c − z̃_k| with c = 32e^{−iπ/4}.
    pub corrected_residuals: Vec<f64>,
    pub corrected_extrapolation_error: f64,
    pub pass: bool,
}

/// Lagrange extrapolation to t = 0.
pub fn richardson(t: &[Float], v: &[Complex]) -> Complex {
    let prec = v[0].prec().0;
    let mut acc = Complex::new(prec);
    for i in 0..t.len() {
        let mut w = Float::with_val(prec, 1);
        for j in 0..t.len() {
            if i != j {
                let d = Float::with_val(prec, &t[j] - &t[i]);
                w *= Float::with_val(prec, &t[j] / &d);
            }
        }
        acc += Complex::with_val(prec, &v[i] * &w);
    }
    acc
}

pub fn least_squares_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let num: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let den: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    num / den
}

/// 32e^{−iπ/4}, the observed ratio of the radial limit of (√kλ)^{−1}Ψ to z̃_k.
pub fn diagnostic_factor(prec: u32) -> Complex {
    ap::exp_i_pi(prec, &Rational::from((-1, 4))) * 32u32
}

pub fn radial_limit_check(sd: &SeifertData, k: i64, t_list: &[f64], prec: u32) -> Result<RadialReport> {
    check_parity(sd, k)?;
    if t_list.len() < 2 || t_list.iter().any(|&t| !(t > 0.0 && t < 1.0)) {
        return invalid("t grid needs at least two points in (0,1)");
    }
    let wp = prec + 32;
    let wrt = normalized_wrt(sd, k, wp)?.z_total;
    let series = all_r_theta(sd, k, 1, wp)?;
    let norm = Complex::with_val(wp, sd.lambda(wp) * Float::with_val(wp, k).sqrt());
    let tol = ap::two_pow_neg(wp, prec as i32);
    let ts: Vec<Float> = t_list.iter().map(|&t| Float::with_val(wp, t)).collect();
    let mut lhs = Vec::new();
    let mut residuals = Vec::new();
    let mut residuals_after = Vec::new();
    for t in &ts {
        let tau = tau_kt(sd, k, t);
        let psi = psi_eval_tau(sd, &tau, &tol)?;
        let l = Complex::with_val(wp, &psi / &norm);
        let mut pred = wrt.clone();
        for s in &series {
            pred += ap::exp_2pi_i(wp, &(s.theta.rep().clone() * k)) * s.eval(t, false);
        }
        residuals.push(ap::abs_f64(&Complex::with_val(wp, &l - &wrt)));
        residuals_after.push(ap::abs_f64(&Complex::with_val(wp, &l - &pred)));
        lhs.push(l);
    }
    let lx: Vec<f64> = t_list.iter().map(|t| t.ln()).collect();
    let ly: Vec<f64> = residuals_after.iter().map(|r| r.max(1e-300).ln()).collect();
    let slope = least_squares_slope(&lx, &ly);
    let extrapolated = richardson(&ts, &lhs);
    let extrapolation_error = ap::abs_f64(&Complex::with_val(wp, &extrapolated - &wrt));
    if wrt.is_zero() {
        return Err(Error::Degenerate("z̃_k vanishes".into()));
    }
    let normalization_ratio = Complex::with_val(prec, &extrapolated / &wrt);
    let c = diagnostic_factor(wp);
    let corrected_residuals = lhs
        .iter()
        .map(|l| ap::abs_f64(&Complex::with_val(wp, Complex::with_val(wp, l / &c) - &wrt)))
        .collect();
    let corrected_extrapolation_error = ap::abs_f64(&Complex::with_val(wp, Complex::with_val(wp, &extrapolated / &c) - &wrt));
    let i_min = (0..t_list.len())
        .min_by(|&a, &b| t_list[a].partial_cmp(&t_list[b]).unwrap())
        .unwrap();
    let pass = residuals[i_min] < 1e-3 && extrapolation_error < 1e-6;
    Ok(RadialReport {
        k,
        t: t_list.to_vec(),
        lhs: lhs.into_iter().map(|c| Complex::with_val(prec, c)).collect(),
        wrt: Complex::with_val(prec, wrt),
        residuals,
        residuals_after,
        slope,
        extrapolated: Complex::with_val(prec, extrapolated),
        extrapolation_error,
        normalization_ratio,
        corrected_residuals,
        corrected_extrapolation_error,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l_value_alternating() {
        let c = PeriodicFn::new(vec![Complex::with_val(64, 1), Complex::with_val(64, -1)]).unwrap();
        let v = l_series_neg(&c, 0).unwrap();
        assert!(ap::abs_f64(&(v - Float::with_val(64, 0.5))) < 1e-15);
    }

    #[test]
    fn p0_and_p1() {
        let sd = SeifertData::new(&[2, 3, 5]).unwrap();
        let pp = p_polynomials(&sd, 3);
        assert_eq!(pp[0].terms.len(), 1);
        assert_eq!(pp[0].coeff(0, 0), Some(&(Rational::from(1), 0)));
        assert_eq!(pp[1].coeff(1, 1), Some(&(Rational::from((-1, 60)), 0)));
    }
}
