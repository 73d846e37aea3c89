//! The normalized WRT invariant z̃_k = z^I(k) + z^R(k): residue part with its
//! phase polynomials ζ_θ, Laplace-integral part, residue operator, and the
//! generating function Σ z̃_{k+2} z^k.

use crate::arith::laurent_residue;
use crate::arith::quad::{tanh_sinh, GaussLegendre};
use crate::arith::{
    ap, bernoulli_numbers, binomial, series_pow_neg, CSeries, KPoly, LaurentPolySeries, PowerSeriesQ, RationalModZ,
};
use crate::chern_simons::{all_fibers, theta_of};
use crate::error::{invalid, Error, Result};
use crate::radial::p_polynomials;
use crate::resurgence::borel_closed_form;
use crate::seifert::SeifertData;
use rug::{Complex, Float, Integer, Rational};

/// Coefficients fⱼ of (y − 2πim)^{−j}, j = 1..n−2.
#[derive(Clone, Debug)]
pub struct PrincipalPart {
    pub m: i64,
    pub f: Vec<Complex>,
}

#[derive(Clone, Debug)]
pub struct PhasePolynomial {
    pub theta: RationalModZ,
    /// ζ_θ as a polynomial in k (the k^{-1} slot is kept and should vanish).
    pub coeffs: KPoly,
    pub fiber: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct WrtValue {
    pub k: i64,
    pub z_i: Complex,
    pub z_r: Complex,
    pub z_total: Complex,
}

/// Taylor series of sinh(c + x/(2p)) to `len` terms.
fn shifted_sinh(c: &Complex, p: i64, len: usize, wp: u32) -> CSeries {
    let sh = Complex::with_val(wp, c.sinh_ref());
    let ch = Complex::with_val(wp, c.cosh_ref());
    let mut out = CSeries::zeros(wp, len);
    let step = Rational::from((1, 2 * p));
    let mut scale = Rational::from(1);
    let mut fact = Integer::from(1);
    for i in 0..len {
        if i > 0 {
            fact *= i as u64;
            scale *= &step;
        }
        let r = Rational::from(&scale / &fact);
        let base = if i % 2 == 0 { &sh } else { &ch };
        out.coeffs[i] = Complex::with_val(wp, base * &r);
    }
    out
}

/// F(2πim + x) = x^{low}·Σ cᵢ xⁱ, i < len.
pub fn laurent_f(sd: &SeifertData, m: i64, len: usize, prec: u32) -> (i64, Vec<Complex>) {
    let wp = prec + 32;
    let n = sd.n() as i64;
    let s = PowerSeriesQ::sinhc(len);
    let half = series_pow_neg(&s.scale_var(&Rational::from((1, 2))), (2 - n) as i32).expect("unit constant term");
    // (1/4)·2^{n−2}·(−1)^{m(2−n)}
    let mut pref = Rational::from((1i64 << (n - 2), 4));
    if (m * (2 - n)).rem_euclid(2) == 1 {
        pref = -pref;
    }
    let mut acc = CSeries::from_q(wp, &half);
    let mut low = 2 - n;
    for &pj in &sd.p {
        if m % pj == 0 {
            low += 1;
            pref /= 2 * pj;
            if (m / pj).rem_euclid(2) == 1 {
                pref = -pref;
            }
            acc = acc.mul(&CSeries::from_q(wp, &s.scale_var(&Rational::from((1, 2 * pj)))));
        } else {
            let c = ap::pi_i(wp) * Rational::from((m, pj));
            acc = acc.mul(&shifted_sinh(&c, pj, len, wp));
        }
    }
    let pc = Complex::with_val(wp, &pref);
    (low, acc.coeffs.iter().map(|a| Complex::with_val(prec, a * &pc)).collect())
}

pub fn principal_part_f(sd: &SeifertData, m: i64, prec: u32) -> PrincipalPart {
    let n = sd.n();
    let (low, c) = laurent_f(sd, m, n, prec);
    let f = (1..=n as i64 - 2)
        .map(|j| {
            let idx = -j - low;
            if idx >= 0 && (idx as usize) < c.len() {
                c[idx as usize].clone()
            } else {
                Complex::new(prec)
            }
        })
        .collect();
    PrincipalPart { m, f }
}

/// e^{k(g(2πim+x) − g(2πim))} = Σ P_l(k,m) x^l as a Laurent series in x.
fn exp_kg_series(sd: &SeifertData, m: i64, len: usize, prec: u32) -> LaurentPolySeries {
    let pp = p_polynomials(sd, len.saturating_sub(1));
    let coeffs = pp.iter().map(|p| p.k_poly(m, prec)).collect();
    LaurentPolySeries::new(0, coeffs, prec)
}

/// 1/(1 − e^{−kx}) = Σ_b (−1)^b B_b k^{b−1} x^{b−1}/b!.
fn bernoulli_kernel(len: usize, prec: u32) -> LaurentPolySeries {
    let b = bernoulli_numbers(len);
    let mut fact = Integer::from(1);
    let coeffs = (0..len)
        .map(|i| {
            if i > 0 {
                fact *= i as u64;
            }
            let mut c = Rational::from(&b[i] / &fact);
            if i % 2 == 1 {
                c = -c;
            }
            KPoly::monomial(Complex::with_val(prec, &c), i as i32 - 1)
        })
        .collect();
    LaurentPolySeries::new(-1, coeffs, prec)
}

/// Res(F e^{kg}/(1 − e^{−ky}), 2πim)·e^{−kg(2πim)} as a polynomial in k.
pub fn residue_poly(sd: &SeifertData, m: i64, prec: u32) -> Result<KPoly> {
    let ord = sd.pole_order(m);
    if ord < 0 {
        return Ok(KPoly::zero(prec));
    }
    let len = ord as usize + 2;
    let (low, c) = laurent_f(sd, m, len, prec);
    let fs = LaurentPolySeries::from_constants(low, &c);
    let prod = fs.mul(&exp_kg_series(sd, m, len, prec)).mul(&bernoulli_kernel(len, prec));
    laurent_resid(&prod)
}

fn laurent_resid(s: &LaurentPolySeries) -> Result<KPoly> {
    laurent_residue(s)
}

/// ζ_θ for every phase θ = [−m²/4P], m ∈ 1..2P−1, with
/// e^{2πikθ}ζ_θ(k) = −Σ_{m∈T(θ)} Res(F e^{kg}/(1−e^{−ky}), 2πim).
pub fn phase_polynomials(sd: &SeifertData, prec: u32) -> Result<Vec<PhasePolynomial>> {
    let mut out = Vec::new();
    for (theta, fib) in all_fibers(sd) {
        let mut acc = KPoly::zero(prec);
        for &m in &fib {
            acc.add_assign(&residue_poly(sd, m, prec)?);
        }
        out.push(PhasePolynomial {
            theta,
            coeffs: acc.neg(),
            fiber: fib,
        });
    }
    Ok(out)
}

/// Σ_θ e^{2πikθ}ζ_θ(k).
pub fn eval_phases(phases: &[PhasePolynomial], k: i64, prec: u32) -> Complex {
    let mut acc = Complex::new(prec);
    for ph in phases {
        let e = ap::exp_2pi_i(prec, &(ph.theta.rep().clone() * k));
        acc += e * ph.coeffs.eval_int(k);
    }
    acc
}

pub fn residue_part(sd: &SeifertData, k: i64, prec: u32) -> Result<Complex> {
    if k < 1 {
        return invalid("k must be positive");
    }
    Ok(eval_phases(&phase_polynomials(sd, prec)?, k, prec))
}

/// Nodes e^{2πij/N} for the circle rule.
pub fn unit_roots(nodes: usize, prec: u32) -> Vec<Complex> {
    (0..nodes)
        .map(|j| ap::exp_2pi_i(prec, &Rational::from((j as i64, nodes as i64))))
        .collect()
}

/// Trapezoid rule for (1/2πi)∮ f around y0 on a circle of radius r.
pub fn circle_residue<Fn_>(f: &Fn_, y0: &Complex, r: &Float, roots: &[Complex]) -> Result<Complex>
where
    Fn_: Fn(&Complex) -> Result<Complex>,
{
    let prec = y0.prec().0;
    let mut acc = Complex::new(prec);
    for w in roots {
        let rw = Complex::with_val(prec, w * r);
        let y = Complex::with_val(prec, y0 + &rw);
        acc += f(&y)? * rw;
    }
    Ok(acc / roots.len() as u32)
}

fn residue_radius(k: i64, prec: u32) -> Float {
    // the zeros of 1 − e^{−ky} nearest to the center sit 16 radii away
    ap::pi(prec) / (8 * k) as u32
}

fn residue_nodes(prec: u32) -> usize {
    (prec / 4 + 16) as usize
}

/// −Σ_m Res(F e^{kg}/(1−e^{−ky}), 2πim) by direct contour quadrature.
pub fn residue_sum_numeric(sd: &SeifertData, k: i64, prec: u32) -> Result<Complex> {
    let wp = prec + 32;
    let r = residue_radius(k, wp);
    let roots = unit_roots(residue_nodes(prec), wp);
    let integrand = |y: &Complex| -> Result<Complex> {
        let f = sd.eval_f(y)?;
        let e = Complex::with_val(wp, sd.eval_g(y) * k).exp();
        let den = Complex::with_val(wp, 1 - Complex::with_val(wp, -(y * Complex::with_val(wp, k))).exp());
        Ok(f * e / den)
    };
    let mut acc = Complex::new(wp);
    for m in 1..2 * sd.big_p {
        let y0 = Complex::with_val(wp, (0, ap::pi(wp) * (2 * m)));
        acc += circle_residue(&integrand, &y0, &r, &roots)?;
    }
    Ok(Complex::with_val(prec, -acc))
}

/// z^I(k) = (2√(2P)/√(πi)) ∫₀^∞ e^{−ku²} F(2κu) du with a certified tail.
pub fn integral_part(sd: &SeifertData, k: i64, prec: u32) -> Result<Complex> {
    let tol = ap::two_pow_neg(prec, prec as i32 - 24);
    integral_part_tol(sd, k, prec, &tol)
}

pub fn integral_part_tol(sd: &SeifertData, k: i64, prec: u32, tol: &Float) -> Result<Complex> {
    if k < 1 {
        return invalid("k must be positive");
    }
    let wp = prec + 32;
    let kappa = sd.kappa(wp);
    let two_kappa = Complex::with_val(wp, &kappa * 2u32);
    let re_k = kappa.real().to_f64();
    let n = sd.n() as f64;
    let sip = sd.sum_inv_p().to_f64();
    let a = (re_k * (sip - (n - 2.0))).max(0.0);
    // |F(2κu)| ≤ C e^{a u} once Re κ·u ≥ 1
    let c_bound = 4f64.powi(sd.n() as i32);
    let u1 = 1.0 / re_k;
    let kf = k as f64;
    let ln_tol = tol.to_f64().ln() - 4.0;
    let mut upper = (u1 + 1.0).max(a / kf + 1.0);
    loop {
        let ln_tail = c_bound.ln() - kf * upper * upper + a * upper - (2.0 * kf * upper - a).ln();
        if ln_tail < ln_tol {
            break;
        }
        upper *= 1.25;
    }
    let f = |u: &Float| -> Result<Complex> {
        let y = Complex::with_val(wp, &two_kappa * u);
        let g = Float::with_val(wp, u.square_ref()) * k;
        Ok(sd.eval_f(&y)? * Float::with_val(wp, -g).exp())
    };
    let nodes = (prec / 4 + 16) as usize;
    let gl = GaussLegendre::new(nodes, wp);
    // pole distance of F(2κu) from the real axis is √(π/P)/2
    let width = (std::f64::consts::PI / sd.big_p as f64).sqrt() / 2.0;
    let panels = (upper / width).ceil() as usize;
    let tol_w = Float::with_val(wp, tol / 4u32);
    let v = gl.integrate(
        &f,
        &Float::with_val(wp, 0),
        &Float::with_val(wp, upper),
        &tol_w,
        panels,
        panels * 64,
    )?;
    let pre = Complex::with_val(wp, (Float::with_val(wp, 2 * sd.big_p).sqrt() * 2u32, 0)) / ap::pi_i(wp).sqrt();
    Ok(Complex::with_val(prec, v * pre))
}

pub fn normalized_wrt(sd: &SeifertData, k: i64, prec: u32) -> Result<WrtValue> {
    let z_i = integral_part(sd, k, prec)?;
    let z_r = residue_part(sd, k, prec)?;
    let z_total = Complex::with_val(prec, &z_i + &z_r);
    Ok(WrtValue { k, z_i, z_r, z_total })
}

/// I_θ(B)(k) = −Σ_{m∈T(θ)} Res(e^{kiy²/8πP}/(1−e^{−ky})·(y/4P)·B(y²/(8πiP)), y = 2πim),
/// with B the closed-form Borel function.
pub fn residue_operator(sd: &SeifertData, theta: &RationalModZ, k: i64, prec: u32) -> Result<Complex> {
    let wp = prec + 32;
    let fib: Vec<i64> = (1..2 * sd.big_p).filter(|&m| theta_of(m, sd.big_p) == *theta).collect();
    if fib.is_empty() {
        return Ok(Complex::new(prec));
    }
    let eight_pi_i_p = ap::pi_i(wp) * 8u32 * sd.big_p;
    let four_p = 4 * sd.big_p;
    let integrand = |y: &Complex| -> Result<Complex> {
        let zeta = Complex::with_val(wp, y.square_ref()) / &eight_pi_i_p;
        let b = borel_closed_form(sd, &zeta)?;
        let e = Complex::with_val(wp, sd.eval_g(y) * k).exp();
        let den = Complex::with_val(wp, 1 - Complex::with_val(wp, -(y * Complex::with_val(wp, k))).exp());
        Ok(b * y / four_p * e / den)
    };
    let r = residue_radius(k, wp);
    let roots = unit_roots(residue_nodes(prec), wp);
    let mut acc = Complex::new(wp);
    for m in fib {
        let y0 = Complex::with_val(wp, (0, ap::pi(wp) * (2 * m)));
        acc += circle_residue(&integrand, &y0, &r, &roots)?;
    }
    Ok(Complex::with_val(prec, -acc))
}

/// Li_{−l}(z) = Σ_{j=0}^{l} j! S(l+1, j+1) (z/(1−z))^{j+1}.
pub fn polylog_neg(l: u32, z: &Complex) -> Result<Complex> {
    let prec = z.prec().0;
    let one_minus = Complex::with_val(prec, 1 - z);
    if one_minus.is_zero() {
        return Err(Error::Pole {
            what: "Li_{-l}",
            at: "1".into(),
        });
    }
    let w = Complex::with_val(prec, z / &one_minus);
    let s = stirling2_row(l as usize + 1);
    let mut acc = Complex::new(prec);
    let mut wp = w.clone();
    let mut fact = Integer::from(1);
    for j in 0..=l as usize {
        if j > 0 {
            fact *= j as u64;
            wp *= &w;
        }
        acc += Complex::with_val(prec, &wp * Integer::from(&fact * &s[j + 1]));
    }
    Ok(acc)
}

/// S(n, 0..=n), Stirling numbers of the second kind.
fn stirling2_row(n: usize) -> Vec<Integer> {
    let mut row = vec![Integer::from(1)];
    for i in 1..=n {
        let mut next = vec![Integer::new(); i + 1];
        for j in 1..=i {
            let a = if j < row.len() {
                Integer::from(&row[j] * j as u64)
            } else {
                Integer::new()
            };
            next[j] = a + &row[j - 1];
        }
        row = next;
    }
    row
}

#[derive(Clone, Debug)]
pub struct GeneratingFunction {
    pub partial_sum: Complex,
    pub closed_form: Complex,
    /// Smallest |1 − z e^{2πiθ}| over phases with ζ_θ ≠ 0.
    pub min_singular_distance: f64,
}

/// Σ_{k=0}^{K} z̃_{k+2} zᵏ and its closed form
/// ∫₀^∞ e^{−2y}B(y)/(1−ze^{−y})dy + Σ_θ e^{4πiθ}Σⱼ cⱼ(2ʲ + Σ_l 2^{j−l}binom(j,l)Li_{−l}(ze^{2πiθ})).
pub fn generating_function(sd: &SeifertData, z: &Complex, big_k: i64, prec: u32) -> Result<GeneratingFunction> {
    if ap::abs_f64(z) >= 0.5 {
        return invalid("|z| must be below 1/2");
    }
    let phases = phase_polynomials(sd, prec)?;
    let mut partial = Complex::new(prec);
    let mut zk = ap::one(prec);
    for k in 0..=big_k {
        let zi = integral_part(sd, k + 2, prec)?;
        let zr = eval_phases(&phases, k + 2, prec);
        partial += Complex::with_val(prec, &zk * Complex::with_val(prec, &zi + &zr));
        zk *= z;
    }

    let wp = prec + 16;
    let tol = ap::two_pow_neg(wp, prec as i32 - 24);
    let zw = Complex::with_val(wp, z);
    let lap = |y: &Float| -> Result<Complex> {
        if y.is_zero() {
            return Ok(Complex::new(wp));
        }
        let zeta = Complex::with_val(wp, y);
        let b = borel_closed_form(sd, &zeta)?;
        let e = Float::with_val(wp, -y).exp();
        let den = Complex::with_val(wp, 1 - Complex::with_val(wp, &zw * &e));
        Ok(b * Float::with_val(wp, e.square_ref()) / den)
    };
    let upper = Float::with_val(wp, ((prec as f64) * 0.7 + 40.0) / 2.0);
    let mut closed = tanh_sinh(&lap, &Float::with_val(wp, 0), &upper, &tol, wp, 14)?;

    let cut = ap::two_pow_neg(prec, (prec / 2) as i32);
    let mut min_d = f64::INFINITY;
    for ph in &phases {
        if ph.coeffs.max_abs_above(-1) < cut {
            continue;
        }
        let e1 = ap::exp_2pi_i(wp, ph.theta.rep());
        let w = Complex::with_val(wp, &zw * &e1);
        min_d = min_d.min(ap::abs_f64(&Complex::with_val(wp, 1 - &w)));
        let e2 = Complex::with_val(wp, e1.square_ref());
        let mut inner = Complex::new(wp);
        for j in 0..=ph.coeffs.high().max(0) {
            let cj = ph.coeffs.coeff(j);
            if cj.is_zero() {
                continue;
            }
            let mut s = Complex::with_val(wp, Integer::from(1) << j as u32);
            for l in 0..=j {
                let li = polylog_neg(l as u32, &w)?;
                let f = binomial(j as i64, l as i64) << (j - l) as u32;
                s += li * f;
            }
            inner += s * cj;
        }
        closed += inner * e2;
    }
    Ok(GeneratingFunction {
        partial_sum: partial,
        closed_form: Complex::with_val(prec, closed),
        min_singular_distance: min_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polylog_small() {
        let z = Complex::with_val(128, 0.5);
        let v = polylog_neg(1, &z).unwrap();
        assert!(ap::abs_f64(&(v - 2u32)) < 1e-30);
    }

    #[test]
    fn pole_order_matches_laurent() {
        let sd = SeifertData::new(&[2, 3, 5]).unwrap();
        let pp = principal_part_f(&sd, 1, 128);
        assert!(ap::abs_f64(&pp.f[0]) > 1e-3);
        let pp = principal_part_f(&sd, 2, 128);
        assert!(ap::abs_f64(&pp.f[0]) == 0.0);
    }
}
