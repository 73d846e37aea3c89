//! The series Ψ(q) = Σ χₘ q^{m²/4P} and the GPPV series Ẑ₀ from the
//! plumbing lattice sum.

use crate::arith::{ap, binomial};
use crate::error::{invalid, Error, Result};
use crate::plumbing::{delta_exponent, gppv_prefactor, plumbing_for, AdjacencyData, PlumbingGraph};
use crate::seifert::SeifertData;
use rug::{Complex, Float, Integer, Rational};
use std::collections::BTreeMap;

/// Finite q-series Σ c_ν q^{ν/D}, complete for exponents ≤ cutoff.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseQSeries {
    pub den: i64,
    pub terms: BTreeMap<i64, Rational>,
    pub cutoff: Rational,
}

impl SparseQSeries {
    pub fn new(den: i64, cutoff: Rational) -> Self {
        SparseQSeries {
            den,
            terms: BTreeMap::new(),
            cutoff,
        }
    }

    /// Add c·q^{e}; e must have denominator dividing D.
    pub fn add(&mut self, e: &Rational, c: &Rational) -> Result<()> {
        let scaled = Rational::from(e * self.den);
        if *scaled.denom() != 1 {
            return Err(Error::Degenerate(format!("exponent {e} not in (1/{})Z", self.den)));
        }
        let key = scaled
            .numer()
            .to_i64()
            .ok_or_else(|| Error::Degenerate("exponent overflow".into()))?;
        let ent = self.terms.entry(key).or_default();
        *ent += c;
        if *ent == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn exponent(&self, key: i64) -> Rational {
        Rational::from((key, self.den))
    }

    pub fn leading(&self) -> Option<(Rational, Rational)> {
        self.terms.iter().next().map(|(k, c)| (self.exponent(*k), c.clone()))
    }

    /// Drop terms above `cutoff`.
    pub fn truncated(&self, cutoff: &Rational) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| self.exponent(**k) <= *cutoff)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        SparseQSeries {
            den: self.den,
            terms,
            cutoff: cutoff.clone().min(self.cutoff.clone()),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| *c.denom() == 1)
    }
}

/// aᵣ = (−1)ⁿ binom(r+n−3, r).
pub fn a_coeff(r: i64, n: i64) -> Integer {
    let b = binomial(r + n - 3, r);
    if n % 2 == 0 {
        b
    } else {
        -b
    }
}

/// Iterate the exponents and signs of G(z) = Σ_{r,ε} aᵣ(Πε) z^{2Pr+P(n−2)+ΣεP/p}.
fn for_each_g_term(sd: &SeifertData, r_max: i64, mut f: impl FnMut(i64, i64, &Integer)) {
    let n = sd.n();
    let base = sd.big_p * (n as i64 - 2);
    for r in 0..=r_max {
        let a = a_coeff(r, n as i64);
        for mask in 0u32..(1 << n) {
            let mut e = 2 * sd.big_p * r + base;
            let mut sign = 1i64;
            for j in 0..n {
                let c = sd.big_p / sd.p[j];
                if mask >> j & 1 == 1 {
                    e -= c;
                    sign = -sign;
                } else {
                    e += c;
                }
            }
            f(r, e, &Integer::from(&a * sign));
        }
    }
}

/// χₘ for m₀ ≤ m ≤ cutoff_m, from G(z) = (−1)ⁿ Σ χₘ zᵐ.
pub fn chi_coefficients(sd: &SeifertData, cutoff_m: i64) -> Result<BTreeMap<i64, Integer>> {
    let m0 = sd.m0();
    if cutoff_m < m0 {
        return invalid(format!("cutoff {cutoff_m} below m0 = {m0}"));
    }
    let r_max = (cutoff_m - m0).div_euclid(2 * sd.big_p) + 1;
    let sign_n: i64 = if sd.n().is_multiple_of(2) { 1 } else { -1 };
    let mut chi: BTreeMap<i64, Integer> = BTreeMap::new();
    for_each_g_term(sd, r_max, |_, e, c| {
        if e <= cutoff_m {
            *chi.entry(e).or_default() += Integer::from(c * sign_n);
        }
    });
    chi.retain(|_, v| *v != 0);
    Ok(chi)
}

/// Ψ truncated at q-exponent `cutoff`.
pub fn psi_series(sd: &SeifertData, cutoff: &Rational) -> Result<SparseQSeries> {
    let four_p = 4 * sd.big_p;
    let bound = Rational::from(cutoff * four_p);
    let m_max = Integer::from(bound.floor_ref()).sqrt().to_i64().expect("small");
    let m0 = sd.m0();
    if m_max < m0.abs() {
        return Ok(SparseQSeries::new(four_p, cutoff.clone()));
    }
    let chi = chi_coefficients(sd, m_max)?;
    let mut out = SparseQSeries::new(four_p, cutoff.clone());
    for (m, c) in chi {
        let e = Rational::from((m * m, four_p));
        if e <= *cutoff {
            out.add(&e, &Rational::from(c))?;
        }
    }
    Ok(out)
}

/// Principal-value constant term of (z − 1/z)^{2−deg} z^l.
pub fn vp_constant_term(l: i64, deg: i64) -> Rational {
    match deg {
        1 => Rational::from((l == -1) as i64 - (l == 1) as i64),
        2 => Rational::from((l == 0) as i64),
        d => {
            let a = |j: i64| -> Rational {
                let b = binomial(j + d - 3, j);
                Rational::from(if d % 2 == 0 { b } else { -b })
            };
            let mut out = Rational::new();
            // |z| < 1 expansion
            let t = 2 - d - l;
            if t >= 0 && t % 2 == 0 {
                out += a(t / 2) / 2u32;
            }
            // |z| > 1 expansion
            let t = l + 2 - d;
            if t >= 0 && t % 2 == 0 {
                let v = a(t / 2) / 2u32;
                if d % 2 == 0 {
                    out += v;
                } else {
                    out -= v;
                }
            }
            out
        }
    }
}

/// q^Δ·Ẑ₀ from the lattice sum, complete up to `cutoff`.
pub fn gppv_series(
    g: &PlumbingGraph,
    ad: &AdjacencyData,
    delta: &Rational,
    cutoff: &Rational,
    big_p: i64,
) -> Result<SparseQSeries> {
    if !ad.negative_definite {
        return Err(Error::Degenerate(
            "GPPV lattice sum needs a negative definite plumbing".into(),
        ));
    }
    let (pre, sign) = gppv_prefactor(ad);
    let shift = Rational::from(&pre + delta);
    let deg = &ad.degree_vector;
    let leaves: Vec<usize> = (1..g.s()).filter(|&v| deg[v] == 1).collect();
    let c = 0usize;
    let dc = deg[c];
    if dc < 3 {
        return Err(Error::Degenerate("center vertex must have degree at least 3".into()));
    }
    let minv = &ad.m_inv;
    let mut out = SparseQSeries::new(4 * big_p, cutoff.clone());
    let nl = leaves.len();

    // −(l, M⁻¹ l)/4 for l supported on the center and leaves
    let exponent = |lc: i64, mask: u32| -> Rational {
        let mut support: Vec<(usize, i64)> = vec![(c, lc)];
        for (i, &v) in leaves.iter().enumerate() {
            support.push((v, if mask >> i & 1 == 1 { -1 } else { 1 }));
        }
        let mut qf = Rational::new();
        for &(a, la) in &support {
            for &(b, lb) in &support {
                qf += Rational::from(&minv[a][b] * (la * lb));
            }
        }
        &shift - qf / 4u32
    };

    for eps in [1i64, -1] {
        for mask in 0u32..(1 << nl) {
            let mut leaf_coeff = Rational::from(sign);
            for i in 0..nl {
                let l = if mask >> i & 1 == 1 { -1 } else { 1 };
                leaf_coeff *= vp_constant_term(l, 1);
            }
            let mut prev: Option<Rational> = None;
            let mut r = 0i64;
            loop {
                let lc = eps * (dc - 2 + 2 * r);
                let e = exponent(lc, mask);
                let increasing = prev.as_ref().is_some_and(|p| e > *p);
                if e > *cutoff && increasing {
                    break;
                }
                if e <= *cutoff {
                    let coeff = &leaf_coeff * vp_constant_term(lc, dc);
                    if coeff != 0 {
                        out.add(&e, &coeff)?;
                    }
                }
                prev = Some(e);
                r += 1;
                if r > 1_000_000 {
                    return Err(Error::Truncation("lattice enumeration did not terminate".into()));
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct ZhatPsiReport {
    pub verified: bool,
    pub terms_compared: usize,
    pub delta: Rational,
    pub zhat: SparseQSeries,
    pub psi: SparseQSeries,
    /// Exponents where the two series disagree.
    pub mismatches: Vec<Rational>,
    /// ±1 when q^Δ·Ẑ₀ = ±Ψ termwise, None otherwise.
    pub sign: Option<i32>,
}

/// q^Δ·Ẑ₀ for sd, together with Δ.
pub fn zhat_shifted(sd: &SeifertData, cutoff: &Rational) -> Result<(SparseQSeries, Rational)> {
    let (g, ad) = plumbing_for(sd)?;
    let delta = delta_exponent(&g, sd);
    Ok((gppv_series(&g, &ad, &delta, cutoff, sd.big_p)?, delta))
}

/// Exact termwise comparison of q^Δ·Ẑ₀ and Ψ below `cutoff`.
pub fn verify_zhat_psi(sd: &SeifertData, cutoff: &Rational) -> Result<ZhatPsiReport> {
    let (zhat, delta) = zhat_shifted(sd, cutoff)?;
    let psi = psi_series(sd, cutoff)?;
    let keys: std::collections::BTreeSet<i64> = zhat.terms.keys().chain(psi.terms.keys()).copied().collect();
    let mismatches: Vec<Rational> = keys
        .iter()
        .filter(|k| zhat.terms.get(k) != psi.terms.get(k))
        .map(|&k| psi.exponent(k))
        .collect();
    let negated = keys.iter().all(|k| match (zhat.terms.get(k), psi.terms.get(k)) {
        (Some(a), Some(b)) => Rational::from(a + b) == 0,
        _ => false,
    });
    let sign = if psi.terms.is_empty() {
        None
    } else if mismatches.is_empty() {
        Some(1)
    } else if negated {
        Some(-1)
    } else {
        None
    };
    Ok(ZhatPsiReport {
        verified: sign == Some(1),
        sign,
        terms_compared: keys.len(),
        delta,
        zhat,
        psi,
        mismatches,
    })
}

/// Ψ at q = e^{2πiτ}, Im τ > 0, truncated once the remaining terms are below tol.
pub fn psi_eval_tau(sd: &SeifertData, tau: &Complex, tol: &Float) -> Result<Complex> {
    let prec = tau.prec().0;
    if *tau.imag() <= 0 {
        return invalid("Im τ must be positive");
    }
    let wp = prec + 32;
    let n = sd.n() as i64;
    let four_p = 4 * sd.big_p;
    let sign_n: i64 = if n % 2 == 0 { 1 } else { -1 };
    let two_pi_i_tau = Complex::with_val(wp, tau * ap::pi_i(wp)) * 2u32;
    let im = Float::with_val(wp, tau.imag() * ap::pi(wp)) * 2u32;
    let base = sd.big_p * (n - 2);
    let tol_w = Float::with_val(wp, tol / 4u32);
    let mut acc = Complex::new(wp);
    let mut small_blocks = 0;
    let mut r = 0i64;
    loop {
        let a = a_coeff(r, n);
        // block bound: 2ⁿ|aᵣ| |q|^{min e²/4P}
        let e_min = (2 * sd.big_p * r + sd.m0()).max(0);
        let lg = Float::with_val(wp, &im * Rational::from((e_min * e_min, four_p)));
        let bound = Float::with_val(wp, -lg).exp() * Float::with_val(wp, &a).abs() * (1u64 << n) as f64;
        if r > 0 && 2 * sd.big_p * r + sd.m0() > 0 && bound < tol_w {
            small_blocks += 1;
            if small_blocks >= 2 {
                break;
            }
        }
        for mask in 0u32..(1 << n) {
            let mut e = 2 * sd.big_p * r + base;
            let mut sign = sign_n;
            for j in 0..n as usize {
                let c = sd.big_p / sd.p[j];
                if mask >> j & 1 == 1 {
                    e -= c;
                    sign = -sign;
                } else {
                    e += c;
                }
            }
            let ex = Rational::from((e * e, four_p));
            let term = Complex::with_val(wp, &two_pi_i_tau * Complex::with_val(wp, &ex)).exp();
            let c = Integer::from(&a * sign);
            acc += term * c;
        }
        r += 1;
    }
    Ok(Complex::with_val(prec, acc))
}

/// Ψ(q) with q^x = exp(x log q), principal log.
pub fn psi_eval(sd: &SeifertData, q: &Complex, tol: &Float) -> Result<Complex> {
    let prec = q.prec().0;
    let aq = ap::abs(q);
    if aq >= 1 {
        return invalid("Ψ needs |q| < 1");
    }
    if q.is_zero() {
        return Ok(Complex::new(prec));
    }
    let tau = Complex::with_val(prec + 32, q.ln_ref()) / ap::pi_i(prec + 32) / 2u32;
    psi_eval_tau(sd, &Complex::with_val(prec, tau), tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_values() {
        assert_eq!(a_coeff(0, 4), 1);
        assert_eq!(a_coeff(7, 3), -1);
        assert_eq!(a_coeff(2, 5), -6);
    }

    #[test]
    fn vp_small() {
        assert_eq!(vp_constant_term(0, 2), 1);
        assert_eq!(vp_constant_term(1, 1), -1);
        assert_eq!(vp_constant_term(-1, 3), Rational::from((-1, 2)));
        assert_eq!(vp_constant_term(1, 3), Rational::from((1, 2)));
    }

    #[test]
    fn zhat_is_signed_psi_235() {
        let sd = SeifertData::new(&[2, 3, 5]).unwrap();
        let rep = verify_zhat_psi(&sd, &Rational::from(20)).unwrap();
        assert_eq!(rep.sign, Some(-1));
        assert_eq!(rep.delta, Rational::from((181, 120)));
        assert_eq!(rep.psi.leading(), Some((Rational::from((1, 120)), Rational::from(-1))));
    }
}
