//! Seifert data Σ(p₁,…,pₙ), surgery coefficients, constants, and the
//! functions F, g, G.

use crate::arith::{self, ap, dedekind_sum, gcd, mod_inverse, series_pow_neg, PowerSeriesQ};
use crate::error::{invalid, Error, Result};
use rug::{Complex, Float, Integer, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct SeifertData {
    /// Multiplicities, reordered so that an even one (if any) comes first.
    pub p: Vec<i64>,
    /// `perm[i]` is the position of `p[i]` in the user's input.
    pub perm: Vec<usize>,
    pub big_p: i64,
    /// Σ q/p = 1/P, q₁ odd, the rest even.
    pub q_intro: Vec<i64>,
    /// p ≤ q < 2p, with p₀ = −1/P − Σ q/p a negative integer.
    pub q_plumb: Vec<i64>,
    pub p0: i64,
    pub euler: Rational,
}

#[derive(Clone, Debug)]
pub struct ConstantsBundle {
    pub varsigma: Complex,
    pub phi: Rational,
    pub kappa: Complex,
    pub lambda: Complex,
    pub mu: Complex,
    pub delta_small: Rational,
    pub m0: i64,
    pub casson_walker: Rational,
}

impl SeifertData {
    pub fn new(p_user: &[i64]) -> Result<Self> {
        let n = p_user.len();
        if n < 3 {
            return invalid(format!("need at least three exceptional fibers, got {n}"));
        }
        for &pj in p_user {
            if pj < 2 {
                return invalid(format!("multiplicities must be at least 2, got {pj}"));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if gcd(p_user[i], p_user[j]) != 1 {
                    return invalid(format!(
                        "multiplicities must be pairwise coprime: gcd({}, {}) = {}",
                        p_user[i],
                        p_user[j],
                        gcd(p_user[i], p_user[j])
                    ));
                }
            }
        }
        let mut big_p: i64 = 1;
        for &pj in p_user {
            big_p = big_p
                .checked_mul(pj)
                .filter(|v| *v <= 1 << 40)
                .ok_or_else(|| Error::Invalid("product of multiplicities too large".into()))?;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        if let Some(e) = p_user.iter().position(|x| x % 2 == 0) {
            perm.remove(e);
            perm.insert(0, e);
        }
        let p: Vec<i64> = perm.iter().map(|&i| p_user[i]).collect();

        let mut q = Vec::with_capacity(n);
        let mut num = Integer::new();
        for &pj in &p {
            let cof = Integer::from(big_p / pj);
            let inv = mod_inverse(&cof, &Integer::from(pj)).expect("coprime");
            num += Integer::from(&inv * &cof);
            q.push(inv.to_i64().expect("small"));
        }
        // Σ q_j P/p_j ≡ 1 mod P; absorb the defect into q₁
        let defect = (num - 1u32) / big_p;
        q[0] -= defect.to_i64().expect("small") * p[0];
        let q_intro = parity_normalize(&q, &p)?;

        let q_plumb: Vec<i64> = p
            .iter()
            .map(|&pj| {
                let cof = Integer::from(big_p / pj);
                let inv = mod_inverse(&cof, &Integer::from(pj))
                    .expect("coprime")
                    .to_i64()
                    .expect("small");
                (pj - inv).rem_euclid(pj) + pj
            })
            .collect();
        let mut sd = SeifertData {
            p,
            perm,
            big_p,
            q_intro,
            q_plumb: Vec::new(),
            p0: 0,
            euler: Rational::from((-1, big_p)),
        };
        sd.set_q_plumb(q_plumb)?;
        Ok(sd)
    }

    /// Replace the plumbing coefficients by another admissible choice.
    pub fn with_q_plumb(&self, q: Vec<i64>) -> Result<Self> {
        let mut sd = self.clone();
        sd.set_q_plumb(q)?;
        Ok(sd)
    }

    fn set_q_plumb(&mut self, q: Vec<i64>) -> Result<()> {
        if q.len() != self.n() {
            return invalid("q_plumb length differs from the number of fibers");
        }
        let mut s = Rational::new();
        for (&qj, &pj) in q.iter().zip(&self.p) {
            if qj < pj || gcd(qj, pj) != 1 {
                return invalid(format!("plumbing coefficient {qj} is not admissible for p = {pj}"));
            }
            s += Rational::from((qj, pj));
        }
        let p0 = Rational::from((-1, self.big_p)) - s;
        if *p0.denom() != 1 || p0 >= 0 {
            return invalid(format!("p0 = {p0} is not a negative integer"));
        }
        self.p0 = p0.numer().to_i64().expect("small");
        self.q_plumb = q;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    /// Multiplicities in the order the user gave them.
    pub fn p_user(&self) -> Vec<i64> {
        let mut out = vec![0; self.n()];
        for (i, &src) in self.perm.iter().enumerate() {
            out[src] = self.p[i];
        }
        out
    }

    pub fn sum_inv_p(&self) -> Rational {
        self.p
            .iter()
            .map(|&pj| Rational::from((1, pj)))
            .fold(Rational::new(), |a, b| a + b)
    }

    /// m₀ = P(n − 2 − Σ 1/pⱼ).
    pub fn m0(&self) -> i64 {
        let r = (Rational::from(self.n() as i64 - 2) - self.sum_inv_p()) * self.big_p;
        debug_assert_eq!(*r.denom(), 1);
        r.numer().to_i64().expect("small")
    }

    /// Number of pⱼ dividing m.
    pub fn divisor_count(&self, m: i64) -> usize {
        self.p.iter().filter(|&&pj| m % pj == 0).count()
    }

    /// Order of the pole of F at 2πim (≤ 0 means regular).
    pub fn pole_order(&self, m: i64) -> i64 {
        if m == 0 {
            return -2;
        }
        self.n() as i64 - 2 - self.divisor_count(m) as i64
    }

    /// φ = 3 − 1/P + 12 Σ S(P/pⱼ, pⱼ).
    pub fn phi(&self) -> Rational {
        let mut s = Rational::new();
        for &pj in &self.p {
            s += dedekind_sum(self.big_p / pj, pj).expect("coprime");
        }
        Rational::from(3) - Rational::from((1, self.big_p)) + s * 12u32
    }

    pub fn kappa(&self, prec: u32) -> Complex {
        let mut k = ap::pi_i(prec) * 2u32 * self.big_p;
        k.sqrt_mut();
        k
    }

    pub fn lambda(&self, prec: u32) -> Complex {
        let s = Float::with_val(prec, 2 * self.big_p).sqrt().recip() / 2u32;
        let sign = if self.n().is_multiple_of(2) { 1 } else { -1 };
        Complex::with_val(prec, (0, s * sign))
    }

    pub fn varsigma(&self, prec: u32) -> Complex {
        let r = Float::with_val(prec, self.big_p).sqrt() / 4u32;
        -(ap::exp_i_pi(prec, &Rational::from((-3, 4))) * r)
    }

    pub fn constants(&self, delta: &Rational, prec: u32) -> ConstantsBundle {
        let phi = self.phi();
        let varsigma = self.varsigma(prec);
        let lambda = self.lambda(prec);
        let mu = (Complex::with_val(prec, &lambda * &varsigma) * 2u32).recip();
        let n = self.n() as i64;
        let inv_sq = self
            .p
            .iter()
            .map(|&pj| Rational::from((1, pj * pj)))
            .fold(Rational::new(), |a, b| a + b);
        let cw = -(&phi + (Rational::from(n - 2) - inv_sq) * self.big_p) / 24u32;
        ConstantsBundle {
            varsigma,
            delta_small: (delta - Rational::from(&phi / 4u32)),
            phi,
            kappa: self.kappa(prec),
            lambda,
            mu,
            m0: self.m0(),
            casson_walker: cw,
        }
    }

    /// F(y) = ¼ sinh(y/2)^{2−n} Π sinh(y/2pⱼ).
    pub fn eval_f(&self, y: &Complex) -> Result<Complex> {
        let prec = y.prec().0;
        let wp = prec + 32;
        let two_pi = ap::pi(wp) * 2u32;
        let m = Float::with_val(wp, y.imag() / &two_pi).round().to_f64() as i64;
        if self.pole_order(m) > 0 {
            let c = Complex::with_val(wp, (0, Float::with_val(wp, &two_pi * m)));
            let d = ap::abs(&Complex::with_val(wp, y - &c));
            let scale = Float::with_val(wp, &two_pi * m.abs());
            if d <= ap::two_pow_neg(wp, prec as i32 - 16) * scale {
                return Err(Error::Pole {
                    what: "F",
                    at: format!("2πi·{m}"),
                });
            }
        }
        let yw = Complex::with_val(wp, y);
        let half = Complex::with_val(wp, &yw / 2u32).sinh();
        let mut acc = ap::powi(&half, 2 - self.n() as i64);
        for &pj in &self.p {
            acc *= Complex::with_val(wp, &yw / (2 * pj) as u32).sinh();
        }
        Ok(Complex::with_val(prec, acc / 4u32))
    }

    /// g(y) = iy²/(8πP).
    pub fn eval_g(&self, y: &Complex) -> Complex {
        let prec = y.prec().0;
        let y2 = Complex::with_val(prec, y.square_ref());
        let den = ap::pi(prec) * 8u32 * self.big_p;
        Complex::with_val(prec, y2 * ap::i_unit(prec)) / den
    }

    /// G(z) = Π(z^{P/pⱼ} − z^{−P/pⱼ})·(z^P − z^{−P})^{2−n}.
    pub fn eval_big_g(&self, z: &Complex) -> Result<Complex> {
        let prec = z.prec().0;
        let wp = prec + 32;
        if z.is_zero() {
            return Err(Error::Pole {
                what: "G",
                at: "0".into(),
            });
        }
        let zw = Complex::with_val(wp, z);
        let diff = |e: i64| {
            let a = ap::powi(&zw, e);
            let b = Complex::with_val(wp, a.recip_ref());
            a - b
        };
        let d = diff(self.big_p);
        let zp = ap::powi(&zw, self.big_p);
        if ap::abs(&d) <= ap::two_pow_neg(wp, prec as i32 - 16) * ap::abs(&zp) {
            // z^{2P} = 1: pole unless enough numerator factors vanish
            let arg = Float::with_val(wp, zw.arg_ref()) / ap::pi(wp) * self.big_p as u32;
            let m = arg.round().to_f64() as i64;
            if self.pole_order(m) > 0 {
                return Err(Error::Pole {
                    what: "G",
                    at: format!("exp(πi·{m}/{})", self.big_p),
                });
            }
        }
        let mut acc = ap::powi(&d, 2 - self.n() as i64);
        for &pj in &self.p {
            acc *= diff(self.big_p / pj);
        }
        Ok(Complex::with_val(prec, acc))
    }

    /// Exact Taylor coefficients of F at 0, orders y⁰..y^{N−1}.
    pub fn f_taylor(&self, order: usize) -> Result<PowerSeriesQ> {
        if order < 2 {
            return invalid("F_taylor needs order at least 2");
        }
        let inner = order - 2;
        if inner == 0 {
            return Ok(PowerSeriesQ::new(vec![Rational::new(); order]));
        }
        // F(y) = y²/(16P) · S(y/2)^{2−n} · Π S(y/2pⱼ), S(x) = sinh(x)/x
        let s = PowerSeriesQ::sinhc(inner);
        let mut acc = series_pow_neg(&s.scale_var(&Rational::from((1, 2))), 2 - self.n() as i32)?;
        if self.n() == 2 {
            acc = PowerSeriesQ::one(inner);
        }
        for &pj in &self.p {
            acc = acc.mul(&s.scale_var(&Rational::from((1, 2 * pj))));
        }
        let c = Rational::from((1, 16 * self.big_p));
        let mut coeffs = vec![Rational::new(), Rational::new()];
        coeffs.extend(acc.coeffs.iter().map(|a| Rational::from(a * &c)));
        Ok(PowerSeriesQ::new(coeffs))
    }
}

/// Move to q₁ odd and q₂,…,qₙ even while keeping Σqⱼ/pⱼ: each odd qⱼ (j ≥ 2)
/// gets qⱼ ↦ qⱼ + pⱼ, balanced by q₁ ↦ q₁ − p₁.
pub fn parity_normalize(q: &[i64], p: &[i64]) -> Result<Vec<i64>> {
    if q.len() != p.len() || p.is_empty() {
        return invalid("q and p must have the same nonzero length");
    }
    if p.iter().filter(|x| *x % 2 == 0).count() > 1 {
        return invalid("at most one multiplicity may be even");
    }
    if p[1..].iter().any(|x| x % 2 == 0) {
        return invalid("an even multiplicity must come first");
    }
    let mut out = q.to_vec();
    for j in 1..p.len() {
        if out[j] % 2 != 0 {
            out[j] += p[j];
            out[0] -= p[0];
        }
    }
    Ok(out)
}

/// Σ qⱼ/pⱼ as an exact rational.
pub fn coefficient_sum(q: &[i64], p: &[i64]) -> Rational {
    q.iter()
        .zip(p)
        .map(|(&a, &b)| Rational::from((a, b)))
        .fold(Rational::new(), |s, x| s + x)
}

/// Binomial helper re-exported for downstream modules.
pub fn binom(n: i64, k: i64) -> Integer {
    arith::binomial(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_235() {
        let sd = SeifertData::new(&[2, 3, 5]).unwrap();
        assert_eq!(sd.big_p, 30);
        assert_eq!(coefficient_sum(&sd.q_intro, &sd.p), Rational::from((1, 30)));
        assert!(sd.q_intro[0] % 2 != 0 && sd.q_intro[1] % 2 == 0 && sd.q_intro[2] % 2 == 0);
        assert!(sd.p0 <= -3);
        assert_eq!(coefficient_sum(&sd.q_plumb, &sd.p) + sd.p0, Rational::from((-1, 30)));
        assert_eq!(sd.m0(), -1);
    }

    #[test]
    fn even_fiber_moves_first() {
        let sd = SeifertData::new(&[3, 5, 2]).unwrap();
        assert_eq!(sd.p, vec![2, 3, 5]);
        assert_eq!(sd.p_user(), vec![3, 5, 2]);
    }

    #[test]
    fn rejects_bad_input() {
        let e = SeifertData::new(&[2, 4, 5]).unwrap_err();
        assert!(format!("{e}").contains("gcd(2, 4)"));
        assert!(SeifertData::new(&[2, 3]).is_err());
    }

    #[test]
    fn taylor_leading_term() {
        let sd = SeifertData::new(&[2, 3, 5]).unwrap();
        let t = sd.f_taylor(8).unwrap();
        assert_eq!(t.coeff(2), Rational::from((1, 480)));
        for i in (1..8).step_by(2) {
            assert_eq!(t.coeff(i), 0);
        }
    }
}
