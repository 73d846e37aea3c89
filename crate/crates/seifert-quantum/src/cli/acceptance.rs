//! The thirteen acceptance criteria, each reduced to a handful of measured
//! numbers and a pass flag.

use crate::arith::{ap, bernoulli_polynomial, crt_solve, dedekind_sum, gcd, laurent_residue, KPoly, LaurentPolySeries};
use crate::chern_simons::{construct_representation, cs_value, enumerate_l, enumerate_w, labels_from_traces};
use crate::error::Result;
use crate::qseries::{verify_zhat_psi, zhat_shifted};
use crate::radial::{mean_value, r_zero, radial_limit_check};
use crate::resurgence::{
    borel_expansion_numeric, check_poles_equal_cs, formal_borel, laplace_borel, ohtsuki_coefficients, ohtsuki_formal_terms,
    pole_set, probe_pole,
};
use crate::seifert::SeifertData;
use crate::wrt::{eval_phases, generating_function, integral_part, phase_polynomials, residue_operator, residue_part};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::ops::Pow;
use rug::{Complex, Integer, Rational};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

pub const MANIFOLDS: [&[i64]; 5] = [&[2, 3, 5], &[2, 3, 7], &[2, 3, 11], &[3, 5, 7], &[2, 3, 5, 7]];

pub const NAMES: [&str; 13] = [
    "zhat equals psi",
    "presentation invariance",
    "borel poles equal cs values",
    "component count and cs injectivity",
    "radial limit",
    "t-expansion order",
    "resummation",
    "r0 equals residue part",
    "borel coefficient match",
    "mean value zero",
    "generating function",
    "representation relations",
    "kernel properties",
];

/// Runtime budgets in seconds.
pub const BUDGETS: [f64; 13] = [60.0, 10.0, 30.0, 5.0, 120.0, 120.0, 60.0, 30.0, 10.0, 10.0, 120.0, 30.0, 5.0];

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub seconds: f64,
    pub within_budget: bool,
    pub metrics: BTreeMap<String, f64>,
    pub detail: String,
}

impl Criterion {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {:<36} {}  {:.1}s  {}",
            self.id,
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.seconds,
            self.detail
        )
    }
}

struct Outcome {
    pass: bool,
    metrics: BTreeMap<String, f64>,
    detail: String,
}

fn metrics(items: &[(&str, f64)]) -> BTreeMap<String, f64> {
    items.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn sd(p: &[i64]) -> Result<SeifertData> {
    SeifertData::new(p)
}

pub fn run(id: usize, prec: u32) -> Result<Criterion> {
    if id == 0 || id > 13 {
        return crate::error::invalid(format!("criterion {id} does not exist"));
    }
    let start = Instant::now();
    let o = match id {
        1 => c1()?,
        2 => c2()?,
        3 => c3(prec)?,
        4 => c4()?,
        5 | 6 => c5_6(id, prec)?,
        7 => c7(prec)?,
        8 => c8(prec)?,
        9 => c9(prec)?,
        10 => c10(prec)?,
        11 => c11(prec)?,
        12 => c12(prec)?,
        _ => c13()?,
    };
    let seconds = start.elapsed().as_secs_f64();
    Ok(Criterion {
        id,
        name: NAMES[id - 1],
        pass: o.pass,
        seconds,
        within_budget: seconds <= BUDGETS[id - 1],
        metrics: o.metrics,
        detail: o.detail,
    })
}

pub fn run_all(prec: u32) -> Vec<Result<Criterion>> {
    (1..=13).map(|i| run(i, prec)).collect()
}

fn c1() -> Result<Outcome> {
    let mut verified = 0;
    let mut negated = 0;
    let mut terms = 0;
    let mut parts = Vec::new();
    for p in MANIFOLDS {
        let r = verify_zhat_psi(&sd(p)?, &Rational::from(50))?;
        terms += r.terms_compared;
        if r.verified {
            verified += 1;
        }
        if r.sign == Some(-1) {
            negated += 1;
        }
        let tag = match r.sign {
            Some(1) => "equal",
            Some(-1) => "negated",
            _ => "differ",
        };
        parts.push(format!("{:?}:{tag}", p));
    }
    Ok(Outcome {
        pass: verified == MANIFOLDS.len(),
        metrics: metrics(&[
            ("verified", verified as f64),
            ("negated", negated as f64),
            ("terms", terms as f64),
        ]),
        detail: parts.join(" "),
    })
}

fn c2() -> Result<Outcome> {
    let a = sd(&[2, 3, 7])?;
    let mut q = a.q_plumb.clone();
    q[1] += a.p[1];
    let b = a.with_q_plumb(q)?;
    let cutoff = Rational::from(50);
    let (za, da) = zhat_shifted(&a, &cutoff)?;
    let (zb, db) = zhat_shifted(&b, &cutoff)?;
    let same = za.terms == zb.terms && da == db && a.q_plumb != b.q_plumb;
    Ok(Outcome {
        pass: same,
        metrics: metrics(&[("terms", za.terms.len() as f64)]),
        detail: format!("q_plumb {:?} vs {:?}, delta {} vs {}", a.q_plumb, b.q_plumb, da, db),
    })
}

fn c3(prec: u32) -> Result<Outcome> {
    let mut all_match = true;
    let mut min_near = f64::INFINITY;
    let mut max_control = 0f64;
    for p in MANIFOLDS {
        let s = sd(p)?;
        all_match &= check_poles_equal_cs(&s, 4 * s.big_p);
        for pole in pole_set(&s, 4 * s.big_p, 64).iter().take(3) {
            let pr = probe_pole(&s, pole.m, 1e-8, prec)?;
            min_near = min_near.min(pr.near);
            max_control = max_control.max(pr.control);
        }
    }
    Ok(Outcome {
        pass: all_match && min_near > 1e6,
        metrics: metrics(&[
            ("min_near", min_near),
            ("max_control", max_control),
            ("sets_match", all_match as u8 as f64),
        ]),
        detail: format!("sets match: {all_match}, min |B| near poles {min_near:.3e}"),
    })
}

fn c4() -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for p in MANIFOLDS.iter().filter(|p| p.len() == 3) {
        let s = sd(p)?;
        let l = enumerate_l(&s.p);
        let expected = (s.p[0] - 1) * (s.p[1] - 1) * (s.p[2] - 1) / 4;
        let values: BTreeSet<_> = l.iter().map(|t| cs_value(t, &s.p)).collect();
        let this = l.len() as i64 == expected && values.len() == l.len() && values == enumerate_w(&s).values;
        ok &= this;
        parts.push(format!("{:?}:{}", p, l.len()));
    }
    Ok(Outcome {
        pass: ok,
        metrics: BTreeMap::new(),
        detail: parts.join(" "),
    })
}

fn c5_6(id: usize, prec: u32) -> Result<Outcome> {
    let s = sd(&[2, 3, 5])?;
    let ts = [1e-3, 1e-4, 1e-5];
    let mut res4 = 0f64;
    let mut extrap = 0f64;
    let mut slope_dev = 0f64;
    let mut corrected = 0f64;
    let mut ratio = (0.0, 0.0);
    let mut slopes = Vec::new();
    for k in [2, 4, 6] {
        let r = radial_limit_check(&s, k, &ts, prec)?;
        res4 = res4.max(r.residuals[1]);
        extrap = extrap.max(r.extrapolation_error);
        corrected = corrected.max(r.corrected_extrapolation_error);
        slope_dev = slope_dev.max((r.slope - 2.0).abs());
        slopes.push(format!("{:.2}", r.slope));
        ratio = ap::to_c64(&r.normalization_ratio);
    }
    if id == 5 {
        Ok(Outcome {
            pass: res4 < 1e-3 && extrap < 1e-6,
            metrics: metrics(&[
                ("residual_t1e-4", res4),
                ("extrapolation_error", extrap),
                ("corrected_extrapolation_error", corrected),
                ("ratio_re", ratio.0),
                ("ratio_im", ratio.1),
            ]),
            detail: format!(
                "|L-z| at 1e-4 {res4:.3e}, extrapolated {extrap:.3e}, limit/z = {:.4}{:+.4}i",
                ratio.0, ratio.1
            ),
        })
    } else {
        Ok(Outcome {
            pass: slope_dev <= 0.3,
            metrics: metrics(&[("max_slope_deviation", slope_dev)]),
            detail: format!("slopes {}", slopes.join(",")),
        })
    }
}

fn c7(prec: u32) -> Result<Outcome> {
    let mut worst = 0f64;
    for p in [&[2i64, 3, 5][..], &[2, 3, 5, 7]] {
        let s = sd(p)?;
        let phases = phase_polynomials(&s, prec)?;
        for k in 3..=10 {
            let z = Complex::with_val(prec, integral_part(&s, k, prec)? + eval_phases(&phases, k, prec));
            let mut rhs = laplace_borel(&s, k, prec)?;
            for ph in &phases {
                rhs += residue_operator(&s, &ph.theta, k, prec)?;
            }
            worst = worst.max(ap::abs_f64(&Complex::with_val(prec, z - rhs)));
        }
    }
    Ok(Outcome {
        pass: worst < 1e-20,
        metrics: metrics(&[("max_residual", worst)]),
        detail: format!("max residual {worst:.3e}"),
    })
}

fn c8(prec: u32) -> Result<Outcome> {
    let s = sd(&[2, 3, 5])?;
    let mut worst = 0f64;
    for k in [2, 4, 6, 8] {
        let d = Complex::with_val(prec, r_zero(&s, k, prec)? - residue_part(&s, k, prec)?);
        worst = worst.max(ap::abs_f64(&d));
    }
    Ok(Outcome {
        pass: worst < 2f64.powi(-100),
        metrics: metrics(&[("max_residual", worst)]),
        detail: format!("max residual {worst:.3e}"),
    })
}

fn c9(prec: u32) -> Result<Outcome> {
    let s = sd(&[2, 3, 5])?;
    let o = ohtsuki_coefficients(&s, 21, prec)?;
    let b = formal_borel(&ohtsuki_formal_terms(&o))?;
    let nb = borel_expansion_numeric(&s, 21, 512, prec)?;
    let mut worst = 0f64;
    // B₀ = 0 since F vanishes to second order; the expansion starts at ζ^{1/2}
    for m in 1..=20 {
        let d = Complex::with_val(prec, &b[m].coeff - &nb[m]);
        worst = worst.max(ap::abs_f64(&d) / ap::abs_f64(&nb[m]));
    }
    Ok(Outcome {
        pass: worst < 2f64.powi(-100),
        metrics: metrics(&[("max_relative_error", worst)]),
        detail: format!("max relative error {worst:.3e}"),
    })
}

fn c10(prec: u32) -> Result<Outcome> {
    let s = sd(&[2, 3, 5])?;
    let mut worst = 0f64;
    for k in [2, 4, 6] {
        for j in 1..=s.n() - 2 {
            worst = worst.max(ap::abs_f64(&mean_value(&s, k, j, prec)?));
        }
    }
    Ok(Outcome {
        pass: worst < 2f64.powi(-100),
        metrics: metrics(&[("max_abs", worst)]),
        detail: format!("max |mean| {worst:.3e}"),
    })
}

fn c11(prec: u32) -> Result<Outcome> {
    let s = sd(&[2, 3, 5])?;
    let g = generating_function(&s, &Complex::with_val(prec, 0.1), 40, prec)?;
    let d = ap::abs_f64(&Complex::with_val(prec, &g.partial_sum - &g.closed_form));
    Ok(Outcome {
        pass: d < 1e-8,
        metrics: metrics(&[("difference", d)]),
        detail: format!("difference {d:.3e}"),
    })
}

fn c12(prec: u32) -> Result<Outcome> {
    let mut worst_bits = f64::INFINITY;
    let mut all_in_w = true;
    let mut count = 0;
    for p in [&[2i64, 3, 5][..], &[2, 3, 7]] {
        let s = sd(p)?;
        let w = enumerate_w(&s).values;
        for l in enumerate_l(&s.p) {
            let rep = construct_representation(&l, &s, prec)?;
            let bits = if rep.residual.is_zero() {
                f64::INFINITY
            } else {
                -rep.residual.to_f64().log2()
            };
            worst_bits = worst_bits.min(bits);
            all_in_w &= w.contains(&cs_value(&labels_from_traces(&rep, &s), &s.p));
            count += 1;
        }
    }
    let need = prec as f64 - 30.0;
    Ok(Outcome {
        pass: worst_bits > need && all_in_w,
        metrics: metrics(&[("min_residual_bits", worst_bits), ("representations", count as f64)]),
        detail: format!("{count} representations, residual below 2^-{worst_bits:.0}, cs in W: {all_in_w}"),
    })
}

fn c13() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut dedekind_ok = true;
    let mut pairs = 0;
    while pairs < 100 {
        let a: i64 = rng.gen_range(1..500);
        let b: i64 = rng.gen_range(1..500);
        if gcd(a, b) != 1 {
            continue;
        }
        pairs += 1;
        let lhs = dedekind_sum(a, b)? + dedekind_sum(b, a)?;
        let rhs = (Rational::from((a, b)) + Rational::from((b, a)) + Rational::from((1, a * b))) / 12u32 - Rational::from((1, 4));
        dedekind_ok &= lhs == rhs;
    }

    let mut bern_ok = true;
    for n in 1..=16usize {
        for x in [Rational::from((1, 3)), Rational::from((-5, 7)), Rational::from(2)] {
            let d = bernoulli_polynomial(n, &(x.clone() + 1u32)) - bernoulli_polynomial(n, &x);
            let e = x.clone().pow(n as i32 - 1) * n as u32;
            bern_ok &= d == e;
        }
    }

    let mut crt_ok = true;
    let pool = [3i64, 4, 5, 7, 11, 13, 17, 19, 23, 29];
    for _ in 0..50 {
        let mut mods: Vec<i64> = Vec::new();
        for &m in &pool {
            if rng.gen_bool(0.5) && mods.iter().all(|&x| gcd(x, m) == 1) {
                mods.push(m);
            }
        }
        if mods.is_empty() {
            mods.push(9);
        }
        let res: Vec<Integer> = mods.iter().map(|&m| Integer::from(rng.gen_range(0..m))).collect();
        let mi: Vec<Integer> = mods.iter().map(|&m| Integer::from(m)).collect();
        let x = crt_solve(&res, &mi)?;
        crt_ok &= res.iter().zip(&mi).all(|(r, m)| Integer::from(&x - r).is_divisible(m));
    }

    let prec = 128;
    let c = |x: i64| Complex::with_val(prec, x);
    let mut laurent_ok = true;
    let s = LaurentPolySeries::from_constants(-1, &[c(1), c(0)]);
    laurent_ok &= laurent_residue(&s)?.coeff(0) == c(1);
    let s = LaurentPolySeries::from_constants(-2, &[c(1), c(2), c(5)]);
    laurent_ok &= laurent_residue(&s)?.coeff(0) == c(2);
    // (1/x)(1 + kx): residue 1
    let a = LaurentPolySeries::from_constants(-1, &[c(1), c(0), c(0)]);
    let b = LaurentPolySeries::new(
        0,
        vec![KPoly::constant(c(1)), KPoly::monomial(c(1), 1), KPoly::zero(prec)],
        prec,
    );
    laurent_ok &= laurent_residue(&a.mul(&b))?.coeff(0) == c(1);
    // x^{-2}·(1 + kx): residue k
    let a = LaurentPolySeries::from_constants(-2, &[c(1), c(0), c(0)]);
    let r = laurent_residue(&a.mul(&b))?;
    laurent_ok &= r.coeff(1) == c(1) && r.coeff(0) == c(0);

    let pass = dedekind_ok && bern_ok && crt_ok && laurent_ok;
    Ok(Outcome {
        pass,
        metrics: BTreeMap::new(),
        detail: format!("dedekind {dedekind_ok}, bernoulli {bern_ok}, crt {crt_ok}, laurent {laurent_ok}"),
    })
}
