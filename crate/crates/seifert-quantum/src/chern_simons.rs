//! Flat SL(2,ℂ) connections: the label set L(p₁,…,pₙ), Chern–Simons values,
//! the set W and its phase fibers, and explicit representations.

use crate::arith::{ap, RationalModZ};
use crate::error::{invalid, Error, Result};
use crate::seifert::SeifertData;
use rug::float::Constant;
use rug::{Complex, Float, Rational};
use std::collections::{BTreeMap, BTreeSet};

pub type LTuple = Vec<i64>;

fn active(l: &[i64], p: &[i64]) -> Vec<usize> {
    (0..l.len())
        .filter(|&j| if j == 0 { l[0] != 0 && l[0] != p[0] } else { l[j] != 0 })
        .collect()
}

/// All l with 0 ≤ l₁ ≤ p₁, 0 ≤ lⱼ ≤ (pⱼ−1)/2 and at least three active indices,
/// in lexicographic order. Multiplicities are taken in `sd.p` order.
pub fn enumerate_l(p: &[i64]) -> Vec<LTuple> {
    let n = p.len();
    let bound = |j: usize| if j == 0 { p[0] } else { (p[j] - 1) / 2 };
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        if active(&cur, p).len() >= 3 {
            out.push(cur.clone());
        }
        let mut j = n;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if cur[j] < bound(j) {
                cur[j] += 1;
                for c in cur.iter_mut().skip(j + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

/// ξ = P(l₁/p₁ + Σ_{j≥2} 2lⱼ/pⱼ), an integer.
pub fn xi(l: &[i64], p: &[i64]) -> i64 {
    let big_p: i64 = p.iter().product();
    let mut s = l[0] * (big_p / p[0]);
    for j in 1..p.len() {
        s += 2 * l[j] * (big_p / p[j]);
    }
    s
}

/// −(P/4)(l₁/p₁ + Σ 2lⱼ/pⱼ)² mod ℤ.
pub fn cs_value(l: &[i64], p: &[i64]) -> RationalModZ {
    let big_p: i64 = p.iter().product();
    let mut s = Rational::from((l[0], p[0]));
    for j in 1..p.len() {
        s += Rational::from((2 * l[j], p[j]));
    }
    let v = -(Rational::from(s.square_ref()) * big_p) / 4u32;
    RationalModZ::new(v)
}

/// [−m²/4P].
pub fn theta_of(m: i64, big_p: i64) -> RationalModZ {
    RationalModZ::new(Rational::from((-(m * m), 4 * big_p)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CsValueSet {
    pub values: BTreeSet<RationalModZ>,
    /// θ ↦ T(θ) = {m ∈ 1..2P−1 : [−m²/4P] = θ}.
    pub fibers: BTreeMap<RationalModZ, Vec<i64>>,
}

pub fn admissible(m: i64, sd: &SeifertData) -> bool {
    sd.divisor_count(m) <= sd.n() - 3
}

/// W(p) = {[−m²/4P] : m divisible by at most n−3 of the pⱼ}.
pub fn enumerate_w(sd: &SeifertData) -> CsValueSet {
    let two_p = 2 * sd.big_p;
    let mut values = BTreeSet::new();
    for m in 0..two_p {
        if admissible(m, sd) {
            values.insert(theta_of(m, sd.big_p));
        }
    }
    let fibers = values.iter().map(|t| (t.clone(), fiber(sd, t))).collect();
    CsValueSet { values, fibers }
}

/// T(θ) over 1..2P−1.
pub fn fiber(sd: &SeifertData, theta: &RationalModZ) -> Vec<i64> {
    (1..2 * sd.big_p).filter(|&m| theta_of(m, sd.big_p) == *theta).collect()
}

/// All phases [−m²/4P], m ∈ 1..2P−1, with their fibers.
pub fn all_fibers(sd: &SeifertData) -> BTreeMap<RationalModZ, Vec<i64>> {
    let mut out: BTreeMap<RationalModZ, Vec<i64>> = BTreeMap::new();
    for m in 1..2 * sd.big_p {
        out.entry(theta_of(m, sd.big_p)).or_default().push(m);
    }
    out
}

/// l ∈ L with ξ(l)² ≡ y² mod 4P. The odd coordinates come from
/// lⱼ ≡ ±y(2P/pⱼ)⁻¹ mod pⱼ, the first by a scan over 0..=p₁.
pub fn solve_congruence(y: i64, sd: &SeifertData) -> Result<LTuple> {
    if !admissible(y, sd) {
        return invalid(format!("{y} is divisible by more than n-3 of the multiplicities"));
    }
    let p = &sd.p;
    let big_p = sd.big_p;
    let n = p.len();
    let mut l = vec![0i64; n];
    for j in 1..n {
        let pj = p[j];
        let c = (2 * (big_p / pj)).rem_euclid(pj);
        let inv = crate::arith::mod_inverse(&rug::Integer::from(c), &rug::Integer::from(pj))
            .expect("coprime")
            .to_i64()
            .expect("small");
        let r = (y.rem_euclid(pj) * inv).rem_euclid(pj);
        l[j] = r.min(pj - r);
    }
    let target = (y as i128 * y as i128).rem_euclid(4 * big_p as i128);
    for l1 in 0..=p[0] {
        l[0] = l1;
        let x = xi(&l, p) as i128;
        if (x * x).rem_euclid(4 * big_p as i128) == target && active(&l, p).len() >= 3 {
            return Ok(l);
        }
    }
    Err(Error::Degenerate(format!("no label found for y = {y}")))
}

pub type Mat = [Complex; 4];

fn mat(prec: u32, a: [Complex; 4]) -> Mat {
    a.map(|x| Complex::with_val(prec, x))
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let prec = a[0].prec().0;
    let e = |i: usize, j: usize| Complex::with_val(prec, &a[2 * i] * &b[j]) + Complex::with_val(prec, &a[2 * i + 1] * &b[2 + j]);
    [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
}

pub fn mat_det(a: &Mat) -> Complex {
    let prec = a[0].prec().0;
    Complex::with_val(prec, &a[0] * &a[3]) - Complex::with_val(prec, &a[1] * &a[2])
}

fn mat_inv(a: &Mat) -> Mat {
    let d = mat_det(a);
    let prec = a[0].prec().0;
    [
        Complex::with_val(prec, &a[3] / &d),
        Complex::with_val(prec, -&a[1]) / &d,
        Complex::with_val(prec, -&a[2]) / &d,
        Complex::with_val(prec, &a[0] / &d),
    ]
}

fn mat_id(prec: u32) -> Mat {
    mat(prec, [ap::one(prec), ap::zero(prec), ap::zero(prec), ap::one(prec)])
}

pub fn mat_pow(a: &Mat, e: i64) -> Mat {
    let prec = a[0].prec().0;
    let (mut base, mut k) = if e < 0 { (mat_inv(a), -e) } else { (a.clone(), e) };
    let mut acc = mat_id(prec);
    while k > 0 {
        if k & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        base = mat_mul(&base, &base);
        k >>= 1;
    }
    acc
}

fn mat_dist(a: &Mat, b: &Mat) -> Float {
    let prec = a[0].prec().0;
    let mut m = Float::new(prec);
    for i in 0..4 {
        let d = ap::abs(&Complex::with_val(prec, &a[i] - &b[i]));
        if d > m {
            m = d;
        }
    }
    m
}

fn diag(prec: u32, angle: &Float) -> Mat {
    let e = Complex::with_val(prec, (Float::new(prec), angle.clone())).exp();
    let ei = Complex::with_val(prec, e.recip_ref());
    mat(prec, [e, ap::zero(prec), ap::zero(prec), ei])
}

pub fn mat_trace(a: &Mat) -> Complex {
    Complex::with_val(a[0].prec().0, &a[0] + &a[3])
}

#[derive(Clone, Debug)]
pub struct RepMatrices {
    pub h: Mat,
    /// Images of x₁,…,xₙ in `sd.p` order.
    pub x: Vec<Mat>,
    /// Largest entrywise defect over all relations and determinants.
    pub residual: Float,
}

/// Residual of the relations x₁⋯xₙ = 1, xⱼ^{pⱼ} = h^{qⱼ}, [xⱼ,h] = 1, det = 1.
pub fn relation_residual(h: &Mat, x: &[Mat], sd: &SeifertData) -> Float {
    let prec = h[0].prec().0;
    let id = mat_id(prec);
    let mut worst = Float::new(prec);
    let mut upd = |d: Float| {
        if d > worst {
            worst = d;
        }
    };
    let mut prod = id.clone();
    for xj in x {
        prod = mat_mul(&prod, xj);
    }
    upd(mat_dist(&prod, &id));
    for (j, xj) in x.iter().enumerate() {
        upd(mat_dist(&mat_pow(xj, sd.p[j]), &mat_pow(h, sd.q_intro[j])));
        upd(mat_dist(&mat_mul(xj, h), &mat_mul(h, xj)));
        upd(ap::abs(&(mat_det(xj) - 1u32)));
    }
    upd(ap::abs(&(mat_det(h) - 1u32)));
    worst
}

/// Eigenvector of a for eigenvalue lam.
fn eigvec(a: &Mat, lam: &Complex, tiny: &Float) -> (Complex, Complex) {
    let prec = a[0].prec().0;
    if ap::abs(&a[1]) > *tiny {
        (a[1].clone(), Complex::with_val(prec, lam - &a[0]))
    } else if ap::abs(&a[2]) > *tiny {
        (Complex::with_val(prec, lam - &a[3]), a[2].clone())
    } else if ap::abs(&Complex::with_val(prec, &a[0] - lam)) < ap::abs(&Complex::with_val(prec, &a[3] - lam)) {
        (ap::one(prec), ap::zero(prec))
    } else {
        (ap::zero(prec), ap::one(prec))
    }
}

/// ρ_l: diagonal images except at two active indices j₂ < j₃, where
/// conjugators are solved for so that the product relation holds.
pub fn construct_representation(l: &[i64], sd: &SeifertData, prec: u32) -> Result<RepMatrices> {
    let p = &sd.p;
    let n = p.len();
    let act = active(l, p);
    if l.len() != n || act.len() < 3 {
        return invalid("label is not in L(p)");
    }
    let wp = prec + 64;
    let pi = Float::with_val(wp, Constant::Pi);
    let angles: Vec<Float> = (0..n)
        .map(|j| {
            if j == 0 {
                Float::with_val(wp, &pi * l[0]) / p[0]
            } else {
                Float::with_val(wp, &pi * (2 * l[j])) / p[j]
            }
        })
        .collect();
    let h = if l[0] % 2 == 0 {
        mat_id(wp)
    } else {
        let m1 = Complex::with_val(wp, -1);
        mat(wp, [m1.clone(), ap::zero(wp), ap::zero(wp), m1])
    };
    let tiny = ap::two_pow_neg(wp, (prec / 2) as i32);

    // candidate (j₂, j₃, sign flips of the remaining diagonal blocks)
    for a2 in 0..act.len() {
        for a3 in a2 + 1..act.len() {
            let (j2, j3) = (act[a2], act[a3]);
            let others: Vec<usize> = (0..n).filter(|&j| j != j2 && j != j3).collect();
            for flips in 0u32..(1 << others.len()) {
                let mut d: Vec<Mat> = Vec::with_capacity(n);
                for j in 0..n {
                    let mut ang = angles[j].clone();
                    if let Some(pos) = others.iter().position(|&o| o == j) {
                        if flips >> pos & 1 == 1 {
                            ang = -ang;
                        }
                    }
                    d.push(diag(wp, &ang));
                }
                // E = (U V W)⁻¹ = diag(e^{iβ}, e^{−iβ})
                let mut beta = Float::new(wp);
                for &j in &others {
                    let s = others.iter().position(|&o| o == j).is_some_and(|pos| flips >> pos & 1 == 1);
                    if s {
                        beta += &angles[j];
                    } else {
                        beta -= &angles[j];
                    }
                }
                let a = angles[j2].clone();
                let c2 = |x: Float| Float::with_val(wp, x.cos()) * 2u32;
                let cm = c2(Float::with_val(wp, &beta - &a));
                let cp = c2(Float::with_val(wp, &beta + &a));
                let det = Float::with_val(wp, &cm - &cp);
                if Float::with_val(wp, det.abs_ref()) < tiny {
                    continue;
                }
                let target = c2(angles[j3].clone());
                let xv = Float::with_val(wp, &target - &cp) / &det;
                let yv = Float::with_val(wp, 1 - &xv);
                // Q₂ = [[1, 1], [−Y, X]], det = X + Y = 1
                let q2 = mat(wp, [ap::one(wp), ap::one(wp), ap::real(wp, &-yv), ap::real(wp, &xv)]);
                let a2m = mat_mul(&mat_mul(&q2, &d[j2]), &mat_inv(&q2));
                let mut u = mat_id(wp);
                for j in 0..j2 {
                    u = mat_mul(&u, &d[j]);
                }
                let mut v = mat_id(wp);
                for j in j2 + 1..j3 {
                    v = mat_mul(&v, &d[j]);
                }
                let mut w = mat_id(wp);
                for j in j3 + 1..n {
                    w = mat_mul(&w, &d[j]);
                }
                // A₃ = V⁻¹ A₂⁻¹ U⁻¹ W⁻¹
                let a3m = mat_mul(&mat_mul(&mat_mul(&mat_inv(&v), &mat_inv(&a2m)), &mat_inv(&u)), &mat_inv(&w));
                let tr = mat_trace(&a3m);
                let two = Complex::with_val(wp, 2);
                if ap::abs(&Complex::with_val(wp, &tr - &two)) < tiny || ap::abs(&Complex::with_val(wp, &tr + &two)) < tiny {
                    return Err(Error::Degenerate("residual product has trace ±2".into()));
                }
                let lam1 = Complex::with_val(wp, (Float::new(wp), angles[j3].clone())).exp();
                let lam2 = Complex::with_val(wp, lam1.recip_ref());
                let (e11, e21) = eigvec(&a3m, &lam1, &tiny);
                let (e12, e22) = eigvec(&a3m, &lam2, &tiny);
                let mut q3 = [e11, e12, e21, e22];
                let dq = mat_det(&q3);
                if ap::abs(&dq) < tiny {
                    continue;
                }
                let s = Complex::with_val(wp, dq.sqrt_ref());
                for e in q3.iter_mut() {
                    *e /= &s;
                }
                let x3 = mat_mul(&mat_mul(&q3, &d[j3]), &mat_inv(&q3));
                let mut x: Vec<Mat> = d.clone();
                x[j2] = a2m;
                x[j3] = x3;
                let x: Vec<Mat> = x.into_iter().map(|m| m.map(|e| Complex::with_val(prec, e))).collect();
                let h_out = h.clone().map(|e| Complex::with_val(prec, e));
                let residual = relation_residual(&h_out, &x, sd);
                return Ok(RepMatrices { h: h_out, x, residual });
            }
        }
    }
    Err(Error::Degenerate("no non-degenerate choice of conjugated pair".into()))
}

/// Recover l from traces: tr x₁ = 2cos(πl₁/p₁), tr xⱼ = 2cos(2πlⱼ/pⱼ).
pub fn labels_from_traces(rep: &RepMatrices, sd: &SeifertData) -> LTuple {
    let prec = rep.h[0].prec().0;
    let pi = ap::pi(prec);
    rep.x
        .iter()
        .enumerate()
        .map(|(j, m)| {
            let t = Float::with_val(prec, mat_trace(m).real() / 2u32).clamp(&-1, &1);
            let ang = Float::with_val(prec, t.acos()) / &pi;
            let f = if j == 0 { sd.p[0] } else { sd.p[j] };
            let v = if j == 0 { ang * f } else { ang * f / 2u32 };
            v.round().to_f64() as i64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l_235() {
        assert_eq!(enumerate_l(&[2, 3, 5]), vec![vec![1, 1, 1], vec![1, 1, 2]]);
    }

    #[test]
    fn cs_235() {
        let p = [2, 3, 5];
        assert_eq!(cs_value(&[1, 1, 1], &p), RationalModZ::from_frac(-49, 120));
        assert_eq!(cs_value(&[1, 1, 2], &p), RationalModZ::from_frac(-1, 120));
        let sd = SeifertData::new(&p).unwrap();
        let w = enumerate_w(&sd);
        let expect: BTreeSet<_> = [RationalModZ::from_frac(-1, 120), RationalModZ::from_frac(-49, 120)]
            .into_iter()
            .collect();
        assert_eq!(w.values, expect);
        assert!(solve_congruence(30, &sd).is_err());
    }

    #[test]
    fn representation_235() {
        let sd = SeifertData::new(&[2, 3, 5]).unwrap();
        let rep = construct_representation(&[1, 1, 1], &sd, 256).unwrap();
        assert!(rep.residual < ap::two_pow_neg(256, 256 - 30), "{}", rep.residual);
        assert_eq!(labels_from_traces(&rep, &sd), vec![1, 1, 1]);
    }
}
