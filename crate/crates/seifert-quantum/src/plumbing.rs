//! Star-shaped plumbing graphs for Σ(p₁,…,pₙ) and their adjacency data.

use crate::arith::gcd;
use crate::error::{invalid, Error, Result};
use crate::seifert::SeifertData;
use rug::{Integer, Rational};
use serde::Serialize;

/// q/p = k₁ − 1/(k₂ − 1/(… − 1/k_s)), every kᵢ ≥ 2.
pub fn neg_cont_fraction(q: i64, p: i64) -> Result<Vec<i64>> {
    if p < 1 || q <= p && !(p == 1 && q == 1) {
        return invalid(format!("continued fraction needs q > p >= 1, got q={q}, p={p}"));
    }
    if gcd(p, q) != 1 {
        return invalid(format!("continued fraction needs gcd(p,q)=1, got q={q}, p={p}"));
    }
    let (mut a, mut b) = (q, p);
    let mut out = Vec::new();
    while b != 0 {
        let k = (a + b - 1).div_euclid(b);
        out.push(k);
        let r = k * b - a;
        a = b;
        b = r;
    }
    debug_assert_eq!(reconstruct(&out), Rational::from((q, p)));
    Ok(out)
}

/// Back-substitution of a negative continued fraction.
pub fn reconstruct(ks: &[i64]) -> Rational {
    let mut it = ks.iter().rev();
    let mut acc = Rational::from(*it.next().unwrap_or(&0));
    for &k in it {
        acc = Rational::from(k) - acc.recip();
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlumbingGraph {
    /// Center first, then each arm from the center outward.
    pub weights: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
    pub arm_lengths: Vec<usize>,
}

impl PlumbingGraph {
    pub fn s(&self) -> usize {
        self.weights.len()
    }

    pub fn arm_start(&self, j: usize) -> usize {
        1 + self.arm_lengths[..j].iter().sum::<usize>()
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut d = vec![0; self.s()];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let s = self.s();
        let mut m = vec![vec![0i64; s]; s];
        for (i, &w) in self.weights.iter().enumerate() {
            m[i][i] = w;
        }
        for &(a, b) in &self.edges {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    /// The graph with the terminal vertex of arm j removed.
    pub fn without_terminal(&self, j: usize) -> PlumbingGraph {
        let mut arms: Vec<Vec<i64>> = (0..self.arm_lengths.len())
            .map(|a| {
                let st = self.arm_start(a);
                self.weights[st..st + self.arm_lengths[a]].to_vec()
            })
            .collect();
        arms[j].pop();
        star(self.weights[0], &arms)
    }
}

fn star(center: i64, arms: &[Vec<i64>]) -> PlumbingGraph {
    let mut weights = vec![center];
    let mut edges = Vec::new();
    let mut arm_lengths = Vec::new();
    for arm in arms {
        let mut prev = 0;
        for &w in arm {
            let v = weights.len();
            weights.push(w);
            edges.push((prev, v));
            prev = v;
        }
        arm_lengths.push(arm.len());
    }
    PlumbingGraph {
        weights,
        edges,
        arm_lengths,
    }
}

/// Arm j expands pⱼ/(qⱼ mod pⱼ); the center carries p₀ + Σ⌊qⱼ/pⱼ⌋, so that
/// center + Σ (qⱼ mod pⱼ)/pⱼ = −1/P and |det M| = 1.
pub fn build_plumbing(sd: &SeifertData) -> Result<PlumbingGraph> {
    let mut arms = Vec::new();
    let mut center = sd.p0;
    for (&q, &p) in sd.q_plumb.iter().zip(&sd.p) {
        center += q.div_euclid(p);
        arms.push(
            neg_cont_fraction(p, q.rem_euclid(p))?
                .into_iter()
                .map(|k| -k)
                .collect::<Vec<_>>(),
        );
    }
    Ok(star(center, &arms))
}

#[derive(Clone, Debug)]
pub struct AdjacencyData {
    pub m: Vec<Vec<i64>>,
    pub sigma: i64,
    pub det: Integer,
    pub weight_sum: i64,
    pub degree_vector: Vec<i64>,
    pub negative_definite: bool,
    /// Exact inverse of M.
    pub m_inv: Vec<Vec<Rational>>,
}

/// Fraction-free determinant.
pub fn bareiss_det(m: &[Vec<i64>]) -> Integer {
    leading_minors(m).pop().unwrap_or_else(|| Integer::from(1))
}

/// All leading principal minors D₁,…,D_s, by Bareiss elimination with
/// symmetric pivoting disabled (so the k-th pivot is D_k/D_{k−1}).
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<Integer> {
    let n = m.len();
    (1..=n)
        .map(|k| {
            let mut a: Vec<Vec<Integer>> = m[..k]
                .iter()
                .map(|r| r[..k].iter().map(|&x| Integer::from(x)).collect())
                .collect();
            let mut sign = 1;
            let mut prev = Integer::from(1);
            for i in 0..k {
                if a[i][i] == 0 {
                    match (i + 1..k).find(|&r| a[r][i] != 0) {
                        Some(r) => {
                            a.swap(i, r);
                            sign = -sign;
                        }
                        None => return Integer::new(),
                    }
                }
                for r in i + 1..k {
                    for c in i + 1..k {
                        let v = Integer::from(&a[r][c] * &a[i][i]) - Integer::from(&a[r][i] * &a[i][c]);
                        a[r][c] = v / &prev;
                    }
                    a[r][i] = Integer::new();
                }
                prev = a[i][i].clone();
            }
            prev * sign
        })
        .collect()
}

fn inverse(m: &[Vec<i64>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Rational> = r.iter().map(|&x| Rational::from(x)).collect();
            row.extend((0..n).map(|j| Rational::from((j == i) as i64)));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n)
            .find(|&r| a[r][c] != 0)
            .ok_or_else(|| Error::Degenerate("singular adjacency matrix".into()))?;
        a.swap(c, piv);
        let inv = a[c][c].clone().recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && a[r][c] != 0 {
                let f = a[r][c].clone();
                for j in 0..2 * n {
                    let v = Rational::from(&f * &a[c][j]);
                    a[r][j] -= v;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn adjacency(g: &PlumbingGraph) -> Result<AdjacencyData> {
    let m = g.matrix();
    let minors = leading_minors(&m);
    if minors.iter().any(|d| *d == 0) {
        return Err(Error::Degenerate("vanishing leading minor; signature undetermined".into()));
    }
    // Sylvester: negative eigenvalues = sign changes in 1, D₁, D₂, …
    let mut neg = 0i64;
    let mut prev_pos = true;
    for d in &minors {
        let pos = *d > 0;
        if pos != prev_pos {
            neg += 1;
        }
        prev_pos = pos;
    }
    let s = m.len() as i64;
    let negative_definite = neg == s;
    Ok(AdjacencyData {
        sigma: s - 2 * neg,
        det: minors.last().cloned().unwrap_or_else(|| Integer::from(1)),
        weight_sum: g.weights.iter().sum(),
        degree_vector: g.degrees(),
        negative_definite,
        m_inv: inverse(&m)?,
        m,
    })
}

/// hⱼ = |H₁| of the graph with arm j's terminal vertex removed.
pub fn h_values(g: &PlumbingGraph) -> Vec<Integer> {
    (0..g.arm_lengths.len())
        .map(|j| bareiss_det(&g.without_terminal(j).matrix()).abs())
        .collect()
}

/// Δ = −¼(Σhⱼ − 3s − m₀ + Σⱼ(−P/pⱼ² + Σᵢ kⱼᵢ)), m₀ the center weight.
pub fn delta_exponent(g: &PlumbingGraph, sd: &SeifertData) -> Rational {
    let h: Integer = h_values(g).into_iter().sum();
    let mut acc = Rational::from(h) - 3 * g.s() as i64 - g.weights[0];
    for (j, &pj) in sd.p.iter().enumerate() {
        acc -= Rational::from((sd.big_p, pj * pj));
        let st = g.arm_start(j);
        let ksum: i64 = g.weights[st..st + g.arm_lengths[j]].iter().map(|w| -w).sum();
        acc += ksum;
    }
    -acc / 4u32
}

/// Exponent (3σ − Σm_v)/4 and the sign (−1)^{#positive eigenvalues}.
pub fn gppv_prefactor(ad: &AdjacencyData) -> (Rational, i32) {
    let s = ad.m.len() as i64;
    let positive = (s + ad.sigma) / 2;
    let sign = if positive % 2 == 0 { 1 } else { -1 };
    (Rational::from((3 * ad.sigma - ad.weight_sum, 4)), sign)
}

/// Validated graph and adjacency data for sd.
pub fn plumbing_for(sd: &SeifertData) -> Result<(PlumbingGraph, AdjacencyData)> {
    let g = build_plumbing(sd)?;
    let ad = adjacency(&g)?;
    if !ad.negative_definite {
        return Err(Error::Degenerate("plumbing matrix is not negative definite".into()));
    }
    if ad.det.clone().abs() != 1 {
        return Err(Error::Degenerate(format!("|det M| = {} is not 1", ad.det)));
    }
    Ok((g, ad))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fractions() {
        assert_eq!(neg_cont_fraction(3, 1).unwrap(), vec![3]);
        assert_eq!(neg_cont_fraction(5, 3).unwrap(), vec![2, 3]);
        assert_eq!(reconstruct(&neg_cont_fraction(7, 5).unwrap()), Rational::from((7, 5)));
        assert!(neg_cont_fraction(6, 4).is_err());
    }

    #[test]
    fn graph_235() {
        let sd = SeifertData::new(&[2, 3, 5]).unwrap();
        let (g, ad) = plumbing_for(&sd).unwrap();
        assert_eq!(g.arm_lengths.len(), 3);
        assert_eq!(ad.sigma, -(g.s() as i64));
        assert_eq!(gppv_prefactor(&ad).1, 1);
        assert_eq!(g.weights, vec![-2; 8]);
        assert_eq!(g.arm_lengths, vec![1, 2, 4]);
        let d = delta_exponent(&g, &sd);
        assert_eq!(Integer::from(120) % d.denom(), 0);
    }
}
