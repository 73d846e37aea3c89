use rug::Rational;

use super::binomial;

/// Bernoulli numbers B_0..=B_m with B_1 = -1/2.
pub fn bernoulli_numbers(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    b.push(Rational::from(1));
    for n in 1..=m {
        let mut s = Rational::new();
        for (j, bj) in b.iter().enumerate() {
            s += Rational::from(binomial(n as i64 + 1, j as i64)) * bj;
        }
        b.push(-s / Rational::from(n as i64 + 1));
    }
    b
}

pub fn bernoulli_number(m: usize) -> Rational {
    bernoulli_numbers(m).pop().unwrap()
}

/// B_m(x) = Σ_k binom(m,k) B_k x^{m-k}.
pub fn bernoulli_polynomial(m: usize, x: &Rational) -> Rational {
    let b = bernoulli_numbers(m);
    bernoulli_polynomial_with(&b, m, x)
}

/// Same as [`bernoulli_polynomial`] with precomputed numbers (`b.len() > m`).
pub fn bernoulli_polynomial_with(b: &[Rational], m: usize, x: &Rational) -> Rational {
    // Horner in x over the coefficients binom(m,k) B_{m-k}
    let mut acc = Rational::new();
    for k in 0..=m {
        acc *= x;
        acc += Rational::from(binomial(m as i64, k as i64)) * &b[k];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], Rational::from((-1, 2)));
        assert_eq!(b[2], Rational::from((1, 6)));
        assert_eq!(b[3], 0);
        assert_eq!(b[4], Rational::from((-1, 30)));
        assert_eq!(b[8], Rational::from((-1, 30)));
        assert_eq!(bernoulli_polynomial(0, &Rational::from((3, 7))), 1);
        assert_eq!(bernoulli_polynomial(1, &Rational::new()), Rational::from((-1, 2)));
        assert_eq!(bernoulli_polynomial(2, &Rational::from((1, 2))), Rational::from((-1, 12)));
    }
}
