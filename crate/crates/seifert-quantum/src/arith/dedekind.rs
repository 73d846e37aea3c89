use crate::error::{invalid, Result};
use rug::Rational;

use super::gcd;

/// ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if *x.denom() == 1 {
        return Rational::new();
    }
    let fl = x.clone().floor();
    (x - fl) - Rational::from((1, 2))
}

/// Dedekind sum S(a,b) = Σ_{k=1}^{b-1} ((k/b))((ka/b)).
pub fn dedekind_sum(a: i64, b: i64) -> Result<Rational> {
    if b <= 0 {
        return invalid(format!("dedekind sum needs b >= 1, got {b}"));
    }
    if gcd(a, b) != 1 {
        return invalid(format!("dedekind sum needs gcd(a,b)=1, got ({a},{b})"));
    }
    let mut s = Rational::new();
    for k in 1..b {
        let x = Rational::from((k, b));
        let y = Rational::from((((k as i128 * a as i128).rem_euclid(b as i128)) as i64, b));
        s += sawtooth(&x) * sawtooth(&y);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(dedekind_sum(1, 1).unwrap(), 0);
        assert_eq!(dedekind_sum(1, 3).unwrap(), Rational::from((1, 18)));
        assert!(dedekind_sum(2, 4).is_err());
        assert!(dedekind_sum(1, 0).is_err());
    }

    #[test]
    fn negative_argument_is_odd() {
        let s = dedekind_sum(3, 7).unwrap();
        assert_eq!(dedekind_sum(-3, 7).unwrap(), -s);
    }
}
