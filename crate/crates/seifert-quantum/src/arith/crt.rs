use crate::error::{invalid, Result};
use rug::Integer;

/// Inverse of a modulo m, if it exists.
pub fn mod_inverse(a: &Integer, m: &Integer) -> Option<Integer> {
    a.clone().invert(m).ok()
}

/// Unique x in [0, Πm) with x ≡ r_i mod m_i.
pub fn crt_solve(residues: &[Integer], moduli: &[Integer]) -> Result<Integer> {
    if residues.len() != moduli.len() || moduli.is_empty() {
        return invalid("crt_solve needs equally many residues and moduli");
    }
    for m in moduli {
        if *m <= 0 {
            return invalid(format!("crt modulus must be positive, got {m}"));
        }
    }
    for i in 0..moduli.len() {
        for j in i + 1..moduli.len() {
            let g = moduli[i].clone().gcd(&moduli[j]);
            if g != 1 {
                return invalid(format!("crt moduli {} and {} are not coprime", moduli[i], moduli[j]));
            }
        }
    }
    let big: Integer = moduli.iter().product();
    let mut x = Integer::new();
    for (r, m) in residues.iter().zip(moduli) {
        let rest = Integer::from(&big / m);
        let inv = mod_inverse(&rest, m).expect("coprime moduli");
        x += Integer::from(r * &rest) * inv;
    }
    x %= &big;
    if x < 0 {
        x += &big;
    }
    debug_assert!(residues
        .iter()
        .zip(moduli)
        .all(|(r, m)| Integer::from(&x - r).is_divisible(m)));
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(crt_solve(&ints(&[0]), &ints(&[5])).unwrap(), 0);
        assert_eq!(crt_solve(&ints(&[1, 2]), &ints(&[2, 3])).unwrap(), 5);
        assert_eq!(crt_solve(&ints(&[1, 1, 1]), &ints(&[2, 3, 5])).unwrap(), 1);
        assert!(crt_solve(&ints(&[1, 1]), &ints(&[4, 6])).is_err());
    }

    #[test]
    fn negative_residues() {
        assert_eq!(crt_solve(&ints(&[-1, -1]), &ints(&[3, 5])).unwrap(), 14);
    }
}
