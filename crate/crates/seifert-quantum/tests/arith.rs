use proptest::prelude::*;
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};
use seifert_quantum::arith::quad::{tanh_sinh, GaussLegendre};
use seifert_quantum::arith::{
    ap, bernoulli_number, bernoulli_polynomial, crt_solve, dedekind_sum, gcd, mod_inverse, PowerSeriesQ, RationalModZ,
};

// brute-force Σ ((i/b))((ai/b))
fn dedekind_brute(a: i64, b: i64) -> Rational {
    let saw = |x: Rational| -> Rational {
        if *x.denom() == 1 {
            return Rational::new();
        }
        let f = x.clone() - x.floor();
        f - Rational::from((1, 2))
    };
    (1..b)
        .map(|i| saw(Rational::from((i, b))) * saw(Rational::from((a * i, b))))
        .fold(Rational::new(), |s, x| s + x)
}

proptest! {
    #[test]
    fn dedekind_matches_definition(a in 1i64..200, b in 2i64..200) {
        prop_assume!(gcd(a, b) == 1);
        prop_assert_eq!(dedekind_sum(a, b).unwrap(), dedekind_brute(a, b));
    }

    #[test]
    fn dedekind_reciprocity(a in 1i64..2000, b in 1i64..2000) {
        prop_assume!(gcd(a, b) == 1);
        let lhs = dedekind_sum(a, b).unwrap() + dedekind_sum(b, a).unwrap();
        let rhs = (Rational::from((a, b)) + Rational::from((b, a)) + Rational::from((1, a * b))) / 12u32 - Rational::from((1, 4));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bernoulli_difference(n in 1usize..20, num in -50i64..50, den in 1i64..30) {
        let x = Rational::from((num, den));
        let d = bernoulli_polynomial(n, &(x.clone() + 1u32)) - bernoulli_polynomial(n, &x);
        prop_assert_eq!(d, x.pow(n as i32 - 1) * n as u32);
    }

    #[test]
    fn crt_round_trip(x in 0i64..(3 * 5 * 7 * 11 * 13)) {
        let mods: Vec<Integer> = [3, 5, 7, 11, 13].iter().map(|&m| Integer::from(m)).collect();
        let res: Vec<Integer> = mods.iter().map(|m| Integer::from(x) % m).collect();
        prop_assert_eq!(crt_solve(&res, &mods).unwrap(), Integer::from(x));
    }

    #[test]
    fn mod_inverse_inverts(a in 1i64..10_000, m in 2i64..10_000) {
        prop_assume!(gcd(a, m) == 1);
        let inv = mod_inverse(&Integer::from(a), &Integer::from(m)).unwrap();
        prop_assert_eq!((inv * a) % m, 1);
    }
}

#[test]
fn bernoulli_numbers_known() {
    assert_eq!(bernoulli_number(1), Rational::from((-1, 2)));
    assert_eq!(bernoulli_number(12), Rational::from((-691, 2730)));
    assert_eq!(bernoulli_number(13), 0);
}

#[test]
fn crt_rejects_non_coprime() {
    assert!(crt_solve(&[Integer::from(1), Integer::from(0)], &[Integer::from(4), Integer::from(6)]).is_err());
}

#[test]
fn modz_reduction() {
    assert_eq!(
        RationalModZ::new(Rational::from((-1, 120))),
        RationalModZ::new(Rational::from((119, 120)))
    );
    assert_eq!(*RationalModZ::from_frac(7, 3).rep(), Rational::from((1, 3)));
}

#[test]
fn series_inverse() {
    let s = PowerSeriesQ::sinhc(12);
    let one = s.mul(&s.inverse().unwrap());
    for i in 0..12 {
        assert_eq!(one.coeff(i), if i == 0 { Rational::from(1) } else { Rational::new() });
    }
}

#[test]
fn gauss_legendre_gaussian() {
    let prec = 192;
    let gl = GaussLegendre::new(64, prec);
    let f = |x: &Float| -> seifert_quantum::Result<Complex> {
        Ok(Complex::with_val(prec, Float::with_val(prec, -x.clone().square()).exp()))
    };
    let tol = ap::two_pow_neg(prec, 150);
    let v = gl
        .integrate(&f, &Float::with_val(prec, 0), &Float::with_val(prec, 12), &tol, 4, 256)
        .unwrap();
    let exact = ap::pi(prec).sqrt() / 2u32;
    assert!(ap::abs_f64(&(v - exact)) < 1e-40);
}

#[test]
fn tanh_sinh_log() {
    let prec = 128;
    let f = |x: &Float| -> seifert_quantum::Result<Complex> { Ok(Complex::with_val(prec, x.clone().ln())) };
    let tol = ap::two_pow_neg(prec, 100);
    let v = tanh_sinh(&f, &Float::with_val(prec, 0), &Float::with_val(prec, 1), &tol, prec, 12).unwrap();
    assert!(ap::abs_f64(&(v + 1u32)) < 1e-28);
}

#[test]
fn powi_matches_repeated_product() {
    let z = ap::from_f64(128, 0.3, -1.1);
    let mut p = ap::one(128);
    for _ in 0..7 {
        p *= &z;
    }
    assert!(ap::abs_f64(&(ap::powi(&z, 7) - &p)) < 1e-30);
    let inv = Complex::with_val(128, p.recip_ref());
    assert!(ap::abs_f64(&(ap::powi(&z, -7) - inv)) < 1e-30);
}
