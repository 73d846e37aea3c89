use rug::{Complex, Float, Rational};
use seifert_quantum::arith::ap;
use seifert_quantum::resurgence::{
    borel_closed_form, borel_expansion_numeric, borel_f_form, borel_from_root, check_poles_equal_cs, formal_borel, gamma_half,
    ohtsuki_coefficients, ohtsuki_formal_terms, pole_set, probe_pole, FormalTerm,
};
use seifert_quantum::seifert::SeifertData;

const PREC: u32 = 192;

#[test]
fn closed_form_and_f_form_agree() {
    for p in [&[2i64, 3, 5][..], &[2, 3, 5, 7]] {
        let sd = SeifertData::new(p).unwrap();
        for (re, im) in [(0.3, 0.1), (1.5, -0.7), (0.2, 1.0)] {
            let z = ap::from_f64(PREC, re, im);
            let a = borel_closed_form(&sd, &z).unwrap();
            let b = borel_f_form(&sd, &z).unwrap();
            assert!(ap::abs_f64(&Complex::with_val(PREC, &a - &b)) < 1e-40 * ap::abs_f64(&a).max(1.0));
        }
        // past the cut of √(πiζ) the F form takes the other root
        let z = ap::from_f64(PREC, -0.2, 0.05);
        let a = borel_closed_form(&sd, &z).unwrap();
        let b = borel_f_form(&sd, &z).unwrap();
        assert!(ap::abs_f64(&Complex::with_val(PREC, &a + &b)) < 1e-40 * ap::abs_f64(&a).max(1.0));
    }
}

#[test]
fn odd_in_the_square_root() {
    let sd = SeifertData::new(&[2, 3, 7]).unwrap();
    let s = ap::from_f64(PREC, 0.4, 0.2);
    let a = borel_from_root(&sd, &s).unwrap();
    let b = borel_from_root(&sd, &Complex::with_val(PREC, -&s)).unwrap();
    assert!(ap::abs_f64(&Complex::with_val(PREC, a + b)) < 1e-45);
}

#[test]
fn formal_coefficients_match_cauchy() {
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let o = ohtsuki_coefficients(&sd, 12, PREC).unwrap();
    let formal = formal_borel(&ohtsuki_formal_terms(&o)).unwrap();
    let numeric = borel_expansion_numeric(&sd, 13, 256, PREC).unwrap();
    assert!(ap::abs_f64(&formal[0].coeff) < 1e-50);
    for m in 1..=12 {
        let d = ap::abs_f64(&Complex::with_val(PREC, &formal[m].coeff - &numeric[m]));
        assert!(d < 1e-45 * ap::abs_f64(&numeric[m]), "m={m}");
        assert_eq!(formal[m].exponent, Rational::from((2 * m as i64 - 1, 2)));
    }
}

#[test]
fn formal_borel_rejects() {
    let c = ap::one(64);
    let bad = [FormalTerm {
        coeff: c.clone(),
        alpha: Rational::from(0),
        log_power: 0,
    }];
    assert!(formal_borel(&bad).is_err());
    let logs = [FormalTerm {
        coeff: c,
        alpha: Rational::from((1, 2)),
        log_power: 1,
    }];
    assert!(formal_borel(&logs).is_err());
}

#[test]
fn gamma_half_oracle() {
    for n in 0..10u32 {
        let g = gamma_half(n, 128);
        let direct = Float::with_val(128, Float::with_val(128, n) + 0.5).gamma();
        assert!((g - direct).abs().to_f64() < 1e-30);
    }
}

#[test]
fn poles_equal_cs() {
    for p in [&[2i64, 3, 5][..], &[2, 3, 7], &[2, 3, 11], &[3, 5, 7], &[2, 3, 5, 7]] {
        let sd = SeifertData::new(p).unwrap();
        assert!(check_poles_equal_cs(&sd, 4 * sd.big_p));
    }
}

#[test]
fn probes_see_the_poles() {
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let poles = pole_set(&sd, 30, 64);
    assert_eq!(poles.iter().map(|p| p.m).take(3).collect::<Vec<_>>(), vec![1, 7, 11]);
    for pole in poles.iter().take(3) {
        let pr = probe_pole(&sd, pole.m, 1e-8, 128).unwrap();
        assert!(pr.near > 1e6 && pr.control < 10.0);
    }
    // m = 30 is not a pole: B stays bounded there
    let z = Complex::with_val(128, (0, ap::pi(128) * Rational::from((900, 60))));
    assert!(ap::abs_f64(&borel_closed_form(&sd, &z).unwrap()) < 1e3);
}
