use rug::{Complex, Rational};
use seifert_quantum::arith::ap;
use seifert_quantum::seifert::SeifertData;

const FIVE: [&[i64]; 5] = [&[2, 3, 5], &[2, 3, 7], &[2, 3, 11], &[3, 5, 7], &[2, 3, 5, 7]];

#[test]
fn surgery_coefficients_sum_to_inverse_p() {
    for p in FIVE {
        let sd = SeifertData::new(p).unwrap();
        let s: Rational = sd
            .q_intro
            .iter()
            .zip(&sd.p)
            .map(|(&q, &p)| Rational::from((q, p)))
            .fold(Rational::new(), |a, b| a + b);
        assert_eq!(s, Rational::from((1, sd.big_p)));
        assert!(sd.p0 < 0);
        let t: Rational = sd
            .q_plumb
            .iter()
            .zip(&sd.p)
            .map(|(&q, &p)| Rational::from((q, p)))
            .fold(Rational::from(sd.p0), |a, b| a + b);
        assert_eq!(t, Rational::from((-1, sd.big_p)));
    }
}

#[test]
fn user_order_is_recoverable() {
    let sd = SeifertData::new(&[7, 3, 2, 5]).unwrap();
    assert_eq!(sd.p[0] % 2, 0);
    assert_eq!(sd.p_user(), vec![7, 3, 2, 5]);
}

#[test]
fn rejects_non_coprime_and_short() {
    assert!(SeifertData::new(&[2, 4, 5]).is_err());
    assert!(SeifertData::new(&[2, 3]).is_err());
    assert!(SeifertData::new(&[1, 3, 5]).is_err());
}

#[test]
fn taylor_matches_closed_form() {
    // F(y) against its exact Taylor polynomial at small y
    for p in FIVE {
        let sd = SeifertData::new(p).unwrap();
        let t = sd.f_taylor(24).unwrap();
        let y = ap::from_f64(256, 0.05, 0.03);
        let exact = sd.eval_f(&y).unwrap();
        let series = t.eval(&y);
        assert!(ap::abs_f64(&(exact - series)) < 1e-30, "{:?}", p);
    }
}

#[test]
fn taylor_second_coefficient_finite_difference() {
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let t = sd.f_taylor(6).unwrap();
    let h = ap::from_f64(256, 1e-20, 0.0);
    let f = sd.eval_f(&h).unwrap();
    let c2 = Complex::with_val(256, &f / Complex::with_val(256, h.square_ref()));
    assert!((c2.real().to_f64() - t.coeff(2).to_f64()).abs() < 1e-30);
    assert_eq!(t.coeff(2), Rational::from((1, 16 * 30)));
}

#[test]
fn f_and_g_agree() {
    // G(e^{y/2P}) = 16 F(y)
    let sd = SeifertData::new(&[2, 3, 5, 7]).unwrap();
    let y = ap::from_f64(192, 0.7, 2.1);
    let z = Complex::with_val(192, &y / (2 * sd.big_p) as u32).exp();
    let g = sd.eval_big_g(&z).unwrap();
    let f = sd.eval_f(&y).unwrap() * 16u32;
    assert!(ap::abs_f64(&(g - f)) < 1e-40);
}

#[test]
fn poles_are_reported() {
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let y = Complex::with_val(128, (0, ap::pi(128) * 2u32));
    assert!(sd.eval_f(&y).is_err());
    // m = 30 is divisible by every p: F is regular there
    let y = Complex::with_val(128, (0, ap::pi(128) * 60u32));
    assert!(sd.eval_f(&y).is_ok());
}

#[test]
fn casson_walker_of_poincare_sphere() {
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let c = sd.constants(&Rational::from((181, 120)), 128);
    assert_eq!(sd.m0(), -1);
    assert_eq!(c.casson_walker, Rational::from(-1));
}
