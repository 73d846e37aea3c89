use rug::Rational;
use seifert_quantum::qseries::{psi_series, verify_zhat_psi, zhat_shifted};
use seifert_quantum::seifert::SeifertData;

#[test]
fn psi_poincare_leading_terms() {
    // Ψ for (2,3,5): χ = ±1 on m ≡ ±1, ±11, ±19, ±29 (mod 60)
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let psi = psi_series(&sd, &Rational::from(10)).unwrap();
    let got: Vec<(Rational, Rational)> = psi.terms.iter().map(|(k, c)| (psi.exponent(*k), c.clone())).collect();
    let expect: Vec<(Rational, Rational)> = [1i64, 11, 19, 29, 31]
        .iter()
        .map(|&m| {
            (
                Rational::from((m * m, 120)),
                Rational::from(if [1, 11, 19, 29].contains(&m) { 1 } else { -1 }),
            )
        })
        .filter(|(e, _)| *e <= 10)
        .collect();
    assert_eq!(got.len(), expect.len());
    for ((e1, c1), (e2, c2)) in got.iter().zip(&expect) {
        assert_eq!(e1, e2);
        assert_eq!(c1.clone().abs(), c2.clone().abs());
    }
}

#[test]
fn zhat_equals_psi_four_fibers() {
    let sd = SeifertData::new(&[2, 3, 5, 7]).unwrap();
    let r = verify_zhat_psi(&sd, &Rational::from(200)).unwrap();
    assert!(r.verified);
    assert!(r.mismatches.is_empty());
    assert!(r.terms_compared > 5);
}

#[test]
fn three_fibers_differ_by_sign() {
    for p in [&[2i64, 3, 5][..], &[2, 3, 7], &[2, 3, 11], &[3, 5, 7]] {
        let r = verify_zhat_psi(&SeifertData::new(p).unwrap(), &Rational::from(50)).unwrap();
        assert_eq!(r.sign, Some(-1), "{:?}", p);
    }
}

#[test]
fn zhat_integral_and_presentation_free() {
    let a = SeifertData::new(&[2, 3, 7]).unwrap();
    let mut q = a.q_plumb.clone();
    q[2] += a.p[2];
    let b = a.with_q_plumb(q).unwrap();
    let (za, da) = zhat_shifted(&a, &Rational::from(30)).unwrap();
    let (zb, db) = zhat_shifted(&b, &Rational::from(30)).unwrap();
    assert!(za.is_integral());
    assert_eq!(za.terms, zb.terms);
    assert_eq!(da, db);
}

#[test]
fn poincare_delta() {
    let (_, d) = zhat_shifted(&SeifertData::new(&[2, 3, 5]).unwrap(), &Rational::from(5)).unwrap();
    assert_eq!(d, Rational::from((181, 120)));
}
