use proptest::prelude::*;
use rug::Rational;
use seifert_quantum::plumbing::{adjacency, bareiss_det, build_plumbing, neg_cont_fraction, reconstruct};
use seifert_quantum::seifert::SeifertData;

proptest! {
    #[test]
    fn continued_fraction_round_trip(p in 2i64..400, q in 1i64..400) {
        prop_assume!(q < p && seifert_quantum::arith::gcd(p, q) == 1);
        let ks = neg_cont_fraction(p, q).unwrap();
        prop_assert!(ks.iter().all(|&k| k >= 2));
        prop_assert_eq!(reconstruct(&ks), Rational::from((p, q)));
    }
}

#[test]
fn unimodular_negative_definite() {
    for p in [&[2i64, 3, 5][..], &[2, 3, 7], &[2, 3, 11], &[3, 5, 7], &[2, 3, 5, 7]] {
        let sd = SeifertData::new(p).unwrap();
        let g = build_plumbing(&sd).unwrap();
        let m = g.matrix();
        assert_eq!(bareiss_det(&m).abs(), 1, "{:?}", p);
        let ad = adjacency(&g).unwrap();
        assert!(ad.negative_definite);
        assert_eq!(ad.sigma, -(m.len() as i64));
    }
}

#[test]
fn e8_for_poincare_sphere() {
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let g = build_plumbing(&sd).unwrap();
    assert_eq!(g.matrix().len(), 8);
    assert!(g.degrees().iter().filter(|&&d| d == 3).count() == 1);
}
