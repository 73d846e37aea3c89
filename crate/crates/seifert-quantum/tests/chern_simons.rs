use rug::Rational;
use seifert_quantum::arith::RationalModZ;
use seifert_quantum::chern_simons::{
    construct_representation, cs_value, enumerate_l, enumerate_w, labels_from_traces, mat_det, mat_trace,
};
use seifert_quantum::seifert::SeifertData;
use std::collections::BTreeSet;

#[test]
fn three_fiber_counts() {
    for p in [[2i64, 3, 5], [2, 3, 7], [2, 3, 11], [3, 5, 7], [5, 7, 11]] {
        let l = enumerate_l(&p);
        assert_eq!(l.len() as i64, (p[0] - 1) * (p[1] - 1) * (p[2] - 1) / 4);
        let cs: BTreeSet<_> = l.iter().map(|t| cs_value(t, &p)).collect();
        assert_eq!(cs.len(), l.len());
    }
}

#[test]
fn poincare_values() {
    // the two irreducible flat connections: −1/120 and −49/120
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let w = enumerate_w(&sd).values;
    let expect: BTreeSet<_> = [
        RationalModZ::new(Rational::from((-1, 120))),
        RationalModZ::new(Rational::from((-49, 120))),
    ]
    .into_iter()
    .collect();
    assert_eq!(w, expect);
}

#[test]
fn w_fibers_partition() {
    let sd = SeifertData::new(&[2, 3, 5, 7]).unwrap();
    let w = enumerate_w(&sd);
    let total: usize = w.fibers.values().map(|f| f.len()).sum();
    let admissible = (1..2 * sd.big_p).filter(|&m| sd.divisor_count(m) <= 1).count();
    assert_eq!(total, admissible);
}

#[test]
fn representations_satisfy_relations() {
    for p in [&[2i64, 3, 7][..], &[3, 5, 7]] {
        let sd = SeifertData::new(p).unwrap();
        for l in enumerate_l(&sd.p) {
            let rep = construct_representation(&l, &sd, 192).unwrap();
            assert!(rep.residual.to_f64() < 1e-45);
            for x in &rep.x {
                assert!((mat_det(x).real().to_f64() - 1.0).abs() < 1e-40);
            }
            assert!(mat_trace(&rep.h).real().to_f64().abs() > 1.99);
            assert_eq!(labels_from_traces(&rep, &sd), l);
        }
    }
}
