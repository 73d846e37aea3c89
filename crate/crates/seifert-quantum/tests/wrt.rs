use rug::ops::Pow;
use rug::{Complex, Float};
use seifert_quantum::arith::ap;
use seifert_quantum::resurgence::laplace_borel;
use seifert_quantum::seifert::SeifertData;
use seifert_quantum::wrt::{
    integral_part, integral_part_tol, normalized_wrt, phase_polynomials, polylog_neg, residue_part, residue_sum_numeric,
};

const PREC: u32 = 192;

#[test]
fn grouped_residues_match_contour_quadrature() {
    for p in [&[2i64, 3, 5][..], &[2, 3, 7]] {
        let sd = SeifertData::new(p).unwrap();
        for k in 2..=11 {
            let grouped = residue_part(&sd, k, PREC).unwrap();
            let numeric = residue_sum_numeric(&sd, k, PREC).unwrap();
            assert!(
                ap::abs_f64(&Complex::with_val(PREC, grouped - numeric)) < 1e-40,
                "{:?} k={k}",
                p
            );
        }
    }
}

#[test]
fn inverse_k_terms_cancel() {
    for p in [&[2i64, 3, 5][..], &[2, 3, 7], &[2, 3, 5, 7]] {
        let sd = SeifertData::new(p).unwrap();
        for ph in phase_polynomials(&sd, PREC).unwrap() {
            assert!(ap::abs_f64(&ph.coeffs.coeff(-1)) < 1e-40);
        }
    }
}

#[test]
fn phase_polynomial_degree() {
    let deg = |p: &[i64]| {
        let sd = SeifertData::new(p).unwrap();
        phase_polynomials(&sd, PREC)
            .unwrap()
            .iter()
            .filter_map(|ph| (0..=4).rev().find(|&d| ap::abs_f64(&ph.coeffs.coeff(d)) > 1e-30))
            .max()
            .unwrap()
    };
    assert_eq!(deg(&[2, 3, 5]), 0);
    assert_eq!(deg(&[2, 3, 5, 7]), 1);
}

#[test]
fn integral_part_independent_of_tolerance() {
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let a = integral_part(&sd, 3, PREC).unwrap();
    let b = integral_part_tol(&sd, 3, PREC, &Float::with_val(PREC, 1e-30)).unwrap();
    assert!(ap::abs_f64(&Complex::with_val(PREC, &a - &b)) < 1e-28);
}

#[test]
fn integral_part_is_laplace_of_borel() {
    // two different quadratures: Gauss-Legendre in u, tanh-sinh along the ray in ζ
    let sd = SeifertData::new(&[2, 3, 5, 7]).unwrap();
    for k in [2, 5] {
        let a = integral_part(&sd, k, PREC).unwrap();
        let b = laplace_borel(&sd, k, PREC).unwrap();
        assert!(ap::abs_f64(&Complex::with_val(PREC, a - b)) < 1e-40);
    }
}

#[test]
fn poincare_values() {
    let sd = SeifertData::new(&[2, 3, 5]).unwrap();
    let expect = [
        (2, 0.99325976, -0.94256832),
        (3, -0.67260008, -0.69649777),
        (4, 0.68459454, 0.00896183),
    ];
    for (k, re, im) in expect {
        let z = ap::to_c64(&normalized_wrt(&sd, k, 128).unwrap().z_total);
        assert!((z.0 - re).abs() < 1e-8 && (z.1 - im).abs() < 1e-8, "k={k} {:?}", z);
    }
}

#[test]
fn polylog_against_power_series() {
    let prec = 128;
    let z = ap::from_f64(prec, 0.21, -0.17);
    for l in 0..8u32 {
        let mut acc = Complex::new(prec);
        let mut zn = ap::one(prec);
        for n in 1..400u32 {
            zn *= &z;
            acc += Complex::with_val(prec, &zn * Float::with_val(prec, n).pow(l));
        }
        let v = polylog_neg(l, &z).unwrap();
        assert!(ap::abs_f64(&Complex::with_val(prec, v - acc)) < 1e-30, "l={l}");
    }
}

#[test]
fn polylog_pole() {
    assert!(polylog_neg(2, &ap::one(64)).is_err());
}
