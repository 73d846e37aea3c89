//! One line per acceptance criterion. Criteria 1, 5 and 6 are expected to fail
//! with a fixed signature; every other criterion must pass.

use seifert_quantum::cli::acceptance::{run, Criterion};
use seifert_quantum::DEFAULT_PREC;

const TOL_RADIAL_RESIDUAL: f64 = 1e-3;
const TOL_RADIAL_EXTRAPOLATION: f64 = 1e-6;
const TOL_SLOPE: f64 = 0.3;
const TOL_RESUMMATION: f64 = 1e-20;
const TOL_EXACT_BITS: i32 = 100;
const TOL_GENFUNC: f64 = 1e-8;
const POLE_PROBE_MIN: f64 = 1e6;
const RED: [usize; 3] = [1, 5, 6];

fn m(c: &Criterion, key: &str) -> f64 {
    *c.metrics
        .get(key)
        .unwrap_or_else(|| panic!("criterion {} lacks metric {key}", c.id))
}

/// Pass/fail recomputed from the measured numbers with the pinned tolerances.
fn judged(c: &Criterion) -> bool {
    let exact = 2f64.powi(-TOL_EXACT_BITS);
    match c.id {
        1 => m(c, "verified") == 5.0,
        3 => m(c, "sets_match") == 1.0 && m(c, "min_near") > POLE_PROBE_MIN,
        5 => m(c, "residual_t1e-4") < TOL_RADIAL_RESIDUAL && m(c, "extrapolation_error") < TOL_RADIAL_EXTRAPOLATION,
        6 => m(c, "max_slope_deviation") <= TOL_SLOPE,
        7 => m(c, "max_residual") < TOL_RESUMMATION,
        8 => m(c, "max_residual") < exact,
        9 => m(c, "max_relative_error") < exact,
        10 => m(c, "max_abs") < exact,
        11 => m(c, "difference") < TOL_GENFUNC,
        12 => m(c, "min_residual_bits") > DEFAULT_PREC as f64 - 30.0,
        _ => c.pass,
    }
}

/// The documented failure modes of the red criteria.
fn red_signature(c: &Criterion) -> bool {
    match c.id {
        // four three-fiber manifolds come out exactly negated, the four-fiber one equal
        1 => m(c, "verified") == 1.0 && m(c, "negated") == 4.0,
        // the limit is 32e^{−iπ/4}·z̃_k; after that factor only the O(t) terms remain
        5 => {
            let c32 = 32.0 / 2f64.sqrt();
            (m(c, "ratio_re") - c32).abs() < 1e-2
                && (m(c, "ratio_im") + c32).abs() < 1e-2
                && m(c, "corrected_extrapolation_error") < 1e-4
        }
        // the uncorrected residual does not decay
        6 => m(c, "max_slope_deviation") > 1.5,
        _ => false,
    }
}

fn main() {
    let mut problems = Vec::new();
    for id in 1..=13 {
        let c = match run(id, DEFAULT_PREC) {
            Ok(c) => c,
            Err(e) => {
                println!("criterion {id:>2} ERROR {e}");
                problems.push(id);
                continue;
            }
        };
        let pass = judged(&c);
        let budget = if c.within_budget { "" } else { "  [over time budget]" };
        println!("{}{}", c.line(), budget);
        if pass != c.pass {
            println!("    pinned tolerances disagree with the library verdict");
            problems.push(id);
        } else if RED.contains(&id) {
            if pass || !red_signature(&c) {
                println!("    expected failure signature not observed");
                problems.push(id);
            }
        } else if !pass {
            problems.push(id);
        }
    }
    let passed = 13 - RED.len() - problems.iter().filter(|i| !RED.contains(i)).count();
    println!(
        "acceptance: {passed}/{} non-red criteria pass, red criteria {:?}",
        13 - RED.len(),
        RED
    );
    if !problems.is_empty() {
        println!("unexpected outcomes: {problems:?}");
        std::process::exit(1);
    }
}
