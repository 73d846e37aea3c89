//! Borel transform of the Ohtsuki series: pole set, probes near the poles,
//! and the series coefficients against the Cauchy integral.
use seifert_quantum::arith::ap;
use seifert_quantum::resurgence::{
    borel_expansion_numeric, formal_borel, ohtsuki_coefficients, ohtsuki_formal_terms, pole_set, probe_pole,
};
use seifert_quantum::seifert::SeifertData;

fn main() -> seifert_quantum::Result<()> {
    let sd = SeifertData::new(&[2, 3, 5])?;
    for pole in pole_set(&sd, 30, 64) {
        let pr = probe_pole(&sd, pole.m, 1e-8, 128)?;
        println!(
            "m = {:>2}  theta = {:>7}  |B| near {:.3e}  off-ray {:.3e}",
            pole.m,
            pole.theta.rep().to_string(),
            pr.near,
            pr.control
        );
    }
    let o = ohtsuki_coefficients(&sd, 8, 256)?;
    let formal = formal_borel(&ohtsuki_formal_terms(&o))?;
    let numeric = borel_expansion_numeric(&sd, 9, 256, 256)?;
    for (m, (f, n)) in formal.iter().zip(&numeric).enumerate() {
        let d = ap::abs_f64(&(f.coeff.clone() - n));
        println!("B_{m}: zeta^{}  |formal - cauchy| = {:.2e}", f.exponent, d);
    }
    Ok(())
}
