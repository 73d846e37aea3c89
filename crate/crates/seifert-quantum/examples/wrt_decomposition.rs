//! z̃_k = z^I(k) + z^R(k) for Σ(2,3,5), with the phase polynomials ζ_θ.
use seifert_quantum::arith::ap;
use seifert_quantum::seifert::SeifertData;
use seifert_quantum::wrt::{normalized_wrt, phase_polynomials};

fn main() -> seifert_quantum::Result<()> {
    let sd = SeifertData::new(&[2, 3, 5])?;
    for ph in phase_polynomials(&sd, 128)? {
        if ph.coeffs.max_abs_above(-1) < 1e-30 {
            continue;
        }
        let (re, im) = ap::to_c64(&ph.coeffs.coeff(0));
        println!(
            "theta = {:>7}  fiber {:?}  zeta_theta = {:.10} {:+.10}i",
            ph.theta.rep().to_string(),
            ph.fiber,
            re,
            im
        );
    }
    for k in 2..=8 {
        let w = normalized_wrt(&sd, k, 128)?;
        let (zi, zr, z) = (ap::to_c64(&w.z_i), ap::to_c64(&w.z_r), ap::to_c64(&w.z_total));
        println!(
            "k = {k}  zI = {:.3e}{:+.3e}i  zR = {:.8}{:+.8}i  z = {:.8}{:+.8}i",
            zi.0, zi.1, zr.0, zr.1, z.0, z.1
        );
    }
    Ok(())
}
