//! Borel-Laplace resummation: z̃_k = L(B)(k) + Σ_θ residue operators.
use rug::Complex;
use seifert_quantum::arith::ap;
use seifert_quantum::resurgence::laplace_borel;
use seifert_quantum::seifert::SeifertData;
use seifert_quantum::wrt::{normalized_wrt, phase_polynomials, residue_operator};

fn main() -> seifert_quantum::Result<()> {
    let prec = 192;
    let sd = SeifertData::new(&[2, 3, 5])?;
    let phases = phase_polynomials(&sd, prec)?;
    for k in 3..=6 {
        let z = normalized_wrt(&sd, k, prec)?.z_total;
        let mut rhs = laplace_borel(&sd, k, prec)?;
        for ph in &phases {
            rhs += residue_operator(&sd, &ph.theta, k, prec)?;
        }
        let d = ap::abs_f64(&Complex::with_val(prec, z - rhs));
        println!("k = {k}  |z - resummed| = {d:.3e}");
    }
    Ok(())
}
