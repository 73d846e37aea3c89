//! (√kλ)^{-1}Ψ along the radial path q = e^{2πi/(k - 2iPt/π)}.
use seifert_quantum::arith::ap;
use seifert_quantum::radial::radial_limit_check;
use seifert_quantum::seifert::SeifertData;

fn main() -> seifert_quantum::Result<()> {
    let sd = SeifertData::new(&[2, 3, 5])?;
    for k in [2, 4] {
        let r = radial_limit_check(&sd, k, &[1e-3, 1e-4, 1e-5], 128)?;
        let (re, im) = ap::to_c64(&r.normalization_ratio);
        println!("k = {k}  residuals {:?}", r.residuals);
        println!(
            "       limit / z = {re:.6} {im:+.6}i  after 32e^(-iπ/4): {:.3e}",
            r.corrected_extrapolation_error
        );
    }
    Ok(())
}
