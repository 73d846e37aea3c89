//! Σ z̃_{k+2} z^k against its Laplace/polylog closed form.
use seifert_quantum::arith::ap;
use seifert_quantum::seifert::SeifertData;
use seifert_quantum::wrt::generating_function;

fn main() -> seifert_quantum::Result<()> {
    let sd = SeifertData::new(&[2, 3, 5])?;
    for (re, im) in [(0.1, 0.0), (-0.2, 0.15)] {
        let z = ap::from_f64(128, re, im);
        let g = generating_function(&sd, &z, 30, 128)?;
        let d = ap::abs_f64(&(g.partial_sum.clone() - &g.closed_form));
        println!(
            "z = {re}{im:+}i  |partial - closed| = {d:.3e}  min |1 - z e(θ)| = {:.3}",
            g.min_singular_distance
        );
    }
    Ok(())
}
