//! Explicit SL(2,C) matrices for each label of Σ(2,3,5), with the relation residual.
use seifert_quantum::arith::ap;
use seifert_quantum::chern_simons::{construct_representation, enumerate_l, labels_from_traces};
use seifert_quantum::seifert::SeifertData;

fn main() -> seifert_quantum::Result<()> {
    let sd = SeifertData::new(&[2, 3, 5])?;
    for l in enumerate_l(&sd.p) {
        let rep = construct_representation(&l, &sd, 256)?;
        println!(
            "l = {:?}  residual = {:.3e}  recovered = {:?}",
            l,
            rep.residual.to_f64(),
            labels_from_traces(&rep, &sd)
        );
        for (j, x) in rep.x.iter().enumerate() {
            let (re, im) = ap::to_c64(&(x[0].clone() + &x[3]));
            println!("  tr x{} = {:.12} {:+.12}i", j + 1, re, im);
        }
    }
    Ok(())
}
