//! Chern-Simons values of the flat connections on Σ(2,3,7) and the set W.
use seifert_quantum::chern_simons::{cs_value, enumerate_l, enumerate_w};
use seifert_quantum::seifert::SeifertData;

fn main() -> seifert_quantum::Result<()> {
    let sd = SeifertData::new(&[2, 3, 7])?;
    for l in enumerate_l(&sd.p) {
        println!("l = {:?}  cs = {}", l, cs_value(&l, &sd.p).rep());
    }
    let w = enumerate_w(&sd);
    for (theta, fiber) in &w.fibers {
        println!("theta = {:>8}  T(theta) = {:?}", theta.rep().to_string(), fiber);
    }
    Ok(())
}
