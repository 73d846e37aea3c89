//! The star-shaped plumbing graph of Σ(2,3,5) and its adjacency data.
use seifert_quantum::plumbing::{adjacency, bareiss_det, build_plumbing, delta_exponent};
use seifert_quantum::seifert::SeifertData;

fn main() -> seifert_quantum::Result<()> {
    let sd = SeifertData::new(&[2, 3, 5])?;
    let g = build_plumbing(&sd)?;
    let m = g.matrix();
    for row in &m {
        println!("{}", row.iter().map(|x| format!("{x:>3}")).collect::<String>());
    }
    println!("det = {}", bareiss_det(&m));
    let ad = adjacency(&g)?;
    println!(
        "delta = {}  signature = {}  negative definite = {}",
        delta_exponent(&g, &sd),
        ad.sigma,
        ad.negative_definite
    );
    Ok(())
}
