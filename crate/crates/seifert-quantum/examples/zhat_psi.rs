//! Compare q^Δ·Ẑ₀ from the plumbing lattice with Ψ, term by term.
use rug::Rational;
use seifert_quantum::qseries::verify_zhat_psi;
use seifert_quantum::seifert::SeifertData;

fn main() -> seifert_quantum::Result<()> {
    for p in [&[2i64, 3, 5][..], &[2, 3, 7], &[2, 3, 5, 7]] {
        let sd = SeifertData::new(p)?;
        let r = verify_zhat_psi(&sd, &Rational::from(20))?;
        println!(
            "{:?}: delta = {}, {} terms, sign = {:?}",
            p, r.delta, r.terms_compared, r.sign
        );
        for (k, c) in r.psi.terms.iter().take(6) {
            println!("  q^{}  {}", r.psi.exponent(*k), c);
        }
    }
    Ok(())
}
