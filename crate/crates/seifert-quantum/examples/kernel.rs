//! Exact kernels: Dedekind sums, Bernoulli polynomials, CRT, negative continued fractions.
use rug::{Integer, Rational};
use seifert_quantum::arith::{bernoulli_polynomial, crt_solve, dedekind_sum};
use seifert_quantum::plumbing::{neg_cont_fraction, reconstruct};

fn main() -> seifert_quantum::Result<()> {
    for (a, b) in [(1, 5), (3, 7), (5, 12)] {
        println!("s({a},{b}) = {}", dedekind_sum(a, b)?);
    }
    for m in 0..5 {
        println!("B_{m}(1/3) = {}", bernoulli_polynomial(m, &Rational::from((1, 3))));
    }
    let x = crt_solve(
        &[Integer::from(1), Integer::from(2), Integer::from(3)],
        &[Integer::from(3), Integer::from(5), Integer::from(7)],
    )?;
    println!("x ≡ 1 (3), 2 (5), 3 (7): x = {x}");
    let ks = neg_cont_fraction(7, 3)?;
    println!("7/3 = {:?} -> {}", ks, reconstruct(&ks));
    Ok(())
}
