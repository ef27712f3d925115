//! The universal polynomials that express the λ-operations of products
//! and composites.

use mzeta::universal::{universal_p, universal_pnr, verify_q_fe, PMethod, PnrMethod};

fn main() -> mzeta::Result<()> {
    for n in 1..=3 {
        let naive = universal_p(n, PMethod::Naive)?.value;
        let cauchy = universal_p(n, PMethod::Cauchy)?.value;
        assert_eq!(naive, cauchy);
        println!("P{n} = {naive}");
    }
    for (n, r) in [(2, 2), (3, 2), (2, 3)] {
        println!("P{n},{r} = {}", universal_pnr(n, r, PnrMethod::Plethysm)?.value);
    }
    let r = verify_q_fe(2, 2)?;
    println!("q-level functional equation, g=2 n=2: {}", if r.passed { "ok" } else { "FAILED" });
    Ok(())
}
