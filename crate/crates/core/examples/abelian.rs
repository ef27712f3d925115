//! Zeta functions of abelian varieties and curves, with their functional
//! equations checked exactly.

use mzeta::zeta;

fn main() -> mzeta::Result<()> {
    for g in 1..=2 {
        let (ring, a) = zeta::abelian_motive(g)?;
        let z = zeta::rational_form(&ring, &a.plus, &a.minus, zeta::default_order(a.e.max(a.f)))?;
        println!("A{g}: degrees ({}, {})", z.e, z.f);
        if g == 1 {
            println!("  P(T) = {}", z.numerator);
        }
        for r in zeta::verify_abelian(g)? {
            println!("  {:<40} {}", r.subject, if r.passed { "ok" } else { "FAILED" });
        }
    }
    for g in 0..=3 {
        let ok = zeta::verify_curve(g)?.iter().all(|r| r.passed);
        println!("curve of genus {g}: {}", if ok { "ok" } else { "FAILED" });
    }
    Ok(())
}
