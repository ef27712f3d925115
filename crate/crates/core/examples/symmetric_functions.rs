use mzeta::partition::partitions_of;
use mzeta::symfunc::{Basis, SymFunc};

fn main() -> mzeta::Result<()> {
    for lam in partitions_of(4) {
        println!("{:<10} f = {:<3} s -> p: {}", lam.to_string(), lam.syt_count(), SymFunc::s(lam.clone()).convert(Basis::P));
    }

    let f = SymFunc::parse("s[2,1]")?;
    println!("s[2,1] * e2 = {}", f.mul(&SymFunc::e(2)).convert(Basis::S));
    println!("omega(s[2,1]) = {}", f.omega());

    // Plethysm: h2[h2] = s[4] + s[2,2]
    let h2 = SymFunc::h(2);
    println!("h2[h2] = {}", h2.plethysm(&h2)?.convert(Basis::S));
    println!("e3[e2] = {}", SymFunc::e(3).plethysm(&SymFunc::e(2))?.convert(Basis::S));
    Ok(())
}
