//! Motive documents: parse, build, evaluate tasks.

use mzeta::document::MotiveDocument;
use mzeta::zeta;

const DOC: &str = "
atom h minus 2
relation h 2 = L
expr E = 1 + h + L
split Es weight 1; plus = 1 + L; minus = h
task zeta E order 4
";

fn main() -> mzeta::Result<()> {
    let doc = MotiveDocument::parse(DOC)?;
    print!("{}", doc.canonical()?.render());
    let motive = doc.build()?;
    let e = motive.element("E")?;
    println!("zeta(E) = {}", zeta::zeta_series(&motive.ring, &e, 4)?.to_poly(1));
    let split = motive.split("Es")?;
    println!("Es degrees ({}, {})", split.e, split.f);
    Ok(())
}
