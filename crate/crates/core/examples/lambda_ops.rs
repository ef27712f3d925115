use mzeta::lambda::{MotiveBuilder, Parity, Route};
use mzeta::partition::Partition;

fn main() -> mzeta::Result<()> {
    let mut b = MotiveBuilder::new();
    b.atom("h", Parity::Minus, 2)?.relation("h", 2, "L")?;
    b.atom("c", Parity::Plus, 2)?;
    let ring = b.build()?;

    let e = ring.parse("1 + h + L")?;
    println!("Sym series of E: {}", ring.sym_series(&e, 5)?.to_poly(1));
    println!("Alt series of E: {}", ring.alt_series(&e, 5)?.to_poly(1));
    println!("Sym2(h*c)      = {}", ring.sym(2, &ring.parse("h*c")?)?);
    println!("s[2,1](h + c)  = {}", ring.schur(&Partition::new(vec![2, 1])?, &ring.parse("h + c")?)?);

    let x = ring.parse("h*c - L")?;
    let auto = ring.lambda_pair(&x, 4, Route::Auto)?;
    assert_eq!(auto, ring.lambda_pair(&x, 4, Route::AltAlt)?);
    println!("Kimura degree of h: {}", ring.kimura_degree(&ring.parse("h")?, Parity::Minus)?);
    Ok(())
}
