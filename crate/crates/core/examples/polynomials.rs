//! Laurent polynomials over a named variable table.

use mzeta::poly::{MultiPoly, VarTable};
use mzeta::series::PowerSeries;

fn main() -> mzeta::Result<()> {
    // L may appear with negative exponents, x and T may not.
    let vars = VarTable::new([("L", true), ("x", false), ("T", false)])?;
    let a = MultiPoly::parse(&vars, "(1 + x)^3 - L^-1*x")?;
    let b = MultiPoly::parse(&vars, "x - L")?;
    println!("a       = {a}");
    println!("a * b   = {}", &a * &b);
    println!("a(x=L)  = {}", a.substitute("x", &MultiPoly::var(&vars, "L")?)?);

    let t = vars.require("T")?;
    let s = PowerSeries::from_poly(&MultiPoly::parse(&vars, "1 - x*T")?, t, 5)?;
    println!("1/(1 - xT) = {}", s.invert()?.to_poly(t));
    Ok(())
}
