use mzeta::identities::sample_ring;
use mzeta::zeta::{self, Factor, Kind, Split};

fn main() -> mzeta::Result<()> {
    let ring = sample_ring(1)?;
    let elliptic = |name: &str| -> mzeta::Result<Factor> {
        Ok(Factor { element: ring.parse(name)?, kind: Kind::Sym, degree: 2, weight: 1 })
    };
    let r = zeta::verify_product(&ring, &elliptic("a")?, &elliptic("b")?)?;
    println!("E x E': degree {} weight {} L^{} -> {}", r.degree, r.weight, r.l_exponent, r.passed);

    let ee = zeta::product_motive(&Split::abelian(&ring, "a", 1)?, &Split::abelian(&ring, "b", 1)?);
    println!("E x E' degrees ({}, {})", ee.e, ee.f);

    // Blow up an abelian surface at a point.
    let (ring2, surface) = zeta::abelian_motive(2)?;
    let bl = zeta::blowup_motive(&ring2, &surface, &Split::point(&ring2), 2)?;
    for r in zeta::verify_split(&ring2, "blow-up", &bl)? {
        println!("{:<30} {}", r.subject, r.passed);
    }
    Ok(())
}
