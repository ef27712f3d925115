use mzeta::lambda::T_VAR;
use mzeta::zeta::{self, Split};

#[test]
fn elliptic_curve_zeta_is_rational() {
    let (ring, e) = zeta::curve_motive(1).unwrap();
    let z = zeta::rational_form(&ring, &e.plus, &e.minus, 10).unwrap();
    assert_eq!(z.numerator.to_string(), "1 + T*h + L*T^2");
    let direct = zeta::zeta_series(&ring, &e.class(), 10).unwrap();
    assert_eq!(z.series, direct);
    assert_eq!((z.e, z.f), (2, 2));
}

#[test]
fn projective_line() {
    let (ring, p1) = zeta::curve_motive(0).unwrap();
    let z = zeta::zeta_series(&ring, &p1.class(), 6).unwrap();
    // 1/((1 - T)(1 - LT)) has coefficient 1 + L + ... + L^n at T^n.
    for (n, c) in z.coeffs().iter().enumerate() {
        let expect = (0..=n as i32).fold(ring.zero(), |acc, k| &acc + &ring.l_pow(k));
        assert_eq!(*c, expect, "T^{n}");
    }
}

#[test]
fn point_has_trivial_numerator() {
    let (ring, _) = zeta::curve_motive(0).unwrap();
    let pt = Split::point(&ring);
    all_pass(&zeta::verify_split(&ring, "point", &pt).unwrap());
}

#[test]
fn abelian_surface() {
    all_pass(&zeta::verify_abelian(2).unwrap());
}

#[test]
fn genus_three_curve() {
    all_pass(&zeta::verify_curve(3).unwrap());
}

#[test]
fn products_add_degrees() {
    let (ring, c) = zeta::curve_motive(2).unwrap();
    let p1 = zeta::curve_motive(0).unwrap().1;
    let pt = Split::point(&ring);
    let cp = zeta::product_motive(&c, &pt);
    assert_eq!((cp.e, cp.f), (c.e, c.f));
    let blow = zeta::blowup_motive(&ring, &c, &pt, 2).unwrap();
    assert_eq!(blow.e, c.e + 1);
    all_pass(&zeta::verify_split(&ring, "C2", &c).unwrap());
    assert_eq!((p1.e, p1.f), (2, 0));
}

#[test]
fn fe_checks_detect_failures() {
    let (ring, _) = zeta::curve_motive(0).unwrap();
    let good = ring.parse("1 + 2*T + L*T^2").unwrap();
    assert!(zeta::check_fe("good", &good, 1, 2).unwrap().passed);
    let bad = ring.parse("1 + T + T^2").unwrap();
    let r = zeta::check_fe("bad", &bad, 1, 2).unwrap();
    assert!(!r.passed && r.witness.is_some());
    assert!(zeta::check_fe("odd", &good, 1, 3).is_err());
    let q = ring.alt_series(&ring.parse("1 + L").unwrap(), 3).unwrap().to_poly(T_VAR);
    assert!(zeta::check_fe("P1", &q, 1, 2).unwrap().passed);
}

fn all_pass(reports: &[zeta::FEReport]) {
    for r in reports {
        assert!(r.passed, "{}: {:?}", r.subject, r.witness);
    }
}
