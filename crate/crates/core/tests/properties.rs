use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use mzeta::identities::sample_ring;
use mzeta::lambda::{opposite, Route};
use mzeta::partition::{partitions_of, Partition};
use mzeta::poly::{Monomial, MultiPoly, VarTable, Vars};
use mzeta::series::PowerSeries;
use mzeta::symfunc::{Basis, SymFunc};

fn table() -> Vars {
    VarTable::new([("L", true), ("x", false), ("y", false)]).unwrap()
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, -2i32..=2, 0i32..=2, 0i32..=2), 0..5).prop_map(|terms| {
        let vars = table();
        let mut p = MultiPoly::zero(&vars);
        for (c, l, x, y) in terms {
            p.add_term(Monomial::from_exponents(vec![l, x, y]), BigInt::from(c));
        }
        p
    })
}

/// Elements of the sample ring: small integer combinations of a fixed basis.
fn element() -> impl Strategy<Value = MultiPoly> {
    const BASIS: [&str; 9] = ["1", "L", "L^-1", "a", "b", "c", "a*b", "L*c", "u"];
    prop::collection::vec(-2i64..=2, BASIS.len()).prop_map(|cs| {
        let ring = sample_ring(6).unwrap();
        let mut x = ring.zero();
        for (c, b) in cs.iter().zip(BASIS) {
            x += &ring.parse(b).unwrap().scale(&BigInt::from(*c));
        }
        x
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=5, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = partitions_of(n);
        all[i.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &MultiPoly::one(&table()), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn difference_vanishes_iff_equal(a in poly(), b in poly()) {
        prop_assert_eq!((&a - &b).is_zero(), a == b);
    }

    #[test]
    fn render_parse_round_trip(a in poly()) {
        let text = a.to_string();
        let back = MultiPoly::parse(&table(), &text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn identity_substitution(a in poly()) {
        let vars = table();
        let x = MultiPoly::var(&vars, "x").unwrap();
        prop_assert_eq!(a.substitute("x", &x).unwrap(), a.clone());
        let images: Vec<MultiPoly> = (0..vars.len()).map(|i| MultiPoly::var_at(&vars, i)).collect();
        prop_assert_eq!(a.eval_hom(&vars, &images).unwrap(), a);
    }

    #[test]
    fn series_inverse(coeffs in prop::collection::vec(poly(), 1..6)) {
        let vars = table();
        let mut cs = vec![MultiPoly::one(&vars)];
        cs.extend(coeffs);
        let s = PowerSeries::new(&vars, cs, 6);
        let inv = s.invert().unwrap();
        prop_assert_eq!(s.mul(&inv).unwrap(), PowerSeries::one(&vars, 6));
        prop_assert_eq!(inv.invert().unwrap(), s);
    }

    #[test]
    fn sym_and_alt_are_opposite(x in element()) {
        let ring = sample_ring(6).unwrap();
        let s = ring.sym_series(&x, 6).unwrap();
        let a = ring.alt_series(&x, 6).unwrap();
        prop_assert_eq!(opposite(&a).unwrap(), s);
    }

    #[test]
    fn series_are_exponential(x in element(), y in element()) {
        let ring = sample_ring(6).unwrap();
        let sum = ring.sym_series(&(&x + &y), 6).unwrap();
        let prod = ring.sym_series(&x, 6).unwrap().mul(&ring.sym_series(&y, 6).unwrap()).unwrap();
        prop_assert_eq!(sum, prod);
    }

    #[test]
    fn conjugation_is_an_involution(lam in partition()) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().weight(), lam.weight());
        prop_assert_eq!(lam.conjugate().syt_count(), lam.syt_count());
    }

    #[test]
    fn basis_changes_round_trip(lam in partition(), c in -4i64..=4) {
        let f = SymFunc::s(lam.clone()).scale(&BigRational::from_integer(c.into()));
        for b in [Basis::E, Basis::H, Basis::P] {
            prop_assert_eq!(f.convert(b).convert(Basis::S), f.clone());
        }
        prop_assert_eq!(SymFunc::s(lam.clone()).omega(), SymFunc::s(lam.conjugate()));
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn plethysm_by_p1_is_identity(lam in partition()) {
        let f = SymFunc::s(lam);
        prop_assert_eq!(f.plethysm(&SymFunc::p(1)).unwrap().convert(Basis::S), f.clone());
        prop_assert_eq!(SymFunc::p(1).plethysm(&f).unwrap().convert(Basis::S), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn routes_agree(x in element(), y in element()) {
        let ring = sample_ring(6).unwrap();
        let xy = &x * &y;
        let base = ring.lambda_pair(&xy, 3, Route::Auto).unwrap();
        prop_assert_eq!(ring.lambda_pair(&xy, 3, Route::SymAlt).unwrap(), base.clone());
        prop_assert_eq!(ring.lambda_pair(&xy, 3, Route::AltAlt).unwrap(), base);
    }
}
