//! Motivic zeta functions and their functional equations.
//!
//! Functional equations are checked as exact Laurent-polynomial identities in
//! `L` and `T`. The substitution `T ↦ L^{-d} T^{-1}` only touches those two
//! variables, so normal forms stay normal.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lambda::{universal_product, K0Ring, MotiveBuilder, Parity, T_VAR};
use crate::partition::binomial;
use crate::poly::{Monomial, MultiPoly, VarTable, Vars};
use crate::series::PowerSeries;

/// Outcome of one functional-equation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FEReport {
    pub subject: String,
    pub weight: i64,
    pub degree: usize,
    pub l_exponent: i64,
    pub passed: bool,
    /// First nonzero coefficient of the difference, when the check fails.
    pub witness: Option<String>,
}

impl FEReport {
    fn new(subject: impl Into<String>, weight: i64, degree: usize, l_exponent: i64, witness: Option<String>) -> Self {
        FEReport {
            subject: subject.into(),
            weight,
            degree,
            l_exponent,
            passed: witness.is_none(),
            witness,
        }
    }
}

/// `Z(T) = numerator(T) / denominator_arg(-T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaFunction {
    pub numerator: MultiPoly,
    pub denominator_arg: MultiPoly,
    pub series: PowerSeries,
    /// Degree of `denominator_arg`.
    pub e: usize,
    /// Degree of `numerator`.
    pub f: usize,
}

/// A Kimura split `plus + minus` with the degrees of its terminating series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub plus: MultiPoly,
    pub minus: MultiPoly,
    pub e: usize,
    pub f: usize,
    pub weight: i64,
}

impl Split {
    pub fn class(&self) -> MultiPoly {
        &self.plus + &self.minus
    }

    /// The point: `(1, 0)`, weight 0.
    pub fn point(ring: &K0Ring) -> Split {
        Split {
            plus: ring.one(),
            minus: ring.zero(),
            e: 1,
            f: 0,
            weight: 0,
        }
    }

    /// Splits the motive of an abelian variety whose first cohomology is the
    /// minus atom `atom` of bound `2g`.
    pub fn abelian(ring: &K0Ring, atom: &str, g: usize) -> Result<Split> {
        let (mut plus, mut minus) = (ring.zero(), ring.zero());
        for n in 0..=2 * g {
            let s = ring.symbol(atom, n)?;
            if n % 2 == 0 {
                plus += &s;
            } else {
                minus += &s;
            }
        }
        Ok(Split {
            e: ring.kimura_degree(&plus, Parity::Plus)?,
            f: ring.kimura_degree(&minus, Parity::Minus)?,
            plus,
            minus,
            weight: g as i64,
        })
    }
}

pub fn zeta_series(ring: &K0Ring, x: &MultiPoly, order: usize) -> Result<PowerSeries> {
    ring.sym_series(x, order)
}

/// A series known to terminate at `degree`, as a polynomial in `T`.
fn terminating(series: &PowerSeries, degree: usize, what: &str) -> Result<MultiPoly> {
    if !series.coeff(degree + 1)?.is_zero() {
        return Err(Error::domain(format!("{what} does not terminate at degree {degree}")));
    }
    Ok(series.truncate(degree)?.to_poly(T_VAR))
}

pub fn rational_form(ring: &K0Ring, x_plus: &MultiPoly, x_minus: &MultiPoly, order: usize) -> Result<ZetaFunction> {
    let e = ring.kimura_degree(x_plus, Parity::Plus)?;
    let f = ring.kimura_degree(x_minus, Parity::Minus)?;
    let q = ring.alt_series(x_plus, e + 1)?;
    let p = ring.sym_series(x_minus, f + 1)?;
    let numerator = terminating(&p, f, "Sym series of the minus part")?;
    let denominator_arg = terminating(&q, e, "Alt series of the plus part")?;
    let num = PowerSeries::from_poly(&numerator, T_VAR, order)?;
    let den = PowerSeries::from_poly(&denominator_arg, T_VAR, order)?;
    let series = num.mul(&den.negate_variable().invert()?)?;
    Ok(ZetaFunction {
        numerator,
        denominator_arg,
        series,
        e,
        f,
    })
}

fn lt_indices(vars: &Vars) -> Result<(usize, usize)> {
    let l = vars.require("L")?;
    let t = vars.require("T")?;
    if !vars.is_invertible(l) || !vars.is_invertible(t) {
        return Err(Error::usage("functional equations need invertible L and T"));
    }
    Ok((l, t))
}

/// `F(L^{-d} T^{-1})`.
pub fn dual_substitute(f: &MultiPoly, d: i64) -> Result<MultiPoly> {
    let vars = f.vars();
    let (l, t) = lt_indices(vars)?;
    let mut e = vec![0; vars.len()];
    e[l] = -(d as i32);
    e[t] = -1;
    let image = MultiPoly::from_term(vars, Monomial::from_exponents(e), BigInt::from(1));
    f.substitute(vars.name(t), &image)
}

fn lt_monomial(vars: &Vars, l_exp: i64, t_exp: i64) -> Result<MultiPoly> {
    let (l, t) = lt_indices(vars)?;
    let mut e = vec![0; vars.len()];
    e[l] = l_exp as i32;
    e[t] = t_exp as i32;
    Ok(MultiPoly::from_term(vars, Monomial::from_exponents(e), BigInt::from(1)))
}

/// Lowest `T`-coefficient of a nonzero difference, rendered.
fn witness(diff: &MultiPoly) -> Option<String> {
    if diff.is_zero() {
        return None;
    }
    let (t, _) = lt_indices(diff.vars()).ok()?;
    let (k, c) = diff.coefficients_in(t).into_iter().next()?;
    Some(format!("T^{k}: {c}"))
}

/// Checks `F(1/(L^d T)) (L^d T)^n = L^c G(T)`.
pub fn check_pair(subject: &str, f: &MultiPoly, g: &MultiPoly, d: i64, n: usize, c: i64) -> Result<FEReport> {
    let lhs = &dual_substitute(f, d)? * &lt_monomial(f.vars(), d * n as i64, n as i64)?;
    let rhs = g * &lt_monomial(g.vars(), c, 0)?;
    Ok(FEReport::new(subject, d, n, c, witness(&(&lhs - &rhs))))
}

/// Checks `F(1/(L^d T)) = T^{-n} L^{-dn/2} F(T)` for `F(0) = 1`, `deg F ≤ n`.
pub fn check_fe(subject: &str, f: &MultiPoly, d: i64, n: usize) -> Result<FEReport> {
    if (d * n as i64) % 2 != 0 {
        return Err(Error::domain(format!(
            "half-integral twist unsupported: weight {d} times degree {n} is odd"
        )));
    }
    let (_, t) = lt_indices(f.vars())?;
    if let Some((lo, hi)) = f.degree_range(t) {
        if lo < 0 || hi as usize > n {
            return Err(Error::usage(format!("polynomial has T-degrees {lo}..{hi}, outside 0..{n}")));
        }
    }
    if f.coefficient_of(t, 0) != MultiPoly::one(f.vars()) {
        return Err(Error::usage("functional equations are stated for F(0) = 1"));
    }
    check_pair(subject, f, f, d, n, d * n as i64 / 2)
}

fn degree_report(subject: String, weight: i64, found: Option<usize>, expected: usize) -> FEReport {
    let witness = match found {
        Some(k) if k == expected => None,
        Some(k) => Some(format!("degree {k}, expected {expected}")),
        None => Some("series does not terminate".into()),
    };
    FEReport::new(subject, weight, expected, weight * expected as i64 / 2, witness)
}

/// Exact degree of a series that should terminate below its order.
fn series_degree(s: &PowerSeries) -> Option<usize> {
    let top = (0..=s.order()).rev().find(|&i| !s.coeffs()[i].is_zero()).unwrap_or(0);
    (top < s.order()).then_some(top)
}

fn ring_with_minus_atom(atom: &str, bound: usize, relations: &[(usize, String)]) -> Result<K0Ring> {
    let mut b = MotiveBuilder::new();
    b.atom(atom, Parity::Minus, bound)?;
    for (i, rhs) in relations {
        b.relation(atom, *i, rhs)?;
    }
    b.build()
}

/// One minus atom `h` of bound `2g` with `Sym^{2g}(h) = L^g`.
pub fn abelian_motive(g: usize) -> Result<(K0Ring, Split)> {
    if g == 0 {
        return Err(Error::usage("abelian varieties need g >= 1"));
    }
    let ring = ring_with_minus_atom("h", 2 * g, &[(2 * g, format!("L^{g}"))])?;
    let split = Split::abelian(&ring, "h", g)?;
    Ok((ring, split))
}

/// `1 + h + L` with `Sym^i(h) = L^{i-g} Sym^{2g-i}(h)` for `i > g`.
pub fn curve_motive(g: usize) -> Result<(K0Ring, Split)> {
    if g == 0 {
        let ring = MotiveBuilder::new().build()?;
        let plus = ring.parse("1 + L")?;
        return Ok((
            ring.clone(),
            Split {
                plus,
                minus: ring.zero(),
                e: 2,
                f: 0,
                weight: 1,
            },
        ));
    }
    let relations: Vec<(usize, String)> = (g + 1..=2 * g)
        .map(|i| {
            let rest = match 2 * g - i {
                0 => "1".to_string(),
                1 => "h".to_string(),
                k => format!("Sym{k}(h)"),
            };
            (i, format!("L^{} * {rest}", i - g))
        })
        .collect();
    let ring = ring_with_minus_atom("h", 2 * g, &relations)?;
    let split = Split {
        plus: ring.parse("1 + L")?,
        minus: ring.parse("h")?,
        e: 2,
        f: 2 * g,
        weight: 1,
    };
    Ok((ring, split))
}

/// `(X×Y)^+ = X^+Y^+ + X^-Y^-`, `(X×Y)^- = X^+Y^- + X^-Y^+`.
pub fn product_motive(x: &Split, y: &Split) -> Split {
    Split {
        plus: &(&x.plus * &y.plus) + &(&x.minus * &y.minus),
        minus: &(&x.plus * &y.minus) + &(&x.minus * &y.plus),
        e: x.e * y.e + x.f * y.f,
        f: x.e * y.f + x.f * y.e,
        weight: x.weight + y.weight,
    }
}

/// Blow-up of `x` along `y` of codimension `d`: adds `Σ_{i<d} L^i y`.
pub fn blowup_motive(ring: &K0Ring, x: &Split, y: &Split, d: usize) -> Result<Split> {
    if d == 0 {
        return Err(Error::usage("blow-up codimension must be at least 1"));
    }
    let mut out = x.clone();
    for i in 1..d {
        let li = ring.l_pow(i as i32);
        out.plus += &(&li * &y.plus);
        out.minus += &(&li * &y.minus);
        out.e += y.e;
        out.f += y.f;
    }
    Ok(out)
}

/// Degree checks and functional equations for both parts of a split.
pub fn verify_split(ring: &K0Ring, name: &str, x: &Split) -> Result<Vec<FEReport>> {
    let q = ring.alt_series(&x.plus, x.e + 1)?;
    let p = ring.sym_series(&x.minus, x.f + 1)?;
    let mut out = vec![
        degree_report(format!("{name}: deg Q = {}", x.e), x.weight, series_degree(&q), x.e),
        degree_report(format!("{name}: deg P = {}", x.f), x.weight, series_degree(&p), x.f),
    ];
    out.push(check_fe(&format!("{name}: FE of Q"), &q.truncate(x.e)?.to_poly(T_VAR), x.weight, x.e)?);
    out.push(check_fe(&format!("{name}: FE of P"), &p.truncate(x.f)?.to_poly(T_VAR), x.weight, x.f)?);
    Ok(out)
}

/// The factor identities, degree totals and functional equations of an
/// abelian variety of dimension `g`.
pub fn verify_abelian(g: usize) -> Result<Vec<FEReport>> {
    let (ring, split) = abelian_motive(g)?;
    let w = g as i64;
    let mut factors = Vec::new();
    let mut out = Vec::new();
    for n in 0..=2 * g {
        let b = binomial(2 * g as i64, n as i64).to_usize().unwrap();
        let s = ring.symbol("h", n)?;
        let series = if n % 2 == 1 {
            ring.sym_series(&s, b + 1)?
        } else {
            ring.alt_series(&s, b + 1)?
        };
        let tag = if n % 2 == 1 { "P" } else { "Q" };
        out.push(degree_report(format!("A{g}: deg {tag}{n} = {b}"), w, series_degree(&series), b));
        factors.push((b, series.truncate(b)?.to_poly(T_VAR)));
    }
    for n in 0..=2 * g {
        let (b, f) = &factors[n];
        let partner = &factors[2 * g - n].1;
        let tag = if n % 2 == 1 { "P" } else { "Q" };
        out.push(check_pair(
            &format!("A{g}: {tag}{n} pairs with {tag}{}", 2 * g - n),
            f,
            partner,
            w,
            *b,
            (b * n / 2) as i64,
        )?);
    }
    let half = 1usize << (2 * g - 1);
    let odd: usize = (1..=2 * g).step_by(2).map(|n| factors[n].0).sum();
    let even: usize = (0..=2 * g).step_by(2).map(|n| factors[n].0).sum();
    out.push(degree_report(format!("A{g}: f = 2^(2g-1)"), w, Some(odd), half));
    out.push(degree_report(format!("A{g}: e = 2^(2g-1)"), w, Some(even), half));

    let vars = ring.vars();
    let mut p = MultiPoly::one(vars);
    let mut q = MultiPoly::one(vars);
    for (n, (_, f)) in factors.iter().enumerate() {
        if n % 2 == 1 {
            p = &p * f;
        } else {
            q = &q * f;
        }
    }
    let direct = rational_form(&ring, &split.plus, &split.minus, 0)?;
    out.push(FEReport::new(
        format!("A{g}: P = Sym series of the minus part"),
        w,
        split.f,
        w * split.f as i64 / 2,
        witness(&(&p - &direct.numerator)),
    ));
    out.push(FEReport::new(
        format!("A{g}: Q = Alt series of the plus part"),
        w,
        split.e,
        w * split.e as i64 / 2,
        witness(&(&q - &direct.denominator_arg)),
    ));
    out.push(check_fe(&format!("A{g}: FE of P"), &p, w, split.f)?);
    out.push(check_fe(&format!("A{g}: FE of Q"), &q, w, split.e)?);
    out.push(zeta_invariance(&format!("A{g}: Z(1/(L^g T)) = Z(T)"), &p, &q, w)?);
    Ok(out)
}

/// `P(T)/Q(-T)` is invariant under `T ↦ 1/(L^d T)`, checked cross-multiplied.
fn zeta_invariance(subject: &str, p: &MultiPoly, q: &MultiPoly, d: i64) -> Result<FEReport> {
    let (_, t) = lt_indices(q.vars())?;
    let minus_t = -&MultiPoly::var_at(q.vars(), t);
    let q_neg = q.substitute(q.vars().name(t), &minus_t)?;
    let lhs = &dual_substitute(p, d)? * &q_neg;
    let rhs = p * &dual_substitute(&q_neg, d)?;
    Ok(FEReport::new(subject, d, 0, 0, witness(&(&lhs - &rhs))))
}

/// Polynomial degree and Kapranov functional equation of a genus-`g` curve.
pub fn verify_curve(g: usize) -> Result<Vec<FEReport>> {
    let (ring, split) = curve_motive(g)?;
    let class = split.class();
    let order = 2 * (2 * g + 2) + 2;
    let z = zeta_series(&ring, &class, order)?;
    let denom = ring.parse("1 - T - L*T + L*T^2")?;
    let full = z.mul(&PowerSeries::from_poly(&denom, T_VAR, order)?)?;
    let mut out = vec![degree_report(
        format!("C{g}: (1-T)(1-LT)Z(T) is a polynomial of degree 2g"),
        1,
        series_degree(&full),
        2 * g,
    )];
    let p = full.truncate(2 * g)?.to_poly(T_VAR);
    out.push(check_fe(&format!("C{g}: FE of the numerator"), &p, 1, 2 * g)?);
    // ζ(1/(LT)) D(T) = L^{1-g} T^{2-2g} ζ(T) D(1/(LT)) with ζ = P/D.
    let lhs = &dual_substitute(&p, 1)? * &denom;
    let rhs = &(&p * &dual_substitute(&denom, 1)?) * &lt_monomial(ring.vars(), 1 - g as i64, 2 - 2 * g as i64)?;
    out.push(FEReport::new(
        format!("C{g}: zeta(1/(LT)) = L^(1-g) T^(2-2g) zeta(T)"),
        1,
        2 * g,
        1 - g as i64,
        witness(&(&lhs - &rhs)),
    ));
    Ok(out)
}

/// Which λ-series of a factor satisfies its functional equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Sym,
    Alt,
}

#[derive(Debug, Clone)]
pub struct Factor {
    pub element: MultiPoly,
    pub kind: Kind,
    pub degree: usize,
    pub weight: i64,
}

fn factor_series(ring: &K0Ring, x: &Factor, order: usize) -> Result<PowerSeries> {
    match x.kind {
        Kind::Sym => ring.sym_series(&x.element, order),
        Kind::Alt => ring.alt_series(&x.element, order),
    }
}

/// The functional equation of the λ-series of `xy` built from those of `x`
/// and `y`: `Alt(xy)` when both kinds agree, `Sym(xy)` otherwise.
pub fn verify_product(ring: &K0Ring, x: &Factor, y: &Factor) -> Result<FEReport> {
    let degree = x.degree * y.degree;
    let weight = x.weight + y.weight;
    let subject = format!("product of {} and {}", x.element, y.element);
    for (name, z) in [("x", x), ("y", y)] {
        let s = factor_series(ring, z, z.degree + 1)?;
        let mut why = None;
        if series_degree(&s) != Some(z.degree) {
            why = Some(format!("precondition: factor {name} does not have degree {}", z.degree));
        } else if (z.weight * z.degree as i64) % 2 != 0
            || !check_fe("", &s.truncate(z.degree)?.to_poly(T_VAR), z.weight, z.degree)?.passed
        {
            why = Some(format!("precondition: factor {name} fails its functional equation"));
        }
        if why.is_some() {
            return Ok(FEReport::new(subject, weight, degree, weight * degree as i64 / 2, why));
        }
    }
    let order = degree + 1;
    let sx = factor_series(ring, x, order)?;
    let sy = factor_series(ring, y, order)?;
    let built = universal_product(&sx, &sy, order)?;
    let xy = &x.element * &y.element;
    let direct = if x.kind == y.kind {
        ring.alt_series(&xy, order)?
    } else {
        ring.sym_series(&xy, order)?
    };
    if let Some(i) = built.first_difference(&direct) {
        let w = Some(format!("universal product disagrees with the engine at T^{i}"));
        return Ok(FEReport::new(subject, weight, degree, weight * degree as i64 / 2, w));
    }
    if series_degree(&built) != Some(degree) {
        let w = Some(format!("product series does not have degree {degree}"));
        return Ok(FEReport::new(subject, weight, degree, weight * degree as i64 / 2, w));
    }
    check_fe(&subject, &built.truncate(degree)?.to_poly(T_VAR), weight, degree)
}

/// `q^x`, `q^y` and `q^{xy}` for two rank-2 factors of weight 1 whose roots
/// are paired as `ξ₂ = L/ξ₁` and `x₂ = L/x₁`.
pub fn paired_variable_model() -> Result<Vec<FEReport>> {
    let vars = VarTable::new([("L", true), ("T", true), ("u", true), ("v", true)])?;
    let p = |s: &str| MultiPoly::parse(&vars, s);
    let xs = [p("u")?, p("L*u^-1")?];
    let ys = [p("v")?, p("L*v^-1")?];
    let t = p("T")?;
    let linear = |r: &MultiPoly| &MultiPoly::one(&vars) + &(r * &t);
    let qx = &linear(&xs[0]) * &linear(&xs[1]);
    let qy = &linear(&ys[0]) * &linear(&ys[1]);
    let mut qxy = MultiPoly::one(&vars);
    for a in &xs {
        for b in &ys {
            qxy = &qxy * &linear(&(a * b));
        }
    }
    Ok(vec![
        check_fe("paired model: q^x", &qx, 1, 2)?,
        check_fe("paired model: q^y", &qy, 1, 2)?,
        check_fe("paired model: q^xy", &qxy, 2, 4)?,
    ])
}

/// Default series order for a zeta function of the given degree.
pub fn default_order(degree: usize) -> usize {
    2 * degree + 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt_ring() -> K0Ring {
        MotiveBuilder::new().build().unwrap()
    }

    #[test]
    fn check_fe_examples() {
        let r = lt_ring();
        assert!(check_fe("", &r.parse("1 + T").unwrap(), 0, 1).unwrap().passed);
        let q = r.parse("(1 + T)*(1 + L*T)").unwrap();
        let rep = check_fe("", &q, 1, 2).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.l_exponent, 1);
        assert!(matches!(check_fe("", &r.parse("1 + L*T").unwrap(), 1, 1), Err(Error::Domain(_))));
        let bad = check_fe("", &r.parse("1 + T + T^2").unwrap(), 1, 2).unwrap();
        assert!(!bad.passed && bad.witness.is_some());
    }

    #[test]
    fn point_and_projective_line() {
        let r = lt_ring();
        let z = zeta_series(&r, &r.one(), 5).unwrap();
        assert!(z.coeffs().iter().all(MultiPoly::is_one));
        let z = zeta_series(&r, &r.parse("1 + L").unwrap(), 4).unwrap();
        assert_eq!(z.coeffs()[3], r.parse("1 + L + L^2 + L^3").unwrap());
    }

    #[test]
    fn elliptic_rational_form() {
        let (ring, s) = abelian_motive(1).unwrap();
        assert_eq!(s.plus, ring.parse("1 + L").unwrap());
        assert_eq!(s.minus, ring.parse("h").unwrap());
        let z = rational_form(&ring, &s.plus, &s.minus, 6).unwrap();
        assert_eq!(z.numerator, ring.parse("1 + h*T + L*T^2").unwrap());
        assert_eq!(z.denominator_arg, ring.parse("(1 + T)*(1 + L*T)").unwrap());
        assert_eq!(z.series, zeta_series(&ring, &s.class(), 6).unwrap());
        assert!(abelian_motive(0).is_err());
    }

    #[test]
    fn abelian_small() {
        for g in 1..=2 {
            for rep in verify_abelian(g).unwrap() {
                assert!(rep.passed, "{rep:?}");
            }
        }
    }

    #[test]
    fn curves_small() {
        for g in 0..=2 {
            for rep in verify_curve(g).unwrap() {
                assert!(rep.passed, "{rep:?}");
            }
        }
        let (r1, c1) = curve_motive(1).unwrap();
        let (_, a1) = abelian_motive(1).unwrap();
        assert_eq!(c1.class().to_string(), a1.class().to_string());
        assert_eq!(r1.vars().names().len(), 4);
    }

    #[test]
    fn paired_model() {
        for rep in paired_variable_model().unwrap() {
            assert!(rep.passed, "{rep:?}");
        }
    }
}
