//! Self-checks of the λ-ring layers, grouped into suites by weight.
//!
//! Every check compares two independently computed sides exactly.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lambda::{K0Ring, MotiveBuilder, Parity, Route};
use crate::partition::{partitions_of, Partition};
use crate::poly::{Monomial, MultiPoly, VarTable, Vars};
use crate::series::PowerSeries;
use crate::symfunc::{Basis, SymFunc};
use crate::universal::{store, universal_p, universal_pnr, PMethod, PnrMethod, UniversalKey};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn equal<T: PartialEq + std::fmt::Display>(name: String, lhs: &T, rhs: &T) -> Check {
        let passed = lhs == rhs;
        Check {
            name,
            passed,
            detail: (!passed).then(|| format!("{lhs} != {rhs}")),
        }
    }
}

/// `P_n` and `P_{n,r}` by two methods each.
pub fn universal_suite(max_p: usize, max_pnr_weight: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_p {
        let a = universal_p(n, PMethod::Naive)?.value;
        let b = universal_p(n, PMethod::Cauchy)?.value;
        out.push(Check::equal(format!("P{n}: expansion = dual Cauchy"), &a, &b));
    }
    for w in 1..=max_pnr_weight {
        for r in 1..=w {
            if w % r != 0 {
                continue;
            }
            let n = w / r;
            let a = universal_pnr(n, r, PnrMethod::Naive)?.value;
            let b = universal_pnr(n, r, PnrMethod::Plethysm)?.value;
            out.push(Check::equal(format!("P{n},{r}: expansion = plethysm"), &a, &b));
        }
    }
    Ok(out)
}

fn lambda_images(f: &SymFunc, top: usize) -> Result<Vec<SymFunc>> {
    (1..=top).map(|k| SymFunc::e(k).plethysm(f)).collect()
}

fn p_images(n: usize, a: &[SymFunc], b: &[SymFunc]) -> Vec<SymFunc> {
    a[..n].iter().chain(b[..n].iter()).cloned().collect()
}

/// In the free λ-ring: `λ^n(fg) = P_n(λ f; λ g)` for Schur functions
/// `f = s_μ`, `g = s_ν`, and `λ^n(λ^r f) = P_{n,r}(λ f)`, whenever the
/// degree involved is at most `max_weight`.
pub fn free_special_suite(max_part_weight: usize, max_weight: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let shapes: Vec<Partition> = (1..=max_part_weight).flat_map(partitions_of).collect();
    for mu in &shapes {
        for nu in &shapes {
            if mu > nu {
                continue;
            }
            let top = max_weight / (mu.weight() + nu.weight());
            if top == 0 {
                continue;
            }
            let f = SymFunc::s(mu.clone());
            let g = SymFunc::s(nu.clone());
            let fa = lambda_images(&f, top)?;
            let ga = lambda_images(&g, top)?;
            let fg = f.mul(&g);
            for n in 1..=top {
                let lhs = SymFunc::e(n).plethysm(&fg)?.convert(Basis::P);
                let p = store().get(UniversalKey::P(n))?.value;
                let rhs = SymFunc::eval_poly(&p, &p_images(n, &fa, &ga))?;
                out.push(Check::equal(format!("e{n}[s{mu} s{nu}] = P{n}"), &lhs, &rhs));
            }
        }
    }
    for w in 2..=max_weight {
        for r in 2..=w {
            if w % r != 0 {
                continue;
            }
            let n = w / r;
            let lhs = SymFunc::e(n).plethysm(&SymFunc::e(r))?.convert(Basis::P);
            let p = store().get(UniversalKey::Pnr(n, r))?.value;
            let imgs: Vec<SymFunc> = (1..=w).map(SymFunc::e).collect();
            out.push(Check::equal(format!("e{n}[e{r}] = P{n},{r}(e)"), &lhs, &SymFunc::eval_poly(&p, &imgs)?));
        }
    }
    Ok(out)
}

/// `h_m[h_n] = P_{m,n}(h)` for odd `n` and `e_m[h_n] = P_{m,n}(h)` for even `n`.
pub fn parity_suite(max_weight: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for w in 1..=max_weight {
        for n in 1..=w {
            if w % n != 0 {
                continue;
            }
            let m = w / n;
            let outer = if n % 2 == 1 { SymFunc::h(m) } else { SymFunc::e(m) };
            let lhs = outer.plethysm(&SymFunc::h(n))?.convert(Basis::P);
            let p = store().get(UniversalKey::Pnr(m, n))?.value;
            let imgs: Vec<SymFunc> = (1..=w).map(SymFunc::h).collect();
            let tag = if n % 2 == 1 { "h" } else { "e" };
            out.push(Check::equal(
                format!("{tag}{m}[h{n}] = P{m},{n}(h)"),
                &lhs,
                &SymFunc::eval_poly(&p, &imgs)?,
            ));
        }
    }
    Ok(out)
}

/// Elementary and complete symmetric polynomials of an alphabet of
/// monomials, as series in `T` over `vars` (index `t` is `T`).
fn alphabet_series(vars: &Vars, letters: &[MultiPoly], t: usize, order: usize) -> Result<(PowerSeries, PowerSeries)> {
    let mut e = PowerSeries::one(vars, order);
    for z in letters {
        let mut exps = vec![0; vars.len()];
        exps[t] = 1;
        let zt = z * &MultiPoly::from_term(vars, Monomial::from_exponents(exps), 1.into());
        let factor = PowerSeries::from_poly(&(&MultiPoly::one(vars) + &zt), t, order)?;
        e = e.mul(&factor)?;
    }
    let h = e.negate_variable().invert()?;
    Ok((e, h))
}

/// The four product formulas on two alphabets of `size` letters, for
/// `n ≤ max_degree`.
pub fn product_suite(size: usize, max_degree: usize) -> Result<Vec<Check>> {
    let mut names: Vec<String> = (1..=size).map(|i| format!("x{i}")).collect();
    names.extend((1..=size).map(|i| format!("y{i}")));
    names.push("T".into());
    let vars = VarTable::polynomial(names)?;
    let t = 2 * size;
    let x: Vec<MultiPoly> = (0..size).map(|i| MultiPoly::var_at(&vars, i)).collect();
    let y: Vec<MultiPoly> = (0..size).map(|i| MultiPoly::var_at(&vars, size + i)).collect();
    let xy: Vec<MultiPoly> = x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect();
    let (ex, hx) = alphabet_series(&vars, &x, t, max_degree)?;
    let (ey, hy) = alphabet_series(&vars, &y, t, max_degree)?;
    let (exy, hxy) = alphabet_series(&vars, &xy, t, max_degree)?;
    let mut out = Vec::new();
    for n in 1..=max_degree {
        let p = store().get(UniversalKey::P(n))?.value;
        let eval = |a: &PowerSeries, b: &PowerSeries| -> Result<MultiPoly> {
            let imgs: Vec<MultiPoly> = a.coeffs()[1..=n].iter().chain(b.coeffs()[1..=n].iter()).cloned().collect();
            p.eval_hom(&vars, &imgs)
        };
        let cases = [
            ("Alt(xy) = P(Sym x; Sym y)", &exy, eval(&hx, &hy)?),
            ("Sym(xy) = P(Sym x; Alt y)", &hxy, eval(&hx, &ey)?),
            ("Sym(xy) = P(Alt x; Sym y)", &hxy, eval(&ex, &hy)?),
            ("Alt(xy) = P(Alt x; Alt y)", &exy, eval(&ex, &ey)?),
        ];
        for (name, lhs, rhs) in cases {
            out.push(Check::equal(format!("degree {n}: {name}"), &lhs.coeffs()[n], &rhs));
        }
    }
    Ok(out)
}

/// The ring used by the Schur-layer and route checks: two elliptic atoms
/// `a`, `b`, a plus atom `c` of bound 2 and a free atom `u` of bound `free`.
pub fn sample_ring(free: usize) -> Result<K0Ring> {
    let mut b = MotiveBuilder::new();
    b.atom("a", Parity::Minus, 2)?.relation("a", 2, "L")?;
    b.atom("b", Parity::Minus, 2)?.relation("b", 2, "L")?;
    b.atom("c", Parity::Plus, 2)?;
    b.atom("u", Parity::Free, free)?;
    b.build()
}

/// Decomposition, Pieri and Tate-twist identities for Schur operations.
pub fn schur_suite(ring: &K0Ring, elements: &[MultiPoly], max_weight: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let l = ring.l_pow(1);
    for x in elements {
        for n in 1..=max_weight.min(4) {
            let mut sum = ring.zero();
            for lam in partitions_of(n) {
                sum += &ring.schur(&lam, x)?.scale(&lam.syt_count());
            }
            out.push(Check::equal(format!("x^{n} = sum f S(x) for x = {x}"), &x.pow(n as u32), &sum));
        }
        for i in 1..max_weight.min(5) {
            for j in 1..=(max_weight.min(5) - i) {
                let lhs = &ring.sym(i, x)? * &ring.alt(j, x)?;
                let hook = |a: usize, b: usize| {
                    let mut p = vec![a];
                    p.extend(std::iter::repeat_n(1, b));
                    Partition::from_unsorted(p)
                };
                let rhs = &ring.schur(&hook(i + 1, j - 1), x)? + &ring.schur(&hook(i, j), x)?;
                out.push(Check::equal(format!("Sym{i} Alt{j} Pieri for x = {x}"), &lhs, &rhs));
            }
        }
        let lx = &l * x;
        for n in 1..=max_weight.min(3) {
            for lam in partitions_of(n) {
                let lhs = ring.schur(&lam, &lx)?;
                let rhs = &ring.l_pow(n as i32) * &ring.schur(&lam, x)?;
                out.push(Check::equal(format!("S{lam}(L x) = L^{n} S{lam}(x) for x = {x}"), &lhs, &rhs));
            }
        }
    }
    Ok(out)
}

/// All four product routes agree on `Sym` and `Alt` of `x*y`.
pub fn route_suite(ring: &K0Ring, pairs: &[(MultiPoly, MultiPoly)], order: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (x, y) in pairs {
        let xy = x * y;
        let base = ring.lambda_pair(&xy, order, Route::SymAlt)?;
        for route in [Route::SymSym, Route::AltSym, Route::AltAlt, Route::Auto] {
            let other = ring.lambda_pair(&xy, order, route)?;
            let name = format!("{route:?} = SymAlt for ({x})({y})");
            let passed = other == base;
            out.push(Check {
                name,
                passed,
                detail: (!passed).then(|| {
                    let i = other.sym.first_difference(&base.sym).or(other.alt.first_difference(&base.alt));
                    format!("first difference at T^{}", i.unwrap_or(0))
                }),
            });
        }
    }
    Ok(out)
}

/// The suites run by `verify identities`, cut off at `max_weight`.
pub fn all(max_weight: usize) -> Result<Vec<Check>> {
    let mut out = universal_suite(max_weight.min(5), max_weight.min(8))?;
    out.extend(free_special_suite(3, max_weight)?);
    out.extend(parity_suite(max_weight.min(8))?);
    out.extend(product_suite(4, max_weight.min(4))?);
    let ring = sample_ring(8)?;
    let p = |s: &str| ring.parse(s);
    let elements = [p("1 + L + a")?, p("a*b")?, p("c - L")?, p("u")?];
    out.extend(schur_suite(&ring, &elements, max_weight)?);
    let pairs = [(p("a")?, p("b")?), (p("1 + L")?, p("a")?), (p("a + c")?, p("b - 1")?), (p("u")?, p("a")?)];
    out.extend(route_suite(&ring, &pairs, max_weight.min(6))?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for c in all(4).unwrap() {
            assert!(c.passed, "{c:?}");
        }
    }
}
