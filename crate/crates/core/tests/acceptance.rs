//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use mzeta::identities::sample_ring;
use mzeta::lambda::{K0Ring, Route, T_VAR};
use mzeta::partition::{binomial, partitions_of, Partition};
use mzeta::poly::{MultiPoly, VarTable, Vars};
use mzeta::symfunc::{Basis, SymFunc};
use mzeta::universal::{
    p_vars, pnr_vars, store, universal_p, universal_pnr, verify_q_fe, PMethod, PnrMethod, UniversalKey,
};
use mzeta::zeta::{self, Factor, Kind, Split};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(reports: &[zeta::FEReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.passed) {
        None => Ok(()),
        Some(r) => Err(format!("{} failed: {:?}", r.subject, r.witness)),
    }
}

// ---------------------------------------------------------------------------
// 1

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 1..=5 {
        let a = universal_p(n, PMethod::Naive).unwrap().value;
        let b = universal_p(n, PMethod::Cauchy).unwrap().value;
        ensure(a == b, || format!("P{n} methods disagree"))?;
    }
    let mut pairs = 0;
    for n in 1..=8 {
        for r in 1..=8 / n {
            let a = universal_pnr(n, r, PnrMethod::Naive).unwrap().value;
            let b = universal_pnr(n, r, PnrMethod::Plethysm).unwrap().value;
            ensure(a == b, || format!("P{n},{r} methods disagree"))?;
            pairs += 1;
        }
    }
    let p2 = MultiPoly::parse(&p_vars(2), "s1^2*t2 + s2*t1^2 - 2*s2*t2").unwrap();
    ensure(universal_p(2, PMethod::Naive).unwrap().value == p2, || "P2 pinned value".into())?;
    let p22 = MultiPoly::parse(&pnr_vars(4), "s1*s3 - s4").unwrap();
    ensure(universal_pnr(2, 2, PnrMethod::Naive).unwrap().value == p22, || "P2,2 pinned value".into())?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("P_n for n<=5, {pairs} P_n,r with rn<=8, {:.1}s", t.as_secs_f64()))
}

// ---------------------------------------------------------------------------
// 2, 3: the free λ-ring is the ring of symmetric functions

fn e_images(f: &SymFunc, top: usize) -> Vec<SymFunc> {
    (1..=top).map(|k| SymFunc::e(k).plethysm(f).unwrap()).collect()
}

fn criterion_2() -> Outcome {
    let shapes: Vec<Partition> = (1..=3).flat_map(partitions_of).collect();
    let mut count = 0;
    for (i, mu) in shapes.iter().enumerate() {
        for nu in &shapes[i..] {
            let f = SymFunc::s(mu.clone());
            let g = SymFunc::s(nu.clone());
            let (fa, ga) = (e_images(&f, 4), e_images(&g, 4));
            let fg = f.mul(&g);
            for n in 1..=4 {
                let lhs = SymFunc::e(n).plethysm(&fg).unwrap().convert(Basis::P);
                let p = universal_p(n, PMethod::Cauchy).unwrap().value;
                let imgs: Vec<SymFunc> = fa[..n].iter().chain(&ga[..n]).cloned().collect();
                let rhs = SymFunc::eval_poly(&p, &imgs).unwrap();
                ensure(lhs == rhs, || format!("e{n}[s{mu} s{nu}]"))?;
                count += 1;
            }
        }
    }
    for m in 1..=8 {
        for n in 1..=8 / m {
            let lhs = SymFunc::e(m).plethysm(&SymFunc::e(n)).unwrap().convert(Basis::P);
            let p = universal_pnr(m, n, PnrMethod::Naive).unwrap().value;
            let imgs: Vec<SymFunc> = (1..=m * n).map(SymFunc::e).collect();
            ensure(lhs == SymFunc::eval_poly(&p, &imgs).unwrap(), || format!("e{m}[e{n}]"))?;
            count += 1;
        }
    }
    Ok(format!("{count} identities"))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for m in 1..=8 {
        for n in 1..=8 / m {
            let outer = if n % 2 == 1 { SymFunc::h(m) } else { SymFunc::e(m) };
            let lhs = outer.plethysm(&SymFunc::h(n)).unwrap().convert(Basis::P);
            let p = universal_pnr(m, n, PnrMethod::Naive).unwrap().value;
            let imgs: Vec<SymFunc> = (1..=m * n).map(SymFunc::h).collect();
            ensure(lhs == SymFunc::eval_poly(&p, &imgs).unwrap(), || format!("m={m} n={n}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} identities"))
}

// ---------------------------------------------------------------------------
// 4

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn multisets(n: usize, k: usize, from: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in from..n {
        for mut rest in multisets(n, k - 1, i) {
            rest.insert(0, i);
            out.push(rest);
        }
    }
    out
}

fn product_of(vars: &Vars, letters: &[MultiPoly], pick: &[usize]) -> MultiPoly {
    pick.iter().fold(MultiPoly::one(vars), |acc, &i| &acc * &letters[i])
}

fn elementary(vars: &Vars, letters: &[MultiPoly], k: usize) -> MultiPoly {
    subsets(letters.len(), k)
        .iter()
        .fold(MultiPoly::zero(vars), |acc, s| &acc + &product_of(vars, letters, s))
}

fn complete(vars: &Vars, letters: &[MultiPoly], k: usize) -> MultiPoly {
    multisets(letters.len(), k, 0)
        .iter()
        .fold(MultiPoly::zero(vars), |acc, s| &acc + &product_of(vars, letters, s))
}

fn product_corpus(ring: &K0Ring) -> Vec<MultiPoly> {
    ["a", "b", "1 + L", "L^-1*a", "a - 1", "c", "u", "a + c", "-b", "2 + a*b"]
        .iter()
        .map(|s| ring.parse(s).unwrap())
        .collect()
}

fn criterion_4() -> Outcome {
    let names: Vec<String> = (1..=4).map(|i| format!("x{i}")).chain((1..=4).map(|i| format!("y{i}"))).collect();
    let vars = VarTable::polynomial(names).unwrap();
    let x: Vec<MultiPoly> = (0..4).map(|i| MultiPoly::var_at(&vars, i)).collect();
    let y: Vec<MultiPoly> = (4..8).map(|i| MultiPoly::var_at(&vars, i)).collect();
    let xy: Vec<MultiPoly> = x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect();
    for n in 1..=4 {
        let p = universal_p(n, PMethod::Naive).unwrap().value;
        let at = |a: &dyn Fn(usize) -> MultiPoly, b: &dyn Fn(usize) -> MultiPoly| {
            let imgs: Vec<MultiPoly> = (1..=n).map(a).chain((1..=n).map(b)).collect();
            p.eval_hom(&vars, &imgs).unwrap()
        };
        let ex = |k| elementary(&vars, &x, k);
        let hx = |k| complete(&vars, &x, k);
        let ey = |k| elementary(&vars, &y, k);
        let hy = |k| complete(&vars, &y, k);
        let alt_xy = elementary(&vars, &xy, n);
        let sym_xy = complete(&vars, &xy, n);
        ensure(alt_xy == at(&hx, &hy), || format!("symsym at degree {n}"))?;
        ensure(sym_xy == at(&hx, &ey), || format!("symalt at degree {n}"))?;
        ensure(sym_xy == at(&ex, &hy), || format!("altsym at degree {n}"))?;
        ensure(alt_xy == at(&ex, &ey), || format!("altalt at degree {n}"))?;
    }
    let ring = sample_ring(6).unwrap();
    let corpus = product_corpus(&ring);
    let mut pairs = 0;
    for (i, x) in corpus.iter().enumerate() {
        for y in &corpus[i..] {
            let xy = x * y;
            let base = ring.lambda_pair(&xy, 6, Route::SymAlt).unwrap();
            for route in [Route::AltSym, Route::SymSym, Route::AltAlt, Route::Auto] {
                let other = ring.lambda_pair(&xy, 6, route).unwrap();
                ensure(other == base, || format!("route {route:?} on ({x})({y})"))?;
            }
            pairs += 1;
        }
    }
    Ok(format!("two-alphabet model to degree 4, {pairs} corpus pairs to degree 6"))
}

// ---------------------------------------------------------------------------
// 5, 6: a model with explicit roots r_1..r_g, L/r_1..L/r_g

fn root_model(g: usize) -> (Vars, Vec<MultiPoly>) {
    let mut spec: Vec<(String, bool)> = vec![("L".into(), true), ("T".into(), true)];
    spec.extend((1..=g).map(|i| (format!("r{i}"), true)));
    let vars = VarTable::new(spec).unwrap();
    let l = MultiPoly::var_at(&vars, 0);
    let mut roots: Vec<MultiPoly> = (0..g).map(|i| MultiPoly::var_at(&vars, 2 + i)).collect();
    let duals: Vec<MultiPoly> = roots.iter().map(|r| &l * &r.pow_i(-1).unwrap()).collect();
    roots.extend(duals);
    (vars, roots)
}

/// Sends `L`, `T` to themselves and the `i`-th symbol of the atom `h` to
/// `e_i` of the roots.
fn realize(ring: &K0Ring, x: &MultiPoly, vars: &Vars, roots: &[MultiPoly]) -> MultiPoly {
    let rv = ring.vars();
    let images: Vec<MultiPoly> = (0..rv.len())
        .map(|i| match rv.name(i) {
            "L" | "T" => MultiPoly::var(vars, rv.name(i)).unwrap(),
            "h" => elementary(vars, roots, 1),
            name => {
                let k: usize = name.trim_start_matches("Sym").trim_end_matches("(h)").parse().unwrap();
                elementary(vars, roots, k)
            }
        })
        .collect();
    x.eval_hom(vars, &images).unwrap()
}

fn subset_product(vars: &Vars, roots: &[MultiPoly], n: usize) -> MultiPoly {
    let t = MultiPoly::var(vars, "T").unwrap();
    subsets(roots.len(), n).iter().fold(MultiPoly::one(vars), |acc, s| {
        &acc * &(&MultiPoly::one(vars) + &(&product_of(vars, roots, s) * &t))
    })
}

fn abelian_oracle(g: usize) -> Result<(), String> {
    let (ring, split) = zeta::abelian_motive(g).unwrap();
    let (vars, roots) = root_model(g);
    for n in 0..=2 * g {
        let b = binomial(2 * g as i64, n as i64).to_usize().unwrap();
        let s = ring.symbol("h", n).unwrap();
        let series = if n % 2 == 1 {
            ring.sym_series(&s, b + 1).unwrap()
        } else {
            ring.alt_series(&s, b + 1).unwrap()
        };
        let f = series.to_poly(T_VAR);
        ensure(realize(&ring, &f, &vars, &roots) == subset_product(&vars, &roots, n), || {
            format!("factor {n} of A{g} differs from the root model")
        })?;
    }
    let half = 1usize << (2 * g - 1);
    ensure(split.e == half && split.f == half, || format!("A{g} degrees {} {}", split.e, split.f))
}

fn criterion_5() -> Outcome {
    let mut times = Vec::new();
    for (g, limit) in [(1, 5), (2, 300)] {
        let start = Instant::now();
        let reports = zeta::verify_abelian(g).unwrap();
        let t = start.elapsed();
        all_pass(&reports)?;
        for subject in ["FE of P", "FE of Q", "f = 2^(2g-1)", "e = 2^(2g-1)"] {
            ensure(reports.iter().any(|r| r.subject.ends_with(subject) && r.passed), || {
                format!("A{g}: missing {subject}")
            })?;
        }
        ensure(t < Duration::from_secs(limit), || format!("g={g} took {t:?}"))?;
        abelian_oracle(g)?;
        times.push(format!("g={g} {:.2}s", t.as_secs_f64()));
    }
    for g in 1..=3 {
        for n in 0..=2 * g {
            let r = verify_q_fe(g, n).unwrap();
            ensure(r.passed, || format!("q^{g}_{n}: {:?}", r.witness))?;
        }
    }
    Ok(format!("{}, q-level for g<=3", times.join(", ")))
}

fn criterion_6() -> Outcome {
    for g in 0..=3 {
        all_pass(&zeta::verify_curve(g).unwrap())?;
        let (ring, split) = zeta::curve_motive(g).unwrap();
        let order = 2 * g + 6;
        let z = zeta::zeta_series(&ring, &split.class(), order).unwrap();
        let denom = ring.parse("(1 - T)*(1 - L*T)").unwrap();
        let full = z.mul(&mzeta::series::PowerSeries::from_poly(&denom, T_VAR, order).unwrap()).unwrap();
        let top = (0..=order).rev().find(|&i| !full.coeffs()[i].is_zero()).unwrap();
        ensure(top == 2 * g, || format!("C{g}: degree {top}"))?;
        let p = full.to_poly(T_VAR);
        let (vars, roots) = root_model(g);
        ensure(realize(&ring, &p, &vars, &roots) == subset_product(&vars, &roots, 1), || {
            format!("C{g}: numerator differs from the root model")
        })?;
        // ζ(1/(LT)) = L^{1-g} T^{2-2g} ζ(T), cross-multiplied.
        let inv = ring.parse("L^-1*T^-1").unwrap();
        let p_dual = p.substitute("T", &inv).unwrap();
        let d_dual = denom.substitute("T", &inv).unwrap();
        let twist = &ring.l_pow(1 - g as i32) * &ring.t_pow(2 - 2 * g as i32);
        ensure(&p_dual * &denom == &(&twist * &p) * &d_dual, || format!("C{g}: FE"))?;
    }
    Ok("g = 0..3".into())
}

// ---------------------------------------------------------------------------
// 7, 8

fn criterion_7() -> Outcome {
    let ring = sample_ring(1).unwrap();
    let elliptic = |name: &str| Factor {
        element: ring.parse(name).unwrap(),
        kind: Kind::Sym,
        degree: 2,
        weight: 1,
    };
    let r = zeta::verify_product(&ring, &elliptic("a"), &elliptic("b")).unwrap();
    ensure(r.passed && r.degree == 4 && r.weight == 2 && r.l_exponent == 4, || format!("{r:?}"))?;
    // Alt(ab) by the subsets of the four products of roots.
    let q = ring.alt_series(&ring.parse("a*b").unwrap(), 5).unwrap();
    ensure(q.coeffs()[5].is_zero() && !q.coeffs()[4].is_zero(), || "deg Q(ab) != 4".into())?;
    ensure(q.coeffs()[4] == ring.l_pow(4), || format!("top of Q(ab) is {}", q.coeffs()[4]))?;

    let a = Split::abelian(&ring, "a", 1).unwrap();
    let b = Split::abelian(&ring, "b", 1).unwrap();
    let ee = zeta::product_motive(&a, &b);
    ensure(ee.e == 2 * 2 + 2 * 2 && ee.f == 8, || format!("E x E' degrees {} {}", ee.e, ee.f))?;
    let (_, a2) = zeta::abelian_motive(2).unwrap();
    ensure((a2.e, a2.f) == (ee.e, ee.f), || "abelian surface degrees differ".into())?;
    all_pass(&zeta::verify_split(&ring, "E x E'", &ee).unwrap())?;
    let z = zeta::rational_form(&ring, &ee.plus, &ee.minus, 8).unwrap();
    let direct = zeta::zeta_series(&ring, &(&a.class() * &b.class()), 8).unwrap();
    ensure(z.series == direct, || "E x E' series".into())?;
    all_pass(&zeta::paired_variable_model().unwrap())?;
    Ok("deg Q = 4, L^4; e = f = 8; paired model".into())
}

fn criterion_8() -> Outcome {
    let (ring, a) = zeta::abelian_motive(2).unwrap();
    let bl = zeta::blowup_motive(&ring, &a, &Split::point(&ring), 2).unwrap();
    ensure(bl.e == 9 && bl.f == 8, || format!("degrees {} {}", bl.e, bl.f))?;
    let q = ring.alt_series(&bl.plus, 10).unwrap();
    ensure(q.coeffs()[10].is_zero(), || "Q does not terminate".into())?;
    let r = zeta::check_fe("blow-up", &q.to_poly(T_VAR), 2, 9).unwrap();
    ensure(r.passed && r.l_exponent == 9, || format!("{r:?}"))?;
    Ok("degree 9, L^9".into())
}

// ---------------------------------------------------------------------------
// 9, 10

fn criterion_9() -> Outcome {
    let ring = sample_ring(10).unwrap();
    let corpus = [
        "1", "L", "L^-1", "-1", "1 + L", "1 - L", "a", "-a", "L*a", "L^-2*b", "a*b", "a^2", "1 + a + L",
        "a - b", "2*a + L^2", "c", "-c", "c*a", "L*c - 1", "u", "-u", "u*a", "u + L*u", "3 - 2*L*a*b",
    ];
    for text in corpus {
        let x = ring.parse(text).unwrap();
        let s = ring.sym_series(&x, 10).unwrap();
        let a = ring.alt_series(&x, 10).unwrap().negate_variable();
        let prod = s.mul(&a).unwrap();
        ensure(prod == mzeta::series::PowerSeries::one(ring.vars(), 10), || format!("x = {text}"))?;
    }
    Ok(format!("{} expressions to order 10", corpus.len()))
}

/// Standard Young tableaux by removing corners.
fn syt(shape: &[usize]) -> BigInt {
    if shape.iter().sum::<usize>() == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for i in 0..shape.len() {
        let corner = shape[i] > 0 && (i + 1 == shape.len() || shape[i + 1] < shape[i]);
        if corner {
            let mut s = shape.to_vec();
            s[i] -= 1;
            total += syt(&s);
        }
    }
    total
}

fn criterion_10() -> Outcome {
    let ring = sample_ring(12).unwrap();
    let elements = ["1 + L + a", "a*b", "c - L", "u", "a + c"].map(|s| ring.parse(s).unwrap());
    let hook = |a: usize, b: usize| {
        let mut p = vec![a];
        p.extend(std::iter::repeat_n(1, b));
        Partition::from_unsorted(p)
    };
    for x in &elements {
        for n in 1..=4 {
            let mut sum = ring.zero();
            for lam in partitions_of(n) {
                sum += &ring.schur(&lam, x).unwrap().scale(&syt(lam.parts()));
            }
            ensure(sum == x.pow(n as u32), || format!("decomposition n={n} x={x}"))?;
        }
        for i in 1..=4 {
            for j in 1..=5 - i {
                let lhs = &ring.sym(i, x).unwrap() * &ring.alt(j, x).unwrap();
                let rhs = &ring.schur(&hook(i + 1, j - 1), x).unwrap() + &ring.schur(&hook(i, j), x).unwrap();
                ensure(lhs == rhs, || format!("Pieri i={i} j={j} x={x}"))?;
            }
        }
        let lx = &ring.l_pow(1) * x;
        for n in 1..=3 {
            for lam in partitions_of(n) {
                let lhs = ring.schur(&lam, &lx).unwrap();
                let rhs = &ring.l_pow(n as i32) * &ring.schur(&lam, x).unwrap();
                ensure(lhs == rhs, || format!("Tate twist {lam} x={x}"))?;
            }
        }
    }
    Ok(format!("{} elements", elements.len()))
}

// ---------------------------------------------------------------------------
// 11

fn mzeta(args: &[&str], cache: Option<&Path>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mzeta"));
    cmd.env_remove("MZETA_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.arg("--cache-dir").arg(dir);
    }
    let out = cmd.args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn without_timings(report: &str) -> &str {
    report.split("\n## timings\n").next().unwrap()
}

fn criterion_11() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("elliptic.motive");
    std::fs::write(
        &doc,
        "atom h minus 2\nrelation h 2 = L\nexpr E = h + L + 1\n\
         split Es weight 1; plus = L + 1; minus = h\ntask zeta E order 4\ntask check Es\n",
    )
    .unwrap();
    let doc_s = doc.to_str().unwrap();
    let (code, canon) = mzeta(&["canon", doc_s], None);
    ensure(code == 0, || format!("canon exit {code}"))?;
    let canon_path = dir.path().join("canon.motive");
    std::fs::write(&canon_path, &canon).unwrap();
    let (_, again) = mzeta(&["canon", canon_path.to_str().unwrap()], None);
    ensure(again == canon, || "canonical document is not a fixed point".into())?;

    let (c1, r1) = mzeta(&["run", doc_s], None);
    let (c2, r2) = mzeta(&["run", doc_s], None);
    ensure(c1 == 0 && c2 == 0, || format!("run exit {c1} {c2}"))?;
    ensure(without_timings(&r1) == without_timings(&r2), || "reports differ".into())?;
    let (_, j1) = mzeta(&["--json", "run", doc_s], None);
    let v: serde_json::Value = serde_json::from_str(&j1).map_err(|e| e.to_string())?;
    ensure(v["failures"] == 0, || "json report".into())?;

    let bad = dir.path().join("bad.motive");
    std::fs::write(&bad, "split X weight 2; plus = 1 + L; minus = 0\ntask check X\n").unwrap();
    let (code, _) = mzeta(&["run", bad.to_str().unwrap()], None);
    ensure(code == 1, || format!("failing FE exit {code}"))?;
    for args in [
        &["verify", "abelian", "--g", "0"][..],
        &["universal", "Pnr", "1", "0"],
        &["frobnicate"],
        &["run", "/nonexistent/file.motive"],
        &["cache", "status"],
    ] {
        let (code, _) = mzeta(args, None);
        ensure(code == 2, || format!("{args:?} exit {code}"))?;
    }
    let (_, p2) = mzeta(&["universal", "P", "2"], None);
    let (_, q11) = mzeta(&["universal", "q", "1", "1"], None);
    ensure(q11 == "1 + s1*t + s2*t^2\n" && p2.contains("-2*s2*t2"), || format!("{p2} {q11}"))?;

    let cache = dir.path().join("fresh-cache");
    let (code, status) = mzeta(&["cache", "status"], Some(&cache));
    ensure(code == 0 && status.contains("entries: 0"), || "empty cache status".into())?;
    let (code, report) = mzeta(&["verify", "abelian", "--g", "1"], Some(&cache));
    ensure(code == 0 && report.contains("degrees (e, f): (2, 2)"), || format!("verify exit {code}"))?;
    let (code, report2) = mzeta(&["verify", "abelian", "--g", "1"], Some(&cache));
    ensure(code == 0, || "warm rerun".into())?;
    let strip = |r: &str| without_timings(r).split("\n## cache\n").next().unwrap().to_string();
    ensure(strip(&report) == strip(&report2), || "cached rerun differs".into())?;
    let (_, cleared) = mzeta(&["cache", "clear"], Some(&cache));
    ensure(cleared.contains("entries: 0"), || "clear".into())?;
    Ok("round-trip, determinism, exit codes 0/1/2, fresh-cache verify".into())
}

fn main() {
    // Warm the shared memo once so criterion timings measure the checks.
    let _ = store().get(UniversalKey::P(1));
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("universal polynomials cross-validated", criterion_1),
        ("free lambda-ring specialness", criterion_2),
        ("parity identities", criterion_3),
        ("product identities and route independence", criterion_4),
        ("abelian varieties g = 1, 2 and q-level g <= 3", criterion_5),
        ("curves g <= 3", criterion_6),
        ("products of elliptic curves", criterion_7),
        ("blow-up of an abelian surface", criterion_8),
        ("opposite lambda-structure", criterion_9),
        ("Schur-layer identities", criterion_10),
        ("command-line contract", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
