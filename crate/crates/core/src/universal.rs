//! The universal polynomials of special λ-rings.
//!
//! - `P_n(σ; s)`: the coefficient of `t^n` in `∏_{i,j}(1 + ξ_i x_j t)`, with
//!   `σ_k`, `s_k` the elementary symmetric polynomials of the two alphabets.
//!   It governs `λ^n(xy)`.
//! - `P_{n,r}(σ)`: the coefficient of `t^n` in `∏_{|S|=r}(1 + ξ_S t)`, which
//!   governs `λ^n(λ^r x)`.
//! - The subset products `∏_{|S|=n, S ⊆ [f]}(1 + ξ_S t)` in `σ_1..σ_f`: the
//!   same data as `P_{m,n}` with `σ_l = 0` for `l > f`, for all `m` at once.
//!   For `f = 2g` these are the polynomials `q^g_n`.
//!
//! Every polynomial has two independent computations that are tested
//! against each other: a naive expansion followed by elementary reduction,
//! and a route through symmetric functions.
//!
//! Variable names: `P_n` uses `s1..sn` for the first alphabet and `t1..tn`
//! for the second; `P_{n,r}` uses `s1..s{rn}`; subset products use
//! `s1..sf` and `t`, with `sf` and `t` invertible.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::partition::{binomial, bounded_partitions, partitions_of, Partition};
use crate::poly::{Monomial, MultiPoly, VarTable, Vars};
use crate::symfunc::{Basis, SymFunc};
use crate::symmetric::{descend, elementary_reduce};
use crate::zeta::FEReport;

/// Largest weight `m·n` for which `P_{m,n}` is computed through plethysm.
pub const PLETHYSM_BUDGET: usize = 16;

/// Largest array the dense subset-product expansion will allocate.
const DENSE_BUDGET: usize = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PMethod {
    Naive,
    Cauchy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PnrMethod {
    Naive,
    Plethysm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QMethod {
    /// Expand the product over subsets and reduce.
    Direct,
    /// Assemble from `P_{m,n}` with the surplus arguments set to zero.
    Universal,
}

/// Identifies a universal polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UniversalKey {
    /// `P_n`.
    P(usize),
    /// `P_{n,r}`.
    Pnr(usize, usize),
    /// Product over the `n`-subsets of `f` letters.
    Subsets(usize, usize),
}

impl UniversalKey {
    pub fn vars(&self) -> Vars {
        match *self {
            UniversalKey::P(n) => p_vars(n),
            UniversalKey::Pnr(n, r) => pnr_vars(n * r),
            UniversalKey::Subsets(f, _) => subset_vars(f),
        }
    }

    /// True if every term of `p` has the weight this key prescribes, with
    /// `deg σ_i = deg s_i = i` (and `deg t = n` for subset products).
    pub fn grading_holds(&self, p: &MultiPoly) -> bool {
        let weight = |m: &Monomial, range: std::ops::Range<usize>| -> i64 {
            range
                .clone()
                .map(|i| (i - range.start + 1) as i64 * m.exponent(i) as i64)
                .sum()
        };
        p.terms().all(|(m, _)| match *self {
            UniversalKey::P(n) => {
                weight(m, 0..n) == n as i64 && weight(m, n..2 * n) == n as i64
            }
            UniversalKey::Pnr(n, r) => weight(m, 0..n * r) == (n * r) as i64,
            UniversalKey::Subsets(f, n) => {
                weight(m, 0..f) == n as i64 * m.exponent(f) as i64
            }
        })
    }

    /// Record header used by the disk cache.
    pub fn header(&self) -> String {
        match *self {
            UniversalKey::P(n) => format!("P {n}"),
            UniversalKey::Pnr(n, r) => format!("Pnr {n} {r}"),
            UniversalKey::Subsets(f, n) => format!("Q {f} {n}"),
        }
    }

    pub fn parse_header(line: &str) -> Result<UniversalKey> {
        let bad = || Error::parse(format!("bad cache record header `{line}`"));
        let mut it = line.split_whitespace();
        let tag = it.next().ok_or_else(bad)?;
        let nums: Vec<usize> = it
            .map(|s| s.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (tag, nums.as_slice()) {
            ("P", [n]) => Ok(UniversalKey::P(*n)),
            ("Pnr", [n, r]) => Ok(UniversalKey::Pnr(*n, *r)),
            ("Q", [f, n]) if *f >= 1 && n <= f => Ok(UniversalKey::Subsets(*f, *n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for UniversalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.header())
    }
}

/// A universal polynomial with its identifying key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalPoly {
    pub key: UniversalKey,
    pub value: MultiPoly,
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn table_cache() -> &'static RwLock<HashMap<String, Vars>> {
    static TABLES: OnceLock<RwLock<HashMap<String, Vars>>> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

fn shared_table(key: String, build: impl FnOnce() -> Vars) -> Vars {
    if let Some(v) = table_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let v = build();
    table_cache().write().unwrap().entry(key).or_insert(v).clone()
}

/// `s1..sn, t1..tn`.
pub fn p_vars(n: usize) -> Vars {
    shared_table(format!("P{n}"), || {
        VarTable::polynomial(names("s", n).into_iter().chain(names("t", n))).unwrap()
    })
}

/// `s1..sN`.
pub fn pnr_vars(n: usize) -> Vars {
    shared_table(format!("Pnr{n}"), || VarTable::polynomial(names("s", n)).unwrap())
}

/// `s1..sf, t` with `sf` and `t` invertible.
pub fn subset_vars(f: usize) -> Vars {
    shared_table(format!("Q{f}"), || {
        let mut v: Vec<(String, bool)> = names("s", f).into_iter().map(|s| (s, false)).collect();
        if let Some(last) = v.last_mut() {
            last.1 = true;
        }
        v.push(("t".into(), true));
        VarTable::new(v).unwrap()
    })
}

fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

/// Coefficients of `t^0..t^max` of a product of factors `1 + m_k t`.
fn truncated_product(vars: &Vars, monomials: &[Monomial], max: usize) -> Vec<MultiPoly> {
    let mut by_deg = vec![MultiPoly::zero(vars); max + 1];
    by_deg[0] = MultiPoly::one(vars);
    for m in monomials {
        for k in (1..=max).rev() {
            if !by_deg[k - 1].is_zero() {
                let shifted = by_deg[k - 1].shift(m);
                by_deg[k] += &shifted;
            }
        }
    }
    by_deg
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Integral e-basis element as a polynomial: `e_λ ↦ ∏ vars[λ_i - 1]`.
fn e_poly(f: &SymFunc, vars: &Vars, offset: usize) -> Result<MultiPoly> {
    let f = f.convert(Basis::E);
    let mut out = MultiPoly::zero(vars);
    for (lambda, c) in f.terms() {
        if !c.is_integer() {
            return Err(Error::domain(format!("non-integral coefficient {c} in e-basis")));
        }
        let mut e = vec![0i32; vars.len()];
        for &part in lambda.parts() {
            e[offset + part - 1] += 1;
        }
        out.add_term(Monomial::from_exponents(e), c.to_integer());
    }
    Ok(out)
}

type EExpansion = Arc<Vec<(Partition, BigInt)>>;

/// `s_μ` in the elementary basis, memoised.
pub fn schur_in_e(mu: &Partition) -> EExpansion {
    static MEMO: OnceLock<RwLock<HashMap<Partition, EExpansion>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = memo.read().unwrap().get(mu) {
        return v.clone();
    }
    let e = SymFunc::s(mu.clone()).convert(Basis::E);
    let v: EExpansion = Arc::new(
        e.terms()
            .iter()
            .map(|(l, c)| {
                assert!(c.is_integer(), "Schur functions are integral in the e-basis");
                (l.clone(), c.to_integer())
            })
            .collect(),
    );
    memo.write().unwrap().entry(mu.clone()).or_insert(v).clone()
}

/// `P_n` by the chosen method; `P_0 = 1`.
pub fn universal_p(n: usize, method: PMethod) -> Result<UniversalPoly> {
    let target = p_vars(n);
    let value = match method {
        _ if n == 0 => MultiPoly::one(&target),
        PMethod::Naive => {
            let (xs, ys) = (names("x", n), names("y", n));
            let src = VarTable::polynomial(xs.iter().chain(ys.iter()).cloned())?;
            let mut monomials = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let mut e = vec![0; 2 * n];
                    e[i] = 1;
                    e[n + j] = 1;
                    monomials.push(Monomial::from_exponents(e));
                }
            }
            let top = truncated_product(&src, &monomials, n).pop().unwrap();
            let (ss, ts) = (names("s", n), names("t", n));
            let mid = VarTable::polynomial(ss.iter().chain(ys.iter()).cloned())?;
            let half = elementary_reduce(&top, &strs(&xs), &strs(&ss), &mid)?;
            elementary_reduce(&half, &strs(&ys), &strs(&ts), &target)?
        }
        PMethod::Cauchy => {
            // Dual Cauchy: ∏(1 + ξ_i x_j t) = Σ_μ s_μ(ξ) s_μ'(x) t^|μ|.
            let mut out = MultiPoly::zero(&target);
            for mu in partitions_of(n) {
                let a = e_poly(&SymFunc::s(mu.clone()), &target, 0)?;
                let b = e_poly(&SymFunc::s(mu.conjugate()), &target, n)?;
                out += &(&a * &b);
            }
            out
        }
    };
    Ok(UniversalPoly {
        key: UniversalKey::P(n),
        value,
    })
}

/// `P_{n,r}` by the chosen method; `P_{0,r} = 1`.
pub fn universal_pnr(n: usize, r: usize, method: PnrMethod) -> Result<UniversalPoly> {
    if r == 0 {
        return Err(Error::usage("P_{n,r} needs r >= 1"));
    }
    let big = n * r;
    let target = pnr_vars(big);
    let value = match method {
        _ if n == 0 => MultiPoly::one(&target),
        PnrMethod::Naive => {
            let xs = names("x", big);
            let src = VarTable::polynomial(xs.clone())?;
            let monomials: Vec<Monomial> = k_subsets(big, r)
                .into_iter()
                .map(|s| {
                    let mut e = vec![0; big];
                    for i in s {
                        e[i] = 1;
                    }
                    Monomial::from_exponents(e)
                })
                .collect();
            let top = truncated_product(&src, &monomials, n).pop().unwrap();
            elementary_reduce(&top, &strs(&xs), &strs(&names("s", big)), &target)?
        }
        PnrMethod::Plethysm => {
            if big > PLETHYSM_BUDGET {
                return Err(Error::usage(format!(
                    "P_{{{n},{r}}} has weight {big}, beyond the supported {PLETHYSM_BUDGET}"
                )));
            }
            let pl = SymFunc::e(n).plethysm(&SymFunc::e(r))?;
            e_poly(&pl, &target, 0)?
        }
    };
    Ok(UniversalPoly {
        key: UniversalKey::Pnr(n, r),
        value,
    })
}

/// `∏_{|S|=n}(1 + ξ_S t)` over `f` letters, rewritten in `s1..sf` and `t`.
pub fn subset_product(f: usize, n: usize, method: QMethod) -> Result<UniversalPoly> {
    if f == 0 || n > f {
        return Err(Error::usage(format!(
            "subset product needs 1 <= f and n <= f, got f={f}, n={n}"
        )));
    }
    let target = subset_vars(f);
    let t = f;
    let value = match method {
        QMethod::Direct => subset_product_direct(f, n, &target)?,
        QMethod::Universal if n == 0 => MultiPoly::parse(&target, "1 + t")?,
        QMethod::Universal => {
            let b = binomial(f as i64, n as i64).to_usize().unwrap();
            let mut out = MultiPoly::zero(&target);
            for m in 0..=b {
                if m * n > PLETHYSM_BUDGET {
                    return Err(Error::usage(format!(
                        "needs P_{{{m},{n}}} of weight {}, beyond the supported {PLETHYSM_BUDGET}",
                        m * n
                    )));
                }
                let p = universal_pnr(m, n, PnrMethod::Plethysm)?.value;
                // σ_l ↦ s_l for l <= f, 0 beyond.
                let images: Vec<MultiPoly> = (0..p.vars().len())
                    .map(|l| {
                        if l < f {
                            MultiPoly::var_at(&target, l)
                        } else {
                            MultiPoly::zero(&target)
                        }
                    })
                    .collect();
                let mut e = vec![0; f + 1];
                e[t] = m as i32;
                out += &p.eval_hom(&target, &images)?.shift(&Monomial::from_exponents(e));
            }
            out
        }
    };
    Ok(UniversalPoly {
        key: UniversalKey::Subsets(f, n),
        value,
    })
}

/// Dense expansion over exponent vectors, then descent from the
/// partition-shaped entries.
fn subset_product_direct(f: usize, n: usize, target: &Vars) -> Result<MultiPoly> {
    if n == 0 {
        return MultiPoly::parse(target, "1 + t");
    }
    let factors = binomial(f as i64, n as i64).to_usize().unwrap();
    let cap = binomial(f as i64 - 1, n as i64 - 1).to_usize().unwrap();
    let side = cap + 1;
    let size = side
        .checked_pow(f as u32)
        .filter(|&s| s <= DENSE_BUDGET)
        .ok_or_else(|| Error::usage(format!("subset product over {f} letters with n={n} is too large")))?;
    if factors > 127 {
        return Err(Error::usage("subset product has too many factors"));
    }
    // Index of exponent vector (a_0..a_{f-1}) is Σ a_i side^i.
    let stride: Vec<usize> = (0..f).map(|i| side.pow(i as u32)).collect();
    let mut arr = vec![0u128; size];
    arr[0] = 1;
    for s in k_subsets(f, n) {
        let offset: usize = s.iter().map(|&i| stride[i]).sum();
        // Descending so every read sees the value before this factor.
        for idx in (offset..size).rev() {
            if s.iter().all(|&i| (idx / stride[i]) % side > 0) {
                let v = arr[idx - offset];
                if v != 0 {
                    arr[idx] += v;
                }
            }
        }
    }
    let mut dominant: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    let total = cap * f;
    for w in 0..=total {
        if w % n != 0 {
            continue;
        }
        for lambda in bounded_partitions(w, cap, f) {
            let idx: usize = lambda.parts().iter().enumerate().map(|(i, &a)| a * stride[i]).sum();
            let c = arr[idx];
            if c == 0 {
                continue;
            }
            let mut key: Vec<u32> = lambda.parts().iter().map(|&a| a as u32).collect();
            key.resize(f, 0);
            let mut e = vec![0; f + 1];
            e[f] = (w / n) as i32;
            dominant.insert(
                key,
                MultiPoly::from_term(target, Monomial::from_exponents(e), BigInt::from(c)),
            );
        }
    }
    let sig: Vec<usize> = (0..f).collect();
    Ok(descend(dominant, &sig, target))
}

/// `q^g_n`, the subset product over `2g` letters.
pub fn q_poly(g: usize, n: usize) -> Result<UniversalPoly> {
    if g == 0 || n > 2 * g {
        return Err(Error::usage(format!("q^g_n needs g >= 1 and 0 <= n <= 2g, got g={g}, n={n}")));
    }
    store().get(UniversalKey::Subsets(2 * g, n))
}

/// `q^g_n(1/(σt))·(σt)^b = σ^c·q^g_{2g-n}(t)` with `σ = σ_{2g}`,
/// `b = C(2g, n)` and `c = C(2g-1, n-1)`.
pub fn verify_q_fe(g: usize, n: usize) -> Result<FEReport> {
    let q = q_poly(g, n)?.value;
    let dual = q_poly(g, 2 * g - n)?.value;
    let vars = q.vars().clone();
    let f = 2 * g;
    let b = binomial(f as i64, n as i64).to_i32().unwrap();
    let c = binomial(f as i64 - 1, n as i64 - 1).to_i32().unwrap();
    let sigma_t = |k: i32, l: i32| {
        let mut e = vec![0; f + 1];
        e[f - 1] = k;
        e[f] = l;
        Monomial::from_exponents(e)
    };
    let inv = MultiPoly::from_term(&vars, sigma_t(-1, -1), BigInt::from(1));
    let lhs = q.substitute("t", &inv)?.shift(&sigma_t(b, b));
    let rhs = dual.shift(&sigma_t(c, 0));
    let diff = &lhs - &rhs;
    Ok(FEReport {
        subject: format!("q^{g}_{n}"),
        weight: g as i64,
        degree: b as usize,
        l_exponent: c as i64,
        passed: diff.is_zero(),
        witness: lowest_t_coefficient(&diff, f),
    })
}

fn lowest_t_coefficient(diff: &MultiPoly, t: usize) -> Option<String> {
    diff.coefficients_in(t)
        .into_iter()
        .next()
        .map(|(k, c)| format!("t^{k}: {c}"))
}

/// Process-wide memo of universal polynomials, optionally backed by disk.
pub struct Store {
    map: RwLock<HashMap<UniversalKey, MultiPoly>>,
}

pub fn store() -> &'static Store {
    static STORE: OnceLock<Store> = OnceLock::new();
    STORE.get_or_init(|| Store {
        map: RwLock::new(HashMap::new()),
    })
}

impl Store {
    /// Looks up or computes with the default method.
    pub fn get(&self, key: UniversalKey) -> Result<UniversalPoly> {
        if let Some(v) = self.map.read().unwrap().get(&key) {
            return Ok(UniversalPoly {
                key,
                value: v.clone(),
            });
        }
        let computed = match key {
            UniversalKey::P(n) => universal_p(n, PMethod::Cauchy)?,
            UniversalKey::Pnr(n, r) => universal_pnr(n, r, PnrMethod::Plethysm)?,
            UniversalKey::Subsets(f, n) => subset_product(f, n, QMethod::Direct)?,
        };
        self.insert(key, computed.value.clone());
        Ok(computed)
    }

    pub fn insert(&self, key: UniversalKey, value: MultiPoly) {
        self.map.write().unwrap().entry(key).or_insert(value);
    }

    pub fn contains(&self, key: &UniversalKey) -> bool {
        self.map.read().unwrap().contains_key(key)
    }

    /// Entries sorted by key.
    pub fn snapshot(&self) -> Vec<(UniversalKey, MultiPoly)> {
        let mut v: Vec<_> = self
            .map
            .read()
            .unwrap()
            .iter()
            .map(|(k, p)| (*k, p.clone()))
            .collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    pub fn clear(&self) {
        self.map.write().unwrap().clear();
    }
}

/// The truncated `P_{m,n}` needed for `Sym^m` or `Alt^m` of a degree-`n`
/// operation on an element whose relevant images vanish beyond `f`:
/// the coefficient of `t^m` in the subset product, over `s1..sf`.
pub fn truncated_pnr(f: usize, n: usize, m: usize) -> Result<MultiPoly> {
    let q = store().get(UniversalKey::Subsets(f, n))?.value;
    Ok(q.coefficient_of(f, m as i32))
}
