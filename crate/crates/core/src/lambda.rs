//! A model of the Grothendieck ring of Chow motives as a special λ-ring.
//!
//! Elements are Laurent polynomials over `L` (the Tate class) and the
//! symbols of declared atoms. A minus atom `a` of bound `f` contributes the
//! symbols `a = Sym1(a), Sym2(a), .., Sym{f}(a)` and has `Sym^i(a) = 0` for
//! `i > f`; a plus atom contributes `Alt` symbols with `Alt^i = 0` past its
//! bound; a free atom contributes `Alt` symbols with no vanishing, so its
//! bound is just how much data is known. Relations rewrite a symbol into an
//! expression in `L`, earlier atoms and lower symbols of the same atom.
//!
//! `Sym` and `Alt` of an element are computed as power series:
//!
//! 1. sums become products of series, negative coefficients inverses;
//! 2. `L^k` factors rescale `T` by `L^k`;
//! 3. products of symbols use the universal polynomials `P_n`;
//! 4. a single symbol uses the subset products (`P_{m,n}` with surplus
//!    arguments zero), or `P_{m,n}` itself for free atoms;
//! 5. the opposite family is always `1 / f(-T)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{binomial, partitions_of, Partition};
use crate::poly::{Monomial, MultiPoly, VarTable, Vars};
use crate::series::PowerSeries;
use crate::universal::{schur_in_e, store, UniversalKey};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `Sym^i` vanishes past the bound; `Sym` images are stored.
    Minus,
    /// `Alt^i` vanishes past the bound; `Alt` images are stored.
    Plus,
    /// No vanishing; `Alt` images are stored up to the bound.
    Free,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Minus => "minus",
            Parity::Plus => "plus",
            Parity::Free => "free",
        }
    }
}

impl FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Parity> {
        match s {
            "minus" => Ok(Parity::Minus),
            "plus" => Ok(Parity::Plus),
            "free" => Ok(Parity::Free),
            _ => Err(Error::parse(format!("unknown parity `{s}`"))),
        }
    }
}

/// Which pair of λ-series feeds the universal product formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Pick, per factor, whichever series terminates first.
    Auto,
    /// `Alt^n(xy) = P_n(Sym x; Sym y)`.
    SymSym,
    /// `Sym^n(xy) = P_n(Sym x; Alt y)`.
    SymAlt,
    /// `Sym^n(xy) = P_n(Alt x; Sym y)`.
    AltSym,
    /// `Alt^n(xy) = P_n(Alt x; Alt y)`.
    AltAlt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomDecl {
    pub name: String,
    pub parity: Parity,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationDecl {
    pub atom: String,
    pub index: usize,
    pub rhs: String,
}

/// Name of the `i`-th stored symbol of an atom.
pub fn symbol_name(atom: &str, parity: Parity, i: usize) -> String {
    match (i, parity) {
        (1, _) => atom.to_string(),
        (_, Parity::Minus) => format!("Sym{i}({atom})"),
        _ => format!("Alt{i}({atom})"),
    }
}

#[derive(Debug, Default, Clone)]
pub struct MotiveBuilder {
    atoms: Vec<AtomDecl>,
    relations: Vec<RelationDecl>,
}

impl MotiveBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn atom(&mut self, name: &str, parity: Parity, bound: usize) -> Result<&mut Self> {
        let plain = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !plain || name == "L" || name == "T" {
            return Err(Error::usage(format!("`{name}` is not a usable atom name")));
        }
        if self.atoms.iter().any(|a| a.name == name) {
            return Err(Error::usage(format!("atom `{name}` declared twice")));
        }
        if bound == 0 {
            return Err(Error::usage(format!(
                "atom `{name}` has bound 0, so it would be the zero class"
            )));
        }
        self.atoms.push(AtomDecl {
            name: name.to_string(),
            parity,
            bound,
        });
        Ok(self)
    }

    /// Declares `symbol_i(atom) = rhs`.
    pub fn relation(&mut self, atom: &str, index: usize, rhs: &str) -> Result<&mut Self> {
        let decl = self
            .atoms
            .iter()
            .find(|a| a.name == atom)
            .ok_or_else(|| Error::usage(format!("relation for unknown atom `{atom}`")))?;
        if index < 1 || index > decl.bound {
            return Err(Error::usage(format!(
                "relation index {index} outside 1..={} for `{atom}`",
                decl.bound
            )));
        }
        if self.relations.iter().any(|r| r.atom == atom && r.index == index) {
            return Err(Error::usage(format!("two relations for index {index} of `{atom}`")));
        }
        self.relations.push(RelationDecl {
            atom: atom.to_string(),
            index,
            rhs: rhs.to_string(),
        });
        Ok(self)
    }

    pub fn build(&self) -> Result<K0Ring> {
        let mut table: Vec<(String, bool)> = vec![("L".into(), true), ("T".into(), true)];
        let mut symbols: Vec<Option<(usize, usize)>> = vec![None, None];
        let mut first = Vec::new();
        for (a, decl) in self.atoms.iter().enumerate() {
            first.push(table.len());
            for i in 1..=decl.bound {
                table.push((symbol_name(&decl.name, decl.parity, i), false));
                symbols.push(Some((a, i)));
            }
        }
        let vars = VarTable::new(table)?;
        let mut normal: Vec<MultiPoly> = (0..vars.len()).map(|i| MultiPoly::var_at(&vars, i)).collect();

        let mut rels: Vec<(usize, usize, MultiPoly)> = Vec::new();
        for r in &self.relations {
            let a = self.atoms.iter().position(|d| d.name == r.atom).unwrap();
            let rhs = MultiPoly::parse(&vars, &r.rhs)?;
            for v in rhs.support() {
                let ok = match symbols[v] {
                    None => v == 0,
                    Some((b, j)) => b < a || (b == a && j < r.index),
                };
                if !ok {
                    return Err(Error::usage(format!(
                        "relation for index {} of `{}` refers to `{}`; only L, earlier atoms \
                         and lower indices are allowed",
                        r.index,
                        r.atom,
                        vars.name(v)
                    )));
                }
            }
            rels.push((a, r.index, rhs));
        }
        // Earlier atoms and lower indices first, so one pass normalises.
        rels.sort_by_key(|(a, i, _)| (*a, *i));
        for (a, i, rhs) in &rels {
            let img = rhs.eval_hom(&vars, &normal)?;
            normal[first[*a] + i - 1] = img;
        }
        Ok(K0Ring(Arc::new(RingInner {
            vars,
            atoms: self.atoms.clone(),
            relations: self.relations.clone(),
            symbols,
            first,
            normal,
            memo: RwLock::new(HashMap::new()),
        })))
    }
}

/// The `Sym` and `Alt` series of one element, to a common order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaPair {
    pub sym: PowerSeries,
    pub alt: PowerSeries,
}

impl LambdaPair {
    fn truncate(&self, order: usize) -> LambdaPair {
        LambdaPair {
            sym: self.sym.truncate(order).unwrap(),
            alt: self.alt.truncate(order).unwrap(),
        }
    }
}

type Memo = HashMap<(Monomial, Route), LambdaPair>;

struct RingInner {
    vars: Vars,
    atoms: Vec<AtomDecl>,
    relations: Vec<RelationDecl>,
    symbols: Vec<Option<(usize, usize)>>,
    first: Vec<usize>,
    normal: Vec<MultiPoly>,
    memo: RwLock<Memo>,
}

/// A ring of motive classes over fixed atoms. Cheap to clone.
#[derive(Clone)]
pub struct K0Ring(Arc<RingInner>);

impl fmt::Debug for K0Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0Ring{:?}", self.0.vars.names())
    }
}

/// Index of `L` and `T` in every ring table.
pub const L_VAR: usize = 0;
pub const T_VAR: usize = 1;

/// `1 / f(-T)`: the opposite λ-series.
pub fn opposite(f: &PowerSeries) -> Result<PowerSeries> {
    f.negate_variable().invert()
}

/// `c_n = P_n(a; b) = Σ_{|μ|=n} s_μ(a) s_μ'(b)` for `n ≤ order`, where `a`
/// and `b` are read as elementary-symmetric data (`a_0 = 1`).
pub fn universal_product(a: &PowerSeries, b: &PowerSeries, order: usize) -> Result<PowerSeries> {
    let vars = a.vars().clone();
    let a = a.truncate(order)?;
    let b = b.truncate(order)?;
    // Past the last nonzero entry both inputs are elementary data of a finite alphabet.
    let last = |s: &PowerSeries| {
        let top = (0..=order).rev().find(|&i| !s.coeffs()[i].is_zero()).unwrap_or(0);
        if top == order {
            usize::MAX
        } else {
            top
        }
    };
    let (ka, kb) = (last(&a), last(&b));
    let mut ea = ProductCache::new(&a);
    let mut eb = ProductCache::new(&b);
    let mut out = vec![MultiPoly::one(&vars)];
    for n in 1..=order {
        let mut c = MultiPoly::zero(&vars);
        for mu in partitions_of(n) {
            if mu.len() > ka || mu.part(0) > kb {
                continue;
            }
            let sa = ea.schur(&mu);
            if sa.is_zero() {
                continue;
            }
            let sb = eb.schur(&mu.conjugate());
            if !sb.is_zero() {
                c += &(&sa * &sb);
            }
        }
        out.push(c);
    }
    Ok(PowerSeries::new(&vars, out, order))
}

/// Evaluates Schur polynomials at elementary data, caching monomials `a_λ`.
struct ProductCache<'a> {
    data: &'a PowerSeries,
    products: HashMap<Partition, MultiPoly>,
}

impl<'a> ProductCache<'a> {
    fn new(data: &'a PowerSeries) -> Self {
        ProductCache {
            data,
            products: HashMap::new(),
        }
    }

    fn product(&mut self, lambda: &Partition) -> MultiPoly {
        if let Some(p) = self.products.get(lambda) {
            return p.clone();
        }
        let p = match lambda.parts().split_last() {
            None => MultiPoly::one(self.data.vars()),
            Some((&last, rest)) => {
                let head = self.product(&Partition::from_unsorted(rest.to_vec()));
                if head.is_zero() {
                    head
                } else {
                    &head * &self.data.coeffs()[last]
                }
            }
        };
        self.products.insert(lambda.clone(), p.clone());
        p
    }

    fn schur(&mut self, mu: &Partition) -> MultiPoly {
        let mut out = MultiPoly::zero(self.data.vars());
        for (lambda, c) in schur_in_e(mu).iter() {
            let p = self.product(lambda);
            if !p.is_zero() {
                out += &p.scale(c);
            }
        }
        out
    }
}

/// Determinant by expansion along rows, memoised on the used columns.
pub fn determinant(vars: &Vars, m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    let mut memo: HashMap<u64, MultiPoly> = HashMap::new();
    fn go(row: usize, used: u64, m: &[Vec<MultiPoly>], vars: &Vars, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
        let n = m.len();
        if row == n {
            return MultiPoly::one(vars);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut out = MultiPoly::zero(vars);
        let mut sign = true;
        for col in 0..n {
            if used >> col & 1 == 1 {
                continue;
            }
            if !m[row][col].is_zero() {
                let minor = go(row + 1, used | 1 << col, m, vars, memo);
                let term = &m[row][col] * &minor;
                if sign {
                    out += &term;
                } else {
                    out -= &term;
                }
            }
            sign = !sign;
        }
        memo.insert(used, out.clone());
        out
    }
    assert!(n < 64);
    go(0, 0, m, vars, &mut memo)
}

/// Outcome of [`K0Ring::verify_special_pair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialReport {
    pub subject: String,
    pub order: usize,
    pub passed: bool,
    /// First failing check and coefficient.
    pub failure: Option<String>,
}

impl K0Ring {
    pub fn vars(&self) -> &Vars {
        &self.0.vars
    }

    pub fn atoms(&self) -> &[AtomDecl] {
        &self.0.atoms
    }

    pub fn relations(&self) -> &[RelationDecl] {
        &self.0.relations
    }

    /// Parses an expression and brings it to normal form.
    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        let p = MultiPoly::parse(&self.0.vars, text)?;
        self.normalize(&p)
    }

    pub fn one(&self) -> MultiPoly {
        MultiPoly::one(&self.0.vars)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(&self.0.vars)
    }

    /// `L^k`.
    pub fn l_pow(&self, k: i32) -> MultiPoly {
        let mut e = vec![0; self.0.vars.len()];
        e[L_VAR] = k;
        MultiPoly::from_term(&self.0.vars, Monomial::from_exponents(e), BigInt::one())
    }

    /// `T^k`.
    pub fn t_pow(&self, k: i32) -> MultiPoly {
        let mut e = vec![0; self.0.vars.len()];
        e[T_VAR] = k;
        MultiPoly::from_term(&self.0.vars, Monomial::from_exponents(e), BigInt::one())
    }

    fn atom_index(&self, name: &str) -> Result<usize> {
        self.0
            .atoms
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::usage(format!("unknown atom `{name}`")))
    }

    /// The normal form of the `i`-th stored symbol of `atom` (`i = 0` is 1,
    /// past the bound is 0 for minus and plus atoms).
    pub fn symbol(&self, atom: &str, i: usize) -> Result<MultiPoly> {
        let a = self.atom_index(atom)?;
        let decl = &self.0.atoms[a];
        if i == 0 {
            return Ok(self.one());
        }
        if i > decl.bound {
            return match decl.parity {
                Parity::Free => Err(Error::domain(format!(
                    "no data for index {i} of free atom `{atom}` (bound {})",
                    decl.bound
                ))),
                _ => Ok(self.zero()),
            };
        }
        Ok(self.0.normal[self.0.first[a] + i - 1].clone())
    }

    pub fn normalize(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.vars() != &self.0.vars && p.vars().names() != self.0.vars.names() {
            return Err(Error::usage("element from a different ring"));
        }
        if self.0.relations.is_empty() {
            return Ok(p.clone());
        }
        p.eval_hom(&self.0.vars, &self.0.normal)
    }

    fn check_element(&self, x: &MultiPoly) -> Result<MultiPoly> {
        let x = self.normalize(x)?;
        if x.degree_range(T_VAR).is_some_and(|r| r != (0, 0)) {
            return Err(Error::usage("motive classes cannot contain T"));
        }
        Ok(x)
    }

    /// `Sym` and `Alt` series of `x` up to `order`.
    pub fn lambda_pair(&self, x: &MultiPoly, order: usize, route: Route) -> Result<LambdaPair> {
        let x = self.check_element(x)?;
        let vars = &self.0.vars;
        let mut sym = PowerSeries::one(vars, order);
        let mut alt = PowerSeries::one(vars, order);
        for (m, c) in x.terms() {
            let k = c
                .to_i64()
                .ok_or_else(|| Error::domain("coefficient too large for λ-operations"))?;
            let p = self.monomial_pair(m, order, route)?;
            sym = sym.mul(&p.sym.pow_i(k)?)?;
            alt = alt.mul(&p.alt.pow_i(k)?)?;
        }
        Ok(LambdaPair { sym, alt })
    }

    pub fn sym_series(&self, x: &MultiPoly, order: usize) -> Result<PowerSeries> {
        Ok(self.lambda_pair(x, order, Route::Auto)?.sym)
    }

    pub fn alt_series(&self, x: &MultiPoly, order: usize) -> Result<PowerSeries> {
        Ok(self.lambda_pair(x, order, Route::Auto)?.alt)
    }

    pub fn sym(&self, r: usize, x: &MultiPoly) -> Result<MultiPoly> {
        Ok(self.sym_series(x, r)?.coeff(r)?.clone())
    }

    pub fn alt(&self, r: usize, x: &MultiPoly) -> Result<MultiPoly> {
        Ok(self.alt_series(x, r)?.coeff(r)?.clone())
    }

    /// `S_λ(x) = det(Alt^{λ'_i - i + j}(x))`.
    pub fn schur(&self, lambda: &Partition, x: &MultiPoly) -> Result<MultiPoly> {
        if lambda.is_empty() {
            return Ok(self.one());
        }
        let conj = lambda.conjugate();
        let k = conj.len();
        let top = conj.part(0) + k - 1;
        let alt = self.alt_series(x, top)?;
        let m: Vec<Vec<MultiPoly>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let idx = conj.part(i) as i64 - i as i64 + j as i64;
                        if idx < 0 {
                            self.zero()
                        } else {
                            alt.coeffs()[idx as usize].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(determinant(&self.0.vars, &m))
    }

    fn monomial_pair(&self, m: &Monomial, order: usize, route: Route) -> Result<LambdaPair> {
        let key = (m.clone(), route);
        if let Some(p) = self.0.memo.read().unwrap().get(&key) {
            if p.sym.order() >= order {
                return Ok(p.truncate(order));
            }
        }
        let pair = self.compute_monomial_pair(m, order, route)?;
        let mut memo = self.0.memo.write().unwrap();
        let keep = memo.get(&key).is_none_or(|old| old.sym.order() < order);
        if keep {
            memo.insert(key, pair.clone());
        }
        Ok(pair)
    }

    fn compute_monomial_pair(&self, m: &Monomial, order: usize, route: Route) -> Result<LambdaPair> {
        let vars = &self.0.vars;
        let mut rest = m.exponents().to_vec();
        let k = std::mem::take(&mut rest[L_VAR]);
        if k != 0 {
            let base = self.monomial_pair(&Monomial::from_exponents(rest), order, route)?;
            let lk = self.l_pow(k);
            return Ok(LambdaPair {
                sym: base.sym.rescale(&lk)?,
                alt: base.alt.rescale(&lk)?,
            });
        }
        let Some(v) = rest.iter().position(|&e| e > 0) else {
            // The unit class.
            return Ok(LambdaPair {
                sym: PowerSeries::new(vars, vec![self.one(); order + 1], order),
                alt: PowerSeries::new(vars, vec![self.one(), self.one()], order),
            });
        };
        if rest.iter().any(|&e| e < 0) {
            return Err(Error::domain("negative power of an atom symbol"));
        }
        let (a, i) = self.0.symbols[v].expect("only atom symbols remain");
        rest[v] -= 1;
        if rest.iter().all(|&e| e == 0) {
            return self.symbol_pair(a, i, order);
        }
        let x = self.symbol_pair(a, i, order)?;
        let y = self.monomial_pair(&Monomial::from_exponents(rest), order, route)?;
        product_pair(&x, &y, order, route)
    }

    /// Series of the symbol with index `n` of atom `a`.
    fn symbol_pair(&self, a: usize, n: usize, order: usize) -> Result<LambdaPair> {
        let decl = &self.0.atoms[a];
        let f = decl.bound;
        let images: Vec<MultiPoly> = (1..=f).map(|i| self.0.normal[self.0.first[a] + i - 1].clone()).collect();
        let data = match decl.parity {
            Parity::Minus | Parity::Plus => {
                let q = store().get(UniversalKey::Subsets(f, n))?.value;
                let mut imgs = images.clone();
                imgs.push(self.one());
                let top = binomial(f as i64, n as i64).to_usize().unwrap();
                let coeffs = (0..=order.min(top))
                    .map(|m| q.coefficient_of(f, m as i32).eval_hom(&self.0.vars, &imgs))
                    .collect::<Result<Vec<_>>>()?;
                PowerSeries::new(&self.0.vars, coeffs, order)
            }
            Parity::Free => {
                let mut coeffs = vec![self.one()];
                for m in 1..=order {
                    if m * n > f {
                        return Err(Error::domain(format!(
                            "free atom `{}` has data up to index {f}, but order {order} of its \
                             symbol {n} needs index {}",
                            decl.name,
                            m * n
                        )));
                    }
                    let p = store().get(UniversalKey::Pnr(m, n))?.value;
                    let imgs: Vec<MultiPoly> = images[..m * n].to_vec();
                    coeffs.push(p.eval_hom(&self.0.vars, &imgs)?);
                }
                PowerSeries::new(&self.0.vars, coeffs, order)
            }
        };
        // Minus atoms store Sym images: Sym^m(Sym^n a) for odd n, Alt^m for even n.
        if decl.parity == Parity::Minus && n % 2 == 1 {
            Ok(LambdaPair {
                alt: opposite(&data)?,
                sym: data,
            })
        } else {
            Ok(LambdaPair {
                sym: opposite(&data)?,
                alt: data,
            })
        }
    }

    /// Checks `λ_t(xy) = λ_t(x) ∘ λ_t(y)` and `λ_t(λ^r x) = Λ^r(λ_t x)` up
    /// to `order`.
    pub fn verify_special_pair(&self, x: &MultiPoly, y: &MultiPoly, order: usize) -> Result<SpecialReport> {
        let subject = format!("({x}, {y})");
        let fail = |what: String| SpecialReport {
            subject: subject.clone(),
            order,
            passed: false,
            failure: Some(what),
        };
        let ax = self.alt_series(x, order)?;
        let ay = self.alt_series(y, order)?;
        let direct = self.alt_series(&(x * y), order)?;
        let composed = universal_product(&ax, &ay, order)?;
        if let Some(i) = direct.first_difference(&composed) {
            return Ok(fail(format!("product, coefficient {i}")));
        }
        for (name, z) in [("x", x), ("y", y)] {
            let az = self.alt_series(z, order)?;
            for r in 2..=order {
                let inner = self.alt(r, z)?;
                let lhs = self.alt_series(&inner, order / r)?;
                for n in 1..=order / r {
                    let p = store().get(UniversalKey::Pnr(n, r))?.value;
                    let imgs: Vec<MultiPoly> = az.coeffs()[1..=n * r].to_vec();
                    let rhs = p.eval_hom(&self.0.vars, &imgs)?;
                    if lhs.coeffs()[n] != rhs {
                        return Ok(fail(format!("Alt^{n}(Alt^{r} {name})")));
                    }
                }
            }
        }
        Ok(SpecialReport {
            subject,
            order,
            passed: true,
            failure: None,
        })
    }

    /// Kimura type of a monomial: parity and the degree bound of the
    /// terminating λ-series, or `None` if it has no finite type.
    fn monomial_kimura(&self, m: &Monomial) -> Option<(Parity, usize)> {
        let mut parity = Parity::Plus;
        let mut bound = 1usize;
        for (v, &e) in m.exponents().iter().enumerate() {
            if e == 0 || v == L_VAR {
                continue;
            }
            if e < 0 || v == T_VAR {
                return None;
            }
            let (a, i) = self.0.symbols[v]?;
            let decl = &self.0.atoms[a];
            let (p, b) = match decl.parity {
                Parity::Free => return None,
                Parity::Minus if i % 2 == 1 => (Parity::Minus, binomial(decl.bound as i64, i as i64)),
                _ => (Parity::Plus, binomial(decl.bound as i64, i as i64)),
            };
            for _ in 0..e {
                parity = if parity == p { Parity::Plus } else { Parity::Minus };
                bound = bound.checked_mul(b.to_usize()?)?;
            }
        }
        Some((parity, bound))
    }

    /// The degree of the terminating series of an element all of whose
    /// monomials have Kimura type `want` with positive coefficients: the
    /// degree of `Σ Alt^i(x) T^i` for plus, of `Σ Sym^i(x) T^i` for minus.
    pub fn kimura_degree(&self, x: &MultiPoly, want: Parity) -> Result<usize> {
        let x = self.check_element(x)?;
        let mut total = 0usize;
        for (m, c) in x.terms() {
            let ok = c > &BigInt::zero();
            match self.monomial_kimura(m) {
                Some((p, b)) if ok && p == want => {
                    total += b * c.to_usize().ok_or_else(|| Error::domain("coefficient too large"))?;
                }
                _ => {
                    return Err(Error::domain(format!(
                        "not Kimura-finite data: term `{}` is not {} with a positive coefficient",
                        MultiPoly::from_term(&self.0.vars, m.clone(), c.clone()),
                        want.as_str()
                    )))
                }
            }
        }
        Ok(total)
    }
}

/// Combines the series of two factors through `P_n`.
pub fn product_pair(x: &LambdaPair, y: &LambdaPair, order: usize, route: Route) -> Result<LambdaPair> {
    let route = match route {
        Route::Auto => {
            // The series that terminates first keeps the Schur sums small.
            let short_sym = |p: &LambdaPair| last_nonzero(&p.sym) < last_nonzero(&p.alt);
            match (short_sym(x), short_sym(y)) {
                (true, true) => Route::SymSym,
                (true, false) => Route::SymAlt,
                (false, true) => Route::AltSym,
                (false, false) => Route::AltAlt,
            }
        }
        r => r,
    };
    Ok(match route {
        Route::SymSym | Route::AltAlt => {
            let alt = if route == Route::SymSym {
                universal_product(&x.sym, &y.sym, order)?
            } else {
                universal_product(&x.alt, &y.alt, order)?
            };
            LambdaPair {
                sym: opposite(&alt)?,
                alt,
            }
        }
        _ => {
            let sym = if route == Route::SymAlt {
                universal_product(&x.sym, &y.alt, order)?
            } else {
                universal_product(&x.alt, &y.sym, order)?
            };
            LambdaPair {
                alt: opposite(&sym)?,
                sym,
            }
        }
    })
}

fn last_nonzero(s: &PowerSeries) -> usize {
    (0..=s.order()).rev().find(|&i| !s.coeffs()[i].is_zero()).unwrap_or(0)
}

/// Groups a polynomial by powers of `T`: `Σ c_i T^i ↦ {i: c_i}`.
pub fn t_coefficients(p: &MultiPoly) -> BTreeMap<i32, MultiPoly> {
    p.coefficients_in(T_VAR)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elliptic() -> K0Ring {
        let mut b = MotiveBuilder::new();
        b.atom("a", Parity::Minus, 2).unwrap();
        b.relation("a", 2, "L").unwrap();
        b.atom("b", Parity::Minus, 2).unwrap();
        b.relation("b", 2, "L").unwrap();
        b.build().unwrap()
    }

    #[test]
    fn builder_rejects_bad_declarations() {
        let mut b = MotiveBuilder::new();
        b.atom("a", Parity::Minus, 2).unwrap();
        assert!(b.atom("a", Parity::Plus, 1).is_err());
        assert!(b.atom("z", Parity::Plus, 0).is_err());
        assert!(b.atom("L", Parity::Plus, 1).is_err());
        assert!(b.relation("q", 1, "L").is_err());
        assert!(b.relation("a", 3, "L").is_err());
        b.atom("c", Parity::Minus, 2).unwrap();
        b.relation("a", 2, "c").unwrap();
        assert!(b.build().is_err());
    }

    #[test]
    fn alt_of_projective_line_class() {
        let r = elliptic();
        let x = r.parse("1 + L").unwrap();
        assert_eq!(r.alt(2, &x).unwrap(), r.parse("L").unwrap());
        assert_eq!(r.alt(3, &x).unwrap(), r.zero());
    }

    #[test]
    fn elliptic_sym_vanishes() {
        let r = elliptic();
        let a = r.parse("a").unwrap();
        let s = r.sym_series(&a, 5).unwrap();
        let expect: Vec<MultiPoly> = ["1", "a", "L", "0", "0", "0"]
            .iter()
            .map(|t| r.parse(t).unwrap())
            .collect();
        assert_eq!(s.coeffs(), expect.as_slice());
    }

    #[test]
    fn sym2_of_product() {
        let r = elliptic();
        let ab = r.parse("a*b").unwrap();
        let expect = r.parse("a^2*(b^2 - L) + L*b^2 - 2*L*(b^2 - L)").unwrap();
        for route in [Route::Auto, Route::SymSym, Route::SymAlt, Route::AltSym, Route::AltAlt] {
            let p = r.lambda_pair(&ab, 2, route).unwrap();
            assert_eq!(p.sym.coeffs()[2], expect, "{route:?}");
        }
    }

    #[test]
    fn tate_and_unit_series() {
        let r = elliptic();
        let s = r.sym_series(&r.parse("L").unwrap(), 4).unwrap();
        for i in 0..=4 {
            assert_eq!(s.coeffs()[i], r.l_pow(i as i32));
        }
        let s = r.sym_series(&r.one(), 4).unwrap();
        assert!(s.coeffs().iter().all(MultiPoly::is_one));
    }

    #[test]
    fn kimura_degrees() {
        let r = elliptic();
        assert_eq!(r.kimura_degree(&r.parse("1 + L").unwrap(), Parity::Plus).unwrap(), 2);
        assert_eq!(r.kimura_degree(&r.parse("a").unwrap(), Parity::Minus).unwrap(), 2);
        assert_eq!(r.kimura_degree(&r.parse("a*b + 1").unwrap(), Parity::Plus).unwrap(), 5);
        assert!(r.kimura_degree(&r.parse("a").unwrap(), Parity::Plus).is_err());
        assert!(r.kimura_degree(&r.parse("1 - L").unwrap(), Parity::Plus).is_err());
    }

    #[test]
    fn special_pair_small() {
        let r = elliptic();
        for (x, y) in [("L", "L"), ("a", "b"), ("1 + L", "a")] {
            let rep = r
                .verify_special_pair(&r.parse(x).unwrap(), &r.parse(y).unwrap(), 4)
                .unwrap();
            assert!(rep.passed, "{rep:?}");
        }
    }
}
