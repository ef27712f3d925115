//! The ring of symmetric functions over ℚ in the power-sum, elementary,
//! complete homogeneous and Schur bases.
//!
//! This is the free special λ-ring on one generator: `e_n` plays `λ^n`
//! (exterior powers), `h_n` plays `σ^n` (symmetric powers) and `s_λ` the
//! Schur functor `S_λ`. The power-sum basis is the internal pivot: every
//! conversion goes through it, and plethysm is only computed there.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::characters::{lr_coefficient, mn_character};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::MultiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Power sums.
    P,
    /// Elementary.
    E,
    /// Complete homogeneous.
    H,
    /// Schur.
    S,
}

impl Basis {
    pub fn tag(self) -> char {
        match self {
            Basis::P => 'p',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::S => 's',
        }
    }

    pub fn from_tag(c: char) -> Result<Basis> {
        match c {
            'p' => Ok(Basis::P),
            'e' => Ok(Basis::E),
            'h' => Ok(Basis::H),
            's' => Ok(Basis::S),
            _ => Err(Error::parse(format!("unknown basis tag `{c}`"))),
        }
    }

    fn multiplicative(self) -> bool {
        !matches!(self, Basis::S)
    }
}

type Terms = BTreeMap<Partition, BigRational>;

fn add_into(acc: &mut Terms, key: Partition, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match acc.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Product in a multiplicative basis: monomials multiply by union of partitions.
fn mul_multiplicative(a: &Terms, b: &Terms) -> Terms {
    let mut acc: HashMap<Partition, BigRational> = HashMap::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            *acc.entry(pa.union(pb)).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// An element of Λ_ℚ expressed in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: Terms,
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

type ExpansionCache = RwLock<HashMap<(Basis, usize), Terms>>;

fn single_cache() -> &'static ExpansionCache {
    static C: OnceLock<ExpansionCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn schur_cache() -> &'static RwLock<HashMap<Partition, Terms>> {
    static C: OnceLock<RwLock<HashMap<Partition, Terms>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// p-expansion of `e_n` or `h_n`, or e/h-expansion of `p_n` (`Basis::P` key
/// with target stored as `(E|H)`); cached.
fn cached_single(kind: Basis, n: usize, build: impl FnOnce() -> Terms) -> Terms {
    if let Some(t) = single_cache().read().unwrap().get(&(kind, n)) {
        return t.clone();
    }
    let t = build();
    single_cache().write().unwrap().entry((kind, n)).or_insert(t.clone());
    t
}

/// `e_n` (sign = true) or `h_n` in the p-basis.
fn eh_in_p(n: usize, elementary: bool) -> Terms {
    let kind = if elementary { Basis::E } else { Basis::H };
    cached_single(kind, n, || {
        partitions_of(n)
            .into_iter()
            .map(|rho| {
                let sign = if elementary { rho.sign() } else { 1 };
                let c = BigRational::new(BigInt::from(sign), rho.z());
                (rho, c)
            })
            .collect()
    })
}

/// `s_λ` in the p-basis via characters.
fn schur_in_p(lambda: &Partition) -> Terms {
    if let Some(t) = schur_cache().read().unwrap().get(lambda) {
        return t.clone();
    }
    let mut t = Terms::new();
    for rho in partitions_of(lambda.weight()) {
        let chi = mn_character(lambda, &rho).expect("weights agree");
        if chi != 0 {
            t.insert(rho.clone(), BigRational::new(BigInt::from(chi), rho.z()));
        }
    }
    schur_cache().write().unwrap().entry(lambda.clone()).or_insert(t.clone());
    t
}

/// `p_n` in the e-basis (`elementary`) or h-basis, by Newton's identities.
fn p_single_in(n: usize, elementary: bool) -> Terms {
    // Cache keys (S, n) and (P, n) are unused by the other expansions.
    let kind = if elementary { Basis::S } else { Basis::P };
    cached_single(kind, n, || {
        // e: p_n = Σ_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
        // h: p_n = n h_n - Σ_{i=1}^{n-1} h_i p_{n-i}
        let mut acc = Terms::new();
        let top = if elementary {
            if n % 2 == 1 {
                rat(n as i64)
            } else {
                rat(-(n as i64))
            }
        } else {
            rat(n as i64)
        };
        add_into(&mut acc, Partition::row(n), top);
        for i in 1..n {
            let sign = if elementary {
                if i % 2 == 1 {
                    rat(1)
                } else {
                    rat(-1)
                }
            } else {
                rat(-1)
            };
            let gen: Terms = [(Partition::row(i), sign)].into_iter().collect();
            let prod = mul_multiplicative(&gen, &p_single_in(n - i, elementary));
            for (k, c) in prod {
                add_into(&mut acc, k, c);
            }
        }
        acc
    })
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: Terms::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn scalar(basis: Basis, c: BigRational) -> Self {
        let mut f = Self::zero(basis);
        add_into(&mut f.terms, Partition::empty(), c);
        f
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        SymFunc {
            basis,
            terms: [(lambda, BigRational::one())].into_iter().collect(),
        }
    }

    pub fn e(n: usize) -> Self {
        Self::basis_element(Basis::E, Partition::row(n))
    }

    pub fn h(n: usize) -> Self {
        Self::basis_element(Basis::H, Partition::row(n))
    }

    pub fn p(n: usize) -> Self {
        Self::basis_element(Basis::P, Partition::row(n))
    }

    pub fn s(lambda: Partition) -> Self {
        Self::basis_element(Basis::S, lambda)
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut f = Self::zero(basis);
        for (k, c) in terms {
            add_into(&mut f.terms, k, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Weights of the homogeneous pieces present.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::weight).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    fn to_p_terms(&self) -> Terms {
        match self.basis {
            Basis::P => self.terms.clone(),
            Basis::E | Basis::H => {
                let elementary = self.basis == Basis::E;
                let mut acc = Terms::new();
                for (lambda, c) in &self.terms {
                    let mut prod: Terms = [(Partition::empty(), c.clone())].into_iter().collect();
                    for &part in lambda.parts() {
                        prod = mul_multiplicative(&prod, &eh_in_p(part, elementary));
                    }
                    for (k, v) in prod {
                        add_into(&mut acc, k, v);
                    }
                }
                acc
            }
            Basis::S => {
                let mut acc = Terms::new();
                for (lambda, c) in &self.terms {
                    for (k, v) in schur_in_p(lambda) {
                        add_into(&mut acc, k, v * c);
                    }
                }
                acc
            }
        }
    }

    fn from_p_terms(terms: &Terms, target: Basis) -> SymFunc {
        let mut out = SymFunc::zero(target);
        match target {
            Basis::P => out.terms = terms.clone(),
            Basis::E | Basis::H => {
                let elementary = target == Basis::E;
                for (rho, c) in terms {
                    let mut prod: Terms = [(Partition::empty(), c.clone())].into_iter().collect();
                    for &part in rho.parts() {
                        prod = mul_multiplicative(&prod, &p_single_in(part, elementary));
                    }
                    for (k, v) in prod {
                        add_into(&mut out.terms, k, v);
                    }
                }
            }
            Basis::S => {
                // p_ρ = Σ_λ χ^λ(ρ) s_λ
                let mut by_weight: BTreeMap<usize, Vec<(&Partition, &BigRational)>> = BTreeMap::new();
                for (rho, c) in terms {
                    by_weight.entry(rho.weight()).or_default().push((rho, c));
                }
                for (n, items) in by_weight {
                    for lambda in partitions_of(n) {
                        let mut c = BigRational::zero();
                        for (rho, v) in &items {
                            let chi = mn_character(&lambda, rho).expect("weights agree");
                            if chi != 0 {
                                c += *v * rat(chi);
                            }
                        }
                        add_into(&mut out.terms, lambda, c);
                    }
                }
            }
        }
        out
    }

    /// Re-expresses the same element in `target`.
    pub fn convert(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        Self::from_p_terms(&self.to_p_terms(), target)
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let o = other.convert(self.basis);
        let mut out = self.clone();
        for (k, c) in o.terms {
            add_into(&mut out.terms, k, c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Product; Schur-basis products go through Littlewood–Richardson
    /// coefficients, the other bases multiply monomials directly.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let o = other.convert(self.basis);
        if self.basis.multiplicative() {
            return SymFunc {
                basis: self.basis,
                terms: mul_multiplicative(&self.terms, &o.terms),
            };
        }
        let mut out = SymFunc::zero(Basis::S);
        for (mu, a) in &self.terms {
            for (nu, b) in &o.terms {
                let n = mu.weight() + nu.weight();
                for lambda in partitions_of(n) {
                    if !lambda.contains(mu) || !lambda.contains(nu) {
                        continue;
                    }
                    let c = lr_coefficient(&lambda, mu, nu);
                    if c > 0 {
                        add_into(&mut out.terms, lambda, a * b * rat(c as i64));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> SymFunc {
        let mut out = SymFunc::one(self.basis);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `ω`: `e_n ↔ h_n`, `s_λ ↦ s_λ'`, `p_ρ ↦ ε_ρ p_ρ`.
    pub fn omega(&self) -> SymFunc {
        match self.basis {
            Basis::P => SymFunc::from_terms(
                Basis::P,
                self.terms.iter().map(|(k, v)| (k.clone(), v * rat(k.sign()))),
            ),
            Basis::E => SymFunc {
                basis: Basis::H,
                terms: self.terms.clone(),
            }
            .convert(Basis::E),
            Basis::H => SymFunc {
                basis: Basis::E,
                terms: self.terms.clone(),
            }
            .convert(Basis::H),
            Basis::S => SymFunc::from_terms(
                Basis::S,
                self.terms.iter().map(|(k, v)| (k.conjugate(), v.clone())),
            ),
        }
    }

    /// `p_k[g]`: every `p_m` in `g` becomes `p_{km}`. Result in the p-basis.
    fn adams(g_p: &Terms, k: usize) -> Terms {
        g_p.iter().map(|(rho, c)| (rho.scaled(k), c.clone())).collect()
    }

    /// Plethysm `self[g]`, returned in the basis of `self`.
    ///
    /// Computed in the power-sum basis: `p_k[g]` replaces `p_m` by `p_{km}`
    /// and the map extends multiplicatively and linearly in `self`.
    pub fn plethysm(&self, g: &SymFunc) -> Result<SymFunc> {
        let g_p = g.to_p_terms();
        if let Some(c) = g_p.get(&Partition::empty()) {
            if !c.is_integer() {
                return Err(Error::domain(
                    "plethysm into a non-integral constant has no λ-ring meaning",
                ));
            }
        }
        let f_p = self.to_p_terms();
        let mut adams_cache: HashMap<usize, Terms> = HashMap::new();
        let mut acc = Terms::new();
        for (rho, c) in &f_p {
            let mut prod: Terms = [(Partition::empty(), c.clone())].into_iter().collect();
            for &k in rho.parts() {
                let pk = adams_cache.entry(k).or_insert_with(|| Self::adams(&g_p, k));
                prod = mul_multiplicative(&prod, pk);
            }
            for (k, v) in prod {
                add_into(&mut acc, k, v);
            }
        }
        Ok(Self::from_p_terms(&acc, Basis::P).convert(self.basis))
    }

    /// Evaluates a polynomial by sending variable `i` to `images[i]`.
    pub fn eval_poly(p: &MultiPoly, images: &[SymFunc]) -> Result<SymFunc> {
        if images.len() != p.vars().len() {
            return Err(Error::usage("image count does not match variable table"));
        }
        let imgs: Vec<SymFunc> = images.iter().map(|f| f.convert(Basis::P)).collect();
        let mut powers: HashMap<(usize, i32), SymFunc> = HashMap::new();
        let mut out = SymFunc::zero(Basis::P);
        for (m, c) in p.terms() {
            let mut term = SymFunc::scalar(Basis::P, BigRational::from_integer(c.clone()));
            for (i, &e) in m.exponents().iter().enumerate() {
                if e < 0 {
                    return Err(Error::domain("negative exponent in symmetric-function evaluation"));
                }
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((i, e)).or_insert_with(|| imgs[i].pow(e as usize));
                term = term.mul(pw);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Sorted for display: weight ascending, then larger partitions first.
    fn display_order(&self) -> Vec<(&Partition, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then_with(|| b.0.cmp(a.0)));
        v
    }

    pub fn parse(text: &str) -> Result<SymFunc> {
        parse_symfunc(text)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if lambda.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}{lambda}", self.basis.tag())?;
            } else {
                write!(f, "{abs}*{}{lambda}", self.basis.tag())?;
            }
        }
        Ok(())
    }
}

fn parse_symfunc(text: &str) -> Result<SymFunc> {
    let mut out: Option<SymFunc> = None;
    let mut rest = text.trim();
    let mut sign = rat(1);
    if let Some(r) = rest.strip_prefix('-') {
        sign = rat(-1);
        rest = r.trim_start();
    }
    loop {
        // A term ends at the next top-level + or - (outside brackets).
        let mut depth = 0;
        let mut end = rest.len();
        for (i, ch) in rest.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                '+' | '-' if depth == 0 && i > 0 => {
                    end = i;
                    break;
                }
                _ => {}
            }
        }
        let term = parse_term(rest[..end].trim())?.scale(&sign);
        out = Some(match out {
            None => term,
            Some(acc) => acc.add(&term),
        });
        if end == rest.len() {
            break;
        }
        sign = if rest[end..].starts_with('-') { rat(-1) } else { rat(1) };
        rest = rest[end + 1..].trim_start();
    }
    out.ok_or_else(|| Error::parse("empty symmetric function"))
}

fn parse_term(term: &str) -> Result<SymFunc> {
    let mut acc: Option<SymFunc> = None;
    let mut scalar = rat(1);
    for factor in term.split('*') {
        let factor = factor.trim();
        let first = factor
            .chars()
            .next()
            .ok_or_else(|| Error::parse(format!("empty factor in `{term}`")))?;
        if first.is_ascii_digit() {
            let (num, den) = match factor.split_once('/') {
                Some((a, b)) => (a, b),
                None => (factor, "1"),
            };
            let num: BigInt = num.trim().parse().map_err(|_| Error::parse(format!("bad number `{factor}`")))?;
            let den: BigInt = den.trim().parse().map_err(|_| Error::parse(format!("bad number `{factor}`")))?;
            if den.is_zero() {
                return Err(Error::parse("zero denominator"));
            }
            scalar *= BigRational::new(num, den);
        } else {
            let basis = Basis::from_tag(first)?;
            let lambda: Partition = factor[1..].parse()?;
            let el = SymFunc::basis_element(basis, lambda);
            acc = Some(match acc {
                None => el,
                Some(a) => a.mul(&el),
            });
        }
    }
    Ok(match acc {
        Some(a) => a.scale(&scalar),
        None => SymFunc::scalar(Basis::S, scalar),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sf(s: &str) -> SymFunc {
        SymFunc::parse(s).unwrap()
    }

    #[test]
    fn degree_one_agrees() {
        let e1 = SymFunc::e(1);
        assert_eq!(e1.convert(Basis::P), SymFunc::p(1));
        assert_eq!(e1.convert(Basis::H), SymFunc::h(1));
        assert_eq!(e1.convert(Basis::S), SymFunc::s(p(&[1])));
    }

    #[test]
    fn schur_to_power_sum() {
        let s11 = SymFunc::s(p(&[1, 1])).convert(Basis::P);
        assert_eq!(s11, sf("1/2*p[1,1] - 1/2*p[2]"));
        let h2 = SymFunc::h(2).convert(Basis::P);
        assert_eq!(h2, sf("1/2*p[1,1] + 1/2*p[2]"));
        assert_eq!(h2.convert(Basis::H), SymFunc::h(2));
    }

    #[test]
    fn round_trips_are_exact() {
        for n in 0..=6 {
            for lam in partitions_of(n) {
                for b in [Basis::E, Basis::H, Basis::S, Basis::P] {
                    let f = SymFunc::basis_element(b, lam.clone());
                    for t in [Basis::E, Basis::H, Basis::S, Basis::P] {
                        assert_eq!(f.convert(t).convert(b), f, "{b:?}->{t:?} {lam}");
                        if b != Basis::P && t != Basis::P {
                            assert!(f.convert(t).is_integral());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_products() {
        let s1 = SymFunc::s(p(&[1]));
        assert_eq!(s1.mul(&s1), sf("s[2] + s[1,1]"));
        assert_eq!(s1.mul(&SymFunc::s(p(&[1, 1]))), sf("s[2,1] + s[1,1,1]"));
        let f = SymFunc::h(1).mul(&SymFunc::h(3)).sub(&SymFunc::h(4));
        assert_eq!(f.convert(Basis::S), SymFunc::s(p(&[3, 1])));
    }

    #[test]
    fn schur_product_matches_power_sums() {
        for a in 0..=4 {
            for b in 0..=(4 - a) {
                for mu in partitions_of(a) {
                    for nu in partitions_of(b) {
                        let via_lr = SymFunc::s(mu.clone()).mul(&SymFunc::s(nu.clone()));
                        let via_p = SymFunc::s(mu.clone())
                            .convert(Basis::P)
                            .mul(&SymFunc::s(nu.clone()).convert(Basis::P))
                            .convert(Basis::S);
                        assert_eq!(via_lr, via_p);
                    }
                }
            }
        }
    }

    #[test]
    fn lr_matches_character_inner_product() {
        for n in 0..=6 {
            for lam in partitions_of(n) {
                for a in 0..=n {
                    for mu in partitions_of(a) {
                        for nu in partitions_of(n - a) {
                            let prod = SymFunc::s(mu.clone())
                                .convert(Basis::P)
                                .mul(&SymFunc::s(nu.clone()).convert(Basis::P))
                                .convert(Basis::S);
                            let c = lr_coefficient(&lam, &mu, &nu);
                            assert_eq!(prod.coeff(&lam), rat(c as i64));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn plethysm_examples() {
        assert_eq!(SymFunc::p(2).plethysm(&SymFunc::p(3)).unwrap(), SymFunc::p(6));
        let e2h2 = SymFunc::e(2).plethysm(&SymFunc::h(2)).unwrap();
        assert_eq!(e2h2.convert(Basis::S), SymFunc::s(p(&[3, 1])));
        let alt = SymFunc::h(1).mul(&SymFunc::h(3)).sub(&SymFunc::h(4));
        assert_eq!(e2h2.convert(Basis::H), alt);
        let h2h2 = SymFunc::h(2).plethysm(&SymFunc::h(2)).unwrap();
        assert_eq!(h2h2.convert(Basis::S), sf("s[4] + s[2,2]"));
        assert_eq!(h2h2.add(&e2h2), SymFunc::h(2).mul(&SymFunc::h(2)).convert(Basis::H));
    }

    #[test]
    fn plethysm_rejects_fractional_constant() {
        let g = sf("1/2 + p[1]");
        assert!(SymFunc::e(2).plethysm(&g).is_err());
        let g = sf("1 + p[1]");
        assert!(SymFunc::e(2).plethysm(&g).is_ok());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(SymFunc::e(4).omega().convert(Basis::H), SymFunc::h(4));
        assert_eq!(SymFunc::s(p(&[2, 1])).omega(), SymFunc::s(p(&[2, 1])));
        for n in 0..=5 {
            for lam in partitions_of(n) {
                for b in [Basis::E, Basis::H, Basis::S, Basis::P] {
                    let f = SymFunc::basis_element(b, lam.clone());
                    assert_eq!(f.omega().omega().convert(b), f);
                }
            }
        }
        // Inner degree even: ω(e2[h2]) = e2[ω h2] = e2[e2], which is not h2[e2].
        let lhs = SymFunc::e(2).plethysm(&SymFunc::h(2)).unwrap().omega();
        let rhs = SymFunc::e(2).plethysm(&SymFunc::e(2)).unwrap();
        assert_eq!(lhs.convert(Basis::S), rhs.convert(Basis::S));
        assert_eq!(lhs.convert(Basis::S), SymFunc::s(p(&[2, 1, 1])));
        let h2e2 = SymFunc::h(2).plethysm(&SymFunc::e(2)).unwrap();
        assert_ne!(lhs.convert(Basis::S), h2e2.convert(Basis::S));
    }

    #[test]
    fn omega_plethysm_parity_rule() {
        let gens = [SymFunc::e(1), SymFunc::h(2), SymFunc::e(3), SymFunc::s(p(&[2, 1]))];
        for f in [SymFunc::e(2), SymFunc::h(2), SymFunc::h(3), SymFunc::s(p(&[2, 1]))] {
            for g in &gens {
                let odd = g.degrees() == vec![1] || g.degrees() == vec![3];
                let lhs = f.plethysm(g).unwrap().omega().convert(Basis::S);
                let outer = if odd { f.omega() } else { f.clone() };
                let rhs = outer.plethysm(&g.omega()).unwrap().convert(Basis::S);
                assert_eq!(lhs, rhs, "{f} [ {g} ]");
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(sf("s[1,1] + s[2]").to_string(), "s[2] + s[1,1]");
        assert_eq!(SymFunc::s(p(&[1, 1])).convert(Basis::P).to_string(), "-1/2*p[2] + 1/2*p[1,1]");
        assert_eq!(sf("h[1]*h[3] - h[4]"), sf("h[3,1] - h[4]"));
    }
}
