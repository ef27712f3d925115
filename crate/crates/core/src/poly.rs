//! Sparse multivariate Laurent polynomials over arbitrary-precision integers.
//!
//! Every [`MultiPoly`] is bound to a shared [`VarTable`] that fixes the
//! variable order and which variables may carry negative exponents. Terms are
//! kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic: total degree ascending, then larger exponents on earlier
//! variables first. The map never stores a zero coefficient, so structural
//! equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ordered, immutable list of variable names with their invertibility flags.
#[derive(Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    invertible: Vec<bool>,
    index: HashMap<String, usize>,
}

pub type Vars = Arc<VarTable>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_');
    if !head_ok {
        return false;
    }
    let rest: String = chars.collect();
    let (base, arg) = match rest.find('(') {
        Some(p) => (&rest[..p], Some(&rest[p..])),
        None => (rest.as_str(), None),
    };
    let ident = |s: &str| s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !ident(base) {
        return false;
    }
    match arg {
        None => true,
        Some(a) => {
            a.len() > 2 && a.ends_with(')') && {
                let inner = &a[1..a.len() - 1];
                !inner.is_empty() && ident(inner)
            }
        }
    }
}

impl VarTable {
    /// Builds a table from `(name, invertible)` pairs.
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, bool)>) -> Result<Vars> {
        let mut names = Vec::new();
        let mut invertible = Vec::new();
        let mut index = HashMap::new();
        for (name, inv) in vars {
            let name = name.into();
            if !valid_name(&name) {
                return Err(Error::usage(format!("invalid variable name `{name}`")));
            }
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(Error::usage(format!("duplicate variable `{name}`")));
            }
            names.push(name);
            invertible.push(inv);
        }
        Ok(Arc::new(VarTable {
            names,
            invertible,
            index,
        }))
    }

    /// Table of non-invertible variables.
    pub fn polynomial<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Vars> {
        Self::new(names.into_iter().map(|n| (n, false)))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.invertible[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::usage(format!("unknown variable `{name}`")))
    }
}

fn same_table(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exponent vector, one entry per table variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c.into());
        p
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars.require(name)?;
        Ok(Self::var_at(vars, i))
    }

    pub fn var_at(vars: &Vars, i: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Self::from_term(vars, Monomial(exps), BigInt::one())
    }

    /// A single term; panics if the monomial violates invertibility.
    pub fn from_term(vars: &Vars, mono: Monomial, coeff: BigInt) -> Self {
        Self::try_from_term(vars, mono, coeff).expect("illegal monomial")
    }

    pub fn try_from_term(vars: &Vars, mono: Monomial, coeff: BigInt) -> Result<Self> {
        if mono.0.len() != vars.len() {
            return Err(Error::usage("monomial length does not match variable table"));
        }
        for (i, &e) in mono.0.iter().enumerate() {
            if e < 0 && !vars.is_invertible(i) {
                return Err(Error::domain(format!(
                    "negative exponent on non-invertible variable `{}`",
                    vars.name(i)
                )));
            }
        }
        let mut p = Self::zero(vars);
        p.add_term(mono, coeff);
        Ok(p)
    }

    /// `name^exp`, with negative exponents allowed on invertible variables.
    pub fn var_pow(vars: &Vars, name: &str, exp: i32) -> Result<Self> {
        let i = vars.require(name)?;
        let mut exps = vec![0; vars.len()];
        exps[i] = exp;
        Self::try_from_term(vars, Monomial(exps), BigInt::one())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    /// Adds `c * mono` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    fn check_table(&self, other: &MultiPoly) -> Result<()> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::usage("polynomials live over different variable tables"))
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_table(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(&self.vars));
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Ok(MultiPoly {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.mul(mono), v.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `Some((coeff, mono))` if this is a single term with coefficient ±1.
    pub fn as_unit_monomial(&self) -> Option<(BigInt, Monomial)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some((c.clone(), m.clone()))
        } else {
            None
        }
    }

    /// Inverse of a unit monomial `±m` whose variables are all invertible.
    pub fn unit_inverse(&self) -> Result<MultiPoly> {
        let (c, m) = self
            .as_unit_monomial()
            .ok_or_else(|| Error::domain(format!("`{self}` is not a unit monomial")))?;
        MultiPoly::try_from_term(&self.vars, m.pow(-1), c)
    }

    /// Integer power, negative only for unit monomials.
    pub fn pow_i(&self, k: i32) -> Result<MultiPoly> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.unit_inverse()?.pow((-k) as u32))
        }
    }

    /// Lowest and highest exponent of variable `i` occurring, `None` for zero.
    pub fn degree_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.0[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Total degree of the top term; `None` stands for the degree of zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Groups terms by the exponent of variable `i`; the coefficients no
    /// longer mention that variable.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<i32, MultiPoly> {
        let mut out: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut rest = m.clone();
            rest.0[i] = 0;
            out.entry(e)
                .or_insert_with(|| MultiPoly::zero(&self.vars))
                .add_term(rest, c.clone());
        }
        out
    }

    /// Coefficient of `var^k` (the result has no occurrence of `var`).
    pub fn coefficient_of(&self, i: usize, k: i32) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut rest = m.clone();
                rest.0[i] = 0;
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Ring homomorphism into `target`, sending variable `i` to `images[i]`.
    ///
    /// A negative exponent on a variable requires its image to be a unit
    /// monomial over invertible variables.
    pub fn eval_hom(&self, target: &Vars, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::usage("image list does not match variable table"));
        }
        for img in images {
            if !same_table(img.vars(), target) {
                return Err(Error::usage("image over wrong variable table"));
            }
        }
        let mut cache: HashMap<(usize, i32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !cache.contains_key(&(i, e)) {
                    let p = images[i].pow_i(e).map_err(|_| {
                        Error::domain(format!(
                            "substitution for `{}` would need an inverse of `{}`",
                            self.vars.name(i),
                            images[i]
                        ))
                    })?;
                    cache.insert((i, e), p);
                }
                term = &term * &cache[&(i, e)];
                if term.is_zero() {
                    break;
                }
            }
            out += &term;
        }
        Ok(out)
    }

    /// Replaces variable `name` by `image` (same table).
    pub fn substitute(&self, name: &str, image: &MultiPoly) -> Result<MultiPoly> {
        self.check_table(image)?;
        let idx = self.vars.require(name)?;
        let images: Vec<MultiPoly> = (0..self.vars.len())
            .map(|i| {
                if i == idx {
                    image.clone()
                } else {
                    MultiPoly::var_at(&self.vars, i)
                }
            })
            .collect();
        // Identity variables never need inverting beyond what the table allows.
        self.eval_hom(&self.vars.clone(), &images)
    }

    /// Re-expresses the polynomial over `target`, matching variables by name.
    pub fn remap(&self, target: &Vars) -> Result<MultiPoly> {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| target.require(n))
            .collect::<Result<_>>()?;
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.0.iter().enumerate() {
                exps[map[i]] = e;
            }
            out.terms.insert(Monomial(exps), c.clone());
        }
        for (m, _) in &out.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e < 0 && !target.is_invertible(i) {
                    return Err(Error::domain(format!(
                        "`{}` is not invertible in the target table",
                        target.name(i)
                    )));
                }
            }
        }
        Ok(out)
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect()
    }

    pub fn parse(vars: &Vars, text: &str) -> Result<MultiPoly> {
        Parser::new(vars, text).parse_all()
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars.name(i).to_string()),
                _ => parts.push(format!("{}^{}", self.vars.name(i), e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.render_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.render_monomial(m))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics on mismatched variable tables; use the `checked_*` form
            /// to get a usage error instead.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("mismatched variable tables")
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        self.check_table(rhs).expect("mismatched variable tables");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        self.check_table(rhs).expect("mismatched variable tables");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

struct Parser<'a> {
    vars: &'a Vars,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(vars: &'a Vars, text: &'a str) -> Self {
        Parser {
            vars,
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<MultiPoly> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            self.skip_ws();
            let k = self.integer()?;
            let k: i32 = k.try_into().map_err(|_| self.err("exponent too large"))?;
            let k = if neg { -k } else { k };
            return base.pow_i(k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MultiPoly::constant(self.vars, n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                // `Name(arg)` is a single derived-symbol identifier.
                if self.src.get(self.pos) == Some(&b'(') {
                    if let Some(close) = self.src[self.pos..].iter().position(|&b| b == b')') {
                        let candidate =
                            std::str::from_utf8(&self.src[start..self.pos + close + 1]).unwrap();
                        if self.vars.index_of(candidate).is_some() {
                            self.pos += close + 1;
                            return MultiPoly::var(self.vars, candidate);
                        }
                    }
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                MultiPoly::var(self.vars, name).map_err(|e| Error::parse(e.to_string()))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vars {
        VarTable::new([("x", false), ("y", false), ("L", true)]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = xy();
        let x = MultiPoly::var(&v, "x").unwrap();
        let one = MultiPoly::one(&v);
        let p = (&x + &one) * (&x - &one);
        assert_eq!(p.to_string(), "-1 + x^2");
    }

    #[test]
    fn tate_symbol_is_invertible() {
        let v = xy();
        let l = MultiPoly::var(&v, "L").unwrap();
        let linv = MultiPoly::var_pow(&v, "L", -1).unwrap();
        assert!((&l * &linv).is_one());
        assert!(MultiPoly::var_pow(&v, "x", -1).is_err());
    }

    #[test]
    fn additive_inverse_is_empty() {
        let v = VarTable::polynomial(["s1", "s2"]).unwrap();
        let p = MultiPoly::parse(&v, "s1 + s2").unwrap();
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
        assert_eq!(z.total_degree(), None);
    }

    #[test]
    fn mismatched_tables_are_usage_errors() {
        let a = MultiPoly::one(&xy());
        let b = MultiPoly::one(&VarTable::polynomial(["z"]).unwrap());
        assert!(matches!(a.checked_add(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn substitute_monomial() {
        let v = VarTable::new([("L", true), ("T", true)]).unwrap();
        let p = MultiPoly::parse(&v, "1 + L*T^2").unwrap();
        let img = MultiPoly::parse(&v, "L^-1*T^-1").unwrap();
        let q = p.substitute("T", &img).unwrap();
        assert_eq!(q, MultiPoly::parse(&v, "1 + L^-1*T^-2").unwrap());
        let t = MultiPoly::var(&v, "T").unwrap();
        assert_eq!(t.substitute("T", &t).unwrap(), t);
    }

    #[test]
    fn substitute_q_poly_at_genus_one() {
        let v = VarTable::new([("s1", false), ("s2", true), ("t", true)]).unwrap();
        let q = MultiPoly::parse(&v, "1 + s1*t + s2*t^2").unwrap();
        let img = MultiPoly::parse(&v, "s2^-1*t^-1").unwrap();
        let sub = q.substitute("t", &img).unwrap();
        // Expanded by hand: 1 + s1*s2^-1*t^-1 + s2^-1*t^-2.
        assert_eq!(sub, MultiPoly::parse(&v, "1 + s1*s2^-1*t^-1 + s2^-1*t^-2").unwrap());
        let factor = MultiPoly::parse(&v, "s2^-1*t^-2").unwrap();
        assert_eq!(sub, &factor * &q);
    }

    #[test]
    fn illegal_substitution_is_domain_error() {
        let v = VarTable::new([("x", false), ("y", false)]).unwrap();
        let p = MultiPoly::parse(&v, "x").unwrap();
        let img = MultiPoly::parse(&v, "1 + y").unwrap();
        assert!(p.substitute("x", &img).is_ok());
        let w = VarTable::new([("x", true), ("y", false)]).unwrap();
        let p = MultiPoly::parse(&w, "x^-1").unwrap();
        let img = MultiPoly::parse(&w, "y").unwrap();
        assert!(matches!(p.substitute("x", &img), Err(Error::Domain(_))));
    }

    #[test]
    fn rendering_order_is_graded() {
        let v = VarTable::polynomial(["s1", "s2", "t"]).unwrap();
        let q = MultiPoly::parse(&v, "s2*t^2 + s1*t + 1").unwrap();
        assert_eq!(q.to_string(), "1 + s1*t + s2*t^2");
    }

    #[test]
    fn derived_symbol_names_parse() {
        let v = VarTable::new([("h", false), ("Sym2(h)", false), ("L", true)]).unwrap();
        let p = MultiPoly::parse(&v, "Sym2(h)^2 - 3*h*L^-2 + (1 + L)^2").unwrap();
        assert_eq!(MultiPoly::parse(&v, &p.to_string()).unwrap(), p);
    }
}
