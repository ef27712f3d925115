//! Motive description documents.
//!
//! A line-oriented text format. Blank lines and lines starting with `#` are
//! ignored; every other line is one declaration:
//!
//! ```text
//! atom h minus 2
//! relation h 2 = L
//! expr E = 1 + h + L
//! split E2 weight 1; plus = 1 + L; minus = h
//! task zeta E order 8
//! task sym 2 E
//! task alt 2 E
//! task schur [2,1] E
//! task rational E2 order 6
//! task check E2
//! ```
//!
//! Atom symbols are named `h`, `Sym2(h)`, `Sym3(h)`, .. for minus atoms and
//! `b`, `Alt2(b)`, .. for plus and free atoms. Expressions and splits share
//! one namespace; a split used where an expression is expected stands for
//! `plus + minus`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lambda::{AtomDecl, K0Ring, MotiveBuilder, Parity, RelationDecl};
use crate::partition::Partition;
use crate::poly::MultiPoly;
use crate::zeta::Split;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDecl {
    pub name: String,
    pub weight: i64,
    pub plus: String,
    pub minus: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Task {
    Zeta { name: String, order: Option<usize> },
    Sym { r: usize, name: String },
    Alt { r: usize, name: String },
    Schur { shape: Partition, name: String },
    Rational { name: String, order: Option<usize> },
    Check { name: String },
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = |o: &Option<usize>| o.map(|n| format!(" order {n}")).unwrap_or_default();
        match self {
            Task::Zeta { name, order: o } => write!(f, "zeta {name}{}", order(o)),
            Task::Sym { r, name } => write!(f, "sym {r} {name}"),
            Task::Alt { r, name } => write!(f, "alt {r} {name}"),
            Task::Schur { shape, name } => write!(f, "schur {shape} {name}"),
            Task::Rational { name, order: o } => write!(f, "rational {name}{}", order(o)),
            Task::Check { name } => write!(f, "check {name}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MotiveDocument {
    pub atoms: Vec<AtomDecl>,
    pub relations: Vec<RelationDecl>,
    pub exprs: Vec<(String, String)>,
    pub splits: Vec<SplitDecl>,
    pub tasks: Vec<Task>,
}

/// A built document: the ring and its named elements.
#[derive(Debug, Clone)]
pub struct Motive {
    pub ring: K0Ring,
    pub exprs: BTreeMap<String, MultiPoly>,
    pub splits: BTreeMap<String, Split>,
}

impl Motive {
    pub fn element(&self, name: &str) -> Result<MultiPoly> {
        if let Some(x) = self.exprs.get(name) {
            return Ok(x.clone());
        }
        if let Some(s) = self.splits.get(name) {
            return Ok(s.class());
        }
        Err(Error::usage(format!("no expression or split named `{name}`")))
    }

    pub fn split(&self, name: &str) -> Result<&Split> {
        self.splits
            .get(name)
            .ok_or_else(|| Error::usage(format!("no split named `{name}`")))
    }
}

fn is_name(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_usize(s: &str, what: &str, line: usize) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::parse(format!("line {line}: {what} `{s}` is not a nonnegative integer")))
}

/// `<head> = <rest>`.
fn split_eq(s: &str, line: usize) -> Result<(&str, &str)> {
    let (l, r) = s
        .split_once('=')
        .ok_or_else(|| Error::parse(format!("line {line}: expected `=`")))?;
    Ok((l.trim(), r.trim()))
}

impl MotiveDocument {
    pub fn parse(text: &str) -> Result<MotiveDocument> {
        let mut doc = MotiveDocument::default();
        for (i, raw) in text.lines().enumerate() {
            let n = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let words: Vec<&str> = rest.split_whitespace().collect();
            let bad = |msg: &str| Error::parse(format!("line {n}: {msg}"));
            match kw {
                "atom" => {
                    let [name, parity, bound] = words[..] else {
                        return Err(bad("expected `atom <name> <minus|plus|free> <bound>`"));
                    };
                    doc.atoms.push(AtomDecl {
                        name: name.into(),
                        parity: parity.parse::<Parity>().map_err(|e| bad(&e.to_string()))?,
                        bound: parse_usize(bound, "bound", n)?,
                    });
                }
                "relation" => {
                    let (head, rhs) = split_eq(rest, n)?;
                    let hw: Vec<&str> = head.split_whitespace().collect();
                    let [atom, index] = hw[..] else {
                        return Err(bad("expected `relation <atom> <index> = <poly>`"));
                    };
                    doc.relations.push(RelationDecl {
                        atom: atom.into(),
                        index: parse_usize(index, "index", n)?,
                        rhs: rhs.into(),
                    });
                }
                "expr" => {
                    let (name, rhs) = split_eq(rest, n)?;
                    if !is_name(name) {
                        return Err(bad(&format!("`{name}` is not a valid name")));
                    }
                    doc.exprs.push((name.into(), rhs.into()));
                }
                "split" => doc.splits.push(parse_split(rest, n)?),
                "task" => doc.tasks.push(parse_task(&words, n)?),
                _ => return Err(bad(&format!("unknown declaration `{kw}`"))),
            }
        }
        Ok(doc)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for a in &self.atoms {
            out.push_str(&format!("atom {} {} {}\n", a.name, a.parity.as_str(), a.bound));
        }
        for r in &self.relations {
            out.push_str(&format!("relation {} {} = {}\n", r.atom, r.index, r.rhs));
        }
        for (name, rhs) in &self.exprs {
            out.push_str(&format!("expr {name} = {rhs}\n"));
        }
        for s in &self.splits {
            out.push_str(&format!(
                "split {} weight {}; plus = {}; minus = {}\n",
                s.name, s.weight, s.plus, s.minus
            ));
        }
        for t in &self.tasks {
            out.push_str(&format!("task {t}\n"));
        }
        out
    }

    pub fn ring(&self) -> Result<K0Ring> {
        let mut b = MotiveBuilder::new();
        for a in &self.atoms {
            b.atom(&a.name, a.parity, a.bound)?;
        }
        for r in &self.relations {
            b.relation(&r.atom, r.index, &r.rhs)?;
        }
        b.build()
    }

    /// The same document with every polynomial in canonical text.
    pub fn canonical(&self) -> Result<MotiveDocument> {
        let ring = self.ring()?;
        let canon = |s: &str| -> Result<String> { Ok(MultiPoly::parse(ring.vars(), s)?.to_string()) };
        let mut out = self.clone();
        for r in &mut out.relations {
            r.rhs = canon(&r.rhs)?;
        }
        for (_, rhs) in &mut out.exprs {
            *rhs = canon(rhs)?;
        }
        for s in &mut out.splits {
            s.plus = canon(&s.plus)?;
            s.minus = canon(&s.minus)?;
        }
        Ok(out)
    }

    pub fn build(&self) -> Result<Motive> {
        let ring = self.ring()?;
        let mut exprs = BTreeMap::new();
        let mut splits = BTreeMap::new();
        for (name, rhs) in &self.exprs {
            if exprs.insert(name.clone(), ring.parse(rhs)?).is_some() {
                return Err(Error::usage(format!("`{name}` declared twice")));
            }
        }
        for s in &self.splits {
            let plus = ring.parse(&s.plus)?;
            let minus = ring.parse(&s.minus)?;
            let split = Split {
                e: ring.kimura_degree(&plus, Parity::Plus)?,
                f: ring.kimura_degree(&minus, Parity::Minus)?,
                plus,
                minus,
                weight: s.weight,
            };
            if exprs.contains_key(&s.name) || splits.insert(s.name.clone(), split).is_some() {
                return Err(Error::usage(format!("`{}` declared twice", s.name)));
            }
        }
        let motive = Motive { ring, exprs, splits };
        for t in &self.tasks {
            match t {
                Task::Rational { name, .. } | Task::Check { name } => {
                    motive.split(name)?;
                }
                Task::Zeta { name, .. } | Task::Sym { name, .. } | Task::Alt { name, .. } | Task::Schur { name, .. } => {
                    motive.element(name)?;
                }
            }
        }
        Ok(motive)
    }
}

fn parse_split(rest: &str, n: usize) -> Result<SplitDecl> {
    let bad = || Error::parse(format!("line {n}: expected `split <name> weight <d>; plus = <poly>; minus = <poly>`"));
    let parts: Vec<&str> = rest.split(';').map(str::trim).collect();
    let [head, plus, minus] = parts[..] else {
        return Err(bad());
    };
    let hw: Vec<&str> = head.split_whitespace().collect();
    let [name, "weight", w] = hw[..] else {
        return Err(bad());
    };
    if !is_name(name) {
        return Err(bad());
    }
    let weight = w.parse::<i64>().map_err(|_| bad())?;
    let (pk, plus) = split_eq(plus, n)?;
    let (mk, minus) = split_eq(minus, n)?;
    if pk != "plus" || mk != "minus" {
        return Err(bad());
    }
    Ok(SplitDecl {
        name: name.into(),
        weight,
        plus: plus.into(),
        minus: minus.into(),
    })
}

fn parse_task(words: &[&str], n: usize) -> Result<Task> {
    let bad = |msg: &str| Error::parse(format!("line {n}: {msg}"));
    let order = |tail: &[&str]| -> Result<Option<usize>> {
        match tail {
            [] => Ok(None),
            ["order", k] => Ok(Some(parse_usize(k, "order", n)?)),
            _ => Err(bad("expected `order <n>` or nothing")),
        }
    };
    match words {
        ["zeta", name, tail @ ..] => Ok(Task::Zeta {
            name: name.to_string(),
            order: order(tail)?,
        }),
        ["rational", name, tail @ ..] => Ok(Task::Rational {
            name: name.to_string(),
            order: order(tail)?,
        }),
        ["sym", r, name] => Ok(Task::Sym {
            r: parse_usize(r, "index", n)?,
            name: name.to_string(),
        }),
        ["alt", r, name] => Ok(Task::Alt {
            r: parse_usize(r, "index", n)?,
            name: name.to_string(),
        }),
        ["schur", shape, name] => Ok(Task::Schur {
            shape: shape.parse().map_err(|e: Error| bad(&e.to_string()))?,
            name: name.to_string(),
        }),
        ["check", name] => Ok(Task::Check { name: name.to_string() }),
        _ => Err(bad("unknown task")),
    }
}
