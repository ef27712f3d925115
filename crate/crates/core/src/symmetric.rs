//! Rewriting symmetric polynomials in elementary symmetric polynomials.
//!
//! The reduction is the classical leading-term descent. Because the input is
//! symmetric it is determined by its coefficients on partition-shaped
//! exponent vectors, so the descent only tracks those; the partition-shaped
//! coefficients of a product of elementary polynomials are counted directly
//! as 0-1 matrices with prescribed row and column sums.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{binomial, bounded_partitions};
use crate::poly::{Monomial, MultiPoly, Vars};

/// `e_k` in the variables `alphabet` of `vars`.
pub fn elementary_symmetric(vars: &Vars, alphabet: &[usize], k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    let n = alphabet.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0; vars.len()];
        for &i in &idx {
            e[alphabet[i]] = 1;
        }
        out.add_term(Monomial::from_exponents(e), BigInt::one());
        // next k-subset in lexicographic order
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// True if `p` is invariant under swapping any two variables of `alphabet`.
pub fn is_symmetric(p: &MultiPoly, alphabet: &[usize]) -> bool {
    // Adjacent transpositions generate the symmetric group.
    for w in alphabet.windows(2) {
        let (a, b) = (w[0], w[1]);
        for (m, c) in p.terms() {
            let mut e = m.exponents().to_vec();
            e.swap(a, b);
            if p.coeff(&Monomial::from_exponents(e)) != *c {
                return false;
            }
        }
    }
    true
}

/// Counts 0-1 matrices: rows of the given sizes, columns with sums `cols`.
struct MatrixCounter {
    memo: HashMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl MatrixCounter {
    fn new() -> Self {
        MatrixCounter { memo: HashMap::new() }
    }

    /// `rows[k]` = number of rows of size `k + 1`; `cols` sorted descending.
    fn count(&mut self, rows: &[u32], cols: &[u32]) -> BigInt {
        let Some(k) = rows.iter().rposition(|&r| r > 0) else {
            return if cols.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let size = k + 1;
        let total_rows: u64 = rows.iter().enumerate().map(|(i, &r)| (i as u64 + 1) * r as u64).sum();
        let total_cols: u64 = cols.iter().map(|&c| c as u64).sum();
        if total_rows != total_cols || cols.iter().filter(|&&c| c > 0).count() < size {
            return BigInt::zero();
        }
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut rest_rows = rows.to_vec();
        rest_rows[k] -= 1;
        // Group columns by remaining sum; choose how many from each group.
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &c in cols.iter().filter(|&&c| c > 0) {
            match groups.last_mut() {
                Some((v, m)) if *v == c => *m += 1,
                _ => groups.push((c, 1)),
            }
        }
        let zeros = cols.iter().filter(|&&c| c == 0).count();
        let mut total = BigInt::zero();
        let mut pick = vec![0usize; groups.len()];
        self.choose(&groups, 0, size, &mut pick, &mut |this, pick| {
            let mut mult = BigInt::one();
            let mut next = Vec::with_capacity(cols.len());
            for (g, &(v, m)) in groups.iter().enumerate() {
                mult *= binomial(m as i64, pick[g] as i64);
                next.extend(std::iter::repeat_n(v, m - pick[g]));
                next.extend(std::iter::repeat_n(v - 1, pick[g]));
            }
            next.extend(std::iter::repeat_n(0, zeros));
            next.sort_unstable_by(|a, b| b.cmp(a));
            total += mult * this.count(&rest_rows, &next);
        });
        self.memo.insert(key, total.clone());
        total
    }

    fn choose(
        &mut self,
        groups: &[(u32, usize)],
        g: usize,
        left: usize,
        pick: &mut Vec<usize>,
        visit: &mut dyn FnMut(&mut Self, &[usize]),
    ) {
        if g == groups.len() {
            if left == 0 {
                visit(self, pick);
            }
            return;
        }
        let cap = groups[g].1.min(left);
        for j in 0..=cap {
            pick[g] = j;
            self.choose(groups, g + 1, left - j, pick, visit);
        }
        pick[g] = 0;
    }
}

/// Rewrites a polynomial symmetric in `alphabet` (variables of `p`) as a
/// polynomial in `sigma` (variables of `target`), where `sigma[k]` stands for
/// the `(k+1)`-th elementary symmetric polynomial of the alphabet. All other
/// variables of `p` are carried over to `target` by name.
pub fn elementary_reduce(
    p: &MultiPoly,
    alphabet: &[&str],
    sigma: &[&str],
    target: &Vars,
) -> Result<MultiPoly> {
    let src = p.vars();
    let n = alphabet.len();
    if sigma.len() != n {
        return Err(Error::usage("need one elementary symbol per alphabet variable"));
    }
    let alpha: Vec<usize> = alphabet.iter().map(|a| src.require(a)).collect::<Result<_>>()?;
    let sig: Vec<usize> = sigma.iter().map(|s| target.require(s)).collect::<Result<_>>()?;
    if !is_symmetric(p, &alpha) {
        return Err(Error::domain("polynomial is not symmetric in the given alphabet"));
    }
    let rest_map: Vec<Option<usize>> = (0..src.len())
        .map(|i| {
            if alpha.contains(&i) {
                Ok(None)
            } else {
                target.require(src.name(i)).map(Some)
            }
        })
        .collect::<Result<_>>()?;

    // Coefficients on partition-shaped alphabet exponents, keyed by the
    // exponent vector; BTreeMap's last key is the lex-largest.
    let mut dominant: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let ex: Vec<i32> = alpha.iter().map(|&i| m.exponent(i)).collect();
        if ex.iter().any(|&e| e < 0) {
            return Err(Error::domain("negative exponent in a symmetric alphabet"));
        }
        if ex.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let mut rest = vec![0; target.len()];
        for (i, t) in rest_map.iter().enumerate() {
            if let Some(t) = t {
                rest[*t] = m.exponent(i);
            }
        }
        let key: Vec<u32> = ex.iter().map(|&e| e as u32).collect();
        dominant
            .entry(key)
            .or_insert_with(|| MultiPoly::zero(target))
            .add_term(Monomial::from_exponents(rest), c.clone());
    }
    dominant.retain(|_, v| !v.is_zero());
    Ok(descend(dominant, &sig, target))
}

/// Leading-term descent on the partition-shaped coefficients of a symmetric
/// polynomial in `sig.len()` letters. `dominant` maps weakly decreasing
/// exponent vectors to their (nonzero) coefficients over `target`.
pub fn descend(
    mut dominant: BTreeMap<Vec<u32>, MultiPoly>,
    sig: &[usize],
    target: &Vars,
) -> MultiPoly {
    let n = sig.len();
    let mut counter = MatrixCounter::new();
    let mut result = MultiPoly::zero(target);
    while let Some((lead, coef)) = dominant.pop_last() {
        let mut mu = vec![0u32; n];
        for k in 0..n {
            mu[k] = lead[k] - lead.get(k + 1).copied().unwrap_or(0);
        }
        let mut sexp = vec![0i32; target.len()];
        for k in 0..n {
            sexp[sig[k]] = mu[k] as i32;
        }
        result += &coef.shift(&Monomial::from_exponents(sexp));

        let weight: u32 = lead.iter().sum();
        for nu in bounded_partitions(weight as usize, lead[0] as usize, n) {
            let mut cols: Vec<u32> = nu.parts().iter().map(|&x| x as u32).collect();
            cols.resize(n, 0);
            if cols >= lead {
                continue;
            }
            let cnt = counter.count(&mu, &cols);
            if cnt.is_zero() {
                continue;
            }
            let entry = dominant.entry(cols.clone()).or_insert_with(|| MultiPoly::zero(target));
            *entry -= &coef.scale(&cnt);
            if entry.is_zero() {
                dominant.remove(&cols);
            }
        }
    }
    result
}
