//! Symmetric-group characters and the structure constants built from them.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

type CharMemo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static CharMemo {
    static MEMO: OnceLock<CharMemo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    Partition::from_unsorted((0..l).map(|i| beta[i] - (l - 1 - i)).collect())
}

/// All ways to strip a border strip of length `k`, as `(remaining shape, sign)`.
fn strip_border(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let beta = beta_set(lambda);
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        out.push((from_beta(nb), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn character_unchecked(lambda: &Partition, rho: &Partition) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    let k = rho.part(0);
    let rest = Partition::from_unsorted(rho.parts()[1..].to_vec());
    let value = strip_border(lambda, k)
        .into_iter()
        .map(|(mu, sign)| sign * character_unchecked(&mu, &rest))
        .sum();
    memo().write().unwrap().entry(key).or_insert(value);
    value
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama border-strip recursion.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.weight() != rho.weight() {
        return Err(Error::usage(format!(
            "character of {lambda} evaluated at class {rho} of different weight"
        )));
    }
    Ok(character_unchecked(lambda, rho))
}

/// Littlewood–Richardson coefficient `c^λ_{μν}` by counting skew tableaux of
/// shape `λ/μ` and content `ν` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) || !lambda.contains(nu)
    {
        return 0;
    }
    // Cells in reading order: rows top to bottom, right to left within a row.
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in (mu.part(r)..lambda.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let rows = lambda.len();
    let width = lambda.part(0);
    let mut grid = vec![vec![0usize; width]; rows];
    let mut counts = vec![0usize; nu.len() + 1];

    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let upper = if c + 1 < lambda.part(r) {
            grid[r][c + 1]
        } else {
            nu.len()
        };
        let lower = if r > 0 && c >= mu.part(r - 1) {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lower..=upper {
            if counts[v] >= nu.part(v - 1) {
                continue;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            counts[v] += 1;
            grid[r][c] = v;
            total += go(k + 1, cells, grid, counts, lambda, mu, nu);
            counts[v] -= 1;
        }
        grid[r][c] = 0;
        total
    }
    go(0, &cells, &mut grid, &mut counts, lambda, mu, nu)
}

/// `Σ_ρ χ^λ(ρ)χ^μ(ρ)χ^ν(ρ) / z_ρ`, the multiplicity of `V_λ` in `V_μ ⊗ V_ν`.
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.weight();
    if mu.weight() != n || nu.weight() != n {
        return Err(Error::usage("Kronecker coefficient needs partitions of equal weight"));
    }
    let mut sum = BigRational::zero();
    for rho in partitions_of(n) {
        let prod = character_unchecked(lambda, &rho)
            * character_unchecked(mu, &rho)
            * character_unchecked(nu, &rho);
        if prod != 0 {
            sum += BigRational::new(BigInt::from(prod), rho.z());
        }
    }
    if !sum.is_integer() {
        return Err(Error::domain("character sum is not integral"));
    }
    sum.to_integer()
        .to_u64()
        .ok_or_else(|| Error::domain("negative Kronecker coefficient"))
}
