//! Truncated univariate power series with [`MultiPoly`] coefficients.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly, Vars};

/// `Σ_{i ≤ order} c_i T^i`; coefficients past `order` are unknown.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    vars: Vars,
    coeffs: Vec<MultiPoly>,
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O({})]", self.order() + 1)
    }
}

impl PowerSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn new(vars: &Vars, mut coeffs: Vec<MultiPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero(vars));
        PowerSeries {
            vars: vars.clone(),
            coeffs,
        }
    }

    pub fn one(vars: &Vars, order: usize) -> Self {
        Self::new(vars, vec![MultiPoly::one(vars)], order)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `T^i`; reading past the truncation order is an error.
    pub fn coeff(&self, i: usize) -> Result<&MultiPoly> {
        self.coeffs.get(i).ok_or_else(|| {
            Error::usage(format!(
                "coefficient {i} requested from a series known only to order {}",
                self.order()
            ))
        })
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Result<PowerSeries> {
        if order > self.order() {
            return Err(Error::usage("cannot extend a truncated series"));
        }
        Ok(PowerSeries {
            vars: self.vars.clone(),
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check(&self, other: &PowerSeries) -> Result<usize> {
        if self.vars != other.vars && !std::sync::Arc::ptr_eq(&self.vars, &other.vars) {
            return Err(Error::usage("series over different variable tables"));
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let n = self.check(other)?;
        let coeffs = (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        Ok(PowerSeries::new(&self.vars, coeffs, n))
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let n = self.check(other)?;
        let coeffs = (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        Ok(PowerSeries::new(&self.vars, coeffs, n))
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let n = self.check(other)?;
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut c = MultiPoly::zero(&self.vars);
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                if !a.is_zero() && !b.is_zero() {
                    c = &c + &(a * b);
                }
            }
            coeffs.push(c);
        }
        Ok(PowerSeries::new(&self.vars, coeffs, n))
    }

    /// Multiplicative inverse; the constant term must be `±` a unit monomial.
    pub fn invert(&self) -> Result<PowerSeries> {
        let a0_inv = self.coeffs[0]
            .unit_inverse()
            .map_err(|_| Error::domain("series not invertible"))?;
        let n = self.order();
        let mut inv: Vec<MultiPoly> = Vec::with_capacity(n + 1);
        inv.push(a0_inv.clone());
        for k in 1..=n {
            let mut s = MultiPoly::zero(&self.vars);
            for i in 1..=k {
                let (a, b) = (&self.coeffs[i], &inv[k - i]);
                if !a.is_zero() && !b.is_zero() {
                    s = &s + &(a * b);
                }
            }
            inv.push(-(&a0_inv * &s));
        }
        Ok(PowerSeries::new(&self.vars, inv, n))
    }

    /// `self^k`, inverting for negative `k`.
    pub fn pow_i(&self, k: i64) -> Result<PowerSeries> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut out = PowerSeries::one(&self.vars, self.order());
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// `f(c·m·T)` for a unit scalar times a monomial: coefficient `i` gets `(c·m)^i`.
    pub fn rescale(&self, factor: &MultiPoly) -> Result<PowerSeries> {
        let mut pw = MultiPoly::one(&self.vars);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &pw);
            pw = &pw * factor;
        }
        Ok(PowerSeries::new(&self.vars, coeffs, self.order()))
    }

    /// `f(−T)`.
    pub fn negate_variable(&self) -> PowerSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        PowerSeries::new(&self.vars, coeffs, self.order())
    }

    pub fn scale(&self, c: &BigInt) -> PowerSeries {
        let coeffs = self.coeffs.iter().map(|p| p.scale(c)).collect();
        PowerSeries::new(&self.vars, coeffs, self.order())
    }

    /// Embeds the polynomial `Σ c_i var^i` (nonnegative powers only).
    pub fn from_poly(p: &MultiPoly, var: usize, order: usize) -> Result<PowerSeries> {
        let mut coeffs = vec![MultiPoly::zero(p.vars()); order + 1];
        for (e, c) in p.coefficients_in(var) {
            if e < 0 {
                return Err(Error::domain("negative power in power series"));
            }
            if (e as usize) <= order {
                coeffs[e as usize] = c;
            }
        }
        Ok(PowerSeries::new(p.vars(), coeffs, order))
    }

    /// The truncated polynomial `Σ c_i var^i`.
    pub fn to_poly(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut e = vec![0; self.vars.len()];
            e[var] = i as i32;
            out = &out + &c.shift(&Monomial::from_exponents(e));
        }
        out
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &PowerSeries) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}
