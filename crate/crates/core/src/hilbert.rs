//! Exact Hilbert-series numerator, dimension, codimension and multiplicity
//! of `S/I` for monomial ideals.
//!
//! The numerator `K(t)` with Hilbert series `K(t)/(1-t)^n` is computed by the
//! pivot recursion coming from the exact sequence
//! `0 -> S/(I:u)(-deg u) -> S/I -> S/(I,u) -> 0`:
//! `K(I) = K(I + (u)) + t^{deg u} * K(I : u)`,
//! with base cases: zero ideal -> 1, pure-power generators `x_i^{e_i}` ->
//! `prod (1 - t^{e_i})`. All arithmetic is arbitrary-precision integer.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Integer polynomial in `t`, coefficient of `t^j` at index `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPolynomial {
    coeffs: Vec<BigInt>,
}

impl KPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KPolynomial { coeffs }
    }

    pub fn one() -> Self {
        KPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &KPolynomial) -> KPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        KPolynomial::from_coeffs(out)
    }

    pub fn mul(&self, other: &KPolynomial) -> KPolynomial {
        if self.is_zero() || other.is_zero() {
            return KPolynomial::from_coeffs(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        KPolynomial::from_coeffs(out)
    }

    /// Multiply by `t^d`.
    pub fn shift(&self, d: u32) -> KPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); d as usize];
        out.extend(self.coeffs.iter().cloned());
        KPolynomial::from_coeffs(out)
    }

    /// `1 - t^d`.
    pub fn one_minus_t_pow(d: u32) -> KPolynomial {
        let mut coeffs = vec![BigInt::zero(); d as usize + 1];
        coeffs[0] = BigInt::one();
        coeffs[d as usize] = -BigInt::one();
        KPolynomial::from_coeffs(coeffs)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division by `(1 - t)`; `None` if `t = 1` is not a root.
    pub fn divide_by_one_minus_t(&self) -> Option<KPolynomial> {
        if !self.eval_at_one().is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        // p(t) = (1 - t) q(t) gives p_{k+1} = q_{k+1} - q_k, so from the top:
        // q_k = q_{k+1} - p_{k+1}.
        let deg = self.coeffs.len() - 1;
        let mut q = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for k in (0..deg).rev() {
            carry = &carry - &self.coeffs[k + 1];
            q[k] = carry.clone();
        }
        Some(KPolynomial::from_coeffs(q))
    }
}

/// Pivot choice for the recursion. Correctness is pivot-independent; the
/// default keeps the recursion shallow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotStrategy {
    /// Variable occurring in the most generators, split to its minimal
    /// occurring power.
    MostFrequentVariable,
    /// First variable of the first non-pure-power generator, minimal power.
    FirstNonPure,
}

/// `K(t)` with Hilbert series of `S/I` equal to `K(t)/(1-t)^n`.
pub fn k_polynomial(ideal: &MonomialIdeal) -> Result<KPolynomial> {
    k_polynomial_with_strategy(ideal, PivotStrategy::MostFrequentVariable)
}

pub fn k_polynomial_with_strategy(
    ideal: &MonomialIdeal,
    strategy: PivotStrategy,
) -> Result<KPolynomial> {
    if ideal.is_unit() {
        return Err(Error::Input(
            "K-polynomial is defined for proper ideals only".into(),
        ));
    }
    let mut memo = HashMap::new();
    Ok(k_rec(ideal, strategy, &mut memo))
}

fn k_rec(
    ideal: &MonomialIdeal,
    strategy: PivotStrategy,
    memo: &mut HashMap<MonomialIdeal, KPolynomial>,
) -> KPolynomial {
    if let Some(k) = memo.get(ideal) {
        return k.clone();
    }
    let result = match choose_pivot(ideal, strategy) {
        None => {
            // All generators are pure powers x_i^{e_i}: K = prod (1 - t^{e_i}).
            let mut k = KPolynomial::one();
            for g in ideal.generators() {
                k = k.mul(&KPolynomial::one_minus_t_pow(g.degree()));
            }
            k
        }
        Some(pivot) => {
            let with = ideal.with_generator(pivot.clone()).expect("same ring");
            let colon = ideal.colon(&pivot).expect("same ring");
            let a = k_rec(&with, strategy, memo);
            let b = k_rec(&colon, strategy, memo);
            a.add(&b.shift(pivot.degree()))
        }
    };
    memo.insert(ideal.clone(), result.clone());
    result
}

/// Pick the pivot `u = x_j^m`, or `None` when every generator is a pure power
/// (base case). The variable is always taken from a non-pure-power generator,
/// which guarantees `u` is outside the ideal and both branches are strictly
/// larger ideals, so the recursion terminates.
fn choose_pivot(ideal: &MonomialIdeal, strategy: PivotStrategy) -> Option<Monomial> {
    let n = ideal.num_vars();
    let mixed: Vec<&Monomial> = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_pure_power())
        .collect();
    if mixed.is_empty() {
        return None;
    }
    let var = match strategy {
        PivotStrategy::MostFrequentVariable => {
            let candidates: Vec<usize> = (1..=n)
                .filter(|&j| mixed.iter().any(|g| g.exponent(j) > 0))
                .collect();
            *candidates
                .iter()
                .max_by_key(|&&j| {
                    ideal
                        .generators()
                        .iter()
                        .filter(|g| g.exponent(j) > 0)
                        .count()
                })
                .expect("mixed generator has nonempty support")
        }
        PivotStrategy::FirstNonPure => mixed[0].support()[0],
    };
    let m = ideal
        .generators()
        .iter()
        .filter(|g| g.exponent(var) > 0)
        .map(|g| g.exponent(var))
        .min()
        .expect("var occurs in some generator");
    let mut exps = vec![0u32; n];
    exps[var - 1] = m;
    Some(Monomial::new(exps).unwrap())
}

/// Codimension `s` = multiplicity of the root `t = 1` in `K(t)`,
/// cross-checked against the minimal vertex cover characterization of height.
/// The zero ideal has codimension 0 by convention.
pub fn codimension(ideal: &MonomialIdeal) -> Result<usize> {
    let from_k = codim_from_k(&k_polynomial(ideal)?);
    let from_cover = codim_vertex_cover(ideal)?;
    if from_k != from_cover {
        return Err(Error::Inconsistency(format!(
            "codimension mismatch: K-polynomial gives {}, vertex cover gives {}",
            from_k, from_cover
        )));
    }
    Ok(from_k)
}

pub fn dimension(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.num_vars() - codimension(ideal)?)
}

fn codim_from_k(k: &KPolynomial) -> usize {
    let mut s = 0;
    let mut current = k.clone();
    while let Some(q) = current.divide_by_one_minus_t() {
        s += 1;
        current = q;
    }
    s
}

/// Height of a monomial ideal = minimum size of a variable set meeting the
/// support of every generator.
fn codim_vertex_cover(ideal: &MonomialIdeal) -> Result<usize> {
    if !ideal.is_proper() {
        return Err(Error::Input("codimension needs a proper ideal".into()));
    }
    if ideal.is_zero() {
        return Ok(0);
    }
    let n = ideal.num_vars();
    let supports: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|g| {
            g.support()
                .iter()
                .fold(0u32, |acc, &v| acc | (1 << (v - 1)))
        })
        .collect();
    for size in 1..=n {
        for cover in subsets_of_size(n, size) {
            if supports.iter().all(|s| s & cover != 0) {
                return Ok(size);
            }
        }
    }
    Err(Error::Inconsistency(
        "no vertex cover found for a nonzero ideal".into(),
    ))
}

fn subsets_of_size(n: usize, size: usize) -> Vec<u32> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == size {
            out.push(mask);
        }
    }
    out
}

/// Multiplicity `e(S/I)`: divide `K(t)` by `(1-t)` exactly `s` times and
/// evaluate at `t = 1`. Always a positive integer for proper ideals.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<BigInt> {
    let s = codimension(ideal)?;
    let k = k_polynomial(ideal)?;
    let mut q = k;
    for step in 0..s {
        q = q.divide_by_one_minus_t().ok_or_else(|| {
            Error::Inconsistency(format!(
                "K(t) not divisible by (1-t) at step {} of {}",
                step + 1,
                s
            ))
        })?;
    }
    let e = q.eval_at_one();
    if !e.is_positive() {
        return Err(Error::Inconsistency(format!(
            "multiplicity {} is not positive",
            e
        )));
    }
    Ok(e)
}
