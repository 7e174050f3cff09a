//! Exact arithmetic on monomials and monomial ideals.
//!
//! Variables are indexed `1..=n`; the "last variable" always means index `n`.
//! Ideals are kept in canonical form: an inclusion-minimal generating set,
//! sorted graded-lexicographically (degree first, then lex with `x1 > x2 > ...`).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial in `n` variables, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Input("monomial needs at least one variable".into()));
        }
        Ok(Monomial { exponents })
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// The variable `x_i` (1-based) in `n` variables.
    pub fn var(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index out of range");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial { exponents: e }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| (*a).max(*b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| (*a).min(*b))
                .collect(),
        }
    }

    /// `self / gcd(self, other)` — the colon quotient of a generator.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Variables (1-based) with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `m(u)`: the largest `i` with `x_i | u`. Undefined for `u = 1`.
    pub fn max_index(&self) -> Result<usize> {
        self.exponents
            .iter()
            .rposition(|&e| e > 0)
            .map(|i| i + 1)
            .ok_or_else(|| Error::Input("m(u) is undefined for u = 1".into()))
    }

    /// The exchange move `x_i * u / x_j`. Requires `x_j | u`.
    pub fn exchange(&self, i: usize, j: usize) -> Monomial {
        assert!(self.exponents[j - 1] > 0, "x_j must divide u");
        let mut e = self.exponents.clone();
        e[j - 1] -= 1;
        e[i - 1] += 1;
        Monomial { exponents: e }
    }

    /// True iff the monomial is a power of a single variable (or 1).
    pub fn is_pure_power(&self) -> bool {
        self.exponents.iter().filter(|&&e| e > 0).count() <= 1
    }
}

/// Graded lexicographic: degree first, then lex with `x1 > x2 > ... > xn`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal in canonical form.
///
/// The zero ideal has an empty generator set; the unit ideal is generated by
/// the single monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize a generating set: drop every monomial divisible by another,
    /// sort canonically.
    pub fn minimalize(gens: Vec<Monomial>, n: usize) -> Result<Self> {
        for g in &gens {
            if g.num_vars() != n {
                return Err(Error::Input(format!(
                    "monomial {} has {} exponents, expected {}",
                    g,
                    g.num_vars(),
                    n
                )));
            }
        }
        let mut distinct = gens;
        distinct.sort();
        distinct.dedup();
        let kept: Vec<Monomial> = distinct
            .iter()
            .filter(|g| !distinct.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        Ok(MonomialIdeal { n, gens: kept })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper means not the unit ideal (the zero ideal is proper).
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Membership: divisible by some generator.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Input(format!(
                "variable counts differ: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::minimalize(gens, self.n)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h));
            }
        }
        MonomialIdeal::minimalize(gens, self.n)
    }

    /// `I^k`. By convention `power(I, 0)` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Ok(MonomialIdeal::unit(self.n));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : u)`, computed as the minimalization of `{ g / gcd(g, u) }`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        if u.num_vars() != self.n {
            return Err(Error::Input("colon monomial has wrong variable count".into()));
        }
        let gens = self.gens.iter().map(|g| g.quotient_by(u)).collect();
        MonomialIdeal::minimalize(gens, self.n)
    }

    /// Add a single monomial generator.
    pub fn with_generator(&self, u: Monomial) -> Result<MonomialIdeal> {
        let mut gens = self.gens.clone();
        gens.push(u);
        MonomialIdeal::minimalize(gens, self.n)
    }

    /// Stable: for every generator `u` and `i < m(u)`, `x_i * u / x_{m(u)}`
    /// lies in `I`. Testing generators suffices: if the exchange property
    /// holds on `G(I)` it holds on all monomials of `I` (standard reduction).
    pub fn is_stable(&self) -> Result<bool> {
        if !self.is_proper() {
            return Err(Error::Input("stability is defined for proper ideals".into()));
        }
        for u in &self.gens {
            let m = u.max_index()?;
            for i in 1..m {
                if !self.contains(&u.exchange(i, m)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Strongly stable: for every generator `u`, every `j` with `x_j | u` and
    /// every `i < j`, `x_i * u / x_j` lies in `I`. Generators suffice, as for
    /// [`is_stable`](Self::is_stable).
    pub fn is_strongly_stable(&self) -> Result<bool> {
        if !self.is_proper() {
            return Err(Error::Input("stability is defined for proper ideals".into()));
        }
        for u in &self.gens {
            for j in u.support() {
                for i in 1..j {
                    if !self.contains(&u.exchange(i, j)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Smallest strongly stable ideal containing the given monomials:
    /// close the generator set under all exchange moves, then minimalize.
    pub fn borel_closure(gens: Vec<Monomial>, n: usize) -> Result<MonomialIdeal> {
        if gens.is_empty() {
            return Err(Error::Input("borel_closure needs a nonempty set".into()));
        }
        let mut set: Vec<Monomial> = Vec::new();
        let mut queue = gens;
        while let Some(u) = queue.pop() {
            if u.num_vars() != n {
                return Err(Error::Input("mismatched exponent length".into()));
            }
            if set.contains(&u) {
                continue;
            }
            for j in u.support() {
                for i in 1..j {
                    queue.push(u.exchange(i, j));
                }
            }
            set.push(u);
        }
        MonomialIdeal::minimalize(set, n)
    }

    /// `I_{<j>}`: the ideal generated by all degree-`j` monomials of `I`.
    pub fn graded_component_ideal(&self, j: u32) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for u in monomials_of_degree(self.n, j) {
            if self.contains(&u) {
                gens.push(u);
            }
        }
        MonomialIdeal::minimalize(gens, self.n)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// All monomials of total degree `d` in `n` variables, in a deterministic order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d);
    fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(Monomial::new(current.clone()).unwrap());
            current[pos] = 0;
            return;
        }
        for e in (0..=remaining).rev() {
            current[pos] = e;
            fill(out, current, pos + 1, remaining - e);
        }
        current[pos] = 0;
    }
    out
}

/// Parse the ideal text grammar: comma-separated monomials, each a
/// `*`-separated list of `x<i>` or `x<i>^<e>` factors; `1` is the constant
/// monomial. An empty string parses to the zero ideal.
pub fn parse_ideal(text: &str, n: usize) -> Result<MonomialIdeal> {
    let text = text.trim();
    if text.is_empty() || text == "0" {
        return Ok(MonomialIdeal::zero(n));
    }
    let mut gens = Vec::new();
    let mut offset = 0usize;
    for part in text.split(',') {
        gens.push(parse_monomial(part, n, offset)?);
        offset += part.len() + 1;
    }
    MonomialIdeal::minimalize(gens, n)
}

fn parse_monomial(part: &str, n: usize, offset: usize) -> Result<Monomial> {
    let trimmed = part.trim();
    if trimmed.is_empty() {
        return Err(Error::Input(format!(
            "empty monomial at position {}",
            offset
        )));
    }
    if trimmed == "1" {
        return Ok(Monomial::one(n));
    }
    let mut exps = vec![0u32; n];
    for factor in trimmed.split('*') {
        let f = factor.trim();
        let rest = f.strip_prefix('x').ok_or_else(|| {
            Error::Input(format!(
                "expected `x<i>` or `x<i>^<e>` near position {}: `{}`",
                offset, f
            ))
        })?;
        let (idx_str, exp_str) = match rest.split_once('^') {
            Some((i, e)) => (i, Some(e)),
            None => (rest, None),
        };
        let i: usize = idx_str.trim().parse().map_err(|_| {
            Error::Input(format!(
                "bad variable index near position {}: `{}`",
                offset, f
            ))
        })?;
        if i == 0 || i > n {
            return Err(Error::Input(format!(
                "variable x{} out of range 1..={} near position {}",
                i, n, offset
            )));
        }
        let e: u32 = match exp_str {
            Some(s) => s.trim().parse().map_err(|_| {
                Error::Input(format!("bad exponent near position {}: `{}`", offset, f))
            })?,
            None => 1,
        };
        exps[i - 1] += e;
    }
    Monomial::new(exps)
}
