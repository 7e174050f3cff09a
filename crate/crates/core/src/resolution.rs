//! Graded Betti tables of `S/I` by two independent routes, and the shift
//! data extracted from them.
//!
//! The oracle route is a Hochster-type brute force: for every multidegree `b`
//! in the lcm lattice of the generators, `beta_{i,b}(S/I)` (for `i >= 1`)
//! equals the rank of reduced `(i-2)`-homology of the upper Koszul simplicial
//! complex `K^b = { squarefree W subset supp(b) : x^b / x^W in I }`, with
//! ranks taken over the rationals (characteristic 0). The second route is the
//! Eliahou-Kervaire formula, valid for stable ideals.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::hilbert::{self, KPolynomial};
use crate::monomial::{Monomial, MonomialIdeal};

/// Graded Betti numbers of `S/I`: `(i, j) -> beta_{i,j}`, all entries
/// strictly positive, with the single entry `beta_{0,0} = 1` at `i = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    fn from_entries(n: usize, entries: BTreeMap<(usize, u32), u64>) -> Result<Self> {
        let table = BettiTable { n, entries };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        if self.entries.get(&(0, 0)) != Some(&1) {
            return Err(Error::Inconsistency("missing beta_{0,0} = 1".into()));
        }
        for (&(i, j), &b) in &self.entries {
            if i == 0 && j != 0 {
                return Err(Error::Inconsistency(format!(
                    "unexpected entry beta_{{0,{}}}",
                    j
                )));
            }
            if b == 0 {
                return Err(Error::Inconsistency(format!(
                    "zero entry stored at ({}, {})",
                    i, j
                )));
            }
        }
        // Minimality forces shifts to grow: m_{i+1} >= m_i + 1.
        let s = self.shifts();
        for i in 1..s.projdim {
            if s.small_m[i] < s.small_m[i - 1] + 1 {
                return Err(Error::Inconsistency(format!(
                    "minimality violated: m_{} = {} < m_{} + 1",
                    i + 1,
                    s.small_m[i],
                    i
                )));
            }
        }
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Shifts in homological degree `i`, with multiplicity.
    pub fn shifts_at(&self, i: usize) -> Vec<(u32, u64)> {
        self.entries
            .iter()
            .filter(|(&(h, _), _)| h == i)
            .map(|(&(_, j), &b)| (j, b))
            .collect()
    }

    pub fn shifts(&self) -> ShiftSummary {
        let p = self.projdim();
        let mut big_m = Vec::with_capacity(p);
        let mut small_m = Vec::with_capacity(p);
        for i in 1..=p {
            let js: Vec<u32> = self
                .entries
                .keys()
                .filter(|&&(h, _)| h == i)
                .map(|&(_, j)| j)
                .collect();
            big_m.push(*js.iter().max().expect("no gap in homological degrees"));
            small_m.push(*js.iter().min().expect("no gap in homological degrees"));
        }
        let reg_i: Vec<i64> = big_m
            .iter()
            .enumerate()
            .map(|(idx, &m)| m as i64 - (idx as i64 + 1))
            .collect();
        let reg = reg_i.iter().copied().max().unwrap_or(0);
        ShiftSummary {
            big_m,
            small_m,
            reg_i,
            reg,
            projdim: p,
        }
    }

    /// Pure: in each homological degree all shifts coincide.
    pub fn is_pure(&self) -> bool {
        let s = self.shifts();
        s.big_m == s.small_m
    }

    /// Quasi-pure: `m_i >= M_{i-1}` for all `i >= 2`.
    pub fn is_quasi_pure(&self) -> bool {
        let s = self.shifts();
        (1..s.projdim).all(|i| s.small_m[i] >= s.big_m[i - 1])
    }

    /// `sum_i (-1)^i sum_j beta_{i,j} t^j`, for the Euler-characteristic
    /// identity with the K-polynomial.
    pub fn alternating_sum(&self) -> KPolynomial {
        let max_j = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); max_j as usize + 1];
        for (&(i, j), &b) in &self.entries {
            let term = BigInt::from(b);
            if i % 2 == 0 {
                coeffs[j as usize] += term;
            } else {
                coeffs[j as usize] -= term;
            }
        }
        KPolynomial::from_coeffs(coeffs)
    }
}

/// `M_i`, `m_i`, `reg_i = M_i - i` for `i = 1..=p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSummary {
    pub big_m: Vec<u32>,
    pub small_m: Vec<u32>,
    pub reg_i: Vec<i64>,
    pub reg: i64,
    pub projdim: usize,
}

/// Betti table by the homology oracle. Independent of generator order.
pub fn betti_oracle(ideal: &MonomialIdeal, caps: &Caps) -> Result<BettiTable> {
    if !ideal.is_proper() || ideal.is_zero() {
        return Err(Error::Input(
            "betti_oracle needs a proper nonzero ideal".into(),
        ));
    }
    let lattice = lcm_lattice(ideal, caps)?;
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    for b in &lattice {
        let j = b.degree();
        for (i, rank) in complex_homology_ranks(ideal, b, caps)? {
            if rank > 0 {
                *entries.entry((i, j)).or_insert(0) += rank;
            }
        }
    }
    BettiTable::from_entries(ideal.num_vars(), entries)
}

/// All distinct lcms of nonempty generator subsets: the closure of the
/// generator set under pairwise joins with generators.
fn lcm_lattice(ideal: &MonomialIdeal, caps: &Caps) -> Result<Vec<Monomial>> {
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for b in &frontier {
            for g in gens {
                let join = b.lcm(g);
                if seen.insert(join.clone()) {
                    next.push(join);
                }
            }
        }
        if seen.len() > caps.max_lcm_lattice {
            return Err(Error::Resource {
                cap: "max_lcm_lattice",
                limit: caps.max_lcm_lattice,
                needed: seen.len(),
            });
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// Reduced homology ranks of the upper Koszul complex at multidegree `b`,
/// reported as pairs `(i, beta_{i,b})` with `i` the homological degree on the
/// `S/I` side: `beta_{i,b} = rank H~_{i-2}(K^b)`.
fn complex_homology_ranks(
    ideal: &MonomialIdeal,
    b: &Monomial,
    caps: &Caps,
) -> Result<Vec<(usize, u64)>> {
    let support = b.support();
    let v = support.len();
    // faces_by_card[c] = masks (into `support`) of the cardinality-c faces.
    let mut faces_by_card: Vec<Vec<u32>> = vec![Vec::new(); v + 1];
    for mask in 0u32..(1 << v) {
        let mut quotient = b.clone();
        for (pos, &var) in support.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                quotient = quotient.quotient_by(&Monomial::var(var, ideal.num_vars()));
            }
        }
        if ideal.contains(&quotient) {
            faces_by_card[mask.count_ones() as usize].push(mask);
        }
    }
    debug_assert!(faces_by_card[0].len() == 1, "x^b must lie in I");

    // r[c] = rank of the boundary map from cardinality-c to cardinality-(c-1)
    // faces (r[0] = 0; the card-1 -> card-0 map sends every vertex to the
    // empty face).
    let mut r = vec![0u64; v + 2];
    for c in 1..=v {
        let rows = faces_by_card[c - 1].len();
        let cols = faces_by_card[c].len();
        if rows == 0 || cols == 0 {
            continue;
        }
        if rows.max(cols) > caps.max_matrix_dim {
            return Err(Error::Resource {
                cap: "max_matrix_dim",
                limit: caps.max_matrix_dim,
                needed: rows.max(cols),
            });
        }
        let row_index: BTreeMap<u32, usize> = faces_by_card[c - 1]
            .iter()
            .enumerate()
            .map(|(idx, &m)| (m, idx))
            .collect();
        let mut matrix = vec![vec![BigInt::zero(); cols]; rows];
        for (col, &face) in faces_by_card[c].iter().enumerate() {
            let mut sign = 1i64;
            for pos in 0..v {
                if face & (1 << pos) != 0 {
                    let sub = face & !(1 << pos);
                    if let Some(&row) = row_index.get(&sub) {
                        matrix[row][col] = BigInt::from(sign);
                    }
                    sign = -sign;
                }
            }
        }
        r[c] = rank_bareiss(matrix);
    }

    // H~_{c-1} has rank N_c - r_c - r_{c+1}; it contributes at homological
    // degree i = c + 1 of S/I.
    let mut out = Vec::new();
    for c in 0..=v {
        let n_c = faces_by_card[c].len() as u64;
        let rank = n_c - r[c] - r[c + 1];
        if rank > 0 {
            out.push((c + 1, rank));
        }
    }
    Ok(out)
}

/// Rank of an integer matrix over the rationals, by fraction-free Gaussian
/// (Bareiss) elimination.
pub(crate) fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> u64 {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0u64;
    let mut prev = BigInt::from(1);
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, found);
        for r in pivot_row + 1..rows {
            for c in col + 1..cols {
                let val = (&m[pivot_row][col] * &m[r][c] - &m[r][col] * &m[pivot_row][c]) / &prev;
                m[r][c] = val;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[pivot_row][col].clone();
        pivot_row += 1;
        rank += 1;
    }
    rank
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Betti table of a stable ideal by the Eliahou-Kervaire formula: each
/// generator `u` of degree `j` contributes `C(m(u)-1, i)` to
/// `beta_{i+1, i+j}(S/I)` for `i = 0..m(u)-1`.
pub fn betti_ek(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_proper() || ideal.is_zero() {
        return Err(Error::Input("betti_ek needs a proper nonzero ideal".into()));
    }
    if !ideal.is_stable()? {
        return Err(Error::Precondition(
            "betti_ek requires a stable ideal".into(),
        ));
    }
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    for u in ideal.generators() {
        let j = u.degree();
        let mu = u.max_index()? as u64;
        for i in 0..mu {
            let b = binomial(mu - 1, i);
            if b > 0 {
                *entries.entry((i as usize + 1, i as u32 + j)).or_insert(0) += b;
            }
        }
    }
    BettiTable::from_entries(ideal.num_vars(), entries)
}

/// Betti table by the cheapest exact route: Eliahou-Kervaire when the ideal
/// is stable, the homology oracle otherwise.
pub fn betti_table(ideal: &MonomialIdeal, caps: &Caps) -> Result<BettiTable> {
    if !ideal.is_proper() || ideal.is_zero() {
        return Err(Error::Input(
            "betti table needs a proper nonzero ideal".into(),
        ));
    }
    if ideal.is_stable()? {
        betti_ek(ideal)
    } else {
        betti_oracle(ideal, caps)
    }
}

/// Graded Auslander-Buchsbaum: Cohen-Macaulay iff projdim(S/I) = codim(I).
pub fn is_cohen_macaulay(ideal: &MonomialIdeal, caps: &Caps) -> Result<bool> {
    let table = betti_table(ideal, caps)?;
    let s = hilbert::codimension(ideal)?;
    Ok(table.projdim() == s)
}

/// Linear resolution: all generators in one degree `d` and every shift in
/// homological degree `i` equal to `d + i - 1`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, caps: &Caps) -> Result<bool> {
    if !ideal.is_proper() || ideal.is_zero() {
        return Err(Error::Input(
            "linearity check needs a proper nonzero ideal".into(),
        ));
    }
    let d = ideal.min_gen_degree().unwrap();
    if ideal.max_gen_degree().unwrap() != d {
        return Ok(false);
    }
    let table = betti_table(ideal, caps)?;
    let s = table.shifts();
    Ok((1..=s.projdim).all(|i| {
        s.big_m[i - 1] as u64 == d as u64 + i as u64 - 1
            && s.small_m[i - 1] as u64 == d as u64 + i as u64 - 1
    }))
}

/// Componentwise linear: `I_<j>` has a linear resolution for every `j` from
/// the minimal generator degree up to `max(max generator degree, reg(I))`.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, caps: &Caps) -> Result<bool> {
    if !ideal.is_proper() || ideal.is_zero() {
        return Err(Error::Input(
            "componentwise check needs a proper nonzero ideal".into(),
        ));
    }
    let table = betti_table(ideal, caps)?;
    let reg_ideal = table.shifts().reg + 1; // reg(I) = reg(S/I) + 1
    let lo = ideal.min_gen_degree().unwrap();
    let hi = (ideal.max_gen_degree().unwrap() as i64).max(reg_ideal) as u32;
    if (hi - lo + 1) as usize > caps.max_components {
        return Err(Error::Resource {
            cap: "max_components",
            limit: caps.max_components,
            needed: (hi - lo + 1) as usize,
        });
    }
    for j in lo..=hi {
        let component = ideal.graded_component_ideal(j)?;
        if component.is_zero() {
            continue;
        }
        if !has_linear_resolution(&component, caps)? {
            return Ok(false);
        }
    }
    Ok(true)
}
