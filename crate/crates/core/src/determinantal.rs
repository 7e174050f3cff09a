//! Degree-matrix calculus for ideals of maximal minors: the u-array, the
//! Herzog-Trung multiplicity sum, Eagon-Northcott shifts, the upper/lower
//! bound inequalities, the purity characterization, and the index-reflection
//! duality.
//!
//! Everything consumes only the u-array `u_{ij} = d_{j, i+j-1}`,
//! `i = 1..r+1`, `j = 1..m`; when global degree sequences `(a, b)` exist the
//! shift formulas are computed a second way and must agree.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Degree data of a homogeneous `m x n` matrix of maximal minors,
/// `r = n - m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMatrix {
    m: usize,
    r: usize,
    /// `r + 1` rows by `m` columns, 0-based `u[i][j] = u_{i+1, j+1}`.
    u: Vec<Vec<u64>>,
    /// Present when built from degree sequences `(a, b)`.
    ab: Option<(Vec<i64>, Vec<i64>)>,
    /// True for arrays produced by [`dualize`](Self::dualize): the
    /// monotonicity conventions hold with reversed inequalities.
    reversed: bool,
}

impl DegreeMatrix {
    /// Build from a row-major u-array, validating positivity and the two
    /// monotonicity conventions (decreasing down columns; `u_{ij} >=
    /// u_{i+1,j-1}`).
    pub fn from_u(u: Vec<Vec<u64>>) -> Result<Self> {
        Self::from_u_oriented(u, false)
    }

    fn from_u_oriented(u: Vec<Vec<u64>>, reversed: bool) -> Result<Self> {
        if u.is_empty() || u[0].is_empty() {
            return Err(Error::Input("u-array must be nonempty".into()));
        }
        let m = u[0].len();
        if u.iter().any(|row| row.len() != m) {
            return Err(Error::Input("u-array rows have unequal lengths".into()));
        }
        let r = u.len() - 1;
        for (i, row) in u.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 {
                    return Err(Error::Input(format!(
                        "entry u_{{{},{}}} must be >= 1",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let holds = |x: u64, y: u64| if reversed { x <= y } else { x >= y };
        for i in 0..r {
            for (j, &v) in u[i].iter().enumerate() {
                if !holds(v, u[i + 1][j]) {
                    return Err(Error::Input(format!(
                        "column monotonicity fails at u_{{{},{}}}",
                        i + 2,
                        j + 1
                    )));
                }
            }
        }
        for i in 0..r {
            for j in 1..m {
                if !holds(u[i][j], u[i + 1][j - 1]) {
                    return Err(Error::Input(format!(
                        "skew monotonicity fails at u_{{{},{}}}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(DegreeMatrix {
            m,
            r,
            u,
            ab: None,
            reversed,
        })
    }

    /// Build from sorted degree sequences with `d_{ij} = b_i - a_j`.
    pub fn from_degree_sequences(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.windows(2).any(|w| w[0] > w[1]) || b.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Input(
                "degree sequences must be sorted ascending".into(),
            ));
        }
        let n = a.len();
        let m = b.len();
        if m == 0 || m > n {
            return Err(Error::Input("need 1 <= m <= n".into()));
        }
        let r = n - m;
        let mut u = vec![vec![0u64; m]; r + 1];
        for i in 0..=r {
            for j in 0..m {
                let d = b[j] - a[i + j];
                if d <= 0 {
                    return Err(Error::Input(format!(
                        "non-positive entry u_{{{},{}}} = {} (all entry degrees must be >= 1)",
                        i + 1,
                        j + 1,
                        d
                    )));
                }
                u[i][j] = d as u64;
            }
        }
        let mut dm = Self::from_u(u)?;
        dm.ab = Some((a, b));
        Ok(dm)
    }

    /// The `m x (m+r)` matrix whose `i`-th main diagonal is filled with a
    /// form of degree `f_degrees[i-1]`: the degree data of `I^m` for `I`
    /// generated by a regular sequence. Degrees must be sorted non-increasing
    /// so the monotonicity conventions hold.
    pub fn power_matrix(f_degrees: &[u64], m: usize) -> Result<Self> {
        if f_degrees.is_empty() || m == 0 {
            return Err(Error::Input("need r+1 >= 1 degrees and m >= 1".into()));
        }
        if f_degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(
                "degrees must be sorted non-increasing (sort them first)".into(),
            ));
        }
        let u = f_degrees.iter().map(|&d| vec![d; m]).collect();
        Self::from_u(u)
    }

    pub fn rows(&self) -> usize {
        self.r + 1
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    pub fn u(&self) -> &[Vec<u64>] {
        &self.u
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub fn all_equal(&self) -> bool {
        let first = self.u[0][0];
        self.u.iter().all(|row| row.iter().all(|&v| v == first))
    }

    /// Herzog-Trung multiplicity: sum over all weakly increasing tuples
    /// `1 <= j_1 <= ... <= j_{r+1} <= m` of `prod_i u_{i, j_i}`.
    pub fn ht_multiplicity(&self) -> BigInt {
        fn rec(u: &[Vec<u64>], depth: usize, min_j: usize, acc: &BigInt, total: &mut BigInt) {
            if depth == u.len() {
                *total += acc;
                return;
            }
            for j in min_j..u[depth].len() {
                let next = acc * u[depth][j];
                rec(u, depth + 1, j, &next, total);
            }
        }
        let mut total = BigInt::zero();
        rec(&self.u, 0, 0, &BigInt::one(), &mut total);
        total
    }

    /// Eagon-Northcott shifts `(M_1..M_{r+1}, m_1..m_{r+1})`:
    /// `M_{k+1} = sum_{j<m} u_{1j} + sum_{i<=k+1} u_{im}` and its dual image
    /// `m_{k+1} = sum_{i>=r+1-k} u_{i1} + sum_{j>=2} u_{r+1,j}`.
    /// When `(a, b)` are available the `-a+b` forms are computed too and
    /// must agree exactly.
    pub fn en_shifts(&self) -> Result<(Vec<u64>, Vec<u64>)> {
        let (m, r, u) = (self.m, self.r, &self.u);
        let top_row_prefix: u64 = u[0][..m - 1].iter().sum();
        let bottom_row_suffix: u64 = u[r][1..].iter().sum();
        let mut big = Vec::with_capacity(r + 1);
        let mut small = Vec::with_capacity(r + 1);
        for k in 0..=r {
            let last_col: u64 = (0..=k).map(|i| u[i][m - 1]).sum();
            big.push(top_row_prefix + last_col);
            let first_col: u64 = (r - k..=r).map(|i| u[i][0]).sum();
            small.push(first_col + bottom_row_suffix);
        }
        if let Some((a, b)) = &self.ab {
            let n = a.len();
            let sum_a: i64 = a.iter().sum();
            let sum_b: i64 = b.iter().sum();
            for k in 0..=r {
                let big_ab = -sum_a + sum_b + a[m + k..n].iter().sum::<i64>()
                    + k as i64 * b[m - 1];
                let small_ab = -sum_a + sum_b + a[..r - k].iter().sum::<i64>()
                    + k as i64 * b[0];
                if big_ab != big[k] as i64 || small_ab != small[k] as i64 {
                    return Err(Error::Inconsistency(format!(
                        "EN shift forms disagree at k = {}: u-form ({}, {}), (a,b)-form ({}, {})",
                        k, big[k], small[k], big_ab, small_ab
                    )));
                }
            }
        }
        Ok((big, small))
    }

    /// Reflect through both indices: `u_{ij} -> u_{r+2-i, m+1-j}`. An
    /// involution that reverses the monotonicity conventions and swaps the
    /// roles of the upper and lower bound.
    pub fn dualize(&self) -> Result<DegreeMatrix> {
        let (m, r) = (self.m, self.r);
        let u: Vec<Vec<u64>> = (0..=r)
            .map(|i| (0..m).map(|j| self.u[r - i][m - 1 - j]).collect())
            .collect();
        Self::from_u_oriented(u, !self.reversed)
    }
}

/// Verdict of the shift-product bound inequalities for one degree matrix.
#[derive(Debug, Clone, Serialize)]
pub struct DetReport {
    pub m: usize,
    pub r: usize,
    pub u: Vec<Vec<u64>>,
    pub e: String,
    pub big_m: Vec<u64>,
    pub small_m: Vec<u64>,
    pub upper_holds: bool,
    pub lower_holds: bool,
    pub tight_upper: bool,
    pub tight_lower: bool,
    pub pure: bool,
}

/// Evaluate `(r+1)! e` against both shift products. Tightness on either side
/// must coincide with all entries being equal; a mismatch is a bug signal.
pub fn check_bounds(d: &DegreeMatrix) -> Result<DetReport> {
    if d.is_reversed() {
        return Err(Error::Precondition(
            "check_bounds expects the standard orientation".into(),
        ));
    }
    let e = d.ht_multiplicity();
    let (big, small) = d.en_shifts()?;
    let fact_e = crate::bounds::factorial(d.rows()) * &e;
    let prod_big: BigInt = big.iter().map(|&v| BigInt::from(v)).product();
    let prod_small: BigInt = small.iter().map(|&v| BigInt::from(v)).product();
    let upper_holds = fact_e <= prod_big;
    let lower_holds = fact_e >= prod_small;
    let tight_upper = fact_e == prod_big;
    let tight_lower = fact_e == prod_small;
    let pure = d.all_equal();
    // For r = 0 both bounds collapse to the row sum and are always tight, so
    // the purity equivalence only applies from r >= 1 on.
    if d.r >= 1 && ((tight_upper != pure) || (tight_lower != pure)) {
        return Err(Error::Inconsistency(format!(
            "tightness/purity mismatch for u = {:?}: tight_upper = {}, tight_lower = {}, all u equal = {}",
            d.u(),
            tight_upper,
            tight_lower,
            pure
        )));
    }
    Ok(DetReport {
        m: d.cols(),
        r: d.r,
        u: d.u().to_vec(),
        e: e.to_string(),
        big_m: big,
        small_m: small,
        upper_holds,
        lower_holds,
        tight_upper,
        tight_lower,
        pure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_sequences_linear() {
        let d = DegreeMatrix::from_degree_sequences(vec![0, 0, 0], vec![1, 1]).unwrap();
        assert_eq!(d.cols(), 2);
        assert_eq!(d.rows(), 2);
        assert!(d.all_equal());
        assert_eq!(d.u()[0], vec![1, 1]);
    }

    #[test]
    fn from_sequences_index_arithmetic() {
        // a = (0,0,1), b = (2,3): u_{11}, u_{12} = d_{11}, d_{22} = 2, 3;
        // u_{21}, u_{22} = d_{12}, d_{23} = 2, 2.
        let d = DegreeMatrix::from_degree_sequences(vec![0, 0, 1], vec![2, 3]).unwrap();
        assert_eq!(d.u(), &[vec![2, 3], vec![2, 2]]);
    }

    #[test]
    fn from_sequences_rejects_unsorted() {
        assert!(DegreeMatrix::from_degree_sequences(vec![1, 0], vec![2, 2]).is_err());
    }

    #[test]
    fn from_sequences_rejects_nonpositive_entry() {
        assert!(DegreeMatrix::from_degree_sequences(vec![0, 0, 2], vec![1, 1]).is_err());
    }

    #[test]
    fn power_matrix_shapes() {
        let d = DegreeMatrix::power_matrix(&[1, 1], 2).unwrap();
        assert!(d.all_equal());

        let d2 = DegreeMatrix::power_matrix(&[3, 2], 2).unwrap();
        assert_eq!(d2.u(), &[vec![3, 3], vec![2, 2]]);

        let h = DegreeMatrix::power_matrix(&[5], 1).unwrap();
        assert_eq!(h.u(), &[vec![5]]);

        assert!(DegreeMatrix::power_matrix(&[2, 3], 2).is_err());
    }

    #[test]
    fn ht_multiplicity_cases() {
        // r = 0: single row, e = sum of the row
        let hyper = DegreeMatrix::from_u(vec![vec![2, 3, 4]]).unwrap();
        assert_eq!(hyper.ht_multiplicity(), BigInt::from(9));

        // m = 1: complete intersection, e = product of the column
        let ci = DegreeMatrix::from_u(vec![vec![3], vec![2]]).unwrap();
        assert_eq!(ci.ht_multiplicity(), BigInt::from(6));

        // (x,y)^2 as maximal minors: e = 3
        let sq = DegreeMatrix::power_matrix(&[1, 1], 2).unwrap();
        assert_eq!(sq.ht_multiplicity(), BigInt::from(3));

        // CI of degrees (3,2) squared: 3 weakly increasing tuples, each 3*2
        let p = DegreeMatrix::power_matrix(&[3, 2], 2).unwrap();
        assert_eq!(p.ht_multiplicity(), BigInt::from(18));
    }

    #[test]
    fn en_shifts_cases() {
        let sq = DegreeMatrix::power_matrix(&[1, 1], 2).unwrap();
        assert_eq!(sq.en_shifts().unwrap(), (vec![2, 3], vec![2, 3]));

        // constant u = c is pure: M_{k+1} = m_{k+1} = (m-1)c + (k+1)c
        let c = DegreeMatrix::from_u(vec![vec![2, 2, 2], vec![2, 2, 2]]).unwrap();
        assert_eq!(c.en_shifts().unwrap(), (vec![6, 8], vec![6, 8]));

        // hand evaluation with the (a,b) cross-check active
        let d = DegreeMatrix::from_degree_sequences(vec![0, 0, 1], vec![2, 3]).unwrap();
        assert_eq!(d.en_shifts().unwrap(), (vec![5, 7], vec![4, 6]));
    }

    #[test]
    fn check_bounds_cases() {
        let sq = DegreeMatrix::power_matrix(&[1, 1], 2).unwrap();
        let r = check_bounds(&sq).unwrap();
        assert!(r.upper_holds && r.lower_holds && r.tight_upper && r.tight_lower && r.pure);
        assert_eq!(r.e, "3");

        let p = DegreeMatrix::power_matrix(&[3, 2], 2).unwrap();
        let rp = check_bounds(&p).unwrap();
        assert_eq!(rp.big_m, vec![6, 8]);
        assert!(rp.upper_holds && rp.lower_holds);
        assert!(!rp.tight_upper && !rp.pure);

        // r = 0: both bounds collapse to the row sum, so tightness holds
        // even for a mixed row.
        let hyper = DegreeMatrix::from_u(vec![vec![2, 3]]).unwrap();
        let rh = check_bounds(&hyper).unwrap();
        assert!(rh.tight_upper && rh.tight_lower && !rh.pure);
    }

    #[test]
    fn dualize_involution() {
        let d = DegreeMatrix::from_degree_sequences(vec![0, 0, 1], vec![2, 3]).unwrap();
        let dd = d.dualize().unwrap();
        assert!(dd.is_reversed());
        let back = dd.dualize().unwrap();
        assert_eq!(back.u(), d.u());
        assert!(!back.is_reversed());

        let c = DegreeMatrix::power_matrix(&[2, 2], 3).unwrap();
        assert_eq!(c.dualize().unwrap().u(), c.u());
    }

    #[test]
    fn dual_swaps_shift_roles() {
        let d = DegreeMatrix::from_degree_sequences(vec![0, 0, 1], vec![2, 3]).unwrap();
        let (big, small) = d.en_shifts().unwrap();
        let (dual_big, dual_small) = d.dualize().unwrap().en_shifts().unwrap();
        assert_eq!(dual_big, small);
        assert_eq!(dual_small, big);
        assert_eq!(d.dualize().unwrap().ht_multiplicity(), d.ht_multiplicity());
    }
}
