//! Empirics for the powers `I^k` of a monomial ideal: the shift/regularity
//! rows, eventual linearity of the partial regularities `reg_i(I^k)` in `k`,
//! equality of their slopes, the asymptotic multiplicity `e(I; S)` extracted
//! by finite differences, and the limiting bound ratio.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::bounds::RatioField;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::hilbert;
use crate::monomial::MonomialIdeal;
use crate::regseq::factorial_u128;
use crate::resolution;

/// One row of a power scan: invariants of `I^k`.
#[derive(Debug, Clone, Serialize)]
pub struct PowerRow {
    pub k: u32,
    pub e: String,
    #[serde(skip)]
    pub e_value: BigInt,
    /// Maximal shifts `M_1, ..., M_p` of `S/I^k`.
    pub big_m: Vec<u32>,
    /// Ideal-side partial regularities `reg_i(I^k) = M_{i+1}(S/I^k) - i`
    /// for `i = 0..s-1`; `reg_0` is the maximal generator degree.
    pub reg: Vec<i64>,
    /// `s! e_k / prod_{i<=s} M_i(S/I^k)`.
    pub ratio: RatioField,
    #[serde(skip)]
    pub ratio_value: BigRational,
}

/// Scan of `I^k` for `k = 1..=kmax`.
#[derive(Debug, Clone, Serialize)]
pub struct PowerScan {
    pub ideal: String,
    pub n: usize,
    /// Codimension, constant across powers (checked).
    pub s: usize,
    pub rows: Vec<PowerRow>,
    /// True when a resource cap stopped the scan before `kmax`.
    pub truncated: bool,
}

/// Compute the invariant rows of `I, I^2, ..., I^kmax`. The codimension must
/// stay constant; a change is reported as an inconsistency. Hitting a
/// resource cap truncates the scan instead of failing it.
pub fn power_scan(ideal: &MonomialIdeal, kmax: u32, caps: &Caps) -> Result<PowerScan> {
    if !ideal.is_proper() || ideal.is_zero() {
        return Err(Error::Input("power scan needs a proper nonzero ideal".into()));
    }
    if kmax == 0 {
        return Err(Error::Input("kmax must be >= 1".into()));
    }
    let s = hilbert::codimension(ideal)?;
    let mut rows = Vec::with_capacity(kmax as usize);
    let mut truncated = false;
    for k in 1..=kmax {
        let ik = ideal.power(k)?;
        let sk = hilbert::codimension(&ik)?;
        if sk != s {
            return Err(Error::Inconsistency(format!(
                "codimension changed under powers: s(I) = {}, s(I^{}) = {}",
                s, k, sk
            )));
        }
        let e = hilbert::multiplicity(&ik)?;
        let table = match resolution::betti_table(&ik, caps) {
            Ok(t) => t,
            Err(Error::Resource { .. }) => {
                truncated = true;
                break;
            }
            Err(other) => return Err(other),
        };
        let shifts = table.shifts();
        if shifts.big_m.len() < s {
            return Err(Error::Inconsistency(format!(
                "projective dimension {} below codimension {} for I^{}",
                shifts.big_m.len(),
                s,
                k
            )));
        }
        let reg: Vec<i64> = (0..s)
            .map(|i| shifts.big_m[i] as i64 - i as i64)
            .collect();
        let prod: BigInt = shifts.big_m[..s].iter().map(|&v| BigInt::from(v)).product();
        let ratio = BigRational::new(BigInt::from(factorial_u128(s)) * &e, prod);
        rows.push(PowerRow {
            k,
            e: e.to_string(),
            e_value: e,
            big_m: shifts.big_m.clone(),
            reg,
            ratio: RatioField::from_rational(&ratio),
            ratio_value: ratio,
        });
    }
    Ok(PowerScan {
        ideal: ideal.to_string(),
        n: ideal.num_vars(),
        s,
        rows,
        truncated,
    })
}

/// An exactly affine tail `v_k = q k + c` for `k >= k0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearFit {
    pub q: i64,
    pub c: i64,
    pub k0: u32,
    /// Number of points on the tail.
    pub points: usize,
}

/// Longest affine tail of `(k, v)` data, requiring at least three points so
/// two-point "fits" never count as evidence.
pub fn fit_linear(points: &[(u32, i64)]) -> Option<LinearFit> {
    if points.len() < 3 {
        return None;
    }
    let n = points.len();
    let (k1, v1) = points[n - 2];
    let (k2, v2) = points[n - 1];
    let dk = (k2 - k1) as i64;
    if dk == 0 || (v2 - v1) % dk != 0 {
        return None;
    }
    let q = (v2 - v1) / dk;
    let c = v2 - q * k2 as i64;
    let mut start = n - 2;
    while start > 0 {
        let (k, v) = points[start - 1];
        if v == q * k as i64 + c {
            start -= 1;
        } else {
            break;
        }
    }
    let tail = n - start;
    if tail < 3 {
        return None;
    }
    Some(LinearFit {
        q,
        c,
        k0: points[start].0,
        points: tail,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SlopeStatus {
    /// Every `reg_i` sequence has an affine tail and all slopes agree.
    Consistent,
    /// Some sequence has no affine tail yet (scan too short), or slopes
    /// disagree on the observed window.
    Inconclusive,
}

/// Per-index slope analysis of the partial regularities.
#[derive(Debug, Clone, Serialize)]
pub struct SlopeReport {
    pub status: SlopeStatus,
    /// The common slope when consistent (the generator-degree slope).
    pub q: Option<i64>,
    pub fits: Vec<Option<LinearFit>>,
}

/// Fit each `reg_i(I^k)` sequence and test whether all slopes agree.
pub fn slope_equality_check(scan: &PowerScan) -> SlopeReport {
    let mut fits = Vec::with_capacity(scan.s);
    for i in 0..scan.s {
        let pts: Vec<(u32, i64)> = scan.rows.iter().map(|r| (r.k, r.reg[i])).collect();
        fits.push(fit_linear(&pts));
    }
    let slopes: Vec<i64> = fits.iter().flatten().map(|f| f.q).collect();
    let all_fitted = fits.iter().all(|f| f.is_some()) && !fits.is_empty();
    let status = if all_fitted && slopes.windows(2).all(|w| w[0] == w[1]) {
        SlopeStatus::Consistent
    } else {
        SlopeStatus::Inconclusive
    };
    let q = if status == SlopeStatus::Consistent {
        Some(slopes[0])
    } else {
        None
    };
    SlopeReport { status, q, fits }
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticReport {
    pub s: usize,
    /// The asymptotic multiplicity `e(I; S)`: since `e(I^k) = e(I; S) k^s/s!
    /// + lower order` for large `k`, it is the eventual `s`-th finite
    /// difference of the sequence `e(I^k)`.
    pub e_asym: String,
    /// True when the last two `s`-th differences agree, i.e. the window has
    /// reached the polynomial regime.
    pub stable: bool,
    /// `e(I; S) <= q^s` with `q` the common regularity slope, when known.
    pub slope_bound_holds: Option<bool>,
}

/// Extract `e(I; S)` from the tail of the multiplicity sequence.
pub fn asymptotic_multiplicity(scan: &PowerScan, slopes: &SlopeReport) -> Result<AsymptoticReport> {
    let s = scan.s;
    if scan.rows.len() < s + 2 {
        return Err(Error::Precondition(format!(
            "need at least s + 2 = {} rows to difference and compare, got {}",
            s + 2,
            scan.rows.len()
        )));
    }
    let mut seq: Vec<BigInt> = scan.rows.iter().map(|r| r.e_value.clone()).collect();
    for _ in 0..s {
        seq = seq.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let last = seq.last().unwrap().clone();
    let stable = seq[seq.len() - 2] == last;
    if !last.is_positive() {
        return Err(Error::Inconsistency(format!(
            "asymptotic multiplicity must be positive, got {}",
            last
        )));
    }
    let slope_bound_holds = slopes.q.map(|q| {
        q >= 0 && last <= num_traits::pow::pow(BigInt::from(q), s)
    });
    Ok(AsymptoticReport {
        s,
        e_asym: last.to_string(),
        stable,
        slope_bound_holds,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioReport {
    pub ratios: Vec<RatioField>,
    /// Upper bound `s! e_k <= prod M_i(I^k)` holds on every observed row.
    pub all_le_one: bool,
    /// The last observed ratio.
    pub last: Option<RatioField>,
}

/// The observed trajectory of `s! e_k / prod_{i<=s} M_i(S/I^k)`.
pub fn limit_ratio_report(scan: &PowerScan) -> RatioReport {
    let one = BigRational::one();
    let all_le_one = scan.rows.iter().all(|r| r.ratio_value <= one);
    RatioReport {
        ratios: scan.rows.iter().map(|r| r.ratio.clone()).collect(),
        all_le_one,
        last: scan.rows.last().map(|r| r.ratio.clone()),
    }
}
