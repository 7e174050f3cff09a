//! Shift-profile propagation under adjoining a homogeneous regular sequence,
//! the key product inequality behind it, and the tightness condition.
//!
//! The one-step update comes from the tensor of the two minimal resolutions:
//! `M'_i = max{M_i, M_{i-1} + d}` and `m'_i = min{m_i, m_{i-1} + d}` with
//! `M_0 = m_0 = 0`, entries above the top treated as absent, and
//! `e' = e * d`, `s' = s + 1`.
//!
//! Profiles are abstract: they need not come from an actual ideal, which is
//! what lets the harness sweep the hypothesis space exhaustively.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::resolution::BettiTable;

/// Abstract `(M, m, s, e)` tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftProfile {
    pub s: usize,
    pub big_m: Vec<u64>,
    pub small_m: Vec<u64>,
    pub e: u128,
}

pub(crate) fn factorial_u128(k: usize) -> u128 {
    (2..=k as u128).product::<u128>().max(1)
}

impl ShiftProfile {
    pub fn new(s: usize, big_m: Vec<u64>, small_m: Vec<u64>, e: u128) -> Result<Self> {
        if big_m.len() != small_m.len() {
            return Err(Error::Input("M and m must have equal length".into()));
        }
        if big_m.len() < s {
            return Err(Error::Input(format!(
                "profile needs at least s = {} shift entries, got {}",
                s,
                big_m.len()
            )));
        }
        if e == 0 {
            return Err(Error::Input("multiplicity must be positive".into()));
        }
        for (i, (&m, &mm)) in big_m.iter().zip(&small_m).enumerate() {
            if mm == 0 || mm > m {
                return Err(Error::Input(format!(
                    "need 0 < m_{} <= M_{} (got {} vs {})",
                    i + 1,
                    i + 1,
                    mm,
                    m
                )));
            }
        }
        Ok(ShiftProfile {
            s,
            big_m,
            small_m,
            e,
        })
    }

    /// The empty profile (`s = 0`, `e = 1`) of the polynomial ring itself.
    pub fn trivial() -> Self {
        ShiftProfile {
            s: 0,
            big_m: vec![],
            small_m: vec![],
            e: 1,
        }
    }

    /// Build a profile from a computed Betti table, codimension and
    /// multiplicity.
    pub fn from_table(table: &BettiTable, s: usize, e: &BigInt) -> Result<Self> {
        let shifts = table.shifts();
        let e: u128 = e
            .try_into()
            .map_err(|_| Error::Input("multiplicity does not fit in u128".into()))?;
        ShiftProfile::new(
            s,
            shifts.big_m.iter().map(|&v| v as u64).collect(),
            shifts.small_m.iter().map(|&v| v as u64).collect(),
            e,
        )
    }

    fn prod_small(&self) -> u128 {
        self.small_m[..self.s].iter().map(|&v| v as u128).product()
    }

    fn prod_big(&self) -> u128 {
        self.big_m[..self.s].iter().map(|&v| v as u128).product()
    }

    /// `prod_{i<=s} m_i <= s! e <= prod_{i<=s} M_i`.
    pub fn satisfies_bounds(&self) -> bool {
        let sfe = factorial_u128(self.s) * self.e;
        self.prod_small() <= sfe && sfe <= self.prod_big()
    }

    /// Upper-bound equality `s! e = prod_{i<=s} M_i`.
    pub fn tight_upper(&self) -> bool {
        factorial_u128(self.s) * self.e == self.prod_big()
    }

    /// One step of the shift-propagation recursion: adjoin a regular form of
    /// degree `d`.
    pub fn extend_shifts(&self, d: u64) -> Result<ShiftProfile> {
        if d == 0 {
            return Err(Error::Input("degree of a regular form must be >= 1".into()));
        }
        let q = self.big_m.len();
        let mut big = Vec::with_capacity(q + 1);
        let mut small = Vec::with_capacity(q + 1);
        for i in 1..=q + 1 {
            let prev_big = if i >= 2 { self.big_m[i - 2] } else { 0 };
            let prev_small = if i >= 2 { self.small_m[i - 2] } else { 0 };
            if i <= q {
                big.push(self.big_m[i - 1].max(prev_big + d));
                small.push(self.small_m[i - 1].min(prev_small + d));
            } else {
                big.push(prev_big + d);
                small.push(prev_small + d);
            }
        }
        let e = self
            .e
            .checked_mul(d as u128)
            .ok_or_else(|| Error::Input("multiplicity overflow in extension".into()))?;
        Ok(ShiftProfile {
            s: self.s + 1,
            big_m: big,
            small_m: small,
            e,
        })
    }
}

/// One step of an extension trace.
#[derive(Debug, Clone, Serialize)]
pub struct ExtensionStep {
    pub degree: u64,
    pub profile: ShiftProfile,
    pub bounds_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionTrace {
    pub start: ShiftProfile,
    pub steps: Vec<ExtensionStep>,
    /// Bounds hold after every step. `false` would contradict the
    /// propagation theorem and therefore signals a bug.
    pub ok: bool,
}

/// Iterate [`ShiftProfile::extend_shifts`] over `degrees`, checking the
/// bounds after each step.
pub fn verify_extension(profile: &ShiftProfile, degrees: &[u64]) -> Result<ExtensionTrace> {
    if !profile.satisfies_bounds() {
        return Err(Error::Input(
            "verify_extension needs a bound-satisfying start profile".into(),
        ));
    }
    let mut current = profile.clone();
    let mut steps = Vec::with_capacity(degrees.len());
    let mut ok = true;
    for &d in degrees {
        current = current.extend_shifts(d)?;
        let bounds_ok = current.satisfies_bounds();
        ok &= bounds_ok;
        steps.push(ExtensionStep {
            degree: d,
            profile: current.clone(),
            bounds_ok,
        });
    }
    Ok(ExtensionTrace {
        start: profile.clone(),
        steps,
        ok,
    })
}

/// The key inequality `(s+1) d prod_{i<=s} M_i <= prod_{i=1}^{s+1} max{M_i, M_{i-1}+d}`
/// with `M_0 = 0` and an absent `M_{s+1}` degenerating to `M_s + d`.
pub fn inequality_star(s: usize, d: u64, big_m: &[u64]) -> Result<bool> {
    if big_m.len() < s {
        return Err(Error::Input("need at least s entries of M".into()));
    }
    if d == 0 || big_m[..s].contains(&0) {
        return Err(Error::Input("need d >= 1 and M_i >= 1".into()));
    }
    let lhs = (s as u128 + 1) * d as u128 * big_m[..s].iter().map(|&v| v as u128).product::<u128>();
    let mut rhs = 1u128;
    for i in 1..=s + 1 {
        let prev = if i >= 2 { big_m[i - 2] } else { 0 };
        let term = if i <= big_m.len() {
            big_m[i - 1].max(prev + d)
        } else {
            prev + d
        };
        rhs *= term as u128;
    }
    Ok(lhs <= rhs)
}

/// The extension is upper-tight iff some `d` has `M_i = i d` for
/// all `i <= s` and every adjoined form has degree `d`.
pub fn tightness_condition(profile: &ShiftProfile, degrees: &[u64]) -> bool {
    let d = if let Some(&first) = degrees.first() {
        first
    } else if profile.s >= 1 {
        profile.big_m[0]
    } else {
        1
    };
    if d == 0 || degrees.iter().any(|&x| x != d) {
        return false;
    }
    (1..=profile.s).all(|i| profile.big_m[i - 1] == i as u64 * d)
}
