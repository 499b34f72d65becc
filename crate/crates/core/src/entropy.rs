//! Degree-based entropy and its exact comparison key.

use std::cmp::Ordering;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sequences::DegreeSequence;

/// Entropy of the distribution `d_i / 2m` together with the quantities it is built from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    /// `sum d_i`.
    pub two_m: u64,
    /// `sum d_i log2 d_i`.
    #[serde(serialize_with = "crate::serialize_round9")]
    pub h_d: f64,
    /// `log2(two_m) - h_d / two_m`.
    #[serde(serialize_with = "crate::serialize_round9")]
    pub i_d: f64,
    /// `prod d_i^d_i` over positive degrees; `h_d = log2(exact_key)`.
    #[serde(serialize_with = "serialize_decimal")]
    pub exact_key: BigUint,
}

fn serialize_decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

/// `prod d^d` over the positive entries.
pub fn exact_key(degrees: &[u32]) -> BigUint {
    degrees
        .iter()
        .filter(|&&d| d > 1)
        .fold(BigUint::from(1u32), |acc, &d| acc * BigUint::from(d).pow(d))
}

/// `d log2 d`, with `0 log 0 = 0`.
fn x_log_x(d: u32) -> f64 {
    if d == 0 {
        0.0
    } else {
        let d = d as f64;
        d * d.log2()
    }
}

/// Entropy report for a degree sequence. Zero entries contribute nothing.
pub fn compute_entropy(d: &DegreeSequence) -> Result<EntropyReport> {
    let two_m = d.sum();
    if two_m == 0 {
        return Err(Error::NoEdges);
    }
    let h_d: f64 = d.iter().map(|&x| x_log_x(x)).sum();
    let i_d = ((two_m as f64).log2() - h_d / two_m as f64).max(0.0);
    Ok(EntropyReport { two_m, h_d, i_d, exact_key: exact_key(d.as_slice()) })
}

/// Orders two reports by `i_d`, exactly. At a fixed degree total the entropy order is
/// the reverse of the `exact_key` order.
pub fn compare_same_m(a: &EntropyReport, b: &EntropyReport) -> Result<Ordering> {
    if a.two_m != b.two_m {
        return Err(Error::MismatchedTotals { left: a.two_m, right: b.two_m });
    }
    Ok(b.exact_key.cmp(&a.exact_key))
}

/// Result of comparing entropies across different edge counts, where no exact key
/// applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FloatComparison {
    pub ordering: Ordering,
    /// Set when the values are within [`FLOAT_TOLERANCE`] and the ordering is unreliable.
    pub within_tolerance: bool,
}

pub const FLOAT_TOLERANCE: f64 = 1e-9;

pub fn compare_any_m(a: &EntropyReport, b: &EntropyReport) -> FloatComparison {
    if a.two_m == b.two_m {
        let ordering = b.exact_key.cmp(&a.exact_key);
        return FloatComparison { ordering, within_tolerance: false };
    }
    let diff = a.i_d - b.i_d;
    if diff.abs() <= FLOAT_TOLERANCE {
        FloatComparison { ordering: Ordering::Equal, within_tolerance: true }
    } else {
        FloatComparison { ordering: a.i_d.total_cmp(&b.i_d), within_tolerance: false }
    }
}
