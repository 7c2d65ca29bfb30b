//! Strength distribution tails: survival function and a power-law fit.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LexicalNetwork;

/// Complementary cumulative distribution of node strengths: for every
/// observed strength s (ascending), the fraction of nodes with strength at
/// least s. Isolates contribute a strength of 0.
pub fn strength_ccdf(net: &LexicalNetwork) -> Vec<(f64, f64)> {
    let n = net.node_count();
    if n == 0 {
        return Vec::new();
    }
    let mut strengths: Vec<u64> = net.node_ids().map(|v| net.strength(v)).collect();
    strengths.sort_unstable();
    let mut out = Vec::new();
    let mut i = 0;
    while i < strengths.len() {
        let s = strengths[i];
        // Everything from position i on is >= s.
        out.push((s as f64, (n - i) as f64 / n as f64));
        while i < strengths.len() && strengths[i] == s {
            i += 1;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct PowerLawFit {
    pub alpha: f64,
    pub x_min: f64,
    /// Kolmogorov-Smirnov distance between the fitted tail and the data
    /// above x_min.
    pub ks_distance: f64,
    /// Number of observations at or above x_min.
    pub n_tail: usize,
}

/// Fit a continuous power law to the upper tail of the data.
///
/// For each candidate cutoff (every distinct value), the exponent is the
/// maximum-likelihood estimate alpha = 1 + n / sum(ln(x / x_min)) over the
/// tail, and the cutoff keeping the smallest Kolmogorov-Smirnov distance
/// wins (ties to the smaller cutoff, keeping more data). Values of zero or
/// below are discarded first; the fit needs at least two distinct positive
/// values.
pub fn fit_power_law_tail(values: &[f64]) -> Result<PowerLawFit> {
    let mut xs: Vec<f64> = values.iter().copied().filter(|&x| x > 0.0).collect();
    if xs.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput("non-finite value in tail fit".to_string()));
    }
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut candidates: Vec<f64> = xs.clone();
    candidates.dedup();
    // The largest value alone cannot anchor a tail.
    candidates.pop();
    if candidates.is_empty() {
        return Err(Error::InvalidInput(
            "need at least two distinct positive values to fit a tail".to_string(),
        ));
    }

    let mut best: Option<PowerLawFit> = None;
    for &x_min in &candidates {
        let start = xs.partition_point(|&x| x < x_min);
        let tail = &xs[start..];
        let log_sum: f64 = tail.iter().map(|&x| (x / x_min).ln()).sum();
        if log_sum <= 0.0 {
            continue;
        }
        let n = tail.len() as f64;
        let alpha = 1.0 + n / log_sum;

        let mut ks = 0.0f64;
        for (i, &x) in tail.iter().enumerate() {
            let model = 1.0 - (x_min / x).powf(alpha - 1.0);
            let below = i as f64 / n;
            let above = (i + 1) as f64 / n;
            ks = ks.max((model - below).abs()).max((model - above).abs());
        }
        let fit = PowerLawFit {
            alpha,
            x_min,
            ks_distance: ks,
            n_tail: tail.len(),
        };
        // Strict improvement required, so equal distances keep the earlier
        // (smaller) cutoff.
        if best.map_or(true, |b| ks < b.ks_distance) {
            best = Some(fit);
        }
    }
    best.ok_or_else(|| {
        Error::InvalidInput("all tail candidates were degenerate".to_string())
    })
}
