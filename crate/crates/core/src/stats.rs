//! Small statistical helpers shared across the analysis modules.

use serde::Serialize;
use statrs::function::erf::erfc;

use crate::error::{Error, Result};

/// Chi-squared comparison of two proportions.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TwoProportionResult {
    pub chi2: f64,
    pub p_value: f64,
    pub proportion_a: f64,
    pub proportion_b: f64,
}

/// Compare successes_a/total_a against successes_b/total_b with the 2x2
/// chi-squared test (1 degree of freedom). `yates` applies the continuity
/// correction. The p-value uses the closed form erfc(sqrt(chi2/2)).
///
/// Degenerate tables (an empty group, or a pooled proportion of exactly 0
/// or 1) have no sampling variance to test against and are rejected.
pub fn chi2_two_proportions(
    successes_a: u64,
    total_a: u64,
    successes_b: u64,
    total_b: u64,
    yates: bool,
) -> Result<TwoProportionResult> {
    if successes_a > total_a || successes_b > total_b {
        return Err(Error::InvalidInput(
            "successes exceed group total".to_string(),
        ));
    }
    if total_a == 0 || total_b == 0 {
        return Err(Error::InvalidInput("empty group in 2x2 table".to_string()));
    }
    let (a, b) = (successes_a as f64, (total_a - successes_a) as f64);
    let (c, d) = (successes_b as f64, (total_b - successes_b) as f64);
    let n = a + b + c + d;
    if a + c == 0.0 || b + d == 0.0 {
        return Err(Error::InvalidInput(
            "pooled proportion is 0 or 1; the test is undefined".to_string(),
        ));
    }
    let mut diff = (a * d - b * c).abs();
    if yates {
        diff = (diff - n / 2.0).max(0.0);
    }
    let chi2 = n * diff * diff / ((a + b) * (c + d) * (a + c) * (b + d));
    let p_value = erfc((chi2 / 2.0).sqrt()).clamp(0.0, 1.0);
    Ok(TwoProportionResult {
        chi2,
        p_value,
        proportion_a: a / (a + b),
        proportion_b: c / (c + d),
    })
}

/// Which side of the null distribution counts as extreme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    Greater,
    Less,
    TwoSided,
}

/// Empirical p-value of an observation against Monte Carlo samples, with the
/// add-one correction so p is never exactly zero: (1 + #extreme) / (n + 1).
/// The two-sided value doubles the smaller tail and caps at 1.
pub fn empirical_p(observed: f64, null: &[f64], tail: Tail) -> Result<f64> {
    if null.is_empty() {
        return Err(Error::InvalidInput(
            "empirical p-value needs at least one null sample".to_string(),
        ));
    }
    let n = null.len() as f64;
    let ge = null.iter().filter(|&&x| x >= observed).count() as f64;
    let le = null.iter().filter(|&&x| x <= observed).count() as f64;
    let p_greater = (1.0 + ge) / (n + 1.0);
    let p_less = (1.0 + le) / (n + 1.0);
    Ok(match tail {
        Tail::Greater => p_greater,
        Tail::Less => p_less,
        Tail::TwoSided => (2.0 * p_greater.min(p_less)).min(1.0),
    })
}

/// Nearest-rank centiles of a sample: the value at rank ceil(p/100 * n),
/// clamped into range. Returns (lower, upper).
pub fn centile_bounds(samples: &[f64], lower_pct: f64, upper_pct: f64) -> Result<(f64, f64)> {
    if samples.is_empty() {
        return Err(Error::InvalidInput(
            "centiles of an empty sample".to_string(),
        ));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite sample"));
    let pick = |pct: f64| {
        let rank = ((pct / 100.0) * sorted.len() as f64).ceil() as usize;
        sorted[rank.clamp(1, sorted.len()) - 1]
    };
    Ok((pick(lower_pct), pick(upper_pct)))
}

/// Mean and sample standard deviation (n-1 denominator; 0 for fewer than
/// two values).
pub fn mean_sd(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (0.0, 0.0);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}
