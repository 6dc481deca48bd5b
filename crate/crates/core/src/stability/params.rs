//! Derived constants of the stability argument.

use serde::{Deserialize, Serialize};

use super::StabilityError;

/// Replacement values for the asymptotic thresholds, which are far out of
/// reach at any practical order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Overrides {
    pub joint_threshold: Option<f64>,
    pub edit_budget: Option<u64>,
    /// Part size `s` for the multipartite branch, used when `⌊c ln n⌋`
    /// would be zero.
    pub part_size_s: Option<usize>,
}

impl Overrides {
    pub fn is_empty(&self) -> bool {
        self.joint_threshold.is_none() && self.edit_budget.is_none() && self.part_size_s.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub r: usize,
    pub c: f64,
    pub eps: f64,
    pub n: usize,
    /// `c^{1/(r+1)} · r^{2r+5}`
    pub theta: f64,
    /// `eps + √(2θ)`, the stability parameter handed to the r-partite extraction.
    pub b: f64,
    /// `b^{1/3}`
    pub a: f64,
    /// Small part size of the multipartite witness.
    pub s: usize,
    /// Target size `⌈n^{1−√c}⌉` of the large part.
    pub t: usize,
    pub joint_threshold: f64,
    pub joint_threshold_default: f64,
    pub edit_budget: u64,
    pub edit_budget_default: u64,
    /// `⌈(1/r − 7(r−1)a) n⌉`, clamped at zero.
    pub part_size_u: usize,
    /// `(eps^{1/4} + c^{1/(8r+8)}) n²`
    pub edit_bound: f64,
    /// `(θ + (7r² − 3r) a) n²`, the bound before its final simplification.
    pub sharp_edit_bound: f64,
    /// `(1 − 1/r − 7a) n`
    pub mindeg_goal: f64,
    /// `(1 − 4a) n`
    pub size_goal: f64,
    /// Whether `(c, eps, n)` lie in the window where the asymptotic bounds apply.
    pub asymptotic_regime: bool,
    pub overrides: Overrides,
}

impl Params {
    /// `size_goal` as a vertex count.
    pub fn size_goal_count(&self) -> usize {
        let goal = self.size_goal.ceil();
        if goal <= 0.0 {
            0
        } else {
            goal as usize
        }
    }
}

fn ceil_to_usize(x: f64) -> usize {
    let c = x.ceil();
    if c <= 0.0 {
        0
    } else if c >= usize::MAX as f64 {
        usize::MAX
    } else {
        c as usize
    }
}

/// True iff `1/ln n < c < r^{−8(r+21)(r+1)}` and `0 < eps < 2^{−36} r^{−24}`.
/// The comparisons are made on logarithms because `r^{−8(r+21)(r+1)}`
/// underflows a double for `r >= 3`.
pub fn in_asymptotic_window(r: usize, c: f64, eps: f64, n: usize) -> bool {
    c_in_window(r, c, n) && eps_in_window(r, eps)
}

fn c_in_window(r: usize, c: f64, n: usize) -> bool {
    let rf = r as f64;
    let c_upper_ln = -8.0 * (rf + 21.0) * (rf + 1.0) * rf.ln();
    c > 1.0 / (n as f64).ln() && c.ln() < c_upper_ln
}

fn eps_in_window(r: usize, eps: f64) -> bool {
    let eps_upper_ln = -36.0 * 2f64.ln() - 24.0 * (r as f64).ln();
    eps > 0.0 && eps.ln() < eps_upper_ln
}

/// Computes every derived constant for `(r, c, eps, n)`, applying overrides.
pub fn derived_params(
    r: usize,
    c: f64,
    eps: f64,
    n: usize,
    overrides: Overrides,
) -> Result<Params, StabilityError> {
    if r < 2 {
        return Err(StabilityError::InvalidArgument(format!("need r >= 2, got {r}")));
    }
    if n < 3 {
        return Err(StabilityError::InvalidArgument(format!("need n >= 3, got {n}")));
    }
    if !(c > 0.0) || !c.is_finite() {
        return Err(StabilityError::InvalidArgument(format!("need c > 0, got {c}")));
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(StabilityError::InvalidArgument(format!("need eps > 0, got {eps}")));
    }
    let rf = r as f64;
    let nf = n as f64;
    let r_pow = rf.powi(2 * r as i32 + 5);
    let theta = c.powf(1.0 / (rf + 1.0)) * r_pow;
    let b = eps + (2.0 * theta).sqrt();
    let a = b.cbrt();

    let s_formula = (c * nf.ln()).floor();
    let s = match overrides.part_size_s {
        Some(s) if s >= 1 => s,
        Some(_) => {
            return Err(StabilityError::InvalidArgument("part size override must be >= 1".into()))
        }
        None if s_formula >= 1.0 => s_formula as usize,
        None if !overrides.is_empty() => 1,
        None => {
            return Err(StabilityError::InvalidArgument(format!(
                "floor(c ln n) = {s_formula} < 1: the multipartite part size would be empty"
            )))
        }
    };
    let t = ceil_to_usize(nf.powf(1.0 - c.sqrt())).max(1);

    let joint_threshold_default = nf.powi(r as i32 - 1) / r_pow;
    let edit_budget_default = {
        let x = (theta * nf * nf).ceil();
        if x >= u64::MAX as f64 {
            u64::MAX
        } else {
            x as u64
        }
    };
    let joint_threshold = overrides.joint_threshold.unwrap_or(joint_threshold_default);
    if !(joint_threshold >= 0.0) {
        return Err(StabilityError::InvalidArgument(format!(
            "joint threshold must be >= 0, got {joint_threshold}"
        )));
    }

    Ok(Params {
        r,
        c,
        eps,
        n,
        theta,
        b,
        a,
        s,
        t,
        joint_threshold,
        joint_threshold_default,
        edit_budget: overrides.edit_budget.unwrap_or(edit_budget_default),
        edit_budget_default,
        part_size_u: ceil_to_usize((1.0 / rf - 7.0 * (rf - 1.0) * a) * nf),
        edit_bound: (eps.powf(0.25) + c.powf(1.0 / (8.0 * rf + 8.0))) * nf * nf,
        sharp_edit_bound: (theta + (7.0 * rf * rf - 3.0 * rf) * a) * nf * nf,
        mindeg_goal: (1.0 - 1.0 / rf - 7.0 * a) * nf,
        size_goal: (1.0 - 4.0 * a) * nf,
        asymptotic_regime: in_asymptotic_window(r, c, eps, n),
        overrides,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn tiny_c_constants() {
        let ov = Overrides {
            joint_threshold: Some(1.0),
            ..Overrides::default()
        };
        let p = derived_params(2, 1e-30, 1e-12, 1000, ov).unwrap();
        assert!(close(p.theta, 5.12e-8, 1e-12));
        assert!(close((2.0 * p.theta).sqrt(), 3.2e-4, 1e-12));
        // (1e-12 + 3.2e-4)^(1/3), evaluated with 50-digit arithmetic
        assert!(close(p.a, 0.068399037938317, 1e-12));
        assert_eq!(p.s, 1);
    }

    #[test]
    fn override_regime_sizes() {
        let ov = Overrides {
            joint_threshold: Some(1.0),
            edit_budget: Some(10),
            part_size_s: None,
        };
        let p = derived_params(2, 0.5, 0.1, 100, ov).unwrap();
        assert_eq!(p.s, 2);
        assert_eq!(p.t, 4);
        assert!(!p.asymptotic_regime);
        assert_eq!(p.edit_budget, 10);
        assert_eq!(p.joint_threshold, 1.0);
        // defaults still reported
        assert!(close(p.joint_threshold_default, 100.0 / 512.0, 1e-15));
    }

    #[test]
    fn window_flag() {
        // r = 2: c must be below 2^-552 and above 1/ln n
        assert!(!in_asymptotic_window(2, 0.5, 0.1, 100));
        // c below 2^-552 would need ln n > 1/c: never reachable
        assert!(!in_asymptotic_window(2, 1e-170, 1e-20, usize::MAX));
        assert!(!c_in_window(2, 1e-160, usize::MAX));
        assert!(c_in_window(2, 0.1, 1_000_000) == (0.1f64.ln() < -552.0 * 2f64.ln()));
        // eps < 2^-36 * 2^-24 = 2^-60 for r = 2
        assert!(eps_in_window(2, 2f64.powi(-61)));
        assert!(!eps_in_window(2, 2f64.powi(-59)));
        assert!(eps_in_window(3, 1e-30));
        assert!(!eps_in_window(3, 1e-20));
    }

    #[test]
    fn rejects_empty_part_size() {
        let err = derived_params(2, 0.1, 0.1, 10, Overrides::default()).unwrap_err();
        assert!(matches!(err, StabilityError::InvalidArgument(_)));
        assert!(derived_params(1, 0.5, 0.1, 100, Overrides::default()).is_err());
        assert!(derived_params(2, 0.5, 0.1, 2, Overrides::default()).is_err());
        assert!(derived_params(2, -1.0, 0.1, 100, Overrides::default()).is_err());
        assert!(derived_params(2, 0.5, 0.0, 100, Overrides::default()).is_err());
    }
}
