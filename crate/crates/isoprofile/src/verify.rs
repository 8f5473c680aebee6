//! Named check suites: every inequality, identity, and monotonicity claim
//! the library relies on, executed with measured margins.
//!
//! Three suites are exposed through `isoprofile verify`:
//!
//! * `lemmas`: the seven facts about the corner-arc family (inversion,
//!   slope/convexity, the diagonal bound, the unit-perimeter family, the
//!   `beta` ceiling, the quarter-disk matching area, and the monotone
//!   matching curve).
//! * `section3`: the corner-avoiding deformation checks.
//! * `oracle`: grid agreement between the enumeration and the profile.
//!
//! `all` additionally runs the profile-level checks (continuity,
//! monotonicity, bounds, the split inequality, and the square regression).
//! A failed check carries a negative margin; a solver failure aborts the
//! suite with an error.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use crate::corner_checks::{
    improvement_threshold, lambda_positivity_cap, polyline_perimeter_gain, strict_improvement,
    strict_improvement_margin, CornerDeformation,
};
use crate::geometry::{
    arc_area_raw, arc_perimeter_raw, circular_segment_area, NotchParam, RegionKind,
};
use crate::oracle::{enumerate_candidates, wall_arc_bound};
use crate::profile::{self, arc_branch_interval, arc_branch_slope};
use crate::rng::SplitMix64;
use crate::solvers::Breakpoints;
use crate::Error;

/// Result of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Distance to the failure boundary; negative when the check failed.
    pub margin: f64,
    pub detail: String,
}

impl Check {
    fn from_margin(name: &'static str, margin: f64, detail: String) -> Self {
        Check {
            name,
            passed: margin >= 0.0,
            margin,
            detail,
        }
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 {
        (hi - lo) / (n - 1) as f64
    } else {
        0.0
    };
    (0..n).map(move |i| lo + step * i as f64)
}

/// Notch sizes spanning all four regimes, always including the interiors
/// of the two narrow middle regimes.
fn regime_spanning_notches(bp: &Breakpoints, n: usize) -> Vec<f64> {
    let mut out: Vec<f64> = linspace(0.0, 0.95, n.saturating_sub(6)).collect();
    out.extend([
        0.5 * bp.alpha(),
        bp.alpha(),
        0.5 * (bp.alpha() + bp.beta()),
        bp.beta(),
        0.5 * (bp.beta() + bp.gamma()),
        bp.gamma(),
    ]);
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// The seven arc-family facts.
// ---------------------------------------------------------------------------

fn check_angle_inversion(bp: &Breakpoints) -> Result<Check, Error> {
    let mut worst = 0.0f64;
    for a in [0.0, 0.1, 0.3, 0.6, 0.9] {
        let n = NotchParam::new(a)?;
        let lo = a * (1.0 - a);
        let hi = n.half_area();
        for t in linspace(lo, hi, 20) {
            let theta = bp.theta_of_area(n, t)?;
            worst = worst.max((arc_area_raw(n, theta) - t).abs());
        }
    }
    // The inversion is monotone: d(area)/d(theta) > 0 across the range.
    let mut slope_ok = true;
    for theta in linspace(1e-3, bp.theta_max(), 100) {
        if theta.sin() - theta * theta.cos() <= 0.0 {
            slope_ok = false;
        }
    }
    let margin = if slope_ok { 1e-10 - worst } else { -1.0 };
    Ok(Check::from_margin(
        "arc angle inversion well-defined",
        margin,
        format!(
            "worst area residual {:e}, slope positive: {}",
            worst, slope_ok
        ),
    ))
}

fn check_slope_and_convexity(bp: &Breakpoints) -> Result<Check, Error> {
    let h = bp.config().fd_step;
    let mut worst_rel = 0.0f64;
    let mut min_second = f64::INFINITY;
    for a in [0.12, 0.2, 0.24, 0.45, 0.75] {
        let n = NotchParam::new(a)?;
        let (lo, hi) = match arc_branch_interval(n, bp)? {
            Some(b) => b,
            None => continue,
        };
        if hi - lo < 10.0 * h {
            continue;
        }
        // Proportional insets keep the stencil inside the branch and away
        // from the zero-slope end where a relative comparison is ill-posed.
        let inset = ((hi - lo) / 200.0).max(2.0 * h);
        for t in linspace(lo + inset, hi - inset, 100) {
            let analytic = arc_branch_slope(n, t, bp)?;
            let f = |t: f64| -> Result<f64, Error> { Ok(profile::evaluate(n, t, bp)?.perimeter) };
            let fd = (f(t + h)? - f(t - h)?) / (2.0 * h);
            if analytic.abs() > 1e-8 {
                worst_rel = worst_rel.max(((fd - analytic) / analytic).abs());
            }
            let hh = 1e-3;
            if t - hh > lo && t + hh < hi {
                let second = (f(t + hh)? - 2.0 * f(t)? + f(t - hh)?) / (hh * hh);
                min_second = min_second.min(second);
            }
        }
    }
    let margin = (1e-6 - worst_rel).min(min_second + 1e-9);
    Ok(Check::from_margin(
        "arc slope matches finite differences, branch convex",
        margin,
        format!(
            "worst relative slope error {:e}, smallest second difference {:e}",
            worst_rel, min_second
        ),
    ))
}

fn check_diagonal_bound(bp: &Breakpoints) -> Result<Check, Error> {
    let mut min_margin = f64::INFINITY;
    for a in linspace(0.0, 0.95, 10) {
        let n = NotchParam::new(a)?;
        for theta in linspace(0.0, bp.theta_max(), 10) {
            let p = arc_perimeter_raw(n, theta);
            min_margin = min_margin.min(SQRT_2 * (1.0 - a) - p);
        }
    }
    Ok(Check::from_margin(
        "arc perimeter stays below sqrt(2)(1-a)",
        min_margin,
        format!("minimum slack {:e} over 100 samples", min_margin),
    ))
}

fn check_unit_perimeter_family(bp: &Breakpoints) -> Result<Check, Error> {
    let mut worst = 0.0f64;
    for t in linspace(bp.t0() / 20.0, bp.t0(), 20) {
        let (a, theta) = bp.notch_of_area(t)?;
        let n = NotchParam::new(a)?;
        worst = worst.max((arc_area_raw(n, theta) - t).abs());
        worst = worst.max((arc_perimeter_raw(n, theta) - 1.0).abs());
    }
    // Perimeter residual at tau(a) for 20 notch sizes.
    for a in linspace(bp.alpha(), bp.beta(), 20) {
        let n = NotchParam::new(a)?;
        let tau = bp.tau(a)?;
        let theta = bp.theta_of_area(n, tau)?;
        worst = worst.max((arc_perimeter_raw(n, theta) - 1.0).abs());
    }
    // The notch size grows with the area.
    let mut increasing = true;
    let mut prev = -1.0;
    for t in linspace(bp.t0() / 50.0, bp.t0(), 50) {
        let (a, _) = bp.notch_of_area(t)?;
        if a <= prev {
            increasing = false;
        }
        prev = a;
    }
    let margin = if increasing { 1e-10 - worst } else { -1.0 };
    Ok(Check::from_margin(
        "unit-perimeter arc family solves and grows",
        margin,
        format!(
            "worst residual {:e}, notch increasing: {}",
            worst, increasing
        ),
    ))
}

fn check_beta_ceiling(bp: &Breakpoints) -> Result<Check, Error> {
    let mut min_margin = f64::INFINITY;
    for a in linspace(bp.beta() + 1e-6, 0.99, 25) {
        let n = NotchParam::new(a)?;
        for theta in linspace(0.0, bp.theta_max(), 25) {
            min_margin = min_margin.min(1.0 - arc_perimeter_raw(n, theta));
        }
    }
    Ok(Check::from_margin(
        "arc perimeter below one beyond beta",
        min_margin,
        format!("minimum slack {:e}", min_margin),
    ))
}

fn check_matching_area_residual(bp: &Breakpoints) -> Result<Check, Error> {
    let mut worst = 0.0f64;
    for a in linspace(bp.alpha(), bp.gamma(), 20) {
        let n = NotchParam::new(a)?;
        let sigma = bp.sigma(a)?;
        let theta = bp.theta_of_area(n, sigma)?;
        let p = arc_perimeter_raw(n, theta);
        let t = arc_area_raw(n, theta);
        worst = worst.max((p * p - PI * t).abs());
    }
    Ok(Check::from_margin(
        "quarter-disk matching area solves",
        1e-10 - worst,
        format!("worst |P^2 - pi t| residual {:e}", worst),
    ))
}

fn check_matching_curve_monotone(bp: &Breakpoints) -> Result<Check, Error> {
    let mut min_drop = f64::INFINITY;
    let mut prev = f64::INFINITY;
    for a in linspace(bp.alpha(), bp.gamma(), 50) {
        let s = bp.sigma(a)?;
        if prev.is_finite() {
            min_drop = min_drop.min(prev - s);
        }
        prev = s;
    }
    let end_alpha = (bp.sigma(bp.alpha())? - 1.0 / PI).abs();
    let g = bp.gamma();
    let end_gamma = (bp.sigma(g)? - (1.0 - g) * (1.0 - g) / PI).abs();
    let worst_end = end_alpha.max(end_gamma);
    let margin = min_drop.min(1e-10 - worst_end);
    Ok(Check::from_margin(
        "matching area strictly decreasing with pinned ends",
        margin,
        format!(
            "smallest decrease {:e}, worst endpoint residual {:e}",
            min_drop, worst_end
        ),
    ))
}

/// The seven structural facts about the corner-arc family.
pub fn lemma_suite(bp: &Breakpoints) -> Result<Vec<Check>, Error> {
    Ok(vec![
        check_angle_inversion(bp)?,
        check_slope_and_convexity(bp)?,
        check_diagonal_bound(bp)?,
        check_unit_perimeter_family(bp)?,
        check_beta_ceiling(bp)?,
        check_matching_area_residual(bp)?,
        check_matching_curve_monotone(bp)?,
    ])
}

// ---------------------------------------------------------------------------
// Corner-deformation checks.
// ---------------------------------------------------------------------------

fn triangle_area(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> f64 {
    0.5 * ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])).abs()
}

fn sample_deformation(rng: &mut SplitMix64) -> (f64, f64, f64) {
    let theta = rng.range(0.05, FRAC_PI_2 - 0.05);
    let ell = rng.range(0.1, 5.0);
    let epsilon = rng.range(0.01, 0.95) * ell * theta.cos();
    (theta, ell, epsilon)
}

fn check_equal_area(seed: u64) -> Result<Check, Error> {
    let mut rng = SplitMix64::new(seed);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let (theta, ell, epsilon) = sample_deformation(&mut rng);
        let d = CornerDeformation::new(theta, ell, epsilon)?;
        let pts = d.points();
        let cut = triangle_area(pts.a, pts.c, pts.k);
        let added = triangle_area(pts.b, pts.c, pts.p);
        worst = worst.max(((cut - added) / cut).abs());
    }
    Ok(Check::from_margin(
        "deformation balances the two triangles",
        1e-12 - worst,
        format!("worst relative area mismatch {:e} over 1000 samples", worst),
    ))
}

fn check_improvement_implication(seed: u64) -> Result<Check, Error> {
    let mut rng = SplitMix64::new(seed ^ 0x5ec7);
    let mut min_gain = f64::INFINITY;
    let mut improving = 0usize;
    for _ in 0..1000 {
        let (theta, ell, epsilon) = sample_deformation(&mut rng);
        if strict_improvement(theta, ell, epsilon)? {
            improving += 1;
            min_gain = min_gain.min(polyline_perimeter_gain(theta, ell, epsilon)?);
        }
    }
    Ok(Check::from_margin(
        "shortening inequality implies a shorter polyline",
        min_gain,
        format!(
            "{improving} improving samples, smallest gain {:e}",
            min_gain
        ),
    ))
}

fn check_improvement_threshold(bp_cfg: &crate::SolverConfig, seed: u64) -> Result<Check, Error> {
    let mut rng = SplitMix64::new(seed ^ 0x7f4a);
    let mut min_threshold = f64::INFINITY;
    let mut below_ok = true;
    for _ in 0..100 {
        let theta = rng.range(0.05, FRAC_PI_2 - 0.05);
        let ell = rng.range(0.1, 5.0);
        let eps_star = improvement_threshold(theta, ell, bp_cfg)?;
        min_threshold = min_threshold.min(eps_star);
        for frac in [0.05, 0.35, 0.65, 0.95] {
            if strict_improvement_margin(theta, ell, eps_star * frac)? <= 0.0 {
                below_ok = false;
            }
        }
    }
    let margin = if below_ok { min_threshold } else { -1.0 };
    Ok(Check::from_margin(
        "improvement threshold positive with inequality below it",
        margin,
        format!(
            "smallest threshold {:e}, inequality below: {}",
            min_threshold, below_ok
        ),
    ))
}

fn check_wall_arc_bound() -> Result<Check, Error> {
    let mut min_slack = f64::INFINITY;
    for theta in linspace(FRAC_PI_2, PI, 1000) {
        let (lhs, rhs) = wall_arc_bound(theta)?;
        min_slack = min_slack.min(lhs - rhs);
    }
    Ok(Check::from_margin(
        "short-wall arc keeps perimeter^2 above pi t",
        min_slack + 1e-12,
        format!(
            "minimum slack {:e} (equality at the quarter turn)",
            min_slack
        ),
    ))
}

fn check_chord_area_cubic() -> Result<Check, Error> {
    let mut worst_rel = 0.0f64;
    let h = 1e-3;
    for r in [0.5, 1.0, 2.0] {
        // One-sided third difference at zero chord; the even-order terms of
        // the segment area vanish, so the estimate is O(h^2) accurate.
        let g = |l: f64| circular_segment_area(r, l).unwrap();
        let estimate = (g(3.0 * h) - 3.0 * g(2.0 * h) + 3.0 * g(h)) / (h * h * h);
        let expected = 1.0 / (2.0 * r);
        worst_rel = worst_rel.max(((estimate - expected) / expected).abs());
    }
    Ok(Check::from_margin(
        "chord area grows cubically with the stated coefficient",
        0.01 - worst_rel,
        format!("worst relative error {:e} at step {:e}", worst_rel, h),
    ))
}

fn check_lambda_window(seed: u64) -> Result<Check, Error> {
    let mut rng = SplitMix64::new(seed ^ 0x11bd);
    let mut min_rhs = f64::INFINITY;
    let mut improving_small_ell = true;
    for _ in 0..100 {
        let theta1 = rng.range(0.05, FRAC_PI_2 - 0.05);
        let cap = lambda_positivity_cap(theta1)?;
        let lambda = rng.range(0.1, 0.9) * cap;
        let s = theta1.sin();
        let rhs = lambda * (1.0 - s) - lambda * lambda * (1.0 + s) / theta1.cos();
        min_rhs = min_rhs.min(rhs);
        // With the right side positive, a short enough secant always wins:
        // the segment term scales like ell/12, so ell = 6 rhs clears it.
        let theta = rng.range(0.0, theta1 * 0.9);
        let ell = (6.0 * rhs).min(1e-4);
        if !crate::corner_checks::arc_improvement(theta, theta1, ell, lambda)? {
            improving_small_ell = false;
        }
    }
    let margin = if improving_small_ell { min_rhs } else { -1.0 };
    Ok(Check::from_margin(
        "scaled inequality positive below the lambda cap",
        margin,
        format!(
            "smallest right side {:e}, short secants improve: {}",
            min_rhs, improving_small_ell
        ),
    ))
}

/// The corner-deformation suite.
pub fn section3_suite(seed: u64, cfg: &crate::SolverConfig) -> Result<Vec<Check>, Error> {
    Ok(vec![
        check_equal_area(seed)?,
        check_improvement_implication(seed)?,
        check_improvement_threshold(cfg, seed)?,
        check_wall_arc_bound()?,
        check_chord_area_cubic()?,
        check_lambda_window(seed)?,
    ])
}

// ---------------------------------------------------------------------------
// Profile-level checks.
// ---------------------------------------------------------------------------

fn check_reference_windows(bp: &Breakpoints) -> Result<Check, Error> {
    let windows = [
        (bp.theta_max(), 1.21, 0.01),
        (bp.t0(), 0.48, 0.01),
        (bp.alpha(), 0.10, 0.01),
        (bp.beta(), 0.23, 0.01),
    ];
    let mut margin = f64::INFINITY;
    for (value, center, slack) in windows {
        margin = margin.min(slack - (value - center).abs());
    }
    margin = margin.min(1e-12 - (bp.gamma() - 1.0 / (1.0 + PI)).abs());
    Ok(Check::from_margin(
        "breakpoints inside their reference windows",
        margin,
        format!(
            "theta_max {:.6}, t0 {:.6}, alpha {:.6}, beta {:.6}, gamma {:.12}",
            bp.theta_max(),
            bp.t0(),
            bp.alpha(),
            bp.beta(),
            bp.gamma()
        ),
    ))
}

/// Interior branch boundaries of the profile for a given notch size.
fn branch_boundaries(a: NotchParam, bp: &Breakpoints) -> Result<Vec<f64>, Error> {
    let av = a.value();
    let half = a.half_area();
    let mut out = Vec::new();
    if av <= bp.alpha() {
        out.push(1.0 / PI);
    } else if av <= bp.beta() {
        out.push(bp.sigma(av)?);
        out.push(bp.tau(av)?);
    } else if av <= bp.gamma() {
        out.push(bp.sigma(av)?);
    } else {
        out.push((1.0 - av) * (1.0 - av) / PI);
        out.push(av * (1.0 - av));
    }
    out.retain(|t| *t > 1e-9 && *t < half - 1e-9);
    Ok(out)
}

fn check_profile_continuity(bp: &Breakpoints) -> Result<Check, Error> {
    let delta = 1e-11;
    let mut worst = 0.0f64;
    let mut boundaries = 0usize;
    for a in regime_spanning_notches(bp, 50) {
        let n = NotchParam::new(a)?;
        for b in branch_boundaries(n, bp)? {
            let left = profile::evaluate(n, b - delta, bp)?.perimeter;
            let right = profile::evaluate(n, b + delta, bp)?.perimeter;
            worst = worst.max((left - right).abs());
            boundaries += 1;
        }
    }
    Ok(Check::from_margin(
        "profile continuous across branch joins",
        1e-9 - worst,
        format!("worst jump {:e} over {} boundaries", worst, boundaries),
    ))
}

fn check_profile_monotone(bp: &Breakpoints) -> Result<Check, Error> {
    let mut min_step = f64::INFINITY;
    for a in regime_spanning_notches(bp, 12) {
        let n = NotchParam::new(a)?;
        let half = n.half_area();
        let mut prev = 0.0;
        for i in 1..=1000 {
            let t = half * i as f64 / 1000.0;
            let p = profile::evaluate(n, t, bp)?.perimeter;
            if i > 1 {
                min_step = min_step.min(p - prev);
            }
            prev = p;
        }
    }
    Ok(Check::from_margin(
        "profile non-decreasing in area",
        min_step + 1e-12,
        format!("smallest grid increment {:e}", min_step),
    ))
}

fn check_profile_bounds(bp: &Breakpoints) -> Result<Check, Error> {
    let mut margin = f64::INFINITY;
    for a in regime_spanning_notches(bp, 20) {
        let n = NotchParam::new(a)?;
        let half = n.half_area();
        for i in 1..=50 {
            let t = half * f64::from(i) / 50.0;
            let p = profile::evaluate(n, t, bp)?.perimeter;
            if a <= bp.beta() {
                margin = margin.min(1.0 + 1e-12 - p);
            }
            margin = margin.min(SQRT_2 * (1.0 - a) - p);
        }
    }
    // Sharper: the arc branch itself stays below sqrt(2)(1-a).
    let mut arc_margin = f64::INFINITY;
    for a in regime_spanning_notches(bp, 10) {
        let n = NotchParam::new(a)?;
        if let Some((lo, hi)) = arc_branch_interval(n, bp)? {
            for t in linspace(lo, hi, 10) {
                let theta = bp.theta_of_area(n, t)?;
                arc_margin = arc_margin.min(SQRT_2 * (1.0 - a) - arc_perimeter_raw(n, theta));
            }
        }
    }
    Ok(Check::from_margin(
        "profile bounded by one below beta and by the diagonal",
        margin.min(arc_margin),
        format!("arc-branch diagonal slack {:e}", arc_margin),
    ))
}

fn check_split_inequality(bp: &Breakpoints, seed: u64) -> Result<Check, Error> {
    // Numerical restatement of the connectedness argument: splitting the
    // area over two parts with the first below the transition always costs
    // more boundary.
    let mut rng = SplitMix64::new(seed ^ 0xd15c);
    let mut min_gap = f64::INFINITY;
    for a in [0.0, 0.05, 0.12, 0.2, 0.235, 0.3, 0.6, 0.85] {
        let n = NotchParam::new(a)?;
        let half = n.half_area();
        let transition = bp.transition(n)?;
        for _ in 0..200 {
            let t1 = rng.range(1e-3 * transition, transition);
            let hi = half - t1;
            if hi <= 1e-9 {
                continue;
            }
            let t2 = rng.range(hi * 1e-3, hi);
            let whole = profile::evaluate(n, t1 + t2, bp)?.perimeter;
            let split =
                profile::evaluate(n, t1, bp)?.perimeter + profile::evaluate(n, t2, bp)?.perimeter;
            min_gap = min_gap.min(split - whole);
        }
    }
    Ok(Check::from_margin(
        "two-part splits strictly exceed the profile",
        min_gap - 1e-12,
        format!("smallest excess {:e} over 1600 sampled splits", min_gap),
    ))
}

fn check_square_regression(bp: &Breakpoints) -> Result<Check, Error> {
    let n = NotchParam::new(0.0)?;
    let mut worst = 0.0f64;
    for i in 1..=500 {
        let t = 0.5 * f64::from(i) / 500.0;
        let expected = if t <= 1.0 / PI { (PI * t).sqrt() } else { 1.0 };
        let p = profile::evaluate(n, t, bp)?.perimeter;
        worst = worst.max((p - expected).abs());
    }
    Ok(Check::from_margin(
        "degenerate notch reproduces the square profile",
        1e-12 - worst,
        format!("worst pointwise deviation {:e}", worst),
    ))
}

fn check_sqrt_domination(bp: &Breakpoints) -> Result<Check, Error> {
    let mut ok = true;
    let mut min_strict = f64::INFINITY;
    for a in regime_spanning_notches(bp, 15) {
        let n = NotchParam::new(a)?;
        let cap = (PI / 4.0)
            .min(PI * (1.0 - a) * (1.0 - a) / 2.0)
            .min(n.half_area());
        let transition = bp.transition(n)?;
        for t in linspace(cap / 40.0, cap, 40) {
            let d = profile::sqrt_pi_dominates(n, t, bp)?;
            if !d.holds {
                ok = false;
            }
            if t > transition + 1e-6 {
                let gap = (PI * t).sqrt() - profile::evaluate(n, t, bp)?.perimeter;
                min_strict = min_strict.min(gap);
                if !d.strict {
                    ok = false;
                }
            }
        }
    }
    let margin = if ok { min_strict } else { -1.0 };
    Ok(Check::from_margin(
        "square-root bound dominates the profile",
        margin,
        format!("smallest strict gap above the transition {:e}", min_strict),
    ))
}

/// Profile-level checks, included in `verify all`.
pub fn profile_suite(bp: &Breakpoints, seed: u64) -> Result<Vec<Check>, Error> {
    Ok(vec![
        check_reference_windows(bp)?,
        check_profile_continuity(bp)?,
        check_profile_monotone(bp)?,
        check_profile_bounds(bp)?,
        check_split_inequality(bp, seed)?,
        check_square_regression(bp)?,
        check_sqrt_domination(bp)?,
    ])
}

// ---------------------------------------------------------------------------
// Oracle grid agreement.
// ---------------------------------------------------------------------------

/// Summary of one oracle-vs-profile grid sweep.
pub struct OracleSweep {
    pub checks: Vec<Check>,
}

const EXCLUDED: [RegionKind; 4] = [
    RegionKind::FullCircle,
    RegionKind::Semicircle,
    RegionKind::ThreeQuarterCircle,
    RegionKind::NotchQuarterCircle,
];

/// Grid comparison of the enumeration minimum against the profile:
/// `rows` notch sizes, `cols` areas each, unions at `resolution` splits.
pub fn oracle_suite(
    bp: &Breakpoints,
    rows: usize,
    cols: usize,
    resolution: usize,
) -> Result<Vec<Check>, Error> {
    let mut worst_gap = 0.0f64;
    let mut worst_tie = 0.0f64;
    let mut min_excluded_margin = f64::INFINITY;
    let mut excluded_seen = 0usize;
    let mut argmin_ok = true;

    for i in 0..rows {
        let a = 0.95 * i as f64 / (rows.max(2) - 1) as f64;
        let n = NotchParam::new(a)?;
        let half = n.half_area();
        for j in 1..=cols {
            let t = half * j as f64 / cols as f64;
            let point = profile::evaluate(n, t, bp)?;
            let candidates = enumerate_candidates(n, t, resolution, bp)?;
            let best = candidates
                .iter()
                .min_by(|x, y| x.perimeter.total_cmp(&y.perimeter))
                .expect("enumeration is never empty");
            worst_gap = worst_gap.max((best.perimeter - point.perimeter).abs());

            // The winning kind must be a declared minimizer, allowing exact
            // ties between kinds at branch joins.
            if !point.has_minimizer(best.kind()) {
                let tie = candidates
                    .iter()
                    .filter(|c| point.has_minimizer(c.kind()))
                    .map(|c| c.perimeter - best.perimeter)
                    .fold(f64::INFINITY, f64::min);
                worst_tie = worst_tie.max(tie);
                if tie.is_nan() || tie > 1e-9 {
                    argmin_ok = false;
                }
            }

            for c in &candidates {
                if EXCLUDED.contains(&c.kind()) {
                    excluded_seen += 1;
                    min_excluded_margin = min_excluded_margin.min(c.perimeter - point.perimeter);
                }
            }
        }
    }

    let agreement = Check::from_margin(
        "oracle minimum equals the profile",
        1e-9 - worst_gap,
        format!("worst |min - f| = {:e} on a {rows}x{cols} grid", worst_gap),
    );
    let argmin = Check::from_margin(
        "oracle argmin among declared minimizers",
        if argmin_ok { 1e-9 - worst_tie } else { -1.0 },
        format!("worst tie gap {:e}", worst_tie),
    );
    let excluded = Check::from_margin(
        "excluded circle kinds lose strictly",
        min_excluded_margin,
        format!(
            "smallest losing margin {:e} over {} feasible excluded candidates",
            min_excluded_margin, excluded_seen
        ),
    );

    // Two long wall-to-wall segments always exceed the profile's ceiling.
    let mut pair_margin = f64::INFINITY;
    for a in linspace(0.0, 0.95, 50) {
        let n = NotchParam::new(a)?;
        let ceiling = if a <= bp.beta() {
            1.0
        } else {
            arc_perimeter_raw(n, bp.theta_max())
        };
        pair_margin = pair_margin.min(2.0 * (1.0 - a) - ceiling);
    }
    let pairs = Check::from_margin(
        "paired wall-to-wall segments exceed the ceiling",
        pair_margin,
        format!("minimum excess {:e} over 50 notch sizes", pair_margin),
    );

    Ok(vec![agreement, argmin, excluded, pairs])
}
