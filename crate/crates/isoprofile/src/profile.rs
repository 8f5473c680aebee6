//! The piecewise isoperimetric profile `f_a(t)` and minimizer
//! classification.
//!
//! The profile has four regimes in the notch size `a`, separated by the
//! breakpoint constants `alpha < beta < gamma`:
//!
//! * `a <= alpha`: square-root branch up to `1/pi`, then the unit chord.
//! * `alpha <= a <= beta`: square root up to `sigma(a)`, the corner arc up
//!   to `tau(a)`, then the unit chord.
//! * `beta <= a <= gamma`: square root up to `sigma(a)`, then the corner
//!   arc all the way to half area.
//! * `a >= gamma`: square root up to `(1-a)^2/pi`, the short chord up to
//!   `a(1-a)`, then the corner arc.
//!
//! Within each regime the value is a closed form; only the angle of the
//! corner arc is solved numerically. Evaluation at a branch boundary
//! reports the common value and both adjacent minimizer kinds; at a regimee
//! boundary both regime formulas are evaluated and must agree.

use std::f64::consts::PI;

use crate::geometry::{arc_perimeter_raw, NotchParam, RegionKind};
use crate::solvers::Breakpoints;
use crate::Error;

/// Absolute slack identifying a branch boundary in `t`.
pub const BOUNDARY_SLACK: f64 = 1e-12;

/// Tolerance for agreement of adjacent regime formulas at `a = alpha`,
/// `beta`, `gamma`.
pub const REGIME_AGREEMENT: f64 = 1e-9;

/// One evaluated point of the profile.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfilePoint {
    pub a: f64,
    pub t: f64,
    /// `f_a(t)`: the least relative perimeter at area `t`.
    pub perimeter: f64,
    /// Region kinds attaining the minimum; a single kind except at branch
    /// boundaries.
    pub minimizers: Vec<RegionKind>,
    /// Arc angle `theta(t)`, present exactly when the corner arc is among
    /// the minimizers.
    pub theta: Option<f64>,
}

impl ProfilePoint {
    pub fn has_minimizer(&self, kind: RegionKind) -> bool {
        self.minimizers.contains(&kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Regime {
    SquareLike,  // a <= alpha
    ArcWindow,   // alpha <= a <= beta
    ArcTail,     // beta <= a <= gamma
    ChordAndArc, // a >= gamma
}

fn regime_of(av: f64, bp: &Breakpoints) -> Regime {
    if av <= bp.alpha() {
        Regime::SquareLike
    } else if av <= bp.beta() {
        Regime::ArcWindow
    } else if av <= bp.gamma() {
        Regime::ArcTail
    } else {
        Regime::ChordAndArc
    }
}

fn sqrt_branch(t: f64) -> f64 {
    (PI * t).sqrt()
}

type Branch = (f64, Vec<RegionKind>, Option<f64>);

fn eval_in_regime(
    a: NotchParam,
    t: f64,
    regime: Regime,
    bp: &Breakpoints,
) -> Result<Branch, Error> {
    let av = a.value();
    let eps = BOUNDARY_SLACK;
    match regime {
        Regime::SquareLike => {
            let cut = 1.0 / PI;
            if t < cut - eps {
                Ok((sqrt_branch(t), vec![RegionKind::QuarterDisk], None))
            } else if t <= cut + eps {
                Ok((
                    1.0,
                    vec![RegionKind::QuarterDisk, RegionKind::UnitChord],
                    None,
                ))
            } else {
                Ok((1.0, vec![RegionKind::UnitChord], None))
            }
        }
        Regime::ArcWindow => {
            let sigma = bp.sigma(av)?;
            let tau = bp.tau(av)?;
            if sigma > tau + REGIME_AGREEMENT {
                return Err(Error::Inconsistent {
                    what: "arc branch start exceeds its end on [alpha, beta]",
                });
            }
            if t < sigma - eps {
                Ok((sqrt_branch(t), vec![RegionKind::QuarterDisk], None))
            } else if t <= sigma + eps {
                let theta = bp.theta_of_area(a, t.min(a.half_area()))?;
                Ok((
                    sqrt_branch(t),
                    vec![RegionKind::QuarterDisk, RegionKind::CornerArc],
                    Some(theta),
                ))
            } else if t < tau - eps {
                let theta = bp.theta_of_area(a, t)?;
                Ok((
                    arc_perimeter_raw(a, theta),
                    vec![RegionKind::CornerArc],
                    Some(theta),
                ))
            } else if t <= tau + eps {
                let theta = bp.theta_of_area(a, t.min(a.half_area()))?;
                Ok((
                    1.0,
                    vec![RegionKind::UnitChord, RegionKind::CornerArc],
                    Some(theta),
                ))
            } else {
                Ok((1.0, vec![RegionKind::UnitChord], None))
            }
        }
        Regime::ArcTail => {
            let sigma = bp.sigma(av)?;
            if t < sigma - eps {
                Ok((sqrt_branch(t), vec![RegionKind::QuarterDisk], None))
            } else if t <= sigma + eps {
                let theta = bp.theta_of_area(a, t.min(a.half_area()))?;
                Ok((
                    sqrt_branch(t),
                    vec![RegionKind::QuarterDisk, RegionKind::CornerArc],
                    Some(theta),
                ))
            } else {
                let theta = bp.theta_of_area(a, t)?;
                Ok((
                    arc_perimeter_raw(a, theta),
                    vec![RegionKind::CornerArc],
                    Some(theta),
                ))
            }
        }
        Regime::ChordAndArc => {
            let edge = 1.0 - av;
            let cut = edge * edge / PI;
            let chord_end = av * edge;
            if t < cut - eps {
                Ok((sqrt_branch(t), vec![RegionKind::QuarterDisk], None))
            } else if t <= cut + eps {
                Ok((
                    edge,
                    vec![RegionKind::QuarterDisk, RegionKind::NotchChord],
                    None,
                ))
            } else if t < chord_end - eps {
                Ok((edge, vec![RegionKind::NotchChord], None))
            } else if t <= chord_end + eps {
                Ok((
                    edge,
                    vec![RegionKind::NotchChord, RegionKind::CornerArc],
                    Some(0.0),
                ))
            } else {
                let theta = bp.theta_of_area(a, t)?;
                Ok((
                    arc_perimeter_raw(a, theta),
                    vec![RegionKind::CornerArc],
                    Some(theta),
                ))
            }
        }
    }
}

/// Evaluates `f_a(t)` with minimizer classification.
///
/// `t` must satisfy `0 < t <= (1 - a^2)/2` (up to [`BOUNDARY_SLACK`]).
/// Exactly on a regime boundary in `a`, both adjacent formulas are
/// evaluated, required to agree within [`REGIME_AGREEMENT`], and the lower
/// regime's classification is returned.
pub fn evaluate(a: NotchParam, t: f64, bp: &Breakpoints) -> Result<ProfilePoint, Error> {
    let half = a.half_area();
    if !t.is_finite() || t <= 0.0 || t > half + BOUNDARY_SLACK {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            lo: 0.0,
            hi: half,
        });
    }
    let t = t.min(half);
    let av = a.value();

    let (lower, upper) = if (av - bp.alpha()).abs() <= BOUNDARY_SLACK {
        (Regime::SquareLike, Regime::ArcWindow)
    } else if (av - bp.beta()).abs() <= BOUNDARY_SLACK {
        (Regime::ArcWindow, Regime::ArcTail)
    } else if (av - bp.gamma()).abs() <= BOUNDARY_SLACK {
        (Regime::ArcTail, Regime::ChordAndArc)
    } else {
        let r = regime_of(av, bp);
        (r, r)
    };

    let (perimeter, minimizers, theta) = eval_in_regime(a, t, lower, bp)?;
    if upper != lower {
        let (other, _, _) = eval_in_regime(a, t, upper, bp)?;
        if (other - perimeter).abs() > REGIME_AGREEMENT {
            return Err(Error::Inconsistent {
                what: "adjacent regime formulas disagree at a breakpoint",
            });
        }
    }
    Ok(ProfilePoint {
        a: av,
        t,
        perimeter,
        minimizers,
        theta,
    })
}

/// The `t`-interval on which the profile follows the corner arc, if any.
pub fn arc_branch_interval(a: NotchParam, bp: &Breakpoints) -> Result<Option<(f64, f64)>, Error> {
    let av = a.value();
    match regime_of(av, bp) {
        Regime::SquareLike => Ok(None),
        Regime::ArcWindow => Ok(Some((bp.sigma(av)?, bp.tau(av)?))),
        Regime::ArcTail => Ok(Some((bp.sigma(av)?, a.half_area()))),
        Regime::ChordAndArc => Ok(Some((av * (1.0 - av), a.half_area()))),
    }
}

/// Derivative of the arc branch, `sin(theta(t)) / (1 - a)`.
///
/// Errors with [`Error::NotOnArcBranch`] when `t` lies outside the arc
/// branch of the profile (in particular for every `t` when `a <= alpha`).
pub fn arc_branch_slope(a: NotchParam, t: f64, bp: &Breakpoints) -> Result<f64, Error> {
    let (lo, hi) = match arc_branch_interval(a, bp)? {
        Some(bounds) => bounds,
        None => return Err(Error::NotOnArcBranch { t }),
    };
    if !t.is_finite() || t < lo - BOUNDARY_SLACK || t > hi + BOUNDARY_SLACK {
        return Err(Error::NotOnArcBranch { t });
    }
    let theta = bp.theta_of_area(a, t.clamp(lo, hi))?;
    Ok(theta.sin() / (1.0 - a.value()))
}

/// Comparison of the square-root bound against the profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dominance {
    /// `sqrt(pi t) >= f_a(t)`.
    pub holds: bool,
    /// The inequality is strict (true exactly beyond the transition area).
    pub strict: bool,
}

/// Checks `sqrt(pi t) >= f_a(t)` on the interval where quarter disks of
/// area `t` exist, reporting strictness beyond the transition `T(a)`.
pub fn sqrt_pi_dominates(a: NotchParam, t: f64, bp: &Breakpoints) -> Result<Dominance, Error> {
    let av = a.value();
    let cap = (PI / 4.0)
        .min(PI * (1.0 - av) * (1.0 - av) / 2.0)
        .min(a.half_area());
    if !t.is_finite() || t <= 0.0 || t > cap + BOUNDARY_SLACK {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            lo: 0.0,
            hi: cap,
        });
    }
    let point = evaluate(a, t, bp)?;
    let bound = sqrt_branch(t);
    let transition = bp.transition(a)?;
    Ok(Dominance {
        holds: bound >= point.perimeter - BOUNDARY_SLACK,
        strict: t > transition + BOUNDARY_SLACK,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::SolverConfig;
    use std::sync::OnceLock;

    fn bp() -> &'static Breakpoints {
        static BP: OnceLock<Breakpoints> = OnceLock::new();
        BP.get_or_init(|| Breakpoints::compute(SolverConfig::default()).unwrap())
    }

    fn notch(a: f64) -> NotchParam {
        NotchParam::new(a).unwrap()
    }

    #[test]
    fn square_like_regime_values() {
        let p = evaluate(notch(0.0), 0.25, bp()).unwrap();
        assert!((p.perimeter - (PI * 0.25).sqrt()).abs() < 1e-15);
        assert!((p.perimeter - 0.886_226_925_452_758).abs() < 1e-12);
        assert_eq!(p.minimizers, vec![RegionKind::QuarterDisk]);
        assert_eq!(p.theta, None);

        let p = evaluate(notch(0.0), 0.45, bp()).unwrap();
        assert_eq!(p.perimeter, 1.0);
        assert_eq!(p.minimizers, vec![RegionKind::UnitChord]);
    }

    #[test]
    fn short_chord_meets_arc() {
        // At t = a(1-a) the short chord and the zero-angle arc coincide.
        let p = evaluate(notch(0.5), 0.25, bp()).unwrap();
        assert!((p.perimeter - 0.5).abs() < 1e-15);
        assert_eq!(
            p.minimizers,
            vec![RegionKind::NotchChord, RegionKind::CornerArc]
        );
        assert_eq!(p.theta, Some(0.0));
    }

    #[test]
    fn arc_at_half_area_stays_below_diagonal_bound() {
        let a = notch(0.3);
        let p = evaluate(a, a.half_area(), bp()).unwrap();
        let expected = arc_perimeter_raw(a, bp().theta_max());
        assert!((p.perimeter - expected).abs() < 1e-12);
        assert!(p.perimeter < std::f64::consts::SQRT_2 * 0.7);
        assert_eq!(p.minimizers, vec![RegionKind::CornerArc]);
        assert!((p.theta.unwrap() - bp().theta_max()).abs() < 1e-9);
    }

    #[test]
    fn domain_errors() {
        assert!(evaluate(notch(0.3), 0.0, bp()).is_err());
        assert!(evaluate(notch(0.3), -0.1, bp()).is_err());
        assert!(evaluate(notch(0.3), 0.456, bp()).is_err());
        // Exactly half area (within slack) is fine.
        assert!(evaluate(notch(0.3), 0.455, bp()).is_ok());
    }

    #[test]
    fn branch_boundary_reports_both_kinds() {
        let p = evaluate(notch(0.0), 1.0 / PI, bp()).unwrap();
        assert_eq!(p.perimeter, 1.0);
        assert_eq!(
            p.minimizers,
            vec![RegionKind::QuarterDisk, RegionKind::UnitChord]
        );

        let a = 0.15;
        let sigma = bp().sigma(a).unwrap();
        let p = evaluate(notch(a), sigma, bp()).unwrap();
        assert_eq!(
            p.minimizers,
            vec![RegionKind::QuarterDisk, RegionKind::CornerArc]
        );
        assert!(p.theta.is_some());

        let tau = bp().tau(a).unwrap();
        let p = evaluate(notch(a), tau, bp()).unwrap();
        assert_eq!(
            p.minimizers,
            vec![RegionKind::UnitChord, RegionKind::CornerArc]
        );
    }

    #[test]
    fn regime_boundaries_agree() {
        for boundary in [bp().alpha(), bp().beta(), bp().gamma()] {
            // Exactly on the boundary and a hair to each side: the two
            // regime formulas are cross-checked and must agree.
            for a in [boundary - 5e-13, boundary, boundary + 5e-13] {
                let a = notch(a);
                for i in 1..=20 {
                    let t = a.half_area() * f64::from(i) / 20.0;
                    let p = evaluate(a, t, bp()).unwrap();
                    assert!(p.perimeter.is_finite());
                }
            }
            // Just outside the slack band the single-regime path runs, and
            // the values from the two sides still line up.
            let lo = notch(boundary - 1e-9);
            let hi = notch(boundary + 1e-9);
            let t = 0.9 * lo.half_area().min(hi.half_area());
            let p_lo = evaluate(lo, t, bp()).unwrap().perimeter;
            let p_hi = evaluate(hi, t, bp()).unwrap().perimeter;
            assert!((p_lo - p_hi).abs() < 1e-7, "{p_lo} vs {p_hi}");
        }
    }

    #[test]
    fn arc_window_regime_has_three_branches() {
        let a = 0.15;
        let sigma = bp().sigma(a).unwrap();
        let tau = bp().tau(a).unwrap();
        assert!(sigma < tau);
        let below = evaluate(notch(a), sigma * 0.9, bp()).unwrap();
        assert_eq!(below.minimizers, vec![RegionKind::QuarterDisk]);
        let mid = evaluate(notch(a), 0.5 * (sigma + tau), bp()).unwrap();
        assert_eq!(mid.minimizers, vec![RegionKind::CornerArc]);
        assert!(mid.perimeter < 1.0 && mid.perimeter > sqrt_branch(sigma));
        let above = evaluate(notch(a), tau + 0.02, bp()).unwrap();
        assert_eq!(above.minimizers, vec![RegionKind::UnitChord]);
    }

    #[test]
    fn slope_endpoints_and_finite_difference() {
        let a = notch(0.5);
        // theta = 0 end of the arc branch.
        assert!(arc_branch_slope(a, 0.25, bp()).unwrap().abs() < 1e-12);
        // theta_max end.
        let slope = arc_branch_slope(a, a.half_area(), bp()).unwrap();
        assert!((slope - bp().theta_max().sin() / 0.5).abs() < 1e-9);

        // Interior: centered finite difference of the arc branch.
        let t = 0.3;
        let h = 1e-6;
        let f = |t: f64| evaluate(a, t, bp()).unwrap().perimeter;
        let fd = (f(t + h) - f(t - h)) / (2.0 * h);
        let analytic = arc_branch_slope(a, t, bp()).unwrap();
        assert!(
            ((fd - analytic) / analytic).abs() < 1e-6,
            "fd {fd} vs analytic {analytic}"
        );

        // Off the branch.
        assert!(matches!(
            arc_branch_slope(a, 0.1, bp()),
            Err(Error::NotOnArcBranch { .. })
        ));
        assert!(matches!(
            arc_branch_slope(notch(0.05), 0.3, bp()),
            Err(Error::NotOnArcBranch { .. })
        ));
    }

    #[test]
    fn sqrt_bound_examples() {
        let d = sqrt_pi_dominates(notch(0.0), 0.2, bp()).unwrap();
        assert!(d.holds && !d.strict);
        let d = sqrt_pi_dominates(notch(0.0), 0.4, bp()).unwrap();
        assert!(d.holds && d.strict);
        let d = sqrt_pi_dominates(notch(0.5), 0.35, bp()).unwrap();
        assert!(d.holds && d.strict);
        assert!(sqrt_pi_dominates(notch(0.9), 0.1, bp()).is_err());
    }

    #[test]
    fn square_profile_regression() {
        // At a = 0 the profile is the two-branch square profile.
        let a = notch(0.0);
        for i in 1..=200 {
            let t = 0.5 * f64::from(i) / 200.0;
            let p = evaluate(a, t, bp()).unwrap();
            let expected = if t <= 1.0 / PI { (PI * t).sqrt() } else { 1.0 };
            assert!(
                (p.perimeter - expected).abs() < 1e-12,
                "t={t}: {} vs {expected}",
                p.perimeter
            );
        }
    }
}
