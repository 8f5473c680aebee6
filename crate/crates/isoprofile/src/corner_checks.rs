//! Numeric verification of the corner-avoiding deformation.
//!
//! Setting: a boundary curve leaves a convex corner `K` at angle
//! `theta` with one of the walls. Retreating along the wall by `epsilon`
//! and rising by a computed offset `w` produces a polyline with the same
//! enclosed area; for small `epsilon` it is strictly shorter, which is why
//! minimizing boundaries avoid convex corners.
//!
//! Coordinates used throughout (the wall lies on the positive x-axis):
//!
//! * `K = (0, 0)`: the corner;
//! * `P = (l cos(theta), l sin(theta))`: far end of the boundary segment;
//! * `A = (epsilon, 0)`: retreat point on the wall;
//! * `C = (epsilon, epsilon tan(theta))`: the crossing of `KP` with the
//!   vertical through `A`;
//! * `B = (epsilon, epsilon tan(theta) + w)`: chosen so the triangle cut
//!   off at the corner and the triangle added above `C` have equal area.

use crate::geometry::circular_segment_area;
use crate::solvers::{find_root, SolverConfig};
use crate::Error;

/// A corner-avoiding deformation with derived vertical offset `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerDeformation {
    /// Angle at the corner between the boundary segment and the wall,
    /// in `(0, pi/2)`.
    pub theta: f64,
    /// Length of the boundary segment from the corner.
    pub ell: f64,
    /// Retreat distance along the wall, in `(0, ell cos(theta))`.
    pub epsilon: f64,
    width: f64,
}

impl CornerDeformation {
    pub fn new(theta: f64, ell: f64, epsilon: f64) -> Result<Self, Error> {
        let width = deformation_width(theta, ell, epsilon)?;
        Ok(CornerDeformation {
            theta,
            ell,
            epsilon,
            width,
        })
    }

    /// The equal-area vertical offset `w`.
    pub fn width(&self) -> f64 {
        self.width
    }

    /// Vertices `(K, A, B, C, P)` of the deformation.
    pub fn points(&self) -> DeformationPoints {
        deformation_points(self.theta, self.ell, self.epsilon, self.width)
    }
}

/// The five construction points of the deformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationPoints {
    pub k: [f64; 2],
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub c: [f64; 2],
    pub p: [f64; 2],
}

fn validate(theta: f64, ell: f64, epsilon: f64) -> Result<(), Error> {
    if !(theta.is_finite() && theta > 0.0 && theta < std::f64::consts::FRAC_PI_2) {
        return Err(Error::Domain {
            name: "theta",
            value: theta,
        });
    }
    if !(ell.is_finite() && ell > 0.0) {
        return Err(Error::Domain {
            name: "ell",
            value: ell,
        });
    }
    if !(epsilon.is_finite() && epsilon > 0.0 && epsilon < ell * theta.cos()) {
        return Err(Error::Domain {
            name: "epsilon",
            value: epsilon,
        });
    }
    Ok(())
}

fn deformation_points(theta: f64, ell: f64, epsilon: f64, width: f64) -> DeformationPoints {
    let rise = epsilon * theta.tan();
    DeformationPoints {
        k: [0.0, 0.0],
        a: [epsilon, 0.0],
        b: [epsilon, rise + width],
        c: [epsilon, rise],
        p: [ell * theta.cos(), ell * theta.sin()],
    }
}

/// The vertical offset `w = epsilon^2 tan(theta) / (l cos(theta) - epsilon)`
/// that balances the areas of the corner triangle `ACK` and the added
/// triangle `BCP`.
pub fn deformation_width(theta: f64, ell: f64, epsilon: f64) -> Result<f64, Error> {
    validate(theta, ell, epsilon)?;
    Ok(epsilon * epsilon * theta.tan() / (ell * theta.cos() - epsilon))
}

/// Margin of the strict-improvement inequality
/// `2 eps^2 tan(theta) < eps (l - eps sec(theta)) (1 - sin(theta))`:
/// right side minus left side.
pub fn strict_improvement_margin(theta: f64, ell: f64, epsilon: f64) -> Result<f64, Error> {
    validate(theta, ell, epsilon)?;
    let lhs = 2.0 * epsilon * epsilon * theta.tan();
    let rhs = epsilon * (ell - epsilon / theta.cos()) * (1.0 - theta.sin());
    Ok(rhs - lhs)
}

/// Whether the deformation strictly shortens the boundary. Guaranteed for
/// all sufficiently small `epsilon` at fixed `(theta, ell)`.
pub fn strict_improvement(theta: f64, ell: f64, epsilon: f64) -> Result<bool, Error> {
    Ok(strict_improvement_margin(theta, ell, epsilon)? > 0.0)
}

fn dist(p: [f64; 2], q: [f64; 2]) -> f64 {
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
}

/// Length saved by the deformation, `|KP| - (|AB| + |BP|)`, from the
/// explicit coordinates. Positive whenever [`strict_improvement`] holds;
/// zero at `epsilon = 0`.
pub fn polyline_perimeter_gain(theta: f64, ell: f64, epsilon: f64) -> Result<f64, Error> {
    if epsilon == 0.0 {
        // Identity deformation.
        if theta > 0.0 && theta < std::f64::consts::FRAC_PI_2 && ell > 0.0 {
            return Ok(0.0);
        }
        return Err(Error::Domain {
            name: "theta",
            value: theta,
        });
    }
    let width = deformation_width(theta, ell, epsilon)?;
    let pts = deformation_points(theta, ell, epsilon, width);
    let kp = dist(pts.k, pts.p);
    let ab = dist(pts.a, pts.b);
    let bp = dist(pts.b, pts.p);
    Ok(kp - (ab + bp))
}

/// Largest retreat distance below which the strict-improvement inequality
/// holds, located by a bracketed solve on its margin. Always positive.
pub fn improvement_threshold(theta: f64, ell: f64, cfg: &SolverConfig) -> Result<f64, Error> {
    if !(theta.is_finite() && theta > 0.0 && theta < std::f64::consts::FRAC_PI_2) {
        return Err(Error::Domain {
            name: "theta",
            value: theta,
        });
    }
    if !(ell.is_finite() && ell > 0.0) {
        return Err(Error::Domain {
            name: "ell",
            value: ell,
        });
    }
    let cap = ell * theta.cos();
    // Margin is positive for small eps and negative as eps approaches the
    // geometric cap, where the construction degenerates.
    let margin = |eps: f64| {
        let lhs = 2.0 * eps * eps * theta.tan();
        let rhs = eps * (ell - eps / theta.cos()) * (1.0 - theta.sin());
        rhs - lhs
    };
    find_root(margin, 1e-15 * cap, cap * (1.0 - 1e-12), cfg)
}

/// Scaled improvement check for a circular arc leaving the corner.
///
/// The arc is normalized to unit radius; `ell in (0, 2]` is the secant
/// length from the corner, `theta1` the larger of the wall angles made by
/// the secant and the tangent at the corner (with `0 <= theta < theta1`),
/// and `epsilon = lambda ell`. The area between arc and secant is taken
/// with the unfavourable sign and bounded by the exact segment area, so the
/// check is rigorous rather than asymptotic: it returns true iff
/// `segment_area / ell^2 < lambda (1 - sin(theta1)) - lambda^2 sec(theta1) (1 + sin(theta1))`.
pub fn arc_improvement(theta: f64, theta1: f64, ell: f64, lambda: f64) -> Result<bool, Error> {
    if !(theta.is_finite() && theta1.is_finite() && 0.0 <= theta && theta < theta1)
        || theta1 >= std::f64::consts::FRAC_PI_2
    {
        return Err(Error::Domain {
            name: "theta1",
            value: theta1,
        });
    }
    if !(lambda.is_finite() && lambda > 0.0 && lambda < 1.0) {
        return Err(Error::Domain {
            name: "lambda",
            value: lambda,
        });
    }
    if !(ell.is_finite() && ell > 0.0 && ell <= 2.0) {
        return Err(Error::Domain {
            name: "ell",
            value: ell,
        });
    }
    let delta = circular_segment_area(1.0, ell)?;
    let s1 = theta1.sin();
    let rhs = lambda * (1.0 - s1) - lambda * lambda * (1.0 + s1) / theta1.cos();
    Ok(delta / (ell * ell) < rhs)
}

/// Largest `lambda` for which the right-hand side of the scaled inequality
/// is positive: `(1 - sin(theta1)) cos(theta1) / (1 + sin(theta1))`.
pub fn lambda_positivity_cap(theta1: f64) -> Result<f64, Error> {
    if !(theta1.is_finite() && theta1 > 0.0 && theta1 < std::f64::consts::FRAC_PI_2) {
        return Err(Error::Domain {
            name: "theta1",
            value: theta1,
        });
    }
    Ok((1.0 - theta1.sin()) * theta1.cos() / (1.0 + theta1.sin()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    /// Shoelace triangle area, independent of the width formula.
    fn triangle_area(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> f64 {
        0.5 * ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])).abs()
    }

    #[test]
    fn width_by_direct_substitution() {
        let w = deformation_width(FRAC_PI_4, 1.0, 0.1).unwrap();
        let expected = 0.01 / (0.5f64.sqrt() - 0.1);
        assert!((w - expected).abs() < 1e-15);
        // Vanishes with the angle.
        let w = deformation_width(1e-9, 1.0, 0.1).unwrap();
        assert!(w < 1e-8);
    }

    #[test]
    fn width_domain_errors() {
        assert!(deformation_width(0.0, 1.0, 0.1).is_err());
        assert!(deformation_width(FRAC_PI_4, 1.0, 0.0).is_err());
        // epsilon beyond l cos(theta).
        assert!(deformation_width(FRAC_PI_4, 1.0, 0.8).is_err());
        assert!(deformation_width(1.6, 1.0, 0.1).is_err());
    }

    #[test]
    fn equal_area_from_explicit_coordinates() {
        let d = CornerDeformation::new(0.6, 2.0, 0.05).unwrap();
        let pts = d.points();
        let cut = triangle_area(pts.a, pts.c, pts.k);
        let added = triangle_area(pts.b, pts.c, pts.p);
        assert!(
            ((cut - added) / cut).abs() < 1e-12,
            "cut {cut} vs added {added}"
        );
    }

    #[test]
    fn improvement_small_epsilon_and_saturation() {
        assert!(strict_improvement(FRAC_PI_4, 1.0, 1e-3).unwrap());
        // Near the cap the right side collapses.
        let cap = (FRAC_PI_4).cos();
        assert!(!strict_improvement(FRAC_PI_4, 1.0, cap * 0.999).unwrap());
    }

    #[test]
    fn threshold_located_and_sign_flips() {
        let cfg = SolverConfig::default();
        let eps_star = improvement_threshold(1.0, 1.0, &cfg).unwrap();
        assert!(eps_star > 0.0 && eps_star < 1.0f64.cos());
        // Closed form for the margin's root: l cos(t) (1 - sin(t)) / (1 + sin(t)).
        let expected = 1.0f64.cos() * (1.0 - 1.0f64.sin()) / (1.0 + 1.0f64.sin());
        assert!((eps_star - expected).abs() < 1e-10);
        // Below the threshold the inequality holds and the polyline oracle
        // agrees the boundary got shorter.
        for frac in [0.1, 0.5, 0.99] {
            assert!(strict_improvement(1.0, 1.0, eps_star * frac).unwrap());
            assert!(polyline_perimeter_gain(1.0, 1.0, eps_star * frac).unwrap() > 0.0);
        }
        // The inequality is sufficient, not sharp: the gain itself flips sign
        // at some larger retreat, located by the same bracketed solve.
        let cap = 1.0f64.cos();
        let gain_flip = find_root(
            |eps| polyline_perimeter_gain(1.0, 1.0, eps).unwrap(),
            eps_star * 0.5,
            cap * (1.0 - 1e-9),
            &cfg,
        )
        .unwrap();
        assert!(gain_flip >= eps_star);
        let past = (gain_flip * 1.05).min(cap * (1.0 - 1e-12));
        assert!(polyline_perimeter_gain(1.0, 1.0, past).unwrap() < 0.0);
    }

    #[test]
    fn gain_zero_and_slope_at_origin() {
        assert_eq!(polyline_perimeter_gain(FRAC_PI_4, 1.0, 0.0).unwrap(), 0.0);
        assert!(polyline_perimeter_gain(FRAC_PI_4, 1.0, 1e-3).unwrap() > 0.0);
        // gain / eps tends to (1 - sin(theta)) sec(theta) > 0.
        for &theta in &[0.3, FRAC_PI_4, 1.2] {
            let eps = 1e-6;
            let slope = polyline_perimeter_gain(theta, 1.0, eps).unwrap() / eps;
            let expected = (1.0 - theta.sin()) / theta.cos();
            assert!(
                ((slope - expected) / expected).abs() < 1e-4,
                "theta={theta}: slope {slope} vs {expected}"
            );
        }
    }

    #[test]
    fn arc_improvement_examples() {
        // Small secant with a positive right side.
        assert!(arc_improvement(0.2, 0.8, 1e-3, 0.1).unwrap());
        // lambda -> 0 kills the right side while the segment term is fixed.
        assert!(!arc_improvement(0.2, 0.8, 0.5, 1e-6).unwrap());
        // Crossover in ell: true below, false above.
        let lambda = 0.1;
        let mut crossover = None;
        let mut prev = true;
        for i in 1..=2000 {
            let ell = 2.0 * f64::from(i) / 2000.0;
            let now = arc_improvement(0.2, 0.8, ell, lambda).unwrap();
            if prev && !now {
                crossover = Some(ell);
            }
            assert!(
                now == prev || (prev && !now),
                "improvement is monotone in ell"
            );
            prev = now;
        }
        let ell_star = crossover.expect("a crossover length exists");
        assert!(arc_improvement(0.2, 0.8, ell_star * 0.25, lambda).unwrap());

        assert!(arc_improvement(0.9, 0.8, 0.1, 0.1).is_err(), "angle order");
        assert!(arc_improvement(0.1, 0.8, 0.1, 1.5).is_err());
        assert!(arc_improvement(0.1, 0.8, 3.0, 0.1).is_err());
    }

    #[test]
    fn lambda_cap_marks_positivity() {
        for &theta1 in &[0.1, 0.5, 1.0, 1.4] {
            let cap = lambda_positivity_cap(theta1).unwrap();
            assert!(cap > 0.0);
            let s = theta1.sin();
            let rhs_at =
                |lambda: f64| lambda * (1.0 - s) - lambda * lambda * (1.0 + s) / theta1.cos();
            assert!(rhs_at(cap * 0.5) > 0.0);
            assert!(rhs_at(cap * 1.01) < 0.0);
        }
    }

    proptest! {
        #[test]
        fn equal_area_identity_random(
            theta in 0.05f64..1.5,
            ell in 0.1f64..5.0,
            frac in 0.01f64..0.95,
        ) {
            let epsilon = frac * ell * theta.cos();
            let d = CornerDeformation::new(theta, ell, epsilon).unwrap();
            let pts = d.points();
            let cut = triangle_area(pts.a, pts.c, pts.k);
            let added = triangle_area(pts.b, pts.c, pts.p);
            prop_assert!(((cut - added) / cut.max(1e-300)).abs() < 1e-10);
        }

        #[test]
        fn improvement_implies_positive_gain(
            theta in 0.05f64..1.5,
            ell in 0.1f64..5.0,
            frac in 0.001f64..0.9,
        ) {
            let epsilon = frac * ell * theta.cos();
            if strict_improvement(theta, ell, epsilon).unwrap() {
                let gain = polyline_perimeter_gain(theta, ell, epsilon).unwrap();
                prop_assert!(gain > 0.0, "gain {gain} with margin {}",
                    strict_improvement_margin(theta, ell, epsilon).unwrap());
            }
        }
    }
}
