//! Candidate regions in the notched square and their exact area and
//! relative-perimeter formulas.
//!
//! The domain `Q_a = [0,1]^2 \ [0,a)^2` has five convex corners and one
//! non-convex corner at `(a, a)`. Every function here is a pure closed-form
//! evaluation; nothing in this module performs root-finding. Where an
//! operation depends on the maximal arc angle, that angle is passed in by
//! the caller (see [`crate::solvers`]).
//!
//! Relative perimeter counts only boundary drawn through the interior of
//! the domain; wall segments are free.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};
use std::fmt;

use crate::Error;

/// Absolute slack for feasibility comparisons at region boundaries.
///
/// A region whose defining area sits exactly on a boundary (for example
/// `t = a(1-a)` for the short chord) counts as feasible within this slack.
pub const FEASIBILITY_SLACK: f64 = 1e-12;

/// Slack allowed above the maximal arc angle in the validating evaluators.
pub const THETA_SLACK: f64 = 1e-9;

/// Notch size `a` of the domain `Q_a = [0,1]^2 \ [0,a)^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NotchParam(f64);

impl NotchParam {
    /// Requires `0 <= a < 1`.
    pub fn new(a: f64) -> Result<Self, Error> {
        if a.is_finite() && (0.0..1.0).contains(&a) {
            Ok(NotchParam(a))
        } else {
            Err(Error::Domain {
                name: "a",
                value: a,
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Total area of the domain, `1 - a^2`.
    pub fn domain_area(self) -> f64 {
        1.0 - self.0 * self.0
    }

    /// Half the domain area, `(1 - a^2)/2`; the largest area the profile
    /// is evaluated at (larger areas are handled by complementation).
    pub fn half_area(self) -> f64 {
        0.5 * self.domain_area()
    }
}

/// The five convex corners of the domain, identified by position.
///
/// The non-convex corner `(a, a)` is deliberately absent: quarter disks are
/// not placed there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    /// `(1, 1)`.
    TopRight,
    /// `(1, 0)`.
    BottomRight,
    /// `(0, 1)`.
    TopLeft,
    /// `(a, 0)`, where the bottom wall meets the vertical notch wall.
    NotchBottom,
    /// `(0, a)`, where the left wall meets the horizontal notch wall.
    NotchLeft,
}

impl Corner {
    pub const ALL: [Corner; 5] = [
        Corner::TopRight,
        Corner::BottomRight,
        Corner::TopLeft,
        Corner::NotchBottom,
        Corner::NotchLeft,
    ];

    /// Largest radius of a quarter disk seated in this corner that stays
    /// inside `Q_a` and keeps both arc endpoints on the adjacent walls.
    ///
    /// At `(1,1)` the radius is limited by the far walls and by the
    /// non-convex corner at distance `sqrt(2) (1-a)`; at the wall corners it
    /// is limited by the shorter adjacent wall.
    pub fn max_quarter_radius(self, a: NotchParam) -> f64 {
        let av = a.value();
        match self {
            Corner::TopRight => 1.0_f64.min(SQRT_2 * (1.0 - av)),
            Corner::BottomRight | Corner::TopLeft => 1.0 - av,
            Corner::NotchBottom | Corner::NotchLeft => {
                if av == 0.0 {
                    // Degenerate notch: both corners coincide with the
                    // square's own corner at the origin.
                    1.0
                } else {
                    av.min(1.0 - av)
                }
            }
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Corner::TopRight => "top_right",
            Corner::BottomRight => "bottom_right",
            Corner::TopLeft => "top_left",
            Corner::NotchBottom => "notch_bottom",
            Corner::NotchLeft => "notch_left",
        };
        f.write_str(s)
    }
}

/// Every region shape the minimization is compared against.
///
/// The first four kinds are the ones that can actually minimize; the circle
/// kinds and two-part unions exist so the oracle can demonstrate they lose.
#[derive(Debug, Clone, PartialEq)]
pub enum CandidateRegion {
    /// Quarter disk seated in a convex corner, both arc endpoints meeting
    /// the walls at right angles.
    QuarterDisk { radius: f64, corner: Corner },
    /// Region cut off by a straight chord of length 1 parallel to a long
    /// wall, at distance `area` from it.
    UnitChord { area: f64 },
    /// Region cut off by a straight chord of length `1 - a` between the
    /// vertical notch wall and the right wall; exists only for
    /// `area <= a(1-a)`.
    NotchChord { area: f64 },
    /// Circular arc from the non-convex corner `(a, a)` to a wall of
    /// length 1, meeting that wall at a right angle. `theta` is the central
    /// angle; `reflected` selects which of the two symmetric walls the arc
    /// ends on (the two choices are congruent).
    CornerArc { theta: f64, reflected: bool },
    /// Free-floating disk.
    FullCircle { radius: f64 },
    /// Half disk with its flat side on a wall.
    Semicircle { radius: f64 },
    /// Three-quarter disk centred on the non-convex corner.
    ThreeQuarterCircle { radius: f64 },
    /// Quarter disk centred on the origin whose arc encloses the whole
    /// notch; the notch area is excluded from the region.
    NotchQuarterCircle { radius: f64 },
    /// Disconnected candidate; compared purely by summed area and summed
    /// perimeter, placement is abstract.
    Union(Vec<CandidateRegion>),
}

/// Discriminant of [`CandidateRegion`], used for minimizer classification
/// and report output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionKind {
    QuarterDisk,
    UnitChord,
    NotchChord,
    CornerArc,
    FullCircle,
    Semicircle,
    ThreeQuarterCircle,
    NotchQuarterCircle,
    Union,
}

impl RegionKind {
    pub fn label(self) -> &'static str {
        match self {
            RegionKind::QuarterDisk => "quarter_disk",
            RegionKind::UnitChord => "unit_chord",
            RegionKind::NotchChord => "notch_chord",
            RegionKind::CornerArc => "corner_arc",
            RegionKind::FullCircle => "full_circle",
            RegionKind::Semicircle => "semicircle",
            RegionKind::ThreeQuarterCircle => "three_quarter_circle",
            RegionKind::NotchQuarterCircle => "notch_quarter_circle",
            RegionKind::Union => "union",
        }
    }
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl CandidateRegion {
    pub fn kind(&self) -> RegionKind {
        match self {
            CandidateRegion::QuarterDisk { .. } => RegionKind::QuarterDisk,
            CandidateRegion::UnitChord { .. } => RegionKind::UnitChord,
            CandidateRegion::NotchChord { .. } => RegionKind::NotchChord,
            CandidateRegion::CornerArc { .. } => RegionKind::CornerArc,
            CandidateRegion::FullCircle { .. } => RegionKind::FullCircle,
            CandidateRegion::Semicircle { .. } => RegionKind::Semicircle,
            CandidateRegion::ThreeQuarterCircle { .. } => RegionKind::ThreeQuarterCircle,
            CandidateRegion::NotchQuarterCircle { .. } => RegionKind::NotchQuarterCircle,
            CandidateRegion::Union(_) => RegionKind::Union,
        }
    }
}

/// `x - sin x`, evaluated without catastrophic cancellation near zero.
///
/// The closed-form arc area and the unit-perimeter area both reduce to this
/// difference, whose leading term is `x^3/6`.
pub(crate) fn x_minus_sin(x: f64) -> f64 {
    if x.abs() >= 0.5 {
        return x - x.sin();
    }
    let x2 = x * x;
    let mut term = x * x2 / 6.0;
    let mut sum = term;
    let mut k = 1u32;
    while term.abs() > f64::EPSILON * sum.abs() && k < 20 {
        let n = (2 * k + 2) as f64;
        term *= -x2 / (n * (n + 1.0));
        sum += term;
        k += 1;
    }
    sum
}

/// Relative perimeter of the corner arc at central angle `theta`, with the
/// continuous extension `1 - a` at `theta = 0`.
pub(crate) fn arc_perimeter_raw(a: NotchParam, theta: f64) -> f64 {
    let edge = 1.0 - a.value();
    if theta == 0.0 {
        edge
    } else {
        edge * theta / theta.sin()
    }
}

/// Area of the corner-arc region at central angle `theta`, with the
/// continuous extension `a(1 - a)` at `theta = 0`.
pub(crate) fn arc_area_raw(a: NotchParam, theta: f64) -> f64 {
    let av = a.value();
    let edge = 1.0 - av;
    if theta == 0.0 {
        return av * edge;
    }
    let s = theta.sin();
    // (1-a)^2 (theta - sin(theta) cos(theta)) / (2 sin^2(theta)) + a(1-a)
    av * edge + edge * edge * x_minus_sin(2.0 * theta) / (4.0 * s * s)
}

fn check_theta(theta: f64, theta_max: f64) -> Result<(), Error> {
    if !theta.is_finite() || theta < 0.0 || theta > theta_max + THETA_SLACK {
        Err(Error::Domain {
            name: "theta",
            value: theta,
        })
    } else {
        Ok(())
    }
}

/// Relative perimeter `(1-a) theta / sin(theta)` of the corner-arc region.
///
/// `theta_max` caps the admissible angle (the angle at which the arc
/// encloses half the domain); it comes from
/// [`crate::solvers::solve_theta_max`].
pub fn corner_arc_perimeter(a: NotchParam, theta: f64, theta_max: f64) -> Result<f64, Error> {
    check_theta(theta, theta_max)?;
    Ok(arc_perimeter_raw(a, theta))
}

/// Area enclosed by the corner-arc region at central angle `theta`.
pub fn corner_arc_area(a: NotchParam, theta: f64, theta_max: f64) -> Result<f64, Error> {
    check_theta(theta, theta_max)?;
    Ok(arc_area_raw(a, theta))
}

/// Largest radius of a free disk that fits inside `Q_a`.
///
/// For small notches the inscribed disk of the square still fits; beyond
/// that the disk is pinned by two far walls and the non-convex corner.
pub fn max_disk_radius(a: NotchParam) -> f64 {
    let av = a.value();
    let threshold = (2.0 - SQRT_2) / 4.0;
    if av <= threshold {
        0.5
    } else {
        (2.0 - SQRT_2) * (1.0 - av)
    }
}

/// Whether the region's parameters place it inside `Q_a` with the required
/// wall contact. Boundary cases count as feasible within
/// [`FEASIBILITY_SLACK`].
pub fn feasible(a: NotchParam, region: &CandidateRegion) -> bool {
    let av = a.value();
    let eps = FEASIBILITY_SLACK;
    match region {
        CandidateRegion::QuarterDisk { radius, corner } => {
            radius.is_finite() && *radius > 0.0 && *radius <= corner.max_quarter_radius(a) + eps
        }
        CandidateRegion::UnitChord { area } => {
            area.is_finite() && *area > 0.0 && *area <= (1.0 - av) + eps
        }
        CandidateRegion::NotchChord { area } => {
            av > 0.0 && area.is_finite() && *area > 0.0 && *area <= av * (1.0 - av) + eps
        }
        CandidateRegion::CornerArc { theta, .. } => {
            theta.is_finite()
                && *theta >= 0.0
                && *theta < FRAC_PI_2
                && arc_area_raw(a, *theta) <= a.half_area() + eps
        }
        CandidateRegion::FullCircle { radius } => {
            radius.is_finite() && *radius > 0.0 && *radius <= max_disk_radius(a) + eps
        }
        CandidateRegion::Semicircle { radius } => {
            radius.is_finite() && *radius > 0.0 && *radius <= 0.5_f64.min(1.0 - av) + eps
        }
        CandidateRegion::ThreeQuarterCircle { radius } => {
            av > 0.0 && radius.is_finite() && *radius > 0.0 && *radius <= av.min(1.0 - av) + eps
        }
        CandidateRegion::NotchQuarterCircle { radius } => {
            av > 0.0
                && radius.is_finite()
                && *radius >= SQRT_2 * av - eps
                && *radius <= 1.0 + eps
                && PI * radius * radius / 4.0 - av * av > 0.0
        }
        CandidateRegion::Union(parts) => {
            parts.len() >= 2
                && parts
                    .iter()
                    .all(|p| !matches!(p, CandidateRegion::Union(_)) && feasible(a, p))
        }
    }
}

fn area_perimeter_unchecked(a: NotchParam, region: &CandidateRegion) -> (f64, f64) {
    let av = a.value();
    match region {
        CandidateRegion::QuarterDisk { radius, .. } => {
            (PI * radius * radius / 4.0, PI * radius / 2.0)
        }
        CandidateRegion::UnitChord { area } => (*area, 1.0),
        CandidateRegion::NotchChord { area } => (*area, 1.0 - av),
        CandidateRegion::CornerArc { theta, .. } => {
            (arc_area_raw(a, *theta), arc_perimeter_raw(a, *theta))
        }
        CandidateRegion::FullCircle { radius } => (PI * radius * radius, 2.0 * PI * radius),
        CandidateRegion::Semicircle { radius } => (PI * radius * radius / 2.0, PI * radius),
        CandidateRegion::ThreeQuarterCircle { radius } => {
            (3.0 * PI * radius * radius / 4.0, 3.0 * PI * radius / 2.0)
        }
        CandidateRegion::NotchQuarterCircle { radius } => {
            (PI * radius * radius / 4.0 - av * av, PI * radius / 2.0)
        }
        CandidateRegion::Union(parts) => parts
            .iter()
            .map(|p| area_perimeter_unchecked(a, p))
            .fold((0.0, 0.0), |(ta, tp), (pa, pp)| (ta + pa, tp + pp)),
    }
}

/// Exact `(area, relative perimeter)` of a feasible region; unions report
/// component-wise sums.
pub fn region_area_perimeter(a: NotchParam, region: &CandidateRegion) -> Result<(f64, f64), Error> {
    if !feasible(a, region) {
        return Err(Error::InfeasibleRegion);
    }
    Ok(area_perimeter_unchecked(a, region))
}

/// Smaller area cut from a disk of radius `radius` by a chord of length
/// `chord`.
pub fn circular_segment_area(radius: f64, chord: f64) -> Result<f64, Error> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::Domain {
            name: "radius",
            value: radius,
        });
    }
    if !(chord.is_finite() && (0.0..=2.0 * radius).contains(&chord)) {
        return Err(Error::Domain {
            name: "chord",
            value: chord,
        });
    }
    let half_angle = (chord / (2.0 * radius)).asin();
    Ok(0.5 * radius * radius * x_minus_sin(2.0 * half_angle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn notch(a: f64) -> NotchParam {
        NotchParam::new(a).unwrap()
    }

    const THETA_MAX_REF: f64 = 1.206005571956763; // frozen from the solver tests

    /// Quadrature oracle: the arc region really is the set under the circle
    /// of radius (1-a)/sin(theta) centred on the far wall, so its area can
    /// be integrated directly.
    fn arc_area_by_quadrature(a: f64, theta: f64) -> f64 {
        let r = (1.0 - a) / theta.sin();
        let yc = a - r * theta.cos();
        let height = |x: f64| yc + (r * r - (x - 1.0) * (x - 1.0)).sqrt();
        // Composite Simpson over [a, 1].
        let n = 20_000;
        let h = (1.0 - a) / n as f64;
        let mut acc = height(a) + height(1.0);
        for i in 1..n {
            let x = a + i as f64 * h;
            acc += height(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        acc * h / 3.0
    }

    #[test]
    fn notch_param_domain() {
        assert!(NotchParam::new(0.0).is_ok());
        assert!(NotchParam::new(0.999).is_ok());
        assert!(NotchParam::new(1.0).is_err());
        assert!(NotchParam::new(-0.1).is_err());
        assert!(NotchParam::new(f64::NAN).is_err());
        let a = notch(0.3);
        assert!((a.domain_area() - 0.91).abs() < 1e-15);
        assert!((a.half_area() - 0.455).abs() < 1e-15);
    }

    #[test]
    fn arc_extensions_at_zero_angle() {
        let a = notch(0.3);
        assert_eq!(corner_arc_perimeter(a, 0.0, THETA_MAX_REF).unwrap(), 0.7);
        assert!((corner_arc_area(a, 0.0, THETA_MAX_REF).unwrap() - 0.21).abs() < 1e-15);
    }

    #[test]
    fn arc_perimeter_matches_direct_substitution() {
        let a = notch(0.0);
        let p = corner_arc_perimeter(a, std::f64::consts::FRAC_PI_4, THETA_MAX_REF).unwrap();
        let expected = std::f64::consts::FRAC_PI_4 / std::f64::consts::FRAC_PI_4.sin();
        assert!((p - expected).abs() < 1e-15);
        assert!((p - 1.1107207345395915).abs() < 1e-12);

        let p2 = corner_arc_perimeter(notch(0.1), 1.0, THETA_MAX_REF).unwrap();
        // High-precision reference: 0.9 / sin(1).
        assert!((p2 - 1.069_555_595_200_309).abs() < 1e-13);
    }

    #[test]
    fn arc_area_matches_quadrature() {
        for &(a, theta) in &[(0.0, 1.0), (0.3, 0.7), (0.6, 1.2), (0.1, 0.3)] {
            let formula = corner_arc_area(notch(a), theta, THETA_MAX_REF).unwrap();
            let quad = arc_area_by_quadrature(a, theta);
            assert!(
                (formula - quad).abs() < 1e-10,
                "a={a} theta={theta}: formula {formula} vs quadrature {quad}"
            );
        }
        // Frozen value for (a=0, theta=1), cross-checked at 30 digits.
        let v = corner_arc_area(notch(0.0), 1.0, THETA_MAX_REF).unwrap();
        assert!((v - 0.3850951557515306).abs() < 1e-14);
    }

    #[test]
    fn arc_continuity_into_zero() {
        // The perimeter deviates from its extension at rate O(theta^2); the
        // area at exact linear rate (1-a)^2/3, so its deviation at 1e-4 is
        // ~3.3e-5 and shrinks tenfold per decade of theta.
        for &a in &[0.0, 0.2, 0.5, 0.9] {
            let n = notch(a);
            let edge = 1.0 - a;
            assert!((arc_perimeter_raw(n, 1e-4) - arc_perimeter_raw(n, 0.0)).abs() < 1e-6);
            let d4 = (arc_area_raw(n, 1e-4) - arc_area_raw(n, 0.0)).abs();
            assert!(d4 < 1.5 * edge * edge * 1e-4 / 3.0);
            let d5 = (arc_area_raw(n, 1e-5) - arc_area_raw(n, 0.0)).abs();
            assert!(d5 < 0.2 * d4, "deviation must vanish with theta");
        }
    }

    #[test]
    fn arc_rejects_out_of_domain_angles() {
        let a = notch(0.2);
        assert!(corner_arc_perimeter(a, -1e-3, THETA_MAX_REF).is_err());
        assert!(corner_arc_perimeter(a, THETA_MAX_REF + 1e-3, THETA_MAX_REF).is_err());
        assert!(corner_arc_area(a, f64::NAN, THETA_MAX_REF).is_err());
        // Within slack of the cap is accepted.
        assert!(corner_arc_area(a, THETA_MAX_REF + 1e-12, THETA_MAX_REF).is_ok());
    }

    #[test]
    fn quarter_disk_closed_forms() {
        let a = notch(0.0);
        let region = CandidateRegion::QuarterDisk {
            radius: 0.5,
            corner: Corner::TopRight,
        };
        let (t, p) = region_area_perimeter(a, &region).unwrap();
        assert!((t - PI / 16.0).abs() < 1e-15);
        assert!((p - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn quarter_disk_isoperimetric_identity() {
        // perimeter^2 = pi * area for every feasible quarter disk.
        for &(a, r) in &[(0.0, 0.9), (0.3, 0.5), (0.6, 0.2), (0.2, 0.15)] {
            let n = notch(a);
            for corner in Corner::ALL {
                let region = CandidateRegion::QuarterDisk { radius: r, corner };
                if let Ok((t, p)) = region_area_perimeter(n, &region) {
                    assert!((p * p - PI * t).abs() < 1e-14 * (1.0 + p * p));
                }
            }
        }
    }

    #[test]
    fn chord_regions() {
        let a = notch(0.2);
        let (t, p) = region_area_perimeter(a, &CandidateRegion::UnitChord { area: 0.3 }).unwrap();
        assert_eq!((t, p), (0.3, 1.0));

        let a = notch(0.3);
        let (t, p) = region_area_perimeter(a, &CandidateRegion::NotchChord { area: 0.2 }).unwrap();
        assert_eq!(t, 0.2);
        assert!((p - 0.7).abs() < 1e-15);
        // Beyond a(1-a) = 0.21 the short chord cannot exist.
        assert!(region_area_perimeter(a, &CandidateRegion::NotchChord { area: 0.22 }).is_err());
    }

    #[test]
    fn notch_quarter_circle_closed_form() {
        let a = notch(0.6);
        let region = CandidateRegion::NotchQuarterCircle { radius: 0.7 };
        assert!(
            !feasible(a, &region),
            "0.7 < sqrt(2)*0.6, arc crosses the notch"
        );
        let a = notch(0.4);
        let (t, p) = region_area_perimeter(a, &region).unwrap();
        assert!((t - (PI * 0.49 / 4.0 - 0.16)).abs() < 1e-15);
        assert!((p - PI * 0.35).abs() < 1e-15);
        // perimeter^2 = pi (t + a^2) for this family.
        assert!((p * p - PI * (t + 0.16)).abs() < 1e-14);
    }

    #[test]
    fn feasibility_examples() {
        // Quarter disk bound: t = 0.5 needs radius sqrt(2/pi) ~ 0.798, but the
        // best corner allows only sqrt(2)*(1-0.5) ~ 0.707.
        let a = notch(0.5);
        let r = 2.0 * (0.5_f64 / PI).sqrt();
        assert!(!feasible(
            a,
            &CandidateRegion::QuarterDisk {
                radius: r,
                corner: Corner::TopRight
            }
        ));

        // Short chord: t = 0.2 < a(1-a) = 0.21 at a = 0.3.
        assert!(feasible(
            notch(0.3),
            &CandidateRegion::NotchChord { area: 0.2 }
        ));

        // Corner arc exists only for t >= a(1-a); t = 0.1 < 0.21 has no angle,
        // and every admissible angle yields at least a(1-a).
        let n = notch(0.3);
        for theta in [0.0, 0.4, 0.9, 1.2] {
            assert!(arc_area_raw(n, theta) >= 0.21 - 1e-15);
        }

        // Boundary slack: the short chord exactly at a(1-a) is feasible.
        assert!(feasible(
            notch(0.3),
            &CandidateRegion::NotchChord { area: 0.21 }
        ));
    }

    #[test]
    fn corner_radius_bounds() {
        let a = notch(0.3);
        assert!((Corner::TopRight.max_quarter_radius(a) - SQRT_2 * 0.7).abs() < 1e-15);
        assert!((Corner::BottomRight.max_quarter_radius(a) - 0.7).abs() < 1e-15);
        assert!((Corner::NotchBottom.max_quarter_radius(a) - 0.3).abs() < 1e-15);
        // Degenerate notch: all corners are square corners.
        let z = notch(0.0);
        assert_eq!(Corner::NotchBottom.max_quarter_radius(z), 1.0);
        assert_eq!(Corner::TopRight.max_quarter_radius(z), 1.0);
    }

    #[test]
    fn inscribed_disk_radius() {
        assert_eq!(max_disk_radius(notch(0.0)), 0.5);
        assert_eq!(max_disk_radius(notch(0.1)), 0.5);
        let threshold = (2.0 - SQRT_2) / 4.0;
        let r = max_disk_radius(notch(threshold + 1e-9));
        assert!((r - 0.5).abs() < 1e-8);
        assert!(max_disk_radius(notch(0.5)) < 0.5);
    }

    #[test]
    fn segment_area_endpoints() {
        assert_eq!(circular_segment_area(1.0, 0.0).unwrap(), 0.0);
        let half = circular_segment_area(1.0, 2.0).unwrap();
        assert!((half - FRAC_PI_2).abs() < 1e-12);
        assert!(circular_segment_area(1.0, 2.0 + 1e-9).is_err());
        assert!(circular_segment_area(0.0, 0.0).is_err());
    }

    #[test]
    fn segment_area_cubic_leading_term() {
        // g(l) ~ l^3 / (12 r) for small chords.
        let g = circular_segment_area(1.0, 0.01).unwrap();
        assert!((g - 8.3333958341704e-8).abs() < 1e-17);
        assert!((g / (0.01f64.powi(3) / 12.0) - 1.0).abs() < 1e-4);
        let g2 = circular_segment_area(2.0, 0.01).unwrap();
        assert!((g2 / (0.01f64.powi(3) / 24.0) - 1.0).abs() < 1e-4);
    }

    #[test]
    fn segment_area_matches_quadrature() {
        // Integrate the strip between the chord and the arc directly.
        for &(r, chord) in &[(1.0f64, 1.2f64), (1.0, 0.4), (2.0, 3.0), (0.5, 0.9)] {
            let half_chord = chord / 2.0;
            let height = (r * r - half_chord * half_chord).sqrt();
            let strip = |x: f64| (r * r - x * x).sqrt() - height;
            let n = 20_000;
            let h = chord / n as f64;
            let mut acc = strip(-half_chord) + strip(half_chord);
            for i in 1..n {
                let x = -half_chord + i as f64 * h;
                acc += strip(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
            }
            let quad = acc * h / 3.0;
            let formula = circular_segment_area(r, chord).unwrap();
            assert!(
                (formula - quad).abs() < 1e-8,
                "r={r} chord={chord}: {formula} vs {quad}"
            );
        }
    }

    #[test]
    fn x_minus_sin_series_agrees_with_direct() {
        for &x in &[1e-8, 1e-4, 0.01, 0.3, 0.499, 0.5, 1.0, 2.5] {
            let series = x_minus_sin(x);
            // Direct evaluation is accurate for moderate x.
            if x >= 0.3 {
                assert!((series - (x - x.sin())).abs() < 1e-15 * (1.0 + series.abs()));
            }
            // Leading-order behaviour.
            if x <= 0.01 {
                assert!((series / (x * x * x / 6.0) - 1.0).abs() < 1e-4);
            }
        }
    }

    #[test]
    fn union_requires_connected_feasible_parts() {
        let a = notch(0.3);
        let fine = CandidateRegion::Union(vec![
            CandidateRegion::UnitChord { area: 0.1 },
            CandidateRegion::NotchChord { area: 0.05 },
        ]);
        assert!(feasible(a, &fine));
        let nested =
            CandidateRegion::Union(vec![CandidateRegion::UnitChord { area: 0.1 }, fine.clone()]);
        assert!(!feasible(a, &nested));
        let (t, p) = region_area_perimeter(a, &fine).unwrap();
        assert!((t - 0.15).abs() < 1e-15);
        assert!((p - 1.7).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn union_is_additive(
            a in 0.05f64..0.9,
            t1 in 0.01f64..0.2,
            t2 in 0.01f64..0.2,
            r in 0.01f64..0.2,
        ) {
            let n = notch(a);
            let parts = vec![
                CandidateRegion::UnitChord { area: t1 },
                CandidateRegion::UnitChord { area: t2 },
                CandidateRegion::QuarterDisk { radius: r.min(Corner::TopRight.max_quarter_radius(n)), corner: Corner::TopRight },
            ];
            let whole = CandidateRegion::Union(parts.clone());
            prop_assume!(feasible(n, &whole));
            let (ta, tp) = region_area_perimeter(n, &whole).unwrap();
            let mut sa = 0.0;
            let mut sp = 0.0;
            for part in &parts {
                let (pa, pp) = region_area_perimeter(n, part).unwrap();
                sa += pa;
                sp += pp;
            }
            prop_assert!((ta - sa).abs() < 1e-12);
            prop_assert!((tp - sp).abs() < 1e-12);
        }

        #[test]
        fn segment_area_monotone_in_chord(c1 in 0.0f64..1.9, dc in 1e-6f64..0.1) {
            let g1 = circular_segment_area(1.0, c1).unwrap();
            let g2 = circular_segment_area(1.0, (c1 + dc).min(2.0)).unwrap();
            prop_assert!(g2 >= g1);
        }
    }
}
