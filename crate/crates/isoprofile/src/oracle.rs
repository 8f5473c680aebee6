//! Independent cross-check of the profile by candidate enumeration.
//!
//! For a given `(a, t)` the oracle builds every admissible region of area
//! exactly `t` from the full taxonomy (the four minimizing kinds, the
//! circle families that never win, and two-part disconnected unions) and
//! compares perimeters. It recomputes everything from [`crate::geometry`]
//! closed forms (plus the angle inversion); it never reads the piecewise
//! profile, so agreement between the two is a real check.
//!
//! Unions are limited to two parts: splitting off more components only
//! repeats the two-part comparison, so pairs are what could falsify the
//! scalar inequality. Parts are compared by area and perimeter alone;
//! placement is abstract.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::geometry::{
    arc_perimeter_raw, feasible, region_area_perimeter, CandidateRegion, Corner, NotchParam,
    RegionKind, FEASIBILITY_SLACK,
};
use crate::solvers::Breakpoints;
use crate::Error;

/// A candidate region together with its relative perimeter at the queried
/// area.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub region: CandidateRegion,
    pub perimeter: f64,
}

impl Candidate {
    pub fn kind(&self) -> RegionKind {
        self.region.kind()
    }
}

fn push_if_feasible(a: NotchParam, region: CandidateRegion, out: &mut Vec<Candidate>) {
    if feasible(a, &region) {
        // Feasibility was just checked.
        let (_, perimeter) = region_area_perimeter(a, &region).expect("feasible region");
        out.push(Candidate { region, perimeter });
    }
}

/// All feasible connected candidates of area exactly `t`.
fn connected_candidates(
    a: NotchParam,
    t: f64,
    bp: &Breakpoints,
    out: &mut Vec<Candidate>,
) -> Result<(), Error> {
    let av = a.value();

    let quarter_radius = 2.0 * (t / PI).sqrt();
    for corner in Corner::ALL {
        push_if_feasible(
            a,
            CandidateRegion::QuarterDisk {
                radius: quarter_radius,
                corner,
            },
            out,
        );
    }

    push_if_feasible(a, CandidateRegion::UnitChord { area: t }, out);
    push_if_feasible(a, CandidateRegion::NotchChord { area: t }, out);

    // Corner arc: solve the angle from the area where the family reaches t.
    if t >= av * (1.0 - av) - FEASIBILITY_SLACK && t <= a.half_area() + FEASIBILITY_SLACK {
        let theta = bp.theta_of_area(a, t)?;
        let perimeter = arc_perimeter_raw(a, theta);
        for reflected in [false, true] {
            let region = CandidateRegion::CornerArc { theta, reflected };
            if feasible(a, &region) {
                out.push(Candidate { region, perimeter });
            }
        }
    }

    push_if_feasible(
        a,
        CandidateRegion::FullCircle {
            radius: (t / PI).sqrt(),
        },
        out,
    );
    push_if_feasible(
        a,
        CandidateRegion::Semicircle {
            radius: (2.0 * t / PI).sqrt(),
        },
        out,
    );
    push_if_feasible(
        a,
        CandidateRegion::ThreeQuarterCircle {
            radius: (4.0 * t / (3.0 * PI)).sqrt(),
        },
        out,
    );
    push_if_feasible(
        a,
        CandidateRegion::NotchQuarterCircle {
            radius: 2.0 * ((t + av * av) / PI).sqrt(),
        },
        out,
    );
    Ok(())
}

fn best_connected(a: NotchParam, t: f64, bp: &Breakpoints) -> Result<Option<Candidate>, Error> {
    let mut candidates = Vec::with_capacity(12);
    connected_candidates(a, t, bp, &mut candidates)?;
    Ok(candidates
        .into_iter()
        .min_by(|x, y| x.perimeter.total_cmp(&y.perimeter)))
}

/// Enumerates every feasible candidate of area exactly `t`: connected kinds
/// plus two-part unions over `resolution` uniform area splits (split
/// endpoints excluded, each part carrying the cheapest connected shape for
/// its share of the area).
pub fn enumerate_candidates(
    a: NotchParam,
    t: f64,
    resolution: usize,
    bp: &Breakpoints,
) -> Result<Vec<Candidate>, Error> {
    if !t.is_finite() || t <= 0.0 || t > a.half_area() + FEASIBILITY_SLACK {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            lo: 0.0,
            hi: a.half_area(),
        });
    }
    if resolution < 10 {
        return Err(Error::Domain {
            name: "resolution",
            value: resolution as f64,
        });
    }
    let mut out = Vec::with_capacity(12 + resolution);
    connected_candidates(a, t, bp, &mut out)?;
    for i in 1..resolution {
        let t1 = t * i as f64 / resolution as f64;
        let t2 = t - t1;
        if t1 <= 0.0 || t2 <= 0.0 {
            continue;
        }
        let (part1, part2) = match (best_connected(a, t1, bp)?, best_connected(a, t2, bp)?) {
            (Some(p), Some(q)) => (p, q),
            _ => continue,
        };
        out.push(Candidate {
            perimeter: part1.perimeter + part2.perimeter,
            region: CandidateRegion::Union(vec![part1.region, part2.region]),
        });
    }
    Ok(out)
}

/// The cheapest enumerated candidate. Must agree with the profile wherever
/// both are defined; the profile's tests and `verify oracle` assert it.
pub fn oracle_min(
    a: NotchParam,
    t: f64,
    resolution: usize,
    bp: &Breakpoints,
) -> Result<Candidate, Error> {
    enumerate_candidates(a, t, resolution, bp)?
        .into_iter()
        .min_by(|x, y| x.perimeter.total_cmp(&y.perimeter))
        .ok_or(Error::Inconsistent {
            what: "candidate enumeration returned no feasible region",
        })
}

/// For a unit-radius circular segment spanning central angle
/// `theta in [pi/2, pi]` (an arc from the non-convex corner meeting a short
/// wall at a right angle), returns `(P^2, pi t)` where `P = theta` and
/// `t = (theta - cos(theta) sin(theta)) / 2`.
///
/// The first component always dominates the second; this is the scalar
/// inequality that rules the family out as a minimizer.
pub fn wall_arc_bound(theta: f64) -> Result<(f64, f64), Error> {
    if !theta.is_finite() || !(FRAC_PI_2..=PI + FEASIBILITY_SLACK).contains(&theta) {
        return Err(Error::Domain {
            name: "theta",
            value: theta,
        });
    }
    let perimeter_sq = theta * theta;
    let area = 0.5 * theta - 0.5 * theta.cos() * theta.sin();
    Ok((perimeter_sq, PI * area))
}
