//! Bracketed root-finding for every implicit quantity of the profile.
//!
//! All solves are bisection with secant acceleration inside a maintained
//! sign-change bracket: monotone residuals make the bracket trustworthy, no
//! derivatives are needed, and a missing sign change is reported as an
//! error rather than silently producing a wrong root. Formulas are
//! evaluated through series-safe helpers so both bracket endpoints are
//! exact, including the `theta = 0` continuous extensions.
//!
//! The implicit quantities:
//!
//! * `theta_max`: the arc angle enclosing half the domain; root of
//!   `theta / sin^2(theta) - cot(theta) = 1`, independent of `a`.
//! * `theta(t)`: inversion of the arc-area formula on `[0, theta_max]`.
//! * `t0`, `a(t)`: the unit-perimeter arc family: for `t <= t0` there is a
//!   unique `(a, theta)` with area `t` and perimeter 1.
//! * `alpha = a(1/pi)`, `beta = a(t0)`, `gamma = 1/(1+pi)`: the notch
//!   sizes separating the four regimes of the profile.
//! * `sigma(a)`: the area where the arc matches the quarter disk,
//!   `P^2 = pi |S|`; `tau(a)`: the area where the arc perimeter reaches 1.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::geometry::{arc_area_raw, x_minus_sin, NotchParam, FEASIBILITY_SLACK, THETA_SLACK};
use crate::Error;

/// Tolerances and budgets shared by all solves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Absolute tolerance on located roots and reported residuals.
    pub abs_tol: f64,
    /// Relative tolerance on located roots.
    pub rel_tol: f64,
    /// Iteration budget per bracketed solve.
    pub max_iter: u32,
    /// Step for finite-difference derivative checks.
    pub fd_step: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_iter: 200,
            fd_step: 1e-6,
        }
    }
}

impl SolverConfig {
    pub(crate) fn validate(&self) -> Result<(), Error> {
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0) {
            return Err(Error::InvalidConfig {
                what: "abs_tol must be positive",
            });
        }
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0) {
            return Err(Error::InvalidConfig {
                what: "rel_tol must be positive",
            });
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig {
                what: "max_iter must be at least 1",
            });
        }
        if !(self.fd_step.is_finite() && self.fd_step > 0.0) {
            return Err(Error::InvalidConfig {
                what: "fd_step must be positive",
            });
        }
        Ok(())
    }
}

/// Bisection with secant acceleration inside a maintained bracket.
///
/// The bracket is narrowed three decades below the configured tolerances so
/// that residuals, not just abscissae, land within them. A secant step is
/// taken whenever the previous step at least halved the bracket; otherwise
/// the next step bisects, so convergence never degrades below bisection by
/// more than a factor of two.
pub(crate) fn try_find_root<F>(mut f: F, lo: f64, hi: f64, cfg: &SolverConfig) -> Result<f64, Error>
where
    F: FnMut(f64) -> Result<f64, Error>,
{
    cfg.validate()?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidConfig {
            what: "bracket endpoints must be finite with lo < hi",
        });
    }
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a)?;
    if fa == 0.0 {
        return Ok(a);
    }
    let mut fb = f(b)?;
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }
    let mut use_secant = true;
    for _ in 0..cfg.max_iter {
        let mid = 0.5 * (a + b);
        let xtol = (cfg.abs_tol * 1e-3)
            .max(cfg.rel_tol * 1e-3 * mid.abs())
            .max(4.0 * f64::EPSILON * mid.abs());
        if b - a <= xtol || mid <= a || mid >= b {
            return Ok(if fa.abs() <= fb.abs() { a } else { b });
        }
        let mut x = if use_secant {
            let s = (a * fb - b * fa) / (fb - fa);
            if s > a && s < b {
                s
            } else {
                mid
            }
        } else {
            mid
        };
        if x == a || x == b {
            x = mid;
        }
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        let old_width = b - a;
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        use_secant = (b - a) <= 0.5 * old_width;
    }
    Err(Error::NoConvergence {
        max_iter: cfg.max_iter,
    })
}

pub(crate) fn find_root<F>(mut f: F, lo: f64, hi: f64, cfg: &SolverConfig) -> Result<f64, Error>
where
    F: FnMut(f64) -> f64,
{
    try_find_root(|x| Ok(f(x)), lo, hi, cfg)
}

/// Residual of the half-area equation `theta/sin^2(theta) - cot(theta) = 1`.
fn theta_max_residual(theta: f64) -> f64 {
    let s = theta.sin();
    theta / (s * s) - theta.cos() / s - 1.0
}

/// The unique angle in `(0, pi/2)` at which the corner arc encloses exactly
/// half the domain, for every notch size. Approximately `1.206`.
pub fn solve_theta_max(cfg: &SolverConfig) -> Result<f64, Error> {
    find_root(theta_max_residual, 0.1, FRAC_PI_2 - 0.01, cfg)
}

/// Area of the unit-perimeter arc at angle `theta` (the notch size is then
/// forced to `1 - sin(theta)/theta`). Continuous extension 0 at `theta = 0`.
pub(crate) fn unit_perimeter_area_raw(theta: f64) -> f64 {
    if theta == 0.0 {
        return 0.0;
    }
    let s = theta.sin();
    (0.5 * x_minus_sin(2.0 * theta) + 2.0 * s * x_minus_sin(theta)) / (2.0 * theta * theta)
}

/// Notch size `1 - sin(theta)/theta` of the unit-perimeter arc; extension 0
/// at `theta = 0`.
pub(crate) fn unit_perimeter_notch_raw(theta: f64) -> f64 {
    if theta == 0.0 {
        0.0
    } else {
        x_minus_sin(theta) / theta
    }
}

/// The breakpoint constants of the profile, computed once and reused.
///
/// Immutable after construction; freely shareable across threads.
#[derive(Debug, Clone)]
pub struct Breakpoints {
    theta_max: f64,
    t0: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    cfg: SolverConfig,
}

impl Breakpoints {
    /// Solves the defining equations of every constant and re-checks their
    /// ordering and the consistency of the arc branch.
    pub fn compute(cfg: SolverConfig) -> Result<Self, Error> {
        cfg.validate()?;
        let theta_max = solve_theta_max(&cfg)?;
        let t0 = unit_perimeter_area_raw(theta_max);
        let beta = unit_perimeter_notch_raw(theta_max);
        let gamma = 1.0 / (1.0 + PI);
        let theta_alpha = find_root(
            |th| unit_perimeter_area_raw(th) - 1.0 / PI,
            0.0,
            theta_max,
            &cfg,
        )?;
        let alpha = unit_perimeter_notch_raw(theta_alpha);
        let bp = Breakpoints {
            theta_max,
            t0,
            alpha,
            beta,
            gamma,
            cfg,
        };
        if !(0.0 < bp.alpha && bp.alpha < bp.beta && bp.beta < bp.gamma && bp.gamma < 1.0) {
            return Err(Error::Inconsistent {
                what: "breakpoint ordering 0 < alpha < beta < gamma < 1",
            });
        }
        // The arc branch must start no later than it ends wherever it is the
        // middle piece of the profile.
        for i in 0..=4 {
            let a = bp.alpha + (bp.beta - bp.alpha) * f64::from(i) / 4.0;
            if bp.sigma(a)? > bp.tau(a)? + 1e-9 {
                return Err(Error::Inconsistent {
                    what: "sigma(a) <= tau(a) on [alpha, beta]",
                });
            }
        }
        Ok(bp)
    }

    /// Angle at which the arc encloses half the domain; about 1.206.
    pub fn theta_max(&self) -> f64 {
        self.theta_max
    }

    /// Largest area attainable by a unit-perimeter arc; about 0.4746.
    pub fn t0(&self) -> f64 {
        self.t0
    }

    /// Notch size whose unit-perimeter arc has area `1/pi`; about 0.0981.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Notch size whose unit-perimeter arc has area `t0`,
    /// `1 - sin(theta_max)/theta_max`; about 0.2254.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `1/(1 + pi)`; about 0.2415.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn config(&self) -> &SolverConfig {
        &self.cfg
    }

    /// Inverts the arc-area formula: the unique `theta` in
    /// `[0, theta_max]` with area `t`, for `t` in
    /// `[a(1-a), (1-a^2)/2]`.
    pub fn theta_of_area(&self, a: NotchParam, t: f64) -> Result<f64, Error> {
        let lo_t = a.value() * (1.0 - a.value());
        let hi_t = a.half_area();
        if !t.is_finite() || t < lo_t - FEASIBILITY_SLACK || t > hi_t + FEASIBILITY_SLACK {
            return Err(Error::OutOfRange {
                name: "t",
                value: t,
                lo: lo_t,
                hi: hi_t,
            });
        }
        if t <= lo_t {
            return Ok(0.0);
        }
        if t >= hi_t {
            return Ok(self.theta_max);
        }
        find_root(|th| arc_area_raw(a, th) - t, 0.0, self.theta_max, &self.cfg)
    }

    /// Area of the unit-perimeter arc at angle `theta in (0, theta_max]`;
    /// strictly increasing in `theta`.
    pub fn unit_perimeter_area(&self, theta: f64) -> Result<f64, Error> {
        if !theta.is_finite() || theta <= 0.0 || theta > self.theta_max + THETA_SLACK {
            return Err(Error::Domain {
                name: "theta",
                value: theta,
            });
        }
        Ok(unit_perimeter_area_raw(theta))
    }

    /// The unique `(a, theta)` whose arc has area `t` and perimeter exactly
    /// 1; defined for `0 < t <= t0`. The notch size is strictly increasing
    /// in `t`.
    pub fn notch_of_area(&self, t: f64) -> Result<(f64, f64), Error> {
        if !t.is_finite() || t <= 0.0 {
            return Err(Error::Domain {
                name: "t",
                value: t,
            });
        }
        if t > self.t0 + FEASIBILITY_SLACK {
            return Err(Error::NoSolution { t, t0: self.t0 });
        }
        let target = t.min(self.t0);
        let theta = find_root(
            |th| unit_perimeter_area_raw(th) - target,
            0.0,
            self.theta_max,
            &self.cfg,
        )?;
        Ok((unit_perimeter_notch_raw(theta), theta))
    }

    /// The area at which the arc's perimeter reaches 1: the inverse of the
    /// notch-size map of [`Breakpoints::notch_of_area`]. Defined on
    /// `[alpha, beta]`.
    pub fn tau(&self, a: f64) -> Result<f64, Error> {
        if !a.is_finite() || a < self.alpha - FEASIBILITY_SLACK || a > self.beta + FEASIBILITY_SLACK
        {
            return Err(Error::OutOfRange {
                name: "a",
                value: a,
                lo: self.alpha,
                hi: self.beta,
            });
        }
        if a >= self.beta {
            return Ok(self.t0);
        }
        if a <= self.alpha {
            return Ok(1.0 / PI);
        }
        try_find_root(
            |t| Ok(self.notch_of_area(t)?.0 - a),
            1e-8,
            self.t0,
            &self.cfg,
        )
    }

    /// The area at which the arc matches the quarter disk,
    /// `P^2 = pi |S|`; defined on `[alpha, gamma]` and strictly decreasing.
    pub fn sigma(&self, a: f64) -> Result<f64, Error> {
        if !a.is_finite()
            || a < self.alpha - FEASIBILITY_SLACK
            || a > self.gamma + FEASIBILITY_SLACK
        {
            return Err(Error::OutOfRange {
                name: "a",
                value: a,
                lo: self.alpha,
                hi: self.gamma,
            });
        }
        let n = NotchParam::new(a)?;
        // j(theta) = (P^2 - pi |S|) / (1 - a), extension (1-a) - pi a at 0.
        let j = |th: f64| {
            if th == 0.0 {
                return (1.0 - a) - PI * a;
            }
            let s = th.sin();
            let m = x_minus_sin(2.0 * th) / (4.0 * s * s);
            (1.0 - a) * th * th / (s * s) - PI * a - PI * (1.0 - a) * m
        };
        if j(0.0) <= 0.0 {
            // Only possible within slack of gamma, where the matching area
            // degenerates to the zero-angle arc.
            return Ok(arc_area_raw(n, 0.0));
        }
        let theta = find_root(j, 0.0, self.theta_max, &self.cfg)?;
        Ok(arc_area_raw(n, theta))
    }

    /// The area `T(a)` at which the profile leaves its square-root branch:
    /// `1/pi` up to `alpha`, then `sigma(a)`, then `(1-a)^2/pi` beyond
    /// `gamma`. Continuous at both joins.
    pub fn transition(&self, a: NotchParam) -> Result<f64, Error> {
        let av = a.value();
        if av <= self.alpha {
            Ok(1.0 / PI)
        } else if av <= self.gamma {
            self.sigma(av)
        } else {
            Ok((1.0 - av) * (1.0 - av) / PI)
        }
    }
}
