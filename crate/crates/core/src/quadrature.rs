//! Adaptive Gauss–Kronrod quadrature on finite and semi-infinite intervals.
//!
//! The engine is a 21-point Kronrod rule with its embedded 10-point Gauss
//! rule, QUADPACK-style error rescaling, and global bisection of the
//! interval with the largest error estimate. A semi-infinite range
//! `[a, ∞)` is mapped to `[0, 1)` by `v = a + s/(1 − s)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Kronrod abscissae on `[-1, 1]`, positive half, descending; the last is 0.
pub(crate) const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

/// Kronrod weights matching `XGK`.
pub(crate) const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

/// Gauss weights for the odd-indexed Kronrod abscissae `XGK[1], XGK[3], …, XGK[9]`.
/// The 10-point Gauss rule has no centre node.
pub(crate) const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// Result of a quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub subdivisions: usize,
}

/// Stopping rule for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    pub max_subdivisions: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: 1e-9,
            abs: 1e-14,
            max_subdivisions: 2000,
        }
    }
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64) -> Self {
        Tolerance {
            rel,
            abs,
            ..Tolerance::default()
        }
    }

    pub fn with_abs(self, abs: f64) -> Self {
        Tolerance { abs, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !(self.rel >= 1e-13 || self.abs > 0.0) || self.rel < 0.0 || self.abs < 0.0 {
            return Err(crate::error::domain(format!(
                "tolerance rel={} abs={} is not achievable (rel must be at least 1e-13 unless abs > 0)",
                self.rel, self.abs
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(crate::error::domain("max_subdivisions must be positive"));
        }
        Ok(())
    }

    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

/// One application of the 21-point rule on `[a, b]`.
#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Panel {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * WGK[10];
    let mut gauss = 0.0;
    let mut resabs = kronrod.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut resasc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kronrod * half;
    let error = rescaled_error(
        value,
        (kronrod - gauss) * half,
        resabs * half.abs(),
        resasc * half.abs(),
    );
    Panel { a, b, value, error }
}

/// QUADPACK's error estimate from the Kronrod–Gauss difference.
fn rescaled_error(value: f64, difference: f64, resabs: f64, resasc: f64) -> f64 {
    let mut error = difference.abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (1.0f64).min((200.0 * error / resasc).powf(1.5));
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    if !value.is_finite() {
        error = f64::INFINITY;
    }
    error
}

/// The 21-point rule on `[a, b]` with its nodes kept: returns the value,
/// the error estimate, and `(node, Kronrod weight, f(node))` triples.
pub(crate) fn gk21_tabulated<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> (f64, f64, [(f64, f64, f64); 21]) {
    let rule = kronrod_rule(a, b);
    let mut nodes = [(0.0, 0.0, 0.0); 21];
    let (mut kronrod, mut diff, mut resabs) = (0.0, 0.0, 0.0);
    for (slot, &(u, wk, wd)) in nodes.iter_mut().zip(&rule) {
        let fu = f(u);
        *slot = (u, wk, fu);
        kronrod += wk * fu;
        diff += wd * fu;
        resabs += wk * fu.abs();
    }
    let mean = kronrod / (b - a);
    let resasc = nodes.iter().map(|&(_, wk, fu)| wk * (fu - mean).abs()).sum();
    (kronrod, rescaled_error(kronrod, diff, resabs, resasc), nodes)
}

/// Integrate `f` over `[a, b]`; `b` may be `f64::INFINITY`.
///
/// ```
/// use besselhit::quadrature::{integrate, Tolerance};
/// let r = integrate(|u| (-u).exp(), 0.0, f64::INFINITY, &Tolerance::default()).unwrap();
/// assert!((r.value - 1.0).abs() < 1e-12);
/// ```
pub fn integrate<F: FnMut(f64) -> f64>(f: F, a: f64, b: f64, tol: &Tolerance) -> Result<QuadResult> {
    integrate_with_breaks(f, &[a, b], tol)
}

/// Integrate over `[points[0], points[last]]`, seeding the adaptive
/// bisection with the given interior breakpoints. Only the final point may
/// be infinite.
pub fn integrate_with_breaks<F: FnMut(f64) -> f64>(mut f: F, points: &[f64], tol: &Tolerance) -> Result<QuadResult> {
    tol.validate()?;
    if points.len() < 2 {
        return Err(crate::error::domain("need at least two integration limits"));
    }
    for w in points.windows(2) {
        if w[0].is_nan() || w[1].is_nan() || !w[0].is_finite() || w[1] <= w[0] {
            return Err(crate::error::domain(format!(
                "integration limits must be finite and increasing except for a final +inf, got {points:?}"
            )));
        }
    }
    let last = *points.last().unwrap();
    let (finite_points, tail_origin) = if last == f64::INFINITY {
        (&points[..points.len() - 1], Some(points[points.len() - 2]))
    } else {
        (points, None)
    };

    // Panels on the finite part live in the original variable; tail panels
    // live in s ∈ [0, 1) and carry a `true` tag.
    let mut heap: BinaryHeap<Tagged> = BinaryHeap::new();
    let mut total = 0.0;
    let mut total_err = 0.0;

    // The map v = a + L s/(1 − s) with L = max(|a|, 1): an integrand that
    // decays on the scale of its starting point keeps its mass away from s = 1.
    let eval_tail = |f: &mut F, s0: f64, s1: f64, origin: f64| -> Panel {
        let scale = origin.abs().max(1.0);
        let mut g = |s: f64| {
            let om = 1.0 - s;
            let v = origin + scale * s / om;
            let fv = f(v);
            if fv == 0.0 {
                0.0
            } else {
                scale * fv / (om * om)
            }
        };
        gk21(&mut g, s0, s1)
    };

    for w in finite_points.windows(2) {
        let p = gk21(&mut f, w[0], w[1]);
        total += p.value;
        total_err += p.error;
        heap.push(Tagged(false, p));
    }
    if let Some(origin) = tail_origin {
        let p = eval_tail(&mut f, 0.0, 1.0, origin);
        total += p.value;
        total_err += p.error;
        heap.push(Tagged(true, p));
    }

    let mut subdivisions = 0usize;

    while total_err > tol.target(total) {
        if subdivisions >= tol.max_subdivisions {
            return Err(Error::Quadrature {
                estimate: total,
                error: total_err,
                subdivisions,
            });
        }
        let Tagged(is_tail, worst) = heap.pop().expect("heap never empties");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            // Interval cannot be split further in floating point.
            return Err(Error::Quadrature {
                estimate: total,
                error: total_err,
                subdivisions,
            });
        }
        let (left, right) = if is_tail {
            let origin = tail_origin.unwrap();
            (
                eval_tail(&mut f, worst.a, mid, origin),
                eval_tail(&mut f, mid, worst.b, origin),
            )
        } else {
            (gk21(&mut f, worst.a, mid), gk21(&mut f, mid, worst.b))
        };
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(Tagged(is_tail, left));
        heap.push(Tagged(is_tail, right));
        subdivisions += 1;
        if subdivisions % 64 == 0 {
            // Re-sum to stop drift from repeated incremental updates.
            total = heap.iter().map(|p| p.1.value).sum();
            total_err = heap.iter().map(|p| p.1.error).sum();
        }
    }
    if !total.is_finite() {
        return Err(Error::Quadrature {
            estimate: total,
            error: total_err,
            subdivisions,
        });
    }
    Ok(QuadResult {
        value: total,
        abs_error_estimate: total_err,
        subdivisions,
    })
}

/// A panel ordered by its error estimate; the flag marks tail panels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Tagged(bool, Panel);

impl PartialOrd for Tagged {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tagged {
    fn cmp(&self, other: &Self) -> Ordering {
        self.1.cmp(&other.1)
    }
}

/// Nodes and weights of the 21-point Kronrod rule mapped to `[a, b]`,
/// together with the weight differences (Kronrod minus embedded Gauss)
/// that give the rule's error estimate. Used to build fixed product
/// rules whose integrand factors are tabulated once.
fn kronrod_rule(a: f64, b: f64) -> [(f64, f64, f64); 21] {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut out = [(0.0, 0.0, 0.0); 21];
    for j in 0..10 {
        let g = if j % 2 == 1 { WG[j / 2] } else { 0.0 };
        let dx = half * XGK[j];
        out[2 * j] = (centre - dx, WGK[j] * half, (WGK[j] - g) * half);
        out[2 * j + 1] = (centre + dx, WGK[j] * half, (WGK[j] - g) * half);
    }
    out[20] = (centre, WGK[10] * half, WGK[10] * half);
    out
}
