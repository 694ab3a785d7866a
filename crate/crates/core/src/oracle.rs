//! Numerical quadrature of `∫₀¹ R(x)·logᵖx dx`, independent of the closed-form engine.
//!
//! The primary rule is tanh-sinh on `(0, 1)`; a truncated composite
//! Gauss–Legendre rule in `u = −log x` serves as a second discretization.

use std::f64::consts::PI;
use std::sync::OnceLock;

use thiserror::Error;

use crate::numeric::CompensatedSum;
use crate::ratfun::RationalFunction;

pub const DEFAULT_REL_TOL: f64 = 1e-11;
pub const MAX_LEVEL: usize = 12;
/// Smallest abscissa evaluated.
const X_FLOOR: f64 = 1e-300;
/// Levels always computed before the convergence test is trusted.
const MIN_LEVEL: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub est_error: f64,
    pub levels_used: usize,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("integrand has a pole in [0, 1] (near x = {x})")]
    PoleDetected { x: f64 },
    #[error("no convergence after {levels} levels (estimated error {est_error:e})")]
    NoConvergence { levels: usize, est_error: f64 },
    #[error("rel_tol {0:e} outside [1e-13, 1e-6]")]
    InvalidTolerance(f64),
}

/// One tanh-sinh node: `x`, `log x`, and the weight `dx/dt`.
#[derive(Clone, Copy, Debug)]
struct Node {
    x: f64,
    log_x: f64,
    weight: f64,
}

fn node(t: f64) -> Node {
    // x = 1/(1 + e^{−2u}), u = (π/2) sinh t
    let u = 0.5 * PI * t.sinh();
    let (x, log_x) = if u >= 0.0 {
        let e = (-2.0 * u).exp();
        (1.0 / (1.0 + e), -e.ln_1p())
    } else {
        let e = (2.0 * u).exp();
        (e / (1.0 + e), 2.0 * u - e.ln_1p())
    };
    let weight = 0.25 * PI * t.cosh() / (u.cosh() * u.cosh());
    Node { x, log_x, weight }
}

/// Nodes new at each level: level 0 has step 1, level `l` adds the odd multiples of `2^{−l}`.
fn node_table() -> &'static [Vec<Node>] {
    static TABLE: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Largest |t| keeping x ≥ X_FLOOR on the left end (symmetric on the right).
        let t_max = (-(X_FLOOR.ln()) / PI).asinh();
        (0..=MAX_LEVEL)
            .map(|level| {
                let h = 0.5f64.powi(level as i32);
                let (start, step) = if level == 0 { (0.0, 1.0) } else { (h, 2.0 * h) };
                let mut nodes = Vec::new();
                let mut t = start;
                while t <= t_max {
                    nodes.push(node(t));
                    if t != 0.0 {
                        nodes.push(node(-t));
                    }
                    t += step;
                }
                nodes.retain(|n| n.x >= X_FLOOR && n.weight > 0.0);
                nodes
            })
            .collect()
    })
}

/// Integrand expressed through the node: receives `(x, log x)`.
pub trait NodeIntegrand {
    fn eval(&self, x: f64, log_x: f64) -> Result<f64, OracleError>;
}

impl<F: Fn(f64, f64) -> Result<f64, OracleError>> NodeIntegrand for F {
    fn eval(&self, x: f64, log_x: f64) -> Result<f64, OracleError> {
        self(x, log_x)
    }
}

/// Running estimates `(I_l, est_error_l)` for every level until convergence or `MAX_LEVEL`.
pub fn tanh_sinh_levels<F: NodeIntegrand>(
    f: &F,
    rel_tol: f64,
) -> Result<(Vec<(f64, f64)>, usize), OracleError> {
    let table = node_table();
    let mut sum = CompensatedSum::new();
    let mut evaluations = 0;
    let mut history: Vec<(f64, f64)> = Vec::new();
    for (level, nodes) in table.iter().enumerate() {
        for n in nodes {
            sum.add(n.weight * f.eval(n.x, n.log_x)?);
        }
        evaluations += nodes.len();
        let h = 0.5f64.powi(level as i32);
        let value = h * sum.value();
        let est_error = history.last().map_or(f64::INFINITY, |(prev, _)| (value - prev).abs());
        history.push((value, est_error));
        if level >= MIN_LEVEL && est_error <= rel_tol * (1.0 + value.abs()) {
            break;
        }
    }
    Ok((history, evaluations))
}

/// Tanh-sinh quadrature over `(0, 1)`.
pub fn tanh_sinh<F: NodeIntegrand>(f: &F, rel_tol: f64) -> Result<QuadratureResult, OracleError> {
    let (history, evaluations) = tanh_sinh_levels(f, rel_tol)?;
    let &(value, est_error) = history.last().unwrap();
    let levels_used = history.len();
    if !(est_error <= rel_tol * (1.0 + value.abs())) {
        return Err(OracleError::NoConvergence {
            levels: levels_used,
            est_error,
        });
    }
    Ok(QuadratureResult {
        value,
        est_error,
        levels_used,
        evaluations,
    })
}

/// Float copy of a rational function for fast repeated evaluation.
struct FloatRational {
    num: Vec<f64>,
    den: Vec<f64>,
}

impl FloatRational {
    fn new(f: &RationalFunction) -> Self {
        Self {
            num: f.scaled_numerator().to_f64_coeffs(),
            den: f.denominator().to_f64_coeffs(),
        }
    }

    fn horner(c: &[f64], x: f64) -> f64 {
        c.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    fn eval(&self, x: f64) -> Result<f64, OracleError> {
        let den = Self::horner(&self.den, x);
        if den.abs() < 1e-12 {
            return Err(OracleError::PoleDetected { x });
        }
        Ok(Self::horner(&self.num, x) / den)
    }
}

fn check_inputs(f: &RationalFunction, rel_tol: f64) -> Result<RationalFunction, OracleError> {
    if !(1e-13..=1e-6).contains(&rel_tol) {
        return Err(OracleError::InvalidTolerance(rel_tol));
    }
    let g = f.normalize();
    if g.poles_in_unit_interval() > 0 {
        let x = (0..=1000)
            .map(|i| i as f64 / 1000.0)
            .min_by(|a, b| {
                let da = g.denominator().eval_f64(*a).abs();
                let db = g.denominator().eval_f64(*b).abs();
                da.total_cmp(&db)
            })
            .unwrap();
        return Err(OracleError::PoleDetected { x });
    }
    Ok(g)
}

/// `∫₀¹ f(x)·logᵖx dx` by tanh-sinh.
pub fn integrate_log_power(
    f: &RationalFunction,
    p: u32,
    rel_tol: f64,
) -> Result<QuadratureResult, OracleError> {
    let g = check_inputs(f, rel_tol)?;
    let r = FloatRational::new(&g);
    let integrand = |x: f64, log_x: f64| Ok(r.eval(x)? * log_x.powi(p as i32));
    tanh_sinh(&integrand, rel_tol)
}

/// Gauss–Legendre nodes and weights on `[−1, 1]` (Newton on `P_n`).
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

const GL_POINTS: usize = 24;
const GL_PANEL: f64 = 0.5;

/// `∫₀¹ f(x)·logᵖx dx` as `∫₀^U f(e^{−u}) (−u)^p e^{−u} du`, composite Gauss–Legendre,
/// with `U` chosen so that `max|f|·Γ(p+1, U)` is below the tolerance.
pub fn integrate_log_power_substituted(
    f: &RationalFunction,
    p: u32,
    rel_tol: f64,
) -> Result<QuadratureResult, OracleError> {
    let g = check_inputs(f, rel_tol)?;
    let r = FloatRational::new(&g);
    let mut max_abs: f64 = 0.0;
    for i in 0..=2000 {
        max_abs = max_abs.max(r.eval(i as f64 / 2000.0)?.abs());
    }
    let bound = 2.0 * max_abs;
    let target = 0.01 * rel_tol;
    let mut upper = 1.0;
    while bound * upper_gamma(p, upper) > target && upper < 800.0 {
        upper += 1.0;
    }
    let rule = gauss_legendre(GL_POINTS);
    let panels = (upper / GL_PANEL).ceil() as usize;
    let mut sum = CompensatedSum::new();
    let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
    for k in 0..panels {
        let mid = (k as f64 + 0.5) * GL_PANEL;
        for &(t, w) in &rule {
            let u = mid + 0.5 * GL_PANEL * t;
            sum.add(w * r.eval((-u).exp())? * u.powi(p as i32) * (-u).exp());
        }
    }
    let value = sign * 0.5 * GL_PANEL * sum.value();
    Ok(QuadratureResult {
        value,
        est_error: bound * upper_gamma(p, upper),
        levels_used: 1,
        evaluations: panels * GL_POINTS,
    })
}

/// `Γ(p+1, U) = p! e^{−U} Σ_{k≤p} U^k/k!`.
fn upper_gamma(p: u32, u: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=p {
        term *= u / k as f64;
        sum += term;
    }
    let fact: f64 = (1..=p).map(f64::from).product();
    fact * (-u).exp() * sum
}
