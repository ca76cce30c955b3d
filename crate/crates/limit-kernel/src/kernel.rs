use std::f64::consts::PI;
use std::fmt;

use log::warn;
use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{erfcx, truncation_radius, LimitKernelError, RayContour};

type C = Complex64;

/// Ray nodes per ray used unless configured otherwise.
pub const DEFAULT_RAY_NODES: usize = 96;
const RAY_NODES_MAX: usize = 1536;
const IMAGINARY_TOL: f64 = 1e-9;
const ENTRY_TOL: f64 = 1e-11;
// Below this v the stable K22 apex sits within v of its pole at -2v, while
// the printed contours have no cancellation problem.
pub(crate) const STABLE_K22_FROM: f64 = 0.5;

/// Blocks of the kernel with `v = infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UInfBlock {
    K11,
    K12,
    K22,
}

/// Blocks of the finite-`v` kernel; `K22 = K22a + K22b` (double integral
/// and single-integral terms).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UvBlock {
    K11,
    K12,
    K22a,
    K22b,
}

impl fmt::Display for UInfBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl fmt::Display for UvBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

// Exponential factor attached to one integration variable.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Phase {
    // z^3/3 - u z^2 - z xi
    RiseMinus,
    // z^3/3 + u z^2 - z xi
    RisePlus,
    // -z^3/3 + u z^2 + z xi
    Fall,
}

impl Phase {
    fn exponent(self, u: f64, z: C, xi: f64) -> C {
        let z2 = z * z;
        let z3 = z2 * z;
        match self {
            Phase::RiseMinus => z3 / 3.0 - u * z2 - z * xi,
            Phase::RisePlus => z3 / 3.0 + u * z2 - z * xi,
            Phase::Fall => -z3 / 3.0 + u * z2 + z * xi,
        }
    }
}

// One integration variable: contour plus exponent, fitted to a range of xi.
#[derive(Debug, Clone, Copy)]
struct Side {
    contour: RayContour,
    phase: Phase,
    u: f64,
}

impl Side {
    // `nodes` is a floor: rays whose exponent turns through more phase get
    // about one node per 1.5 radians on top of a base of 32.
    fn fit(apex: f64, angle: f64, phase: Phase, u: f64, nodes: usize, xs: &[f64]) -> Result<Self, LimitKernelError> {
        let (lo, hi) = range(xs);
        // the drop is needed for every xi; sample the range
        let samples: Vec<f64> = (0..=8).map(|k| lo + (hi - lo) * k as f64 / 8.0).collect();
        let mut radius: f64 = 0.0;
        for &x in &samples {
            radius = radius.max(truncation_radius(C::new(apex, 0.0), angle, |z| phase.exponent(u, z, x).re)?);
        }
        let contour = RayContour::new(C::new(apex, 0.0), angle, radius, nodes)?;
        let start = contour.point(0.0);
        let end = contour.point(contour.radius);
        let turn = samples
            .iter()
            .map(|&x| (phase.exponent(u, end, x).im - phase.exponent(u, start, x).im).abs())
            .fold(0.0, f64::max);
        let needed = (32.0 + turn / 1.5).ceil() as usize;
        let contour = contour.with_nodes(nodes.max(needed.next_multiple_of(16)));
        Ok(Self { contour, phase, u })
    }

    // rows: points, columns: nodes; entries e^{phase} * extra(z) * dz
    fn factor(&self, xs: &[f64], extra: impl Fn(C) -> C) -> DMatrix<C> {
        let (z, dz) = self.contour.quadrature();
        let scaled: Vec<C> = z.iter().zip(&dz).map(|(&z, &d)| extra(z) * d).collect();
        DMatrix::from_fn(xs.len(), z.len(), |i, a| (self.phase.exponent(self.u, z[a], xs[i])).exp() * scaled[a])
    }

    fn nodes(&self) -> Vec<C> {
        self.contour.quadrature().0
    }
}

fn range(xs: &[f64]) -> (f64, f64) {
    xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

// Re( Ex G Ey^T ) with an imaginary-part check.
fn double_integral(
    block: &'static str,
    xs: &[f64],
    ys: &[f64],
    left: (&Side, &dyn Fn(C) -> C),
    right: &Side,
    g: impl Fn(C, C) -> C,
) -> Result<DMatrix<f64>, LimitKernelError> {
    let ex = left.0.factor(xs, left.1);
    let ey = right.factor(ys, |_| C::new(1.0, 0.0));
    let (zn, wn) = (left.0.nodes(), right.nodes());
    let gm = DMatrix::from_fn(zn.len(), wn.len(), |a, b| g(zn[a], wn[b]));
    let full = ex * gm * ey.transpose();
    to_real(block, full)
}

fn to_real(block: &'static str, m: DMatrix<C>) -> Result<DMatrix<f64>, LimitKernelError> {
    let re = m.map(|c| c.re);
    if re.iter().any(|v| !v.is_finite()) || m.iter().any(|c| !c.im.is_finite()) {
        return Err(LimitKernelError::NonFinite(block));
    }
    let im = m.iter().fold(0.0f64, |a, c| a.max(c.im.abs()));
    let scale = re.amax().max(1.0);
    if im > IMAGINARY_TOL * scale {
        return Err(LimitKernelError::Imaginary { block, im });
    }
    Ok(re)
}

fn one(_: C) -> C {
    C::new(1.0, 0.0)
}

fn neg_z(z: C) -> C {
    -z
}

/// Printed `v = infinity` block on `xs x ys`, both variables on `C_1^{pi/3}`.
pub fn ku_inf_matrix(
    block: UInfBlock,
    u: f64,
    xs: &[f64],
    ys: &[f64],
    nodes: usize,
) -> Result<DMatrix<f64>, LimitKernelError> {
    ku_inf_matrix_with(block, u, xs, ys, nodes, false)
}

// `derive_left` multiplies the left factor by -z (derivative in xi).
fn ku_inf_matrix_with(
    block: UInfBlock,
    u: f64,
    xs: &[f64],
    ys: &[f64],
    nodes: usize,
    derive_left: bool,
) -> Result<DMatrix<f64>, LimitKernelError> {
    check_u_inf(u)?;
    let third = PI / 3.0;
    let (pl, pr) = match block {
        UInfBlock::K11 => (Phase::RiseMinus, Phase::RiseMinus),
        UInfBlock::K12 => (Phase::RiseMinus, Phase::RisePlus),
        UInfBlock::K22 => (Phase::RisePlus, Phase::RisePlus),
    };
    let zs = Side::fit(1.0, third, pl, u, nodes, xs)?;
    let ws = Side::fit(1.0, third, pr, u, nodes, ys)?;
    let extra: &dyn Fn(C) -> C = if derive_left { &neg_z } else { &one };
    match block {
        UInfBlock::K11 => double_integral("K11", xs, ys, (&zs, extra), &ws, |z, w| (z - w) / (4.0 * z * w * (z + w))),
        UInfBlock::K12 => double_integral("K12", xs, ys, (&zs, extra), &ws, |z, w| (z - w) / (2.0 * z * (z + w))),
        UInfBlock::K22 => double_integral("K22", xs, ys, (&zs, extra), &ws, |z, w| (z - w) / (z + w)),
    }
}

pub(crate) fn ku_inf_derivative(
    block: UInfBlock,
    u: f64,
    xs: &[f64],
    ys: &[f64],
    nodes: usize,
) -> Result<DMatrix<f64>, LimitKernelError> {
    ku_inf_matrix_with(block, u, xs, ys, nodes, true)
}

fn check_u_inf(u: f64) -> Result<(), LimitKernelError> {
    if !u.is_finite() {
        return Err(LimitKernelError::Parameter(format!("u = {u} must be finite")));
    }
    Ok(())
}

/// Gaussian term added to the printed `K22` for `u > 0`:
/// `-(d / 4u) exp(-d^2 / 8u) / sqrt(2 pi u)` at `d = xi - xi'`.
pub fn ku_inf_k22_correction(u: f64, d: f64) -> f64 {
    -(d / (4.0 * u)) * (-d * d / (8.0 * u)).exp() / (2.0 * PI * u).sqrt()
}

/// One printed `v = infinity` block entry, ray nodes doubled until settled.
pub fn ku_inf_block(block: UInfBlock, u: f64, xi: f64, xi_prime: f64) -> Result<f64, LimitKernelError> {
    settle("ku_inf_block", |nodes| Ok(ku_inf_matrix(block, u, &[xi], &[xi_prime], nodes)?[(0, 0)]))
}

fn settle(what: &'static str, f: impl Fn(usize) -> Result<f64, LimitKernelError>) -> Result<f64, LimitKernelError> {
    let mut nodes = DEFAULT_RAY_NODES / 2;
    let mut prev = f(nodes)?;
    loop {
        nodes *= 2;
        let next = f(nodes)?;
        let delta = (next - prev).abs();
        if delta < ENTRY_TOL * next.abs().max(1.0) {
            return Ok(next);
        }
        if nodes >= RAY_NODES_MAX {
            return Err(LimitKernelError::Quadrature { what, size: nodes, delta });
        }
        prev = next;
    }
}

/// Contour apexes and quadrature size for the finite-`v` kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitKernelConfig {
    pub u: f64,
    pub v: f64,
    pub a_z: f64,
    pub a_w: f64,
    /// `B_1 .. B_4` of the printed `K22` terms.
    pub b: [f64; 4],
    pub ray_nodes: usize,
}

impl LimitKernelConfig {
    /// Default apexes, strictly inside the contour constraints.
    pub fn new(u: f64, v: f64) -> Result<Self, LimitKernelError> {
        if !(u.is_finite() && v.is_finite()) {
            return Err(LimitKernelError::Parameter(format!("u = {u}, v = {v} must be finite")));
        }
        let a_z = (1.0f64).max(-2.0 * v + 1.0);
        let mut a_w = (a_z + (-2.0 * v).max(0.0)) / 2.0;
        if a_w <= -2.0 * v {
            a_w = (a_z - 2.0 * v) / 2.0;
        }
        // gap between each B apex and its constraint; the printed K22 peaks
        // at about e^{B_3 xi + B_4 xi'}, so it gets the smaller one
        let gap = if v >= STABLE_K22_FROM { 1.0 } else { 0.5 };
        let b1 = 2.0 * v.abs() + gap;
        let b2 = 2.0 * v + gap;
        let b4 = -2.0 * v.abs() - gap;
        // B_3 at most halfway to -B_4: the z and -w contours of K22a meet
        // when B_3 = -B_4
        let b3 = (-2.0 * v + gap).min((-2.0 * v - b4) / 2.0);
        let cfg = Self { u, v, a_z, a_w, b: [b1, b2, b3, b4], ray_nodes: DEFAULT_RAY_NODES };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), LimitKernelError> {
        let (v, [b1, b2, b3, b4]) = (self.v, self.b);
        if self.u < 0.0 || !self.u.is_finite() {
            return Err(LimitKernelError::Parameter(format!("u = {} must be >= 0", self.u)));
        }
        if self.u == 0.0 {
            warn!("finite-v kernel at u = 0: the single-integral term of K22 converges only for xi > xi'");
        }
        let fail = |m: String| Err(LimitKernelError::Constraint(m));
        if !(self.a_z > self.a_w && self.a_w > -2.0 * v && self.a_z > 0.0) {
            return fail(format!("need A_z > A_w > -2v and A_z > 0 (A_z = {}, A_w = {}, v = {v})", self.a_z, self.a_w));
        }
        if !(b1 > 2.0 * v.abs() && b2 > 2.0 * v) {
            return fail(format!("need B_1 > 2|v| and B_2 > 2v (B_1 = {b1}, B_2 = {b2}, v = {v})"));
        }
        if !(b3 > -2.0 * v && -2.0 * v > b4 && b3 < -b4) {
            return fail(format!("need B_3 > -2v > B_4 and B_3 < -B_4 (B_3 = {b3}, B_4 = {b4}, v = {v})"));
        }
        if self.ray_nodes == 0 {
            return fail("no ray nodes".into());
        }
        Ok(())
    }

    pub fn with_ray_nodes(self, ray_nodes: usize) -> Self {
        Self { ray_nodes, ..self }
    }
}

/// Finite-`v` block on `xs x ys` with the printed contours.
pub fn kuv_matrix(
    block: UvBlock,
    cfg: &LimitKernelConfig,
    xs: &[f64],
    ys: &[f64],
) -> Result<DMatrix<f64>, LimitKernelError> {
    cfg.validate()?;
    let (u, v, n) = (cfg.u, cfg.v, cfg.ray_nodes);
    let two_v = 2.0 * v;
    let third = PI / 3.0;
    let two_thirds = 2.0 * PI / 3.0;
    match block {
        UvBlock::K11 => {
            let zs = Side::fit(1.0, third, Phase::RiseMinus, u, n, xs)?;
            let ws = Side::fit(1.0, third, Phase::RiseMinus, u, n, ys)?;
            double_integral("K11", xs, ys, (&zs, &one), &ws, |z, w| {
                (z - w) * (w + two_v) * (z + two_v) / (4.0 * z * w * (z + w))
            })
        }
        UvBlock::K12 => {
            let zs = Side::fit(cfg.a_z, third, Phase::RiseMinus, u, n, xs)?;
            let ws = Side::fit(cfg.a_w, two_thirds, Phase::Fall, u, n, ys)?;
            double_integral("K12", xs, ys, (&zs, &one), &ws, |z, w| {
                (z + w) * (z + two_v) / (2.0 * (w + two_v) * z * (z - w))
            })
        }
        UvBlock::K22a => {
            let zs = Side::fit(cfg.b[2], two_thirds, Phase::Fall, u, n, xs)?;
            let ws = Side::fit(cfg.b[3], two_thirds, Phase::Fall, u, n, ys)?;
            double_integral("K22a", xs, ys, (&zs, &one), &ws, |z, w| (z - w) / ((w + two_v) * (z + two_v) * (z + w)))
        }
        UvBlock::K22b => {
            // e^{8v^3/3 + 4v^2 u - 2v xi'} int_{B_2} e^{Fall(z, xi)} / (z - 2v): the
            // contour is moved left across the pole, whose residue times the
            // prefactor is e^{8uv^2 + 2v(xi - xi')}. Far right of the pole the
            // integrand peaks at e^{B_2 xi} and the digits cancel.
            let zs = Side::fit(two_v - 1.0, two_thirds, Phase::Fall, u, n, xs)?;
            let f = zs.factor(xs, |z| (z - two_v).inv());
            let col = DMatrix::from_fn(xs.len(), 1, |i, _| f.row(i).sum());
            let left = to_real("K22b", col)?;
            let mut out = DMatrix::from_fn(xs.len(), ys.len(), |i, j| {
                let d = xs[i] - ys[j];
                left[(i, 0)] * (8.0 * v * v * v / 3.0 + 4.0 * v * v * u - two_v * ys[j]).exp()
                    + (8.0 * u * v * v + two_v * d).exp()
            });
            // the B_1 integral in closed form
            for i in 0..xs.len() {
                for j in 0..ys.len() {
                    out[(i, j)] -= gaussian_contour_integral(u, v, xs[i] - ys[j]);
                }
            }
            if out.iter().any(|v| !v.is_finite()) {
                return Err(LimitKernelError::NonFinite("K22b"));
            }
            Ok(out)
        }
    }
}

// e^{exponent} erfc(y) where exponent - y^2 = -d^2/8u; erfcx keeps the
// product finite when y is large and positive.
fn scaled_erfc(exponent: f64, y: f64, damp: f64) -> f64 {
    if y >= 0.0 {
        damp * erfcx(y)
    } else {
        exponent.exp() * libm::erfc(y)
    }
}

/// Closed form of the Gaussian single integral in `K22` for `u > 0`, `v > 0`
/// with the contour on the imaginary axis:
/// `(1/2) e^{-d^2/8u} [erfcx((8uv - d)/sqrt(8u)) - erfcx((8uv + d)/sqrt(8u))]`.
pub fn gaussian_single_integral(u: f64, v: f64, d: f64) -> f64 {
    let r = (8.0 * u).sqrt();
    let damp = (-d * d / (8.0 * u)).exp();
    let (e_plus, e_minus) = (8.0 * u * v * v + 2.0 * v * d, 8.0 * u * v * v - 2.0 * v * d);
    let (x_plus, x_minus) = ((8.0 * u * v + d) / r, (8.0 * u * v - d) / r);
    0.5 * (scaled_erfc(e_minus, x_minus, damp) - scaled_erfc(e_plus, x_plus, damp))
}

/// The same integral on `C_B^{2pi/3}` with `B > 2|v|`, `u > 0`, any real `v`:
/// `(1/2) [e^{8uv^2 + 2vd} erfc(-(8uv + d)/sqrt(8u)) + e^{8uv^2 - 2vd} erfc((8uv - d)/sqrt(8u))]`.
/// Each pole `c = +-2v` contributes `e^{2uc^2 + cd} erfc(-(4uc + d)/sqrt(8u)) / 2`.
pub fn gaussian_contour_integral(u: f64, v: f64, d: f64) -> f64 {
    let r = (8.0 * u).sqrt();
    let damp = (-d * d / (8.0 * u)).exp();
    let (e_plus, e_minus) = (8.0 * u * v * v + 2.0 * v * d, 8.0 * u * v * v - 2.0 * v * d);
    let (x_plus, x_minus) = ((8.0 * u * v + d) / r, (8.0 * u * v - d) / r);
    0.5 * (scaled_erfc(e_plus, -x_plus, damp) + scaled_erfc(e_minus, x_minus, damp))
}

/// Full finite-`v` `K22` for `u > 0`, `v > 0`: both variables on
/// `C_a^{2pi/3}` with `a = -min(v, 1)`, minus [`gaussian_single_integral`].
/// Equal to `K22a + K22b` but free of the `e^{8v^3/3}` cancellation.
pub fn kuv_k22_stable(cfg: &LimitKernelConfig, xs: &[f64], ys: &[f64]) -> Result<DMatrix<f64>, LimitKernelError> {
    let (u, v) = (cfg.u, cfg.v);
    if !(u > 0.0 && v > 0.0) {
        return Err(LimitKernelError::Parameter(format!("stable K22 needs u > 0 and v > 0 (u = {u}, v = {v})")));
    }
    let a = -v.min(1.0);
    let two_v = 2.0 * v;
    let two_thirds = 2.0 * PI / 3.0;
    let zs = Side::fit(a, two_thirds, Phase::Fall, u, cfg.ray_nodes, xs)?;
    let ws = Side::fit(a, two_thirds, Phase::Fall, u, cfg.ray_nodes, ys)?;
    let mut out =
        double_integral("K22", xs, ys, (&zs, &one), &ws, |z, w| (z - w) / ((w + two_v) * (z + two_v) * (z + w)))?;
    for i in 0..xs.len() {
        for j in 0..ys.len() {
            out[(i, j)] -= gaussian_single_integral(u, v, xs[i] - ys[j]);
        }
    }
    Ok(out)
}

/// One finite-`v` block entry with the printed contours, ray nodes doubled
/// until settled.
pub fn kuv_block(
    block: UvBlock,
    u: f64,
    v: f64,
    xi: f64,
    xi_prime: f64,
    cfg: &LimitKernelConfig,
) -> Result<f64, LimitKernelError> {
    if cfg.u != u || cfg.v != v {
        return Err(LimitKernelError::Parameter(format!(
            "config is for (u, v) = ({}, {}), asked for ({u}, {v})",
            cfg.u, cfg.v
        )));
    }
    settle("kuv_block", |nodes| Ok(kuv_matrix(block, &cfg.with_ray_nodes(nodes), &[xi], &[xi_prime])?[(0, 0)]))
}
