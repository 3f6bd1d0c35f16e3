//! Closed-form charging power: the resummed propagator and its descendants.
//!
//! The disorder-averaged return amplitude of a single Majorana under a
//! quadratic quench is `f(t) = J1(2t)/t`; a size-`k` block picks up
//! `f^k(t sqrt(1 - k/N))`. Summing the odd operator sizes of the two battery
//! models gives [`power_z`] and [`power_x`]; the large-`N` Gaussian integral
//! form is [`power_x_gaussian`]; [`power_graph`] generalizes the resummation
//! to arbitrary interaction graphs through their block connectivities.
//!
//! Normalization: energies are measured against the battery ground energy
//! `-N/2`, so every power curve is `(1/t) * sum_k [1 - (propagator factor)]`
//! over the `N/2` odd sizes; this vanishes at `t = 0+` and reduces to the
//! Gaussian integral form under `y = (2k-1)/N`.

use crate::graph::ConnectivityProfile;
use crate::{Error, Result};

/// Switch point below which `f` uses its power series instead of `J1`.
const F_SERIES_CUTOFF: f64 = 1e-2;

/// Points in the coarse bracketing scan of [`find_optimum`].
const COARSE_POINTS: usize = 512;

/// Absolute tolerance on the optimal charging time.
const TAU_TOLERANCE: f64 = 1e-6;

/// Resummed single-Majorana propagator `f(t) = J1(2t)/t`, with `f(0) = 1`.
///
/// For `t` below a small cutoff the ratio is evaluated by the alternating
/// series `sum_m (-1)^m t^(2m) / (m! (m+1)!)`, which removes the `0/0` at the
/// origin; elsewhere it defers to the library Bessel `J1`. `|f| <= 1` for all
/// `t >= 0`.
pub fn f_propagator(t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    if t < F_SERIES_CUTOFF {
        // terms fall below f64 resolution after m = 3 at this cutoff
        let t2 = t * t;
        let mut term = 1.0;
        let mut acc = 1.0;
        for m in 1..=4u32 {
            term *= -t2 / (m as f64 * (m + 1) as f64);
            acc += term;
        }
        acc
    } else {
        libm::j1(2.0 * t) / t
    }
}

/// Size-`k` block propagator `f(t sqrt(1 - k/n))^k`.
pub fn f_block(t: f64, k: usize, n: usize) -> Result<f64> {
    if k == 0 || k > n {
        return Err(Error::BlockOutOfRange { k, n });
    }
    let arg = t * (1.0 - k as f64 / n as f64).sqrt();
    Ok(f_propagator(arg).powi(k as i32))
}

/// Averaged charging power of the Z-model battery, `(n/2t)(1 - f(t)^2)`.
///
/// The size-2 propagator is taken at argument `t` (not `t sqrt(1 - 2/N)`);
/// the exact simulator carries the finite-size difference.
pub fn power_z(t: f64, n: usize) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let f = f_propagator(t);
    n as f64 / (2.0 * t) * (1.0 - f * f)
}

/// Averaged charging power of the X-model battery: one unit-weight bracket
/// per odd operator size,
/// `(1/t) sum_{k=1}^{n/2} [1 - f^(2k-1)(t sqrt(1 - (2k-1)/n))]`.
pub fn power_x(t: f64, n: usize) -> Result<f64> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::OddMajoranaCount(n));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let nf = n as f64;
    let mut sum = 0.0;
    for k in 1..=n / 2 {
        let size = (2 * k - 1) as f64;
        let arg = t * (1.0 - size / nf).sqrt();
        sum += 1.0 - f_propagator(arg).powi(2 * k as i32 - 1);
    }
    Ok(sum / t)
}

/// Large-`N` Gaussian approximation of [`power_x`],
/// `(n/2t)(1 - \int_0^1 dy exp(-n t^2 y(1-y) / 2))`,
/// with the integral evaluated by adaptive Simpson quadrature to relative
/// error `<= 1e-10`.
pub fn power_x_gaussian(t: f64, n: usize) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let a = 0.5 * n as f64 * t * t;
    let integral = adaptive_simpson(&|y: f64| (-a * y * (1.0 - y)).exp(), 0.0, 1.0, 1e-11);
    n as f64 / (2.0 * t) * (1.0 - integral)
}

/// Graph resummation: `(1/t) sum_{k=1}^{n/2} [1 - exp(-g_{2k-1} t^2 / 2)]`
/// with the same per-size weighting as [`power_x`].
pub fn power_graph(t: f64, profile: &ConnectivityProfile, n: usize) -> Result<f64> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::OddMajoranaCount(n));
    }
    if profile.n_vertices() < n - 1 {
        return Err(Error::MissingConnectivity(n - 1));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let mut sum = 0.0;
    for k in 1..=n / 2 {
        let g = profile.g_k(2 * k - 1)?;
        sum += 1.0 - (-0.5 * g * t * t).exp();
    }
    Ok(sum / t)
}

/// Mean of [`power_graph`] over an ensemble of connectivity profiles.
pub fn power_graph_mean(t: f64, profiles: &[ConnectivityProfile], n: usize) -> Result<f64> {
    if profiles.is_empty() {
        return Err(Error::TooFewSamples { min: 1, got: 0 });
    }
    let mut sum = 0.0;
    for p in profiles {
        sum += power_graph(t, p, n)?;
    }
    Ok(sum / profiles.len() as f64)
}

/// Which closed form a [`PowerCurve`] samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveTag {
    Z,
    X,
    XGaussian,
    Graph,
}

impl std::fmt::Display for CurveTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurveTag::Z => write!(f, "z"),
            CurveTag::X => write!(f, "x"),
            CurveTag::XGaussian => write!(f, "x_gaussian"),
            CurveTag::Graph => write!(f, "graph"),
        }
    }
}

/// A power curve sampled on a strictly increasing time grid (units `1/J`).
#[derive(Debug, Clone)]
pub struct PowerCurve {
    pub model_tag: CurveTag,
    pub n: usize,
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

impl PowerCurve {
    /// Sample an evaluator on a grid; checks monotone times and finite values.
    pub fn sample(
        model_tag: CurveTag,
        n: usize,
        times: Vec<f64>,
        eval: impl Fn(f64) -> Result<f64>,
    ) -> Result<Self> {
        debug_assert!(times.windows(2).all(|w| w[0] < w[1]));
        let values = times.iter().map(|&t| eval(t)).collect::<Result<Vec<_>>>()?;
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::OutOfRange(format!("non-finite power value {bad}")));
        }
        Ok(Self {
            model_tag,
            n,
            times,
            values,
        })
    }

    pub fn peak(&self) -> (f64, f64) {
        let mut best = 0;
        for i in 1..self.values.len() {
            if self.values[i] > self.values[best] {
                best = i;
            }
        }
        (self.times[best], self.values[best])
    }
}

/// Uniform grid of `n_t` points from 0 to `t_max` inclusive.
pub fn time_grid(t_max: f64, n_t: usize) -> Result<Vec<f64>> {
    if n_t == 0 || t_max < 0.0 || !t_max.is_finite() || (n_t > 1 && t_max == 0.0) {
        return Err(Error::InvalidTimeGrid { t_max, n_t });
    }
    if n_t == 1 {
        return Ok(vec![0.0]);
    }
    let dt = t_max / (n_t - 1) as f64;
    Ok((0..n_t).map(|i| i as f64 * dt).collect())
}

/// Result of a bracketed scalar maximization.
#[derive(Debug, Clone, serde::Serialize)]
pub struct OptimumResult {
    /// Optimal charging time (units `1/J`).
    pub tau: f64,
    /// Power at the optimum (units `J`).
    pub p_max: f64,
    /// Search interval.
    pub bracket: (f64, f64),
    /// Absolute tolerance achieved on `tau`.
    pub tolerance: f64,
    /// True when the coarse scan found no single interior maximum and the
    /// grid argmax was returned instead.
    pub grid_fallback: bool,
}

/// Maximize a power curve on `bracket`: coarse scan with 512 points to
/// locate and verify a single interior maximum, then golden-section
/// refinement to an absolute `tau` tolerance of `1e-6`. If the scan does not
/// see exactly one interior local maximum the grid argmax is returned with
/// `grid_fallback` set.
pub fn find_optimum(eval: impl Fn(f64) -> f64, bracket: (f64, f64)) -> Result<OptimumResult> {
    let (lo, hi) = bracket;
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::OutOfRange(format!("bad bracket [{lo}, {hi}]")));
    }
    let step = (hi - lo) / (COARSE_POINTS - 1) as f64;
    let grid: Vec<f64> = (0..COARSE_POINTS).map(|i| lo + i as f64 * step).collect();
    let vals: Vec<f64> = grid.iter().map(|&t| eval(t)).collect();

    let mut best = 0;
    for i in 1..vals.len() {
        if vals[i] > vals[best] {
            best = i;
        }
    }
    let interior_maxima = (1..vals.len() - 1)
        .filter(|&i| vals[i] > vals[i - 1] && vals[i] > vals[i + 1])
        .count();

    if interior_maxima != 1 || best == 0 || best == vals.len() - 1 {
        return Ok(OptimumResult {
            tau: grid[best],
            p_max: vals[best],
            bracket,
            tolerance: step,
            grid_fallback: true,
        });
    }

    let (mut a, mut b) = (grid[best - 1], grid[best + 1]);
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = eval(x1);
    let mut f2 = eval(x2);
    while b - a > TAU_TOLERANCE {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = eval(x2);
        }
    }
    let tau = 0.5 * (a + b);
    Ok(OptimumResult {
        tau,
        p_max: eval(tau),
        bracket,
        tolerance: TAU_TOLERANCE,
        grid_fallback: false,
    })
}

/// Catalan number `C_m = (2m)! / (m! (m+1)!)`, exact for `m <= 30`.
pub fn catalan(m: usize) -> Result<u64> {
    if m > 30 {
        return Err(Error::OutOfRange(format!(
            "catalan({m}) exceeds the exact integer range (m <= 30)"
        )));
    }
    let mut c: u128 = 1;
    for k in 0..m as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    Ok(c as u64)
}

/// Brute-force count of non-crossing perfect matchings of `2m` ordered
/// points.
///
/// Backtracking enumeration: repeatedly pair the lowest unmatched point with
/// every unmatched partner, pruning as soon as a chord crossing appears.
/// Serves as the independent oracle for [`catalan`] and for the Taylor
/// coefficients of [`f_propagator`].
pub fn noncrossing_pairing_count(m: usize) -> Result<u64> {
    if m > 12 {
        return Err(Error::OutOfRange(format!(
            "noncrossing_pairing_count({m}) enumeration is capped at m <= 12"
        )));
    }
    fn rec(matched: &mut [Option<usize>], pairs: &mut Vec<(usize, usize)>, count: &mut u64) {
        let a = match matched.iter().position(|s| s.is_none()) {
            None => {
                *count += 1;
                return;
            }
            Some(a) => a,
        };
        for b in (a + 1)..matched.len() {
            if matched[b].is_some() {
                continue;
            }
            // every existing pair (c, d) has c < a; chords cross iff c < a < d < b
            if pairs.iter().any(|&(_, d)| d > a && d < b) {
                continue;
            }
            matched[a] = Some(b);
            matched[b] = Some(a);
            pairs.push((a, b));
            rec(matched, pairs, count);
            pairs.pop();
            matched[a] = None;
            matched[b] = None;
        }
    }
    let mut matched = vec![None; 2 * m];
    let mut pairs = Vec::with_capacity(m);
    let mut count = 0;
    rec(&mut matched, &mut pairs, &mut count);
    Ok(count)
}

/// One order of the propagator series check: the `t^(2m)` coefficient of
/// [`f_propagator`] is `(-1)^m catalan / denominator` with
/// `denominator = (2m)!`, and the enumerated matching count must reproduce
/// the Catalan numerator exactly.
#[derive(Debug, Clone, Copy)]
pub struct FSeriesTerm {
    pub m: usize,
    /// Numerator from the closed form `C_m`.
    pub catalan: u64,
    /// Numerator from brute-force matching enumeration.
    pub enumerated: u64,
    /// Common denominator `(2m)!`.
    pub denominator: u128,
}

impl FSeriesTerm {
    /// Exact rational equality of both coefficient routes: the enumerated
    /// count matches `C_m`, and `C_m / (2m)! == 1 / (m! (m+1)!)` as
    /// cross-multiplied integers (the series actually used by
    /// [`f_propagator`]).
    pub fn matches(&self) -> bool {
        self.enumerated == self.catalan
            && self.catalan as u128 * factorial(self.m) * factorial(self.m + 1) == self.denominator
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Compare the series coefficients of `f` against the matching enumeration
/// for all orders `m <= order` (exact integer arithmetic throughout).
pub fn f_series_check(order: usize) -> Result<Vec<FSeriesTerm>> {
    if order > 12 {
        return Err(Error::OutOfRange(format!(
            "f_series_check order {order} exceeds the enumeration cap 12"
        )));
    }
    (0..=order)
        .map(|m| {
            Ok(FSeriesTerm {
                m,
                catalan: catalan(m)?,
                enumerated: noncrossing_pairing_count(m)?,
                denominator: factorial(2 * m),
            })
        })
        .collect()
}

/// Power-law fit `value = prefactor * n^exponent` by least squares in
/// log-log coordinates.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub prefactor: f64,
    /// Sum of squared log-residuals.
    pub residual: f64,
}

pub fn scaling_fit(points: &[(f64, f64)]) -> Result<PowerLawFit> {
    if points.len() < 3 || points.iter().any(|&(n, v)| n <= 0.0 || v <= 0.0) {
        return Err(Error::InvalidFitInput);
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, v)| (n.ln(), v.ln())).collect();
    let m = logs.len() as f64;
    let sx: f64 = logs.iter().map(|p| p.0).sum();
    let sy: f64 = logs.iter().map(|p| p.1).sum();
    let sxx: f64 = logs.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = logs.iter().map(|p| p.0 * p.1).sum();
    let denom = m * sxx - sx * sx;
    if denom.abs() < 1e-300 {
        return Err(Error::InvalidFitInput);
    }
    let exponent = (m * sxy - sx * sy) / denom;
    let intercept = (sy - exponent * sx) / m;
    let residual = logs
        .iter()
        .map(|&(x, y)| (y - intercept - exponent * x).powi(2))
        .sum();
    Ok(PowerLawFit {
        exponent,
        prefactor: intercept.exp(),
        residual,
    })
}

/// Adaptive Simpson quadrature with relative tolerance `rel_tol`.
fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let fa = f(a);
    let fm = f(0.5 * (a + b));
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    let tol = rel_tol * whole.abs().max(f64::MIN_POSITIVE);
    rec(f, a, b, fa, fm, fb, whole, tol, 52)
}
