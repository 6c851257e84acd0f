//! Bakry-Emery curvature at the centre of an incomplete 2-ball.
//!
//! With the non-normalised Laplacian `Δf(v) = Σ_{w~v} (f(w) - f(v))`,
//!
//! ```text
//! 2Γ(f,g)  = Δ(fg) - fΔg - gΔf
//! 2Γ₂(f,g) = ΔΓ(f,g) - Γ(f,Δg) - Γ(g,Δf)
//! ```
//!
//! and `K∞(x)` is the largest `K` with `Γ₂(f,f)(x) >= K Γ(f,f)(x)` for all
//! `f`. Both forms at `x` only read `f` on the 2-ball and the edges at the
//! centre and its neighbours, so they are built from the ball alone. Both
//! are translation invariant; the centre coordinate is fixed to zero.
//!
//! Two independent solvers locate `K∞` by bisection on the pencil
//! `Γ₂ - KΓ`: a floating-point one deciding semidefiniteness from the
//! smallest Jacobi eigenvalue, and an exact one over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::ball::IncompleteTwoBall;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{is_psd_exact, smallest_eigenvalue, DenseMatrix};

/// Bisection stops once the bracket is narrower than this.
pub const DEFAULT_TOL: f64 = 1e-9;
/// `|K∞ - (2 + #Δ/D)|` below this counts as sharp.
pub const SHARP_TOL: f64 = 1e-7;
/// `λ_min(M) >= -PSD_REL_TOL (1 + ||M||)` counts as semidefinite.
pub const PSD_REL_TOL: f64 = 1e-12;

/// Symmetric quadratic form over the non-centre vertices of a ball, `S1`
/// first then `S2`. Entries are stored exactly as integer multiples of 1/4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    dim: usize,
    quarters: Vec<i64>,
}

impl QuadraticForm {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Four times the `(i, j)` entry.
    pub fn quarter(&self, i: usize, j: usize) -> i64 {
        self.quarters[i * self.dim + j]
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.quarter(i, j) as f64 / 4.0
    }

    /// `fᵀ Q f`.
    pub fn eval(&self, f: &[f64]) -> f64 {
        assert_eq!(f.len(), self.dim);
        let mut s = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                s += f[i] * self.entry(i, j) * f[j];
            }
        }
        s
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.quarter(i, j) == self.quarter(j, i)))
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.dim, |i, j| self.entry(i, j))
    }
}

/// `4Γ` and `4Γ₂` at the centre over all ball coordinates (centre
/// included), as integer matrices in the vertex order of
/// [`IncompleteTwoBall::to_graph`].
pub(crate) fn full_forms(ball: &IncompleteTwoBall) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let g = ball.to_graph();
    let m = g.n();
    let x = 0;
    // 2Γ_v = Σ_{w~v} (e_w - e_v)(e_w - e_v)ᵀ
    let two_gamma_at = |v: usize| {
        let mut a = vec![vec![0i64; m]; m];
        for w in g.neighbors(v) {
            a[w][w] += 1;
            a[v][v] += 1;
            a[w][v] -= 1;
            a[v][w] -= 1;
        }
        a
    };
    // row of Δ at v
    let lap_at = |v: usize| {
        let mut r = vec![0i64; m];
        for w in g.neighbors(v) {
            r[w] += 1;
            r[v] -= 1;
        }
        r
    };
    let gx = two_gamma_at(x);
    let lx = lap_at(x);
    let mut g2 = vec![vec![0i64; m]; m];
    for y in g.neighbors(x) {
        let gy = two_gamma_at(y);
        let ly = lap_at(y);
        for i in 0..m {
            let di = (i == y) as i64 - (i == x) as i64;
            for j in 0..m {
                // Σ_y (2Γ_y - 2Γ_x) - (T + Tᵀ), T = Σ_y (e_y - e_x)(L_y - L_x)ᵀ
                let dj = (j == y) as i64 - (j == x) as i64;
                g2[i][j] += gy[i][j] - gx[i][j] - di * (ly[j] - lx[j]) - dj * (ly[i] - lx[i]);
            }
        }
    }
    let g1 = gx.iter().map(|r| r.iter().map(|v| 2 * v).collect()).collect();
    (g1, g2)
}

fn drop_centre(full: &[Vec<i64>]) -> QuadraticForm {
    let dim = full.len() - 1;
    let quarters = (1..=dim)
        .flat_map(|i| (1..=dim).map(move |j| full[i][j]))
        .collect();
    QuadraticForm { dim, quarters }
}

/// `f ↦ Γ(f,f)(x)` with `f(x) = 0`; equals `½ Σ_{y∈S1} f(y)²`.
pub fn gamma_form(ball: &IncompleteTwoBall) -> QuadraticForm {
    drop_centre(&full_forms(ball).0)
}

/// `f ↦ Γ₂(f,f)(x)` with `f(x) = 0`.
pub fn gamma2_form(ball: &IncompleteTwoBall) -> QuadraticForm {
    drop_centre(&full_forms(ball).1)
}

/// Γ₂ on the kernel of Γ (functions supported on `S2`) must be diagonal with
/// entries `¼ d⁻(z)`. This is what makes `K∞` finite.
fn check_kernel(ball: &IncompleteTwoBall, g2: &QuadraticForm) -> Result<()> {
    let d = ball.degree();
    for (zi, &pattern) in ball.s2_patterns().iter().enumerate() {
        let z = d + zi;
        if g2.quarter(z, z) != i64::from(pattern.count_ones()) {
            return Err(Error::Inconsistent(format!(
                "Γ₂ diagonal at S2 vertex {zi} is {}, expected in-degree/4",
                g2.entry(z, z)
            )));
        }
        if (d..g2.dim()).any(|w| w != z && g2.quarter(z, w) != 0) {
            return Err(Error::Inconsistent("Γ₂ is not diagonal on S2".into()));
        }
    }
    Ok(())
}

fn round_sig12(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.11e}").parse().unwrap()
    } else {
        x
    }
}

/// Formats with 12 significant digits and always a decimal point (`2.0`).
pub fn format_sig12(x: f64) -> String {
    serde_json::to_string(&round_sig12(x)).unwrap()
}

pub(crate) fn ser_sig12<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig12(*x))
}

/// Curvature summary for one centre.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurvatureReport {
    #[serde(serialize_with = "ser_sig12")]
    pub k_infinity: f64,
    /// `2 + #Δ(x)/D`.
    #[serde(serialize_with = "ser_sig12")]
    pub upper_bound: f64,
    pub sharp: bool,
    pub triangles_vertex: usize,
    pub degree: usize,
}

impl CurvatureReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }
}

fn pencil(g2: &QuadraticForm, g: &QuadraticForm, k: f64) -> DenseMatrix {
    DenseMatrix::from_fn(g.dim(), |i, j| g2.entry(i, j) - k * g.entry(i, j))
}

fn float_feasible(g2: &QuadraticForm, g: &QuadraticForm, k: f64) -> bool {
    let m = pencil(g2, g, k);
    smallest_eigenvalue(&m) >= -PSD_REL_TOL * (1.0 + m.frobenius_norm())
}

fn ensure_centre(ball: &IncompleteTwoBall) -> Result<()> {
    if ball.degree() == 0 {
        return Err(Error::domain("curvature is unbounded at an isolated vertex"));
    }
    Ok(())
}

const MAX_BRACKET_GROWTH: usize = 64;

/// `K∞` at the ball's centre by floating-point bisection.
///
/// The bracket starts at `[-2D², 2 + #Δ/D]` for regular-compatible centres
/// (the upper end is a known bound for `D`-regular graphs). Otherwise the upper
/// end doubles from 1 until the pencil is no longer semidefinite.
pub fn k_infinity(ball: &IncompleteTwoBall, tol: f64) -> Result<CurvatureReport> {
    if !(tol > 0.0) {
        return Err(Error::input(format!("tolerance must be positive, got {tol}")));
    }
    ensure_centre(ball)?;
    let g = gamma_form(ball);
    let g2 = gamma2_form(ball);
    check_kernel(ball, &g2)?;
    let d = ball.degree() as f64;
    let tri = ball.triangles_at_center();
    let upper_bound = 2.0 + tri as f64 / d;
    let feasible = |k: f64| float_feasible(&g2, &g, k);

    let mut lo = -2.0 * d * d;
    let mut grown = 0;
    while !feasible(lo) {
        lo *= 2.0;
        grown += 1;
        if grown > MAX_BRACKET_GROWTH {
            return Err(Error::Inconsistent("no feasible lower curvature bound".into()));
        }
    }
    let regular = ball.is_regular_compatible();
    let k = if regular && feasible(upper_bound) {
        upper_bound
    } else {
        let mut hi = if regular { upper_bound } else { 1.0 };
        if !regular {
            grown = 0;
            while feasible(hi) {
                lo = lo.max(hi);
                hi *= 2.0;
                grown += 1;
                if grown > MAX_BRACKET_GROWTH {
                    return Err(Error::Inconsistent("curvature bracket does not close".into()));
                }
            }
        }
        while hi - lo >= tol {
            let mid = 0.5 * (lo + hi);
            if feasible(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };
    Ok(CurvatureReport {
        k_infinity: k,
        upper_bound,
        sharp: regular && (k - upper_bound).abs() <= SHARP_TOL,
        triangles_vertex: tri,
        degree: ball.degree(),
    })
}

/// Curvature at vertex `x` of a host graph.
pub fn curvature_at(g: &Graph, x: usize, tol: f64) -> Result<CurvatureReport> {
    k_infinity(&IncompleteTwoBall::extract(g, x)?, tol)
}

/// Closed rational interval certified to contain `K∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl ExactInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> f64 {
        ((&self.lo + &self.hi) / BigInt::from(2)).to_f64().unwrap()
    }

    pub fn contains(&self, k: &BigRational) -> bool {
        &self.lo <= k && k <= &self.hi
    }
}

struct ExactPencil {
    g2: Vec<Vec<i64>>,
    g: Vec<Vec<i64>>,
    order: Vec<usize>,
}

impl ExactPencil {
    fn new(ball: &IncompleteTwoBall) -> Self {
        let g = gamma_form(ball);
        let g2 = gamma2_form(ball);
        let dim = g.dim();
        let rows = |q: &QuadraticForm| -> Vec<Vec<i64>> {
            (0..dim).map(|i| (0..dim).map(|j| q.quarter(i, j)).collect()).collect()
        };
        // S2 block is diagonal, eliminating it first keeps the pivots small
        let d = ball.degree();
        let order = (d..dim).chain(0..d).collect();
        ExactPencil {
            g2: rows(&g2),
            g: rows(&g),
            order,
        }
    }

    /// `Γ₂ - KΓ ⪰ 0`, decided on `q(4Γ₂) - p(4Γ)` for `K = p/q`.
    fn feasible(&self, k: &BigRational) -> bool {
        let (p, q) = (k.numer(), k.denom());
        let m: Vec<Vec<BigInt>> = self
            .g2
            .iter()
            .zip(&self.g)
            .map(|(r2, r1)| {
                r2.iter()
                    .zip(r1)
                    .map(|(&a, &b)| q * BigInt::from(a) - p * BigInt::from(b))
                    .collect()
            })
            .collect();
        is_psd_exact(&m, &self.order)
    }
}

/// Independent exact-arithmetic bisection: an interval of width below
/// `1/denom_bound` that contains `K∞`.
pub fn k_infinity_exact(ball: &IncompleteTwoBall, denom_bound: u64) -> Result<ExactInterval> {
    if denom_bound < 2 {
        return Err(Error::input(format!("denominator bound must be >= 2, got {denom_bound}")));
    }
    ensure_centre(ball)?;
    let pencil = ExactPencil::new(ball);
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let d = ball.degree() as i64;
    let mut lo = int(-2 * d * d);
    let mut grown = 0;
    while !pencil.feasible(&lo) {
        lo = &lo * int(2);
        grown += 1;
        if grown > MAX_BRACKET_GROWTH {
            return Err(Error::Inconsistent("no feasible lower curvature bound".into()));
        }
    }
    let mut hi;
    if ball.is_regular_compatible() {
        hi = BigRational::new(
            BigInt::from(2 * d + ball.triangles_at_center() as i64),
            BigInt::from(d),
        );
        if pencil.feasible(&hi) {
            return Ok(ExactInterval { lo: hi.clone(), hi });
        }
    } else {
        hi = int(1);
        grown = 0;
        while pencil.feasible(&hi) {
            if hi > lo {
                lo = hi.clone();
            }
            hi = &hi * int(2);
            grown += 1;
            if grown > MAX_BRACKET_GROWTH {
                return Err(Error::Inconsistent("curvature bracket does not close".into()));
            }
        }
    }
    let target = BigRational::new(BigInt::from(1), BigInt::from(denom_bound));
    while (&hi - &lo) >= target {
        let mid = (&lo + &hi) / int(2);
        if pencil.feasible(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(ExactInterval { lo, hi })
}

/// Exact semidefiniteness of `Γ₂ - KΓ` at one rational `K`.
pub fn pencil_is_psd_exact(ball: &IncompleteTwoBall, k: &BigRational) -> bool {
    ExactPencil::new(ball).feasible(k)
}

/// Floating-point semidefiniteness of `Γ₂ - KΓ` at one `K`.
pub fn pencil_is_psd(ball: &IncompleteTwoBall, k: f64) -> bool {
    float_feasible(&gamma2_form(ball), &gamma_form(ball), k)
}

/// Whether a quartic ball's centre attains `2 + #Δ/4`.
pub fn is_curvature_sharp(ball: &IncompleteTwoBall, tol: f64) -> Result<bool> {
    ball.ensure_quartic()?;
    let report = k_infinity(ball, DEFAULT_TOL.min(tol))?;
    Ok(report.k_infinity >= report.upper_bound - tol)
}
