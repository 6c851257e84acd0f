//! Shared test helpers: random graph generators and a host-graph oracle that
//! evaluates the curvature forms straight from their defining identities.

#![allow(dead_code)]

use quartic_sharp::linalg::{smallest_eigenvalue, DenseMatrix};
use quartic_sharp::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// `G(n, p)` conditioned on connectivity.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform-ish random `d`-regular simple graph by the pairing model with
/// rejection. `n * d` must be even.
pub fn random_regular_graph(rng: &mut impl Rng, n: usize, d: usize) -> Graph {
    assert!(n * d % 2 == 0 && d < n);
    'retry: loop {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        points.shuffle(rng);
        let mut g = vec![vec![false; n]; n];
        let mut edges = Vec::new();
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g[u][v] {
                continue 'retry;
            }
            g[u][v] = true;
            g[v][u] = true;
            edges.push((u, v));
        }
        return Graph::from_edge_list(n, &edges).unwrap();
    }
}

fn laplacian(g: &Graph, f: &[f64]) -> Vec<f64> {
    (0..g.n())
        .map(|v| g.neighbors(v).map(|w| f[w] - f[v]).sum())
        .collect()
}

/// `Γ(f, g)` at every vertex from `2Γ(f,g) = Δ(fg) - fΔg - gΔf`.
pub fn gamma(g: &Graph, f: &[f64], h: &[f64]) -> Vec<f64> {
    let fh: Vec<f64> = f.iter().zip(h).map(|(a, b)| a * b).collect();
    let (l_fh, l_f, l_h) = (laplacian(g, &fh), laplacian(g, f), laplacian(g, h));
    (0..g.n())
        .map(|v| 0.5 * (l_fh[v] - f[v] * l_h[v] - h[v] * l_f[v]))
        .collect()
}

/// `Γ₂(f, f)(x)` from `2Γ₂(f,f) = ΔΓ(f,f) - 2Γ(f,Δf)`.
pub fn gamma2_at(g: &Graph, f: &[f64], x: usize) -> f64 {
    let gff = gamma(g, f, f);
    let lf = laplacian(g, f);
    0.5 * (laplacian(g, &gff)[x] - 2.0 * gamma(g, f, &lf)[x])
}

pub fn gamma_at(g: &Graph, f: &[f64], x: usize) -> f64 {
    gamma(g, f, f)[x]
}

/// Matrices of `f ↦ Γ(f,f)(x)` and `f ↦ Γ₂(f,f)(x)` over `coords`, by
/// polarisation of the functional definitions in the host graph.
pub fn host_forms(g: &Graph, x: usize, coords: &[usize]) -> (DenseMatrix, DenseMatrix) {
    let unit = |i: usize, s: f64, j: usize| {
        let mut f = vec![0.0; g.n()];
        f[coords[i]] += 1.0;
        f[coords[j]] += s;
        f
    };
    let polar = |q: &dyn Fn(&[f64]) -> f64, i: usize, j: usize| {
        if i == j {
            let mut f = vec![0.0; g.n()];
            f[coords[i]] = 1.0;
            q(&f)
        } else {
            0.25 * (q(&unit(i, 1.0, j)) - q(&unit(i, -1.0, j)))
        }
    };
    let k = coords.len();
    let g1 = DenseMatrix::from_fn(k, |i, j| polar(&|f| gamma_at(g, f, x), i, j));
    let g2 = DenseMatrix::from_fn(k, |i, j| polar(&|f| gamma2_at(g, f, x), i, j));
    (g1, g2)
}

/// Curvature at `x` computed on the host graph: bisection on the host
/// forms over `B2(x) \ {x}` with the same bracket and tolerance rules as
/// the library.
pub fn host_curvature(g: &Graph, x: usize, tol: f64) -> f64 {
    let coords: Vec<usize> = g.ball(x, 2).into_iter().filter(|&v| v != x).collect();
    let (g1, g2) = host_forms(g, x, &coords);
    let feasible = |k: f64| {
        let m = DenseMatrix::from_fn(coords.len(), |i, j| g2.get(i, j) - k * g1.get(i, j));
        smallest_eigenvalue(&m) >= -quartic_sharp::curvature::PSD_REL_TOL * (1.0 + m.frobenius_norm())
    };
    let d = g.degree(x) as f64;
    let mut lo = -2.0 * d * d;
    while !feasible(lo) {
        lo *= 2.0;
    }
    let mut hi = 1.0;
    while feasible(hi) {
        lo = lo.max(hi);
        hi *= 2.0;
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
}
