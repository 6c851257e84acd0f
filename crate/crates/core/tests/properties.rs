mod common;

use proptest::prelude::*;
use quartic_sharp::ball::enumerate_quartic;
use quartic_sharp::canon::{are_isomorphic, canonical_form};
use quartic_sharp::curvature::{curvature_at, gamma2_form, gamma_form, k_infinity, pencil_is_psd, DEFAULT_TOL};
use quartic_sharp::{Graph, IncompleteTwoBall, NamedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn quartic_balls() -> &'static [IncompleteTwoBall] {
    static BALLS: std::sync::OnceLock<Vec<IncompleteTwoBall>> = std::sync::OnceLock::new();
    BALLS.get_or_init(enumerate_quartic)
}

fn ball_index() -> impl Strategy<Value = usize> {
    0..quartic_balls().len()
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn curvature_and_canonical_form_survive_relabelling(i in ball_index(), seed in any::<u64>()) {
        let ball = &quartic_balls()[i];
        let g = ball.to_graph();
        let perm = permutation(g.n(), seed);
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let before = curvature_at(&g, 0, DEFAULT_TOL).unwrap().k_infinity;
        let after = curvature_at(&h, perm[0], DEFAULT_TOL).unwrap().k_infinity;
        prop_assert!((before - after).abs() < 1e-9);
        let reextracted = IncompleteTwoBall::extract(&h, perm[0]).unwrap().canonical_form();
        prop_assert_eq!(&reextracted, ball);
    }

    #[test]
    fn isomorphism_test_agrees_with_canonical_forms(i in ball_index(), j in ball_index(), seed in any::<u64>()) {
        let g = quartic_balls()[i].to_graph();
        let h = quartic_balls()[j].to_graph();
        let h = h.relabel(&permutation(h.n(), seed));
        prop_assert_eq!(are_isomorphic(&g, &h), i == j);
    }

    #[test]
    fn feasibility_is_monotone(i in ball_index(), a in -40.0f64..4.0, b in -40.0f64..4.0) {
        let ball = &quartic_balls()[i];
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if pencil_is_psd(ball, hi) {
            prop_assert!(pencil_is_psd(ball, lo));
        }
    }
}

#[test]
fn integer_forms_match_the_functional_definitions() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let balls = quartic_balls();
    for _ in 0..100 {
        let ball = &balls[rng.gen_range(0..balls.len())];
        let g = ball.to_graph();
        let coords: Vec<f64> = (1..g.n()).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let mut f = vec![0.0];
        f.extend(&coords);
        let g1 = common::gamma_at(&g, &f, 0);
        let g2 = common::gamma2_at(&g, &f, 0);
        assert!((gamma_form(ball).eval(&coords) - g1).abs() < 1e-9, "Γ on {ball}");
        assert!((gamma2_form(ball).eval(&coords) - g2).abs() < 1e-9, "Γ₂ on {ball}");
    }
}

#[test]
fn gamma2_on_s2_supported_functions_is_a_weighted_sum_of_squares() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for ball in quartic_balls() {
        let g = ball.to_graph();
        let d = ball.degree();
        let mut f = vec![0.0; g.n()];
        let mut want = 0.0;
        for (z, &pattern) in ball.s2_patterns().iter().enumerate() {
            let v = rng.gen_range(-2.0..2.0);
            f[1 + d + z] = v;
            want += 0.25 * f64::from(pattern.count_ones()) * v * v;
        }
        assert!((common::gamma2_at(&g, &f, 0) - want).abs() < 1e-9, "{ball}");
        assert!((gamma2_form(ball).eval(&f[1..]) - want).abs() < 1e-9, "{ball}");
    }
}

#[test]
fn curvature_respects_the_triangle_upper_bound() {
    for ball in quartic_balls() {
        let r = k_infinity(ball, DEFAULT_TOL).unwrap();
        let bound = 2.0 + ball.triangles_at_center() as f64 / 4.0;
        assert_eq!(r.upper_bound, bound);
        assert!(r.k_infinity <= bound + 1e-9, "{ball}: {} > {bound}", r.k_infinity);
    }
}

#[test]
fn ball_curvature_equals_host_graph_curvature_on_named_graphs() {
    for named in NamedGraph::ALL {
        let g = named.build();
        for x in 0..g.n() {
            let lib = curvature_at(&g, x, DEFAULT_TOL).unwrap().k_infinity;
            let host = common::host_curvature(&g, x, DEFAULT_TOL);
            assert!((lib - host).abs() < 1e-9, "{named} at {x}: {lib} vs {host}");
        }
    }
}

#[test]
fn random_graph_curvature_matches_the_host_oracle() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.gen_range(4..=11);
        let g: Graph = common::random_connected_graph(&mut rng, n, 0.4);
        let x = rng.gen_range(0..n);
        let lib = curvature_at(&g, x, DEFAULT_TOL).unwrap().k_infinity;
        let host = common::host_curvature(&g, x, DEFAULT_TOL);
        assert!((lib - host).abs() < 1e-8, "{lib} vs {host} on {}", g.to_edge_list());
    }
}
