use num_complex::Complex64;
use proptest::prelude::*;
use trisect::bridge::{perturb, BridgeSurfaceData, PerturbationMove};
use trisect::geometry::{
    bridge_points, certify_bridge_position, classify, cusp_analysis, fiber, polynomial_cover_check, sector_coverage,
    sector_of, CuspRegion, GraphKind, GraphSurface, PointC2, PolyhedronQM, Scene,
};
use trisect::par::Exec;
use trisect::Sector;

fn rotated_line(theta: f64, eps: f64, z0: Complex64) -> (GraphSurface, f64) {
    let (s, c) = theta.sin_cos();
    let ie = Complex64::new(0.0, -eps);
    let w1 = c * ie + s;
    let w2 = -s * ie + c;
    let re = |w: Complex64| (w * z0).re;
    // Re(w z) = w.re·x − w.im·y
    let det = w1.re * (-w2.im) - (-w1.im) * w2.re;
    let g = GraphSurface {
        kind: GraphKind::Linear,
        epsilon: eps,
        theta,
        translation: [-re(w1), 0.0, -re(w2), 0.0],
        domain: [-1.0, 1.0, -1.0, 1.0],
        pleated: false,
    };
    (g, det.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_graph_single_point(
        theta in 0.0..std::f64::consts::TAU,
        eps in 0.01f64..2.0,
        x0 in -0.5f64..0.5,
        y0 in -0.5f64..0.5,
    ) {
        let z0 = Complex64::new(x0, y0);
        let (g, det) = rotated_line(theta, eps, z0);
        prop_assume!(det > 1e-3);
        let q = PolyhedronQM::new(10.0).unwrap();
        let s = bridge_points(&g, &q, 1e-9).unwrap();
        prop_assert_eq!(s.points.len(), 1);
        let p = s.points[0];
        prop_assert!((p.param[0] - x0).abs() < 1e-9 && (p.param[1] - y0).abs() < 1e-9);
        prop_assert!((p.margin - det).abs() < 1e-9 * det.max(1.0));
    }

    #[test]
    fn sector_ignores_imaginary_parts(
        x1 in -3.0f64..3.0, x2 in -3.0f64..3.0,
        y1 in -50.0f64..50.0, y2 in -50.0f64..50.0,
        d1 in -50.0f64..50.0, d2 in -50.0f64..50.0,
    ) {
        let a = sector_of(&PointC2::new(x1, y1, x2, y2), 1e-7);
        let b = sector_of(&PointC2::new(x1, y1 + d1, x2, y2 + d2), 1e-7);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn cusp_fiber_follows_discriminant(x in -2.0f64..2.0, y in -1.0f64..3.0) {
        let disc = 4.0 * y.powi(3) - 27.0 * x * x;
        let scale = 4.0 * y.abs().powi(3) + 27.0 * x * x;
        prop_assume!(disc.abs() > 1e-6 * scale.max(1e-12));
        let want = if disc > 0.0 { 3 } else { 1 };
        prop_assert_eq!(fiber(x, y).len(), want);
        let region = classify(x, y, 1e-7);
        prop_assert_eq!(region, if disc > 0.0 { CuspRegion::Interior } else { CuspRegion::Exterior });
        prop_assert_eq!(region.expected_fiber(), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn model_cover_is_a_disk(n in 1usize..6, eps in 0.05f64..2.0, seed in any::<u64>()) {
        let r = polynomial_cover_check(n, eps, 20, seed, Exec::default()).unwrap();
        prop_assert!(r.passed);
        prop_assert_eq!(r.lifted_euler, 1);
        prop_assert_eq!(r.lifted_components, 1);
        prop_assert!(r.simple && r.transitive);
    }
}

#[test]
fn pleat_counts_match_perturbation() {
    let q = PolyhedronQM::new(100.0).unwrap();
    for n in 1..=3usize {
        for at in 0..n {
            for s in Sector::ALL {
                let mut targets = vec![None; n];
                targets[at] = Some(s.next());
                let scene = Scene::family(100.0, 10.0, &targets);
                let c = certify_bridge_position(&scene.graphs, &q, 10.0, 1e-9).unwrap();
                assert!(c.valid, "{:?}", c.failures);
                let want = perturb(&BridgeSurfaceData::trivial_disks(n as u32), PerturbationMove::new(s)).unwrap();
                assert!(c.matches(&want), "n = {n}, disk {at}, sector {s}: {:?}", c.counts());
            }
        }
    }
}

#[test]
fn parallel_and_sequential_agree() {
    let q = PolyhedronQM::new(100.0).unwrap();
    let a = sector_coverage(&q, 50_000, 5, 1e-7, Exec::Sequential);
    let b = sector_coverage(&q, 50_000, 5, 1e-7, Exec::Parallel);
    assert_eq!(a, b);
    assert_eq!(cusp_analysis(5000, 50, 2, 1e-7, Exec::Sequential), cusp_analysis(5000, 50, 2, 1e-7, Exec::Parallel));
    let scene = Scene::family(100.0, 10.0, &[None, Some(Sector::TWO)]);
    let opts = trisect::geometry::CertifyOptions::default();
    let x = trisect::geometry::certify_with(&scene.graphs, &q, 10.0, &opts, Exec::Sequential).unwrap();
    let y = trisect::geometry::certify_with(&scene.graphs, &q, 10.0, &opts, Exec::Parallel).unwrap();
    assert_eq!(serde_json::to_string(&x).unwrap(), serde_json::to_string(&y).unwrap());
}
