use proptest::prelude::*;
use trisect::geometry::{candidates, PointC2, PolyhedronQM};
use trisect::pipeline::upper_semicontinuity_failures;
use trisect::reconstruct::{
    make_reducible, reconstruct_z, shilov_glue_eval, ShilovGlue, SplittingData, Verdict,
};
use trisect::trisection::{validate_params, RelTrisectionParams, TrisectionDiagram, TrisectionParams};
use trisect::Sector;

fn closed() -> impl Strategy<Value = TrisectionParams> {
    (0u32..4).prop_flat_map(|g| prop::array::uniform3(0..=g).prop_map(move |k| TrisectionParams::new(g, k)))
}

fn spine(genus: u32, b: u32) -> TrisectionDiagram {
    TrisectionDiagram {
        genus,
        boundary_components: b,
        cut_systems: [vec![], vec![], vec![]],
    }
}

proptest! {
    #[test]
    fn trivial_splitting_on_balls(a in closed(), b in closed()) {
        let r = make_reducible(&a, &b).unwrap();
        let base = RelTrisectionParams::standard_ball();
        let s = SplittingData { j1: r.params.k, j2: [0; 3] };
        let out = reconstruct_z(&r, &s, &base, &spine(0, 1), &spine(0, 1)).unwrap();
        prop_assert!(validate_params(&out.z_params.into()).valid);
        prop_assert_eq!(out.z_params.k, [0; 3]);
        prop_assert_eq!(out.verdict, Verdict::DiffeomorphicBySpine);
    }

    #[test]
    fn complementary_ranks_sum(a in closed(), b in closed(), pick in any::<prop::sample::Index>()) {
        let r = make_reducible(&a, &b).unwrap();
        let all = SplittingData::enumerate(r.params.k);
        let s = all[pick.index(all.len())];
        let g = r.params.genus.max(1);
        let base = RelTrisectionParams::new(g, [0; 3], 0, 1);
        let run = |s: &SplittingData| reconstruct_z(&r, s, &base, &spine(g, 1), &spine(g, 1));
        match (run(&s), run(&s.complement())) {
            (Ok(x), Ok(y)) => {
                let sum: Vec<u32> = (0..3).map(|i| x.z_sector_ranks[i] + y.z_sector_ranks[i]).collect();
                prop_assert_eq!(sum, r.params.k.to_vec());
            }
            _ => prop_assert!(s.j2.iter().chain(&s.j1).any(|&j| j > g)),
        }
    }

    #[test]
    fn glue_dominates_sector_values(
        x1 in -2.0f64..2.0, x2 in -2.0f64..2.0, y1 in -120.0f64..120.0, y2 in -120.0f64..120.0,
        w in prop::array::uniform3(0.5f64..3.0),
    ) {
        let glue = ShilovGlue::weighted(100.0, 1e-7, w);
        let p = PointC2::new(x1, y1, x2, y2);
        let v = shilov_glue_eval(&glue, &p).unwrap();
        let c = candidates(&p, glue.band);
        for s in Sector::ALL.into_iter().filter(|s| c[s.idx()]) {
            prop_assert!(v >= glue.sector_value(s, &p).unwrap());
        }
        prop_assert!(v >= 0.0);
    }
}

#[test]
fn glue_upper_semicontinuous() {
    let q = PolyhedronQM::new(100.0).unwrap();
    for w in [[1.0; 3], [1.0, 2.0, 3.0], [3.0, 0.5, 1.0]] {
        let glue = ShilovGlue::weighted(100.0, 1e-7, w);
        assert_eq!(upper_semicontinuity_failures(&glue, &q, 300, 9, 1e-9).unwrap(), 0, "weights {w:?}");
    }
}
