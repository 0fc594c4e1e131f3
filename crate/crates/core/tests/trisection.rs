mod common;

use proptest::prelude::*;
use trisect::trisection::smith::{cokernel, smith_normal_form, IntMatrix};
use trisect::trisection::{
    connected_sum, euler_char_closed, euler_char_relative, heegaard_h1, stabilization_delta, stabilize,
    IntersectionForm, Params, RelTrisectionParams, SpineEncoding, TrisectionDiagram, TrisectionParams,
};
use trisect::Sector;

fn closed() -> impl Strategy<Value = TrisectionParams> {
    (0u32..7).prop_flat_map(|g| {
        prop::array::uniform3(0..=g).prop_map(move |k| TrisectionParams::new(g, k))
    })
}

fn relative() -> impl Strategy<Value = RelTrisectionParams> {
    (0u32..5, 0u32..3, 1u32..4).prop_flat_map(|(g, p, b)| {
        let g = g.max(p);
        prop::array::uniform3(0..=g + b - 1).prop_map(move |k| RelTrisectionParams::new(g, k, p, b))
    })
}

fn sector() -> impl Strategy<Value = Sector> {
    (0usize..3).prop_map(Sector::from_idx)
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn rows_of(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Product of random elementary row operations on `n` rows.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        let mut e = IntMatrix::identity(n);
        if i == j {
            let mut rows = rows_of(&e);
            rows.swap(0, i);
            e = IntMatrix::from_rows(&rows);
        } else {
            let mut rows = rows_of(&e);
            rows[i][j] = c;
            e = IntMatrix::from_rows(&rows);
        }
        u = e.mul(&u);
    }
    u
}

proptest! {
    #[test]
    fn euler_matches_handle_count(p in closed()) {
        let k = p.k.map(i64::from);
        prop_assert_eq!(euler_char_closed(&p).unwrap(), common::handle_euler(i64::from(p.genus), k));
    }

    #[test]
    fn relative_euler_matches_pieces(p in relative()) {
        let want = common::pieces_euler(
            i64::from(p.genus),
            p.k.map(i64::from),
            i64::from(p.page_genus),
            i64::from(p.boundary_components),
        );
        prop_assert_eq!(euler_char_relative(&p).unwrap(), want);
    }

    #[test]
    fn stabilization_keeps_euler(p in closed(), s in sector()) {
        let q = p.stabilize(s);
        prop_assert_eq!(euler_char_closed(&q).unwrap(), euler_char_closed(&p).unwrap());
        let mut unit = [0; 3];
        unit[s.idx()] = 1;
        prop_assert_eq!(stabilization_delta(&q.into(), &p.into()).unwrap(), Some(unit));
        let r = RelTrisectionParams::standard_ball();
        let rs = stabilize(&Params::from(r), s);
        prop_assert_eq!(stabilization_delta(&rs, &r.into()).unwrap(), Some(unit));
    }

    #[test]
    fn connected_sum_monoid(a in closed(), b in closed(), c in closed()) {
        let ab = connected_sum(&a, &b).unwrap();
        prop_assert_eq!(ab, connected_sum(&b, &a).unwrap());
        prop_assert_eq!(
            connected_sum(&ab, &c).unwrap(),
            connected_sum(&a, &connected_sum(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(connected_sum(&a, &TrisectionParams::sphere()).unwrap(), a);
    }

    #[test]
    fn smith_matches_determinantal_divisors(rows in matrix(4)) {
        let cols = rows[0].len();
        let snf = smith_normal_form(&IntMatrix::from_rows(&rows));
        let mut diag = snf.diagonal.clone();
        diag.resize(rows.len().min(cols), 0);
        prop_assert_eq!(diag, common::invariant_factors(&rows, cols));
        let a = IntMatrix::from_rows(&rows);
        let d = snf.left.mul(&a).mul(&snf.right);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j { snf.diagonal.get(i).copied().unwrap_or(0) } else { 0 };
                prop_assert_eq!(d.row(i)[j], want);
            }
        }
    }

    #[test]
    fn cokernel_invariant_under_unimodular_change(
        rows in matrix(4),
        left in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..6),
        right in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..6),
    ) {
        let a = IntMatrix::from_rows(&rows);
        let b = unimodular(a.rows(), &left).mul(&a).mul(&unimodular(a.cols(), &right).transpose());
        prop_assert_eq!(cokernel(&a), cokernel(&b));
        prop_assert_eq!(cokernel(&a), common::cokernel_oracle(&rows, a.cols()));
    }

    #[test]
    fn heegaard_h1_symmetric(
        a in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 2),
        b in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 2),
    ) {
        let form = IntersectionForm::new(2);
        let ab = heegaard_h1(&form, &a, &b).unwrap();
        let ba = heegaard_h1(&form, &b, &a).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn normalization_idempotent(
        sys in prop::array::uniform3(prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 0..=1)),
        flips in prop::array::uniform3(any::<bool>()),
    ) {
        let d = TrisectionDiagram { genus: 1, boundary_components: 0, cut_systems: sys };
        let n = d.normalized();
        prop_assert_eq!(n.normalized(), n.clone());
        let mut flipped = d.clone();
        for (s, f) in flipped.cut_systems.iter_mut().zip(flips) {
            if f {
                s.iter_mut().for_each(|v| v.iter_mut().for_each(|x| *x = -*x));
            }
        }
        let (x, y) = (SpineEncoding::new(d), SpineEncoding::new(flipped));
        prop_assert!(x.spine_equal(&x));
        prop_assert!(x.spine_equal(&y) && y.spine_equal(&x));
    }
}
