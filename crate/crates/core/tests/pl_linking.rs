use mwlinks::algebra::{q, qr};
use mwlinks::pl::*;
use mwlinks::Exec;
use proptest::prelude::*;

fn origin() -> Point {
    [q(0), q(0), q(0)]
}

/// Signed count of the edges of `l` crossing the open disk x² + y² < r², z = 0.
fn disk_crossings(l: &PLLoop, r: f64) -> i64 {
    let v: Vec<[f64; 3]> = l.vertices().iter().map(|p| p.clone().map(|x| mwlinks::algebra::to_f64(&x))).collect();
    let n = v.len();
    let mut s = 0;
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        if (a[2] > 0.0) != (b[2] > 0.0) {
            let t = a[2] / (a[2] - b[2]);
            let (x, y) = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]));
            if x * x + y * y < r * r {
                s += if b[2] > a[2] { 1 } else { -1 };
            }
        }
    }
    s
}

#[test]
fn torus_curve_links_core_by_meridian_count() {
    let core = circle(&origin(), 0, 1, &q(4), 64);
    for qq in 1..=5 {
        let t = torus_curve(1, qq, &q(4), &q(1), 16);
        let lk = gauss_linking(&t, &core).unwrap();
        assert_eq!(lk.abs(), qq as i64);
        // the core's axis pierces the torus hole: the curve winds once around it
        let axis = PLLoop::from_ints(&[[0, 0, -50], [0, 0, 50], [100, 0, 50], [100, 0, -50]]).unwrap();
        assert_eq!(gauss_linking(&t, &axis).unwrap().abs(), 1);
    }
}

#[test]
fn disk_oracle_agrees_on_hopf_pair() {
    let a = circle(&origin(), 0, 1, &q(1), 32);
    let b = circle(&[q(1), q(0), q(0)], 0, 2, &q(1), 32);
    assert_eq!(gauss_linking(&b, &a).unwrap().abs(), disk_crossings(&b, 0.98).abs());
}

#[test]
fn model_matrices_match_partition_data() {
    let m = build_wga_model(&[2, 1]).unwrap();
    assert_eq!(linking_matrix(&m).unwrap(), vec![vec![8, 4], vec![2, 6]]);
    let m = build_wga_model(&[1, 1]).unwrap();
    assert_eq!(linking_matrix(&m).unwrap(), vec![vec![6, 2], vec![2, 6]]);
}

#[test]
fn model_loops_are_disjoint_and_simple() {
    for alpha in [vec![1], vec![2, 1], vec![1, 1, 1], vec![3]] {
        let m = build_wga_model(&alpha).unwrap();
        m.validate(Exec::Sequential).unwrap();
        for c in &m.components {
            // at least 16 vertices per turn
            assert!(c.len() >= 16 * 2 * (alpha.iter().sum::<u32>() as usize));
        }
    }
}

#[test]
fn reversed_component_negates_diagonal() {
    let mut m = build_wga_model(&[1]).unwrap();
    m.components[0] = m.components[0].reversed();
    match linking_matrix(&m) {
        Err(PlError::LinkingMismatch { got, expected, .. }) => assert_eq!(got, -expected),
        other => panic!("{other:?}"),
    }
}

#[test]
fn partition_generator_counts() {
    // p(6, k) for k = 1..6
    let counts: Vec<usize> = (1..=6).map(|k| partitions(6, k).len()).collect();
    assert_eq!(counts, vec![1, 3, 3, 2, 1, 1]);
}

#[test]
fn bridge_to_link_diagrams() {
    let a = circle(&origin(), 0, 1, &q(1), 24);
    let b = circle(&[q(1), q(0), q(0)], 0, 2, &q(1), 24);
    let t = torus_curve(1, 3, &q(4), &q(1), 16);
    let core = circle(&origin(), 0, 1, &q(4), 48);
    for (x, y) in [(&a, &b), (&t, &core)] {
        let lk = gauss_linking(x, y).unwrap();
        for seed in 0..3 {
            let d = link_diagram(&[x, y], seed).unwrap();
            assert_eq!(d.w_lambda().unwrap() - d.writhe_w().unwrap(), 2 * lk);
        }
    }
}

fn square_loop(cx: i64, cy: i64, cz: i64, s: i64, plane: u8) -> PLLoop {
    let pts: Vec<[i64; 3]> = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
        .iter()
        .map(|&(u, v)| match plane {
            0 => [cx + u * s, cy + v * s, cz],
            1 => [cx + u * s, cy, cz + v * s],
            _ => [cx, cy + u * s, cz + v * s],
        })
        .collect();
    PLLoop::from_ints(&pts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn linking_is_symmetric_and_direction_free(
        c in proptest::array::uniform3(-6i64..=6),
        s1 in 2i64..=6, s2 in 2i64..=6, p1 in 0u8..3, p2 in 0u8..3,
        seeds in proptest::collection::vec(any::<u64>(), 5),
    ) {
        let a = square_loop(0, 0, 0, s1, p1);
        let b = square_loop(c[0], c[1], c[2], s2, p2);
        match gauss_linking(&a, &b) {
            Ok(lk) => {
                prop_assert_eq!(gauss_linking(&b, &a).unwrap(), lk);
                prop_assert_eq!(gauss_linking(&a.reversed(), &b).unwrap(), -lk);
                for s in seeds {
                    prop_assert_eq!(gauss_linking_seeded(&a, &b, s).unwrap(), lk);
                }
            }
            Err(e) => prop_assert_eq!(e, PlError::LoopsIntersect),
        }
    }

    #[test]
    fn torus_curve_scaled_keeps_linking(qq in 1usize..=4, num in 1i64..=3) {
        let r = qr(num, 4);
        let t = torus_curve(1, qq, &q(3), &r, 16);
        let core = circle(&origin(), 0, 1, &q(3), 48);
        prop_assert_eq!(gauss_linking(&t, &core).unwrap().abs(), qq as i64);
    }
}
