use mwlinks::chord::enumerate_planar_diagrams;
use mwlinks::link::{random_link_diagram, LinkDiagram, RawLinkDiagram};
use mwlinks::moves::{all_triples, chord_move, chord_move_path, Dir, HopfTriple, PathStep};
use mwlinks::Exec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn diagram(seed: u64) -> LinkDiagram {
    random_link_diagram(&mut ChaCha8Rng::seed_from_u64(seed), 4, 14)
}

fn raw(components: &[&[&str]]) -> RawLinkDiagram {
    RawLinkDiagram {
        components: components.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect(),
        solitary: vec![],
        degree: None,
        genus: None,
    }
}

#[test]
fn hopf_link_linking_number() {
    let d = LinkDiagram::from_raw(&raw(&[&["X1+o", "X2+u"], &["X1+u", "X2+o"]])).unwrap();
    assert_eq!(d.writhe_w(), Some(0));
    assert_eq!(d.doubled_linking(0, 1).unwrap(), 2);
    assert_eq!(d.w_lambda(), Some(2));
}

#[test]
fn wire_format_round_trip() {
    for seed in 0..50 {
        let d = diagram(seed);
        let back = LinkDiagram::from_raw(&d.to_raw()).unwrap();
        assert_eq!(back.writhe_w(), d.writhe_w());
        assert_eq!(back.doubled_lk_matrix(), d.doubled_lk_matrix());
    }
}

/// Replays a move path and compares with the target class.
fn replay(a: &HopfTriple, steps: &[PathStep]) -> HopfTriple {
    let mut cur = a.clone();
    for s in steps {
        let PathStep::Move { chord: [x, y], dir } = s else { panic!("slide step in a move path") };
        let c = cur.base.chord_index(x, y).unwrap();
        cur = chord_move(&cur, c, *dir).unwrap();
    }
    cur
}

#[test]
fn move_paths_replay_to_their_targets() {
    for cd in enumerate_planar_diagrams(2, 3, Exec::Sequential).into_iter().take(6) {
        let ts = all_triples(&cd).unwrap();
        let (a, b) = (&ts[0], &ts[ts.len() - 1]);
        let path = chord_move_path(a, b).unwrap();
        assert_eq!(replay(a, &path).code(), b.code());
        assert!(chord_move_path(a, a).unwrap().is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn w_lambda_identity(seed in any::<u64>()) {
        let d = diagram(seed);
        let w = d.writhe_w().unwrap();
        let n = d.num_components();
        let mut lk2 = 0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    prop_assert_eq!(d.doubled_linking(i, j).unwrap(), d.doubled_linking(j, i).unwrap());
                    lk2 += d.doubled_linking(i, j).unwrap();
                }
            }
        }
        // lk2 counts every pair twice, in doubled units
        prop_assert_eq!(d.w_lambda().unwrap(), w + lk2 / 2);
    }

    #[test]
    fn mirror_negates(seed in any::<u64>()) {
        let d = diagram(seed);
        let m = d.mirrored();
        prop_assert_eq!(m.writhe_w().unwrap(), -d.writhe_w().unwrap());
        prop_assert_eq!(m.w_lambda().unwrap(), -d.w_lambda().unwrap());
        prop_assert_eq!(m.mirrored(), d);
    }

    #[test]
    fn reversal_keeps_invariants(seed in any::<u64>()) {
        let d = diagram(seed);
        let r = d.reversed();
        prop_assert_eq!(r.writhe_w(), d.writhe_w());
        prop_assert_eq!(r.w_lambda(), d.w_lambda());
        prop_assert_eq!(r.doubled_lk_matrix(), d.doubled_lk_matrix());
    }

    #[test]
    fn chord_moves_keep_triples_valid(l in 1usize..=2, delta in 1usize..=4, pick in any::<prop::sample::Index>(),
                                      steps in proptest::collection::vec((0usize..8, any::<bool>()), 1..10)) {
        let ds = enumerate_planar_diagrams(l, delta, Exec::Sequential);
        let cd = &ds[pick.index(ds.len())];
        let mut t = all_triples(cd).unwrap().swap_remove(0);
        for (c, plus) in steps {
            let dir = if plus { Dir::Plus } else { Dir::Minus };
            t = chord_move(&t, c % delta, dir).unwrap();
            prop_assert!(t.is_valid());
        }
    }
}
