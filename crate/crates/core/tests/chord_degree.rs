use mwlinks::chord::{enumerate_planar, enumerate_planar_diagrams, ChordDiagram, RawDiagram};
use mwlinks::degree::{
    classify, compositions, enumerate_degree_diagrams, hopf_divisor_valid, refine_to_hopf, refinements,
    DegreeChordDiagram, MarkedDivisor,
};
use mwlinks::Exec;
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Rotation classes of non-crossing perfect matchings on 2n points, from all matchings.
fn nc_rotation_classes(n: usize) -> usize {
    fn all(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            all(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let m = 2 * n;
    let mut out = Vec::new();
    all(&mut (0..m).collect(), &mut Vec::new(), &mut out);
    let crosses = |&(a, b): &(usize, usize), &(c, d): &(usize, usize)| (a < c && c < b && b < d) || (c < a && a < d && d < b);
    let mut classes = BTreeSet::new();
    for mt in out {
        if mt.iter().enumerate().any(|(i, x)| mt[i + 1..].iter().any(|y| crosses(x, y))) {
            continue;
        }
        let mut partner = vec![0; m];
        for &(a, b) in &mt {
            partner[a] = b;
            partner[b] = a;
        }
        // offsets to the partner, minimised over rotations
        let key = (0..m.max(1))
            .map(|r| (0..m).map(|i| (partner[(i + r) % m] + m - (i + r) % m) % m).collect::<Vec<_>>())
            .min()
            .unwrap();
        classes.insert(key);
    }
    classes.len()
}

#[test]
fn single_circle_counts_match_rotation_classes() {
    for delta in 0..=6 {
        assert_eq!(enumerate_planar(1, delta).len(), nc_rotation_classes(delta), "delta {delta}");
    }
}

#[test]
fn isomorphism_is_an_equivalence() {
    let ds = enumerate_planar_diagrams(2, 3, Exec::Sequential);
    for a in &ds {
        assert!(a.is_isomorphic(a));
        for b in &ds {
            assert_eq!(a.is_isomorphic(b), b.is_isomorphic(a));
            assert_eq!(a.is_isomorphic(b), a.canonical_form() == b.canonical_form());
        }
    }
    // enumeration yields pairwise distinct classes
    let codes: BTreeSet<_> = ds.iter().map(|d| d.canonical_form()).collect();
    assert_eq!(codes.len(), ds.len());
}

#[test]
fn compositions_count_binomial() {
    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for n in 1..=9 {
        for k in 1..=n {
            let cs = compositions(n, k);
            assert_eq!(cs.len(), binom(n - 1, k - 1));
            assert!(cs.iter().all(|c| c.len() == k && c.iter().sum::<u32>() as usize == n));
        }
    }
}

#[test]
fn enumerated_degree_diagrams_have_requested_shape() {
    for (d, g, delta) in [(6, 0, 1), (7, 1, 2), (8, 2, 1), (8, 0, 3)] {
        let ds = enumerate_degree_diagrams(d, g, delta, Exec::Sequential).unwrap();
        let codes: BTreeSet<_> = ds.iter().map(|x| x.decorated_code()).collect();
        assert_eq!(codes.len(), ds.len());
        for x in &ds {
            assert_eq!(x.degree() as i64, d);
            assert_eq!(x.genus() as i64, g);
            assert_eq!(x.delta() as i64, delta);
            assert!(x.base.is_planar());
        }
    }
}

#[test]
fn refinements_coarsen_back() {
    for (d, g, delta) in [(6, 0, 0), (6, 0, 1), (7, 1, 1), (8, 1, 0)] {
        for dcd in enumerate_degree_diagrams(d, g, delta, Exec::Sequential).unwrap() {
            let inserted = (d - 2) as usize - dcd.loops.len();
            let rs = refinements(&dcd);
            assert!(!rs.is_empty());
            for r in &rs {
                assert_eq!(r.inserted_indices().len(), inserted);
                assert_eq!(r.coarsen().unwrap().decorated_code(), dcd.decorated_code());
                assert!(r.as_degree_diagram().unwrap().is_nodal_hopf());
            }
            for h in refine_to_hopf(&dcd) {
                assert!(h.is_nodal_hopf());
                assert_eq!(h.degree() as i64, d);
                assert_eq!(h.delta(), dcd.delta() + inserted);
            }
        }
    }
}

#[test]
fn divisor_support_can_move_within_a_loop() {
    // two chords on one circle, plain points on every arc
    let raw = RawDiagram {
        circles: vec![["a", "p", "b", "q", "c", "r", "d", "s"].map(String::from).to_vec()],
        chords: vec![["a".into(), "d".into()], ["b".into(), "c".into()]],
    };
    let cd = ChordDiagram::validate(&raw).unwrap();
    // p and r lie on one loop (between the chords), q alone, s outside
    let base = MarkedDivisor::from_points(&cd, &[("p", 1), ("q", 1), ("s", 3)], 0).unwrap();
    let moved = MarkedDivisor::from_points(&cd, &[("r", 1), ("q", 1), ("s", 3)], 0).unwrap();
    assert_eq!(base.per_loop(), moved.per_loop());
    assert!(hopf_divisor_valid(&base).unwrap());
    assert_eq!(hopf_divisor_valid(&base).unwrap(), hopf_divisor_valid(&moved).unwrap());
    assert!(MarkedDivisor::from_points(&cd, &[("a", 1)], 0).is_err());
}

fn relabel(raw: &RawDiagram, rot: &[usize], perm: &[usize], rename: &dyn Fn(&str) -> String) -> RawDiagram {
    let circles: Vec<Vec<String>> = perm
        .iter()
        .map(|&k| {
            let c = &raw.circles[k];
            let r = rot[k] % c.len().max(1);
            c[r..].iter().chain(&c[..r]).map(|s| rename(s)).collect()
        })
        .collect();
    let mut chords: Vec<[String; 2]> = raw.chords.iter().map(|[a, b]| [rename(b), rename(a)]).collect();
    chords.reverse();
    RawDiagram { circles, chords }
}

/// Random diagram: `l` circles of random sizes, random pairs of points joined by chords.
fn random_raw(sizes: &[usize], pairs: &[(usize, usize)]) -> RawDiagram {
    let mut names = Vec::new();
    let circles: Vec<Vec<String>> = sizes
        .iter()
        .map(|&s| {
            (0..s)
                .map(|_| {
                    names.push(format!("v{}", names.len()));
                    names.last().unwrap().clone()
                })
                .collect()
        })
        .collect();
    let mut used = vec![false; names.len()];
    let mut chords = Vec::new();
    for &(a, b) in pairs {
        let (a, b) = (a % names.len(), b % names.len());
        if a != b && !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            chords.push([names[a].clone(), names[b].clone()]);
        }
    }
    RawDiagram { circles, chords }
}

fn oracle_planar(raw: &RawDiagram) -> bool {
    let find = |p: &str| {
        raw.circles.iter().enumerate().find_map(|(k, c)| c.iter().position(|x| x == p).map(|i| (k, i))).unwrap()
    };
    let spans: Vec<_> = raw.chords.iter().map(|[a, b]| (find(a), find(b))).collect();
    if spans.iter().any(|(x, y)| x.0 != y.0) {
        return false;
    }
    let iv: Vec<_> = spans.iter().map(|(x, y)| (x.0, x.1.min(y.1), x.1.max(y.1))).collect();
    !iv.iter().enumerate().any(|(i, &(k, a, b))| {
        iv[i + 1..].iter().any(|&(k2, c, d)| k == k2 && ((a < c && c < b && b < d) || (c < a && a < d && d < b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn is_planar_matches_oracle(
        sizes in proptest::collection::vec(1usize..7, 1..4),
        pairs in proptest::collection::vec((0usize..30, 0usize..30), 0..8),
    ) {
        let raw = random_raw(&sizes, &pairs);
        let cd = ChordDiagram::validate(&raw).unwrap();
        prop_assert_eq!(cd.is_planar(), oracle_planar(&raw));
        if cd.is_planar() {
            prop_assert_eq!(cd.trace_loops().len(), cd.l() + cd.delta());
        }
    }

    #[test]
    fn canonical_form_ignores_labels_rotation_and_order(
        l in 1usize..=3, delta in 0usize..=4, pick in any::<prop::sample::Index>(),
        rot in proptest::collection::vec(0usize..12, 3), shuffle in any::<bool>(),
    ) {
        let ds = enumerate_planar_diagrams(l, delta, Exec::Sequential);
        let cd = &ds[pick.index(ds.len())];
        let raw = cd.to_raw();
        let mut perm: Vec<usize> = (0..l).collect();
        if shuffle {
            perm.reverse();
        }
        let moved = relabel(&raw, &rot, &perm, &|s| format!("z{s}"));
        let other = ChordDiagram::validate(&moved).unwrap();
        prop_assert_eq!(other.canonical_form(), cd.canonical_form());
        prop_assert!(other.is_isomorphic(cd));
    }

    #[test]
    fn classification_ignores_labels(d in 5i64..=8, pick in any::<prop::sample::Index>(), rot in proptest::collection::vec(0usize..12, 2)) {
        let ds = enumerate_degree_diagrams(d, 1, 1, Exec::Sequential).unwrap();
        let dcd = &ds[pick.index(ds.len())];
        let raw = dcd.to_raw(None);
        let cd_raw = RawDiagram { circles: raw.circles.clone(), chords: raw.chords.clone() };
        let moved = relabel(&cd_raw, &rot, &[1, 0], &|s| format!("{s}'"));
        // empty circles are keyed by position, and the two circles trade places
        let key = |k: &str| match k.strip_prefix("circle:") {
            Some(i) => format!("circle:{}", 1 - i.parse::<usize>().unwrap()),
            None => format!("{k}'"),
        };
        let degrees = raw.degrees.iter().map(|(k, &v)| (key(k), v)).collect();
        let other = DegreeChordDiagram::from_raw(&mwlinks::degree::RawDegreeChord {
            circles: moved.circles, chords: moved.chords, degrees, chirality: None,
        }).unwrap();
        prop_assert_eq!(classify(&other, 1).unwrap(), classify(dcd, 1).unwrap());
        prop_assert_ne!(classify(dcd, 1).unwrap(), classify(dcd, -1).unwrap());
    }
}
