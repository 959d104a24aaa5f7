use mwlinks::algebra::{q, qr, Q};
use mwlinks::curve::construct::{coincidence, curve_from_conditions, nodal_hopf, random_curve, real_at, twisted_cubic};
use mwlinks::curve::{
    analyze_projection, certify_mw, double_points, extract_with_seed, spatial_nodes, ComplexQ, CurveError, NodeKind,
    Param,
};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Image of t under three linear forms, scaled so the first non-zero coordinate is 1.
fn projective_image(forms: &[[i64; 4]; 3], t: &Q) -> [Q; 3] {
    let x = [q(1), t.clone(), t * t, t * t * t];
    let y = forms.map(|f| (0..4).fold(Q::zero(), |acc, i| acc + &x[i] * q(f[i])));
    let k = y.iter().position(|v| !v.is_zero()).unwrap();
    let s = y[k].clone();
    y.map(|v| v / &s)
}

#[test]
fn twisted_cubic_crossing_found_by_sampling() {
    // forms vanishing at (1:0:1:0)
    let forms = [[0, 1, 0, 0], [0, 0, 0, 1], [1, 0, -1, 0]];
    let mut seen: BTreeMap<[Q; 3], Vec<Q>> = BTreeMap::new();
    for num in -12..=12 {
        for den in 1..=6 {
            let t = qr(num, den);
            seen.entry(projective_image(&forms, &t)).or_default().push(t);
        }
    }
    let mut hits: Vec<Vec<Q>> = seen.into_values().map(|mut v| {
        v.dedup();
        v
    }).filter(|v| v.len() > 1).collect();
    assert_eq!(hits.len(), 1);
    hits[0].sort();
    assert_eq!(hits[0], vec![q(-1), q(1)]);

    let nodes = double_points(&twisted_cubic(), &[q(1), q(0), q(1), q(0)]).unwrap();
    assert_eq!(nodes.len(), 1);
    let exact: Vec<_> = nodes[0].params.iter().map(|p| match p {
        Param::Real { lo, hi } if lo == hi => lo.clone(),
        other => panic!("{other:?}"),
    }).collect();
    let mut exact = exact;
    exact.sort();
    assert_eq!(exact, vec!["-1".to_string(), "1".to_string()]);
}

#[test]
fn triple_point_is_rejected() {
    let conds = [coincidence(5, &q(0), &q(1), &q(1)), coincidence(5, &q(0), &q(-1), &q(1))];
    let c = curve_from_conditions(5, &conds).unwrap();
    let p = [q(3), q(-7), q(2), q(5)];
    assert!(matches!(analyze_projection(&c, &p), Err(CurveError::NonGenericProjection(_))));
    assert_eq!(spatial_nodes(&c).unwrap_err(), CurveError::WorseThanNode);
}

#[test]
fn forced_coincidence_gives_spatial_node() {
    let c = nodal_hopf(4, &[(q(-1), q(1))]).unwrap();
    let a = analyze_projection(&c, &[q(3), q(-7), q(2), q(5)]).unwrap();
    assert_eq!(a.counts.spatial_node, 1);
    assert_eq!(a.counts.total(), 3);
    let sp = spatial_nodes(&c).unwrap();
    assert_eq!(sp.len(), 1);
    assert_eq!(sp[0].kind, NodeKind::SpatialNode);
}

#[test]
fn conjugate_pair_meeting_in_space_is_a_spatial_node() {
    // f(i) real for every coordinate: the parameters i and -i share an image
    let c = curve_from_conditions(4, &[real_at(4, &q(0), &q(1))]).unwrap();
    let sp = spatial_nodes(&c).unwrap();
    assert_eq!(sp.len(), 1);
    assert!(sp[0].params.iter().all(|p| matches!(p, Param::Complex { .. })));
    let cert = certify_mw(&c, 8).unwrap();
    assert!(!cert.verdict);
}

#[test]
fn mixed_signs_fail_certification() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p = [q(2), q(-3), q(5), q(1)];
    let found = (0..60).find_map(|_| {
        let c = random_curve(&mut rng, 4, 3);
        let a = analyze_projection(&c, &p).ok()?;
        let s = a.crossing_signs();
        (a.counts.solitary == 0 && s.contains(&1) && s.contains(&-1)).then_some(c)
    });
    let c = found.expect("a mixed-sign quartic in 60 draws");
    let cert = certify_mw(&c, 16).unwrap();
    assert!(!cert.verdict);
}

#[test]
fn crossing_signs_stable_under_small_moves() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = random_curve(&mut rng, 4, 3);
    let base = [q(2), q(-3), q(5), q(1)];
    let a = analyze_projection(&c, &base).unwrap();
    let mut want = a.crossing_signs();
    want.sort();
    for k in 0..5 {
        let mut p = base.clone();
        p[k % 4] += qr(1 + k as i64, 1000);
        let b = analyze_projection(&c, &p).unwrap();
        let mut got = b.crossing_signs();
        got.sort();
        assert_eq!(got, want, "shift {k}");
        assert_eq!(b.counts, a.counts);
    }
}

#[test]
fn nodal_quartic_extraction() {
    let c = nodal_hopf(4, &[(q(-1), q(1))]).unwrap();
    let mut codes = Vec::new();
    for (re, im, seed) in [(q(0), q(1), 5), (qr(1, 3), q(2), 6), (q(2), qr(1, 2), 7)] {
        let e = extract_with_seed(&c, &ComplexQ::new(re, im), seed).unwrap();
        assert_eq!(e.diagram.delta(), 1);
        assert_eq!(e.diagram.degrees, vec![1, 1]);
        codes.push(e.diagram.decorated_code());
    }
    assert!(codes.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(
        extract_with_seed(&c, &ComplexQ::new(q(1), q(0)), 0).unwrap_err(),
        CurveError::RealSeed
    );
}
