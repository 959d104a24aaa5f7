//! Crossing signs, encomplexed writhe and MW certification.

use super::analysis::{analyze_projection, Analysis, NodeCounts, NodeKind, NodeRecord, Param};
use super::{fmt_point, CurveError, RationalSpaceCurve};
use crate::algebra::{parse_q, qr, Q};
use crate::par::Exec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WritheReport {
    /// Sum of crossing signs; absent when solitary nodes are present.
    pub w: Option<i64>,
    pub n_d: usize,
    pub counts: NodeCounts,
    pub projection_point: [String; 4],
    pub nodes: Vec<NodeRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MwCertificate {
    pub verdict: bool,
    pub w: Option<i64>,
    pub n_d: usize,
    pub counts: NodeCounts,
    pub projection_point: [String; 4],
    /// Why the verdict is false, if it is.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub witness: Vec<NodeRecord>,
}

fn report(a: &Analysis) -> WritheReport {
    let w = if a.counts.solitary == 0 { Some(a.crossing_signs().iter().map(|&s| s as i64).sum()) } else { None };
    WritheReport {
        w,
        n_d: a.n_d,
        counts: a.counts,
        projection_point: fmt_point(&a.point),
        nodes: a.nodes.clone(),
    }
}

pub fn encomplexed_writhe(c: &RationalSpaceCurve, p: &[Q; 4]) -> Result<WritheReport, CurveError> {
    analyze_projection(c, p).map(|a| report(&a))
}

fn param_box(p: &Param) -> Option<(Q, Q)> {
    match p {
        Param::Real { lo, hi } => Some((parse_q(lo)?, parse_q(hi)?)),
        _ => None,
    }
}

fn boxes_meet(a: &Param, b: &Param) -> bool {
    match (param_box(a), param_box(b)) {
        (Some((l1, h1)), Some((l2, h2))) => l1 <= h2 && l2 <= h1,
        _ => a == b,
    }
}

/// Sign of a real crossing given by its parameter boxes, recomputed from the projection at p.
pub fn crossing_sign(c: &RationalSpaceCurve, p: &[Q; 4], node: &NodeRecord) -> Result<i32, CurveError> {
    if node.kind != NodeKind::RealCrossing {
        return Err(CurveError::NonGenericProjection("not a real crossing".into()));
    }
    let a = analyze_projection(c, p)?;
    a.nodes
        .iter()
        .filter(|n| n.kind == NodeKind::RealCrossing)
        .find(|n| {
            (boxes_meet(&n.params[0], &node.params[0]) && boxes_meet(&n.params[1], &node.params[1]))
                || (boxes_meet(&n.params[0], &node.params[1]) && boxes_meet(&n.params[1], &node.params[0]))
        })
        .and_then(|n| n.sign)
        .ok_or_else(|| CurveError::NonGenericProjection("crossing not found in this projection".into()))
}

/// Rational points of small height; coordinates a/b with |a| ≤ 60, 1 ≤ b ≤ 12.
pub fn random_projection_points(seed: u64, count: usize) -> Vec<[Q; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| [0, 1, 2, 3].map(|_| qr(rng.gen_range(-60..=60), rng.gen_range(1..=12))))
        .collect()
}

enum Trial {
    Conclusive(MwCertificate),
    Inconclusive(MwCertificate),
    NonGeneric,
}

fn judge(a: &Analysis) -> Trial {
    let c = &a.counts;
    let signs = a.crossing_signs();
    let cert = |verdict: bool, reason: Option<&str>| MwCertificate {
        verdict,
        w: report(a).w,
        n_d: a.n_d,
        counts: *c,
        projection_point: fmt_point(&a.point),
        reason: reason.map(String::from),
        witness: a.nodes.clone(),
    };
    let mixed = signs.iter().any(|&s| s != signs[0]);
    if c.spatial_node > 0 {
        return Trial::Conclusive(cert(false, Some("spatial node")));
    }
    if c.complex_pair > 0 {
        return Trial::Conclusive(cert(false, Some("complex node")));
    }
    if mixed {
        return Trial::Conclusive(cert(false, Some("mixed signs")));
    }
    if c.solitary > 0 {
        return Trial::Inconclusive(cert(false, Some("solitary node")));
    }
    Trial::Conclusive(cert(true, None))
}

pub fn certify_mw(c: &RationalSpaceCurve, trials: usize) -> Result<MwCertificate, CurveError> {
    certify_mw_with(c, trials, 0, Exec::default())
}

pub fn certify_mw_with(c: &RationalSpaceCurve, trials: usize, seed: u64, exec: Exec) -> Result<MwCertificate, CurveError> {
    let pts = random_projection_points(seed, trials);
    let run = |p: &[Q; 4]| match analyze_projection(c, p) {
        Ok(a) => judge(&a),
        Err(_) => Trial::NonGeneric,
    };
    if let Some(cert) = exec.find_map_first(&pts, |p| match run(p) {
        Trial::Conclusive(c) => Some(c),
        _ => None,
    }) {
        return Ok(cert);
    }
    for p in &pts {
        if let Trial::Inconclusive(c) = run(p) {
            return Ok(c);
        }
    }
    Err(CurveError::NoGenericProjectionFound(trials))
}

/// Nodes of the space curve itself, read off the first generic projection.
pub fn spatial_nodes(c: &RationalSpaceCurve) -> Result<Vec<NodeRecord>, CurveError> {
    spatial_nodes_with(c, 0, 24)
}

pub fn spatial_nodes_with(c: &RationalSpaceCurve, seed: u64, trials: usize) -> Result<Vec<NodeRecord>, CurveError> {
    first_generic(c, seed, trials)
        .map(|a| a.nodes.into_iter().filter(|n| n.kind == NodeKind::SpatialNode).collect())
}

pub(crate) fn first_generic(c: &RationalSpaceCurve, seed: u64, trials: usize) -> Result<Analysis, CurveError> {
    for p in random_projection_points(seed, trials) {
        match analyze_projection(c, &p) {
            Ok(a) => return Ok(a),
            Err(CurveError::PointOnCurve) | Err(CurveError::NonGenericProjection(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(CurveError::WorseThanNode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn twisted_cubic() -> RationalSpaceCurve {
        RationalSpaceCurve::from_ints([&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap()
    }

    #[test]
    fn twisted_cubic_is_mw() {
        let cert = certify_mw(&twisted_cubic(), 8).unwrap();
        assert!(cert.verdict);
        assert_eq!(cert.w.map(i64::abs), Some(1));
    }

    #[test]
    fn mirror_flips_sign() {
        let c = twisted_cubic();
        let p = [q(1), q(0), q(1), q(0)];
        let a = encomplexed_writhe(&c, &p).unwrap().w.unwrap();
        let b = encomplexed_writhe(&c.mirrored(), &p).unwrap().w.unwrap();
        assert_eq!(a, -b);
        let r = encomplexed_writhe(&c.reversed(), &p).unwrap().w.unwrap();
        assert_eq!(a, r);
    }

    #[test]
    fn solitary_makes_w_unknown() {
        let r = encomplexed_writhe(&twisted_cubic(), &[q(0), q(1), q(-1), q(0)]).unwrap();
        assert_eq!(r.w, None);
        assert_eq!(r.counts.solitary, 1);
    }

    #[test]
    fn embedded_curve_has_no_spatial_nodes() {
        assert!(spatial_nodes(&twisted_cubic()).unwrap().is_empty());
    }
}
