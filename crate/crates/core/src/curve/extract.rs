//! Degree-chord diagram of a nodal rational curve from real plane sections.

use super::analysis::{pair_real_roots, real_param, Param};
use super::writhe::first_generic;
use super::{CurveError, RationalSpaceCurve};
use crate::algebra::bipoly::BiPoly;
use crate::algebra::linalg::nullspace;
use crate::algebra::poly::Poly;
use crate::algebra::roots::{isolate_real_roots, RealRoot, Sturm};
use crate::algebra::{fmt_q, parse_q, q, Q};
use crate::chord::{Arc, ChordDiagram, RawDiagram};
use crate::degree::DegreeChordDiagram;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A complex number re + i·im with rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexQ {
    pub re: Q,
    pub im: Q,
}

impl ComplexQ {
    pub fn new(re: Q, im: Q) -> Self {
        ComplexQ { re, im }
    }

    pub fn parse(re: &str, im: &str) -> Option<Self> {
        Some(ComplexQ { re: parse_q(re)?, im: parse_q(im)? })
    }

    fn mul(&self, o: &ComplexQ) -> ComplexQ {
        ComplexQ { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn eval(p: &Poly, z: &ComplexQ) -> ComplexQ {
        let mut acc = ComplexQ::new(Q::zero(), Q::zero());
        for a in p.coeffs().iter().rev() {
            acc = acc.mul(z);
            acc.re += a;
        }
        acc
    }
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub diagram: DegreeChordDiagram,
    /// Parameter pairs of the spatial nodes, in chord order.
    pub nodes: Vec<[Param; 2]>,
    /// The real plane used for the section.
    pub plane: [Q; 4],
}

#[derive(Serialize, Deserialize)]
pub struct ExtractionReport {
    pub diagram: crate::degree::RawDegreeChord,
    pub nodes: Vec<[Param; 2]>,
    pub plane: [String; 4],
}

impl Extraction {
    pub fn report(&self) -> ExtractionReport {
        ExtractionReport {
            diagram: self.diagram.to_raw(None),
            nodes: self.nodes.clone(),
            plane: self.plane.clone().map(|x| fmt_q(&x)),
        }
    }
}

pub fn extract_degree_chord_diagram(c: &RationalSpaceCurve, seed_q: &ComplexQ) -> Result<Extraction, CurveError> {
    extract_with_seed(c, seed_q, 0)
}

pub fn extract_with_seed(c: &RationalSpaceCurve, seed_q: &ComplexQ, seed: u64) -> Result<Extraction, CurveError> {
    if seed_q.im.is_zero() {
        return Err(CurveError::RealSeed);
    }
    let a = first_generic(c, seed, 24)?;
    let w = &a.work;
    let mut nodes = isolate_real_roots(&w.ssp);
    if nodes.len() != w.ssp.deg0() {
        return Err(CurveError::NonRealSpatialNode);
    }
    let fs: Vec<&BiPoly> = w.dd.iter().collect();
    let partner = if nodes.is_empty() {
        Vec::new()
    } else {
        pair_real_roots(&mut nodes, &fs).ok_or(CurveError::WorseThanNode)?
    };

    // real planes through z(q) and z(q̄)
    let zq: Vec<ComplexQ> = c.coords.iter().map(|p| ComplexQ::eval(p, seed_q)).collect();
    let m = vec![zq.iter().map(|z| z.re.clone()).collect::<Vec<_>>(), zq.iter().map(|z| z.im.clone()).collect()];
    let basis = nullspace(&m, 4);
    if basis.len() != 2 {
        return Err(CurveError::NodeOnSection);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut last = CurveError::NodeOnSection;
    for _ in 0..64 {
        let (x, y) = (rng.gen_range(-20i64..=20), rng.gen_range(-20i64..=20));
        if x == 0 && y == 0 {
            continue;
        }
        let h: [Q; 4] = [0, 1, 2, 3].map(|i| &basis[0][i] * q(x) + &basis[1][i] * q(y));
        let mut pw = Poly::zero();
        for i in 0..4 {
            pw = &pw + &w.curve.coords[i].scale(&h[i]);
        }
        if pw.deg0() != c.d || !pw.is_squarefree() {
            continue;
        }
        if w.ssp.deg0() > 0 && pw.gcd(&w.ssp).deg0() > 0 {
            last = CurveError::NodeOnSection;
            continue;
        }
        match build(c.d, &pw, &mut nodes, &partner) {
            Ok(diagram) => {
                let params = (0..nodes.len())
                    .filter(|&i| partner[i] > i)
                    .map(|i| [real_param(&nodes[i], w.mobius), real_param(&nodes[partner[i]], w.mobius)])
                    .collect();
                return Ok(Extraction { diagram, nodes: params, plane: h });
            }
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

fn build(d: usize, pw: &Poly, nodes: &mut [RealRoot], partner: &[usize]) -> Result<DegreeChordDiagram, CurveError> {
    let st = Sturm::new(pw);
    let total = st.count_all();
    // shrink node boxes until they hold no section root
    for r in nodes.iter_mut() {
        while !r.is_exact() && (st.count(&r.lo, &r.hi) > 0 || pw.eval(&r.lo).is_zero()) {
            r.bisect();
        }
    }
    let n = nodes.len();
    let mut arc_counts = Vec::with_capacity(n);
    for i in 0..n {
        if i + 1 < n {
            arc_counts.push(st.count(&nodes[i].hi, &nodes[i + 1].lo) as u32);
        }
    }
    let inner: u32 = arc_counts.iter().sum();
    if n > 0 {
        arc_counts.push(total as u32 - inner);
    }

    let names: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
    let chords: Vec<[String; 2]> =
        (0..n).filter(|&i| partner[i] > i).map(|i| [names[i].clone(), names[partner[i]].clone()]).collect();
    let cd = ChordDiagram::validate(&RawDiagram { circles: vec![names.clone()], chords })
        .map_err(|_| CurveError::NonPlanarDiagram)?;
    let loops = cd.planar_loops().map_err(|_| CurveError::NonPlanarDiagram)?;
    let degrees: Vec<u32> = loops
        .iter()
        .map(|lp| {
            lp.arcs
                .iter()
                .map(|a| match a {
                    Arc::After(p) => arc_counts[cd.position(*p)],
                    Arc::Circle(_) => total as u32,
                })
                .sum()
        })
        .collect();
    let sum: u32 = degrees.iter().sum();
    if sum as usize != d - 2 {
        return Err(CurveError::DegreeSumMismatch { got: sum, expected: d as u32 - 2 });
    }
    DegreeChordDiagram::from_loop_degrees(&cd, degrees).map_err(|_| CurveError::ZeroDegreeLoop)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_single_loop() {
        let tc = RationalSpaceCurve::from_ints([&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
        let e = extract_degree_chord_diagram(&tc, &ComplexQ::new(q(1), q(2))).unwrap();
        assert_eq!(e.diagram.degrees, vec![1]);
        assert_eq!(e.diagram.delta(), 0);
        let real = ComplexQ::new(q(1), q(0));
        assert_eq!(extract_degree_chord_diagram(&tc, &real).unwrap_err(), CurveError::RealSeed);
    }
}
