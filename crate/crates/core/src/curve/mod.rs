//! Exact analysis of rational space curves: projection, double points, crossing
//! signs, encomplexed writhe, MW certification and degree-chord extraction.

mod analysis;
pub mod construct;
mod extract;
mod numeric;
mod writhe;

pub use analysis::{analyze_projection, double_points, Analysis, NodeCounts, NodeKind, NodeRecord, Param};
pub use extract::{extract_degree_chord_diagram, extract_with_seed, ComplexQ, Extraction, ExtractionReport};
pub use writhe::{
    certify_mw, certify_mw_with, crossing_sign, encomplexed_writhe, random_projection_points, spatial_nodes,
    spatial_nodes_with,
    MwCertificate, WritheReport,
};

use crate::algebra::linalg::rank;
use crate::algebra::poly::Poly;
use crate::algebra::{fmt_q, parse_q, Q};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("coordinate lists must all have length d+1 = {0}")]
    DegreeMismatch(usize),
    #[error("cannot parse rational {0}")]
    BadRational(String),
    #[error("the parametrization has a base point")]
    BasePoint,
    #[error("the image lies in a plane")]
    PlanarImage,
    #[error("projection centre lies on the curve")]
    PointOnCurve,
    #[error("projection is not generic: {0}")]
    NonGenericProjection(String),
    #[error("a branch is tangent to the projection direction")]
    TangentialBranch,
    #[error("no generic projection found in {0} trials")]
    NoGenericProjectionFound(usize),
    #[error("curve has a singularity worse than a node")]
    WorseThanNode,
    #[error("curve has a non-real spatial node")]
    NonRealSpatialNode,
    #[error("extracted chord diagram is not planar")]
    NonPlanarDiagram,
    #[error("loop degrees sum to {got}, expected {expected}")]
    DegreeSumMismatch { got: u32, expected: u32 },
    #[error("a planar loop has degree zero")]
    ZeroDegreeLoop,
    #[error("section plane passes through a node")]
    NodeOnSection,
    #[error("seed parameter must be non-real")]
    RealSeed,
}

/// `curve.v1` wire format; coords[i][k] multiplies t^k s^(d-k).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawCurve {
    pub degree: usize,
    pub coords: Vec<Vec<String>>,
}

/// Four binary forms of degree d, stored dehomogenized (s = 1) with formal degree d.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalSpaceCurve {
    pub d: usize,
    pub coords: [Poly; 4],
}

/// Three binary forms spanning the linear forms that vanish at the projection centre.
#[derive(Clone, Debug)]
pub struct PlanarCurve {
    pub d: usize,
    pub forms: [Poly; 3],
    /// rows: the three linear forms on Q^4
    pub basis: [[Q; 4]; 3],
}

impl RationalSpaceCurve {
    pub fn new(coords: [Poly; 4], d: usize) -> Result<Self, CurveError> {
        if coords.iter().any(|p| p.deg0() > d) {
            return Err(CurveError::DegreeMismatch(d + 1));
        }
        let c = RationalSpaceCurve { d, coords };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<(), CurveError> {
        let m: Vec<Vec<Q>> = self.coords.iter().map(|p| (0..=self.d).map(|k| p.coeff(k)).collect()).collect();
        if rank(&m) < 4 {
            return Err(CurveError::PlanarImage);
        }
        if self.coords.iter().all(|p| p.coeff(self.d).is_zero()) {
            return Err(CurveError::BasePoint);
        }
        let g = self.coords.iter().fold(Poly::zero(), |g, p| g.gcd(p));
        if g.degree().unwrap_or(0) > 0 {
            return Err(CurveError::BasePoint);
        }
        Ok(())
    }

    pub fn from_ints(coords: [&[i64]; 4]) -> Result<Self, CurveError> {
        let d = coords.iter().map(|c| c.len()).max().unwrap_or(1) - 1;
        RationalSpaceCurve::new(coords.map(Poly::from_ints), d)
    }

    pub fn to_raw(&self) -> RawCurve {
        RawCurve {
            degree: self.d,
            coords: self.coords.iter().map(|p| (0..=self.d).map(|k| fmt_q(&p.coeff(k))).collect()).collect(),
        }
    }

    pub fn eval(&self, t: &Q) -> [Q; 4] {
        [0, 1, 2, 3].map(|i| self.coords[i].eval(t))
    }

    /// Negate the last coordinate (an orientation-reversing map of P^3).
    pub fn mirrored(&self) -> RationalSpaceCurve {
        let mut c = self.clone();
        c.coords[3] = -&c.coords[3];
        c
    }

    /// Reparametrize by t -> -t.
    pub fn reversed(&self) -> RationalSpaceCurve {
        let mut c = self.clone();
        for p in &mut c.coords {
            *p = p.negate_var();
        }
        c
    }

    /// Homogeneous substitution t = (k u - 1)/(u + k); orientation preserving, u = ∞ ↦ t = k.
    pub fn mobius(&self, k: i64) -> RationalSpaceCurve {
        let num = Poly::from_ints(&[-1, k]);
        let den = Poly::from_ints(&[k, 1]);
        let pows_n: Vec<Poly> = (0..=self.d).map(|j| num.pow(j)).collect();
        let pows_d: Vec<Poly> = (0..=self.d).map(|j| den.pow(j)).collect();
        let coords = self.coords.clone().map(|p| {
            let mut acc = Poly::zero();
            for j in 0..=self.d {
                let a = p.coeff(j);
                if a.is_zero() {
                    continue;
                }
                acc = &acc + &(&pows_n[j] * &pows_d[self.d - j]).scale(&a);
            }
            acc
        });
        RationalSpaceCurve { d: self.d, coords }
    }
}

pub fn parse_curve(raw: &RawCurve) -> Result<RationalSpaceCurve, CurveError> {
    let d = raw.degree;
    if raw.coords.len() != 4 || raw.coords.iter().any(|c| c.len() != d + 1) {
        return Err(CurveError::DegreeMismatch(d + 1));
    }
    let mut polys = Vec::with_capacity(4);
    for c in &raw.coords {
        let v = c
            .iter()
            .map(|s| parse_q(s).ok_or_else(|| CurveError::BadRational(s.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        polys.push(Poly::new(v));
    }
    RationalSpaceCurve::new(polys.try_into().unwrap(), d)
}

/// Linear forms vanishing at p: p_k e_j - p_j e_k for j != k, k the pivot.
pub fn annihilator(p: &[Q; 4]) -> Option<[[Q; 4]; 3]> {
    let k = (0..4).find(|&i| !p[i].is_zero())?;
    let mut rows = Vec::new();
    for j in (0..4).filter(|&j| j != k) {
        let mut r = [Q::zero(), Q::zero(), Q::zero(), Q::zero()];
        r[j] = p[k].clone();
        r[k] = -p[j].clone();
        rows.push(r);
    }
    Some(rows.try_into().unwrap())
}

pub fn apply_form(f: &[Q; 4], c: &RationalSpaceCurve) -> Poly {
    let mut acc = Poly::zero();
    for i in 0..4 {
        acc = &acc + &c.coords[i].scale(&f[i]);
    }
    acc
}

pub fn project(c: &RationalSpaceCurve, p: &[Q; 4]) -> Result<PlanarCurve, CurveError> {
    let basis = annihilator(p).ok_or(CurveError::PointOnCurve)?;
    let forms = [0, 1, 2].map(|j| apply_form(&basis[j], c));
    if forms.iter().all(|f| f.coeff(c.d).is_zero()) {
        return Err(CurveError::PointOnCurve);
    }
    let g = forms.iter().fold(Poly::zero(), |g, f| g.gcd(f));
    if g.degree().unwrap_or(0) > 0 {
        return Err(CurveError::PointOnCurve);
    }
    Ok(PlanarCurve { d: c.d, forms, basis })
}

pub fn parse_point(v: &[String]) -> Result<[Q; 4], CurveError> {
    if v.len() != 4 {
        return Err(CurveError::BadRational(format!("{v:?}")));
    }
    let mut out = Vec::new();
    for s in v {
        out.push(parse_q(s).ok_or_else(|| CurveError::BadRational(s.clone()))?);
    }
    Ok(out.try_into().unwrap())
}

pub fn fmt_point(p: &[Q; 4]) -> [String; 4] {
    [0, 1, 2, 3].map(|i| fmt_q(&p[i]))
}
