//! Degree-chord diagrams, rigid-isotopy classes, nodal-Hopf refinements and
//! Hopf divisors.

mod divisor;
mod refine;

pub use divisor::{hopf_divisor_valid, non_special_certificate, MarkedDivisor};
pub use refine::{refine_to_hopf, refinements, RawRefinement, Refinement};

use crate::chord::{
    canonical_code_tagged, enumerate_planar_diagrams, Arc, CanonicalCode, ChordDiagram, ChordError, PlanarLoop,
    RawDiagram,
};
use crate::par::Exec;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreeError {
    #[error("loop {0} has non-positive degree")]
    ZeroDegreeLoop(String),
    #[error("no degree given for loop {0}")]
    MissingLoop(String),
    #[error("degree key {0} names no loop")]
    UnknownLoop(String),
    #[error("loop {0} is given two degrees")]
    DuplicateLoop(String),
    #[error("base diagram is not planar")]
    NonPlanarBase,
    #[error("no planar diagram has these parameters (d={d}, g={g}, delta={delta})")]
    InfeasibleParameters { d: i64, g: i64, delta: i64 },
    #[error("chirality must be +1 or -1, got {0}")]
    InvalidChirality(i64),
    #[error("support point {0} is a chord endpoint")]
    SupportOnChordEndpoint(String),
    #[error("inserted chord {0}-{1} is not a chord of the diagram")]
    UnknownInsertedChord(String, String),
    #[error(transparent)]
    Chord(#[from] ChordError),
}

/// `degree-chord.v1` wire format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawDegreeChord {
    pub circles: Vec<Vec<String>>,
    #[serde(default)]
    pub chords: Vec<[String; 2]>,
    pub degrees: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chirality: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct DegreeChordDiagram {
    pub base: ChordDiagram,
    pub loops: Vec<PlanarLoop>,
    /// degrees[i] is the degree of loops[i].
    pub degrees: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RigidIsotopyClass {
    pub code: CanonicalCode,
    pub chirality: i8,
}

pub fn attach_degrees(cd: &ChordDiagram, degrees: &BTreeMap<String, i64>) -> Result<DegreeChordDiagram, DegreeError> {
    let loops = cd.planar_loops().map_err(|_| DegreeError::NonPlanarBase)?;
    let mut out: Vec<Option<i64>> = vec![None; loops.len()];
    for (key, &v) in degrees {
        let i = cd.find_loop(&loops, key).ok_or_else(|| DegreeError::UnknownLoop(key.clone()))?;
        if out[i].is_some() {
            return Err(DegreeError::DuplicateLoop(loops[i].id.clone()));
        }
        out[i] = Some(v);
    }
    let mut deg = Vec::with_capacity(loops.len());
    for (i, v) in out.into_iter().enumerate() {
        match v {
            None => return Err(DegreeError::MissingLoop(loops[i].id.clone())),
            Some(v) if v <= 0 => return Err(DegreeError::ZeroDegreeLoop(loops[i].id.clone())),
            Some(v) => deg.push(v as u32),
        }
    }
    Ok(DegreeChordDiagram { base: cd.clone(), loops, degrees: deg })
}

impl DegreeChordDiagram {
    /// Degrees given in loop order of `cd.planar_loops()`.
    pub fn from_loop_degrees(cd: &ChordDiagram, degrees: Vec<u32>) -> Result<Self, DegreeError> {
        let loops = cd.planar_loops().map_err(|_| DegreeError::NonPlanarBase)?;
        assert_eq!(loops.len(), degrees.len(), "one degree per loop");
        if let Some(i) = degrees.iter().position(|&a| a == 0) {
            return Err(DegreeError::ZeroDegreeLoop(loops[i].id.clone()));
        }
        Ok(DegreeChordDiagram { base: cd.clone(), loops, degrees })
    }

    pub fn from_raw(raw: &RawDegreeChord) -> Result<Self, DegreeError> {
        let cd = ChordDiagram::validate(&RawDiagram { circles: raw.circles.clone(), chords: raw.chords.clone() })?;
        attach_degrees(&cd, &raw.degrees)
    }

    pub fn to_raw(&self, chirality: Option<i64>) -> RawDegreeChord {
        let r = self.base.to_raw();
        RawDegreeChord {
            circles: r.circles,
            chords: r.chords,
            degrees: self.loops.iter().zip(&self.degrees).map(|(lp, &a)| (lp.id.clone(), a as i64)).collect(),
            chirality,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degrees.iter().sum::<u32>() + 2
    }

    pub fn genus(&self) -> usize {
        self.base.l() - 1
    }

    pub fn delta(&self) -> usize {
        self.base.delta()
    }

    pub fn arc_degrees(&self) -> HashMap<Arc, u32> {
        let mut m = HashMap::new();
        for (lp, &a) in self.loops.iter().zip(&self.degrees) {
            for arc in &lp.arcs {
                m.insert(*arc, a);
            }
        }
        m
    }

    pub fn loop_degree(&self, key: &str) -> Option<u32> {
        self.base.find_loop(&self.loops, key).map(|i| self.degrees[i])
    }

    /// Canonical code of the degree-decorated diagram.
    pub fn decorated_code(&self) -> CanonicalCode {
        let m = self.arc_degrees();
        canonical_code_tagged(&self.base, |_| 0, |a| m[&a] as i64)
    }

    pub fn is_nodal_hopf(&self) -> bool {
        self.degrees.iter().all(|&a| a == 1)
    }
}

pub fn is_nodal_hopf(dcd: &DegreeChordDiagram) -> bool {
    dcd.is_nodal_hopf()
}

pub fn classify(dcd: &DegreeChordDiagram, chirality: i64) -> Result<RigidIsotopyClass, DegreeError> {
    if chirality != 1 && chirality != -1 {
        return Err(DegreeError::InvalidChirality(chirality));
    }
    Ok(RigidIsotopyClass { code: dcd.decorated_code(), chirality: chirality as i8 })
}

/// Compositions of n into k positive parts.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 1 {
            if n >= 1 {
                cur.push(n as u32);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for v in 1..n {
            if n - v < k - 1 {
                break;
            }
            cur.push(v as u32);
            rec(n - v, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

fn check_params(d: i64, g: i64, delta: i64) -> Result<(), DegreeError> {
    if d < 3 || g < 0 || delta < 0 || d - 2 < (g + 1) + delta {
        return Err(DegreeError::InfeasibleParameters { d, g, delta });
    }
    Ok(())
}

/// All degree-chord diagrams with l = g+1 circles, delta chords and degree sum d-2,
/// one per decorated isomorphism class.
pub fn enumerate_degree_diagrams(d: i64, g: i64, delta: i64, exec: Exec) -> Result<Vec<DegreeChordDiagram>, DegreeError> {
    check_params(d, g, delta)?;
    let l = (g + 1) as usize;
    let delta = delta as usize;
    let bases = enumerate_planar_diagrams(l, delta, exec);
    let per_base = exec.map(&bases, |cd| {
        let nloops = l + delta;
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for comp in compositions((d - 2) as usize, nloops) {
            let dcd = DegreeChordDiagram::from_loop_degrees(cd, comp).unwrap();
            if seen.insert(dcd.decorated_code()) {
                out.push(dcd);
            }
        }
        out
    });
    Ok(per_base.into_iter().flatten().collect())
}

pub fn enumerate_classes(d: i64, g: i64, delta: i64) -> Result<Vec<RigidIsotopyClass>, DegreeError> {
    enumerate_classes_with(d, g, delta, Exec::default())
}

pub fn enumerate_classes_with(d: i64, g: i64, delta: i64, exec: Exec) -> Result<Vec<RigidIsotopyClass>, DegreeError> {
    let diagrams = enumerate_degree_diagrams(d, g, delta, exec)?;
    let mut out = Vec::with_capacity(2 * diagrams.len());
    for dcd in &diagrams {
        let code = dcd.decorated_code();
        for ch in [1i8, -1] {
            out.push(RigidIsotopyClass { code: code.clone(), chirality: ch });
        }
    }
    Ok(out)
}
