//! Chord diagrams on oriented circles: validation, planarity, planar loops,
//! canonical codes and enumeration.

mod canon;
mod enumerate;

pub use canon::{canonical_code_tagged, CanonicalCode};
pub use enumerate::{circle_classes, enumerate_planar, enumerate_planar_diagrams, nc_matchings};

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChordError {
    #[error("point {0} carries two chord ends")]
    DuplicateEndpoint(String),
    #[error("chord references point {0} which lies on no circle")]
    UnknownPoint(String),
    #[error("diagram has no circles")]
    EmptyDiagram,
    #[error("point {0} appears more than once on the circles")]
    DuplicatePoint(String),
    #[error("chord joins point {0} to itself")]
    DegenerateChord(String),
    #[error("diagram is not planar")]
    NotPlanar,
}

/// `chord-diagram.v1` wire format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawDiagram {
    pub circles: Vec<Vec<String>>,
    #[serde(default)]
    pub chords: Vec<[String; 2]>,
}

/// A circle arc between consecutive chord endpoints, identified by the endpoint it leaves,
/// or a whole circle carrying no chord endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arc {
    After(usize),
    Circle(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarLoop {
    pub id: String,
    /// Circle arcs in traversal order.
    pub arcs: Vec<Arc>,
    /// chords[i] is the chord traversed after arcs[i] (empty for a chordless circle).
    pub chords: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ChordDiagram {
    names: Vec<String>,
    circles: Vec<Vec<usize>>,
    circle_of: Vec<usize>,
    pos: Vec<usize>,
    partner: Vec<Option<usize>>,
    chord_of: Vec<Option<usize>>,
    chords: Vec<(usize, usize)>,
    index: HashMap<String, usize>,
}

impl PartialEq for ChordDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.to_raw() == other.to_raw()
    }
}

impl ChordDiagram {
    pub fn validate(raw: &RawDiagram) -> Result<Self, ChordError> {
        if raw.circles.is_empty() {
            return Err(ChordError::EmptyDiagram);
        }
        let mut names = Vec::new();
        let mut index = HashMap::new();
        let mut circles = Vec::new();
        let mut circle_of = Vec::new();
        let mut pos = Vec::new();
        for (k, c) in raw.circles.iter().enumerate() {
            let mut ids = Vec::with_capacity(c.len());
            for (i, name) in c.iter().enumerate() {
                if index.contains_key(name) {
                    return Err(ChordError::DuplicatePoint(name.clone()));
                }
                let id = names.len();
                index.insert(name.clone(), id);
                names.push(name.clone());
                circle_of.push(k);
                pos.push(i);
                ids.push(id);
            }
            circles.push(ids);
        }
        let n = names.len();
        let mut partner = vec![None; n];
        let mut chord_of = vec![None; n];
        let mut chords = Vec::new();
        for [a, b] in &raw.chords {
            let ia = *index.get(a).ok_or_else(|| ChordError::UnknownPoint(a.clone()))?;
            let ib = *index.get(b).ok_or_else(|| ChordError::UnknownPoint(b.clone()))?;
            if ia == ib {
                return Err(ChordError::DegenerateChord(a.clone()));
            }
            for (x, name) in [(ia, a), (ib, b)] {
                if partner[x].is_some() {
                    return Err(ChordError::DuplicateEndpoint(name.clone()));
                }
            }
            partner[ia] = Some(ib);
            partner[ib] = Some(ia);
            chord_of[ia] = Some(chords.len());
            chord_of[ib] = Some(chords.len());
            chords.push((ia, ib));
        }
        Ok(ChordDiagram { names, circles, circle_of, pos, partner, chord_of, chords, index })
    }

    /// Build from circles of point counts and chords given as (circle, position) pairs;
    /// points are named "1", "2", ... in circle order.
    pub fn from_positions(sizes: &[usize], chords: &[((usize, usize), (usize, usize))]) -> Self {
        let mut circles = Vec::new();
        let mut next = 1;
        for &s in sizes {
            circles.push((0..s).map(|i| (next + i).to_string()).collect::<Vec<_>>());
            next += s;
        }
        let chords = chords
            .iter()
            .map(|&((c1, p1), (c2, p2))| [circles[c1][p1].clone(), circles[c2][p2].clone()])
            .collect();
        ChordDiagram::validate(&RawDiagram { circles, chords }).expect("valid positions")
    }

    pub fn to_raw(&self) -> RawDiagram {
        RawDiagram {
            circles: self.circles.iter().map(|c| c.iter().map(|&p| self.names[p].clone()).collect()).collect(),
            chords: self.chords.iter().map(|&(a, b)| [self.names[a].clone(), self.names[b].clone()]).collect(),
        }
    }

    pub fn l(&self) -> usize {
        self.circles.len()
    }

    pub fn delta(&self) -> usize {
        self.chords.len()
    }

    pub fn num_points(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, p: usize) -> &str {
        &self.names[p]
    }

    pub fn point(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn circles(&self) -> &[Vec<usize>] {
        &self.circles
    }

    pub fn circle_of(&self, p: usize) -> usize {
        self.circle_of[p]
    }

    pub fn position(&self, p: usize) -> usize {
        self.pos[p]
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn partner(&self, p: usize) -> Option<usize> {
        self.partner[p]
    }

    pub fn chord_of(&self, p: usize) -> Option<usize> {
        self.chord_of[p]
    }

    pub fn is_endpoint(&self, p: usize) -> bool {
        self.partner[p].is_some()
    }

    pub fn chord_index(&self, a: &str, b: &str) -> Option<usize> {
        let (ia, ib) = (self.point(a)?, self.point(b)?);
        let c = self.chord_of[ia]?;
        (self.partner[ia] == Some(ib)).then_some(c)
    }

    /// Chord endpoints of circle k in cyclic order.
    pub fn endpoints_on(&self, k: usize) -> Vec<usize> {
        self.circles[k].iter().copied().filter(|&p| self.is_endpoint(p)).collect()
    }

    fn step_endpoint(&self, e: usize, forward: bool) -> usize {
        let c = &self.circles[self.circle_of[e]];
        let n = c.len();
        let mut i = self.pos[e];
        loop {
            i = if forward { (i + 1) % n } else { (i + n - 1) % n };
            if self.is_endpoint(c[i]) {
                return c[i];
            }
        }
    }

    /// The next chord endpoint after endpoint `e` along its circle (possibly `e` itself).
    pub fn next_endpoint(&self, e: usize) -> usize {
        self.step_endpoint(e, true)
    }

    pub fn prev_endpoint(&self, e: usize) -> usize {
        self.step_endpoint(e, false)
    }

    /// The arc on which point `p` lies (an endpoint lies on the arc it starts).
    pub fn arc_of_point(&self, p: usize) -> Arc {
        if self.is_endpoint(p) {
            return Arc::After(p);
        }
        let k = self.circle_of[p];
        let c = &self.circles[k];
        let n = c.len();
        let mut i = self.pos[p];
        for _ in 0..n {
            i = (i + n - 1) % n;
            if self.is_endpoint(c[i]) {
                return Arc::After(c[i]);
            }
        }
        Arc::Circle(k)
    }

    /// All arcs of the diagram.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut v = Vec::new();
        for k in 0..self.l() {
            let ends = self.endpoints_on(k);
            if ends.is_empty() {
                v.push(Arc::Circle(k));
            } else {
                v.extend(ends.into_iter().map(Arc::After));
            }
        }
        v
    }

    /// Points lying on an arc, in circle order, starting with the arc's endpoint.
    pub fn points_on_arc(&self, a: Arc) -> Vec<usize> {
        match a {
            Arc::Circle(k) => self.circles[k].clone(),
            Arc::After(e) => {
                let c = &self.circles[self.circle_of[e]];
                let n = c.len();
                let mut v = vec![e];
                let mut i = self.pos[e];
                loop {
                    i = (i + 1) % n;
                    if self.is_endpoint(c[i]) {
                        break;
                    }
                    v.push(c[i]);
                }
                v
            }
        }
    }

    /// Every chord joins two points of one circle and no two chords interleave on a circle.
    pub fn is_planar(&self) -> bool {
        if self.chords.iter().any(|&(a, b)| self.circle_of[a] != self.circle_of[b]) {
            return false;
        }
        for c in &self.circles {
            let mut stack: Vec<usize> = Vec::new();
            for &p in c {
                let Some(ch) = self.chord_of[p] else { continue };
                if stack.last() == Some(&ch) {
                    stack.pop();
                } else {
                    stack.push(ch);
                }
            }
            if !stack.is_empty() {
                return false;
            }
        }
        true
    }

    /// Face cycles of the ribbon structure (meaningful as planar loops when planar).
    pub fn trace_loops(&self) -> Vec<PlanarLoop> {
        let n = self.names.len();
        let mut seen = vec![false; n];
        let mut loops = Vec::new();
        for k in 0..self.l() {
            let ends = self.endpoints_on(k);
            if ends.is_empty() {
                let id = self.circles[k]
                    .iter()
                    .map(|&p| self.names[p].clone())
                    .min()
                    .unwrap_or_else(|| format!("circle:{k}"));
                loops.push(PlanarLoop { id, arcs: vec![Arc::Circle(k)], chords: vec![] });
                continue;
            }
            for e0 in ends {
                if seen[e0] {
                    continue;
                }
                let mut arcs = Vec::new();
                let mut chords = Vec::new();
                let mut e = e0;
                loop {
                    seen[e] = true;
                    arcs.push(Arc::After(e));
                    let nx = self.next_endpoint(e);
                    chords.push(self.chord_of[nx].unwrap());
                    e = self.partner[nx].unwrap();
                    if e == e0 {
                        break;
                    }
                }
                let id = arcs
                    .iter()
                    .flat_map(|&a| self.points_on_arc(a))
                    .map(|p| self.names[p].clone())
                    .min()
                    .unwrap();
                loops.push(PlanarLoop { id, arcs, chords });
            }
        }
        loops
    }

    pub fn planar_loops(&self) -> Result<Vec<PlanarLoop>, ChordError> {
        if !self.is_planar() {
            return Err(ChordError::NotPlanar);
        }
        Ok(self.trace_loops())
    }

    /// Map from arc to index in `loops`.
    pub fn arc_loop_map(loops: &[PlanarLoop]) -> HashMap<Arc, usize> {
        let mut m = HashMap::new();
        for (i, lp) in loops.iter().enumerate() {
            for a in &lp.arcs {
                m.insert(*a, i);
            }
        }
        m
    }

    /// Index of the loop containing the point named `key`, or with that loop id.
    pub fn find_loop(&self, loops: &[PlanarLoop], key: &str) -> Option<usize> {
        if let Some(i) = loops.iter().position(|lp| lp.id == key) {
            return Some(i);
        }
        let p = self.point(key)?;
        let a = self.arc_of_point(p);
        loops.iter().position(|lp| lp.arcs.contains(&a))
    }

    pub fn canonical_form(&self) -> CanonicalCode {
        canonical_code_tagged(self, |_| 0, |_| 0)
    }

    pub fn is_isomorphic(&self, other: &ChordDiagram) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// Copy with chord `c` removed; its endpoints stay as plain marked points.
    pub fn without_chords(&self, remove: &[usize]) -> ChordDiagram {
        let mut raw = self.to_raw();
        raw.chords = raw
            .chords
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, c)| c)
            .collect();
        ChordDiagram::validate(&raw).unwrap()
    }

    pub fn with_chord(&self, a: &str, b: &str) -> Result<ChordDiagram, ChordError> {
        let mut raw = self.to_raw();
        raw.chords.push([a.to_string(), b.to_string()]);
        ChordDiagram::validate(&raw)
    }

    /// A point name not used in the diagram, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if !self.index.contains_key(base) {
            return base.to_string();
        }
        (1..).map(|i| format!("{base}'{i}")).find(|s| !self.index.contains_key(s)).unwrap()
    }

    /// Insert a new plain point right after (or before) point `p` on its circle.
    pub fn insert_point(&self, p: usize, after: bool, name: &str) -> ChordDiagram {
        let mut raw = self.to_raw();
        let k = self.circle_of[p];
        let at = if after { self.pos[p] + 1 } else { self.pos[p] };
        raw.circles[k].insert(at, name.to_string());
        ChordDiagram::validate(&raw).unwrap()
    }

    /// Insert a new plain point on a chordless circle.
    pub fn insert_on_circle(&self, k: usize, name: &str) -> ChordDiagram {
        let mut raw = self.to_raw();
        raw.circles[k].push(name.to_string());
        ChordDiagram::validate(&raw).unwrap()
    }

    /// Drop all points that are not chord endpoints.
    pub fn strip_plain_points(&self) -> ChordDiagram {
        let mut raw = self.to_raw();
        for (k, c) in raw.circles.iter_mut().enumerate() {
            let keep: Vec<String> = self.circles[k]
                .iter()
                .filter(|&&p| self.is_endpoint(p))
                .map(|&p| self.names[p].clone())
                .collect();
            *c = keep;
        }
        ChordDiagram::validate(&raw).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(circles: &[&[&str]], chords: &[(&str, &str)]) -> RawDiagram {
        RawDiagram {
            circles: circles.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect(),
            chords: chords.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        }
    }

    #[test]
    fn validation() {
        let d = ChordDiagram::validate(&raw(&[&[]], &[])).unwrap();
        assert_eq!((d.l(), d.delta()), (1, 0));
        let e = ChordDiagram::validate(&raw(&[&["1", "2", "3", "4"]], &[("1", "2"), ("1", "3")]));
        assert_eq!(e.unwrap_err(), ChordError::DuplicateEndpoint("1".into()));
        let d = ChordDiagram::validate(&raw(&[&["a"], &["b"]], &[("a", "b")])).unwrap();
        assert!(!d.is_planar());
        assert_eq!(ChordDiagram::validate(&raw(&[], &[])).unwrap_err(), ChordError::EmptyDiagram);
        let e = ChordDiagram::validate(&raw(&[&["1", "2"]], &[("1", "9")]));
        assert_eq!(e.unwrap_err(), ChordError::UnknownPoint("9".into()));
    }

    #[test]
    fn planarity_and_loops() {
        let p = ["1", "2", "3", "4"];
        let crossing = ChordDiagram::validate(&raw(&[&p], &[("1", "3"), ("2", "4")])).unwrap();
        assert!(!crossing.is_planar());
        assert_eq!(crossing.planar_loops().unwrap_err(), ChordError::NotPlanar);
        let nested = ChordDiagram::validate(&raw(&[&p], &[("1", "4"), ("2", "3")])).unwrap();
        assert!(nested.is_planar());
        assert_eq!(nested.planar_loops().unwrap().len(), 3);
        let empty = ChordDiagram::validate(&raw(&[&[]], &[])).unwrap();
        assert_eq!(empty.planar_loops().unwrap().len(), 1);
        let two = ChordDiagram::validate(&raw(&[&["a", "b"], &["c", "d"]], &[("a", "b"), ("c", "d")])).unwrap();
        assert_eq!(two.planar_loops().unwrap().len(), 4);
    }

    #[test]
    fn loop_ids_and_lookup() {
        let d = ChordDiagram::validate(&raw(&[&["1", "x", "2", "3", "4"]], &[("1", "4"), ("2", "3")])).unwrap();
        let loops = d.planar_loops().unwrap();
        let ix = d.find_loop(&loops, "x").unwrap();
        assert_eq!(loops[ix].id, "1");
        assert_eq!(d.find_loop(&loops, "3"), d.find_loop(&loops, "1"));
    }
}
