//! Chord moves on Hopf triples and chord slides between nodal-Hopf refinements.

mod bfs;
mod slide;

pub use bfs::{max_states, DEFAULT_MAX_STATES};
pub use slide::{
    chord_slide, marked_circle, replay_slide, slide_connectivity, slide_neighbors, slide_path, slide_path_with_cap,
    SlideSpec, Variant,
};

use crate::chord::{canonical_code_tagged, Arc, CanonicalCode, ChordDiagram, PlanarLoop, RawDiagram};
use bfs::{bfs_path, reachable, BfsOutcome};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("{0} is not a chord of the diagram")]
    NotAChord(String),
    #[error("triple bases are not isomorphic")]
    BaseMismatch,
    #[error("base diagram is not planar")]
    NotPlanar,
    #[error("invalid Hopf triple: {0}")]
    InvalidTriple(String),
    #[error("anchors do not lie on one loop")]
    AnchorsNotOnOneLoop,
    #[error("anchors are not cyclically ordered along the loop")]
    AnchorsNotCyclic,
    #[error("anchor {0} is a chord endpoint or unknown")]
    BadAnchor(String),
    #[error("slide loop must have degree 3, found {0}")]
    SlideLoopDegree(u32),
    #[error("refinements of different diagrams")]
    NotRefinementsOfSameDiagram,
    #[error("search exceeded {0} states")]
    StateCapExceeded(usize),
    #[error("no path exists")]
    NoPath,
    #[error(transparent)]
    Degree(#[from] crate::degree::DegreeError),
    #[error(transparent)]
    Chord(#[from] crate::chord::ChordError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// Planar diagram with one mark on one arc of every planar loop.
#[derive(Clone, Debug)]
pub struct HopfTriple {
    pub base: ChordDiagram,
    pub loops: Vec<PlanarLoop>,
    arc_loop: HashMap<Arc, usize>,
    /// marks[i] is the arc of loops[i] carrying its mark.
    pub marks: Vec<Arc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawTriple {
    pub circles: Vec<Vec<String>>,
    #[serde(default)]
    pub chords: Vec<[String; 2]>,
    pub marks: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum PathStep {
    Move {
        chord: [String; 2],
        dir: Dir,
    },
    Slide {
        #[serde(rename = "loop")]
        loop_id: String,
        anchors: [String; 3],
        variant: Variant,
    },
}

impl HopfTriple {
    pub fn new(base: &ChordDiagram, marks: Vec<Arc>) -> Result<Self, MoveError> {
        let loops = base.planar_loops().map_err(|_| MoveError::NotPlanar)?;
        let arc_loop = ChordDiagram::arc_loop_map(&loops);
        if marks.len() != loops.len() {
            return Err(MoveError::InvalidTriple(format!("{} marks for {} loops", marks.len(), loops.len())));
        }
        for (i, a) in marks.iter().enumerate() {
            if arc_loop.get(a) != Some(&i) {
                return Err(MoveError::InvalidTriple(format!("mark {i} is not on loop {}", loops[i].id)));
            }
        }
        Ok(HopfTriple { base: base.clone(), loops, arc_loop, marks })
    }

    /// Marks given as plain marked points of `base`, one per loop in any order.
    pub fn from_mark_points(base: &ChordDiagram, names: &[String]) -> Result<Self, MoveError> {
        let loops = base.planar_loops().map_err(|_| MoveError::NotPlanar)?;
        let arc_loop = ChordDiagram::arc_loop_map(&loops);
        let mut marks: Vec<Option<Arc>> = vec![None; loops.len()];
        for n in names {
            let p = base.point(n).ok_or_else(|| MoveError::InvalidTriple(format!("unknown mark {n}")))?;
            if base.is_endpoint(p) {
                return Err(MoveError::InvalidTriple(format!("mark {n} is a chord endpoint")));
            }
            let a = base.arc_of_point(p);
            let i = arc_loop[&a];
            if marks[i].is_some() {
                return Err(MoveError::InvalidTriple(format!("two marks on loop {}", loops[i].id)));
            }
            marks[i] = Some(a);
        }
        let marks = marks
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| MoveError::InvalidTriple(format!("loop {} has no mark", loops[i].id))))
            .collect::<Result<Vec<_>, _>>()?;
        HopfTriple::new(base, marks)
    }

    pub fn from_raw(raw: &RawTriple) -> Result<Self, MoveError> {
        let base = ChordDiagram::validate(&RawDiagram { circles: raw.circles.clone(), chords: raw.chords.clone() })
            .map_err(|e| MoveError::InvalidTriple(e.to_string()))?;
        HopfTriple::from_mark_points(&base, &raw.marks)
    }

    /// Wire form with marks materialized as fresh points on their arcs.
    pub fn to_raw(&self) -> RawTriple {
        let mut d = self.base.clone();
        let mut names = Vec::new();
        for (i, a) in self.marks.iter().enumerate() {
            let name = d.fresh_name(&format!("m{}", i + 1));
            d = match a {
                Arc::After(e) => {
                    let e = d.point(self.base.name(*e)).unwrap();
                    d.insert_point(e, true, &name)
                }
                Arc::Circle(k) => d.insert_on_circle(*k, &name),
            };
            names.push(name);
        }
        let r = d.to_raw();
        RawTriple { circles: r.circles, chords: r.chords, marks: names }
    }

    /// Code up to isomorphisms of the base carrying marks to marks.
    pub fn code(&self) -> CanonicalCode {
        canonical_code_tagged(&self.base, |_| 0, |a| self.marks.contains(&a) as i64)
    }

    pub fn is_valid(&self) -> bool {
        self.marks.len() == self.loops.len()
            && self.marks.iter().enumerate().all(|(i, a)| self.arc_loop.get(a) == Some(&i))
    }
}

/// Every Hopf triple on a planar base (one mark per loop, on any of its arcs).
pub fn all_triples(base: &ChordDiagram) -> Result<Vec<HopfTriple>, MoveError> {
    let loops = base.planar_loops().map_err(|_| MoveError::NotPlanar)?;
    let mut acc: Vec<Vec<Arc>> = vec![Vec::new()];
    for lp in &loops {
        let mut next = Vec::with_capacity(acc.len() * lp.arcs.len());
        for a in &acc {
            for arc in &lp.arcs {
                let mut b = a.clone();
                b.push(*arc);
                next.push(b);
            }
        }
        acc = next;
    }
    acc.into_iter().map(|m| HopfTriple::new(base, m)).collect()
}

/// Replace the marks of the two loops adjacent to `chord` by marks beside its endpoints.
pub fn chord_move(t: &HopfTriple, chord: usize, dir: Dir) -> Result<HopfTriple, MoveError> {
    let &(a, b) = t
        .base
        .chords()
        .get(chord)
        .ok_or_else(|| MoveError::NotAChord(format!("#{chord}")))?;
    let arcs = match dir {
        Dir::Plus => [Arc::After(a), Arc::After(b)],
        Dir::Minus => [Arc::After(t.base.prev_endpoint(a)), Arc::After(t.base.prev_endpoint(b))],
    };
    let mut marks = t.marks.clone();
    for arc in arcs {
        marks[t.arc_loop[&arc]] = arc;
    }
    Ok(HopfTriple { base: t.base.clone(), loops: t.loops.clone(), arc_loop: t.arc_loop.clone(), marks })
}

pub fn chord_move_named(t: &HopfTriple, a: &str, b: &str, dir: Dir) -> Result<HopfTriple, MoveError> {
    let c = t.base.chord_index(a, b).ok_or_else(|| MoveError::NotAChord(format!("{a}-{b}")))?;
    chord_move(t, c, dir)
}

fn move_neighbors(t: &HopfTriple) -> Vec<((usize, Dir), HopfTriple)> {
    let mut v = Vec::with_capacity(2 * t.base.delta());
    for c in 0..t.base.delta() {
        for dir in [Dir::Plus, Dir::Minus] {
            v.push(((c, dir), chord_move(t, c, dir).unwrap()));
        }
    }
    v
}

/// A sequence of chord moves taking `a` to a triple isomorphic to `b`.
pub fn chord_move_path(a: &HopfTriple, b: &HopfTriple) -> Result<Vec<PathStep>, MoveError> {
    chord_move_path_with_cap(a, b, max_states())
}

pub fn chord_move_path_with_cap(a: &HopfTriple, b: &HopfTriple, cap: usize) -> Result<Vec<PathStep>, MoveError> {
    if a.base.canonical_form() != b.base.canonical_form() {
        return Err(MoveError::BaseMismatch);
    }
    let target = b.code();
    match bfs_path(a.clone(), |t| t.code(), move_neighbors, |k| *k == target, cap) {
        BfsOutcome::Found(steps) => Ok(steps
            .into_iter()
            .map(|(c, dir)| {
                let (x, y) = a.base.chords()[c];
                PathStep::Move { chord: [a.base.name(x).to_string(), a.base.name(y).to_string()], dir }
            })
            .collect()),
        BfsOutcome::Exhausted => Err(MoveError::NoPath),
        BfsOutcome::CapExceeded => Err(MoveError::StateCapExceeded(cap)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Connectivity {
    /// Number of states up to isomorphism.
    pub classes: usize,
    /// Every state reaches every other.
    pub connected: bool,
    /// Largest BFS distance observed between two states.
    pub max_depth: usize,
}

/// Strong connectivity of the chord-move graph on triple classes of `base`.
pub fn chord_move_connectivity(base: &ChordDiagram) -> Result<Connectivity, MoveError> {
    let triples = all_triples(base)?;
    let mut reps: HashMap<CanonicalCode, HopfTriple> = HashMap::new();
    for t in triples {
        reps.entry(t.code()).or_insert(t);
    }
    let cap = max_states();
    let mut max_depth = 0;
    let mut connected = true;
    for t in reps.values() {
        let r = reachable(t.clone(), |s| s.code(), |s| move_neighbors(s).into_iter().map(|(_, x)| x).collect(), cap)
            .ok_or(MoveError::StateCapExceeded(cap))?;
        if r.len() != reps.len() {
            connected = false;
        }
        max_depth = max_depth.max(r.iter().map(|x| x.2).max().unwrap_or(0));
    }
    Ok(Connectivity { classes: reps.len(), connected, max_depth })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(circles: Vec<Vec<&str>>, chords: Vec<(&str, &str)>) -> ChordDiagram {
        ChordDiagram::validate(&RawDiagram {
            circles: circles.into_iter().map(|c| c.into_iter().map(String::from).collect()).collect(),
            chords: chords.into_iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        })
        .unwrap()
    }

    #[test]
    fn move_on_one_chord() {
        let b = base(vec![vec!["a", "p", "b", "q"]], vec![("a", "b")]);
        let t = HopfTriple::from_mark_points(&b, &["p".into(), "q".into()]).unwrap();
        let t2 = chord_move_named(&t, "a", "b", Dir::Plus).unwrap();
        let a = b.point("a").unwrap();
        let bb = b.point("b").unwrap();
        assert!(t2.marks.contains(&Arc::After(a)));
        assert!(t2.marks.contains(&Arc::After(bb)));
        assert!(t2.is_valid());
        assert!(matches!(chord_move_named(&t, "a", "p", Dir::Plus), Err(MoveError::NotAChord(_))));
        assert!(chord_move_path(&t, &t).unwrap().is_empty());
    }

    #[test]
    fn raw_round_trip() {
        let b = base(vec![vec!["1", "2", "3", "4"]], vec![("1", "4"), ("2", "3")]);
        let ts = all_triples(&b).unwrap();
        for t in ts {
            let back = HopfTriple::from_raw(&t.to_raw()).unwrap();
            assert_eq!(back.code(), t.code());
        }
    }
}
