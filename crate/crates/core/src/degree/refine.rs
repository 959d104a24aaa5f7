use super::{DegreeChordDiagram, DegreeError};
use crate::chord::{canonical_code_tagged, nc_matchings, Arc, CanonicalCode, ChordDiagram, RawDiagram};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};

/// A nodal-Hopf refinement: a planar diagram whose chords are split into the
/// chords of a coarse diagram and inserted chords.
#[derive(Clone, Debug)]
pub struct Refinement {
    pub fine: ChordDiagram,
    /// inserted[c] tells whether chord c of `fine` was inserted.
    pub inserted: Vec<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawRefinement {
    pub circles: Vec<Vec<String>>,
    #[serde(default)]
    pub chords: Vec<[String; 2]>,
    #[serde(default)]
    pub inserted: Vec<[String; 2]>,
}

impl Refinement {
    pub fn from_raw(raw: &RawRefinement) -> Result<Self, DegreeError> {
        let fine = ChordDiagram::validate(&RawDiagram { circles: raw.circles.clone(), chords: raw.chords.clone() })?;
        let mut inserted = vec![false; fine.delta()];
        for [a, b] in &raw.inserted {
            let c = fine
                .chord_index(a, b)
                .ok_or_else(|| DegreeError::UnknownInsertedChord(a.clone(), b.clone()))?;
            inserted[c] = true;
        }
        Ok(Refinement { fine, inserted })
    }

    pub fn to_raw(&self) -> RawRefinement {
        let r = self.fine.to_raw();
        let inserted = r
            .chords
            .iter()
            .zip(&self.inserted)
            .filter(|(_, &i)| i)
            .map(|(c, _)| c.clone())
            .collect();
        RawRefinement { circles: r.circles, chords: r.chords, inserted }
    }

    pub fn inserted_indices(&self) -> Vec<usize> {
        (0..self.inserted.len()).filter(|&c| self.inserted[c]).collect()
    }

    /// Code up to isomorphisms respecting the inserted/original split.
    pub fn code(&self) -> CanonicalCode {
        canonical_code_tagged(&self.fine, |c| self.inserted[c] as i64, |_| 0)
    }

    /// The fine diagram with every loop of degree one.
    pub fn as_degree_diagram(&self) -> Result<DegreeChordDiagram, DegreeError> {
        let n = self.fine.planar_loops().map_err(|_| DegreeError::NonPlanarBase)?.len();
        DegreeChordDiagram::from_loop_degrees(&self.fine, vec![1; n])
    }

    /// Remove inserted chords; each coarse loop gets the number of fine loops inside it.
    pub fn coarsen(&self) -> Result<DegreeChordDiagram, DegreeError> {
        let coarse = self.fine.without_chords(&self.inserted_indices());
        let coarse_loops = coarse.planar_loops().map_err(|_| DegreeError::NonPlanarBase)?;
        let fine_loops = self.fine.planar_loops().map_err(|_| DegreeError::NonPlanarBase)?;
        let arc_map = ChordDiagram::arc_loop_map(&coarse_loops);
        let mut deg = vec![0u32; coarse_loops.len()];
        for lp in &fine_loops {
            let coarse_arc = match lp.arcs[0] {
                Arc::Circle(k) => Arc::Circle(k),
                Arc::After(e) => coarse.arc_of_point(e),
            };
            deg[arc_map[&coarse_arc]] += 1;
        }
        DegreeChordDiagram::from_loop_degrees(&coarse, deg)
    }
}

fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=n {
            cur.push(v);
            rec(n - v, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Ways to split one loop: (points per arc, matching on the points in boundary order).
type LoopOption = (Vec<usize>, Vec<usize>);

fn loop_options(nargs: usize, a: u32) -> Vec<LoopOption> {
    if a <= 1 {
        return vec![(vec![0; nargs], vec![])];
    }
    let k = (a - 1) as usize;
    let ms = nc_matchings(k);
    let mut out = Vec::new();
    for comp in weak_compositions(2 * k, nargs) {
        for m in &ms {
            out.push((comp.clone(), m.clone()));
        }
    }
    out
}

/// All nodal-Hopf refinements of a degree-chord diagram, up to isomorphism.
pub fn refinements(dcd: &DegreeChordDiagram) -> Vec<Refinement> {
    let options: Vec<Vec<LoopOption>> = dcd
        .loops
        .iter()
        .zip(&dcd.degrees)
        .map(|(lp, &a)| loop_options(lp.arcs.len(), a))
        .collect();
    let base_raw = dcd.base.to_raw();
    let mut used: HashSet<String> = base_raw.circles.iter().flatten().cloned().collect();
    let mut counter = 0usize;
    let mut fresh = || loop {
        counter += 1;
        let s = format!("r{counter}");
        if used.insert(s.clone()) {
            return s;
        }
    };

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut choice = vec![0usize; options.len()];
    loop {
        // materialize
        let mut on_arc: HashMap<Arc, Vec<String>> = HashMap::new();
        let mut new_chords = Vec::new();
        for (li, lp) in dcd.loops.iter().enumerate() {
            let (counts, matching) = &options[li][choice[li]];
            let mut names = Vec::new();
            for (arc, &cnt) in lp.arcs.iter().zip(counts) {
                let v: Vec<String> = (0..cnt).map(|_| fresh()).collect();
                names.extend(v.iter().cloned());
                on_arc.insert(*arc, v);
            }
            for i in 0..matching.len() {
                if i < matching[i] {
                    new_chords.push([names[i].clone(), names[matching[i]].clone()]);
                }
            }
        }
        let mut circles = Vec::new();
        for (k, c) in base_raw.circles.iter().enumerate() {
            let mut v = Vec::new();
            for name in c {
                v.push(name.clone());
                let p = dcd.base.point(name).unwrap();
                if dcd.base.is_endpoint(p) {
                    if let Some(extra) = on_arc.get(&Arc::After(p)) {
                        v.extend(extra.iter().cloned());
                    }
                }
            }
            if let Some(extra) = on_arc.get(&Arc::Circle(k)) {
                v.extend(extra.iter().cloned());
            }
            circles.push(v);
        }
        let norig = base_raw.chords.len();
        let mut chords = base_raw.chords.clone();
        chords.extend(new_chords);
        let fine = ChordDiagram::validate(&RawDiagram { circles, chords }).unwrap();
        let mut inserted = vec![false; fine.delta()];
        for flag in inserted.iter_mut().skip(norig) {
            *flag = true;
        }
        let r = Refinement { fine, inserted };
        if seen.insert(r.code()) {
            out.push(r);
        }

        // advance odometer
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

pub fn refine_to_hopf(dcd: &DegreeChordDiagram) -> Vec<DegreeChordDiagram> {
    refinements(dcd).iter().map(|r| r.as_degree_diagram().unwrap()).collect()
}
