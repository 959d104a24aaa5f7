use super::bfs::{bfs_path, max_states, reachable, BfsOutcome};
use super::{Connectivity, MoveError};
use crate::chord::{Arc, ChordDiagram, RawDiagram};
use crate::degree::{refinements, DegreeChordDiagram, Refinement};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    Y,
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideSpec {
    #[serde(rename = "loop")]
    pub loop_id: String,
    pub anchors: [String; 3],
    pub variant: Variant,
}

/// Attach two chords inside a degree-3 loop at anchors x, y, z.
/// Y: [x,y] and [y',z]; Z: [x,z'] and [y,z], with y', z' placed right after y, z.
pub fn chord_slide(dcd: &DegreeChordDiagram, spec: &SlideSpec) -> Result<DegreeChordDiagram, MoveError> {
    let base = &dcd.base;
    let li = base
        .find_loop(&dcd.loops, &spec.loop_id)
        .ok_or(MoveError::AnchorsNotOnOneLoop)?;
    let mut idx = [0usize; 3];
    for (k, name) in spec.anchors.iter().enumerate() {
        let p = base.point(name).ok_or_else(|| MoveError::BadAnchor(name.clone()))?;
        if base.is_endpoint(p) {
            return Err(MoveError::BadAnchor(name.clone()));
        }
        idx[k] = p;
    }
    if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
        return Err(MoveError::AnchorsNotCyclic);
    }
    let seq: Vec<usize> = dcd.loops[li].arcs.iter().flat_map(|&a| base.points_on_arc(a)).collect();
    let mut pos = [0usize; 3];
    for k in 0..3 {
        pos[k] = seq.iter().position(|&p| p == idx[k]).ok_or(MoveError::AnchorsNotOnOneLoop)?;
    }
    let cyclic = (pos[0] < pos[1] && pos[1] < pos[2])
        || (pos[1] < pos[2] && pos[2] < pos[0])
        || (pos[2] < pos[0] && pos[0] < pos[1]);
    if !cyclic {
        return Err(MoveError::AnchorsNotCyclic);
    }
    if dcd.degrees[li] != 3 {
        return Err(MoveError::SlideLoopDegree(dcd.degrees[li]));
    }
    let [x, y, z] = &spec.anchors;
    let (shadow_of, new_diagram) = match spec.variant {
        Variant::Y => {
            let yp = base.fresh_name(&format!("{y}'"));
            let d = base.insert_point(idx[1], true, &yp);
            let d = d.with_chord(x, y)?.with_chord(&yp, z)?;
            ((yp, y.clone()), d)
        }
        Variant::Z => {
            let zp = base.fresh_name(&format!("{z}'"));
            let d = base.insert_point(idx[2], true, &zp);
            let d = d.with_chord(x, &zp)?.with_chord(y, z)?;
            ((zp, z.clone()), d)
        }
    };
    let loops = new_diagram.planar_loops().map_err(|_| MoveError::NotPlanar)?;
    let mut degrees = Vec::with_capacity(loops.len());
    let mut split = 0;
    for lp in &loops {
        let old_arc = match lp.arcs[0] {
            Arc::Circle(k) => Arc::Circle(k),
            Arc::After(e) => {
                let mut name = new_diagram.name(e).to_string();
                if name == shadow_of.0 {
                    name = shadow_of.1.clone();
                }
                base.arc_of_point(base.point(&name).unwrap())
            }
        };
        let old = dcd.loops.iter().position(|l| l.arcs.contains(&old_arc)).unwrap();
        if old == li {
            split += 1;
            degrees.push(1);
        } else {
            degrees.push(dcd.degrees[old]);
        }
    }
    assert_eq!(split, 3, "slide must split the loop into three");
    Ok(DegreeChordDiagram::from_loop_degrees(&new_diagram, degrees)?)
}

/// A slide as a point move: the free end of the sliding chord at `x` jumps past a neighbouring chord.
#[derive(Clone, Debug, PartialEq, Eq)]
struct SlideMove {
    x: String,
    y: String,
    z: String,
    variant: Variant,
}

fn move_point(fine: &ChordDiagram, e: usize, target: usize, after: bool) -> ChordDiagram {
    let mut raw = fine.to_raw();
    let k = fine.circle_of(e);
    let en = fine.name(e).to_string();
    let tn = fine.name(target).to_string();
    raw.circles[k].retain(|s| *s != en);
    let at = raw.circles[k].iter().position(|s| *s == tn).unwrap();
    raw.circles[k].insert(if after { at + 1 } else { at }, en);
    ChordDiagram::validate(&raw).unwrap()
}

fn neighbors(r: &Refinement) -> Vec<(SlideMove, Refinement)> {
    let f = &r.fine;
    let mut out = Vec::new();
    for s in r.inserted_indices() {
        let (p, q) = f.chords()[s];
        for (e, x) in [(p, q), (q, p)] {
            let u = f.next_endpoint(e);
            let c = f.chord_of(u).unwrap();
            if c != s {
                let v = f.partner(u).unwrap();
                let fine = move_point(f, e, v, true);
                let mv = SlideMove {
                    x: f.name(x).into(),
                    y: f.name(e).into(),
                    z: f.name(v).into(),
                    variant: Variant::Z,
                };
                out.push((mv, Refinement { fine, inserted: r.inserted.clone() }));
            }
            let v = f.prev_endpoint(e);
            let c = f.chord_of(v).unwrap();
            if c != s {
                let u = f.partner(v).unwrap();
                let fine = move_point(f, e, u, false);
                let mv = SlideMove {
                    x: f.name(x).into(),
                    y: f.name(u).into(),
                    z: f.name(v).into(),
                    variant: Variant::Y,
                };
                out.push((mv, Refinement { fine, inserted: r.inserted.clone() }));
            }
        }
    }
    out
}

/// Refinements one chord slide away, with the slide performed.
pub fn slide_neighbors(r: &Refinement) -> Vec<(SlideSpec, Refinement)> {
    neighbors(r)
        .into_iter()
        .map(|(mv, next)| {
            let spec = spec_for(r, &mv).expect("slide neighbour is a chord slide");
            (spec, next)
        })
        .collect()
}

/// The chords removed around a slide: the sliding chord at x and the chord it passes.
fn slide_chords(f: &ChordDiagram, mv: &SlideMove) -> Option<(usize, usize)> {
    let x = f.point(&mv.x)?;
    let s = f.chord_of(x)?;
    let c = match mv.variant {
        Variant::Z => f.chord_of(f.point(&mv.z)?)?,
        Variant::Y => f.chord_of(f.point(&mv.y)?)?,
    };
    Some((s, c))
}

/// Express a move as a chord slide on X = F − {s, c} and check it against `chord_slide`.
fn spec_for(r: &Refinement, mv: &SlideMove) -> Result<SlideSpec, MoveError> {
    let f = &r.fine;
    let (s, c) = slide_chords(f, mv).ok_or(MoveError::AnchorsNotOnOneLoop)?;
    let mut flags = vec![false; f.delta()];
    flags[s] = true;
    flags[c] = true;
    let x_dcd = Refinement { fine: f.clone(), inserted: flags }.coarsen()?;
    let li = x_dcd
        .base
        .find_loop(&x_dcd.loops, &mv.x)
        .ok_or(MoveError::AnchorsNotOnOneLoop)?;
    let spec = SlideSpec {
        loop_id: x_dcd.loops[li].id.clone(),
        anchors: [mv.x.clone(), mv.y.clone(), mv.z.clone()],
        variant: mv.variant,
    };
    let built = chord_slide(&x_dcd, &spec)?;
    let moved = apply(r, mv)?;
    assert_eq!(
        built.base.canonical_form(),
        moved.fine.canonical_form(),
        "slide move disagrees with the chord-slide construction"
    );
    Ok(spec)
}

fn apply(r: &Refinement, mv: &SlideMove) -> Result<Refinement, MoveError> {
    let f = &r.fine;
    let x = f.point(&mv.x).ok_or_else(|| MoveError::BadAnchor(mv.x.clone()))?;
    let e = f.partner(x).ok_or_else(|| MoveError::BadAnchor(mv.x.clone()))?;
    let fine = match mv.variant {
        Variant::Z => {
            if f.name(e) != mv.y {
                return Err(MoveError::BadAnchor(mv.y.clone()));
            }
            move_point(f, e, f.point(&mv.z).ok_or_else(|| MoveError::BadAnchor(mv.z.clone()))?, true)
        }
        Variant::Y => move_point(f, e, f.point(&mv.y).ok_or_else(|| MoveError::BadAnchor(mv.y.clone()))?, false),
    };
    if !fine.is_planar() {
        return Err(MoveError::NotPlanar);
    }
    Ok(Refinement { fine, inserted: r.inserted.clone() })
}

/// Perform a slide recorded by `slide_path` on the refinement it was recorded for.
pub fn replay_slide(r: &Refinement, spec: &SlideSpec) -> Result<Refinement, MoveError> {
    let [x, y, z] = spec.anchors.clone();
    apply(r, &SlideMove { x, y, z, variant: spec.variant })
}

pub fn slide_path(r1: &Refinement, r2: &Refinement) -> Result<Vec<SlideSpec>, MoveError> {
    slide_path_with_cap(r1, r2, max_states())
}

pub fn slide_path_with_cap(r1: &Refinement, r2: &Refinement, cap: usize) -> Result<Vec<SlideSpec>, MoveError> {
    if r1.coarsen()?.decorated_code() != r2.coarsen()?.decorated_code() {
        return Err(MoveError::NotRefinementsOfSameDiagram);
    }
    let target = r2.code();
    let moves = match bfs_path(r1.clone(), |r| r.code(), neighbors, |k| *k == target, cap) {
        BfsOutcome::Found(m) => m,
        BfsOutcome::Exhausted => return Err(MoveError::NoPath),
        BfsOutcome::CapExceeded => return Err(MoveError::StateCapExceeded(cap)),
    };
    let mut cur = r1.clone();
    let mut specs = Vec::with_capacity(moves.len());
    for mv in &moves {
        specs.push(spec_for(&cur, mv)?);
        cur = apply(&cur, mv)?;
    }
    debug_assert_eq!(cur.code(), target);
    Ok(specs)
}

/// Connectivity of the slide graph on the nodal-Hopf refinements of `dcd`.
pub fn slide_connectivity(dcd: &DegreeChordDiagram) -> Result<Connectivity, MoveError> {
    let all = refinements(dcd);
    let codes: BTreeSet<_> = all.iter().map(|r| r.code()).collect();
    let cap = max_states();
    let r = reachable(all[0].clone(), |r| r.code(), |r| neighbors(r).into_iter().map(|x| x.1).collect(), cap)
        .ok_or(MoveError::StateCapExceeded(cap))?;
    let reached: BTreeSet<_> = r.iter().map(|x| x.0.clone()).collect();
    Ok(Connectivity {
        classes: codes.len(),
        connected: reached == codes,
        max_depth: r.iter().map(|x| x.2).max().unwrap_or(0),
    })
}

/// A chordless circle with `n` plain points named "1".."n".
pub fn marked_circle(n: usize) -> ChordDiagram {
    ChordDiagram::validate(&RawDiagram {
        circles: vec![(1..=n).map(|i| i.to_string()).collect()],
        chords: vec![],
    })
    .unwrap()
}
