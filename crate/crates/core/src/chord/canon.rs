use super::{Arc, ChordDiagram};
use std::collections::VecDeque;

/// Integer code identifying a (possibly decorated) diagram up to circle permutation
/// and per-circle rotation.
pub type CanonicalCode = Vec<i64>;

/// Canonical code with integer decorations on chords and on arcs.
///
/// A component is encoded from a starting endpoint by walking its circles in
/// breadth-first order of first contact; each endpoint contributes
/// `[chord label, chord tag, tag of the arc it starts]`, chord labels in order of
/// first visit. The lexicographically least encoding over all starts is kept.
pub fn canonical_code_tagged(
    cd: &ChordDiagram,
    chord_tag: impl Fn(usize) -> i64,
    arc_tag: impl Fn(Arc) -> i64,
) -> CanonicalCode {
    let l = cd.l();
    let mut comp = vec![usize::MAX; l];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for k in 0..l {
        if comp[k] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![k];
        comp[k] = id;
        let mut i = 0;
        while i < members.len() {
            let c = members[i];
            for e in cd.endpoints_on(c) {
                let o = cd.circle_of(cd.partner(e).unwrap());
                if comp[o] == usize::MAX {
                    comp[o] = id;
                    members.push(o);
                }
            }
            i += 1;
        }
        comps.push(members);
    }

    let mut codes: Vec<Vec<i64>> = comps
        .iter()
        .map(|members| {
            let starts: Vec<usize> = members.iter().flat_map(|&k| cd.endpoints_on(k)).collect();
            if starts.is_empty() {
                return vec![1, 0, arc_tag(Arc::Circle(members[0]))];
            }
            starts
                .iter()
                .map(|&s| encode_from(cd, s, members.len(), &chord_tag, &arc_tag))
                .min()
                .unwrap()
        })
        .collect();
    codes.sort();
    let mut out = vec![l as i64, cd.delta() as i64];
    for c in codes {
        out.extend(c);
    }
    out
}

fn encode_from(
    cd: &ChordDiagram,
    start: usize,
    ncircles: usize,
    chord_tag: &impl Fn(usize) -> i64,
    arc_tag: &impl Fn(Arc) -> i64,
) -> Vec<i64> {
    let mut labels = vec![0i64; cd.delta()];
    let mut next_label = 1;
    let mut visited = vec![false; cd.l()];
    let mut out = vec![ncircles as i64];
    let mut queue = VecDeque::new();
    visited[cd.circle_of(start)] = true;
    queue.push_back(start);
    while let Some(s) = queue.pop_front() {
        let k = cd.circle_of(s);
        let ends = cd.endpoints_on(k);
        let i0 = ends.iter().position(|&e| e == s).unwrap();
        out.push(ends.len() as i64);
        for j in 0..ends.len() {
            let e = ends[(i0 + j) % ends.len()];
            let ch = cd.chord_of(e).unwrap();
            if labels[ch] == 0 {
                labels[ch] = next_label;
                next_label += 1;
            }
            out.push(labels[ch]);
            out.push(chord_tag(ch));
            out.push(arc_tag(Arc::After(e)));
            let p = cd.partner(e).unwrap();
            let o = cd.circle_of(p);
            if !visited[o] {
                visited[o] = true;
                queue.push_back(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::RawDiagram;
    use super::*;

    fn d(circles: Vec<Vec<&str>>, chords: Vec<(&str, &str)>) -> ChordDiagram {
        ChordDiagram::validate(&RawDiagram {
            circles: circles.into_iter().map(|c| c.into_iter().map(String::from).collect()).collect(),
            chords: chords.into_iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        })
        .unwrap()
    }

    #[test]
    fn rotation_and_relabel_invariance() {
        let a = d(vec![vec!["1", "2", "3", "4", "5", "6"]], vec![("1", "2"), ("3", "6"), ("4", "5")]);
        let b = d(vec![vec!["c", "d", "e", "f", "a", "b"]], vec![("a", "b"), ("c", "f"), ("d", "e")]);
        assert_eq!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn interleaved_vs_nested() {
        let x = d(vec![vec!["1", "2", "3", "4"]], vec![("1", "3"), ("2", "4")]);
        let y = d(vec![vec!["1", "2", "3", "4"]], vec![("1", "4"), ("2", "3")]);
        assert!(!x.is_isomorphic(&y));
    }

    #[test]
    fn circle_permutation() {
        let x = d(vec![vec!["1", "2"], vec!["3"], vec![]], vec![("1", "2")]);
        let y = d(vec![vec![], vec!["3"], vec!["2", "1"]], vec![("1", "2")]);
        assert!(x.is_isomorphic(&y));
    }
}
