use super::{CanonicalCode, ChordDiagram, RawDiagram};
use crate::par::Exec;
use std::collections::BTreeSet;

/// All non-crossing perfect matchings of 2k points on a line, as partner arrays.
pub fn nc_matchings(k: usize) -> Vec<Vec<usize>> {
    fn rec(lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, rest: &mut Vec<(usize, usize)>) {
        if lo >= hi {
            if let Some((l2, h2)) = rest.pop() {
                rec(l2, h2, cur, out, rest);
                rest.push((l2, h2));
            } else {
                out.push(cur.clone());
            }
            return;
        }
        let mut j = lo + 1;
        while j < hi {
            cur[lo] = j;
            cur[j] = lo;
            rest.push((j + 1, hi));
            rec(lo + 1, j, cur, out, rest);
            rest.pop();
            j += 2;
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0; 2 * k];
    rec(0, 2 * k, &mut cur, &mut out, &mut Vec::new());
    out
}

fn single_circle(m: &[usize]) -> ChordDiagram {
    let chords: Vec<_> = (0..m.len()).filter(|&i| i < m[i]).map(|i| ((0, i), (0, m[i]))).collect();
    ChordDiagram::from_positions(&[m.len()], &chords)
}

/// One single-circle planar diagram with k chords per rotation class.
pub fn circle_classes(k: usize) -> Vec<ChordDiagram> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for m in nc_matchings(k) {
        let d = single_circle(&m);
        if seen.insert(d.canonical_form()) {
            out.push(d);
        }
    }
    out
}

/// Non-increasing sequences of length `l` with sum `n`.
fn partitions_padded(n: usize, l: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, slots: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=max.min(n)).rev() {
            cur.push(v);
            rec(n - v, slots - 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, l, n, &mut Vec::new(), &mut out);
    out
}

/// Non-decreasing index sequences of length m over 0..n.
fn multisets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, m, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, 0, &mut Vec::new(), &mut out);
    out
}

fn assemble(parts: &[&ChordDiagram]) -> ChordDiagram {
    let mut circles = Vec::new();
    let mut chords = Vec::new();
    let mut next = 1;
    for d in parts {
        let raw = d.to_raw();
        for c in &raw.circles {
            let base = next;
            circles.push((0..c.len()).map(|i| (base + i).to_string()).collect::<Vec<_>>());
            next += c.len();
        }
        let off = next - raw.circles.iter().map(|c| c.len()).sum::<usize>();
        for [a, b] in &raw.chords {
            let pa = d.point(a).unwrap();
            let pb = d.point(b).unwrap();
            // single-circle parts: global index = offset + position
            chords.push([(off + d.position(pa)).to_string(), (off + d.position(pb)).to_string()]);
        }
    }
    ChordDiagram::validate(&RawDiagram { circles, chords }).unwrap()
}

/// Planar diagrams with l circles and delta chords, one per isomorphism class.
pub fn enumerate_planar_diagrams(l: usize, delta: usize, exec: Exec) -> Vec<ChordDiagram> {
    if l == 0 {
        return Vec::new();
    }
    let classes: Vec<Vec<ChordDiagram>> = (0..=delta).map(circle_classes).collect();
    let parts = partitions_padded(delta, l);
    exec.flat_map(&parts, |p| {
        // group equal part sizes
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &v in p {
            match groups.last_mut() {
                Some((w, m)) if *w == v => *m += 1,
                _ => groups.push((v, 1)),
            }
        }
        let mut acc: Vec<Vec<&ChordDiagram>> = vec![Vec::new()];
        for &(v, m) in &groups {
            let opts = multisets(classes[v].len(), m);
            let mut next = Vec::new();
            for a in &acc {
                for o in &opts {
                    let mut b = a.clone();
                    b.extend(o.iter().map(|&i| &classes[v][i]));
                    next.push(b);
                }
            }
            acc = next;
        }
        acc.into_iter().map(|ps| assemble(&ps)).collect()
    })
}

pub fn enumerate_planar(l: usize, delta: usize) -> Vec<CanonicalCode> {
    enumerate_planar_diagrams(l, delta, Exec::default())
        .iter()
        .map(|d| d.canonical_form())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let c: Vec<usize> = (0..7).map(|k| nc_matchings(k).len()).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_planar(1, 0).len(), 1);
        assert_eq!(enumerate_planar(2, 1).len(), 1);
        let codes = enumerate_planar(3, 3);
        let set: BTreeSet<_> = codes.iter().cloned().collect();
        assert_eq!(set.len(), codes.len());
    }
}
