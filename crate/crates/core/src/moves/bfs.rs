use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

pub const DEFAULT_MAX_STATES: usize = 1_000_000;

/// State cap, overridable through `MWLINKS_MAX_STATES`.
pub fn max_states() -> usize {
    std::env::var("MWLINKS_MAX_STATES")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_STATES)
}

pub enum BfsOutcome<M> {
    Found(Vec<M>),
    Exhausted,
    CapExceeded,
}

/// Breadth-first search over states deduplicated by key.
pub fn bfs_path<S, K, M>(
    start: S,
    key: impl Fn(&S) -> K,
    neighbors: impl Fn(&S) -> Vec<(M, S)>,
    goal: impl Fn(&K) -> bool,
    cap: usize,
) -> BfsOutcome<M>
where
    K: Hash + Eq + Clone,
    M: Clone,
{
    let k0 = key(&start);
    if goal(&k0) {
        return BfsOutcome::Found(Vec::new());
    }
    let mut parent: HashMap<K, Option<(K, M)>> = HashMap::new();
    parent.insert(k0, None);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let ks = key(&s);
        for (m, t) in neighbors(&s) {
            let kt = key(&t);
            if parent.contains_key(&kt) {
                continue;
            }
            parent.insert(kt.clone(), Some((ks.clone(), m)));
            if goal(&kt) {
                let mut path = Vec::new();
                let mut cur = kt;
                while let Some(Some((prev, mv))) = parent.get(&cur) {
                    path.push(mv.clone());
                    cur = prev.clone();
                }
                path.reverse();
                return BfsOutcome::Found(path);
            }
            if parent.len() > cap {
                return BfsOutcome::CapExceeded;
            }
            queue.push_back(t);
        }
    }
    BfsOutcome::Exhausted
}

/// All states reachable from `start`, with BFS depth; None if the cap is exceeded.
pub fn reachable<S, K>(
    start: S,
    key: impl Fn(&S) -> K,
    neighbors: impl Fn(&S) -> Vec<S>,
    cap: usize,
) -> Option<Vec<(K, S, usize)>>
where
    K: Hash + Eq + Clone,
    S: Clone,
{
    let mut seen: HashMap<K, ()> = HashMap::new();
    let mut out = Vec::new();
    let k0 = key(&start);
    seen.insert(k0.clone(), ());
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((s, depth)) = queue.pop_front() {
        out.push((key(&s), s.clone(), depth));
        for t in neighbors(&s) {
            let kt = key(&t);
            if seen.contains_key(&kt) {
                continue;
            }
            seen.insert(kt, ());
            if seen.len() > cap {
                return None;
            }
            queue.push_back((t, depth + 1));
        }
    }
    Some(out)
}
