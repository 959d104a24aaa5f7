//! Piecewise-linear loops, exact Gauss linking numbers and the W_g(α) models.
//!
//! Linking numbers are computed from the signed crossings of a projection along
//! a random integer direction; every orientation test is exact.

use crate::algebra::{fmt_q, q, to_f64, Q};
use crate::link::LinkDiagram;
use crate::par::Exec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlError {
    #[error("loop needs at least 3 vertices")]
    TooFewVertices,
    #[error("edge {0} is degenerate")]
    DegenerateEdge(usize),
    #[error("loops intersect")]
    LoopsIntersect,
    #[error("loop is not simple")]
    NotSimple,
    #[error("no generic projection direction after {0} draws")]
    NoGenericDirection(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("linking matrix entry ({row}, {col}) is {got}, expected {expected}")]
    LinkingMismatch { row: usize, col: usize, got: i64, expected: i64 },
}

pub type Point = [Q; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLLoop {
    vertices: Vec<Point>,
}

impl PLLoop {
    pub fn new(vertices: Vec<Point>) -> Result<Self, PlError> {
        if vertices.len() < 3 {
            return Err(PlError::TooFewVertices);
        }
        let n = vertices.len();
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(PlError::DegenerateEdge(i));
            }
        }
        Ok(PLLoop { vertices })
    }

    pub fn from_ints(v: &[[i64; 3]]) -> Result<Self, PlError> {
        Self::new(v.iter().map(|p| p.map(q)).collect())
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn reversed(&self) -> PLLoop {
        let mut v = self.vertices.clone();
        v.reverse();
        PLLoop { vertices: v }
    }

    pub fn translated(&self, t: &Point) -> PLLoop {
        PLLoop { vertices: self.vertices.iter().map(|p| [0, 1, 2].map(|i| &p[i] + &t[i])).collect() }
    }

    /// JSON form: array of rational triples as strings.
    pub fn to_raw(&self) -> Vec<[String; 3]> {
        self.vertices.iter().map(|p| [fmt_q(&p[0]), fmt_q(&p[1]), fmt_q(&p[2])]).collect()
    }

    pub fn from_raw(raw: &[[String; 3]]) -> Option<Result<Self, PlError>> {
        let mut v = Vec::with_capacity(raw.len());
        for p in raw {
            v.push([crate::algebra::parse_q(&p[0])?, crate::algebra::parse_q(&p[1])?, crate::algebra::parse_q(&p[2])?]);
        }
        Some(Self::new(v))
    }

    /// Exact check that non-adjacent edges are disjoint.
    pub fn is_simple(&self, seed: u64) -> Result<bool, PlError> {
        match with_projection(&[self], seed, |p| p.crossings(0, 0).map(|_| ())) {
            Ok(()) => Ok(true),
            Err(PlError::LoopsIntersect) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// Points of a regular-ish n-gon on the unit circle, with exact rational coordinates
/// (rational parametrisation at a rounded half-angle tangent).
pub fn unit_circle_points(n: usize) -> Vec<[Q; 2]> {
    (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            if k * 2 == n {
                return [q(-1), q(0)];
            }
            let t = Q::new(BigInt::from(((ang / 2.0).tan() * 4096.0).round() as i64), BigInt::from(4096));
            let den = Q::one() + &t * &t;
            [(Q::one() - &t * &t) / &den, (q(2) * &t) / den]
        })
        .collect()
}

/// Circle of the given radius around `center`, spanned by the unit axes `e1`, `e2`.
pub fn circle(center: &Point, e1: usize, e2: usize, radius: &Q, n: usize) -> PLLoop {
    let pts = unit_circle_points(n)
        .into_iter()
        .map(|[c, s]| {
            let mut p = center.clone();
            p[e1] += radius * c;
            p[e2] += radius * s;
            p
        })
        .collect();
    PLLoop::new(pts).expect("circle vertices are distinct")
}

/// (p, q) curve on the tube of radius r around the circle of radius big_r in the xy-plane:
/// p turns along the core, q turns around it.
pub fn torus_curve(p: usize, qq: usize, big_r: &Q, r: &Q, per_turn: usize) -> PLLoop {
    let n = per_turn * (p + qq).max(1);
    let theta = unit_circle_points(n);
    let pts = (0..n)
        .map(|k| {
            let [ct, st] = &theta[(k * p) % n];
            let [cp, sp] = &theta[(k * qq) % n];
            let rad = big_r + r * cp;
            [&rad * ct, &rad * st, r * sp]
        })
        .collect();
    PLLoop::new(pts).expect("torus curve vertices are distinct")
}

type V2 = [BigInt; 2];

struct Projected {
    /// per loop: (u, v) and depth for every vertex, scaled to integers
    pts: Vec<Vec<(V2, BigInt)>>,
    boxes: Vec<Vec<[f64; 4]>>,
}

/// A crossing of edge `ea` of loop `la` over or under edge `eb` of loop `lb`.
pub struct PlCrossing {
    pub la: usize,
    pub ea: usize,
    pub ta: f64,
    pub lb: usize,
    pub eb: usize,
    pub tb: f64,
    /// True when loop `la` passes over.
    pub a_over: bool,
    /// Sign of the crossing, right-handed = +1.
    pub sign: i8,
}

fn orient(a: &V2, b: &V2, c: &V2) -> BigInt {
    (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])
}

fn within(a: &V2, b: &V2, c: &V2) -> bool {
    // c on the line ab: inside the closed segment?
    let inside = |x: &BigInt, y: &BigInt, z: &BigInt| (x <= z && z <= y) || (y <= z && z <= x);
    inside(&a[0], &b[0], &c[0]) && inside(&a[1], &b[1], &c[1])
}

enum EdgePair {
    Apart,
    Cross { ta: Q, tb: Q, a_over: bool, sign: i8 },
    Degenerate,
    Meet,
}

impl Projected {
    fn new(loops: &[&PLLoop], m: &[[i64; 3]; 3]) -> Projected {
        let mut den = BigInt::one();
        for l in loops {
            for p in &l.vertices {
                for x in p {
                    den = den.lcm(x.denom());
                }
            }
        }
        let pts: Vec<Vec<(V2, BigInt)>> = loops
            .iter()
            .map(|l| {
                l.vertices
                    .iter()
                    .map(|p| {
                        let ip: Vec<BigInt> = p.iter().map(|x| x.numer() * (&den / x.denom())).collect();
                        let row = |r: &[i64; 3]| -> BigInt { (0..3).map(|i| &ip[i] * r[i]).sum() };
                        ([row(&m[0]), row(&m[1])], row(&m[2]))
                    })
                    .collect()
            })
            .collect();
        let boxes = pts
            .iter()
            .map(|l| {
                let n = l.len();
                (0..n)
                    .map(|i| {
                        let (a, b) = (&l[i].0, &l[(i + 1) % n].0);
                        let (ax, ay, bx, by) = (big_f64(&a[0]), big_f64(&a[1]), big_f64(&b[0]), big_f64(&b[1]));
                        let pad = 1e-9 * (1.0 + ax.abs().max(ay.abs()).max(bx.abs()).max(by.abs()));
                        [ax.min(bx) - pad, ax.max(bx) + pad, ay.min(by) - pad, ay.max(by) + pad]
                    })
                    .collect()
            })
            .collect();
        Projected { pts, boxes }
    }

    fn edge(&self, l: usize, e: usize) -> (&(V2, BigInt), &(V2, BigInt)) {
        let n = self.pts[l].len();
        (&self.pts[l][e], &self.pts[l][(e + 1) % n])
    }

    fn pair(&self, la: usize, ea: usize, lb: usize, eb: usize) -> EdgePair {
        let (ba, bb) = (&self.boxes[la][ea], &self.boxes[lb][eb]);
        if ba[1] < bb[0] || bb[1] < ba[0] || ba[3] < bb[2] || bb[3] < ba[2] {
            return EdgePair::Apart;
        }
        let ((a0, wa0), (a1, wa1)) = self.edge(la, ea);
        let ((b0, wb0), (b1, wb1)) = self.edge(lb, eb);
        let o1 = orient(a0, a1, b0);
        let o2 = orient(a0, a1, b1);
        let o3 = orient(b0, b1, a0);
        let o4 = orient(b0, b1, a1);
        if o1.is_zero() || o2.is_zero() || o3.is_zero() || o4.is_zero() {
            let cases = [
                (o1.is_zero(), a0, wa0, a1, wa1, b0, wb0),
                (o2.is_zero(), a0, wa0, a1, wa1, b1, wb1),
                (o3.is_zero(), b0, wb0, b1, wb1, a0, wa0),
                (o4.is_zero(), b0, wb0, b1, wb1, a1, wa1),
            ];
            let mut touches = false;
            for (zero, s0, w0, s1, w1, c, wc) in cases {
                if zero && within(s0, s1, c) {
                    touches = true;
                    if depth_on_segment(s0, w0, s1, w1, c) == Q::from_integer(wc.clone()) {
                        return EdgePair::Meet;
                    }
                }
            }
            return if touches { EdgePair::Degenerate } else { EdgePair::Apart };
        }
        if o1.signum() == o2.signum() || o3.signum() == o4.signum() {
            return EdgePair::Apart;
        }
        let ta = Q::new(o3.clone(), &o3 - &o4);
        let tb = Q::new(o1.clone(), &o1 - &o2);
        let da = Q::from_integer(wa0.clone()) + &ta * Q::from_integer(wa1 - wa0);
        let db = Q::from_integer(wb0.clone()) + &tb * Q::from_integer(wb1 - wb0);
        let a_over = match da.cmp(&db) {
            Ordering::Equal => return EdgePair::Meet,
            Ordering::Greater => true,
            Ordering::Less => false,
        };
        let da2 = [&a1[0] - &a0[0], &a1[1] - &a0[1]];
        let db2 = [&b1[0] - &b0[0], &b1[1] - &b0[1]];
        let (over, under) = if a_over { (&da2, &db2) } else { (&db2, &da2) };
        let c = &under[0] * &over[1] - &under[1] * &over[0];
        EdgePair::Cross { ta, tb, a_over, sign: if c.is_positive() { 1 } else { -1 } }
    }

    /// All crossings between loops la and lb (la == lb: self-crossings of non-adjacent edges).
    fn crossings(&self, la: usize, lb: usize) -> Result<Vec<PlCrossing>, PlError> {
        let (na, nb) = (self.pts[la].len(), self.pts[lb].len());
        let mut out = Vec::new();
        for ea in 0..na {
            let start = if la == lb { ea + 1 } else { 0 };
            for eb in start..nb {
                if la == lb && (eb == ea + 1 || (ea == 0 && eb == na - 1)) {
                    if self.adjacent_fold(la, ea, eb) {
                        return Err(PlError::LoopsIntersect);
                    }
                    continue;
                }
                match self.pair(la, ea, lb, eb) {
                    EdgePair::Apart => {}
                    EdgePair::Degenerate => return Err(PlError::NoGenericDirection(0)),
                    EdgePair::Meet => return Err(PlError::LoopsIntersect),
                    EdgePair::Cross { ta, tb, a_over, sign } => out.push(PlCrossing {
                        la,
                        ea,
                        ta: to_f64(&ta),
                        lb,
                        eb,
                        tb: to_f64(&tb),
                        a_over,
                        sign,
                    }),
                }
            }
        }
        Ok(out)
    }

    /// Adjacent edges fold back onto each other (projected collinear and overlapping in 3D
    /// is caught by a collinear check in space; here only the projected test matters).
    fn adjacent_fold(&self, l: usize, e1: usize, e2: usize) -> bool {
        let n = self.pts[l].len();
        let (first, second) = if (e1 + 1) % n == e2 { (e1, e2) } else { (e2, e1) };
        let (p0, p1) = (&self.pts[l][first], &self.pts[l][(first + 1) % n]);
        let p2 = &self.pts[l][(second + 1) % n];
        // shared vertex p1; folding back means p0, p1, p2 collinear in space with p2 on the p1→p0 side
        let a = [&p0.0[0] - &p1.0[0], &p0.0[1] - &p1.0[1], &p0.1 - &p1.1];
        let b = [&p2.0[0] - &p1.0[0], &p2.0[1] - &p1.0[1], &p2.1 - &p1.1];
        let cross = [
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ];
        let dot: BigInt = (0..3).map(|i| &a[i] * &b[i]).sum();
        cross.iter().all(|c| c.is_zero()) && dot.is_positive()
    }
}

/// Depth at the point c of the projected segment s0 s1 (c known to lie on it).
fn depth_on_segment(s0: &V2, w0: &BigInt, s1: &V2, w1: &BigInt, c: &V2) -> Q {
    let k = if s0[0] != s1[0] { 0 } else { 1 };
    if s0[k] == s1[k] {
        return Q::from_integer(w0.clone());
    }
    let t = Q::new(&c[k] - &s0[k], &s1[k] - &s0[k]);
    Q::from_integer(w0.clone()) + t * Q::from_integer(w1 - w0)
}

fn big_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::MAX)
}

/// Random integer matrix with positive determinant.
fn draw_matrix(rng: &mut ChaCha8Rng) -> [[i64; 3]; 3] {
    loop {
        let m = [0, 1, 2].map(|_| [0, 1, 2].map(|_| rng.gen_range(-97i64..=97)));
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det > 0 {
            return m;
        }
    }
}

const DRAWS: usize = 64;

fn with_projection<T>(
    loops: &[&PLLoop],
    seed: u64,
    f: impl Fn(&Projected) -> Result<T, PlError>,
) -> Result<T, PlError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..DRAWS {
        let m = draw_matrix(&mut rng);
        match f(&Projected::new(loops, &m)) {
            Err(PlError::NoGenericDirection(_)) => continue,
            r => return r,
        }
    }
    Err(PlError::NoGenericDirection(DRAWS))
}

/// Linking number of two disjoint loops.
pub fn gauss_linking(a: &PLLoop, b: &PLLoop) -> Result<i64, PlError> {
    gauss_linking_seeded(a, b, 0)
}

pub fn gauss_linking_seeded(a: &PLLoop, b: &PLLoop, seed: u64) -> Result<i64, PlError> {
    with_projection(&[a, b], seed, |p| {
        Ok(p.crossings(0, 1)?.iter().filter(|c| c.a_over).map(|c| c.sign as i64).sum())
    })
}

/// Link diagram of the projection of the given loops, self-crossings included.
pub fn link_diagram(loops: &[&PLLoop], seed: u64) -> Result<LinkDiagram, PlError> {
    with_projection(loops, seed, |p| {
        let mut data = Vec::new();
        for i in 0..loops.len() {
            for j in i..loops.len() {
                for c in p.crossings(i, j)? {
                    let pa = c.ea as f64 + c.ta;
                    let pb = c.eb as f64 + c.tb;
                    data.push(if c.a_over { (i, pa, j, pb, c.sign) } else { (j, pb, i, pa, c.sign) });
                }
            }
        }
        Ok(LinkDiagram::from_crossing_data(loops.len(), &data, Vec::new(), None, None))
    })
}

#[derive(Clone, Debug)]
pub struct WgaModel {
    pub alpha: Vec<u32>,
    pub hopf_cores: Vec<PLLoop>,
    pub components: Vec<PLLoop>,
}

/// Turns of coil per turn-vertex: each coil turn is a 16-gon.
const PER_TURN: usize = 16;
const COIL: [[i64; 2]; 16] = [
    [0, -8],
    [3, -7],
    [6, -6],
    [7, -3],
    [8, 0],
    [7, 3],
    [6, 6],
    [3, 7],
    [0, 8],
    [-3, 7],
    [-6, 6],
    [-7, 3],
    [-8, 0],
    [-7, -3],
    [-6, -6],
    [-3, -7],
];
const SPACING: i64 = 100;
const BAND: i64 = 300;
const COIL_HEIGHT: i64 = 256;

fn check_partition(alpha: &[u32]) -> Result<(), PlError> {
    if alpha.is_empty() {
        return Err(PlError::InvalidPartition("empty".into()));
    }
    if alpha.iter().any(|&a| a == 0) {
        return Err(PlError::InvalidPartition("parts must be positive".into()));
    }
    if alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(PlError::InvalidPartition("parts must be non-increasing".into()));
    }
    Ok(())
}

/// Expected doubled linking of component j with core i.
pub fn expected_linking(alpha: &[u32], j: usize, i: usize) -> i64 {
    let a = alpha[j] as i64;
    if i == j {
        2 * (a + 2)
    } else {
        2 * a
    }
}

/// Build the lifted model of W_g(α): core i is a rectangle in the plane y = 0 whose
/// side x = 100·i is encircled by coils of every component; component j coils
/// 2(a_j+2) times around its own core and 2a_j times around the others, each
/// component in its own height band.
pub fn build_wga_model(alpha: &[u32]) -> Result<WgaModel, PlError> {
    check_partition(alpha)?;
    let n = alpha.len() as i64;
    let top = 10 + n * BAND;
    let hopf_cores = (0..n)
        .map(|i| {
            let x = i * SPACING;
            PLLoop::from_ints(&[[x, 0, -top], [x - 40, 0, -top], [x - 40, 0, top], [x, 0, top]]).unwrap()
        })
        .collect();
    let components = (0..alpha.len())
        .map(|j| {
            let lo = -top + 10 + j as i64 * BAND;
            let hi = lo + COIL_HEIGHT;
            let mut v: Vec<Point> = Vec::new();
            for i in 0..alpha.len() {
                let x = i as i64 * SPACING;
                let turns = expected_linking(alpha, j, i) as usize;
                let steps = turns * PER_TURN;
                if i > 0 {
                    v.push([q(x), q(-16), q(lo)]);
                }
                for k in 0..=steps {
                    let [dx, dy] = COIL[k % PER_TURN];
                    let z = q(lo) + Q::new(BigInt::from(k as i64 * (hi - lo)), BigInt::from(steps as i64));
                    v.push([q(x + dx), q(dy), z]);
                }
                v.push([q(x), q(-16), q(hi)]);
            }
            let last = (alpha.len() as i64 - 1) * SPACING;
            v.pop();
            v.push([q(last), q(-24), q(hi)]);
            v.push([q(0), q(-24), q(lo)]);
            PLLoop::new(v).unwrap()
        })
        .collect();
    Ok(WgaModel { alpha: alpha.to_vec(), hopf_cores, components })
}

impl WgaModel {
    pub fn d(&self) -> u32 {
        self.alpha.iter().sum::<u32>() + 2
    }

    pub fn g(&self) -> usize {
        self.alpha.len() - 1
    }

    pub fn loops(&self) -> Vec<&PLLoop> {
        self.hopf_cores.iter().chain(&self.components).collect()
    }

    /// Every loop simple and all loops pairwise disjoint.
    pub fn validate(&self, exec: Exec) -> Result<(), PlError> {
        let loops = self.loops();
        let n = loops.len();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i..n {
                pairs.push((i, j));
            }
        }
        let res = exec.map(&pairs, |&(i, j)| {
            if i == j {
                match loops[i].is_simple(0)? {
                    true => Ok(()),
                    false => Err(PlError::NotSimple),
                }
            } else {
                gauss_linking(loops[i], loops[j]).map(|_| ())
            }
        });
        res.into_iter().collect()
    }

    pub fn to_obj(&self) -> String {
        let mut s = String::new();
        let mut base = 1;
        for (name, l) in self
            .hopf_cores
            .iter()
            .enumerate()
            .map(|(i, l)| (format!("H{i}"), l))
            .chain(self.components.iter().enumerate().map(|(j, l)| (format!("K{j}"), l)))
        {
            writeln!(s, "o {name}").unwrap();
            for p in l.vertices() {
                writeln!(s, "v {} {} {}", to_f64(&p[0]), to_f64(&p[1]), to_f64(&p[2])).unwrap();
            }
            let idx: Vec<String> = (0..l.len()).chain([0]).map(|k| (base + k).to_string()).collect();
            writeln!(s, "l {}", idx.join(" ")).unwrap();
            base += l.len();
        }
        s
    }
}

/// M[j][i] = lk(component j, core i), checked against 2(a_j+2) on the diagonal and 2a_j off it.
pub fn linking_matrix(m: &WgaModel) -> Result<Vec<Vec<i64>>, PlError> {
    linking_matrix_with(m, Exec::default())
}

pub fn linking_matrix_with(m: &WgaModel, exec: Exec) -> Result<Vec<Vec<i64>>, PlError> {
    let k = m.components.len();
    let cells: Vec<(usize, usize)> = (0..k).flat_map(|j| (0..m.hopf_cores.len()).map(move |i| (j, i))).collect();
    let vals = exec.map(&cells, |&(j, i)| gauss_linking(&m.components[j], &m.hopf_cores[i]));
    let mut out = vec![vec![0; m.hopf_cores.len()]; k];
    for (&(j, i), v) in cells.iter().zip(vals) {
        let v = v?;
        let expected = expected_linking(&m.alpha, j, i);
        if v != expected {
            return Err(PlError::LinkingMismatch { row: j, col: i, got: v, expected });
        }
        out[j][i] = v;
    }
    Ok(out)
}

/// Partitions of n into exactly k positive parts, non-increasing.
pub fn partitions(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(n: u32, k: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in (1..=max.min(n)).rev() {
            cur.push(a);
            go(n - a, k - 1, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, n, &mut Vec::new(), &mut out);
    out
}

/// JSON report of a model.
#[derive(Serialize, Deserialize)]
pub struct WgaReport {
    pub alpha: Vec<u32>,
    pub d: u32,
    pub g: usize,
    pub doubled_linking: Vec<Vec<i64>>,
    pub vertex_counts: Vec<usize>,
}

impl WgaModel {
    pub fn report(&self) -> Result<WgaReport, PlError> {
        Ok(WgaReport {
            alpha: self.alpha.clone(),
            d: self.d(),
            g: self.g(),
            doubled_linking: linking_matrix(self)?,
            vertex_counts: self.loops().iter().map(|l| l.len()).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn origin() -> Point {
        [q(0), q(0), q(0)]
    }

    #[test]
    fn hopf_pair() {
        let a = circle(&origin(), 0, 1, &q(1), 32);
        let b = circle(&[q(1), q(0), q(0)], 0, 2, &q(1), 32);
        assert_eq!(gauss_linking(&a, &b).unwrap().abs(), 1);
        let far = a.translated(&[q(10), q(0), q(0)]);
        assert_eq!(gauss_linking(&far, &b).unwrap(), 0);
    }

    #[test]
    fn touching_loops_rejected() {
        let a = PLLoop::from_ints(&[[0, 0, 0], [4, 0, 0], [4, 4, 0], [0, 4, 0]]).unwrap();
        let b = PLLoop::from_ints(&[[2, 0, 0], [2, 0, 4], [2, -4, 4], [2, -4, 0]]).unwrap();
        assert_eq!(gauss_linking(&a, &b), Err(PlError::LoopsIntersect));
    }

    #[test]
    fn self_intersection_detected() {
        let bow = PLLoop::from_ints(&[[0, 0, 0], [2, 2, 0], [2, 0, 0], [0, 2, 0]]).unwrap();
        assert!(!bow.is_simple(0).unwrap());
        let sq = PLLoop::from_ints(&[[0, 0, 0], [2, 0, 0], [2, 2, 0], [0, 2, 0]]).unwrap();
        assert!(sq.is_simple(0).unwrap());
    }

    #[test]
    fn single_part_model() {
        let m = build_wga_model(&[1]).unwrap();
        assert_eq!(m.loops().len(), 2);
        assert_eq!(linking_matrix(&m).unwrap(), vec![vec![6]]);
    }

    #[test]
    fn zero_part_rejected() {
        assert!(matches!(build_wga_model(&[0, 1]), Err(PlError::InvalidPartition(_))));
    }

    #[test]
    fn obj_has_all_loops() {
        let m = build_wga_model(&[1, 1]).unwrap();
        let obj = m.to_obj();
        assert_eq!(obj.lines().filter(|l| l.starts_with("o ")).count(), 4);
    }
}
