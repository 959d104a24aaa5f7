//! Double points of a plane projection, found from resultants of divided differences.

use super::numeric::{complex_roots, eval_c};
use super::{project, CurveError, RationalSpaceCurve};
use crate::algebra::bipoly::{resultant_tau, subresultant1_tau, BiPoly};
use crate::algebra::interval::Interval;
use crate::algebra::linalg::{charpoly, det, div_mod, multiplication_matrix};
use crate::algebra::poly::Poly;
use crate::algebra::roots::{count_real_roots, isolate_real_roots, RealRoot, Sturm};
use crate::algebra::{fmt_q, parse_q, q, sign, to_f64, Q};
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    RealCrossing,
    Solitary,
    ComplexPair,
    SpatialNode,
}

/// A node parameter in the curve's own parameter t.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Param {
    /// Exact isolating interval; `lo == hi` for a rational parameter.
    Real { lo: String, hi: String },
    Infinite,
    /// Floating-point label of a non-real parameter.
    Complex { re: f64, im: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub kind: NodeKind,
    pub params: [Param; 2],
    /// Approximate image in the projection plane, scaled so the largest coordinate is 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i32>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeCounts {
    pub real_crossing: usize,
    pub solitary: usize,
    pub complex_pair: usize,
    pub spatial_node: usize,
}

impl NodeCounts {
    /// Node total with complex pairs counted twice.
    pub fn total(&self) -> usize {
        self.real_crossing + self.solitary + 2 * self.complex_pair + self.spatial_node
    }
}

/// Data shared with the writhe and extraction code.
#[derive(Clone, Debug)]
pub(crate) struct Work {
    /// The curve in the working parameter u (after an optional Möbius change).
    pub curve: RationalSpaceCurve,
    pub mobius: Option<i64>,
    pub ssp: Poly,
    /// Divided differences of the image coordinates.
    pub dd: [BiPoly; 3],
    /// Isolating boxes of real node parameters, by node index.
    pub boxes: Vec<Option<[RealRoot; 2]>>,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub point: [Q; 4],
    pub n_d: usize,
    pub counts: NodeCounts,
    pub nodes: Vec<NodeRecord>,
    pub(crate) work: Work,
}

impl Analysis {
    pub fn crossing_signs(&self) -> Vec<i32> {
        self.nodes.iter().filter_map(|n| n.sign).collect()
    }

    /// Shrink the reported boxes of real node parameters to width at most eps.
    pub fn refine_params(&mut self, eps: &Q) {
        let k = self.work.mobius;
        for (node, b) in self.nodes.iter_mut().zip(self.work.boxes.iter_mut()) {
            let Some(b) = b else { continue };
            for (param, r) in node.params.iter_mut().zip(b.iter_mut()) {
                loop {
                    let p = real_param(r, k);
                    let narrow = match &p {
                        Param::Real { lo, hi } => {
                            r.is_exact() || parse_q(hi).zip(parse_q(lo)).is_some_and(|(h, l)| &(h - l) <= eps)
                        }
                        _ => true,
                    };
                    if narrow {
                        *param = p;
                        break;
                    }
                    r.bisect();
                }
            }
        }
    }
}

/// (Möbius change, mix image coordinates) tried in order.
const ATTEMPTS: [(Option<i64>, bool); 6] =
    [(None, false), (None, true), (Some(2), false), (Some(2), true), (Some(-3), true), (Some(7), true)];

pub fn n_d(d: usize) -> usize {
    (d - 1) * (d - 2) / 2
}

fn ng<T>(msg: &str) -> Result<T, CurveError> {
    Err(CurveError::NonGenericProjection(msg.to_string()))
}

fn mixing_matrix(seed: u64) -> [[Q; 3]; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m: Vec<Vec<Q>> = (0..3).map(|_| (0..3).map(|_| q(rng.gen_range(-3..=3))).collect()).collect();
        if !det(&m).is_zero() {
            return [0, 1, 2].map(|i| [0, 1, 2].map(|j| m[i][j].clone()));
        }
    }
}

/// Positive rescaling of each coordinate to a primitive integer form, with p moved along.
fn integral_model(c: &RationalSpaceCurve, p: &[Q; 4]) -> (RationalSpaceCurve, [Q; 4]) {
    let mut c2 = c.clone();
    let mut p2 = p.clone();
    for i in 0..4 {
        let pp = c.coords[i].primitive_part();
        let lam = pp.lc() / c.coords[i].lc();
        let lam = if lam < Q::zero() { -lam } else { lam };
        c2.coords[i] = c.coords[i].scale(&lam);
        p2[i] = &p[i] * &lam;
    }
    (c2, p2)
}

pub fn analyze_projection(c: &RationalSpaceCurve, p: &[Q; 4]) -> Result<Analysis, CurveError> {
    project(c, p)?;
    let (ci, pi) = integral_model(c, p);
    let mut last = String::new();
    for (i, &(k, mix)) in ATTEMPTS.iter().enumerate() {
        match attempt(&ci, &pi, k, if mix { Some(mixing_matrix(i as u64)) } else { None }) {
            Ok(mut a) => {
                a.point = p.clone();
                for n in &mut a.nodes {
                    if let Some(img) = n.image.as_mut() {
                        *img = image_for(c, p, &n.params[0], n.kind).unwrap_or(*img);
                    }
                }
                return Ok(a);
            }
            Err(CurveError::NonGenericProjection(m)) => last = m,
            Err(e) => return Err(e),
        }
    }
    Err(CurveError::NonGenericProjection(last))
}

pub fn double_points(c: &RationalSpaceCurve, p: &[Q; 4]) -> Result<Vec<NodeRecord>, CurveError> {
    analyze_projection(c, p).map(|a| a.nodes)
}

fn attempt(c: &RationalSpaceCurve, p: &[Q; 4], k: Option<i64>, mix: Option<[[Q; 3]; 3]>) -> Result<Analysis, CurveError> {
    let cw = match k {
        Some(k) => c.mobius(k),
        None => c.clone(),
    };
    let pc = project(&cw, p)?;
    let y: [Poly; 3] = match &mix {
        None => pc.forms.clone(),
        Some(m) => [0, 1, 2].map(|i| {
            let mut acc = Poly::zero();
            for j in 0..3 {
                acc = &acc + &pc.forms[j].scale(&m[i][j]);
            }
            acc
        }),
    };
    let n = n_d(c.d);
    let f01 = BiPoly::divided_difference(&y[0], &y[1]);
    let f02 = BiPoly::divided_difference(&y[0], &y[2]);
    let f12 = BiPoly::divided_difference(&y[1], &y[2]);
    let ra = resultant_tau(&f01, &f02);
    let rb = resultant_tau(&f01, &f12);
    if ra.is_zero() || rb.is_zero() {
        return ng("vanishing resultant");
    }
    let s = ra.gcd(&rb).squarefree().monic();
    if s.deg0() != 2 * n {
        return ng(&format!("{} node parameters, expected {}", s.deg0(), 2 * n));
    }
    if s.gcd(&y[0]).deg0() > 0 || s.gcd(&y[1]).deg0() > 0 {
        return ng("node on a coordinate line");
    }
    let (s0, s1) = subresultant1_tau(&f01, &f02);
    let Some(phi) = div_mod(&-&s0, &s1, &s) else {
        return ng("triple point or tangency");
    };
    // φ is a common root of f01 and f02 by construction
    if !f12.subst_tau_mod(&phi, &s).is_zero() {
        return ng("node pairing check failed");
    }
    let t = Poly::monomial(Q::one(), 1);
    if phi.compose_mod(&phi, &s) != t.rem(&s) {
        return ng("node pairing is not an involution");
    }
    if s.gcd(&(&phi - &t)).deg0() > 0 {
        return ng("cusp");
    }

    let mut real = isolate_real_roots(&s);
    let Some(partner) = pair_real_roots(&mut real, &[&f01, &f02, &f12]) else {
        return ng("could not pair real node parameters");
    };

    let mut sep = None;
    for cc in 0..16 {
        let h = (&(&t + &phi) + &t.mul_mod(&phi, &s).scale(&q(cc))).rem(&s);
        let u = charpoly(&multiplication_matrix(&h, &s)).squarefree();
        if u.deg0() == n {
            sep = Some((h, u));
            break;
        }
    }
    let Some((h, u)) = sep else {
        return ng("could not separate nodes");
    };
    let r_tot = real.len() / 2;
    let real_u = count_real_roots(&u);
    if real_u < r_tot {
        return ng("inconsistent node census");
    }
    let sol_tot = real_u - r_tot;

    // spatial nodes: the projection from p of a node of the space curve
    let kp = (0..4).find(|&i| !p[i].is_zero()).expect("nonzero point");
    let g = BiPoly::divided_difference(&y[0], &cw.coords[kp]);
    let m = g.subst_tau_mod(&phi, &s);
    let ssp = if m.is_zero() { s.clone() } else { s.gcd(&m).monic() };
    if ssp.deg0() % 2 == 1 {
        return ng("spatial node census");
    }
    let st_sp = Sturm::new(&ssp);
    let is_spatial: Vec<bool> = real
        .iter()
        .map(|r| {
            if ssp.deg0() == 0 {
                false
            } else if r.is_exact() {
                ssp.eval(&r.lo).is_zero()
            } else {
                st_sp.count(&r.lo, &r.hi) > 0
            }
        })
        .collect();
    let r_sp = is_spatial.iter().filter(|&&b| b).count() / 2;
    let sol_sp = if ssp.deg0() > 0 {
        let usp = charpoly(&multiplication_matrix(&h.rem(&ssp), &ssp)).squarefree();
        count_real_roots(&usp).saturating_sub(r_sp)
    } else {
        0
    };
    let spatial = ssp.deg0() / 2;
    let cp_sp = spatial - r_sp - sol_sp;
    let rest = n as i64 - r_tot as i64 - sol_tot as i64 - cp_sp as i64;
    if rest < 0 || rest % 2 != 0 || sol_sp > sol_tot {
        return ng("inconsistent node census");
    }
    let counts = NodeCounts {
        real_crossing: r_tot - r_sp,
        solitary: sol_tot - sol_sp,
        complex_pair: rest as usize / 2,
        spatial_node: spatial,
    };
    debug_assert_eq!(counts.total(), n);

    let orig_forms = project(c, p)?.forms;
    let mut dm: Option<Poly> = None;
    let mut nodes = Vec::new();
    let mut boxes = Vec::new();
    for i in 0..real.len() {
        let j = partner[i];
        if j < i {
            continue;
        }
        let sgn = if is_spatial[i] {
            None
        } else {
            let (ri, rj) = two_mut(&mut real, i, j);
            match tangent_det_sign(&cw, ri, rj, 120) {
                Some(v) => Some(v),
                None => {
                    // exact fallback: D(t, φ(t)) mod S at the root
                    let d = dm.get_or_insert_with(|| det_poly(&cw, &phi, &s));
                    Some(sign_at(d, &mut real[i]).ok_or(CurveError::TangentialBranch)?)
                }
            }
        };
        let pa = real_param(&real[i], k);
        let pb = real_param(&real[j], k);
        let image = Some(image_real(&orig_forms, &pa));
        nodes.push(NodeRecord {
            kind: if sgn.is_some() { NodeKind::RealCrossing } else { NodeKind::SpatialNode },
            params: [pa, pb],
            image,
            sign: sgn,
        });
        boxes.push(Some([real[i].clone(), real[j].clone()]));
    }
    let nonreal_count = 2 * n - real.len();
    if nonreal_count > 0 {
        let nsp_nonreal = ssp.deg0() - 2 * r_sp;
        nodes.extend(nonreal_records(
            &s,
            &phi,
            &ssp,
            nonreal_count,
            nsp_nonreal,
            counts.solitary,
            k,
            &orig_forms,
        ));
    }
    boxes.resize(nodes.len(), None);

    Ok(Analysis {
        point: p.clone(),
        n_d: n,
        counts,
        nodes,
        work: Work { curve: cw, mobius: k, ssp, dd: [f01, f02, f12], boxes },
    })
}

/// Partner index of each real root: the unique other root whose box keeps every
/// divided difference consistent with zero.
pub(crate) fn pair_real_roots(roots: &mut [RealRoot], fs: &[&BiPoly]) -> Option<Vec<usize>> {
    let n = roots.len();
    for _ in 0..400 {
        let boxes: Vec<Interval> = roots.iter().map(|r| r.interval()).collect();
        let mut partner = vec![usize::MAX; n];
        let mut ok = true;
        for i in 0..n {
            let cands: Vec<usize> = (0..n)
                .filter(|&j| j != i && fs.iter().all(|f| eval_bi(f, &boxes[i], &boxes[j]).contains_zero()))
                .collect();
            if cands.len() == 1 {
                partner[i] = cands[0];
            } else {
                ok = false;
            }
        }
        if ok && (0..n).all(|i| partner[partner[i]] == i) {
            return Some(partner);
        }
        for r in roots.iter_mut() {
            r.bisect();
        }
    }
    None
}

fn eval_bi(f: &BiPoly, x: &Interval, y: &Interval) -> Interval {
    let mut acc = Interval::point(Q::zero());
    for ck in f.c.iter().rev() {
        acc = &(&acc * y) + &Interval::eval_poly(ck, x);
    }
    acc
}

/// Sign of det[z(σ), z'(σ), z(τ), z'(τ)] by interval refinement of both roots.
fn tangent_det_sign(cw: &RationalSpaceCurve, a: &mut RealRoot, b: &mut RealRoot, rounds: usize) -> Option<i32> {
    let z = &cw.coords;
    let dz: Vec<Poly> = z.iter().map(|p| p.derivative()).collect();
    for _ in 0..rounds {
        let (ia, ib) = (a.interval(), b.interval());
        let za: Vec<Interval> = z.iter().map(|p| Interval::eval_poly(p, &ia)).collect();
        let da: Vec<Interval> = dz.iter().map(|p| Interval::eval_poly(p, &ia)).collect();
        let zb: Vec<Interval> = z.iter().map(|p| Interval::eval_poly(p, &ib)).collect();
        let db: Vec<Interval> = dz.iter().map(|p| Interval::eval_poly(p, &ib)).collect();
        let mut acc = Interval::point(Q::zero());
        for i in 0..4 {
            for j in (i + 1)..4 {
                let rest: Vec<usize> = (0..4).filter(|&x| x != i && x != j).collect();
                let (k, l) = (rest[0], rest[1]);
                let ma = &(&za[i] * &da[j]) - &(&za[j] * &da[i]);
                let mb = &(&zb[k] * &db[l]) - &(&zb[l] * &db[k]);
                let term = &ma * &mb;
                acc = if (i + j + 1) % 2 == 0 { &acc + &term } else { &acc - &term };
            }
        }
        match acc.sign() {
            Some(v) if v != 0 => return Some(v),
            Some(_) => return None,
            None => {}
        }
        a.bisect();
        b.bisect();
    }
    None
}

fn two_mut<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &mut T) {
    assert!(i < j);
    let (l, r) = v.split_at_mut(j);
    (&mut l[i], &mut r[0])
}

/// D(t, φ(t)) mod s, where D(σ,τ) = det[z(σ), z'(σ), z(τ), z'(τ)].
fn det_poly(cw: &RationalSpaceCurve, phi: &Poly, s: &Poly) -> Poly {
    let z = &cw.coords;
    let dz: Vec<Poly> = z.iter().map(|p| p.derivative()).collect();
    let minor = |i: usize, j: usize| &(&z[i] * &dz[j]) - &(&z[j] * &dz[i]);
    let mut acc = Poly::zero();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let rest: Vec<usize> = (0..4).filter(|&x| x != i && x != j).collect();
            let a = minor(i, j).rem(s);
            let b = minor(rest[0], rest[1]).compose_mod(phi, s);
            let term = a.mul_mod(&b, s);
            acc = if (i + j + 1) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
    }
    acc
}

/// Sign of p at the root; None if p vanishes there.
pub(crate) fn sign_at(p: &Poly, r: &mut RealRoot) -> Option<i32> {
    if p.is_zero() {
        return None;
    }
    let g = p.gcd(&r.poly);
    if g.deg0() > 0 {
        let hit = if r.is_exact() { g.eval(&r.lo).is_zero() } else { Sturm::new(&g).count(&r.lo, &r.hi) > 0 };
        if hit {
            return None;
        }
    }
    for _ in 0..4000 {
        if r.is_exact() {
            return Some(sign(&p.eval(&r.lo)));
        }
        if let Some(v) = Interval::eval_poly(p, &r.interval()).sign() {
            if v != 0 {
                return Some(v);
            }
        }
        r.bisect();
    }
    None
}

fn mobius_q(k: i64, u: &Q) -> Q {
    (q(k) * u - q(1)) / (u + q(k))
}

/// Map a working-parameter root back to the curve's parameter t.
pub(crate) fn real_param(r: &RealRoot, k: Option<i64>) -> Param {
    let Some(k) = k else {
        return Param::Real { lo: fmt_q(&r.lo), hi: fmt_q(&r.hi) };
    };
    let pole = q(-k);
    let mut r = r.clone();
    while !r.is_exact() && r.lo <= pole && pole <= r.hi {
        r.bisect();
    }
    if r.is_exact() && r.lo == pole {
        return Param::Infinite;
    }
    let a = mobius_q(k, &r.lo);
    let b = mobius_q(k, &r.hi);
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    Param::Real { lo: fmt_q(&lo), hi: fmt_q(&hi) }
}

fn mobius_c(k: Option<i64>, u: Complex64) -> Complex64 {
    match k {
        None => u,
        Some(k) => (u * k as f64 - 1.0) / (u + k as f64),
    }
}

pub(crate) fn param_value(p: &Param) -> Option<Complex64> {
    match p {
        Param::Real { lo, hi } => {
            let a = crate::algebra::parse_q(lo)?;
            let b = crate::algebra::parse_q(hi)?;
            Some(Complex64::new(to_f64(&((a + b) / q(2))), 0.0))
        }
        Param::Complex { re, im } => Some(Complex64::new(*re, *im)),
        Param::Infinite => None,
    }
}

fn normalize(v: [Complex64; 3]) -> [Complex64; 3] {
    let m = *v.iter().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap();
    v.map(|x| x / m)
}

fn image_at(forms: &[Poly; 3], t: Option<Complex64>) -> [Complex64; 3] {
    let v = match t {
        Some(t) => [0, 1, 2].map(|i| eval_c(&forms[i], t)),
        None => {
            let d = forms.iter().map(|f| f.deg0()).max().unwrap();
            [0, 1, 2].map(|i| Complex64::new(to_f64(&forms[i].coeff(d)), 0.0))
        }
    };
    normalize(v)
}

/// Image of a node in the plane coordinates attached to the original curve and p.
fn image_for(c: &RationalSpaceCurve, p: &[Q; 4], param: &Param, kind: NodeKind) -> Option<[f64; 3]> {
    let forms = project(c, p).ok()?.forms;
    match (kind, param) {
        (_, Param::Complex { re, im }) => Some(image_at(&forms, Some(Complex64::new(*re, *im))).map(|w| w.re + 0.0)),
        (_, other) => Some(image_real(&forms, other)),
    }
}

fn image_real(forms: &[Poly; 3], p: &Param) -> [f64; 3] {
    image_at(forms, param_value(p)).map(|z| z.re + 0.0)
}

#[allow(clippy::too_many_arguments)]
fn nonreal_records(
    s: &Poly,
    phi: &Poly,
    ssp: &Poly,
    nonreal_count: usize,
    nsp_nonreal: usize,
    solitary: usize,
    k: Option<i64>,
    forms: &[Poly; 3],
) -> Vec<NodeRecord> {
    let mut zs = complex_roots(s);
    zs.sort_by(|a, b| b.im.abs().total_cmp(&a.im.abs()));
    zs.truncate(nonreal_count);
    let scale = |p: &Poly, z: Complex64| {
        let r = z.norm().max(1.0);
        p.coeffs().iter().enumerate().map(|(i, a)| to_f64(a).abs() * r.powi(i as i32)).sum::<f64>()
    };
    let nearest = |w: Complex64, zs: &[Complex64]| {
        (0..zs.len()).min_by(|&a, &b| (zs[a] - w).norm().total_cmp(&(zs[b] - w).norm())).unwrap()
    };
    let partner: Vec<usize> = zs.iter().map(|&z| nearest(eval_c(phi, z), &zs)).collect();
    let conj: Vec<usize> = zs.iter().map(|&z| nearest(z.conj(), &zs)).collect();
    let mut spatial = vec![false; zs.len()];
    if nsp_nonreal > 0 {
        let mut idx: Vec<usize> = (0..zs.len()).collect();
        idx.sort_by(|&a, &b| {
            let fa = eval_c(ssp, zs[a]).norm() / scale(ssp, zs[a]);
            let fb = eval_c(ssp, zs[b]).norm() / scale(ssp, zs[b]);
            fa.total_cmp(&fb)
        });
        for &i in idx.iter().take(nsp_nonreal) {
            spatial[i] = true;
        }
    }
    // solitary: φ(z) = z̄ among the non-spatial roots
    let mut upper: Vec<usize> = (0..zs.len()).filter(|&i| zs[i].im > 0.0 && !spatial[i]).collect();
    upper.sort_by(|&a, &b| {
        (eval_c(phi, zs[a]) - zs[a].conj()).norm().total_cmp(&(eval_c(phi, zs[b]) - zs[b].conj()).norm())
    });
    let mut used = vec![false; zs.len()];
    let mut out = Vec::new();
    let cparam = |z: Complex64| {
        let t = mobius_c(k, z);
        Param::Complex { re: t.re, im: t.im }
    };
    for &i in upper.iter().take(solitary) {
        used[i] = true;
        used[conj[i]] = true;
        let z = zs[i];
        let img = image_at(forms, Some(mobius_c(k, z))).map(|w| w.re);
        out.push(NodeRecord {
            kind: NodeKind::Solitary,
            params: [cparam(z), cparam(z.conj())],
            image: Some(img),
            sign: None,
        });
    }
    for i in 0..zs.len() {
        if used[i] || (zs[i].im < 0.0 && !spatial[i]) {
            continue;
        }
        let j = partner[i];
        for x in [i, j, conj[i], conj[j]] {
            used[x] = true;
        }
        let kind = if spatial[i] { NodeKind::SpatialNode } else { NodeKind::ComplexPair };
        let image = if kind == NodeKind::SpatialNode && j == conj[i] {
            Some(image_at(forms, Some(mobius_c(k, zs[i]))).map(|w| w.re))
        } else {
            None
        };
        out.push(NodeRecord { kind, params: [cparam(zs[i]), cparam(zs[j])], image, sign: None });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twisted_cubic() -> RationalSpaceCurve {
        RationalSpaceCurve::from_ints([&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap()
    }

    #[test]
    fn twisted_cubic_crossing() {
        let a = analyze_projection(&twisted_cubic(), &[q(1), q(0), q(1), q(0)]).unwrap();
        assert_eq!(a.counts, NodeCounts { real_crossing: 1, ..Default::default() });
        let n = &a.nodes[0];
        let mut hits = [false, false];
        for p in &n.params {
            let Param::Real { lo, hi } = p else { panic!("{p:?}") };
            let (lo, hi) = (crate::algebra::parse_q(lo).unwrap(), crate::algebra::parse_q(hi).unwrap());
            for (k, v) in [q(-1), q(1)].iter().enumerate() {
                if lo <= *v && *v <= hi {
                    hits[k] = true;
                }
            }
        }
        assert_eq!(hits, [true, true]);
    }

    #[test]
    fn twisted_cubic_solitary() {
        let a = analyze_projection(&twisted_cubic(), &[q(0), q(1), q(-1), q(0)]).unwrap();
        assert_eq!(a.counts, NodeCounts { solitary: 1, ..Default::default() });
        let img = a.nodes[0].image.unwrap();
        let r = img[0];
        for (x, e) in img.iter().zip([1.0, -1.0, 1.0]) {
            assert!((x / r - e).abs() < 1e-9);
        }
    }
}
