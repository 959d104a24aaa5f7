//! Explicit test curves: twisted cubic, curves with prescribed nodes, random curves.

use super::{CurveError, RationalSpaceCurve};
use crate::algebra::linalg::nullspace;
use crate::algebra::poly::Poly;
use crate::algebra::{q, Q};
use num_traits::{One, Zero};
use rand::Rng;

pub fn twisted_cubic() -> RationalSpaceCurve {
    RationalSpaceCurve::from_ints([&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap()
}

/// A linear condition Σ c_j coeff_j = 0 on polynomials of degree ≤ d.
pub type Condition = Vec<Q>;

/// f(a) − e·f(b) = 0.
pub fn coincidence(d: usize, a: &Q, b: &Q, e: &Q) -> Condition {
    let mut pa = Q::one();
    let mut pb = Q::one();
    let mut row = Vec::with_capacity(d + 1);
    for _ in 0..=d {
        row.push(&pa - e * &pb);
        pa *= a;
        pb *= b;
    }
    row
}

/// Im f(re + i·im) = 0.
pub fn real_at(d: usize, re: &Q, im: &Q) -> Condition {
    let (mut zr, mut zi) = (Q::one(), Q::zero());
    let mut row = Vec::with_capacity(d + 1);
    for _ in 0..=d {
        row.push(zi.clone());
        let nr = &zr * re - &zi * im;
        let ni = &zr * im + &zi * re;
        zr = nr;
        zi = ni;
    }
    row
}

/// Basis of the polynomials of degree ≤ d satisfying every condition.
pub fn solution_space(d: usize, conds: &[Condition]) -> Vec<Poly> {
    if conds.is_empty() {
        return (0..=d).map(|k| Poly::monomial(Q::one(), k)).collect();
    }
    nullspace(&conds.to_vec(), d + 1).into_iter().map(Poly::new).collect()
}

/// Curve whose four coordinates span the solution space (which must be 4-dimensional).
pub fn curve_from_conditions(d: usize, conds: &[Condition]) -> Result<RationalSpaceCurve, CurveError> {
    let b = solution_space(d, conds);
    if b.len() != 4 {
        return Err(CurveError::PlanarImage);
    }
    RationalSpaceCurve::new(b.try_into().unwrap(), d)
}

/// Four random combinations of the solution space with small integer weights.
pub fn random_curve_from_conditions<R: Rng>(rng: &mut R, d: usize, conds: &[Condition]) -> Result<RationalSpaceCurve, CurveError> {
    let b = solution_space(d, conds);
    let coords = [0, 1, 2, 3].map(|_| {
        let mut acc = Poly::zero();
        for p in &b {
            acc = &acc + &p.scale(&q(rng.gen_range(-4..=4)));
        }
        acc
    });
    RationalSpaceCurve::new(coords, d)
}

/// Nested-count sign per chord: −1 when an odd number of parameter-line loops lies inside it.
/// Chords are pairs a < b, pairwise non-crossing.
pub fn hopf_signs(chords: &[(Q, Q)]) -> Vec<Q> {
    chords
        .iter()
        .map(|(a, b)| {
            let inside = chords.iter().filter(|(c, e)| a < c && e < b).count();
            if (inside + 1) % 2 == 1 {
                -Q::one()
            } else {
                Q::one()
            }
        })
        .collect()
}

/// Nodal curve of degree d with d−3 real nodes at the given parameter pairs, every
/// planar loop meeting each plane an odd number of times.
pub fn nodal_hopf(d: usize, chords: &[(Q, Q)]) -> Result<RationalSpaceCurve, CurveError> {
    assert_eq!(chords.len() + 3, d, "need d-3 chords");
    curve_from_conditions(d, &hopf_conditions(d, chords))
}

pub fn hopf_conditions(d: usize, chords: &[(Q, Q)]) -> Vec<Condition> {
    let signs = hopf_signs(chords);
    chords.iter().zip(&signs).map(|((a, b), e)| coincidence(d, a, b, e)).collect()
}

/// base + eps·pert, coordinate-wise.
pub fn perturb(base: &RationalSpaceCurve, pert: &[Poly; 4], eps: &Q) -> Result<RationalSpaceCurve, CurveError> {
    let coords = [0, 1, 2, 3].map(|i| &base.coords[i] + &pert[i].scale(eps));
    RationalSpaceCurve::new(coords, base.d)
}

/// Nodal Hopf curve with all nodes but those listed in `keep` smoothed by a small perturbation.
pub fn smoothed_hopf(d: usize, chords: &[(Q, Q)], keep: &[usize], eps: &Q) -> Result<RationalSpaceCurve, CurveError> {
    let base = nodal_hopf(d, chords)?;
    let all = hopf_conditions(d, chords);
    let kept: Vec<Condition> = keep.iter().map(|&i| all[i].clone()).collect();
    let space = solution_space(d, &kept);
    // fixed combinations of the basis, cycled per coordinate
    let k = space.len();
    let pert = [0, 1, 2, 3].map(|i| &space[(i + 1) % k] + &space[(i + 3) % k]);
    perturb(&base, &pert, eps)
}

pub fn random_curve<R: Rng>(rng: &mut R, d: usize, height: i64) -> RationalSpaceCurve {
    loop {
        let coords = [0, 1, 2, 3].map(|_| Poly::new((0..=d).map(|_| q(rng.gen_range(-height..=height))).collect()));
        if let Ok(c) = RationalSpaceCurve::new(coords, d) {
            if c.coords.iter().any(|p| p.deg0() == d) {
                return c;
            }
        }
    }
}
