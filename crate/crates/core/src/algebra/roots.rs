//! Sturm sequences and isolation of real roots of square-free polynomials.

use super::interval::Interval;
use super::poly::Poly;
use super::{q, sign, Q};
use num_traits::{One, Signed, Zero};

/// Divide by the absolute content so signs are preserved.
fn positive_normalize(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let pp = p.primitive_part();
    if sign(&pp.lc()) == sign(&p.lc()) {
        pp
    } else {
        -&pp
    }
}

#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<Poly>,
}

impl Sturm {
    pub fn new(p: &Poly) -> Self {
        let mut seq = vec![positive_normalize(p)];
        if p.degree().unwrap_or(0) > 0 {
            seq.push(positive_normalize(&p.derivative()));
            loop {
                let n = seq.len();
                let r = seq[n - 2].rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(positive_normalize(&-&r));
            }
        }
        Sturm { seq }
    }

    fn variations_of(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations(&self, x: &Q) -> usize {
        Self::variations_of(self.seq.iter().map(|p| sign(&p.eval(x))))
    }

    fn variations_inf(&self, positive: bool) -> usize {
        Self::variations_of(self.seq.iter().map(|p| {
            let s = sign(&p.lc());
            if !positive && p.deg0() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in (a, b].
    pub fn count(&self, a: &Q, b: &Q) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    pub fn count_all(&self) -> usize {
        self.variations_inf(false).saturating_sub(self.variations_inf(true))
    }
}

/// A real root of a square-free polynomial, located in an isolating interval.
/// Either `lo == hi` (exact rational root) or the open interval (lo, hi)
/// contains exactly one root and the polynomial does not vanish at lo or hi.
#[derive(Clone, Debug)]
pub struct RealRoot {
    pub poly: Poly,
    pub lo: Q,
    pub hi: Q,
}

impl RealRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn approx(&self) -> f64 {
        super::to_f64(&((&self.lo + &self.hi) / q(2)))
    }

    /// One bisection step.
    pub fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let m = (&self.lo + &self.hi) / q(2);
        let sm = sign(&self.poly.eval(&m));
        if sm == 0 {
            self.lo = m.clone();
            self.hi = m;
            return;
        }
        let slo = sign(&self.poly.eval(&self.lo));
        if slo == sm {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    pub fn refine_to(&mut self, eps: &Q) {
        while !self.is_exact() && self.width() > *eps {
            self.bisect();
        }
    }

    /// Sign of the root compared to a rational.
    pub fn cmp_rational(&mut self, x: &Q) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        if self.is_exact() {
            return self.lo.cmp(x);
        }
        if *x <= self.lo {
            return Greater;
        }
        if *x >= self.hi {
            return Less;
        }
        let s = sign(&self.poly.eval(x));
        if s == 0 {
            return Equal;
        }
        let slo = sign(&self.poly.eval(&self.lo));
        if s == slo {
            Less
        } else {
            Greater
        }
    }
}

pub fn cauchy_bound(p: &Poly) -> Q {
    let lc = p.lc().abs();
    let mut m = Q::zero();
    for a in &p.coeffs()[..p.deg0()] {
        let r = a.abs() / &lc;
        if r > m {
            m = r;
        }
    }
    // round up to a power of two so bisection points stay dyadic and short
    let b = m + Q::one();
    let mut p = Q::one();
    while p < b {
        p *= q(2);
    }
    p
}

/// All real roots of the square-free polynomial `p`, in increasing order.
pub fn isolate_real_roots(p: &Poly) -> Vec<RealRoot> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let p = positive_normalize(p);
    let st = Sturm::new(&p);
    let b = cauchy_bound(&p);
    let lo = -b.clone();
    let hi = b;
    let n = st.count(&lo, &hi);
    let mut out = Vec::new();
    isolate_rec(&p, &st, lo, hi, n, &mut out);
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

fn isolate_rec(p: &Poly, st: &Sturm, a: Q, b: Q, n: usize, out: &mut Vec<RealRoot>) {
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(RealRoot { poly: p.clone(), lo: a, hi: b });
        return;
    }
    let m = (&a + &b) / q(2);
    if p.eval(&m).is_zero() {
        out.push(RealRoot { poly: p.clone(), lo: m.clone(), hi: m.clone() });
        let mut eps = (&b - &a) / q(4);
        loop {
            let l = &m - &eps;
            let r = &m + &eps;
            if !p.eval(&l).is_zero() && !p.eval(&r).is_zero() && st.count(&l, &r) == 1 {
                let nl = st.count(&a, &l);
                let nr = st.count(&r, &b);
                isolate_rec(p, st, a, l, nl, out);
                isolate_rec(p, st, r, b, nr, out);
                return;
            }
            eps /= q(2);
        }
    }
    let nl = st.count(&a, &m);
    isolate_rec(p, st, a, m.clone(), nl, out);
    isolate_rec(p, st, m, b, n - nl, out);
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(p: &Poly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    Sturm::new(&p.squarefree()).count_all()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qr;

    #[test]
    fn isolates_simple_roots() {
        // (t-1)(t+2)(2t-1)(t^2+1)
        let p = &(&(&Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[2, 1])) * &Poly::from_ints(&[-1, 2]))
            * &Poly::from_ints(&[1, 0, 1]);
        let rs = isolate_real_roots(&p);
        assert_eq!(rs.len(), 3);
        let expect = [q(-2), qr(1, 2), q(1)];
        for (mut r, e) in rs.into_iter().zip(expect) {
            assert_eq!(r.cmp_rational(&e), std::cmp::Ordering::Equal);
        }
    }

    #[test]
    fn refines_irrational_root() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let mut rs = isolate_real_roots(&p);
        assert_eq!(rs.len(), 2);
        let r = &mut rs[1];
        r.refine_to(&qr(1, 1 << 30));
        assert!((r.approx() - 2f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn sturm_count_matches_isolation() {
        let p = Poly::from_ints(&[0, -5, 0, 1]).squarefree();
        assert_eq!(Sturm::new(&p).count_all(), 3);
        assert_eq!(count_real_roots(&Poly::from_ints(&[1, 0, 1])), 0);
    }
}
