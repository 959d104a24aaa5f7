use super::{q, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// The coefficient vector never ends in a zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Q>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| format!("({})t^{}", super::fmt_q(x), i))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![Q::one()] }
    }

    pub fn constant(a: Q) -> Self {
        Poly::new(vec![a])
    }

    /// The monomial a·t^k.
    pub fn monomial(a: Q, k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = a;
        Poly::new(c)
    }

    /// t - a
    pub fn linear_root(a: &Q) -> Self {
        Poly::new(vec![-a.clone(), Q::one()])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&x| q(x)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    /// Coefficient of t^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, a: &Q) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|x| x * a).collect() }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + super::to_f64(a);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * q(i as i64))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg0();
        if self.c.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut r = self.c.clone();
        let mut quot = vec![Q::zero(); self.c.len() - dd];
        for k in (0..quot.len()).rev() {
            let f = &r[k + dd] * &inv;
            if f.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] -= &f * b;
            }
            quot[k] = f;
        }
        r.truncate(dd);
        (Poly::new(quot), Poly::new(r))
    }

    /// Remainder, computed as an integer pseudo-remainder to avoid rational normalization.
    pub fn rem(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.c.len() < d.c.len() {
            return self.clone();
        }
        let la = self.c.iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
        let mut r: Vec<BigInt> = self.c.iter().map(|a| (a * Q::from_integer(la.clone())).to_integer()).collect();
        let b = int_primitive(d);
        let db = b.len() - 1;
        let lb = &b[db];
        let mut steps = 0usize;
        while r.len() > db {
            let k = r.len() - 1;
            let lr = r[k].clone();
            for x in r.iter_mut() {
                *x *= lb;
            }
            if !lr.is_zero() {
                let shift = k - db;
                for (i, bi) in b.iter().enumerate() {
                    r[shift + i] -= &lr * bi;
                }
            }
            steps += 1;
            r.pop();
        }
        let den = Q::from_integer(la * num_traits::pow(lb.clone(), steps));
        Poly::new(r.into_iter().map(|x| Q::from_integer(x) / &den).collect())
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (qt, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        qt
    }

    /// Monic gcd (zero if both are zero), by a primitive remainder sequence over Z.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = int_primitive(self);
        let mut b = int_primitive(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_primitive_vec(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        Poly::new(a.into_iter().map(Q::from_integer).collect()).monic()
    }

    /// Extended gcd: returns (g, s, t) with s·a + t·b = g, g monic.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (qt, r) = r0.div_rem(&r1);
            let s = &s0 - &(&qt * &s1);
            let t = &t0 - &(&qt * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of self modulo m, if gcd(self, m) = 1.
    pub fn inverse_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = Poly::ext_gcd(&self.rem(m), m);
        if g.degree() == Some(0) {
            Some(s.rem(m))
        } else {
            None
        }
    }

    pub fn mul_mod(&self, other: &Poly, m: &Poly) -> Poly {
        (self * other).rem(m)
    }

    /// self(h(t)) mod m.
    pub fn compose_mod(&self, h: &Poly, m: &Poly) -> Poly {
        let hm = h.rem(m);
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = &acc.mul_mod(&hm, m) + &Poly::constant(a.clone());
        }
        acc.rem(m)
    }

    pub fn compose(&self, h: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * h) + &Poly::constant(a.clone());
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut r = Poly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Square-free part, monic.
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return if self.is_zero() { Poly::zero() } else { Poly::one() };
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    /// Scalar multiple with coprime integer coefficients and positive leading term.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut l = BigInt::one();
        for a in &self.c {
            l = l.lcm(a.denom());
        }
        let ints: Vec<BigInt> = self.c.iter().map(|a| (a * Q::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for a in &ints {
            g = g.gcd(a);
        }
        let sgn = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        let g = g * sgn;
        Poly::new(ints.into_iter().map(|a| Q::from_integer(a / &g)).collect())
    }

    /// Reverse coefficient order with respect to a formal degree n: t^n p(1/t).
    pub fn reverse(&self, n: usize) -> Poly {
        let mut c = vec![Q::zero(); n + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[n - i] = a.clone();
        }
        Poly::new(c)
    }

    /// p(-t)
    pub fn negate_var(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a.clone() } else { a.clone() })
                .collect(),
        )
    }

    /// Interpolating polynomial through (x_i, y_i), Newton form.
    pub fn interpolate(xs: &[Q], ys: &[Q]) -> Poly {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        let mut dd: Vec<Q> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut acc = Poly::constant(dd[n - 1].clone());
        for i in (0..n.saturating_sub(1)).rev() {
            acc = &(&acc * &Poly::linear_root(&xs[i])) + &Poly::constant(dd[i].clone());
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(c)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|a| -a.clone()).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

/// Integer coefficients of the primitive part (empty for zero).
fn int_primitive(p: &Poly) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let l = p.c.iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
    int_primitive_vec(p.c.iter().map(|a| (a * Q::from_integer(l.clone())).to_integer()).collect())
}

fn int_primitive_vec(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let g = v.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
    let g = if v.last().unwrap().is_negative() { -g } else { g };
    v.into_iter().map(|a| a / &g).collect()
}

/// A scalar multiple of a mod b, computed over Z.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let lr = r[k].clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let shift = k - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &lr * bi;
        }
        r.pop();
        // keep sizes in check
        let g = r.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
        if !g.is_zero() && !g.is_one() {
            for x in r.iter_mut() {
                *x /= &g;
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_squarefree() {
        let a = Poly::from_ints(&[-1, 0, 1]); // t^2 - 1
        let b = Poly::from_ints(&[1, 1]); // t + 1
        let p = &(&a * &b) * &b;
        assert_eq!(p.gcd(&a), a.monic());
        assert_eq!(p.squarefree(), a);
        assert!(!p.is_squarefree());
    }

    #[test]
    fn interpolation_recovers() {
        let p = Poly::from_ints(&[3, -2, 0, 5]);
        let xs: Vec<Q> = (0..4).map(q).collect();
        let ys: Vec<Q> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(Poly::interpolate(&xs, &ys), p);
    }

    #[test]
    fn inverse_modulo() {
        let m = Poly::from_ints(&[1, 0, 1]);
        let a = Poly::from_ints(&[1, 1]);
        let inv = a.inverse_mod(&m).unwrap();
        assert_eq!(a.mul_mod(&inv, &m), Poly::one());
    }

    #[test]
    fn division_identity() {
        let a = Poly::from_ints(&[5, 0, -3, 2, 7]);
        let b = Poly::from_ints(&[1, 2, 3]);
        let (qt, r) = a.div_rem(&b);
        assert_eq!(&(&qt * &b) + &r, a);
        assert!(r.deg0() < 2);
    }
}
