//! Bivariate polynomials in (σ, τ) and resultants in τ by evaluation/interpolation.

use super::linalg::{det, Mat};
use super::poly::Poly;
use super::{q, Q};
use num_traits::Zero;

/// Σ_k c_k(σ) τ^k.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly {
    pub c: Vec<Poly>,
}

impl BiPoly {
    /// (x(σ)y(τ) − x(τ)y(σ)) / (σ − τ).
    pub fn divided_difference(x: &Poly, y: &Poly) -> BiPoly {
        let n = x.coeffs().len().max(y.coeffs().len());
        let mut grid = vec![vec![Q::zero(); n]; n]; // grid[σ-exp][τ-exp]
        for a in 0..n {
            for b in 0..a {
                let cab = x.coeff(a) * y.coeff(b) - y.coeff(a) * x.coeff(b);
                if cab.is_zero() {
                    continue;
                }
                // c_ab (στ)^b Σ_{k=0}^{a-b-1} σ^k τ^{a-b-1-k}
                for k in 0..(a - b) {
                    grid[b + k][b + (a - b - 1 - k)] += &cab;
                }
            }
        }
        let c = (0..n)
            .map(|te| Poly::new((0..n).map(|se| grid[se][te].clone()).collect()))
            .collect();
        BiPoly::trimmed(c)
    }

    fn trimmed(mut c: Vec<Poly>) -> BiPoly {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        BiPoly { c }
    }

    pub fn deg_tau(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn deg_sigma(&self) -> usize {
        self.c.iter().map(|p| p.deg0()).max().unwrap_or(0)
    }

    /// Specialize σ, giving a polynomial in τ.
    pub fn eval_sigma(&self, s: &Q) -> Poly {
        Poly::new(self.c.iter().map(|p| p.eval(s)).collect())
    }

    pub fn eval(&self, s: &Q, t: &Q) -> Q {
        self.eval_sigma(s).eval(t)
    }

    /// Σ_k c_k(t) h(t)^k mod m.
    pub fn subst_tau_mod(&self, h: &Poly, m: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for ck in self.c.iter().rev() {
            acc = &acc.mul_mod(h, m) + &ck.rem(m);
        }
        acc.rem(m)
    }
}

/// Coefficient rows of the Sylvester-type matrix used for subresultant j.
/// Polynomials are read with formal degrees m, n; columns run from τ^{m+n-j-1} down to τ^0.
fn sylvester_rows(a: &Poly, m: usize, b: &Poly, n: usize, j: usize) -> Mat {
    let width = m + n - j;
    let mut rows = Vec::new();
    for (p, dp, count) in [(a, m, n - j), (b, n, m - j)] {
        for s in (0..count).rev() {
            // τ^s · p
            let mut row = vec![Q::zero(); width];
            for k in 0..=dp {
                let pow = k + s;
                row[width - 1 - pow] = p.coeff(k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Res_τ(a, b) with formal degrees.
pub fn resultant_formal(a: &Poly, m: usize, b: &Poly, n: usize) -> Q {
    if m == 0 && n == 0 {
        return Q::from_integer(1.into());
    }
    det(&sylvester_rows(a, m, b, n, 0))
}

/// Coefficients (c_0, c_1) of the first subresultant S_1 = c_1 τ + c_0.
pub fn subresultant1_formal(a: &Poly, m: usize, b: &Poly, n: usize) -> (Q, Q) {
    assert!(m >= 1 && n >= 1);
    let rows = sylvester_rows(a, m, b, n, 1);
    let width = m + n - 1;
    let lead = width - 1; // leading square block uses columns 0..lead-1 then one more
    let pick = |col: usize| -> Q {
        let sq: Mat = rows
            .iter()
            .map(|r| {
                let mut v: Vec<Q> = r[..lead - 1].to_vec();
                v.push(r[col].clone());
                v
            })
            .collect();
        det(&sq)
    };
    // column index for τ^i is width-1-i
    (pick(width - 1), pick(width - 2))
}

fn sample_points(n: usize) -> Vec<Q> {
    (0..n as i64).map(|k| if k % 2 == 0 { q(k / 2) } else { q(-(k + 1) / 2) }).collect()
}

/// Res_τ(A, B) as a polynomial in σ.
pub fn resultant_tau(a: &BiPoly, b: &BiPoly) -> Poly {
    let (m, n) = (a.deg_tau(), b.deg_tau());
    let bound = n * a.deg_sigma() + m * b.deg_sigma();
    let xs = sample_points(bound + 1);
    let ys: Vec<Q> = xs
        .iter()
        .map(|s| resultant_formal(&a.eval_sigma(s), m, &b.eval_sigma(s), n))
        .collect();
    Poly::interpolate(&xs, &ys)
}

/// First subresultant coefficients (s0(σ), s1(σ)) of A, B with respect to τ.
pub fn subresultant1_tau(a: &BiPoly, b: &BiPoly) -> (Poly, Poly) {
    let (m, n) = (a.deg_tau(), b.deg_tau());
    let bound = n * a.deg_sigma() + m * b.deg_sigma();
    let xs = sample_points(bound + 1);
    let mut y0 = Vec::with_capacity(xs.len());
    let mut y1 = Vec::with_capacity(xs.len());
    for s in &xs {
        let (c0, c1) = subresultant1_formal(&a.eval_sigma(s), m, &b.eval_sigma(s), n);
        y0.push(c0);
        y1.push(c1);
    }
    (Poly::interpolate(&xs, &y0), Poly::interpolate(&xs, &y1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_difference_matches_definition() {
        let x = Poly::from_ints(&[1, 2, 0, -1]);
        let y = Poly::from_ints(&[0, 3, 1, 2]);
        let f = BiPoly::divided_difference(&x, &y);
        for (s, t) in [(2, 5), (-1, 3), (4, -2)] {
            let (s, t) = (q(s), q(t));
            let lhs = f.eval(&s, &t) * (&s - &t);
            let rhs = x.eval(&s) * y.eval(&t) - x.eval(&t) * y.eval(&s);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn resultant_of_linear_pair() {
        // a = τ - σ, b = τ + σ - 2: common root iff σ = 1
        let a = BiPoly { c: vec![Poly::from_ints(&[0, -1]), Poly::from_ints(&[1])] };
        let b = BiPoly { c: vec![Poly::from_ints(&[-2, 1]), Poly::from_ints(&[1])] };
        let r = resultant_tau(&a, &b);
        assert_eq!(r.degree(), Some(1));
        assert!(r.eval(&q(1)).is_zero());
    }

    #[test]
    fn subresultant_gives_common_root() {
        // a = (τ-1)(τ-2), b = (τ-1)(τ+3): S_1 ∝ τ - 1
        let a = Poly::from_ints(&[2, -3, 1]);
        let b = Poly::from_ints(&[-3, 2, 1]);
        assert!(resultant_formal(&a, 2, &b, 2).is_zero());
        let (c0, c1) = subresultant1_formal(&a, 2, &b, 2);
        assert!(!c1.is_zero());
        assert_eq!(-c0 / c1, q(1));
    }
}
