//! Dense matrices over Q.

use super::poly::Poly;
use super::{q, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<Q>>;

fn integer_rows(m: &Mat) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let a = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    (a, scale)
}

/// Fraction-free (Bareiss) forward elimination on the first `n` columns.
/// Returns false if a pivot is missing; `neg` tracks row swaps.
fn bareiss(a: &mut [Vec<BigInt>], n: usize, neg: &mut bool) -> bool {
    let width = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return false;
        };
        if piv != k {
            a.swap(piv, k);
            *neg = !*neg;
        }
        for i in k + 1..n {
            for j in k + 1..width {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    true
}

pub fn det(m: &Mat) -> Q {
    let n = m.len();
    if n == 0 {
        return Q::one();
    }
    let (mut a, scale) = integer_rows(m);
    let mut neg = false;
    if !bareiss(&mut a, n, &mut neg) {
        return Q::zero();
    }
    let d = Q::new(a[n - 1][n - 1].clone(), scale);
    if neg {
        -d
    } else {
        d
    }
}

/// Solution of m x = b for square invertible m.
pub fn solve(m: &Mat, b: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let aug: Mat = m.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect();
    let (mut a, _) = integer_rows(&aug);
    let mut neg = false;
    if !bareiss(&mut a, n, &mut neg) {
        return None;
    }
    // fraction-free back substitution: y = D·x is integral, D the last pivot
    let dd = a[n - 1][n - 1].clone();
    let mut y = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &dd * &a[i][n];
        for j in i + 1..n {
            acc -= &a[i][j] * &y[j];
        }
        y[i] = acc / &a[i][i];
    }
    Some(y.into_iter().map(|v| Q::new(v, dd.clone())).collect())
}

/// x with b·x ≡ a (mod m), if b is invertible modulo m.
pub fn div_mod(a: &Poly, b: &Poly, m: &Poly) -> Option<Poly> {
    let n = m.deg0();
    let mm = multiplication_matrix(b, m);
    let rhs: Vec<Q> = (0..n).map(|i| a.rem(m).coeff(i)).collect();
    solve(&mm, &rhs).map(Poly::new)
}

/// Reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &f * &m[r][j];
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Mat) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of {x : m x = 0}.
pub fn nullspace(m: &Mat, cols: usize) -> Vec<Vec<Q>> {
    let mut a = m.clone();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &pc) in piv.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// det(u·I − m) as a polynomial in u.
pub fn charpoly(m: &Mat) -> Poly {
    let n = m.len();
    let xs: Vec<Q> = (0..=n as i64).map(q).collect();
    let ys: Vec<Q> = xs
        .iter()
        .map(|u| {
            let mut a = m.clone();
            for (i, row) in a.iter_mut().enumerate() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
                row[i] += u;
            }
            det(&a)
        })
        .collect();
    Poly::interpolate(&xs, &ys)
}

/// Matrix of multiplication by h in Q[t]/(s), basis 1, t, ..., t^{n-1}.
pub fn multiplication_matrix(h: &Poly, s: &Poly) -> Mat {
    let n = s.deg0();
    let mut m = vec![vec![Q::zero(); n]; n];
    let mut col = h.rem(s);
    let t = Poly::monomial(Q::one(), 1);
    for j in 0..n {
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
        col = col.mul_mod(&t, s);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(v: &[&[i64]]) -> Mat {
        v.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn determinant_and_rank() {
        let m = mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(det(&m), q(18));
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = mat(&[&[1, 2, 3, 4]]);
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 3);
        for v in ns {
            let s: Q = m[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_and_divide() {
        let m = mat(&[&[2, 1], &[1, 3]]);
        assert_eq!(solve(&m, &[q(3), q(4)]).unwrap(), vec![q(1), q(1)]);
        let s = Poly::from_ints(&[-6, 11, -6, 1]);
        let b = Poly::from_ints(&[1, 1]);
        let a = Poly::from_ints(&[2, 0, 1]);
        let x = div_mod(&a, &b, &s).unwrap();
        assert_eq!(x.mul_mod(&b, &s), a.rem(&s));
        assert!(div_mod(&a, &Poly::from_ints(&[-1, 1]), &s).is_none());
    }

    #[test]
    fn charpoly_of_companion() {
        let s = Poly::from_ints(&[-6, 11, -6, 1]);
        let m = multiplication_matrix(&Poly::monomial(Q::one(), 1), &s);
        assert_eq!(charpoly(&m), s);
    }
}
