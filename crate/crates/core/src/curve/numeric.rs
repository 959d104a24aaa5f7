//! Floating-point complex roots, used only to label non-real nodes in reports.

use crate::algebra::poly::Poly;
use crate::algebra::to_f64;
use num_complex::Complex64;

pub fn eval_c(p: &Poly, z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for a in p.coeffs().iter().rev() {
        acc = acc * z + to_f64(a);
    }
    acc
}

fn eval_with_derivative(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Aberth iteration; roots of a square-free polynomial, unordered.
pub fn complex_roots(p: &Poly) -> Vec<Complex64> {
    let n = p.deg0();
    if n == 0 {
        return Vec::new();
    }
    let lc = to_f64(&p.lc());
    let c: Vec<f64> = p.coeffs().iter().map(|a| to_f64(a) / lc).collect();
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let (pv, dv) = eval_with_derivative(&c, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let w = pv / dv;
            let s: Complex64 = (0..n).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let step = w / (1.0 - w * s);
            z[k] -= step;
            moved = moved.max(step.norm() / (1.0 + z[k].norm()));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_roots_of_unity() {
        let p = Poly::from_ints(&[1, 1, 1]);
        let r = complex_roots(&p);
        assert_eq!(r.len(), 2);
        for z in r {
            assert!((z.re + 0.5).abs() < 1e-12);
            assert!((z.im.abs() - 3f64.sqrt() / 2.0).abs() < 1e-12);
        }
    }
}
