//! Finite-difference derivatives on complex coordinate charts.
//!
//! Chart coordinates are a complex matrix `Z`; coordinates are addressed by
//! their column-major flat index. All derivatives use centered 2nd-order
//! stencils with one Richardson extrapolation step (leading error O(h⁴)).

use nalgebra::DMatrix;
use num_complex::Complex64;

/// A real coordinate direction on a complex chart: the real or imaginary
/// axis of one complex coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealDirection {
    pub coord: usize,
    pub imaginary: bool,
}

impl RealDirection {
    fn delta(&self, h: f64) -> Complex64 {
        if self.imaginary {
            Complex64::new(0.0, h)
        } else {
            Complex64::new(h, 0.0)
        }
    }
}

/// `z0` displaced by `delta` in the flat coordinate `coord`.
pub fn displace(z0: &DMatrix<Complex64>, coord: usize, delta: Complex64) -> DMatrix<Complex64> {
    let mut z = z0.clone();
    z[coord] += delta;
    z
}

fn displace2(
    z0: &DMatrix<Complex64>,
    a: RealDirection,
    sa: f64,
    b: RealDirection,
    sb: f64,
    h: f64,
) -> DMatrix<Complex64> {
    let mut z = z0.clone();
    z[a.coord] += a.delta(sa * h);
    z[b.coord] += b.delta(sb * h);
    z
}

/// Centered first derivative of a matrix-valued function along a real
/// direction, Richardson extrapolated.
pub fn directional_derivative<F>(
    f: &F,
    z0: &DMatrix<Complex64>,
    dir: RealDirection,
    h: f64,
) -> DMatrix<Complex64>
where
    F: Fn(&DMatrix<Complex64>) -> DMatrix<Complex64>,
{
    let d = |step: f64| -> DMatrix<Complex64> {
        let plus = f(&displace(z0, dir.coord, dir.delta(step)));
        let minus = f(&displace(z0, dir.coord, dir.delta(-step)));
        (plus - minus) / Complex64::new(2.0 * step, 0.0)
    };
    let coarse = d(h);
    let fine = d(h / 2.0);
    (fine * Complex64::new(4.0, 0.0) - coarse) / Complex64::new(3.0, 0.0)
}

/// Wirtinger derivatives (∂F/∂z_c, ∂F/∂z̄_c) of a matrix-valued function.
pub fn wirtinger_first<F>(
    f: &F,
    z0: &DMatrix<Complex64>,
    coord: usize,
    h: f64,
) -> (DMatrix<Complex64>, DMatrix<Complex64>)
where
    F: Fn(&DMatrix<Complex64>) -> DMatrix<Complex64>,
{
    let dx = directional_derivative(f, z0, RealDirection { coord, imaginary: false }, h);
    let dy = directional_derivative(f, z0, RealDirection { coord, imaginary: true }, h);
    let i = Complex64::i();
    let half = Complex64::new(0.5, 0.0);
    let dz = (&dx - &dy * i) * half;
    let dzbar = (&dx + &dy * i) * half;
    (dz, dzbar)
}

fn second_same_direction<F>(
    f: &F,
    z0: &DMatrix<Complex64>,
    dir: RealDirection,
    h: f64,
) -> DMatrix<Complex64>
where
    F: Fn(&DMatrix<Complex64>) -> DMatrix<Complex64>,
{
    let center = f(z0);
    let d = |step: f64| -> DMatrix<Complex64> {
        let plus = f(&displace(z0, dir.coord, dir.delta(step)));
        let minus = f(&displace(z0, dir.coord, dir.delta(-step)));
        (plus + minus - &center * Complex64::new(2.0, 0.0)) / Complex64::new(step * step, 0.0)
    };
    let coarse = d(h);
    let fine = d(h / 2.0);
    (fine * Complex64::new(4.0, 0.0) - coarse) / Complex64::new(3.0, 0.0)
}

fn second_mixed<F>(
    f: &F,
    z0: &DMatrix<Complex64>,
    a: RealDirection,
    b: RealDirection,
    h: f64,
) -> DMatrix<Complex64>
where
    F: Fn(&DMatrix<Complex64>) -> DMatrix<Complex64>,
{
    if a == b {
        return second_same_direction(f, z0, a, h);
    }
    let d = |step: f64| -> DMatrix<Complex64> {
        let pp = f(&displace2(z0, a, 1.0, b, 1.0, step));
        let pm = f(&displace2(z0, a, 1.0, b, -1.0, step));
        let mp = f(&displace2(z0, a, -1.0, b, 1.0, step));
        let mm = f(&displace2(z0, a, -1.0, b, -1.0, step));
        (pp - pm - mp + mm) / Complex64::new(4.0 * step * step, 0.0)
    };
    let coarse = d(h);
    let fine = d(h / 2.0);
    (fine * Complex64::new(4.0, 0.0) - coarse) / Complex64::new(3.0, 0.0)
}

/// Mixed Wirtinger second derivative ∂²F/∂z_c∂z̄_d of a matrix-valued
/// function, assembled from real-direction stencils via
/// ∂²/∂z_c∂z̄_d = ¼[∂x_c∂x_d + ∂y_c∂y_d + i(∂x_c∂y_d − ∂y_c∂x_d)].
pub fn wirtinger_mixed<F>(
    f: &F,
    z0: &DMatrix<Complex64>,
    c: usize,
    d: usize,
    h: f64,
) -> DMatrix<Complex64>
where
    F: Fn(&DMatrix<Complex64>) -> DMatrix<Complex64>,
{
    let xc = RealDirection { coord: c, imaginary: false };
    let yc = RealDirection { coord: c, imaginary: true };
    let xd = RealDirection { coord: d, imaginary: false };
    let yd = RealDirection { coord: d, imaginary: true };
    let i = Complex64::i();
    let quarter = Complex64::new(0.25, 0.0);
    if c == d {
        let xx = second_same_direction(f, z0, xc, h);
        let yy = second_same_direction(f, z0, yc, h);
        return (xx + yy) * quarter;
    }
    let xx = second_mixed(f, z0, xc, xd, h);
    let yy = second_mixed(f, z0, yc, yd, h);
    let xy = second_mixed(f, z0, xc, yd, h);
    let yx = second_mixed(f, z0, yc, xd, h);
    (xx + yy + (xy - yx) * i) * quarter
}

/// Complex Hessian H_{cd} = ∂²K/∂z_c∂z̄_d of a real scalar potential on the
/// chart. The result is Hermitian up to finite-difference error.
pub fn complex_hessian<F>(f: &F, z0: &DMatrix<Complex64>, h: f64) -> DMatrix<Complex64>
where
    F: Fn(&DMatrix<Complex64>) -> f64,
{
    let wrapped = |z: &DMatrix<Complex64>| {
        DMatrix::from_element(1, 1, Complex64::new(f(z), 0.0))
    };
    let m = z0.len();
    let mut hess = DMatrix::zeros(m, m);
    for c in 0..m {
        for d in c..m {
            let v = wirtinger_mixed(&wrapped, z0, c, d, h)[(0, 0)];
            hess[(c, d)] = v;
            if d != c {
                hess[(d, c)] = v.conj();
            }
        }
    }
    // Symmetrize the diagonal (its imaginary part is pure FD noise).
    for c in 0..m {
        hess[(c, c)] = Complex64::new(hess[(c, c)].re, 0.0);
    }
    hess
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn wirtinger_first_of_polynomial() {
        // f(z) = z² + 3 z̄ on a 1-coordinate chart: ∂f = 2z, ∂̄f = 3.
        let f = |z: &DMatrix<Complex64>| {
            let w = z[(0, 0)];
            DMatrix::from_element(1, 1, w * w + Complex64::new(3.0, 0.0) * w.conj())
        };
        let z0 = DMatrix::from_element(1, 1, Complex64::new(0.7, -0.3));
        let (dz, dzb) = wirtinger_first(&f, &z0, 0, 1e-3);
        assert_relative_eq!(dz[(0, 0)].re, 1.4, epsilon = 1e-10);
        assert_relative_eq!(dz[(0, 0)].im, -0.6, epsilon = 1e-10);
        assert_relative_eq!(dzb[(0, 0)].re, 3.0, epsilon = 1e-10);
        assert_relative_eq!(dzb[(0, 0)].im, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn hessian_of_log_one_plus_norm() {
        // K = log(1 + |z|²) on one coordinate: ∂∂̄K = 1/(1+|z|²)².
        let f = |z: &DMatrix<Complex64>| (1.0 + z[(0, 0)].norm_sqr()).ln();
        let z0 = DMatrix::from_element(1, 1, Complex64::new(0.4, 0.9));
        let h = complex_hessian(&f, &z0, 1e-3);
        let expected = 1.0 / (1.0 + z0[(0, 0)].norm_sqr()).powi(2);
        assert_relative_eq!(h[(0, 0)].re, expected, epsilon = 1e-9);
    }

    #[test]
    fn hessian_off_diagonal() {
        // K = |z₀|²|z₁|² + Re(z₀ z̄₁): H_{01} = z̄₀ z₁ + 1/2.
        let f = |z: &DMatrix<Complex64>| {
            let a = z[(0, 0)];
            let b = z[(1, 0)];
            a.norm_sqr() * b.norm_sqr() + (a * b.conj()).re
        };
        let z0 = DMatrix::from_column_slice(2, 1, &[
            Complex64::new(0.3, 0.1),
            Complex64::new(-0.2, 0.5),
        ]);
        let h = complex_hessian(&f, &z0, 1e-3);
        let expected = z0[(0, 0)].conj() * z0[(1, 0)] + Complex64::new(0.5, 0.0);
        assert_relative_eq!(h[(0, 1)].re, expected.re, epsilon = 1e-9);
        assert_relative_eq!(h[(0, 1)].im, expected.im, epsilon = 1e-9);
        assert_relative_eq!((h[(1, 0)] - expected.conj()).norm(), 0.0, epsilon = 1e-9);
    }
}
