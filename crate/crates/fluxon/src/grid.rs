//! Uniform 1D grids with Neumann boundaries and central finite differences.

use crate::error::{Error, Result};
use crate::scalar::{Real, C};
use ndarray::Array1;

/// Central finite-difference stencil for the second derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stencil {
    /// Three-point stencil, second-order accurate.
    ThreePoint,
    /// Five-point stencil, fourth-order accurate.
    FivePoint,
}

impl Stencil {
    pub fn accuracy_order(self) -> usize {
        match self {
            Stencil::ThreePoint => 2,
            Stencil::FivePoint => 4,
        }
    }

    fn halfwidth(self) -> usize {
        match self {
            Stencil::ThreePoint => 1,
            Stencil::FivePoint => 2,
        }
    }
}

/// Uniform spatial grid on `[x_min, x_max]` with `n` points.
///
/// Neumann boundary conditions are realized by mirror ghost points
/// (`f[-i] = f[i]` and `f[n-1+i] = f[n-1-i]`), which preserves both the
/// stencil order and the symmetry of the discrete operators.
#[derive(Clone, Debug)]
pub struct Grid<T> {
    x_min: T,
    x_max: T,
    n: usize,
    dx: T,
    stencil: Stencil,
}

/// Coarsest spacing accepted by [`Grid::new`].
pub const MAX_DX: f64 = 0.2;

impl<T: Real> Grid<T> {
    pub fn new(x_min: T, x_max: T, n: usize, stencil: Stencil) -> Result<Self> {
        if !(x_max > x_min) {
            return Err(Error::InvalidParameter(format!(
                "grid endpoints must satisfy x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if n < 8 {
            return Err(Error::InvalidParameter(format!("grid needs n >= 8 points, got {n}")));
        }
        let dx = (x_max - x_min) / T::of((n - 1) as f64);
        if dx > T::of(MAX_DX) * (T::one() + T::of(1e-12)) {
            return Err(Error::InvalidParameter(format!(
                "grid spacing {dx} exceeds the supported maximum {MAX_DX}"
            )));
        }
        Ok(Grid { x_min, x_max, n, dx, stencil })
    }

    /// Grid with spacing at most `dx_target` (rounded to fit the interval exactly).
    pub fn from_spacing(x_min: T, x_max: T, dx_target: T, stencil: Stencil) -> Result<Self> {
        if !(dx_target > T::zero()) {
            return Err(Error::InvalidParameter(format!("dx must be positive, got {dx_target}")));
        }
        let span = x_max - x_min;
        let n = (span / dx_target).ceil().to_usize().ok_or_else(|| {
            Error::InvalidParameter("grid size overflow".into())
        })? + 1;
        Self::new(x_min, x_max, n.max(8), stencil)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dx(&self) -> T {
        self.dx
    }

    pub fn x_min(&self) -> T {
        self.x_min
    }

    pub fn x_max(&self) -> T {
        self.x_max
    }

    pub fn stencil(&self) -> Stencil {
        self.stencil
    }

    pub fn x(&self, i: usize) -> T {
        self.x_min + self.dx * T::of(i as f64)
    }

    pub fn xs(&self) -> Array1<T> {
        Array1::from_iter((0..self.n).map(|i| self.x(i)))
    }

    /// Index of the grid point closest to `x`.
    pub fn index_of(&self, x: T) -> usize {
        let i = ((x - self.x_min) / self.dx).round().to_isize().unwrap_or(0);
        i.clamp(0, self.n as isize - 1) as usize
    }

    fn mirror(&self, i: isize) -> usize {
        let last = (self.n - 1) as isize;
        let m = if i < 0 { -i } else if i > last { 2 * last - i } else { i };
        m as usize
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::ShapeMismatch(format!(
                "field has {len} entries, grid has {} points",
                self.n
            )));
        }
        Ok(())
    }

    /// Second derivative with the grid's stencil and Neumann mirror ghosts.
    pub fn laplacian_into(&self, f: &[C<T>], out: &mut [C<T>]) -> Result<()> {
        self.check_len(f.len())?;
        self.check_len(out.len())?;
        let n = self.n;
        let inv = T::one() / (self.dx * self.dx);
        match self.stencil {
            Stencil::ThreePoint => {
                let two = T::of(2.0);
                // boundary rows via mirror
                out[0] = (f[1] * two - f[0] * two) * inv;
                out[n - 1] = (f[n - 2] * two - f[n - 1] * two) * inv;
                for i in 1..n - 1 {
                    out[i] = (f[i - 1] - f[i] * two + f[i + 1]) * inv;
                }
            }
            Stencil::FivePoint => {
                let c = inv / T::of(12.0);
                let (w1, w0) = (T::of(16.0), T::of(30.0));
                for i in 0..2.min(n) {
                    let im2 = self.mirror(i as isize - 2);
                    let im1 = self.mirror(i as isize - 1);
                    out[i] = (-f[im2] + f[im1] * w1 - f[i] * w0 + f[i + 1] * w1 - f[i + 2]) * c;
                }
                for i in 2..n - 2 {
                    out[i] = (-f[i - 2] + f[i - 1] * w1 - f[i] * w0 + f[i + 1] * w1 - f[i + 2]) * c;
                }
                for i in (n - 2).max(2)..n {
                    let ip1 = self.mirror(i as isize + 1);
                    let ip2 = self.mirror(i as isize + 2);
                    out[i] = (-f[i - 2] + f[i - 1] * w1 - f[i] * w0 + f[ip1] * w1 - f[ip2]) * c;
                }
            }
        }
        Ok(())
    }

    pub fn laplacian(&self, f: &Array1<C<T>>) -> Result<Array1<C<T>>> {
        let mut out = Array1::from_elem(self.n, C::new(T::zero(), T::zero()));
        self.laplacian_into(f.as_slice().unwrap(), out.as_slice_mut().unwrap())?;
        Ok(out)
    }

    /// First derivative, central differences matching the stencil order.
    pub fn derivative_into(&self, f: &[C<T>], out: &mut [C<T>]) -> Result<()> {
        self.check_len(f.len())?;
        self.check_len(out.len())?;
        let n = self.n;
        match self.stencil {
            Stencil::ThreePoint => {
                let c = T::one() / (T::of(2.0) * self.dx);
                for i in 0..n {
                    let im1 = self.mirror(i as isize - 1);
                    let ip1 = self.mirror(i as isize + 1);
                    out[i] = (f[ip1] - f[im1]) * c;
                }
            }
            Stencil::FivePoint => {
                let c = T::one() / (T::of(12.0) * self.dx);
                let w = T::of(8.0);
                for i in 0..n {
                    let im2 = self.mirror(i as isize - 2);
                    let im1 = self.mirror(i as isize - 1);
                    let ip1 = self.mirror(i as isize + 1);
                    let ip2 = self.mirror(i as isize + 2);
                    out[i] = (f[im2] - f[im1] * w + f[ip1] * w - f[ip2]) * c;
                }
            }
        }
        Ok(())
    }

    /// Stencil coefficients of the second derivative (offset, weight/dx^2),
    /// used by the Newton and BdG matrix assemblies. Offsets outside the grid
    /// must be folded with [`Grid::fold`].
    pub(crate) fn laplacian_weights(&self) -> Vec<(isize, T)> {
        let inv = T::one() / (self.dx * self.dx);
        match self.stencil {
            Stencil::ThreePoint => vec![
                (-1, inv),
                (0, -T::of(2.0) * inv),
                (1, inv),
            ],
            Stencil::FivePoint => {
                let c = inv / T::of(12.0);
                vec![
                    (-2, -c),
                    (-1, T::of(16.0) * c),
                    (0, -T::of(30.0) * c),
                    (1, T::of(16.0) * c),
                    (2, -c),
                ]
            }
        }
    }

    /// First-derivative stencil coefficients (offset, weight/dx).
    pub(crate) fn derivative_weights(&self) -> Vec<(isize, T)> {
        match self.stencil {
            Stencil::ThreePoint => {
                let c = T::one() / (T::of(2.0) * self.dx);
                vec![(-1, -c), (1, c)]
            }
            Stencil::FivePoint => {
                let c = T::one() / (T::of(12.0) * self.dx);
                vec![(-2, c), (-1, -T::of(8.0) * c), (1, T::of(8.0) * c), (2, -c)]
            }
        }
    }

    /// Fold an out-of-range neighbor index back into the grid (mirror ghost).
    pub(crate) fn fold(&self, i: isize) -> usize {
        self.mirror(i)
    }

    /// Trapezoid quadrature weight of point `i` (includes `dx`).
    pub fn weight(&self, i: usize) -> T {
        if i == 0 || i == self.n - 1 {
            self.dx * T::of(0.5)
        } else {
            self.dx
        }
    }

    pub(crate) fn stencil_halfwidth(&self) -> usize {
        self.stencil.halfwidth()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn cgrid(n: usize, stencil: Stencil) -> Grid<f64> {
        Grid::new(-10.0, 10.0, n, stencil).unwrap()
    }

    fn complexify(v: impl Iterator<Item = f64>) -> Vec<Complex64> {
        v.map(|x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(Grid::<f64>::new(1.0, -1.0, 100, Stencil::ThreePoint).is_err());
        assert!(Grid::<f64>::new(-1.0, 1.0, 4, Stencil::ThreePoint).is_err());
        // dx = 0.5 > 0.2
        assert!(Grid::<f64>::new(-10.0, 10.0, 41, Stencil::ThreePoint).is_err());
    }

    #[test]
    fn spacing_is_uniform() {
        let g = cgrid(201, Stencil::ThreePoint);
        assert_eq!(g.n(), 201);
        for i in 1..g.n() {
            let d = g.x(i) - g.x(i - 1);
            assert!((d - g.dx()).abs() < 1e-13);
        }
        assert_eq!(g.x(0), -10.0);
        assert_eq!(g.x(200), 10.0);
    }

    #[test]
    fn laplacian_of_constant_vanishes() {
        for stencil in [Stencil::ThreePoint, Stencil::FivePoint] {
            let g = cgrid(257, stencil);
            let f = complexify((0..g.n()).map(|_| 3.25));
            let mut out = vec![Complex64::default(); g.n()];
            g.laplacian_into(&f, &mut out).unwrap();
            for v in &out {
                assert!(v.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn laplacian_of_parabola_is_two_in_the_interior() {
        for stencil in [Stencil::ThreePoint, Stencil::FivePoint] {
            let g = cgrid(257, stencil);
            let f = complexify((0..g.n()).map(|i| g.x(i) * g.x(i)));
            let mut out = vec![Complex64::default(); g.n()];
            g.laplacian_into(&f, &mut out).unwrap();
            for i in 4..g.n() - 4 {
                assert!(
                    (out[i].re - 2.0).abs() < 1e-9,
                    "stencil {stencil:?} i={i} got {}",
                    out[i].re
                );
            }
        }
    }

    /// cos(pi x / L) is Neumann-compatible on [-L, L]; the discrete Laplacian
    /// must converge to -(pi/L)^2 cos at the stencil's order, boundaries included.
    #[test]
    fn laplacian_cosine_converges_at_stencil_order() {
        let l = 10.0;
        let kappa = std::f64::consts::PI / l;
        for (stencil, order) in [(Stencil::ThreePoint, 2.0), (Stencil::FivePoint, 4.0)] {
            let mut errs = Vec::new();
            for n in [129usize, 257] {
                let g = Grid::new(-l, l, n, stencil).unwrap();
                let f = complexify((0..n).map(|i| (kappa * g.x(i)).cos()));
                let mut out = vec![Complex64::default(); n];
                g.laplacian_into(&f, &mut out).unwrap();
                let err = (0..n)
                    .map(|i| (out[i].re + kappa * kappa * (kappa * g.x(i)).cos()).abs())
                    .fold(0.0f64, f64::max);
                errs.push(err);
            }
            let rate = (errs[0] / errs[1]).log2();
            assert!(
                (rate - order).abs() < 0.4,
                "stencil {stencil:?}: rate {rate}, errs {errs:?}"
            );
        }
    }

    #[test]
    fn derivative_of_cosine_matches_analytic() {
        let l = 10.0;
        let kappa = std::f64::consts::PI / l;
        for stencil in [Stencil::ThreePoint, Stencil::FivePoint] {
            let g = Grid::new(-l, l, 257, stencil).unwrap();
            let f = complexify((0..g.n()).map(|i| (kappa * g.x(i)).cos()));
            let mut out = vec![Complex64::default(); g.n()];
            g.derivative_into(&f, &mut out).unwrap();
            let tol = match stencil {
                Stencil::ThreePoint => 2e-3,
                Stencil::FivePoint => 2e-6,
            };
            for i in 0..g.n() {
                let exact = -kappa * (kappa * g.x(i)).sin();
                assert!((out[i].re - exact).abs() < tol);
            }
        }
    }

    /// Mirror consistency: the Laplacian of an even-symmetric field is even.
    #[test]
    fn laplacian_preserves_symmetry() {
        for stencil in [Stencil::ThreePoint, Stencil::FivePoint] {
            let g = cgrid(257, stencil);
            let f = complexify((0..g.n()).map(|i| (0.3 * g.x(i)).cosh().recip()));
            let mut out = vec![Complex64::default(); g.n()];
            g.laplacian_into(&f, &mut out).unwrap();
            let n = g.n();
            for i in 0..n {
                assert!((out[i].re - out[n - 1 - i].re).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn works_in_single_precision() {
        let g = Grid::<f32>::new(-10.0, 10.0, 129, Stencil::ThreePoint).unwrap();
        let f: Vec<num_complex::Complex32> =
            (0..g.n()).map(|i| num_complex::Complex32::new(g.x(i) * g.x(i), 0.0)).collect();
        let mut out = vec![num_complex::Complex32::default(); g.n()];
        g.laplacian_into(&f, &mut out).unwrap();
        assert!((out[64].re - 2.0).abs() < 1e-3);
    }
}
