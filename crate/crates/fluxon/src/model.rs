//! Model parameters, pair fields, the discretized equation of motion and
//! scalar observables.
//!
//! The governing equations are two linearly coupled Gross-Pitaevskii
//! equations for `psi_1`, `psi_2` on a line,
//!
//! ```text
//! i d/dt psi_j = -1/2 psi_j'' + |psi_j|^2 psi_j - rho0 psi_j - k psi_{3-j} + V psi_j
//! ```
//!
//! with harmonic trap `V(x) = 1/2 omega^2 x^2`.

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::scalar::{Real, C};
use ndarray::Array1;

/// Physical parameters: chemical potential `rho0`, linear coupling `k`,
/// trap strength `omega`.
#[derive(Clone, Copy, Debug)]
pub struct ModelParams<T> {
    pub rho0: T,
    pub k: T,
    pub omega: T,
}

impl<T: Real> ModelParams<T> {
    pub fn new(rho0: T, k: T, omega: T) -> Result<Self> {
        if !(rho0 > T::zero()) {
            return Err(Error::InvalidParameter(format!("rho0 must be positive, got {rho0}")));
        }
        if omega < T::zero() {
            return Err(Error::InvalidParameter(format!("omega must be >= 0, got {omega}")));
        }
        Ok(ModelParams { rho0, k, omega })
    }

    pub fn untrapped(rho0: T, k: T) -> Result<Self> {
        Self::new(rho0, k, T::zero())
    }

    /// Asymptotic density `rho0 + k` of the symmetric dark-soliton background.
    pub fn background_density(&self) -> T {
        self.rho0 + self.k
    }

    /// Ensure a dark-soliton background exists (`k > -rho0`).
    pub fn require_dark_background(&self) -> Result<T> {
        let bg = self.background_density();
        if !(bg > T::zero()) {
            return Err(Error::ExistenceDomain(format!(
                "dark-soliton background needs k > -rho0, got k = {}, rho0 = {}",
                self.k, self.rho0
            )));
        }
        Ok(bg)
    }

    /// Core width scale `1/sqrt(rho0 + k)`.
    pub fn healing_length(&self) -> T {
        self.background_density().sqrt().recip()
    }

    pub fn with_k(&self, k: T) -> Self {
        ModelParams { k, ..*self }
    }
}

/// The two complex fields sampled on a grid.
#[derive(Clone, Debug)]
pub struct PairField<T> {
    pub psi1: Array1<C<T>>,
    pub psi2: Array1<C<T>>,
}

impl<T: Real> PairField<T> {
    pub fn new(psi1: Array1<C<T>>, psi2: Array1<C<T>>) -> Result<Self> {
        if psi1.len() != psi2.len() {
            return Err(Error::ShapeMismatch(format!(
                "components have {} and {} entries",
                psi1.len(),
                psi2.len()
            )));
        }
        let field = PairField { psi1, psi2 };
        field.check_finite()?;
        Ok(field)
    }

    /// Both components set to the uniform background `sqrt(rho0 + k)`.
    pub fn uniform_background(grid: &Grid<T>, params: &ModelParams<T>) -> Result<Self> {
        let a = params.require_dark_background()?.sqrt();
        let v = Array1::from_elem(grid.n(), C::new(a, T::zero()));
        Ok(PairField { psi1: v.clone(), psi2: v })
    }

    /// Single-component embedding: `psi2 = psi1` (uncoupled or symmetric manifold).
    pub fn from_single(psi: Array1<C<T>>) -> Self {
        PairField { psi2: psi.clone(), psi1: psi }
    }

    pub fn len(&self) -> usize {
        self.psi1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi1.is_empty()
    }

    pub fn check_finite(&self) -> Result<()> {
        for z in self.psi1.iter().chain(self.psi2.iter()) {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::InvalidParameter("field contains non-finite values".into()));
            }
        }
        Ok(())
    }

    pub fn density1(&self) -> Array1<T> {
        self.psi1.mapv(|z| z.norm_sqr())
    }

    pub fn density2(&self) -> Array1<T> {
        self.psi2.mapv(|z| z.norm_sqr())
    }

    /// Largest `|Im psi1|`, the order parameter distinguishing fluxon-analogue
    /// branches from coupled dark solitons.
    pub fn imag_amplitude(&self) -> T {
        self.psi1.iter().map(|z| z.im.abs()).fold(T::zero(), T::max)
    }

    /// Largest pointwise `|psi1 - psi2|`.
    pub fn component_asymmetry(&self) -> T {
        self.psi1
            .iter()
            .zip(self.psi2.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Largest deviation from the conjugate symmetry `psi2 = conj(psi1)`.
    pub fn conjugate_defect(&self) -> T {
        self.psi1
            .iter()
            .zip(self.psi2.iter())
            .map(|(a, b)| (a.conj() - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Enforce `psi2 = conj(psi1)`.
    pub fn symmetrize_conjugate(&mut self) {
        self.psi2 = self.psi1.mapv(|z| z.conj());
    }

    pub fn max_norm(&self) -> T {
        self.psi1
            .iter()
            .chain(self.psi2.iter())
            .map(|z| z.norm())
            .fold(T::zero(), T::max)
    }
}

/// Trap potential `V(x) = 1/2 omega^2 x^2` on the grid points.
pub fn trap_potential<T: Real>(grid: &Grid<T>, params: &ModelParams<T>) -> Array1<T> {
    let half = T::of(0.5);
    let w2 = params.omega * params.omega;
    Array1::from_iter((0..grid.n()).map(|i| {
        let x = grid.x(i);
        half * w2 * x * x
    }))
}

/// Right-hand side of the coupled equations, `d psi_j / dt`.
pub fn gpe_rhs<T: Real>(
    state: &PairField<T>,
    params: &ModelParams<T>,
    grid: &Grid<T>,
) -> Result<PairField<T>> {
    grid.check_len(state.len())?;
    let potential = trap_potential(grid, params);
    let mut out = PairField {
        psi1: Array1::from_elem(grid.n(), C::new(T::zero(), T::zero())),
        psi2: out_like(grid),
    };
    let mut lap = out_like(grid);
    gpe_rhs_into(state, params, grid, &potential, &mut out, &mut lap)?;
    Ok(out)
}

fn out_like<T: Real>(grid: &Grid<T>) -> Array1<C<T>> {
    Array1::from_elem(grid.n(), C::new(T::zero(), T::zero()))
}

/// Allocation-free right-hand side used in the time-evolution inner loop.
/// `lap` is scratch storage of grid length.
pub(crate) fn gpe_rhs_into<T: Real>(
    state: &PairField<T>,
    params: &ModelParams<T>,
    grid: &Grid<T>,
    potential: &Array1<T>,
    out: &mut PairField<T>,
    lap: &mut Array1<C<T>>,
) -> Result<()> {
    let half = T::of(0.5);
    let minus_i = C::new(T::zero(), -T::one());
    for comp in 0..2 {
        let (psi, other, dst) = match comp {
            0 => (&state.psi1, &state.psi2, &mut out.psi1),
            _ => (&state.psi2, &state.psi1, &mut out.psi2),
        };
        grid.laplacian_into(psi.as_slice().unwrap(), lap.as_slice_mut().unwrap())?;
        for i in 0..grid.n() {
            let z = psi[i];
            let bracket = lap[i] * (-half)
                + z * (z.norm_sqr() - params.rho0 + potential[i])
                - other[i] * params.k;
            dst[i] = minus_i * bracket;
        }
    }
    Ok(())
}

/// Max-norm of the stationary residual `|d psi / dt|`.
pub fn stationary_residual<T: Real>(
    state: &PairField<T>,
    params: &ModelParams<T>,
    grid: &Grid<T>,
) -> Result<T> {
    let rhs = gpe_rhs(state, params, grid)?;
    Ok(rhs.max_norm())
}

/// Scalar observables of a pair field.
#[derive(Clone, Copy, Debug)]
pub struct Observables<T> {
    /// Trapezoid-rule `int (|psi1|^2 + |psi2|^2) dx`.
    pub norm: T,
    /// Discretized Hamiltonian (conserved by the semi-discrete flow).
    pub energy: T,
    /// Total phase change of `psi1` across the domain.
    pub winding1: T,
    /// Total phase change of `psi2`.
    pub winding2: T,
    /// Total change of the relative phase `phi = arg(psi2) - arg(psi1)`.
    pub relative_winding: T,
    /// Number of phase increments skipped because an endpoint amplitude was
    /// below the zero-amplitude cutoff.
    pub skipped_points: usize,
}

/// Amplitudes below this are treated as phase-undefined when accumulating windings.
pub const WINDING_AMPLITUDE_CUTOFF: f64 = 1e-12;

/// Norm, energy and phase windings of a state.
///
/// Windings are sums of principal-branch phase increments between adjacent
/// grid points; increments with an endpoint of negligible amplitude are
/// skipped and counted in `skipped_points`.
pub fn observables<T: Real>(
    state: &PairField<T>,
    params: &ModelParams<T>,
    grid: &Grid<T>,
) -> Result<Observables<T>> {
    grid.check_len(state.len())?;
    let n = grid.n();
    let potential = trap_potential(grid, params);
    let half = T::of(0.5);

    let mut norm = T::zero();
    let mut energy = T::zero();
    let mut lap1 = out_like(grid);
    let mut lap2 = out_like(grid);
    grid.laplacian_into(state.psi1.as_slice().unwrap(), lap1.as_slice_mut().unwrap())?;
    grid.laplacian_into(state.psi2.as_slice().unwrap(), lap2.as_slice_mut().unwrap())?;
    for i in 0..n {
        let w = grid.weight(i);
        let (z1, z2) = (state.psi1[i], state.psi2[i]);
        let (d1, d2) = (z1.norm_sqr(), z2.norm_sqr());
        norm += w * (d1 + d2);
        // kinetic part as -1/2 Re(psi* lap psi): equivalent to the gradient
        // form under the mirror Neumann closure with trapezoid weights
        let kinetic = -half * ((z1.conj() * lap1[i]).re + (z2.conj() * lap2[i]).re);
        let interaction = half * (d1 * d1 + d2 * d2);
        let onsite = (potential[i] - params.rho0) * (d1 + d2);
        let coupling = -T::of(2.0) * params.k * (z1.conj() * z2).re;
        energy += w * (kinetic + interaction + onsite + coupling);
    }

    let cutoff = T::of(WINDING_AMPLITUDE_CUTOFF);
    let mut skipped = 0usize;
    let mut winding = |psi: &Array1<C<T>>| -> T {
        let mut total = T::zero();
        for i in 0..n - 1 {
            if psi[i].norm() < cutoff || psi[i + 1].norm() < cutoff {
                skipped += 1;
                continue;
            }
            total += (psi[i + 1] * psi[i].conj()).arg();
        }
        total
    };
    let winding1 = winding(&state.psi1);
    let winding2 = winding(&state.psi2);

    // relative phase accumulated from the ratio psi2/psi1 so each increment
    // stays on the principal branch
    let mut relative = T::zero();
    for i in 0..n - 1 {
        let r0 = state.psi2[i] * state.psi1[i].conj();
        let r1 = state.psi2[i + 1] * state.psi1[i + 1].conj();
        if r0.norm() < cutoff * cutoff || r1.norm() < cutoff * cutoff {
            skipped += 1;
            continue;
        }
        relative += (r1 * r0.conj()).arg();
    }

    Ok(Observables {
        norm,
        energy,
        winding1,
        winding2,
        relative_winding: relative,
        skipped_points: skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Stencil;
    use approx::assert_relative_eq;

    fn grid(dx: f64, half: f64, stencil: Stencil) -> Grid<f64> {
        Grid::from_spacing(-half, half, dx, stencil).unwrap()
    }

    #[test]
    fn trap_potential_values() {
        let g = grid(0.1, 20.0, Stencil::ThreePoint);
        let free = ModelParams::new(1.0, 0.1, 0.0).unwrap();
        assert!(trap_potential(&g, &free).iter().all(|&v| v == 0.0));

        let trapped = ModelParams::new(1.0, 0.1, 0.1).unwrap();
        let v = trap_potential(&g, &trapped);
        assert_relative_eq!(v[g.index_of(0.0)], 0.0, epsilon = 1e-14);
        assert_relative_eq!(v[g.index_of(10.0)], 0.5, epsilon = 1e-12);
    }

    #[test]
    fn uniform_background_is_stationary() {
        let g = grid(0.1, 20.0, Stencil::FivePoint);
        let p = ModelParams::untrapped(1.0, 0.3).unwrap();
        let state = PairField::uniform_background(&g, &p).unwrap();
        let r = stationary_residual(&state, &p, &g).unwrap();
        assert!(r < 1e-13, "residual {r}");
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(ModelParams::new(-1.0, 0.0, 0.0).is_err());
        assert!(ModelParams::new(1.0, 0.0, -0.1).is_err());
        assert!(ModelParams::untrapped(1.0, -1.5).unwrap().require_dark_background().is_err());
    }

    #[test]
    fn norm_of_uniform_background() {
        // int (|psi1|^2 + |psi2|^2) = (rho0 + k) * 2 * length, exact for the
        // trapezoid rule on a constant
        let g = grid(0.1, 20.0, Stencil::ThreePoint);
        let p = ModelParams::untrapped(1.0, 0.5).unwrap();
        let state = PairField::uniform_background(&g, &p).unwrap();
        let obs = observables(&state, &p, &g).unwrap();
        assert_relative_eq!(obs.norm, 1.5 * 2.0 * 40.0, max_relative = 1e-12);
    }

    #[test]
    fn norm_invariant_under_global_phase() {
        let g = grid(0.1, 10.0, Stencil::FivePoint);
        let p = ModelParams::untrapped(1.0, 0.2).unwrap();
        let mut state = PairField::uniform_background(&g, &p).unwrap();
        for i in 0..g.n() {
            let x = g.x(i);
            state.psi1[i] = C::new(x.tanh(), 0.3 * (0.5 * x).cos());
            state.psi2[i] = state.psi1[i].conj();
        }
        let obs0 = observables(&state, &p, &g).unwrap();
        let phase = C::from_polar(1.0, 1.234);
        state.psi1.mapv_inplace(|z| z * phase);
        state.psi2.mapv_inplace(|z| z * phase);
        let obs1 = observables(&state, &p, &g).unwrap();
        assert_relative_eq!(obs0.norm, obs1.norm, max_relative = 1e-12);
        assert_relative_eq!(obs0.energy, obs1.energy, max_relative = 1e-10);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let g = grid(0.1, 10.0, Stencil::ThreePoint);
        let p = ModelParams::untrapped(1.0, 0.0).unwrap();
        let state = PairField::from_single(Array1::from_elem(7, C::new(1.0, 0.0)));
        assert!(gpe_rhs(&state, &p, &g).is_err());
    }
}
