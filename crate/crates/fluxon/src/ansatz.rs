//! Closed-form solutions and initial-condition constructors.
//!
//! Profiles provided here:
//!
//! * the fluxon analogue (FA), a coupled grey-soliton pair whose relative
//!   phase winds by `2 pi`,
//! * the coupled dark soliton (both components equal to a real kink),
//! * the single-component travelling (grey) dark soliton,
//! * the exact symmetric two-soliton solution of the single NLS,
//! * multi-soliton splices built as normalized products, with an optional
//!   Thomas-Fermi envelope for trapped initial guesses.

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::model::{ModelParams, PairField};
use crate::scalar::{Real, C};
use ndarray::Array1;

/// Sign choice of a profile term.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn value<T: Real>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Soliton species used in initial-condition construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolitonKind {
    /// Fluxon analogue (`psi2 = conj(psi1)` locally).
    Fluxon,
    /// Static coupled dark soliton (`psi2 = psi1`, real kink).
    Dark,
    /// Travelling (grey) dark soliton in the symmetric manifold.
    TravellingDark,
}

/// One soliton constituent for splicing.
///
/// `v` is the grey-soliton velocity parameter relative to the constituent's
/// background (`A^2 + v^2 = 1`); the core itself moves with
/// `sign_re * sqrt(background) * v`. `sign_re = Minus` mirrors the kink,
/// which is the natural choice for the right member of a soliton pair.
#[derive(Clone, Copy, Debug)]
pub struct SolitonSpec<T> {
    pub kind: SolitonKind,
    pub x0: T,
    pub v: T,
    pub sign_re: Sign,
    pub sign_im: Sign,
}

impl<T: Real> SolitonSpec<T> {
    pub fn fluxon(x0: T) -> Self {
        SolitonSpec {
            kind: SolitonKind::Fluxon,
            x0,
            v: T::zero(),
            sign_re: Sign::Plus,
            sign_im: Sign::Plus,
        }
    }

    pub fn dark(x0: T) -> Self {
        SolitonSpec {
            kind: SolitonKind::Dark,
            x0,
            v: T::zero(),
            sign_re: Sign::Plus,
            sign_im: Sign::Plus,
        }
    }

    pub fn travelling(x0: T, v: T) -> Self {
        SolitonSpec {
            kind: SolitonKind::TravellingDark,
            x0,
            v,
            sign_re: Sign::Plus,
            sign_im: Sign::Plus,
        }
    }

    pub fn with_sign_re(mut self, s: Sign) -> Self {
        self.sign_re = s;
        self
    }

    pub fn with_sign_im(mut self, s: Sign) -> Self {
        self.sign_im = s;
        self
    }

    /// Moving variant of the same soliton.
    pub fn with_velocity(mut self, v: T) -> Self {
        self.v = v;
        self
    }

    pub fn validate(&self, params: &ModelParams<T>) -> Result<()> {
        match self.kind {
            SolitonKind::Fluxon => {
                check_fa_coupling(params)?;
                if self.v.abs() >= T::one() {
                    return Err(Error::ExistenceDomain(format!(
                        "fluxon-analogue velocity must satisfy |v| < 1, got {}",
                        self.v
                    )));
                }
            }
            SolitonKind::Dark => {
                params.require_dark_background()?;
                if self.v != T::zero() {
                    return Err(Error::InvalidParameter(
                        "static dark soliton cannot carry a velocity; use TravellingDark".into(),
                    ));
                }
            }
            SolitonKind::TravellingDark => {
                params.require_dark_background()?;
                if self.v.abs() > T::one() {
                    return Err(Error::ExistenceDomain(format!(
                        "grey-soliton depth undefined for |v| > 1, got {}",
                        self.v
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Relative symmetry of the imaginary parts in a multi-FA configuration.
///
/// `Odd` is the (+-) configuration: the imaginary part of `psi1` is an
/// odd-symmetric function of `x` (bumps of alternating sign), and the
/// per-core relative-phase windings add up (two FAs carry a total of
/// `+-4 pi`). `Even` is the (++) configuration: even-symmetric imaginary
/// part, windings cancel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairParity {
    Odd,
    Even,
}

fn check_fa_coupling<T: Real>(params: &ModelParams<T>) -> Result<()> {
    // existence window 0 < k <= rho0/3; at the upper endpoint the profile
    // degenerates to the dark kink
    let third = params.rho0 / T::of(3.0);
    if !(params.k > T::zero()) || params.k > third * (T::one() + T::of(1e-14)) {
        return Err(Error::ExistenceDomain(format!(
            "fluxon analogue exists only for 0 < k < rho0/3, got k = {}, rho0 = {}",
            params.k, params.rho0
        )));
    }
    Ok(())
}

fn sech<T: Real>(y: T) -> T {
    y.cosh().recip()
}

/// Fluxon-analogue profile with core at `x0`:
/// `psi1 = s_re sqrt(rho0+k) tanh(2 sqrt(k) (x-x0)) + i s_im sqrt(rho0-3k) sech(2 sqrt(k) (x-x0))`,
/// `psi2 = conj(psi1)`. Valid without a trap; `params.omega` is ignored.
pub fn fa_profile<T: Real>(
    grid: &Grid<T>,
    params: &ModelParams<T>,
    sign_re: Sign,
    sign_im: Sign,
    x0: T,
) -> Result<PairField<T>> {
    check_fa_coupling(params)?;
    let amp_re = sign_re.value::<T>() * params.background_density().sqrt();
    let amp_im = sign_im.value::<T>() * (params.rho0 - T::of(3.0) * params.k).max(T::zero()).sqrt();
    let width = T::of(2.0) * params.k.sqrt();
    let psi1 = Array1::from_iter((0..grid.n()).map(|i| {
        let y = width * (grid.x(i) - x0);
        C::new(amp_re * y.tanh(), amp_im * sech(y))
    }));
    let psi2 = psi1.mapv(|z| z.conj());
    PairField::new(psi1, psi2)
}

/// Coupled dark soliton `psi1 = psi2 = sqrt(rho0+k) tanh(sqrt(rho0+k) (x-x0))`.
pub fn dark_profile<T: Real>(
    grid: &Grid<T>,
    params: &ModelParams<T>,
    x0: T,
) -> Result<PairField<T>> {
    let bg = params.require_dark_background()?;
    let kappa = bg.sqrt();
    let psi = Array1::from_iter(
        (0..grid.n()).map(|i| C::new(kappa * (kappa * (grid.x(i) - x0)).tanh(), T::zero())),
    );
    Ok(PairField::from_single(psi))
}

/// Travelling (grey) dark soliton of the single NLS with background `rho0`:
/// `psi = sqrt(rho0) [A tanh(sqrt(rho0) A (x-x0)) + i v]`, `A = sqrt(1-v^2)`.
/// The dip sits at `x0` and moves with `sqrt(rho0) v`.
pub fn travelling_dark<T: Real>(grid: &Grid<T>, rho0: T, v: T, x0: T) -> Result<Array1<C<T>>> {
    if !(rho0 > T::zero()) {
        return Err(Error::InvalidParameter(format!("rho0 must be positive, got {rho0}")));
    }
    if v.abs() > T::one() {
        return Err(Error::ExistenceDomain(format!(
            "grey-soliton depth undefined for |v| > 1, got {v}"
        )));
    }
    let root = rho0.sqrt();
    let depth = (T::one() - v * v).sqrt();
    Ok(Array1::from_iter((0..grid.n()).map(|i| {
        let y = root * depth * (grid.x(i) - x0);
        C::new(root * depth * y.tanh(), root * v)
    })))
}

/// Exact symmetric two-soliton solution of the single NLS at time `t`,
/// with asymptotic minimum density `rho_min` (`v = sqrt(rho_min/rho0)`):
///
/// ```text
/// psi = [(2 rho0 - 4 rho_min) cosh(qt) - 2 sqrt(rho0 rho_min) cosh(px) - 2 i q sinh(qt)]
///       / [2 sqrt(rho0) cosh(qt) + 2 sqrt(rho_min) cosh(px)]
/// ```
///
/// with `q = 2 sqrt(rho_min (rho0 - rho_min))` and `p = 2 sqrt(rho0 - rho_min)`.
pub fn two_soliton_exact<T: Real>(
    grid: &Grid<T>,
    t: T,
    rho0: T,
    rho_min: T,
) -> Result<Array1<C<T>>> {
    if !(rho_min > T::zero()) || !(rho_min < rho0) {
        return Err(Error::ExistenceDomain(format!(
            "two-soliton solution needs 0 < rho_min < rho0, got rho_min = {rho_min}, rho0 = {rho0}"
        )));
    }
    let q = T::of(2.0) * (rho_min * (rho0 - rho_min)).sqrt();
    let p = T::of(2.0) * (rho0 - rho_min).sqrt();
    let (cq, sq) = ((q * t).cosh(), (q * t).sinh());
    let two = T::of(2.0);
    Ok(Array1::from_iter((0..grid.n()).map(|i| {
        let cp = (p * grid.x(i)).cosh();
        let num = C::new(
            (two * rho0 - T::of(4.0) * rho_min) * cq - two * (rho0 * rho_min).sqrt() * cp,
            -two * q * sq,
        );
        let den = two * rho0.sqrt() * cq + two * rho_min.sqrt() * cp;
        num / den
    })))
}

/// Result of a splice, with a flag raised when constituent cores are closer
/// than five healing lengths (product seeding degrades there).
#[derive(Clone, Debug)]
pub struct Spliced<T> {
    pub field: PairField<T>,
    pub core_overlap: bool,
}

/// Multi-soliton initial data as a normalized product:
/// `psi_j(x) = bg * prod_i [psi_j^(i)(x - x_i) / bg]`, `bg = sqrt(rho0 + k)`.
///
/// For fluxon-analogue constituents, `parity` fixes the relative sign of the
/// imaginary parts (the first FA's `sign_im` sets the orientation): `Odd`
/// keeps all FA `sign_im` equal, which yields alternating imaginary bumps in
/// the assembled field; `Even` alternates them, yielding equal bumps.
pub fn splice<T: Real>(
    specs: &[SolitonSpec<T>],
    params: &ModelParams<T>,
    grid: &Grid<T>,
    parity: PairParity,
) -> Result<Spliced<T>> {
    if specs.is_empty() {
        return Err(Error::InvalidParameter("splice needs at least one soliton".into()));
    }
    let bg = params.require_dark_background()?;
    for s in specs {
        s.validate(params)?;
    }

    // effective imaginary signs of the FA constituents under the parity rule
    let fa_indices: Vec<usize> = specs
        .iter()
        .enumerate()
        .filter(|(_, s)| s.kind == SolitonKind::Fluxon)
        .map(|(i, _)| i)
        .collect();
    let mut eff_sign_im: Vec<Sign> = specs.iter().map(|s| s.sign_im).collect();
    if let Some(&first) = fa_indices.first() {
        let lead = specs[first].sign_im;
        for (m, &idx) in fa_indices.iter().enumerate() {
            eff_sign_im[idx] = match parity {
                PairParity::Odd => lead,
                PairParity::Even => {
                    if m % 2 == 0 {
                        lead
                    } else {
                        lead.flipped()
                    }
                }
            };
        }
    }

    let mut core_overlap = false;
    let threshold = T::of(5.0) * params.healing_length();
    for i in 0..specs.len() {
        for j in i + 1..specs.len() {
            if (specs[i].x0 - specs[j].x0).abs() < threshold {
                core_overlap = true;
            }
        }
    }

    let root_bg = bg.sqrt();
    let one = C::new(T::one(), T::zero());
    let mut psi1 = Array1::from_elem(grid.n(), one * root_bg);
    let mut psi2 = psi1.clone();
    for (idx, spec) in specs.iter().enumerate() {
        let s_re = spec.sign_re.value::<T>();
        let s_im = eff_sign_im[idx].value::<T>();
        match spec.kind {
            SolitonKind::Fluxon => {
                let a = ((params.rho0 - T::of(3.0) * params.k) / bg).max(T::zero()).sqrt();
                let width = T::of(2.0) * params.k.sqrt();
                for i in 0..grid.n() {
                    let y = width * (grid.x(i) - spec.x0);
                    let f = C::new(s_re * y.tanh(), s_im * a * sech(y));
                    psi1[i] = psi1[i] * f;
                    psi2[i] = psi2[i] * f.conj();
                }
            }
            SolitonKind::Dark => {
                for i in 0..grid.n() {
                    let y = root_bg * (grid.x(i) - spec.x0);
                    let f = C::new(s_re * y.tanh(), T::zero());
                    psi1[i] = psi1[i] * f;
                    psi2[i] = psi2[i] * f;
                }
            }
            SolitonKind::TravellingDark => {
                let depth = (T::one() - spec.v * spec.v).sqrt();
                for i in 0..grid.n() {
                    let y = root_bg * depth * (grid.x(i) - spec.x0);
                    let f = C::new(s_re * depth * y.tanh(), spec.v);
                    psi1[i] = psi1[i] * f;
                    psi2[i] = psi2[i] * f;
                }
            }
        }
    }

    Ok(Spliced { field: PairField::new(psi1, psi2)?, core_overlap })
}

/// Product splice of already-sampled pair profiles (e.g. numerically obtained
/// travelling fluxon analogues), each normalized by the common background.
pub fn splice_fields<T: Real>(
    constituents: &[PairField<T>],
    params: &ModelParams<T>,
    grid: &Grid<T>,
) -> Result<PairField<T>> {
    if constituents.is_empty() {
        return Err(Error::InvalidParameter("splice needs at least one profile".into()));
    }
    let bg = params.require_dark_background()?;
    let root_bg = bg.sqrt();
    let mut psi1 = Array1::from_elem(grid.n(), C::new(root_bg, T::zero()));
    let mut psi2 = psi1.clone();
    for field in constituents {
        grid.check_len(field.len())?;
        for i in 0..grid.n() {
            psi1[i] = psi1[i] * field.psi1[i] / root_bg;
            psi2[i] = psi2[i] * field.psi2[i] / root_bg;
        }
    }
    PairField::new(psi1, psi2)
}

/// Shift a pair profile by a whole number of grid cells, padding with the
/// edge values (the profiles approach a uniform background at the ends).
pub fn shift_on_grid<T: Real>(field: &PairField<T>, shift_cells: isize) -> PairField<T> {
    let n = field.len() as isize;
    let pick = |arr: &Array1<C<T>>, i: isize| {
        let j = (i - shift_cells).clamp(0, n - 1) as usize;
        arr[j]
    };
    let psi1 = Array1::from_iter((0..n).map(|i| pick(&field.psi1, i)));
    let psi2 = Array1::from_iter((0..n).map(|i| pick(&field.psi2, i)));
    PairField { psi1, psi2 }
}

/// Swap the two components (connects a fluxon analogue through its conjugate
/// partner; used to build even-parity collision data).
pub fn swap_components<T: Real>(field: &PairField<T>) -> PairField<T> {
    PairField { psi1: field.psi2.clone(), psi2: field.psi1.clone() }
}

/// Reflect a profile about `x = 0` (maps a right-mover to a left-mover).
pub fn reflect<T: Real>(field: &PairField<T>) -> PairField<T> {
    let n = field.len();
    let psi1 = Array1::from_iter((0..n).map(|i| field.psi1[n - 1 - i]));
    let psi2 = Array1::from_iter((0..n).map(|i| field.psi2[n - 1 - i]));
    PairField { psi1, psi2 }
}

/// Splice multiplied by the Thomas-Fermi envelope
/// `sqrt(max(rho0 - V(x), 0) / rho0)`, the standard initial guess for
/// stationary solves in a trap. With `omega = 0` the envelope is identically
/// one and the result equals [`splice`].
pub fn trapped_guess<T: Real>(
    specs: &[SolitonSpec<T>],
    params: &ModelParams<T>,
    grid: &Grid<T>,
    parity: PairParity,
) -> Result<Spliced<T>> {
    let mut spliced = splice(specs, params, grid, parity)?;
    let potential = crate::model::trap_potential(grid, params);
    for i in 0..grid.n() {
        let env = ((params.rho0 - potential[i]).max(T::zero()) / params.rho0).sqrt();
        spliced.field.psi1[i] = spliced.field.psi1[i] * env;
        spliced.field.psi2[i] = spliced.field.psi2[i] * env;
    }
    Ok(spliced)
}
