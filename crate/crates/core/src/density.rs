//! Density-matrix representation of the two-level system.
//!
//! A state is stored either as the explicit 2x2 Hermitian matrix
//! ([`DensityMatrix`]) or in the angle parametrization ([`AngleState`])
//!
//! ```text
//! rho_pp = (1 + cos(theta))/2,  rho_mm = (1 - cos(theta))/2,
//! rho_pm = (r/2) e^{i phi}
//! ```
//!
//! with `theta` in `[0, pi]`, `phi` in `[0, 2pi)` and `r` in `[0, 1]`.
//! The combination `alpha^2 = cos^2(theta) + r^2` is invariant under any
//! unitary evolution and classifies the state: `alpha = 1` is pure,
//! `alpha = 0` maximally mixed. Equivalently `det(rho) = (1 - alpha^2)/4`
//! and `tr(rho^2) = (1 + alpha^2)/2`.

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::mat2::Mat2;

/// Tolerance for the trace-one and positivity checks on constructed states.
pub const STATE_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum StateError {
    #[error("trace must be one: rho_pp + rho_mm = {0}")]
    TraceNotOne(f64),
    #[error("state is not positive semidefinite: det = {0}")]
    NotPositive(f64),
    #[error("off-diagonal magnitude {0} exceeds 1/2")]
    OffDiagonalTooLarge(f64),
    #[error("{field} = {value} outside {range}")]
    OutOfRange {
        field: &'static str,
        value: f64,
        range: &'static str,
    },
}

/// 2x2 Hermitian, unit-trace, positive-semidefinite quantum state.
///
/// Only the independent entries are stored; `rho_mp` is implicitly the
/// conjugate of `rho_pm`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    rho_pp: f64,
    rho_mm: f64,
    rho_pm: C64,
}

impl DensityMatrix {
    pub fn new(rho_pp: f64, rho_mm: f64, rho_pm: C64) -> Result<Self, StateError> {
        let trace = rho_pp + rho_mm;
        if (trace - 1.0).abs() > STATE_TOL {
            return Err(StateError::TraceNotOne(trace));
        }
        if rho_pm.norm() > 0.5 + STATE_TOL {
            return Err(StateError::OffDiagonalTooLarge(rho_pm.norm()));
        }
        let det = rho_pp * rho_mm - rho_pm.norm_sqr();
        if det < -STATE_TOL {
            return Err(StateError::NotPositive(det));
        }
        Ok(DensityMatrix { rho_pp, rho_mm, rho_pm })
    }

    /// The maximally mixed state `I/2`.
    pub fn maximally_mixed() -> Self {
        DensityMatrix { rho_pp: 0.5, rho_mm: 0.5, rho_pm: C64::ZERO }
    }

    pub fn rho_pp(&self) -> f64 {
        self.rho_pp
    }

    pub fn rho_mm(&self) -> f64 {
        self.rho_mm
    }

    pub fn rho_pm(&self) -> C64 {
        self.rho_pm
    }

    pub fn det(&self) -> f64 {
        self.rho_pp * self.rho_mm - self.rho_pm.norm_sqr()
    }

    pub fn to_mat2(&self) -> Mat2 {
        Mat2::new(
            C64::new(self.rho_pp, 0.0),
            self.rho_pm,
            self.rho_pm.conj(),
            C64::new(self.rho_mm, 0.0),
        )
    }

    /// Rebuild from an explicit matrix, symmetrizing round-off.
    pub fn from_mat2(m: &Mat2) -> Result<Self, StateError> {
        let pm = (m.m[0][1] + m.m[1][0].conj()) * 0.5;
        Self::new(m.m[0][0].re, m.m[1][1].re, pm)
    }

    /// Eigenvalues `(1 +- alpha)/2`, descending.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let a = mixing_alpha_rho(self).0;
        ((1.0 + a) / 2.0, (1.0 - a) / 2.0)
    }
}

/// Angle parametrization `(theta, phi, r)` of a [`DensityMatrix`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleState {
    pub theta: f64,
    pub phi: f64,
    pub r: f64,
}

impl AngleState {
    pub fn new(theta: f64, phi: f64, r: f64) -> Result<Self, StateError> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) || !theta.is_finite() {
            return Err(StateError::OutOfRange { field: "theta", value: theta, range: "[0, pi]" });
        }
        if !(0.0..=1.0).contains(&r) || !r.is_finite() {
            return Err(StateError::OutOfRange { field: "r", value: r, range: "[0, 1]" });
        }
        let alpha_sq = theta.cos().powi(2) + r * r;
        if alpha_sq > 1.0 + STATE_TOL {
            return Err(StateError::OutOfRange {
                field: "alpha^2",
                value: alpha_sq,
                range: "[0, 1]",
            });
        }
        if !phi.is_finite() {
            return Err(StateError::OutOfRange { field: "phi", value: phi, range: "finite" });
        }
        Ok(AngleState { theta, phi: wrap_phi(phi), r })
    }

    pub fn alpha(&self) -> MixingParameter {
        mixing_alpha(self)
    }
}

/// Wrap an angle into `[0, 2pi)`.
pub fn wrap_phi(phi: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let mut p = phi % tau;
    if p < 0.0 {
        p += tau;
    }
    // The remainder can land exactly on tau after the correction.
    if p >= tau {
        p = 0.0;
    }
    p
}

/// Conserved degree-of-mixing parameter, in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MixingParameter(pub f64);

/// Build the density matrix from an angle state.
pub fn from_angles(s: &AngleState) -> DensityMatrix {
    let c = s.theta.cos();
    DensityMatrix {
        rho_pp: (1.0 + c) / 2.0,
        rho_mm: (1.0 - c) / 2.0,
        rho_pm: C64::from_polar(s.r / 2.0, s.phi),
    }
}

/// Invert the parametrization. `phi` is returned in `[0, 2pi)`; when the
/// off-diagonal vanishes (`r = 0`) the phase is set to 0 by convention.
pub fn to_angles(rho: &DensityMatrix) -> AngleState {
    let c = (rho.rho_pp - rho.rho_mm).clamp(-1.0, 1.0);
    let theta = c.acos();
    let r = (2.0 * rho.rho_pm.norm()).min(1.0);
    let phi = if r == 0.0 { 0.0 } else { wrap_phi(rho.rho_pm.arg()) };
    AngleState { theta, phi, r }
}

/// `alpha = sqrt(cos^2 theta + r^2)`.
pub fn mixing_alpha(s: &AngleState) -> MixingParameter {
    let a2 = s.theta.cos().powi(2) + s.r * s.r;
    MixingParameter(a2.min(1.0).sqrt())
}

/// `alpha` computed from the matrix entries via `tr(rho^2) = (1 + alpha^2)/2`.
pub fn mixing_alpha_rho(rho: &DensityMatrix) -> MixingParameter {
    let tr2 = purity(rho);
    MixingParameter((2.0 * tr2 - 1.0).clamp(0.0, 1.0).sqrt())
}

/// `tr(rho^2)` by explicit matrix product.
pub fn purity(rho: &DensityMatrix) -> f64 {
    let m = rho.to_mat2();
    m.mul(&m).trace().re
}

/// Von Neumann entropy in nats as a function of `alpha`:
/// `S = [2 ln 2 - (1+alpha) ln(1+alpha) - (1-alpha) ln(1-alpha)] / 2`,
/// with the `0 ln 0 = 0` convention at `alpha = 1`.
pub fn entropy(alpha: MixingParameter) -> f64 {
    let a = alpha.0;
    debug_assert!((0.0..=1.0 + STATE_TOL).contains(&a));
    let a = a.clamp(0.0, 1.0);
    let plus = (1.0 + a) * (1.0 + a).ln();
    let minus = if a >= 1.0 { 0.0 } else { (1.0 - a) * (1.0 - a).ln() };
    0.5 * (2.0 * std::f64::consts::LN_2 - plus - minus)
}

/// `tr(rho sigma_z) = rho_pp - rho_mm = cos(theta)`.
pub fn spin_z_expectation(rho: &DensityMatrix) -> f64 {
    rho.rho_pp - rho.rho_mm
}
