//! Minimal complex 2x2 matrix arithmetic for density-matrix propagation.
//!
//! Only what the unitary stepper and the observables need: Hermitian
//! structure, products, the exact exponential of a traceless Hermitian
//! matrix, and Pauli matrices.

use num_complex::Complex64 as C64;

/// Dense complex 2x2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m: [[C64; 2]; 2],
}

impl Mat2 {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn zero() -> Self {
        Self::new(C64::ZERO, C64::ZERO, C64::ZERO, C64::ZERO)
    }

    pub fn identity() -> Self {
        Self::new(C64::ONE, C64::ZERO, C64::ZERO, C64::ONE)
    }

    pub fn pauli_x() -> Self {
        Self::new(C64::ZERO, C64::ONE, C64::ONE, C64::ZERO)
    }

    pub fn pauli_y() -> Self {
        Self::new(C64::ZERO, -C64::I, C64::I, C64::ZERO)
    }

    pub fn pauli_z() -> Self {
        Self::new(C64::ONE, C64::ZERO, C64::ZERO, -C64::ONE)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let mut r = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                r.m[i][j] = self.m[i][0] * o.m[0][j] + self.m[i][1] * o.m[1][j];
            }
        }
        r
    }

    pub fn adjoint(&self) -> Mat2 {
        Mat2::new(
            self.m[0][0].conj(),
            self.m[1][0].conj(),
            self.m[0][1].conj(),
            self.m[1][1].conj(),
        )
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn scale(&self, s: C64) -> Mat2 {
        let mut r = *self;
        for row in r.m.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        r
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.m[i][j] += o.m[i][j];
            }
        }
        r
    }

    /// Exact `exp(-i (h . sigma) dt)` for a real Bloch vector `h`.
    ///
    /// For a traceless Hermitian `H = h . sigma` the exponential is
    /// `cos(|h| dt) I - i sin(|h| dt) (h . sigma)/|h|`, which is unitary to
    /// round-off by construction.
    pub fn rotation(h: [f64; 3], dt: f64) -> Mat2 {
        let norm = (h[0] * h[0] + h[1] * h[1] + h[2] * h[2]).sqrt();
        let angle = norm * dt;
        if norm == 0.0 {
            return Mat2::identity();
        }
        let (s, c) = angle.sin_cos();
        let n = [h[0] / norm, h[1] / norm, h[2] / norm];
        // cos(a) I - i sin(a) (n . sigma)
        let sx = Mat2::pauli_x().scale(C64::new(n[0], 0.0));
        let sy = Mat2::pauli_y().scale(C64::new(n[1], 0.0));
        let sz = Mat2::pauli_z().scale(C64::new(n[2], 0.0));
        let nsigma = sx.add(&sy).add(&sz);
        Mat2::identity()
            .scale(C64::new(c, 0.0))
            .add(&nsigma.scale(C64::new(0.0, -s)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn frobenius(a: &Mat2, b: &Mat2) -> f64 {
        let mut s = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                s += (a.m[i][j] - b.m[i][j]).norm_sqr();
            }
        }
        s.sqrt()
    }

    #[test]
    fn rotation_is_unitary() {
        let u = Mat2::rotation([0.3, -1.2, 0.7], 0.42);
        let prod = u.mul(&u.adjoint());
        assert!(frobenius(&prod, &Mat2::identity()) < 1e-14);
    }

    #[test]
    fn rotation_about_z_matches_phases() {
        let omega = 2.0;
        let dt = 0.3;
        let u = Mat2::rotation([0.0, 0.0, omega / 2.0], dt);
        // exp(-i (omega/2) sz t) = diag(e^{-i omega t/2}, e^{+i omega t/2})
        let expected = Mat2::new(
            C64::from_polar(1.0, -omega * dt / 2.0),
            C64::ZERO,
            C64::ZERO,
            C64::from_polar(1.0, omega * dt / 2.0),
        );
        assert!(frobenius(&u, &expected) < 1e-15);
    }

    #[test]
    fn rotation_small_angle_matches_series() {
        // Oracle: truncated series I - iH dt - (H dt)^2/2 for small dt.
        let h = [0.4, 0.1, -0.2];
        let dt = 1e-4;
        let hm = Mat2::pauli_x()
            .scale(C64::new(h[0], 0.0))
            .add(&Mat2::pauli_y().scale(C64::new(h[1], 0.0)))
            .add(&Mat2::pauli_z().scale(C64::new(h[2], 0.0)));
        let series = Mat2::identity()
            .add(&hm.scale(C64::new(0.0, -dt)))
            .add(&hm.mul(&hm).scale(C64::new(-dt * dt / 2.0, 0.0)));
        let exact = Mat2::rotation(h, dt);
        assert_abs_diff_eq!(frobenius(&exact, &series), 0.0, epsilon = 1e-12);
    }
}
