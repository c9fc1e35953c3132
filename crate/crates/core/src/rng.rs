//! Counter-based noise streams.
//!
//! Every Wiener increment is addressed by `(seed, stream, step)`, so
//! trajectory `k`, step `j` produces the same increment no matter how
//! trajectories are scheduled across workers. The generator is a
//! splitmix64-style avalanche over the packed key; states are never shared
//! or advanced, which keeps parallel ensembles coordination-free.

/// One pair of Wiener increments with mean 0 and variance `dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseIncrement {
    pub dw1: f64,
    pub dw2: f64,
}

#[inline]
fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

#[inline]
fn mix_key(seed: u64, stream: u64, step: u64, salt: u64) -> u64 {
    // Chained avalanche over the tuple; each field passes through a full
    // mix so low-entropy indices (0, 1, 2, ...) decorrelate.
    let mut h = splitmix(seed ^ 0x6a09e667f3bcc908);
    h = splitmix(h ^ stream);
    h = splitmix(h ^ step);
    splitmix(h ^ salt)
}

/// Uniform in (0, 1]; never returns 0 so it is safe under `ln`.
#[inline]
fn to_unit_open(bits: u64) -> f64 {
    ((bits >> 11) + 1) as f64 * (1.0 / 9007199254740992.0)
}

/// Standard-normal pair via Box-Muller from the addressed counters.
#[inline]
pub fn gaussian_pair(seed: u64, stream: u64, step: u64) -> (f64, f64) {
    let u1 = to_unit_open(mix_key(seed, stream, step, 0x1));
    let u2 = to_unit_open(mix_key(seed, stream, step, 0x2));
    let mag = (-2.0 * u1.ln()).sqrt();
    let (s, c) = (std::f64::consts::TAU * u2).sin_cos();
    (mag * c, mag * s)
}

/// Wiener increments over a step of length `dt` for `(seed, stream, step)`.
#[inline]
pub fn wiener_pair(seed: u64, stream: u64, step: u64, dt: f64) -> NoiseIncrement {
    let (z1, z2) = gaussian_pair(seed, stream, step);
    let s = dt.sqrt();
    NoiseIncrement { dw1: z1 * s, dw2: z2 * s }
}

/// Uniform sample in `[lo, hi)` for auxiliary draws (initial conditions).
#[inline]
pub fn uniform(seed: u64, stream: u64, step: u64, salt: u64, lo: f64, hi: f64) -> f64 {
    let u = (mix_key(seed, stream, step, salt.wrapping_add(0x10)) >> 11) as f64
        * (1.0 / 9007199254740992.0);
    lo + (hi - lo) * u
}
