//! One-dimensional window profiles.
//!
//! Every window is assembled from [`smooth_step`], the C^∞ transition
//! `s(t) = e(t) / (e(t) + e(1 - t))` with `e(t) = exp(-sharpness / t)` for
//! `t > 0` and `e(t) = 0` otherwise.

use std::f64::consts::PI;

/// C^∞ monotone transition from 0 (for `t <= 0`) to 1 (for `t >= 1`).
pub fn smooth_step(t: f64, sharpness: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if t >= 1.0 {
        return 1.0;
    }
    let e = |u: f64| if u > 0.0 { (-sharpness / u).exp() } else { 0.0 };
    let a = e(t);
    let b = e(1.0 - t);
    // Both terms underflow only when sharpness is huge; split at the midpoint.
    if a + b == 0.0 {
        return if t < 0.5 { 0.0 } else if t > 0.5 { 1.0 } else { 0.5 };
    }
    a / (a + b)
}

/// Coarse radial profile: 1 on `[0, 3/2]`, 0 from 2 on.
pub fn coarse_profile(r: f64, sharpness: f64) -> f64 {
    1.0 - smooth_step((r - 1.5) / 0.5, sharpness)
}

/// Band-pass radial profile: supported in `[1/2, 2]`, equal to 1 on `[3/4, 3/2]`.
pub fn band_profile(r: f64, sharpness: f64) -> f64 {
    let rise = smooth_step((r - 0.5) / 0.25, sharpness);
    if rise == 0.0 {
        return 0.0;
    }
    rise * (1.0 - smooth_step((r - 1.5) / 0.5, sharpness))
}

/// Rising half of [`band_profile`] continued by 1: 0 below 1/2, 1 from 3/4 on.
pub fn highpass_profile(r: f64, sharpness: f64) -> f64 {
    smooth_step((r - 0.5) / 0.25, sharpness)
}

/// Angular profile: supported in `[-3π/4, 3π/4]`, equal to 1 on `[-π/2, π/2]`.
pub fn angular_profile(t: f64, sharpness: f64) -> f64 {
    1.0 - smooth_step((t.abs() - PI / 2.0) / (PI / 4.0), sharpness)
}

/// Maps an angle onto `(-π, π]`.
pub fn wrap_angle(t: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut w = t.rem_euclid(two_pi);
    if w > PI {
        w -= two_pi;
    }
    w
}
