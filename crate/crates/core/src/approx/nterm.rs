use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sparsity::tail_energies;
use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::transform::{CoefficientSet, Frame};

/// Positions `(block, offset)` of the coefficients ordered by decreasing
/// modulus; equal moduli are ordered by block id, then by `(k1, k2)`.
pub fn ranked_positions(c: &CoefficientSet) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..c.blocks.len()).collect();
    order.sort_by_key(|&b| c.blocks[b].id);
    let mut rank = vec![0; c.blocks.len()];
    for (r, &b) in order.iter().enumerate() {
        rank[b] = r;
    }
    let mut entries: Vec<(f64, usize, usize, usize)> = c
        .blocks
        .iter()
        .enumerate()
        .flat_map(|(b, block)| {
            let r = rank[b];
            block.data.iter().enumerate().map(move |(i, v)| (v.norm(), r, b, i))
        })
        .collect();
    entries.par_sort_unstable_by(|x, y| match y.0.total_cmp(&x.0) {
        Ordering::Equal => (x.1, x.3).cmp(&(y.1, y.3)),
        other => other,
    });
    entries.into_iter().map(|(_, _, b, i)| (b, i)).collect()
}

fn keep(c: &CoefficientSet, ranked: &[(usize, usize)], n: usize) -> CoefficientSet {
    let mut out = c.zeros_like();
    for &(b, i) in ranked.iter().take(n) {
        if c.blocks[b].data[i].norm_sqr() == 0.0 {
            break;
        }
        out.blocks[b].data[i] = c.blocks[b].data[i];
    }
    out
}

/// Keeps the `n` largest coefficients in modulus and zeroes the rest.
pub fn threshold_top_n(c: &CoefficientSet, n: usize) -> CoefficientSet {
    if n == 0 {
        return c.zeros_like();
    }
    keep(c, &ranked_positions(c), n)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveMeta {
    pub alpha: f64,
    pub size: usize,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub spec_id: Option<String>,
    /// Errors are `Σ|f[n] - f_N[n]|² / M²`.
    pub norm: String,
}

impl CurveMeta {
    pub fn new(alpha: f64, size: usize) -> Self {
        CurveMeta { alpha, size, beta: None, gamma: None, spec_id: None, norm: "l2/M".into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub n: usize,
    /// `‖f - f_N‖²` from the synthesized approximation.
    pub err2: f64,
    /// `Σ_{m>N} |θ*_m|²` from the sorted coefficients.
    pub tail: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorCurve {
    pub meta: CurveMeta,
    pub points: Vec<CurvePoint>,
}

impl ErrorCurve {
    /// Largest relative excess of `err2` over the coefficient tail. The
    /// frame is redundant, so synthesis from the kept coefficients is a
    /// contraction of the discarded part: `err2 <= tail`, with equality at
    /// `N = 0` and once every nonzero coefficient is kept. `floor` guards
    /// the relative measure when the tail vanishes.
    pub fn max_tail_excess(&self, floor: f64) -> f64 {
        self.points
            .iter()
            .map(|p| (p.err2 - p.tail).max(0.0) / p.tail.max(floor))
            .fold(0.0, f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,err2\n");
        for p in &self.points {
            out.push_str(&format!("{},{:e}\n", p.n, p.err2));
        }
        out
    }
}

/// `‖f - f_N‖²` for every `N` in `ns`, where `f_N` synthesizes the `N`
/// largest coefficients of `f`.
pub fn nterm_error_curve(f: &Grid, frame: &Frame, ns: &[usize]) -> Result<ErrorCurve> {
    if ns.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput("N values must be sorted ascending".into()));
    }
    let coeffs = frame.analyze(f)?;
    let ranked = ranked_positions(&coeffs);
    let sorted: Vec<f64> = ranked.iter().map(|&(b, i)| coeffs.blocks[b].data[i].norm()).collect();
    let tails = tail_energies(&sorted);
    let scale = 1.0 / (f.size() * f.size()) as f64;
    let points = ns
        .par_iter()
        .map(|&n| {
            let approx = frame.synthesize(&keep(&coeffs, &ranked, n))?;
            Ok(CurvePoint {
                n,
                err2: f.distance(&approx).powi(2) * scale,
                tail: tails[n.min(sorted.len())] * scale,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorCurve { meta: CurveMeta::new(frame.params().alpha, f.size()), points })
}

/// `|θ*_n|` for each `n` in `ns` (1-based), from one analysis.
pub fn ranked_moduli(c: &CoefficientSet) -> Vec<f64> {
    let mut m: Vec<f64> = c.blocks.iter().flat_map(|b| b.data.iter().map(|v| v.norm())).collect();
    m.par_sort_unstable_by(|a, b| b.total_cmp(a));
    m
}

/// Powers of two `1, 2, 4, …` up to `max`, preceded by 0.
pub fn dyadic_ns(max: usize) -> Vec<usize> {
    let mut ns = vec![0];
    let mut n = 1;
    while n <= max {
        ns.push(n);
        n *= 2;
    }
    ns
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::FrameParams;
    use crate::grid::ValueKind;
    use num_complex::Complex64;

    fn frame() -> Frame {
        Frame::new(FrameParams::new(0.5, 32).unwrap()).unwrap()
    }

    #[test]
    fn keeps_largest_entries() {
        let frame = frame();
        let mut c = frame.zero_coefficients(ValueKind::Real);
        c.blocks[0].data[0] = Complex64::new(3.0, 0.0);
        c.blocks[0].data[1] = Complex64::new(0.0, 1.0);
        c.blocks[0].data[2] = Complex64::new(-2.0, 0.0);
        let t = threshold_top_n(&c, 2);
        assert_eq!(t.blocks[0].data[0].re, 3.0);
        assert_eq!(t.blocks[0].data[1], Complex64::default());
        assert_eq!(t.blocks[0].data[2].re, -2.0);
        assert_eq!(threshold_top_n(&c, 0), c.zeros_like());
        assert_eq!(threshold_top_n(&c, 10), c);
    }

    #[test]
    fn ties_follow_index_order() {
        let frame = frame();
        let mut c = frame.zero_coefficients(ValueKind::Real);
        let last = c.blocks.len() - 1;
        c.blocks[last].data[5] = Complex64::new(1.0, 0.0);
        c.blocks[1].data[0] = Complex64::new(1.0, 0.0);
        c.blocks[0].data[7] = Complex64::new(1.0, 0.0);
        let t = threshold_top_n(&c, 2);
        let kept: Vec<_> = t.entries().filter(|(_, v)| v.norm() > 0.0).map(|(i, _)| i).collect();
        let mut all: Vec<_> = c.entries().filter(|(_, v)| v.norm() > 0.0).map(|(i, _)| i).collect();
        all.sort();
        assert_eq!(kept.len(), 2);
        assert!(kept.contains(&all[0]) && kept.contains(&all[1]));
    }

    #[test]
    fn curve_matches_tail_and_decreases() {
        let frame = frame();
        let f = Grid::from_fn(32, |x, y| if (x - 0.4).powi(2) + (y - 0.5).powi(2) < 0.06 { 1.0 } else { 0.0 });
        let total = frame.analyze(&f).unwrap().len();
        let mut ns = dyadic_ns(total);
        ns.push(total);
        let curve = nterm_error_curve(&f, &frame, &ns).unwrap();
        let norm2 = f.norm_sqr() / (32.0 * 32.0);
        assert!((curve.points[0].err2 - norm2).abs() < 1e-12 * norm2);
        assert!(curve.points.windows(2).all(|w| w[1].err2 <= w[0].err2 + 1e-15));
        assert!(curve.max_tail_excess(1e-12 * norm2) < 1e-9);
        let first = curve.points[0];
        assert!((first.err2 - first.tail).abs() <= 1e-9 * first.tail);
        assert!(curve.points.last().unwrap().err2 < 1e-24);
        // Strict inequality in between: the discarded part is not orthogonal
        // to the span of the kept atoms.
        assert!(curve.points[5].err2 < 0.99 * curve.points[5].tail);
    }
}
