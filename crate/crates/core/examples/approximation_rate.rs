//! N-term approximation of a binary disk: error decay, coefficient decay and
//! per-scale sparsity for two values of alpha.
//!
//! cargo run --release --example approximation_rate -- 512 [supersample]

use alpha_curvelets::approx::{
    count_above, fit_loglog, nterm_error_curve, per_scale_weak_norms, rate_fit, ranked_moduli,
};
use alpha_curvelets::cartoon::{rasterize, CartoonSpec};
use alpha_curvelets::{Frame, FrameParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let size: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(256);
    let beta = 2.0;
    let spec = CartoonSpec::binary_disk([0.5, 0.5], 0.25);
    let ss: usize = std::env::args().nth(2).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let image = rasterize(&spec, size, ss)?;
    let ns: Vec<usize> = (0..=28).map(|e| (2f64.powf(e as f64 / 2.0)).round() as usize).collect();

    let mut curves = Vec::new();
    for alpha in [0.5, 0.9] {
        let frame = Frame::new(FrameParams::new(alpha, size)?)?;
        let mut curve = nterm_error_curve(&image, &frame, &ns)?;
        curve.meta.beta = Some(beta);
        curve.meta.gamma = Some(beta);
        let report = rate_fit(&curve, 1 << 6, 1 << 13)?;
        println!("alpha {alpha}: err2 slope {:.3} (benchmark {:?})", report.slope, report.benchmark_exponent);

        let coeffs = frame.analyze(&image)?;
        let sorted = ranked_moduli(&coeffs);
        let (xs, ys): (Vec<f64>, Vec<f64>) = (6..=13)
            .map(|e| ((1usize << e) as f64, sorted[(1 << e) - 1]))
            .unzip();
        println!("  |theta*_N| slope {:.3}", fit_loglog(&xs, &ys)?.slope);

        for s in per_scale_weak_norms(&coeffs, beta)? {
            println!("  j {:2}  count {:7}  weak norm {:.4}", s.j, s.count, s.norm);
        }
        let j = frame.params().j_max - 2;
        let top = coeffs.scale_moduli(j).into_iter().fold(0.0, f64::max);
        let (eps, counts): (Vec<f64>, Vec<f64>) = (1..=8)
            .map(|e| {
                let eps = top * 2f64.powi(-e);
                (1.0 / eps, count_above(&coeffs, eps, j) as f64)
            })
            .unzip();
        println!("  counts at j={j}: {counts:?}, exponent {:.3}", fit_loglog(&eps, &counts)?.slope);
        curves.push(curve);
    }
    println!("{:>6} {:>12} {:>12}", "N", "alpha=0.5", "alpha=0.9");
    for (a, b) in curves[0].points.iter().zip(&curves[1].points) {
        println!("{:>6} {:12.4e} {:12.4e}", a.n, a.err2, b.err2);
    }
    Ok(())
}
