//! Prints the scale/orientation layout of a frame and the redundancy of each
//! wedge's coefficient cell.
//!
//!     cargo run --release --example frame_geometry -- 0.5 256

use alpha_curvelets::frame::{build_geometry, FrameParams};

fn main() -> alpha_curvelets::Result<()> {
    let args: Vec<String> = std::env::args().collect();
    let alpha: f64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(0.5);
    let size: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(256);

    let params = FrameParams::new(alpha, size)?;
    let geometry = build_geometry(&params)?;
    println!(
        "alpha={alpha} M={size} scales {}..={} coarse {}x{} coefficients {}",
        params.j_min,
        params.j_max,
        geometry.coarse.rows,
        geometry.coarse.cols,
        geometry.coefficient_count()
    );
    println!(" j  ell  omega     cell       shear  support  cell/2^(j(1+a))");
    for w in &geometry.wedges {
        let j = w.index.j as f64;
        println!(
            "{:2} {:4}  {:7.4}  {:4}x{:<4}  {:5}  {:7}  {:6.2}",
            w.index.j,
            w.index.ell,
            w.omega,
            w.cell.rows,
            w.cell.cols,
            w.cell.shear,
            w.support_size,
            w.cell.len() as f64 / 2f64.powf(j * (1.0 + alpha)),
        );
    }
    Ok(())
}
