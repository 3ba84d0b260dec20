//! Directional analysis of a straight edge: wedge energies at one scale,
//! radial Fourier slices, and the a-priori coefficient bound per scale.
//!
//! cargo run --release --example edge_analysis -- 512

use alpha_curvelets::analysis::{
    apriori_bound_check, radial_slice_energy, slice_directions, straight_edge_image, wedge_energy_table,
};
use alpha_curvelets::{Frame, FrameParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let size: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(512);
    let image = straight_edge_image(size);
    let frame = Frame::new(FrameParams::new(0.5, size)?)?;
    let j = frame.params().j_max - 1;

    let table = wedge_energy_table(&image, &frame, j)?;
    println!("scale {j}: band energy {:.4e}, wedges {:.4e}", table.band_energy, table.total());
    for w in &table.wedges {
        println!("  ell {:2}  omega {:6.3}  ell_J {:5.3}  energy {:.3e}", w.ell, w.omega, w.ell_j, w.energy);
    }
    println!("smoothed energies nonincreasing: {}", table.smoothed_nonincreasing(1e-9));
    match table.decay_fit(2) {
        Ok(fit) => println!("decay exponent {:.2}", fit.slope),
        Err(e) => println!("no decay fit: {e}"),
    }

    println!("radial slices at scale {j}:");
    for eta in slice_directions(8) {
        println!("  eta {:6.3}  energy {:.3e}", eta, radial_slice_energy(&image, eta, j)?);
    }

    println!("a-priori bound |theta| <= B_j 2^(-j(1+alpha)/2) sup|f|:");
    for j in 2..=frame.params().j_max {
        let b = apriori_bound_check(&frame, j)?;
        println!("  j {j}  l1 {:.4e}  B_j {:.3}", b.l1, b.b_j);
    }
    Ok(())
}
