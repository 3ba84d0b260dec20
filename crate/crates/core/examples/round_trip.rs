//! Analysis, synthesis and the coefficient file format: energy is preserved,
//! the image comes back exactly and a file only loads into the frame that
//! wrote it.
//!
//! cargo run --release --example round_trip -- 0.6 128

use alpha_curvelets::cartoon::{rasterize, CartoonSpec};
use alpha_curvelets::io::{read_coefficients, read_coefficients_standalone, write_coefficients};
use alpha_curvelets::{BlockId, Frame, FrameParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let alpha: f64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0.6);
    let size: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(128);

    let image = rasterize(&CartoonSpec::random(2.0, 2.0, 1.0, 11, false)?, size, 1)?;
    let frame = Frame::new(FrameParams::new(alpha, size)?)?;
    let coeffs = frame.analyze(&image)?;
    println!("{} coefficients for {} samples ({:.2}x)", coeffs.len(), size * size, coeffs.len() as f64 / (size * size) as f64);
    println!("energy  image {:.12e}  coefficients {:.12e}", image.norm_sqr(), coeffs.energy());

    let back = frame.synthesize(&coeffs)?;
    println!("relative reconstruction error {:.2e}", image.distance(&back) / image.norm());

    for block in &coeffs.blocks {
        if let BlockId::Wedge(w) = block.id {
            if w.ell == 0 {
                println!("  j {:2}: cell {:4}x{:<4} energy {:.4e}", w.j, block.rows, block.cols, block.energy());
            }
        }
    }

    let mut bytes = Vec::new();
    write_coefficients(&mut bytes, &coeffs)?;
    let (rebuilt, loaded) = read_coefficients_standalone(bytes.as_slice())?;
    println!("file {} bytes, digest {}", bytes.len(), rebuilt.digest());
    assert_eq!(loaded, coeffs);
    let other = Frame::new(FrameParams::new(if alpha == 0.5 { 0.75 } else { 0.5 }, size)?)?;
    match read_coefficients(bytes.as_slice(), &other) {
        Err(e) => println!("loading into a different frame: {e}"),
        Ok(_) => unreachable!("digest check"),
    }
    Ok(())
}
