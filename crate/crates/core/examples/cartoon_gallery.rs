//! Draws a few random cartoons, checks their class membership and writes
//! them as PGM images next to their JSON specs.
//!
//! cargo run --release --example cartoon_gallery -- out_dir

use std::path::PathBuf;

use alpha_curvelets::cartoon::{rasterize, CartoonSpec};
use alpha_curvelets::io::{save_json, save_pgm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "gallery".into()));
    std::fs::create_dir_all(&dir)?;
    for (seed, beta, gamma, binary) in [(1, 2.0, 2.0, true), (2, 2.0, 1.5, false), (3, 1.5, 2.0, false), (4, 1.2, 1.2, false)] {
        let spec = CartoonSpec::random(beta, gamma, 1.0, seed, binary)?;
        spec.validate()?;
        let image = rasterize(&spec, 256, 1)?;
        let name = format!("cartoon_{seed}");
        save_pgm(dir.join(format!("{name}.pgm")), &image)?;
        save_json(dir.join(format!("{name}.json")), &spec)?;
        let area = image.values().iter().filter(|v| spec.binary && v.re == 1.0).count();
        println!(
            "{name}: beta {beta} gamma {gamma} binary {binary}  max {:.3}  {}",
            image.max_abs(),
            if binary { format!("area {:.4}", area as f64 / 65536.0) } else { String::new() }
        );
    }
    Ok(())
}
