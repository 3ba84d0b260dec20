//! Hypercube families of bump functions: size and separation against the
//! predicted copy-of-lp exponent 2/(beta+1).
//!
//! cargo run --release --example hypercubes

use alpha_curvelets::analysis::{copy_of_lp_check, hypercube_family, HypercubeFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for beta in [1.25, 1.5, 2.0] {
        let families = [2, 4, 8, 16, 32]
            .iter()
            .map(|&k| hypercube_family(beta, k, 1.0))
            .collect::<Result<Vec<HypercubeFamily>, _>>()?;
        println!("beta {beta}:");
        for f in &families {
            println!(
                "  k {:3}  m_k {:5}  delta_k {:.4e}  ||psi_(0,0)|| {:.4e}",
                f.k,
                f.m_k,
                f.delta_k,
                f.norm((0, 0), 1 << 12)
            );
        }
        let sizes: Vec<_> = families.iter().map(HypercubeFamily::size).collect();
        let verdict = copy_of_lp_check(&sizes, Some(2.0 / (beta + 1.0)))?;
        println!("  p {:.4} (expected {:.4}) holds {}", verdict.p, 2.0 / (beta + 1.0), verdict.holds);
    }
    Ok(())
}
