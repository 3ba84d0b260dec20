use std::io::Write;

use crate::error::{Error, Result};
use crate::grid::{Grid, ValueKind};

/// 8-bit binary PGM (`P5`, maxval 255). Values are mapped affinely from
/// `[min, max]` onto `[0, 255]`; a constant grid maps to 128.
pub fn pgm_bytes(grid: &Grid) -> Result<Vec<u8>> {
    if grid.kind() != ValueKind::Real {
        return Err(Error::InvalidInput("PGM export needs a real grid".into()));
    }
    let m = grid.size();
    let values = grid.real_parts();
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
    let mut out = format!("P5\n{m} {m}\n255\n").into_bytes();
    out.extend(values.iter().map(|&v| {
        if hi > lo {
            (255.0 * (v - lo) / (hi - lo)).round() as u8
        } else {
            128
        }
    }));
    Ok(out)
}

pub fn write_pgm<W: Write>(mut w: W, grid: &Grid) -> Result<()> {
    w.write_all(&pgm_bytes(grid)?)?;
    Ok(())
}
