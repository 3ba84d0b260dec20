use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{read_header_line, read_payload, MAX_HEADER};
use crate::error::{Error, Result};
use crate::grid::{Grid, ValueKind};

pub const GRID_MAGIC: &str = "ACUR1";

/// Normalization tag: `‖f‖_{L²} ≈ ‖samples‖_2 / M`.
pub const GRID_NORM: &str = "l2/M";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridHeader {
    pub width: usize,
    pub height: usize,
    pub kind: ValueKind,
    pub norm: String,
}

/// `ACUR1\n`, a one-line JSON header, then little-endian `f64` samples in
/// row-major order, `(re, im)` interleaved for complex grids.
pub fn write_grid<W: Write>(mut w: W, grid: &Grid) -> Result<()> {
    let kind = grid.kind();
    let header = GridHeader {
        width: grid.size(),
        height: grid.size(),
        kind,
        norm: GRID_NORM.into(),
    };
    writeln!(w, "{GRID_MAGIC}")?;
    serde_json::to_writer(&mut w, &header)?;
    w.write_all(b"\n")?;
    let per = if kind == ValueKind::Real { 1 } else { 2 };
    let mut payload = Vec::with_capacity(grid.values().len() * per * 8);
    for v in grid.values() {
        payload.extend_from_slice(&v.re.to_le_bytes());
        if per == 2 {
            payload.extend_from_slice(&v.im.to_le_bytes());
        }
    }
    w.write_all(&payload)?;
    Ok(())
}

pub fn read_grid<R: Read>(mut r: R) -> Result<Grid> {
    let magic = read_header_line(&mut r, 16)?;
    if magic != GRID_MAGIC {
        return Err(Error::Format(format!("expected magic {GRID_MAGIC:?}, found {magic:?}")));
    }
    let header: GridHeader = serde_json::from_str(&read_header_line(&mut r, MAX_HEADER)?)
        .map_err(|e| Error::Format(format!("grid header: {e}")))?;
    if header.norm != GRID_NORM {
        return Err(Error::Format(format!("unknown norm tag {:?}", header.norm)));
    }
    if header.width != header.height || header.width == 0 {
        return Err(Error::Format(format!(
            "grids are square and nonempty, header says {}x{}",
            header.width, header.height
        )));
    }
    let m = header.width;
    let per = if header.kind == ValueKind::Real { 1 } else { 2 };
    let floats = read_payload(&mut r, m * m * per)?;
    let values = match header.kind {
        ValueKind::Real => floats.into_iter().map(|v| Complex64::new(v, 0.0)).collect(),
        ValueKind::Complex => floats.chunks_exact(2).map(|c| Complex64::new(c[0], c[1])).collect(),
    };
    Grid::from_complex(m, values).map_err(|e| Error::Format(e.to_string()))
}

pub fn grid_to_bytes(grid: &Grid) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    write_grid(&mut out, grid)?;
    Ok(out)
}

pub fn grid_from_bytes(bytes: &[u8]) -> Result<Grid> {
    read_grid(bytes)
}
