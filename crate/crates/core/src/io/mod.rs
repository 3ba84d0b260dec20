//! Binary grid and coefficient files, PGM export and text reports.

mod coeff_file;
mod grid_file;
mod pgm;

use std::fs;
use std::io::Read;
use std::path::Path;

use serde::Serialize;

pub use coeff_file::{
    read_coeff_header, read_coefficients, read_coefficients_standalone, write_coefficients,
    BlockShape, CoeffHeader, COEFF_MAGIC,
};
pub use grid_file::{
    grid_from_bytes, grid_to_bytes, read_grid, write_grid, GridHeader, GRID_MAGIC, GRID_NORM,
};
pub use pgm::{pgm_bytes, write_pgm};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::transform::{CoefficientSet, Frame};

const MAX_HEADER: usize = 1 << 24;

/// Reads bytes up to `\n` (not included).
fn read_header_line<R: Read>(r: &mut R, limit: usize) -> Result<String> {
    let mut line = Vec::new();
    let mut byte = [0u8; 1];
    loop {
        if r.read(&mut byte)? == 0 {
            return Err(Error::Format("unexpected end of file in header".into()));
        }
        if byte[0] == b'\n' {
            break;
        }
        line.push(byte[0]);
        if line.len() > limit {
            return Err(Error::Format("header line too long".into()));
        }
    }
    String::from_utf8(line).map_err(|_| Error::Format("header is not UTF-8".into()))
}

/// Reads exactly `count` little-endian `f64` values and checks nothing follows.
fn read_payload<R: Read>(r: &mut R, count: usize) -> Result<Vec<f64>> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    if bytes.len() != count * 8 {
        return Err(Error::Format(format!(
            "payload holds {} bytes, header declares {}",
            bytes.len(),
            count * 8
        )));
    }
    Ok(bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk")))
        .collect())
}

pub fn save_grid(path: impl AsRef<Path>, grid: &Grid) -> Result<()> {
    fs::write(path, grid_to_bytes(grid)?)?;
    Ok(())
}

pub fn load_grid(path: impl AsRef<Path>) -> Result<Grid> {
    read_grid(fs::read(path)?.as_slice())
}

pub fn save_coefficients(path: impl AsRef<Path>, coeffs: &CoefficientSet) -> Result<()> {
    let mut bytes = Vec::new();
    write_coefficients(&mut bytes, coeffs)?;
    fs::write(path, bytes)?;
    Ok(())
}

pub fn load_coefficients(path: impl AsRef<Path>, frame: &Frame) -> Result<CoefficientSet> {
    read_coefficients(fs::read(path)?.as_slice(), frame)
}

pub fn save_pgm(path: impl AsRef<Path>, grid: &Grid) -> Result<()> {
    fs::write(path, pgm_bytes(grid)?)?;
    Ok(())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn save_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    fs::write(path, to_json(value)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::FrameParams;
    use num_complex::Complex64;

    #[test]
    fn grid_round_trip_is_byte_exact() {
        let g = Grid::from_fn(16, |x, y| (x * 7.1).sin() + y.powi(3));
        let bytes = grid_to_bytes(&g).unwrap();
        let back = grid_from_bytes(&bytes).unwrap();
        assert_eq!(back, g);
        assert_eq!(grid_to_bytes(&back).unwrap(), bytes);
        let header = b"ACUR1\n{\"width\":16,\"height\":16,\"kind\":\"real\",\"norm\":\"l2/M\"}\n";
        assert_eq!(&bytes[..header.len()], header);
        assert_eq!(bytes.len(), header.len() + 16 * 16 * 8);
    }

    #[test]
    fn complex_grid_round_trip() {
        let v: Vec<Complex64> = (0..64).map(|i| Complex64::new(i as f64, -0.5 * i as f64)).collect();
        let g = Grid::from_complex(8, v).unwrap();
        let bytes = grid_to_bytes(&g).unwrap();
        assert_eq!(grid_from_bytes(&bytes).unwrap(), g);
    }

    #[test]
    fn malformed_grids_rejected() {
        let g = Grid::from_fn(8, |x, _| x);
        let bytes = grid_to_bytes(&g).unwrap();
        assert!(grid_from_bytes(&bytes[..bytes.len() - 3]).is_err());
        let mut bad = bytes.clone();
        bad[0] = b'X';
        assert!(matches!(grid_from_bytes(&bad), Err(Error::Format(_))));
        assert!(grid_from_bytes(b"ACUR1\n{\"width\":2}\n").is_err());
    }

    #[test]
    fn coefficient_round_trip_and_digest_check() {
        let frame = Frame::new(FrameParams::new(0.5, 32).unwrap()).unwrap();
        let g = Grid::from_fn(32, |x, y| (6.0 * x).cos() * y);
        let c = frame.analyze(&g).unwrap();
        let mut bytes = Vec::new();
        write_coefficients(&mut bytes, &c).unwrap();
        let back = read_coefficients(bytes.as_slice(), &frame).unwrap();
        assert_eq!(back, c);
        let mut again = Vec::new();
        write_coefficients(&mut again, &back).unwrap();
        assert_eq!(again, bytes);

        let (rebuilt, standalone) = read_coefficients_standalone(bytes.as_slice()).unwrap();
        assert_eq!(rebuilt.digest(), frame.digest());
        assert_eq!(standalone, c);

        let other = Frame::new(FrameParams::new(0.75, 32).unwrap()).unwrap();
        assert!(matches!(
            read_coefficients(bytes.as_slice(), &other),
            Err(Error::DigestMismatch { .. })
        ));
    }

    #[test]
    fn tampered_digest_rejected_standalone() {
        let frame = Frame::new(FrameParams::new(0.5, 16).unwrap()).unwrap();
        let c = frame.zero_coefficients(crate::grid::ValueKind::Real);
        let mut bytes = Vec::new();
        write_coefficients(&mut bytes, &c).unwrap();
        let text = String::from_utf8_lossy(&bytes).into_owned();
        let digest = frame.digest();
        let forged = text.replacen(digest, &"0".repeat(digest.len()), 1);
        assert!(matches!(
            read_coefficients_standalone(forged.as_bytes()),
            Err(Error::DigestMismatch { .. })
        ));
    }

    #[test]
    fn pgm_examples() {
        let g = Grid::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let b = pgm_bytes(&g).unwrap();
        assert_eq!(&b[..11], b"P5\n2 2\n255\n");
        assert_eq!(&b[11..], &[0, 255, 255, 0]);
        let c = pgm_bytes(&Grid::from_fn(4, |_, _| 0.3)).unwrap();
        assert_eq!(c.len(), "P5\n4 4\n255\n".len() + 16);
        assert!(c[c.len() - 16..].iter().all(|&v| v == 128));
        let z = Grid::from_complex(1, vec![Complex64::new(0.0, 1.0)]).unwrap();
        assert!(pgm_bytes(&z).is_err());
    }
}
