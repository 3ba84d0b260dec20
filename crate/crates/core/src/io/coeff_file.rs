use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{read_header_line, read_payload, MAX_HEADER};
use crate::error::{Error, Result};
use crate::frame::FrameParams;
use crate::grid::ValueKind;
use crate::transform::{BlockId, CoeffBlock, CoefficientSet, Frame, NORM_CONVENTION};

pub const COEFF_MAGIC: &str = "ACCF1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockShape {
    #[serde(flatten)]
    pub id: BlockId,
    pub rows: usize,
    pub cols: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffHeader {
    pub params: FrameParams,
    pub digest: String,
    pub source: ValueKind,
    pub norm: String,
    pub blocks: Vec<BlockShape>,
}

/// `ACCF1\n`, a one-line JSON header (frame parameters, geometry digest and
/// block table), then every block as little-endian `(re, im)` pairs in table
/// order: coarse, residual, wedges by `(j, ℓ)`.
pub fn write_coefficients<W: Write>(mut w: W, coeffs: &CoefficientSet) -> Result<()> {
    let header = CoeffHeader {
        params: coeffs.params.clone(),
        digest: coeffs.digest.clone(),
        source: coeffs.source,
        norm: NORM_CONVENTION.into(),
        blocks: coeffs
            .blocks
            .iter()
            .map(|b| BlockShape { id: b.id, rows: b.rows, cols: b.cols })
            .collect(),
    };
    writeln!(w, "{COEFF_MAGIC}")?;
    serde_json::to_writer(&mut w, &header)?;
    w.write_all(b"\n")?;
    let mut payload = Vec::with_capacity(coeffs.len() * 16);
    for v in coeffs.blocks.iter().flat_map(|b| &b.data) {
        payload.extend_from_slice(&v.re.to_le_bytes());
        payload.extend_from_slice(&v.im.to_le_bytes());
    }
    w.write_all(&payload)?;
    Ok(())
}

/// Reads the header only.
pub fn read_coeff_header<R: Read>(r: &mut R) -> Result<CoeffHeader> {
    let magic = read_header_line(r, 16)?;
    if magic != COEFF_MAGIC {
        return Err(Error::Format(format!("expected magic {COEFF_MAGIC:?}, found {magic:?}")));
    }
    let header: CoeffHeader = serde_json::from_str(&read_header_line(r, MAX_HEADER)?)
        .map_err(|e| Error::Format(format!("coefficient header: {e}")))?;
    if header.norm != NORM_CONVENTION {
        return Err(Error::Format(format!("unknown norm tag {:?}", header.norm)));
    }
    Ok(header)
}

/// Reads a coefficient file for `frame`. The file's geometry digest and
/// block table must match the frame exactly.
pub fn read_coefficients<R: Read>(mut r: R, frame: &Frame) -> Result<CoefficientSet> {
    let header = read_coeff_header(&mut r)?;
    if header.digest != frame.digest() {
        return Err(Error::DigestMismatch {
            expected: frame.digest().to_string(),
            found: header.digest,
        });
    }
    let expected: Vec<BlockShape> = frame
        .block_ids()
        .map(|id| {
            let l = frame.layout(id)?;
            Ok(BlockShape { id, rows: l.rows, cols: l.cols })
        })
        .collect::<Result<_>>()?;
    if header.blocks != expected {
        return Err(Error::Format("block table does not match the frame".into()));
    }
    let total: usize = expected.iter().map(|b| b.rows * b.cols).sum();
    let floats = read_payload(&mut r, 2 * total)?;
    let mut values = floats.chunks_exact(2).map(|c| Complex64::new(c[0], c[1]));
    let blocks = expected
        .iter()
        .map(|s| CoeffBlock {
            id: s.id,
            rows: s.rows,
            cols: s.cols,
            data: values.by_ref().take(s.rows * s.cols).collect(),
        })
        .collect();
    Ok(CoefficientSet {
        params: header.params,
        digest: header.digest,
        source: header.source,
        blocks,
    })
}

/// Reads a coefficient file, rebuilding the frame from its header. Fails if
/// the rebuilt geometry has a different digest.
pub fn read_coefficients_standalone<R: Read>(mut r: R) -> Result<(Frame, CoefficientSet)> {
    let mut head = Vec::new();
    let header = {
        let mut tee = TeeReader { inner: &mut r, copy: &mut head };
        read_coeff_header(&mut tee)?
    };
    let frame = Frame::new(header.params)?;
    let coeffs = read_coefficients(head.as_slice().chain(r), &frame)?;
    Ok((frame, coeffs))
}

struct TeeReader<'a, R> {
    inner: &'a mut R,
    copy: &'a mut Vec<u8>,
}

impl<R: Read> Read for TeeReader<'_, R> {
    fn read(&mut self, buf: &mut [u8]) -> std::io::Result<usize> {
        let n = self.inner.read(buf)?;
        self.copy.extend_from_slice(&buf[..n]);
        Ok(n)
    }
}
