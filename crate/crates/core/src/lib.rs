//! Discrete tight frames of α-curvelets on the periodic unit square.
//!
//! A [`Frame`] is built from [`FrameParams`] (anisotropy `α`, grid size `M`
//! and scale range). [`Frame::analyze`] maps a [`Grid`] to a
//! [`CoefficientSet`] and [`Frame::synthesize`] inverts it exactly: the
//! frame is Parseval, so coefficient energy equals image energy.
//!
//! Around the transform live cartoon-image generators ([`cartoon`]), N-term
//! approximation and sparsity measures ([`approx`]), decay-law diagnostics
//! ([`analysis`]), file formats ([`io`]) and the `acurve` command line
//! ([`cli`]).

pub mod analysis;
pub mod approx;
pub mod cartoon;
pub mod cli;
pub mod error;
pub mod frame;
pub mod grid;
pub mod io;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use frame::{FrameParams, WedgeIndex};
pub use grid::{Grid, ValueKind};
pub use transform::{BlockId, CoeffIndex, CoefficientSet, Frame};
