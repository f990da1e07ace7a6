use thiserror::Error;

use crate::bridge::BridgeError;
use crate::contfrac::CfError;
use crate::diagram::DiagramError;
use crate::harmonic::HarmonicError;
use crate::heights::HeightError;
use crate::oracle::OracleError;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    ContFrac(#[from] CfError),
    #[error(transparent)]
    Bridge(#[from] BridgeError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Height(#[from] HeightError),
    #[error(transparent)]
    Harmonic(#[from] HarmonicError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
