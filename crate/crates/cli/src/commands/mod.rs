//! One module per subcommand, plus the shared machine-readable metadata
//! block.

pub mod bijection;
pub mod curve;
pub mod roots;
pub mod triangle;
pub mod verify;

use pascalian::roots::SolverConfig;
use serde_json::{json, Value};

/// The `meta` block attached to every JSON payload: the invoked command,
/// effective tolerances, and component versions. Keys serialize sorted, so
/// the bytes are stable.
pub fn meta(command: &str, cfg: &SolverConfig) -> Value {
    json!({
        "command": command,
        "tolerances": {
            "residual": cfg.residual_tol,
            "imag": cfg.imag_tol,
            "vieta_factor": cfg.vieta_tol_factor,
            "annulus": cfg.annulus_tol,
        },
        "versions": {
            "pascalian": pascalian::VERSION,
            "pascalian-cli": env!("CARGO_PKG_VERSION"),
        },
    })
}
