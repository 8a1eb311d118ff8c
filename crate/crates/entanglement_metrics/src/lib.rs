//! Entropic figures of merit for entanglement sent through the protocol.

mod entropy;
mod error;
mod rci;

pub use entropy::{g_entropy, symplectic_eigenvalues, von_neumann_entropy};
pub use error::EntanglementError;
pub use rci::{effective_channel_from_protocol, rci, rci_direct, rci_upper_bound, EffectiveChannel, TwoModeCovariance};
