//! Polynomial-times-Gaussian characteristic functions for heralded
//! non-Gaussian ancillas, and their fidelity and syndrome error rate.

mod ber;
mod cf;
mod error;
mod fidelity;
mod optimize;
mod poly;
mod quadrature;
mod states;

pub use ber::{ber_nongauss, required_displacement_nongauss, syndrome_marginal, SyndromeMarginal};
pub use cf::PolyGaussianCF;
pub use error::NonGaussError;
pub use fidelity::fidelity_numeric;
pub use optimize::{best_gain, optimize_ancilla_param, AncillaFamily, AncillaOptimum};
pub use poly::{Exponent, LambdaPoly, Poly, Var};
pub use quadrature::GaussHermite;
pub use states::{apply_nongauss, kernel_f, sb_cf, NonGaussOp, NonGaussOpKind, SBParams};
