//! Associated Legendre, Ferrers and Jacobi functions of complex degree and
//! order, fractional order/degree shift operators acting on them, and a
//! numerical referee that checks each closed-form shift against a direct
//! contour-integral evaluation.

pub mod cli;
pub mod error;
pub mod hyper;
pub mod legendre;
pub mod numerics;
pub mod quad;
pub mod shift;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::C64;
