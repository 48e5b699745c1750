pub mod error;
pub mod euler;
pub mod gamma;
pub mod identities;
pub mod multitrig;
pub mod numerics;
pub mod polylog;
pub mod zeta;

pub use error::{Error, Result};
pub use numerics::EvalResult;
