pub mod classifier;
pub mod criteria;
pub mod curve;
pub mod error;
pub mod order;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod selftest;

pub use error::{Error, Result};
pub use poly::{BiPoly, HomogPoly, Poly, RationalPoly};
pub use scalar::Rational;
