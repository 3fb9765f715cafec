pub mod algebra;
pub mod comodule;
pub mod error;
pub mod group;
pub mod hopf;
pub mod json;
pub mod lin;
pub mod linalg;
pub mod modp;
pub mod morphism;
pub mod pbw;
pub mod rational;
pub mod report;
pub mod scalar;
pub mod simple;
pub mod twist;
pub mod families;
pub mod galois;

pub use error::{Error, Result};
pub use rational::Q;
pub use scalar::{Field, Scalar};
