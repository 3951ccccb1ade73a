pub mod combinatorics;
pub mod counterexample;
pub mod error;
pub mod grassmann;
pub mod groebner;
pub mod pipeline;
pub mod polyring;
pub mod sample;
pub mod schubert;
pub mod tables;

pub use error::{Error, Result};
