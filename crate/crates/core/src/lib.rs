pub mod algebra;
pub mod cli;
pub mod closedform;
pub mod divisors;
pub mod error;
pub mod fatpoints;
pub mod groebner;
pub mod ideals;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
