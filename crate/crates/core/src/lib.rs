pub mod arith;
pub mod cli;
pub mod eisenstein;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod manin;
pub mod modlpoly;
pub mod poly;
pub mod qseries;
pub mod suite;
pub mod verify;

pub use error::{Error, Result};
