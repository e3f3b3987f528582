//! Exact computations for the Virasoro algebra at central charge `c_{p,q}`.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod fock;
pub mod fusion;
pub mod intertwiner;
pub mod kactable;
pub mod verma;

pub use error::{Error, Result};
