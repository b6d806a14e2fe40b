pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrices;
pub mod spectra;
pub mod theorems;

pub use error::{Error, Result};
