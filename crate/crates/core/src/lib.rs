//! Adinkras, their signed adjacency and Laplacian matrices, and Smith normal
//! forms over the integers and over `Fp[x]`.

pub mod adinkra;
pub mod analysis;
pub mod codes;
pub mod error;
pub mod exactmat;
pub mod limits;
pub mod snf;

pub use adinkra::{Adinkra, ColoredGraph};
pub use codes::{standard_code, BinaryCode, BitVector, Gf2Matrix};
pub use error::{Error, Result};
