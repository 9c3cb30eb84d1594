//! Polynomial solutions over F_p of the hyperelliptic KZ equations, Cartier-Manin
//! matrices of hyperelliptic curves, and the mod-p decomposition of the Taylor
//! coefficients of the distinguished hyperelliptic-integral solution.

pub mod arith;
pub mod cartier;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod kz;
pub mod poly;
pub mod solutions;

pub use arith::{DyadicRational, PrimeContext, PrimeField};
pub use error::{Error, Result};
pub use poly::{DyadicRing, Homogeneity, IntegerRing, Ring, SparsePoly, VectorPoly};
