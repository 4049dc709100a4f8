//! Exact arithmetic for Chebyshev polynomials evaluated at Fibonacci/Lucas
//! related arguments, and a catalog of closed-form identities checked over
//! finite parameter grids.

pub mod algebra;
pub mod chebyshev;
pub mod combinatorial;
pub mod identities;
pub mod sequences;

pub use algebra::{AlgebraError, Elem, Integer, Rational, Tower};
pub use chebyshev::{ChebError, EvenForm, Kind, Poly};
pub use sequences::SequenceError;
