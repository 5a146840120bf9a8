//! High-precision evaluation of elliptic, theta and q-series quantities,
//! Ramanujan-type continued fractions and quotients, together with integer
//! relation search for recognizing algebraic values.

pub mod error;
pub mod algrec;
pub mod cfrac;
pub mod elliptic;
pub mod hyperq;
pub mod numerics;
pub mod qfunctions;
pub mod rquantity;

pub use error::{Error, Result};
pub use numerics::{Complex, Prec, Real};
