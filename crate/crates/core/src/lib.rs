//! Exact computations with separable rational self-maps of the projective
//! line over finite fields: ramification profiles, first-order deformations
//! with prescribed ramification, moduli counts over field towers, and
//! transfers between wildly and tamely ramified maps.

pub mod deform;
pub mod dual;
pub mod error;
pub mod field;
pub mod linalg;
pub mod moduli;
pub mod poly;
pub mod ramify;
pub mod wildtame;

pub use dual::DualNumber;
pub use error::{Error, Result};
pub use field::{Fe, Field, FieldOps};
pub use poly::{Mobius, PointP1, Poly, RatMap};
