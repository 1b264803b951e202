//! Balanced bases of globally generated holomorphic bundles over discretized
//! Kähler manifolds, with first-eigenvalue upper bounds and Gieseker-point
//! stability tests.
//!
//! The crate is organized around the pipeline
//!
//! 1. [`quadrature`] — discretize the base manifold (CP¹, CPⁿ, G(r,N)) into
//!    sample points with weights approximating `∫ · ωⁿ/n!`.
//! 2. [`bundle`] — present a globally generated bundle by per-point Stiefel
//!    matrices `A(x)` of section values, i.e. by its Kodaira map into a
//!    Grassmannian.
//! 3. [`balance`] — find a basis of sections whose integrated moment map
//!    vanishes (an ω-balanced basis), either by Gram fixed-point iteration or
//!    by Kempf–Ness gradient descent.
//! 4. [`spectral`] — evaluate the λ₁ upper bound attached to a balanced
//!    embedding, verify the two integral identities behind it, and compare
//!    against directly computed eigenvalue data on CP¹.
//! 5. [`stability`] — build the Gieseker tensor `ΛʳH⁰(E) → H⁰(det E)` and run
//!    one-parameter-subgroup limit tests on it.
//!
//! [`grassmann`] holds the exact linear-algebra kernel (moment map, Plücker
//! coordinates, Fubini–Study data) everything else is built on.

pub mod balance;
pub mod bundle;
pub mod error;
pub mod fd;
pub mod grassmann;
pub mod indexing;
pub mod quadrature;
pub mod spectral;
pub mod stability;

pub use error::{Error, Result};
