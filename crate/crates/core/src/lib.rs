//! Exact split-octonion algebra, the rolling-ball incidence geometry it
//! carries, and the quantization maps that recover the cross product.
//!
//! Layout:
//! - [`scalar`], [`quaternion`], [`octonion`]: the algebra, generic over
//!   rationals, Gaussian rationals, and `f64`.
//! - [`linalg`]: exact Gauss-Jordan elimination with deterministic pivoting.
//! - [`incidence`]: projectivized null cone, lines, roll distance, midpoints.
//! - [`triples`]: null triples, apartments, hexagon laws, and explicit
//!   automorphism matrices (torsor construction, transport between orbits).
//! - [`kinematics`]: floating-point rolling of a ball on a ball for an
//!   arbitrary radius ratio; the ratio-3 coincidence checks.
//! - [`quantization`]: sections over the null cone, the induced bilinear
//!   forms, and the adjoint that recovers the cross product.
//! - [`sampling`]: seeded generators of exact random nulls, pairs, triples,
//!   and automorphisms.
//! - [`verify`]: seeded verification suites with machine-readable reports.

pub mod error;
pub mod incidence;
pub mod json;
pub mod kinematics;
pub mod linalg;
pub mod octonion;
pub mod par;
pub mod quantization;
pub mod quaternion;
pub mod sampling;
pub mod scalar;
pub mod triples;
pub mod verify;

pub use error::{GeomError, TripleViolation};
pub use incidence::{
    annihilator, classify_pair, midpoint, roll_distance, LineSubalgebra, OrbitClass, PcPoint,
    RollDistance,
};
pub use octonion::{associator, Imaginary, SplitOctonion};
pub use quaternion::Quaternion;
pub use scalar::{CRat, Rat, Scalar};
pub use triples::{
    apartment_basis, complete_pair, extend_config, g2_from_triples, hexagon_check,
    pair_transporter, validate_triple, ApartmentBasis, Extension, G2Element, NullTriple,
};
