//! Flag curvature of invariant Randers metrics on reductive homogeneous
//! spaces, computed from Lie-algebra data.
//!
//! A homogeneous space is described purely infinitesimally: structure
//! constants over a basis adapted to a splitting `g = h ⊕ m`, an inner
//! product on `m`, and an optional drift vector `X ∈ m` defining the
//! Randers norm `F(y) = √g(y,y) + g(X,y)`.
//!
//! The crate evaluates three flag-curvature routes side by side:
//!
//! * the closed-form expression for naturally reductive spaces with a
//!   parallel drift field ([`randers::flag_curvature_thm42`]), in both an
//!   oracle-consistent and a literal published variant;
//! * an independent assembly from the Koszul Levi-Civita connection and a
//!   finite-difference fundamental tensor
//!   ([`randers::flag_curvature_assembled`]), available on Lie groups
//!   (`h = 0`);
//! * the refuted Deng–Hou formula ([`randers::flag_curvature_denghou`]),
//!   kept verbatim and labeled known-incorrect — it predicts zero curvature
//!   for every Lie group, which [`spaces::run_counterexample`] refutes.

pub mod error;
pub mod lie;
pub mod randers;
pub mod riemann;
pub mod spaces;

pub use error::Error;
pub use lie::{DriftVector, LieAlgebraSpec, ReductiveSpace};
pub use randers::{CurvatureReport, Flag, RandersSpec};
