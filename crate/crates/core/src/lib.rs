//! Exact enumeration of regular maps, hypermaps, dessins d'enfants and
//! regular surface coverings whose automorphism group is a Suzuki group
//! Sz(2^e).
//!
//! The crate is layered bottom-up:
//!
//! - [`field`]: GF(2^n) arithmetic and the twisted automorphism `theta`.
//! - [`group`]: the 4x4 matrix model of Sz(q) and its numeric invariants.
//! - [`tables`]: the subgroup classes carrying a non-zero Möbius value, with
//!   their element counts and character degrees, generated for any odd e.
//! - [`counting`]: character-sum homomorphism counts and Möbius inversion.
//! - [`census`]: closed-form counts, their inversion cross-checks, the
//!   regular-map type census, and surface-covering counts.
//! - [`oracle`]: brute-force materialization of small groups (G(1), Sz(8),
//!   S3) used as ground truth.
//!
//! Every count is an arbitrary-precision integer; nothing passes through
//! floating point.

pub mod arith;
pub mod census;
pub mod counting;
pub mod error;
pub mod field;
pub mod group;
pub mod oracle;
pub mod tables;

pub use arith::{classical_mobius, Count, Ratio};
pub use error::{Error, Result};
pub use field::{FieldContext, FieldElement};
pub use group::{GroupMatrix, SubgroupOrders, Suzuki};
