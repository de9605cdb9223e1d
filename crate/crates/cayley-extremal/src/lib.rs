//! Distance metrics of Cayley digraphs of finite Abelian groups, and
//! searches for the largest group orders attainable at a given degree and
//! diameter.
//!
//! The crate is organized in layers:
//!
//! - [`group`]: finite Abelian groups in invariant-factor form, coordinate
//!   arithmetic, canonicalization of direct-product presentations, and
//!   enumeration of all Abelian groups of a given order.
//! - [`metrics`]: BFS-based distance profiles of `Cay(G, A)` — diameter,
//!   farthest vertices, exact average distance, and shortest-path
//!   certificates.
//! - [`extremal`]: closed-form values and exhaustive searches for the
//!   largest cyclic / Abelian group orders achievable with a given degree
//!   and diameter, plus the quadratic witness family that attains them.
//! - [`report`]: verification suites and serialization for the CLI.

pub mod error;
pub mod extremal;
pub mod group;
pub mod metrics;
pub mod report;

pub use error::{Error, Result};
pub use group::{enumerate_abelian_groups, AbelianGroup, CanonicalMap, GroupElement, GroupSpec};
pub use metrics::{
    average_distance, bfs_profile, certify_distance, diameter, farthest_set, is_generating,
    DistanceCertificate, DistanceProfile, GeneratingSet,
};
