//! Length, depth and chain difference of compact connected Lie groups.
//!
//! Groups are handled up to isogeny as [`GroupType`] values: a torus rank plus a
//! multiset of simple factors. The crate provides
//!
//! * closed formulas for length and depth ([`formulas`]),
//! * a database of maximal connected subgroups ([`subgroups`]),
//! * explicit unrefinable chains and a chain verifier ([`chains`]),
//! * a memoized brute-force oracle that recomputes length and depth from the
//!   subgroup database alone ([`oracle`]),
//! * theorem-checking suites over bounded enumerations ([`suites`]).

pub mod chains;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod group;
pub mod oracle;
pub mod parse;
pub mod subgroups;
pub mod suites;
pub mod surd;

pub use chains::{max_chain, min_chain, verify_chain, Chain, Overall, VerifyReport};
pub use error::{Error, Result};
pub use formulas::{
    chain_difference, depth, depth_simple, length, BoundsOrExact, CheckReport, Constants,
};
pub use group::{canonicalize, Dims, Family, GroupType, RawGroup, SimpleType};
pub use oracle::Oracle;
pub use parse::parse_group;
pub use subgroups::{
    is_maximal_step, maximal_connected, maximal_connected_simple, min_irrep_dim, Completeness,
    EmbeddingKind, MaximalEntry, Verdict,
};
pub use surd::Surd;
