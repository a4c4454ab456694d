//! Squares, double squares and inversion factors in finite words.
//!
//! Everything in this crate is a pure function of its inputs and only needs
//! `alloc`. Positions in the public API are 1-based and inclusive; slices and
//! internal loops are 0-based and convert exactly once at the boundary.
//!
//! The modules build on each other bottom-up:
//!
//! * [`word`]: the [`Word`] type, primitive roots, conjugacy, lcp/lcs.
//! * [`squares`]: square occurrences and the rightmost-occurrence table.
//! * [`doublesq`]: FS-double squares and their canonical factorization.
//! * [`inversion`]: inversion-factor positions and intervals.
//! * [`mates`]: gap/tail arithmetic and the mate classification.
//! * [`families`]: the family of the first double square and its segments.
//! * [`bounds`]: counting bounds and the extremal `sigma` search.
//! * [`properties`]: named properties checked word by word by exhaustive runs.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod canonical;
pub mod construct;
pub mod doublesq;
mod error;
pub mod families;
pub mod inversion;
pub mod mates;
pub mod properties;
pub mod squares;
pub mod word;

pub use error::{Error, Result};
pub use word::{Factor, Word};
