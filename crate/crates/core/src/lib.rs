//! Burrows-Wheeler transform run counts and the classification of binary
//! morphisms by how they affect them.
//!
//! Everything here is `no_std` with `alloc`; IO and the command line live in
//! the `bwtrun` crate.

#![no_std]

extern crate alloc;

pub mod bwt;
pub mod error;
pub mod morphism;
pub mod necklace;
pub mod primitivity;
pub mod sensitivity;
pub mod sync;
pub mod word;

pub use bwt::{bwt, bwt_of_power, inverse_bwt, run_count, BwtOutput};
pub use error::{Error, Result};
pub use morphism::{compose, compose_all, BifixStatus, Elementary, Morphism, OrderClass};
pub use necklace::{enumerate_lyndon, enumerate_necklaces, Necklace, Necklaces};
pub use word::{
    canonical_rotation, circular_factors, commute, is_primitive, lcp_lcs, primitive_root, rle,
    rotations, Alphabet, PrimitiveRoot, RunLength, Symbol, Word,
};
