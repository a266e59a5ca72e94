//! Exact construction of the helix-faced chiral and regular apeirohedra
//! `P₁(a,b)`, `P₂(c,d)`, `P₃(c,d)` and their relatives from explicit
//! generating isometries.

pub mod analysis;
pub mod error;
pub mod export;
pub mod geometry;
pub mod group;
pub mod mixing;
pub mod verify;
pub mod wythoff;

pub use error::{Error, Result};
