//! Exact arithmetic for truncated Witt vector rings relative to principal
//! prime ideals: p-typical over ℤ, ramified over `F_p[t]`, multi-prime by
//! composition, and big Witt vectors on rectangular truncation sets.

pub mod delta;
pub mod descent;
pub mod error;
pub mod multi;
pub mod presentations;
pub mod report;
pub mod selftest;
pub mod rings;
pub mod witt;

pub use error::{Result, WittError};
pub use rings::{Algebra, BaseRing, Elem, Ring};
pub use witt::{GhostVector, OpKind, Strategy, WittContext, WittRing, WittVector};
