//! Reflection-symmetry measures of plane convex polygons.
//!
//! The crate is organised around [`ConvexPolygon`], a normalized
//! counterclockwise vertex list. On top of the planar primitives in
//! [`geom`] sit three measure engines ([`measures`]): axiality (overlap
//! with a mirror image across a line), central symmetry (overlap with a
//! point reflection) and folding symmetry (largest cap that folds back
//! into the body). [`constructions`] holds the extremal shape families
//! and constructive lemmas, [`certificates`] verifies the linear
//! programming lower bound for axiality in exact `Q(√2)` arithmetic, and
//! [`search`] runs simulated annealing for low-axiality polygons.

pub mod certificates;
pub mod constructions;
mod error;
pub mod geom;
mod golden;
pub mod io;
pub mod measures;
pub mod search;
pub mod suite;
pub mod svg;

pub use error::{Error, Result};
pub use geom::{ConvexPolygon, HalfPlane, LineSpec, Point};
pub use measures::{MeasureKind, MeasureOptions, SymmetryReport};
