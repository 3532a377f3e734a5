//! Combinatorics of extended affine Weyl groups and the emptiness and
//! dimension predictions for affine Deligne-Lusztig varieties attached to basic
//! σ-conjugacy classes.
//!
//! Everything is exact integer arithmetic. Virtual dimensions are
//! half-integers, carried as [`HalfInt`].
//!
//! ```
//! use adlv_core::{AffineWeylGroup, BasicClassData, predict, Status};
//!
//! let g = AffineWeylGroup::new("A2".parse().unwrap());
//! let s0 = g.parse("s0").unwrap();
//! assert_eq!(g.length(&s0), 1);
//! let t = g.parse("t[1,1]").unwrap();
//! assert_eq!(predict(&g, &t, &BasicClassData::trivial(&g)).status, Status::Empty);
//! ```

pub mod affine_weyl;
pub mod demazure;
pub mod enumerate;
pub mod error;
pub mod finite_weyl;
pub mod halfint;
pub mod parse;
pub mod predict;
pub mod reduction;
pub mod root_system;
pub mod verify;

pub use affine_weyl::{AffineElt, AffineRoot, AffineWeylGroup, CanonicalDecomposition, Kappa, Positivity};
pub use error::{Error, Result};
pub use finite_weyl::{Side, WeylElt, WeylGroup};
pub use halfint::{DimBound, HalfInt};
pub use predict::{predict, BasicClassData, Prediction, PredictionFlags, Status};

pub use root_system::{CartanType, Coweight, Family, NodeSet, Root, RootIdx, RootSystem};
