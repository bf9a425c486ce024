//! Evaluation codes on rational surfaces over small finite fields.
//!
//! The crate constructs three families of algebraic surfaces — an elliptic
//! quadric in P³, the plane blown up at one rational point and one point of
//! degree 4, and the plane blown up at a point of degree 3 — together with
//! the linear systems of curves that make their evaluation codes long for
//! their dimension and minimum distance.  It then computes or brackets the
//! [n, k, d] parameters: exact distances by exhaustive enumeration or an
//! information-set search with certified lower bounds, distance floors from
//! point-counting bounds on plane curves, and explicit maximal-curve
//! witnesses that pin distances from above.
//!
//! Start with [`code::build_construction`] to build one of the named code
//! families over a chosen field, or explore the layers directly:
//!
//! * [`field`] — arithmetic in F_{p^k} with canonical moduli,
//! * [`geometry`] — projective points, Frobenius orbits, plane curves,
//! * [`linsys`] — linear systems with base conditions on the three surfaces,
//! * [`bounds`] — rational-point bounds for curves on those surfaces,
//! * [`code`] — evaluation codes and their generator matrices,
//! * [`search`] — minimum-distance and maximal-curve searches,
//! * [`report`] — parameter reports against the published snapshot,
//! * [`cli`] — the `ratsurf` command-line front end.
//!
//! The `examples/` directory walks through each capability end to end; run
//! for instance `cargo run --release --example record_codes`.

pub mod bounds;
pub mod cli;
pub mod code;
pub mod error;
pub mod field;
pub mod geometry;
pub mod linsys;
pub mod matrix;
pub mod report;
pub mod search;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldRef};
