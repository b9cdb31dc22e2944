//! Exact arithmetic on divisor classes of the quartic del Pezzo surface.
//!
//! The surface in question is the plane blown up at five general points
//! (no three collinear), embedded in four-space by the cubics through the
//! points. Its divisor classes form the rank-6 lattice spanned by the
//! pullback of a plane line and the five exceptional curves. Everything
//! this crate computes lives in that lattice with plain machine integers:
//!
//! - [`lattice`]: the intersection pairing, degree, self-intersection,
//!   arithmetic genus and Euler characteristic of a class;
//! - [`lines`]: enumeration of the 16 lines on the surface and their
//!   incidence graph;
//! - [`weyl`]: the symmetry group generated by index permutations and
//!   quadratic transformations, and the re-marking algorithm that moves
//!   any five mutually skew lines into exceptional position;
//! - [`criteria`]: decision procedures for very-ampleness and for whether
//!   a class contains an irreducible curve.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! `delpezzo-cli` crate wraps it in a command-line tool with text, JSON,
//! CSV and DOT output.
//!
//! ```
//! use delpezzo::{DivisorClass, criteria};
//!
//! let h = DivisorClass::HYPERPLANE;
//! assert_eq!(h.degree(), 4);
//! assert_eq!(h.self_intersection(), 4);
//! assert!(criteria::is_very_ample(h));
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod criteria;
pub mod lattice;
pub mod lines;
pub mod weyl;

pub use criteria::{contains_irreducible, is_ample, is_very_ample, IrreducibleVerdict};
pub use lattice::{DivisorClass, ParseClassError};
pub use lines::{classify_line, enumerate_lines, IncidenceGraph, LineKind, NotALine};
pub use weyl::{blowdown_marking, group_closure, MarkingError, WeylGenerator, WeylWord};
