//! Exact symbolic engine for the A2 spider: directed trivalent webs for
//! U_q(sl3) over Q(q^(1/6)), their reduction to non-elliptic normal form,
//! clasps (the A2 analogues of symmetrizing idempotents), braidings, and the two-variable
//! A2 Chebyshev recursion with its split-sum witnesses.
//!
//! Composition is written "first then second": `a.then(&b)` stacks `b` on top
//! of `a`, so the domain of `a` sits at the bottom.

pub mod braiding;
pub mod clasp;
pub mod error;
pub mod grothendieck;
pub mod rational;
pub mod report;
pub mod rewrite;
pub mod scalar;
pub mod suites;
pub mod web;

pub use error::{Error, Result};
pub use rewrite::Morphism;
pub use scalar::{qbinom, qint, LaurentPoly, RingScalar};
pub use web::{CanonicalKey, Orientation, Sign, SignSeq, VertexKind, WebDiagram};
