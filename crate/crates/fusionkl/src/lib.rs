//! Exact computations in the Kazhdan-Lusztig category of affine sl2 at an
//! admissible level `k = -2 + p/q` and in the tilting-module category of
//! quantum sl2 at `zeta = exp(pi*i*q/p)`.
//!
//! The crate is organized around the objects that appear on the two sides of
//! the correspondence:
//!
//! * [`level`] — admissible-level arithmetic: conformal weights, the Z/2
//!   parity grading, the cocycle sign, and the classification of levels up to
//!   braided equivalence.
//! * [`cyclotomic`] — exact arithmetic in `Q(zeta_{4p})`, the field housing
//!   every scalar the categories produce (twists, braiding coefficients, loop
//!   values, quantum integers).
//! * [`klcat`] — the affine side: canonical indecomposable labels, their
//!   composition series and Loewy layers, contragredients, logarithmic flags,
//!   and the tensor-product rules including the greedy decomposition of
//!   products of projectives.
//! * [`qgroup`] — the quantum side: simple, Weyl, tilting, and projective
//!   labels, closed forms for tensoring with the standard object, and the
//!   greedy decomposition of tilting tensor products.
//! * [`klfunctor`] — the weak Kazhdan-Lusztig functor relating the two sides
//!   on objects and Grothendieck vectors.
//! * [`tlskein`] — the Temperley-Lieb diagram calculus at loop value
//!   `-zeta - zeta^{-1}`: Jones-Wenzl projectors, braiding elements, Markov
//!   traces, and the skein identities behind rigidity.
//! * [`kzverify`] — floating-point verification of the hypergeometric
//!   solutions of the relevant Knizhnik-Zamolodchikov equations and of the
//!   connection constant `-1/cos(pi*q/p)`.
//!
//! Everything outside [`kzverify`] is exact: scalars live in a cyclotomic
//! field represented over the rationals, and equality tests are canonical.
//!
//! The `fusionkl` binary is a thin front end over [`cli`]; the crate's
//! `examples/` directory contains one runnable example per capability.

#![allow(clippy::manual_is_multiple_of, clippy::int_plus_one)]

pub mod acceptance;
pub mod cli;
pub mod cyclotomic;
pub mod klcat;
pub mod klfunctor;
pub mod kzverify;
pub mod level;
pub mod qgroup;
pub mod tlskein;

pub use cyclotomic::CycNumber;
pub use klcat::{GrVector, KLKind, KLLabel, KLObject, LoewyData};
pub use level::{BraidingVariant, Flavor, Level, TwistSign};
pub use qgroup::{QKind, QLabel, QObject};
pub use tlskein::{TLDiagram, TLElement};
