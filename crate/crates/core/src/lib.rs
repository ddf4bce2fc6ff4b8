//! Exact computations in mod-2 cohomology.
//!
//! This crate implements graded-commutative quotient polynomial algebras
//! over GF(2), total Steenrod squares extended multiplicatively from
//! per-generator rules, virtual bundles presented by their total
//! Stiefel-Whitney class, and a catalog of spaces and immersions with
//! pullback and Umkehr (Gysin) data. On top of that sit the verification
//! checks: the Thom formula `Sq^i(f_*(1)) = f_* w_i(nu_f)`, its
//! equivariant refinement through the internal operation
//! `P_l(a) = sum_i mu^(k-i) (x) Sq^i(a)`, the Whitney mod-2 cross-check,
//! and the standard axiom and Adem-relation sweeps.
//!
//! Everything is exact: coefficients live in GF(2), elements are finite
//! sets of normal-form monomials, and every identity is asserted as
//! literal equality of canonical forms. All values are immutable after
//! construction and all operations are pure, so independent checks can
//! run concurrently.
//!
//! The crate is `no_std`-compatible (it only needs `alloc`); the
//! companion CLI crate carries file formats and IO.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod builtin;
pub mod charclass;
pub mod f2poly;
mod gf2mat;
pub mod steenrod;
pub mod topology;
pub mod verify;

pub use f2poly::{GradedElement, Generator, RingPresentation};
