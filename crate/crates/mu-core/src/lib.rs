//! Sum-triple statistics over finite abelian groups.
//!
//! The central quantity is the triple count
//! `mu(A,B,C) = |{(a,b,c) in A x B x C : a = b + c}|` for subsets of a
//! finite abelian group `G = Z_{m1} x ... x Z_{mk}`, and its maximized
//! form `mu(A) = max_{|B|=|C|=k} mu(A,B,C)`. The crate provides:
//!
//! - [`group`]: group representation, mixed-radix element codec, arithmetic;
//! - [`fourier`]: the group Fourier transform under the expectation
//!   normalization `f^(t) = E[f * conj(chi_t)]`, convolution, and spectral
//!   summaries of indicator functions;
//! - [`counting`]: three independent routes to `mu(A,B,C)` that must agree
//!   exactly (direct enumeration, convolution, spectral sum);
//! - [`bounds`]: closed-form bound and reference curves for `mu` on random
//!   sets (main bound, Hayes coefficient bound, Kiltz / Alon / conjectured
//!   comparators);
//! - [`maximizer`]: exact brute-force and alternating best-response
//!   maximization of `mu(A,B,C)` over shores `B, C`;
//! - [`sample`]: seeded, reproducible random subset generation.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI live
//! in the companion `mu-lab` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod counting;
pub mod fourier;
pub mod group;
pub mod maximizer;
pub mod sample;

pub use counting::{MuResult, Route, Subset};
pub use fourier::{DenseFunction, Spectrum};
pub use group::{Element, GroupSpec};
pub use maximizer::MaximizeResult;
