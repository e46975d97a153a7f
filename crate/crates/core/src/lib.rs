//! Exact, desk-scale analysis of Boolean functions as real multilinear
//! polynomials.
//!
//! A function is a packed [`TruthTable`]; its unique multilinear
//! representation with integer coefficients ([`MultilinearPoly`]) drives
//! everything else: degree and relevant variables ([`poly`]), per-variable
//! dyadic weights and block sensitivity ([`measures`]), maxonomials and
//! exact minimum hitting sets ([`maxonomial`]), the extremal constructions
//! ([`construct`]), exhaustive small-arity search with canonical-form
//! reduction ([`search`]), and exact rational bound arithmetic
//! ([`bounds`]). All quantities are exact — integer coefficients, dyadic
//! weights, big rationals — so every inequality check is decidable.

pub mod bounds;
pub mod construct;
pub mod dyadic;
pub mod error;
pub mod maxonomial;
pub mod measures;
pub mod poly;
pub mod search;
pub mod table;

pub use construct::XiFunction;
pub use dyadic::DyadicRational;
pub use error::{Error, Result};
pub use maxonomial::{HittingSetResult, Lemma1Report, MaxonomialSet};
pub use measures::{ClaimCheck, WeightProfile};
pub use poly::MultilinearPoly;
pub use search::{ExtremalRecord, NpnClass};
pub use table::{PartialAssignment, TruthTable};
