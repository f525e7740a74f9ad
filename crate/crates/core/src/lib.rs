//! Certification toolkit for convexity with respect to power (Hölder) means.
//!
//! The crate has two layers:
//!
//! * A floating-point layer for power means and the `(p,q)`-midpoint-convexity
//!   gap machinery: [`means`], [`conjugate`], [`regularity`]. A function `f` is
//!   `(p,q)`-Jensen convex when `f(H_p(x,y)) <= H_q(f(x),f(y))` for all `x,y`;
//!   every probe here reports the signed gap `H_q(f(x),f(y)) - f(H_p(x,y))`.
//! * An exact layer for the rational function field `Q(t1,..,tn)`: [`field`]
//!   and [`poly`] implement canonical-form arithmetic, [`derivation`] the
//!   Leibniz-rule maps `d` with `d(ti)` prescribed, and [`pathological`] the
//!   multiplicative functions `x^a * exp(d(x)/x)` built from them. These
//!   functions are midpoint convex for whole families of power-mean parameters
//!   yet discontinuous, which is what the probes demonstrate at desk scale.
//!
//! High-precision evaluation (default 50 decimal digits) lives in
//! [`bigfloat`]; deterministic seeded sampling in [`sampling`]; structured
//! probe output in [`report`].

pub mod bigfloat;
pub mod conjugate;
pub mod derivation;
pub mod field;
pub mod fixtures;
pub mod means;
pub mod parse;
pub mod pathological;
pub mod poly;
pub mod rational;
pub mod regularity;
pub mod report;
pub mod sampling;

mod error;

pub use error::{Error, Result};
pub use field::{FormalElement, NumericAssignment};
pub use rational::Rational;
pub use report::ProbeReport;
