//! Trace codes over the chain ring `R = F_q + uF_q`, `u^2 = 0`, and their exact
//! Lee weight distributions.
//!
//! For a prime power `q = p^s`, an extension degree `m` (write `r = q^m`) and a
//! divisor `e` of `q - 1`, the code `C_q(m, e)` of length `n = (r^2 - r)/e` over
//! `R` is the image of the evaluation map `a -> (Tr(ax))_{x in L}` on the
//! defining set `L = C_0^{(e,r)} + uF_r`, where `C_0^{(e,r)}` is the cyclotomic
//! class of order `e` and `Tr` is the ring trace down to `R`. Its Gray image is
//! an `F_q`-linear code of length `2n` and dimension `2m` with very few Lee
//! weights.
//!
//! The crate computes these weight distributions along two independent routes
//! and cross-validates them:
//!
//! * [`code`]: honest brute force, evaluating every codeword coordinate by
//!   coordinate and histogram the Lee weights;
//! * [`theory`]: closed forms. The weight of a codeword depends only on its
//!   stratum (zero / unit / nilpotent by cyclotomic class), and the nilpotent
//!   weights are affine in the Gaussian periods of order `gcd(e, m)`, which
//!   [`cyclotomy`] computes exactly in `Z[zeta_p]`.
//!
//! Supporting layers: [`gf`] builds deterministic finite fields with discrete
//! log tables, [`ring`] implements `F_r + uF_r`, and [`spectrum`] holds the
//! distribution and report types shared by both routes.

#![forbid(unsafe_code)]

pub mod arith;
pub mod code;
pub mod cyclotomy;
pub mod error;
pub mod gf;
pub mod ring;
pub mod spectrum;
pub mod theory;

pub use code::{CodeEvaluator, CodeSpec, Stratum, DEFAULT_WORK_BUDGET};
pub use error::{Error, Result};
pub use gf::{Fel, Field, DEFAULT_SIZE_BOUND};
pub use ring::{Ring, RingElement};
pub use spectrum::{SpectrumReport, WeightDistribution};
