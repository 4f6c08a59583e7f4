//! Exact arithmetic for constructing Salem and Pisot numbers of any prescribed
//! trace, together with certification of the results.
//!
//! The construction sums functions `q_i/p_i` of circularly interlacing
//! polynomial pairs, feeds the reduced quotient through a Salem or Pisot
//! combinator, and certifies the output by exact root counting (Sturm chains
//! on the trace transform, a Cauchy-index count inside the unit disk) plus a
//! gcd sieve for cyclotomic factors. Everything is integer or rational
//! arithmetic; real quantities are returned as dyadic-bounded intervals.
//!
//! The crate is `no_std` (alloc required); IO, file formats and the CLI live
//! in the companion crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod certify;
pub mod construct;
pub mod cyclo;
pub mod dyadic;
pub mod interlace;
pub mod poly;
pub mod primes;

mod modp;
