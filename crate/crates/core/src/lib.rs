//! Exact palindrome queries on prefixes of the infinite Fibonacci word
//! `abaababaabaab...`, the fixed point of `a -> ab`, `b -> a`.
//!
//! Every palindrome occurring in the word is addressed by a kernel index `m`
//! (the singular word `K_m` sitting in its middle) and an offset `i`. From
//! that coordinate system the crate derives ending positions of every
//! occurrence, the unique new palindrome ending at each index, and the
//! per-position and cumulative occurrence counts `A(n)` and `B(n)`, all in
//! time logarithmic in `n` and with no floating point.
//!
//! The [`oracle`] module holds independent brute-force ground truth
//! (a palindromic tree and naive scanners) that the closed forms are
//! checked against.

pub mod chain;
pub mod counting;
pub mod cylinder;
mod error;
pub mod fibword;
pub mod oracle;
pub mod singular;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
