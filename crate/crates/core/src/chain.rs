//! Occurrence positions of kernels and palindromes.
//!
//! The `p`-th occurrence of `K_m` ends at `P(K_m, p) = p·f_{m+1} + (⌊φp⌋+1)·f_m − 1`.
//! A palindrome `(m, i)` shares its kernel's occurrence index, so its `p`-th
//! occurrence ends `f_{m+1} − i` letters later. Over `1 ≤ i ≤ f_{m+1}` these
//! endings fill the interval `⟨K_m, p⟩`; for `p = 1` the intervals are
//! consecutive in `m` and partition the positive integers.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cylinder::PalCoord;
use crate::error::{domain, Result};
use crate::fibword::{fib, fib_u64, floor_phi, floor_phi_u64, FibTable};

/// First and last letter positions of one occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccurrenceSpan {
    pub start: BigUint,
    pub end: BigUint,
}

impl OccurrenceSpan {
    pub fn length(&self) -> BigUint {
        &self.end + 1u32 - &self.start
    }
}

/// The interval `⟨K_m, p⟩` of ending positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainInterval {
    pub m: i32,
    pub p: BigUint,
    pub lo: BigUint,
    pub hi: BigUint,
}

impl ChainInterval {
    /// Number of positions; always `f_{m+1}`.
    pub fn size(&self) -> BigUint {
        &self.hi + 1u32 - &self.lo
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        &self.lo <= n && n <= &self.hi
    }
}

impl fmt::Display for ChainInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<K_{},{}> = {{{}..{}}}", self.m, self.p, self.lo, self.hi)
    }
}

fn check_mp(m: i32, p: &BigUint) -> Result<()> {
    if m < -1 {
        return Err(domain(format!("kernel index must be >= -1, got {m}")));
    }
    if p.is_zero() {
        return Err(domain("occurrence index p must be >= 1"));
    }
    Ok(())
}

/// `P(K_m, p)`.
pub fn end_pos_kernel(m: i32, p: &BigUint) -> Result<BigUint> {
    check_mp(m, p)?;
    let fp = floor_phi(p);
    Ok(p * fib(m + 1)? + (fp + 1u32) * fib(m)? - 1u32)
}

/// `L(K_m, p) = p·f_{m+1} + ⌊φp⌋·f_m`.
pub fn start_pos_kernel(m: i32, p: &BigUint) -> Result<BigUint> {
    check_mp(m, p)?;
    Ok(p * fib(m + 1)? + floor_phi(p) * fib(m)?)
}

/// Machine-width `P(K_m, p)`; `None` on invalid input or overflow.
pub fn end_pos_kernel_u64(m: i32, p: u64) -> Option<u64> {
    if m < -1 || p == 0 {
        return None;
    }
    let a = p.checked_mul(fib_u64(m + 1)?)?;
    let b = (floor_phi_u64(p) + 1).checked_mul(fib_u64(m)?)?;
    a.checked_add(b).map(|s| s - 1)
}

/// `P(a, p) = p + ⌊φp⌋`.
pub fn end_pos_a(p: &BigUint) -> BigUint {
    p + floor_phi(p)
}

/// `P(b, p) = 2p + ⌊φp⌋`.
pub fn end_pos_b(p: &BigUint) -> BigUint {
    p * 2u32 + floor_phi(p)
}

/// `P(ω, p)` for the palindrome at `c`.
pub fn end_pos_pal(c: &PalCoord, p: &BigUint) -> Result<BigUint> {
    c.validate()?;
    Ok(end_pos_kernel(c.m, p)? + fib(c.m + 1)? - &c.i)
}

pub fn span_pal(c: &PalCoord, p: &BigUint) -> Result<OccurrenceSpan> {
    let end = end_pos_pal(c, p)?;
    let start = &end + 1u32 - c.length();
    Ok(OccurrenceSpan { start, end })
}

/// Machine-width `P(ω, p)` for coordinates `(m, i)`.
pub fn end_pos_pal_u64(m: i32, i: u64, p: u64) -> Option<u64> {
    let upper = fib_u64(m + 1)?;
    if i == 0 || i > upper {
        return None;
    }
    end_pos_kernel_u64(m, p)?.checked_add(upper - i)
}

/// `⟨K_m, p⟩`.
pub fn chain_interval(m: i32, p: &BigUint) -> Result<ChainInterval> {
    let lo = end_pos_kernel(m, p)?;
    let hi = &lo + fib(m + 1)? - 1u32;
    Ok(ChainInterval { m, p: p.clone(), lo, hi })
}

/// Machine-width `(min, max)` of `⟨K_m, p⟩`.
pub fn chain_interval_u64(m: i32, p: u64) -> Option<(u64, u64)> {
    let lo = end_pos_kernel_u64(m, p)?;
    Some((lo, lo.checked_add(fib_u64(m + 1)? - 1)?))
}

/// The unique palindrome whose first occurrence ends at `n`.
pub fn new_pal_at(n: &BigUint) -> Result<PalCoord> {
    if n.is_zero() {
        return Err(domain("positions are 1-based"));
    }
    let mut table = FibTable::new();
    let k = table.index_at_most(&(n + 1u32)).expect("n + 1 >= 2");
    let m = k - 2;
    let host = table.get(m + 3).clone();
    let i = host - 1u32 - n;
    debug_assert!(i >= BigUint::one() && &i <= table.get(m + 1));
    Ok(PalCoord { m, i })
}

/// Machine-width [`new_pal_at`], returning `(m, i)`.
pub fn new_pal_at_u64(n: u64) -> Option<(i32, u64)> {
    if n == 0 {
        return None;
    }
    let mut m = -1;
    // ⟨K_m, 1⟩ = {f_{m+2} − 1, …, f_{m+3} − 2}
    while fib_u64(m + 3)? - 2 < n {
        m += 1;
    }
    let i = fib_u64(m + 3)? - 1 - n;
    debug_assert!(i >= 1 && i <= fib_u64(m + 1)?);
    Some((m, i))
}

/// Number of distinct nonempty palindromic factors of `𝔽[1, n]`, which is `n`.
pub fn distinct_count(n: &BigUint) -> Result<BigUint> {
    if n.is_zero() {
        return Err(domain("positions are 1-based"));
    }
    Ok(n.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn kernel_end_examples() {
        assert_eq!(end_pos_kernel(-1, &big(3)).unwrap(), big(4));
        assert_eq!(end_pos_kernel(2, &big(3)).unwrap(), big(20));
        for m in -1..30 {
            assert_eq!(end_pos_kernel(m, &big(1)).unwrap(), fib(m + 2).unwrap() - 1u32);
        }
        assert!(end_pos_kernel(-2, &big(1)).is_err());
        assert!(end_pos_kernel(0, &big(0)).is_err());
    }

    #[test]
    fn letter_endings_match_kernel_positions() {
        for p in 1..500u64 {
            let bp = big(p);
            assert_eq!(end_pos_kernel(-1, &bp).unwrap(), end_pos_a(&bp));
            assert_eq!(end_pos_kernel(0, &bp).unwrap(), end_pos_b(&bp));
            let aa = 3 * p + 2 * floor_phi_u64(p) + 1;
            assert_eq!(end_pos_kernel(1, &bp).unwrap(), big(aa));
        }
    }

    #[test]
    fn pal_end_examples() {
        let c = PalCoord::new(2, 4u32).unwrap();
        assert_eq!(end_pos_pal(&c, &big(1)).unwrap(), big(8));
        let c = PalCoord::new(4, 12u32).unwrap();
        assert_eq!(end_pos_pal(&c, &big(1)).unwrap(), big(21));
        let span = span_pal(&c, &big(1)).unwrap();
        assert_eq!(span.start, big(12));
        assert_eq!(span.length(), big(10));
        let a = PalCoord::new(-1, 1u32).unwrap();
        for p in 1..100u64 {
            assert_eq!(end_pos_pal(&a, &big(p)).unwrap(), big(p + floor_phi_u64(p)));
        }
    }

    #[test]
    fn interval_examples() {
        let iv = chain_interval(4, &big(1)).unwrap();
        assert_eq!((iv.lo.clone(), iv.hi.clone()), (big(20), big(32)));
        let iv = chain_interval(2, &big(3)).unwrap();
        assert_eq!((iv.lo.clone(), iv.hi.clone()), (big(20), big(24)));
        let iv = chain_interval(-1, &big(1)).unwrap();
        assert_eq!((iv.lo.clone(), iv.hi.clone()), (big(1), big(1)));
        for m in -1..12 {
            for p in 1..40u64 {
                let iv = chain_interval(m, &big(p)).unwrap();
                assert_eq!(iv.size(), fib(m + 1).unwrap());
                let expect_hi = big(p + 1) * fib(m + 1).unwrap()
                    + big(floor_phi_u64(p) + 1) * fib(m).unwrap()
                    - 2u32;
                assert_eq!(iv.hi, expect_hi);
            }
        }
    }

    #[test]
    fn new_pal_examples() {
        assert_eq!(new_pal_at(&big(1)).unwrap(), PalCoord::new(-1, 1u32).unwrap());
        assert_eq!(new_pal_at(&big(8)).unwrap(), PalCoord::new(2, 4u32).unwrap());
        assert_eq!(new_pal_at(&big(21)).unwrap(), PalCoord::new(4, 12u32).unwrap());
        assert!(new_pal_at(&big(0)).is_err());
        assert_eq!(distinct_count(&big(3)).unwrap(), big(3));
        assert!(distinct_count(&big(0)).is_err());
    }

    #[test]
    fn u64_paths_match_big() {
        for m in -1..20 {
            for p in 1..60u64 {
                assert_eq!(
                    end_pos_kernel_u64(m, p).map(big),
                    Some(end_pos_kernel(m, &big(p)).unwrap())
                );
            }
        }
        for n in 1..5000u64 {
            let c = new_pal_at(&big(n)).unwrap();
            assert_eq!(new_pal_at_u64(n), Some((c.m, c.i.to_u64().unwrap())));
        }
        assert_eq!(end_pos_kernel_u64(90, u64::MAX / 2), None);
    }

    #[test]
    fn new_pal_at_large_n_stays_in_range() {
        let n = BigUint::from(10u32).pow(40);
        let c = new_pal_at(&n).unwrap();
        c.validate().unwrap();
        assert_eq!(end_pos_pal(&c, &big(1)).unwrap(), n);
    }
}
