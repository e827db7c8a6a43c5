//! Letters, prefixes and integer arithmetic of the Fibonacci word.
//!
//! Positions are 1-based. `⌊φp⌋` with `φ = (√5 − 1)/2` is computed exactly as
//! `(isqrt(5p²) − p) / 2`; `√5·p` is irrational for `p ≥ 1`, so the integer
//! square root carries all the information the floor needs.

use std::cell::Cell;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

/// Default materialization cap, in letters.
pub const DEFAULT_MAX_MATERIALIZE: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_MAX_MATERIALIZE`].
pub const MAX_MATERIALIZE_ENV: &str = "FIBPAL_MAX_MATERIALIZE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_byte(self) -> u8 {
        match self {
            Letter::A => b'a',
            Letter::B => b'b',
        }
    }

    pub fn from_byte(b: u8) -> Option<Letter> {
        match b {
            b'a' => Some(Letter::A),
            b'b' => Some(Letter::B),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_byte() as char)
    }
}

/// Parses a word over `{a, b}`.
pub fn parse_word(s: &str) -> Result<Vec<u8>> {
    if let Some(c) = s.chars().find(|c| *c != 'a' && *c != 'b') {
        return Err(domain(format!("letter {c:?} is not in the alphabet {{a, b}}")));
    }
    Ok(s.as_bytes().to_vec())
}

pub fn is_palindrome(w: &[u8]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// Renders a word for display; the empty word prints as `ε`.
pub fn show(w: &[u8]) -> String {
    if w.is_empty() {
        "ε".to_owned()
    } else {
        String::from_utf8_lossy(w).into_owned()
    }
}

/// Memoized Fibonacci numbers `f_m` for `m ≥ −1`, with `f_{−1} = f_0 = 1`.
#[derive(Debug, Clone)]
pub struct FibTable {
    // values[k] = f_{k-1}
    values: Vec<BigUint>,
}

impl Default for FibTable {
    fn default() -> Self {
        Self::new()
    }
}

impl FibTable {
    pub fn new() -> Self {
        FibTable { values: vec![BigUint::one(), BigUint::one()] }
    }

    /// Grows the table so that `f_m` is cached.
    pub fn ensure(&mut self, m: i32) {
        debug_assert!(m >= -1);
        let want = (m + 2).max(0) as usize;
        while self.values.len() < want {
            let k = self.values.len();
            let next = &self.values[k - 1] + &self.values[k - 2];
            self.values.push(next);
        }
    }

    /// Largest cached index.
    pub fn max_index(&self) -> i32 {
        self.values.len() as i32 - 2
    }

    /// Returns `f_m`, growing the table as needed.
    pub fn get(&mut self, m: i32) -> &BigUint {
        assert!(m >= -1, "fib index {m} < -1");
        self.ensure(m);
        &self.values[(m + 1) as usize]
    }

    /// Returns `f_m` if it is already cached.
    pub fn cached(&self, m: i32) -> Option<&BigUint> {
        if m < -1 {
            return None;
        }
        self.values.get((m + 1) as usize)
    }

    /// Largest `m ≥ 0` with `f_m ≤ n`; `None` when `n = 0`.
    pub fn index_at_most(&mut self, n: &BigUint) -> Option<i32> {
        if n.is_zero() {
            return None;
        }
        let mut m = 0;
        while self.get(m + 1) <= n {
            m += 1;
        }
        Some(m)
    }
}

fn global_table() -> &'static RwLock<FibTable> {
    static TABLE: OnceLock<RwLock<FibTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(FibTable::new()))
}

/// `f_m`, exact for any `m ≥ −1`.
pub fn fib(m: i32) -> Result<BigUint> {
    if m < -1 {
        return Err(domain(format!("fib index must be >= -1, got {m}")));
    }
    {
        let table = global_table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.cached(m) {
            return Ok(v.clone());
        }
    }
    let mut table = global_table().write().unwrap_or_else(|e| e.into_inner());
    Ok(table.get(m).clone())
}

const FIB_U64_LEN: usize = 93;

const FIB_U64: [u64; FIB_U64_LEN] = {
    let mut t = [0u64; FIB_U64_LEN];
    t[0] = 1;
    t[1] = 1;
    let mut k = 2;
    while k < FIB_U64_LEN {
        t[k] = t[k - 1] + t[k - 2];
        k += 1;
    }
    t
};

/// `f_m` when it fits in a `u64` (`m ≤ 91`).
pub fn fib_u64(m: i32) -> Option<u64> {
    if m < -1 {
        return None;
    }
    FIB_U64.get((m + 1) as usize).copied()
}

/// The materialization cap currently in force.
pub fn max_materialize() -> u64 {
    std::env::var(MAX_MATERIALIZE_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_MATERIALIZE)
}

pub(crate) fn check_cap(requested: impl fmt::Display + ToPrimitive) -> Result<usize> {
    let cap = max_materialize();
    match requested.to_u64() {
        Some(n) if n <= cap => Ok(n as usize),
        _ => Err(Error::Resource { requested: requested.to_string(), cap }),
    }
}

thread_local! {
    static MATERIALIZED: Cell<u64> = const { Cell::new(0) };
}

/// Letters materialized by [`prefix`] on the current thread so far.
pub fn materialized_letters() -> u64 {
    MATERIALIZED.with(|c| c.get())
}

/// `𝔽[1, n]`, built by iterating the morphism on `a` and truncating.
pub fn prefix(n: u64) -> Result<Vec<u8>> {
    let n = check_cap(n)?;
    let mut word = vec![b'a'];
    while word.len() < n {
        word = apply_morphism(&word);
    }
    word.truncate(n);
    MATERIALIZED.with(|c| c.set(c.get() + n as u64));
    Ok(word)
}

fn apply_morphism(w: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &c in w {
        match c {
            b'a' => out.extend_from_slice(b"ab"),
            _ => out.push(b'a'),
        }
    }
    out
}

/// `F_m = σ^m(a)` for `m ≥ 0`, and `F_{−1} = b`.
pub fn fib_word(m: i32) -> Result<Vec<u8>> {
    match m {
        m if m < -1 => Err(domain(format!("word index must be >= -1, got {m}"))),
        -1 => Ok(vec![b'b']),
        m => {
            let len = fib(m)?;
            prefix(check_cap(len)? as u64)
        }
    }
}

fn isqrt_u128(x: u128) -> u128 {
    x.isqrt()
}

/// `⌊φp⌋`, exact.
pub fn floor_phi(p: &BigUint) -> BigUint {
    if let Some(small) = p.to_u64() {
        if let Some(v) = floor_phi_small(small) {
            return BigUint::from(v);
        }
    }
    let five_p2: BigUint = p * p * 5u32;
    let s = five_p2.sqrt();
    (s - p) >> 1
}

fn floor_phi_small(p: u64) -> Option<u64> {
    if p >= 1 << 62 {
        return None;
    }
    let p = p as u128;
    let s = isqrt_u128(5 * p * p);
    Some(((s - p) >> 1) as u64)
}

/// `⌊φp⌋` for machine-width `p`; escalates to big arithmetic past `2^62`.
pub fn floor_phi_u64(p: u64) -> u64 {
    floor_phi_small(p).unwrap_or_else(|| {
        floor_phi(&BigUint::from(p)).to_u64().expect("⌊φp⌋ < p")
    })
}

/// Number of `a` in `𝔽[1, n]`, which is `⌊φ(n+1)⌋`.
pub fn count_a(n: &BigUint) -> BigUint {
    floor_phi(&(n + 1u32))
}

pub fn count_b(n: &BigUint) -> BigUint {
    n - count_a(n)
}

/// `⌊p/φ⌋ = p + ⌊φp⌋` for `p ≥ 1`.
pub fn floor_inv_phi(p: &BigUint) -> Result<BigUint> {
    if p.is_zero() {
        return Err(domain("floor_inv_phi requires p >= 1"));
    }
    Ok(p + floor_phi(p))
}

/// `𝔽[n]` without materializing the prefix: `a` iff `⌊φ(n+1)⌋ − ⌊φn⌋ = 1`.
pub fn letter_at(n: &BigUint) -> Result<Letter> {
    if n.is_zero() {
        return Err(domain("positions are 1-based"));
    }
    let step = floor_phi(&(n + 1u32)) - floor_phi(n);
    Ok(if step.is_one() { Letter::A } else { Letter::B })
}

pub fn letter_at_u64(n: u64) -> Result<Letter> {
    match n {
        0 => Err(domain("positions are 1-based")),
        n if n < 1 << 62 => {
            let step = floor_phi_u64(n + 1) - floor_phi_u64(n);
            Ok(if step == 1 { Letter::A } else { Letter::B })
        }
        n => letter_at(&BigUint::from(n)),
    }
}

/// Outcome of the four golden-ratio floor identities at one `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FloorIdentities {
    /// `⌊φ(p + ⌊φp⌋)⌋ = p − 1`
    pub shifted: bool,
    /// `p + ⌊φp⌋ = ⌊φ(2p + ⌊φp⌋)⌋`
    pub doubled: bool,
    /// `⌊φ(p + ⌊φp⌋ + 1)⌋ = p`
    pub shifted_plus_one: bool,
    /// `⌊φ(2p + ⌊φp⌋ + 1)⌋ = p + ⌊φp⌋`
    pub doubled_plus_one: bool,
}

impl FloorIdentities {
    pub fn all(&self) -> bool {
        self.shifted && self.doubled && self.shifted_plus_one && self.doubled_plus_one
    }
}

pub fn check_floor_identities(p: &BigUint) -> Result<FloorIdentities> {
    if p.is_zero() {
        return Err(domain("floor identities are stated for p >= 1"));
    }
    let fp = floor_phi(p);
    let s = p + &fp;
    let d = p * 2u32 + &fp;
    Ok(FloorIdentities {
        shifted: floor_phi(&s) + 1u32 == *p,
        doubled: floor_phi(&d) == s,
        shifted_plus_one: floor_phi(&(&s + 1u32)) == *p,
        doubled_plus_one: floor_phi(&(&d + 1u32)) == s,
    })
}

/// Machine-width variant of [`check_floor_identities`] for sweeps.
pub fn check_floor_identities_u64(p: u64) -> Result<FloorIdentities> {
    if p == 0 {
        return Err(domain("floor identities are stated for p >= 1"));
    }
    if p >= 1 << 60 {
        return check_floor_identities(&BigUint::from(p));
    }
    let fp = floor_phi_u64(p);
    let s = p + fp;
    let d = 2 * p + fp;
    Ok(FloorIdentities {
        shifted: floor_phi_u64(s) + 1 == p,
        doubled: floor_phi_u64(d) == s,
        shifted_plus_one: floor_phi_u64(s + 1) == p,
        doubled_plus_one: floor_phi_u64(d + 1) == s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn fib_base_and_recursion() {
        assert_eq!(fib(-1).unwrap(), big(1));
        assert_eq!(fib(0).unwrap(), big(1));
        assert_eq!(fib(6).unwrap(), big(21));
        assert!(fib(-2).is_err());
        for m in 0..200 {
            assert_eq!(fib(m + 1).unwrap(), fib(m).unwrap() + fib(m - 1).unwrap());
        }
    }

    #[test]
    fn fib_u64_matches_big_and_stops_at_overflow() {
        for m in -1..=91 {
            assert_eq!(BigUint::from(fib_u64(m).unwrap()), fib(m).unwrap(), "m={m}");
        }
        assert_eq!(fib_u64(92), None);
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(prefix(3).unwrap(), b"aba");
        assert_eq!(prefix(0).unwrap(), b"");
        assert_eq!(prefix(8).unwrap(), b"abaababa");
        assert_eq!(
            prefix(29).unwrap(),
            b"abaababaabaababaababaabaababa".as_slice()
        );
    }

    #[test]
    fn prefix_of_fib_length_is_fib_word() {
        let mut prev = vec![b'a'];
        for m in 0..20 {
            let f = fib_u64(m).unwrap();
            let w = prefix(f).unwrap();
            assert_eq!(w.len() as u64, f);
            assert_eq!(w, prev);
            assert_eq!(fib_word(m).unwrap(), w);
            prev = apply_morphism(&prev);
        }
        assert_eq!(fib_word(-1).unwrap(), b"b");
    }

    #[test]
    fn prefix_above_cap_is_resource_error() {
        let err = prefix(DEFAULT_MAX_MATERIALIZE + 1);
        if std::env::var(MAX_MATERIALIZE_ENV).is_err() {
            assert!(matches!(err, Err(Error::Resource { .. })));
        }
    }

    #[test]
    fn letter_examples() {
        assert_eq!(letter_at(&big(1)).unwrap(), Letter::A);
        assert_eq!(letter_at(&big(5)).unwrap(), Letter::B);
        assert_eq!(letter_at(&big(12)).unwrap(), Letter::A);
        assert!(letter_at(&big(0)).is_err());
        assert!(letter_at_u64(0).is_err());
    }

    #[test]
    fn letter_at_agrees_with_morphism() {
        let w = prefix(100_000).unwrap();
        for (k, &c) in w.iter().enumerate() {
            assert_eq!(letter_at_u64(k as u64 + 1).unwrap().as_byte(), c, "n={}", k + 1);
        }
    }

    #[test]
    fn count_a_scan() {
        assert_eq!(count_a(&big(3)), big(2));
        assert_eq!(count_a(&big(1)), big(1));
        assert_eq!(count_a(&big(8)), big(5));
        assert_eq!(count_b(&big(8)), big(3));
        let w = prefix(100_000).unwrap();
        let mut seen = 0u64;
        assert_eq!(count_a(&big(0)), big(0));
        for (k, &c) in w.iter().enumerate() {
            seen += (c == b'a') as u64;
            assert_eq!(count_a(&big(k as u64 + 1)), big(seen));
        }
    }

    #[test]
    fn floor_phi_examples() {
        assert_eq!(floor_phi(&big(0)), big(0));
        assert_eq!(floor_phi(&big(1)), big(0));
        assert_eq!(floor_phi(&big(3)), big(1));
        assert_eq!(floor_phi(&big(5)), big(3));
        assert_eq!(floor_inv_phi(&big(1)).unwrap(), big(1));
        assert_eq!(floor_inv_phi(&big(3)).unwrap(), big(4));
        assert_eq!(floor_inv_phi(&big(5)).unwrap(), big(8));
        assert!(floor_inv_phi(&big(0)).is_err());
    }

    #[test]
    fn floor_phi_paths_agree_near_switchover() {
        for p in [(1u64 << 62) - 3, (1 << 62) - 1, 1 << 62, (1 << 62) + 7, u64::MAX] {
            let via_u64 = floor_phi_u64(p);
            let s = (BigUint::from(p) * BigUint::from(p) * 5u32).sqrt();
            let direct = (s - BigUint::from(p)) >> 1;
            assert_eq!(BigUint::from(via_u64), direct);
        }
    }

    #[test]
    fn floor_phi_brackets_the_real_product() {
        // φp - 1 < ⌊φp⌋ <= φp, checked as (2q + p)^2 < 5p^2 < (2q + p + 2)^2
        for p in 1..5000u64 {
            let q = floor_phi_u64(p) as u128;
            let p = p as u128;
            assert!((2 * q + p).pow(2) < 5 * p * p);
            assert!(5 * p * p < (2 * q + p + 2).pow(2));
        }
    }

    #[test]
    fn floor_identities_small() {
        assert!(check_floor_identities(&big(1)).unwrap().all());
        assert!(check_floor_identities(&big(7)).unwrap().all());
        assert!(check_floor_identities(&big(1_000_000)).unwrap().all());
        assert!(check_floor_identities(&big(0)).is_err());
        let huge = BigUint::from(10u32).pow(60) + 12345u32;
        assert!(check_floor_identities(&huge).unwrap().all());
    }

    #[test]
    fn parse_word_rejects_foreign_letters() {
        assert_eq!(parse_word("abba").unwrap(), b"abba");
        assert!(parse_word("abc").is_err());
    }

    #[test]
    fn table_index_search() {
        let mut t = FibTable::new();
        assert_eq!(t.index_at_most(&big(0)), None);
        assert_eq!(t.index_at_most(&big(1)), Some(0));
        assert_eq!(t.index_at_most(&big(2)), Some(1));
        assert_eq!(t.index_at_most(&big(20)), Some(5));
        assert_eq!(t.index_at_most(&big(21)), Some(6));
    }
}
