//! Singular words `K_m` and kernel extraction.
//!
//! `K_m = δ_{m+1} F_m δ_m^{-1}`: the last letter of `F_m` is dropped and the
//! last letter of `F_{m+1}` is prepended. `δ_m` is `a` for even `m`.

use crate::error::{domain, Error, Result};
use crate::fibword::{check_cap, fib, fib_u64, fib_word, prefix};

/// Location of the kernel inside a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelResult {
    /// Index of the largest singular word occurring in the factor.
    pub m: i32,
    /// 1-based start of its (unique) occurrence.
    pub offset: usize,
}

/// Last letter of `F_m`.
pub fn delta(m: i32) -> u8 {
    if m.rem_euclid(2) == 0 {
        b'a'
    } else {
        b'b'
    }
}

/// `K_m` for `m ≥ −1`.
pub fn singular(m: i32) -> Result<Vec<u8>> {
    if m < -1 {
        return Err(domain(format!("singular index must be >= -1, got {m}")));
    }
    check_cap(fib(m)?)?;
    let mut f = fib_word(m)?;
    let last = f.pop();
    debug_assert_eq!(last, Some(delta(m)));
    let mut k = Vec::with_capacity(f.len() + 1);
    k.push(delta(m + 1));
    k.extend_from_slice(&f);
    Ok(k)
}

/// 1-based starts of every occurrence of `needle` in `hay`, overlaps included.
pub fn find_all(hay: &[u8], needle: &[u8]) -> Vec<usize> {
    if needle.is_empty() || needle.len() > hay.len() {
        return Vec::new();
    }
    hay.windows(needle.len())
        .enumerate()
        .filter(|(_, w)| *w == needle)
        .map(|(k, _)| k + 1)
        .collect()
}

fn find_first(hay: &[u8], needle: &[u8]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    hay.windows(needle.len()).position(|w| w == needle).map(|k| k + 1)
}

/// Length of prefix scanned when checking that a word is a factor.
pub fn factor_window(len: usize) -> usize {
    (4 * len).max(10_000)
}

/// Whether `w` occurs in the Fibonacci word.
pub fn is_factor(w: &[u8]) -> Result<bool> {
    if w.is_empty() {
        return Ok(true);
    }
    let hay = prefix(factor_window(w.len()) as u64)?;
    Ok(find_first(&hay, w).is_some())
}

/// The kernel of `w`: the largest `K_m` occurring in it, with its offset.
pub fn kernel(w: &[u8], require_factor: bool) -> Result<KernelResult> {
    if w.is_empty() {
        return Err(domain("the empty word has no kernel"));
    }
    if let Some(c) = w.iter().find(|c| **c != b'a' && **c != b'b') {
        return Err(domain(format!("letter {:?} is not in the alphabet {{a, b}}", *c as char)));
    }
    if require_factor && !is_factor(w)? {
        return Err(Error::NotAFactor(String::from_utf8_lossy(w).into_owned()));
    }
    let len = w.len() as u64;
    let mut top = 0;
    while fib_u64(top + 1).is_some_and(|f| f <= len) {
        top += 1;
    }
    for m in (-1..=top).rev() {
        let k = singular(m)?;
        if let Some(offset) = find_first(w, &k) {
            return Ok(KernelResult { m, offset });
        }
    }
    unreachable!("every nonempty word over {{a, b}} contains K_-1 or K_0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibword::is_palindrome;

    #[test]
    fn singular_examples() {
        assert_eq!(singular(-1).unwrap(), b"a");
        assert_eq!(singular(0).unwrap(), b"b");
        assert_eq!(singular(1).unwrap(), b"aa");
        assert_eq!(singular(2).unwrap(), b"bab");
        assert_eq!(singular(4).unwrap(), b"babaabab");
        assert!(singular(-2).is_err());
    }

    #[test]
    fn singular_recursion_and_palindromes() {
        for m in -1..=20 {
            let k = singular(m).unwrap();
            assert_eq!(k.len() as u64, fib_u64(m).unwrap());
            assert!(is_palindrome(&k), "K_{m}");
        }
        for m in 2..=20 {
            let mut rebuilt = singular(m - 2).unwrap();
            rebuilt.extend(singular(m - 3).unwrap());
            rebuilt.extend(singular(m - 2).unwrap());
            assert_eq!(singular(m).unwrap(), rebuilt, "m={m}");
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(b"aba", true).unwrap(), KernelResult { m: 0, offset: 2 });
        let k5 = singular(5).unwrap();
        assert_eq!(kernel(&k5, true).unwrap(), KernelResult { m: 5, offset: 1 });
        assert_eq!(kernel(b"abaab", true).unwrap(), KernelResult { m: 1, offset: 3 });
        assert_eq!(kernel(b"ababaababa", true).unwrap(), KernelResult { m: 4, offset: 2 });
    }

    #[test]
    fn kernel_errors() {
        assert!(matches!(kernel(b"", false), Err(Error::Domain(_))));
        assert!(matches!(kernel(b"bb", true), Err(Error::NotAFactor(_))));
        assert!(matches!(kernel(b"aaa", true), Err(Error::NotAFactor(_))));
        assert!(kernel(b"bb", false).is_ok());
        assert!(matches!(kernel(b"abc", false), Err(Error::Domain(_))));
    }

    #[test]
    fn factor_window_holds_every_factor() {
        // A Sturmian word has exactly ℓ + 1 factors of each length ℓ.
        for len in 1..=120usize {
            let hay = prefix((4 * len) as u64).unwrap();
            let distinct: std::collections::HashSet<&[u8]> = hay.windows(len).collect();
            assert_eq!(distinct.len(), len + 1, "len={len}");
        }
    }
}
