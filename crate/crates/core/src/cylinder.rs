//! Canonical coordinates of palindromes.
//!
//! Every palindrome with kernel `K_m` is `K_{m+3}[i+1, f_{m+3} − i]` for a
//! unique `1 ≤ i ≤ f_{m+1}`, equivalently
//! `K_{m+1}[i+1, f_{m+1}] · K_m · K_{m+1}[1, f_{m+1} − i]`. The pair `(m, i)`
//! is the [`PalCoord`] of the palindrome; its length is `f_{m+3} − 2i`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{domain, Result};
use crate::fibword::{check_cap, fib, fib_word, is_palindrome, FibTable};
use crate::singular::{kernel, singular};

/// Canonical coordinates `(m, i)` of a palindromic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PalCoord {
    pub m: i32,
    pub i: BigUint,
}

impl fmt::Display for PalCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, i={})", self.m, self.i)
    }
}

impl PalCoord {
    pub fn new(m: i32, i: impl Into<BigUint>) -> Result<Self> {
        let c = PalCoord { m, i: i.into() };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < -1 {
            return Err(domain(format!("kernel index must be >= -1, got {}", self.m)));
        }
        let upper = fib(self.m + 1)?;
        if self.i.is_zero() || self.i > upper {
            return Err(domain(format!(
                "offset i={} outside [1, f_{}={}]",
                self.i,
                self.m + 1,
                upper
            )));
        }
        Ok(())
    }

    /// `f_{m+3} − 2i`.
    pub fn length(&self) -> BigUint {
        fib(self.m + 3).expect("m >= -1") - &self.i * 2u32
    }

    /// Whether the palindrome is the singular word `K_m` itself.
    pub fn is_singular(&self) -> bool {
        self.i == fib(self.m + 1).expect("m >= -1")
    }

    pub fn cylinder(&self) -> Cylinder {
        Cylinder::of_kernel(self.m)
    }

    fn offset(&self) -> Result<usize> {
        self.validate()?;
        check_cap(self.i.clone())
    }
}

/// The three cylinder sets partitioning the palindromes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cylinder {
    /// Odd length, middle letter `a`; kernels `K_m` with `m ≡ 2 (mod 3)`.
    A,
    /// Odd length, middle letter `b`; `m ≡ 0 (mod 3)`.
    B,
    /// Even length; `m ≡ 1 (mod 3)`.
    AA,
}

impl Cylinder {
    pub const ALL: [Cylinder; 3] = [Cylinder::A, Cylinder::B, Cylinder::AA];

    pub fn of_kernel(m: i32) -> Cylinder {
        match m.rem_euclid(3) {
            2 => Cylinder::A,
            0 => Cylinder::B,
            _ => Cylinder::AA,
        }
    }

    /// Classification by length parity and middle letter.
    pub fn of_word(w: &[u8]) -> Option<Cylinder> {
        if w.is_empty() {
            None
        } else if w.len().is_multiple_of(2) {
            Some(Cylinder::AA)
        } else if w[w.len() / 2] == b'a' {
            Some(Cylinder::A)
        } else {
            Some(Cylinder::B)
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Cylinder::A => "<a>",
            Cylinder::B => "<b>",
            Cylinder::AA => "<aa>",
        }
    }
}

/// The palindrome at `c`, assembled as `K_{m+1}[i+1..] · K_m · K_{m+1}[..f_{m+1}−i]`.
pub fn pal_from_coord(c: &PalCoord) -> Result<Vec<u8>> {
    let i = c.offset()?;
    let outer = singular(c.m + 1)?;
    let core = singular(c.m)?;
    let mut w = Vec::with_capacity(2 * outer.len() - 2 * i + core.len());
    w.extend_from_slice(&outer[i..]);
    w.extend_from_slice(&core);
    w.extend_from_slice(&outer[..outer.len() - i]);
    Ok(w)
}

/// The palindrome at `c`, cut out of `K_{m+3}` as `K_{m+3}[i+1, f_{m+3} − i]`.
pub fn pal_from_coord_enclosing(c: &PalCoord) -> Result<Vec<u8>> {
    let i = c.offset()?;
    let host = singular(c.m + 3)?;
    Ok(host[i..host.len() - i].to_vec())
}

/// Inverse of [`pal_from_coord`] for palindromic factors.
pub fn coord_from_pal(w: &[u8]) -> Result<PalCoord> {
    if w.is_empty() {
        return Err(domain("the empty word has no coordinates"));
    }
    if !is_palindrome(w) {
        return Err(domain(format!("{} is not a palindrome", String::from_utf8_lossy(w))));
    }
    let k = kernel(w, true)?;
    let host = fib(k.m + 3)?;
    let len = BigUint::from(w.len());
    if host < len || !(&host - &len).is_even() {
        return Err(domain("length is not realized by the kernel's cylinder"));
    }
    let c = PalCoord { m: k.m, i: (host - len) >> 1 };
    c.validate()?;
    Ok(c)
}

/// All coordinates of palindromes of length `n`.
pub fn pals_of_length(n: &BigUint) -> Result<Vec<PalCoord>> {
    if n.is_zero() {
        return Err(domain("the empty word is not counted as a palindrome"));
    }
    let mut table = FibTable::new();
    let mut out = Vec::new();
    let mut m = -1;
    while table.get(m) <= n {
        let host = table.get(m + 3).clone();
        if &host > n {
            let diff = host - n;
            if diff.is_even() {
                let i: BigUint = diff >> 1;
                if i <= *table.get(m + 1) {
                    out.push(PalCoord { m, i });
                }
            }
        }
        m += 1;
    }
    Ok(out)
}

/// The palindromes among the conjugates `C_i(F_m)`.
pub fn palindromic_conjugates(m: i32) -> Result<BTreeSet<Vec<u8>>> {
    let f = fib_word(m)?;
    let n = f.len();
    let mut doubled = f.clone();
    doubled.extend_from_slice(&f);
    Ok((0..n)
        .map(|i| &doubled[i..i + n])
        .filter(|w| is_palindrome(w))
        .map(<[u8]>::to_vec)
        .collect())
}

/// Lengths `n ≤ max` for which `𝔽[1, n]` is a palindrome: `f_m − 2`, `m ≥ 2`.
pub fn prefix_palindrome_lengths(max: &BigUint) -> Vec<BigUint> {
    let mut table = FibTable::new();
    let mut out = Vec::new();
    let mut m = 2;
    loop {
        let n = table.get(m) - 2u32;
        if &n > max {
            break;
        }
        out.push(n);
        m += 1;
    }
    out
}

/// One row of the cylinder table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub coord: PalCoord,
    pub word: Vec<u8>,
}

impl TableEntry {
    pub fn is_singular(&self) -> bool {
        self.coord.is_singular()
    }
}

/// The first `rows` palindromes of each cylinder, shortest first.
///
/// Row `r` (from 1) holds the palindrome of length `2r − 1` for `<a>` and
/// `<b>`, and of length `2r` for `<aa>`.
pub fn cylinder_table(rows: usize) -> Result<[Vec<TableEntry>; 3]> {
    let mut cols: [Vec<TableEntry>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for r in 1..=rows {
        for (col, cyl) in Cylinder::ALL.iter().enumerate() {
            let len = if *cyl == Cylinder::AA { 2 * r } else { 2 * r - 1 };
            let coord = pals_of_length(&BigUint::from(len))?
                .into_iter()
                .find(|c| c.cylinder() == *cyl)
                .ok_or_else(|| domain(format!("no palindrome of length {len} in {}", cyl.label())))?;
            let word = pal_from_coord(&coord)?;
            cols[col].push(TableEntry { coord, word });
        }
    }
    Ok(cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn coord(m: i32, i: u64) -> PalCoord {
        PalCoord::new(m, i).unwrap()
    }

    #[test]
    fn pal_from_coord_examples() {
        assert_eq!(pal_from_coord(&coord(0, 1)).unwrap(), b"aba");
        assert_eq!(pal_from_coord(&coord(2, 5)).unwrap(), b"bab");
        assert_eq!(pal_from_coord(&coord(-1, 1)).unwrap(), b"a");
        assert!(PalCoord::new(2, 0u32).is_err());
        assert!(PalCoord::new(2, 6u32).is_err());
        let bad = PalCoord { m: 0, i: BigUint::from(3u32) };
        assert!(pal_from_coord(&bad).is_err());
    }

    #[test]
    fn coord_from_pal_examples() {
        assert_eq!(coord_from_pal(b"ababa").unwrap(), coord(2, 4));
        assert_eq!(coord_from_pal(b"b").unwrap(), coord(0, 2));
        assert_eq!(coord_from_pal(b"babaabab").unwrap(), coord(4, 13));
        assert!(coord_from_pal(b"ab").is_err());
        assert!(coord_from_pal(b"bb").is_err());
        assert!(coord_from_pal(b"").is_err());
    }

    #[test]
    fn both_constructions_agree_and_round_trip() {
        for m in -1..=12 {
            let top = fib(m + 1).unwrap().to_u64().unwrap();
            for i in 1..=top {
                let c = coord(m, i);
                let w = pal_from_coord(&c).unwrap();
                assert_eq!(w, pal_from_coord_enclosing(&c).unwrap(), "{c}");
                assert_eq!(BigUint::from(w.len()), c.length());
                if m <= 9 {
                    assert_eq!(coord_from_pal(&w).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn pals_of_length_examples() {
        let words = |n: u32| -> BTreeSet<Vec<u8>> {
            pals_of_length(&BigUint::from(n))
                .unwrap()
                .iter()
                .map(|c| pal_from_coord(c).unwrap())
                .collect()
        };
        assert_eq!(words(5), [b"ababa".to_vec(), b"aabaa".to_vec()].into());
        assert_eq!(words(4), [b"baab".to_vec()].into());
        assert_eq!(words(1), [b"a".to_vec(), b"b".to_vec()].into());
        assert!(pals_of_length(&BigUint::zero()).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(palindromic_conjugates(2).unwrap(), [b"aba".to_vec()].into());
        assert!(palindromic_conjugates(1).unwrap().is_empty());
        assert!(palindromic_conjugates(4).unwrap().is_empty());
        assert_eq!(palindromic_conjugates(-1).unwrap().len(), 1);
    }

    #[test]
    fn prefix_palindrome_examples() {
        let got = |n: u32| -> Vec<u64> {
            prefix_palindrome_lengths(&BigUint::from(n)).iter().map(|v| v.to_u64().unwrap()).collect()
        };
        assert_eq!(got(11), vec![1, 3, 6, 11]);
        assert_eq!(got(2), vec![1]);
        assert_eq!(got(100), vec![1, 3, 6, 11, 19, 32, 53, 87]);
    }

    #[test]
    fn cylinder_rules_agree() {
        for m in -1..=10 {
            let top = fib(m + 1).unwrap().to_u64().unwrap();
            for i in 1..=top {
                let c = coord(m, i);
                let w = pal_from_coord(&c).unwrap();
                assert_eq!(Cylinder::of_word(&w), Some(c.cylinder()), "{c}");
            }
        }
    }
}
