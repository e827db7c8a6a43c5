//! Brute-force ground truth over materialized prefixes.
//!
//! The palindromic tree is the workhorse oracle; the quadratic scanners at
//! the bottom of this module exist to validate the tree itself.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::chain::OccurrenceSpan;
use crate::error::{domain, Result};
use crate::fibword::{is_palindrome, prefix};
use crate::singular::{find_all, kernel};

const NONE: u32 = u32::MAX;
const IMAGINARY: u32 = 0;
const EMPTY: u32 = 1;

fn slot(c: u8) -> usize {
    match c {
        b'a' => 0,
        b'b' => 1,
        other => panic!("letter {:?} outside {{a, b}}", other as char),
    }
}

/// Palindromic tree over a word on `{a, b}`, built one letter at a time.
///
/// Node 0 is the root of length −1, node 1 the root of length 0; every other
/// node is a distinct nonempty palindromic factor of the text fed so far.
#[derive(Debug, Clone)]
pub struct Eertree {
    text: Vec<u8>,
    len: Vec<i32>,
    link: Vec<u32>,
    next: Vec<[u32; 2]>,
    // number of nonempty palindromic suffixes of the node's palindrome
    depth: Vec<u32>,
    // end position (1-based) of the first occurrence
    first_end: Vec<u32>,
    last: u32,
    suffix_counts: Vec<u32>,
}

impl Default for Eertree {
    fn default() -> Self {
        Self::new()
    }
}

impl Eertree {
    pub fn new() -> Self {
        Eertree {
            text: Vec::new(),
            len: vec![-1, 0],
            link: vec![IMAGINARY, IMAGINARY],
            next: vec![[NONE; 2]; 2],
            depth: vec![0, 0],
            first_end: vec![0, 0],
            last: EMPTY,
            suffix_counts: Vec::new(),
        }
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut t = Self::new();
        let cap = n + 2;
        t.text.reserve(n);
        t.len.reserve(cap);
        t.link.reserve(cap);
        t.next.reserve(cap);
        t.depth.reserve(cap);
        t.first_end.reserve(cap);
        t.suffix_counts.reserve(n);
        t
    }

    pub fn build(word: &[u8]) -> Self {
        let mut t = Self::with_capacity(word.len());
        for &c in word {
            t.push(c);
        }
        t
    }

    fn fits(&self, node: u32, pos: usize, c: u8) -> bool {
        let l = self.len[node as usize];
        let before = pos as i64 - l as i64 - 1;
        before >= 0 && self.text[before as usize] == c
    }

    fn extendable(&self, mut node: u32, pos: usize, c: u8) -> u32 {
        while !self.fits(node, pos, c) {
            node = self.link[node as usize];
        }
        node
    }

    /// Appends a letter; returns `true` if a new palindrome appeared.
    pub fn push(&mut self, c: u8) -> bool {
        let pos = self.text.len();
        self.text.push(c);
        let s = slot(c);
        let cur = self.extendable(self.last, pos, c);
        let existing = self.next[cur as usize][s];
        let created = existing == NONE;
        if created {
            let id = self.len.len() as u32;
            let new_len = self.len[cur as usize] + 2;
            let link = if new_len == 1 {
                EMPTY
            } else {
                let from = self.extendable(self.link[cur as usize], pos, c);
                self.next[from as usize][s]
            };
            self.len.push(new_len);
            self.link.push(link);
            self.next.push([NONE; 2]);
            self.depth.push(self.depth[link as usize] + 1);
            self.first_end.push(pos as u32 + 1);
            self.next[cur as usize][s] = id;
            self.last = id;
        } else {
            self.last = existing;
        }
        self.suffix_counts.push(self.depth[self.last as usize]);
        created
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    /// Distinct nonempty palindromic factors seen so far.
    pub fn distinct(&self) -> usize {
        self.len.len() - 2
    }

    /// Palindromic suffixes of `text[1, n]`, for each `n`.
    pub fn suffix_counts(&self) -> &[u32] {
        &self.suffix_counts
    }

    /// Length of the longest palindromic suffix of the whole text.
    pub fn longest_suffix_len(&self) -> usize {
        self.len[self.last as usize].max(0) as usize
    }

    /// Walks the suffix-link chain from the current longest palindromic suffix.
    pub fn suffix_chain_len(&self) -> u32 {
        let mut n = 0;
        let mut node = self.last;
        while self.len[node as usize] > 0 {
            n += 1;
            node = self.link[node as usize];
        }
        n
    }

    /// Every distinct palindrome, in order of first appearance.
    pub fn palindromes(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (2..self.len.len()).map(move |k| {
            let end = self.first_end[k] as usize;
            let l = self.len[k] as usize;
            &self.text[end - l..end]
        })
    }

    /// Checks the structural invariants; returns the first violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        for k in 2..self.len.len() {
            let l = self.len[k];
            let target = self.link[k] as usize;
            if self.len[target] >= l {
                return Err(format!("node {k} of length {l} links to length {}", self.len[target]));
            }
            if self.depth[k] != self.depth[target] + 1 {
                return Err(format!("node {k} depth inconsistent with its suffix link"));
            }
        }
        if self.suffix_chain_len() != self.suffix_counts.last().copied().unwrap_or(0) {
            return Err("suffix count disagrees with suffix-link chain".into());
        }
        Ok(())
    }
}

/// `A(1..=n_max)` read off a palindromic tree over `𝔽[1, n_max]`.
pub fn oracle_a(n_max: u64) -> Result<Vec<u32>> {
    let w = prefix(n_max)?;
    Ok(Eertree::build(&w).suffix_counts.clone())
}

/// `B(n)` as the running total of [`oracle_a`].
pub fn oracle_b(n: u64) -> Result<u64> {
    Ok(oracle_a(n)?.iter().map(|&v| v as u64).sum())
}

/// Distinct nonempty palindromic factors of `𝔽[1, n]`.
pub fn oracle_distinct(n: u64) -> Result<u64> {
    let w = prefix(n)?;
    Ok(Eertree::build(&w).distinct() as u64)
}

/// Distinct palindrome counts after each letter of `𝔽[1, n_max]`.
pub fn oracle_distinct_per_prefix(n_max: u64) -> Result<Vec<u64>> {
    let w = prefix(n_max)?;
    let mut t = Eertree::with_capacity(w.len());
    Ok(w.iter()
        .map(|&c| {
            t.push(c);
            t.distinct() as u64
        })
        .collect())
}

/// Every occurrence of `w` in `𝔽[1, n]`, in order.
pub fn occurrences(w: &[u8], n: u64) -> Result<Vec<OccurrenceSpan>> {
    if w.is_empty() {
        return Err(domain("cannot locate the empty word"));
    }
    let hay = prefix(n)?;
    Ok(occurrences_in(&hay, w))
}

/// Every occurrence of `w` in an already materialized text.
pub fn occurrences_in(hay: &[u8], w: &[u8]) -> Vec<OccurrenceSpan> {
    find_all(hay, w)
        .into_iter()
        .map(|s| OccurrenceSpan { start: BigUint::from(s), end: BigUint::from(s + w.len() - 1) })
        .collect()
}

/// The return words of a factor and their coding over two letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnWordSeq {
    pub factor: Vec<u8>,
    pub returns: Vec<Vec<u8>>,
    /// The distinct return words, in order of first appearance.
    pub alphabet: Vec<Vec<u8>>,
}

impl ReturnWordSeq {
    /// The return sequence with the first return word coded `a` and the other `b`.
    pub fn coded(&self) -> Vec<u8> {
        self.returns
            .iter()
            .map(|r| if Some(r) == self.alphabet.first() { b'a' } else { b'b' })
            .collect()
    }

    /// Whether exactly two return words occur and the coding is a prefix of `𝔽`.
    pub fn is_fibonacci(&self) -> Result<bool> {
        if self.alphabet.len() != 2 {
            return Ok(false);
        }
        let coded = self.coded();
        Ok(prefix(coded.len() as u64)? == coded)
    }
}

/// Return words of `w` inside `𝔽[1, n]`.
pub fn return_words(w: &[u8], n: u64) -> Result<ReturnWordSeq> {
    if w.is_empty() {
        return Err(domain("cannot locate the empty word"));
    }
    let hay = prefix(n)?;
    let starts = find_all(&hay, w);
    if starts.len() < 3 {
        return Err(domain(format!(
            "{} occurs {} times in a prefix of length {n}; need at least 3",
            String::from_utf8_lossy(w),
            starts.len()
        )));
    }
    let returns: Vec<Vec<u8>> =
        starts.windows(2).map(|s| hay[s[0] - 1..s[1] - 1].to_vec()).collect();
    let mut alphabet: Vec<Vec<u8>> = Vec::new();
    for r in &returns {
        if !alphabet.contains(r) {
            alphabet.push(r.clone());
        }
    }
    Ok(ReturnWordSeq { factor: w.to_vec(), returns, alphabet })
}

/// Whether the kernel inside the `p`-th occurrence of `w` is the `p`-th
/// occurrence of the kernel, for every `p ≤ p_max`.
pub fn kernel_correspondence(w: &[u8], p_max: usize, n: u64) -> Result<bool> {
    let hay = prefix(n)?;
    let k = kernel(w, true)?;
    let kw = crate::singular::singular(k.m)?;
    let hosts = find_all(&hay, w);
    let kernels = find_all(&hay, &kw);
    if hosts.len() < p_max || kernels.len() < p_max {
        return Err(domain(format!(
            "fewer than {p_max} occurrences in a prefix of length {n}"
        )));
    }
    Ok((0..p_max).all(|p| hosts[p] + k.offset - 1 == kernels[p]))
}

/// All distinct nonempty palindromic substrings, by checking every substring.
pub fn naive_distinct_palindromes(w: &[u8]) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            if is_palindrome(&w[i..j]) {
                out.insert(w[i..j].to_vec());
            }
        }
    }
    out
}

/// Palindromic suffixes of `w[..n]` for each `n`, by direct checks.
pub fn naive_suffix_counts(w: &[u8]) -> Vec<u32> {
    (1..=w.len())
        .map(|n| (0..n).filter(|&i| is_palindrome(&w[i..n])).count() as u32)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibword::prefix;

    #[test]
    fn oracle_a_examples() {
        assert_eq!(oracle_a(3).unwrap(), vec![1, 1, 2]);
        assert_eq!(*oracle_a(8).unwrap().last().unwrap(), 3);
        assert_eq!(*oracle_a(21).unwrap().last().unwrap(), 4);
    }

    #[test]
    fn oracle_b_examples() {
        assert_eq!(oracle_b(13).unwrap(), 32);
        assert_eq!(oracle_b(1).unwrap(), 1);
        assert_eq!(oracle_b(29).unwrap(), 98);
    }

    #[test]
    fn oracle_distinct_examples() {
        assert_eq!(oracle_distinct(1).unwrap(), 1);
        assert_eq!(oracle_distinct(3).unwrap(), 3);
        assert_eq!(oracle_distinct(87).unwrap(), 87);
    }

    #[test]
    fn eertree_on_general_words() {
        for w in [&b"abba"[..], b"bbbb", b"abab", b"aabbaabb", b"babbab", b""] {
            let t = Eertree::build(w);
            let from_tree: BTreeSet<Vec<u8>> = t.palindromes().map(<[u8]>::to_vec).collect();
            assert_eq!(from_tree, naive_distinct_palindromes(w), "{:?}", std::str::from_utf8(w));
            assert_eq!(t.suffix_counts(), naive_suffix_counts(w).as_slice());
            t.check_invariants().unwrap();
        }
    }

    #[test]
    fn eertree_matches_naive_on_prefixes() {
        let w = prefix(600).unwrap();
        let t = Eertree::build(&w);
        let from_tree: BTreeSet<Vec<u8>> = t.palindromes().map(<[u8]>::to_vec).collect();
        assert_eq!(from_tree, naive_distinct_palindromes(&w));
        assert_eq!(t.suffix_counts(), naive_suffix_counts(&w).as_slice());
        let longest = (0..w.len()).find(|&i| is_palindrome(&w[i..])).map(|i| w.len() - i);
        assert_eq!(Some(t.longest_suffix_len()), longest);
    }

    #[test]
    fn occurrence_examples() {
        let starts = |w: &[u8], n| -> Vec<u32> {
            occurrences(w, n).unwrap().iter().map(|s| s.start.to_u32_digits()[0]).collect()
        };
        assert_eq!(starts(b"aba", 8), vec![1, 4, 6]);
        assert_eq!(starts(b"b", 7), vec![2, 5, 7]);
        let spans = occurrences(b"bab", 24).unwrap();
        assert_eq!(spans[2].end, BigUint::from(20u32));
        assert!(occurrences(b"", 10).is_err());
    }

    #[test]
    fn return_word_examples() {
        let r = return_words(b"a", 13).unwrap();
        let expect: Vec<&[u8]> = vec![b"ab", b"a", b"ab", b"ab", b"a", b"ab", b"a"];
        assert_eq!(r.returns.iter().map(Vec::as_slice).collect::<Vec<_>>(), expect);
        assert!(r.is_fibonacci().unwrap());
        for w in [&b"b"[..], b"aba", b"abaab", b"baab"] {
            let r = return_words(w, 2000).unwrap();
            assert_eq!(r.alphabet.len(), 2);
            assert!(r.is_fibonacci().unwrap(), "{:?}", std::str::from_utf8(w));
        }
        assert!(return_words(b"abaababaabaab", 20).is_err());
    }

    #[test]
    fn kernel_correspondence_examples() {
        assert!(kernel_correspondence(b"aba", 3, 100).unwrap());
        let k3 = crate::singular::singular(3).unwrap();
        assert!(kernel_correspondence(&k3, 5, 1000).unwrap());
        assert!(kernel_correspondence(b"abaab", 10, 1000).unwrap());
        assert!(kernel_correspondence(b"aba", 500, 100).is_err());
    }
}
