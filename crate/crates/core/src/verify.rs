//! Verification suites: every closed form against an independent oracle.
//!
//! Each check returns a [`CheckReport`] naming the first counterexample it
//! found, if any. Index sweeps go through [`crate::sweep`], so they run on
//! the rayon pool when the `parallel` feature is enabled.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::chain::{chain_interval_u64, end_pos_kernel_u64, end_pos_pal_u64, new_pal_at_u64};
use crate::counting::{
    a_block, a_special, b_fm, b_fm_minus2, c_closed, closed_form_numerators, convolution_check,
    ending_count, expand, occurrence_count, tau1, tau2,
};
use crate::cylinder::{
    coord_from_pal, pal_from_coord, pal_from_coord_enclosing, palindromic_conjugates,
    pals_of_length, prefix_palindrome_lengths, Cylinder, PalCoord,
};
use crate::error::{domain, Error, Result};
use crate::fibword::{
    check_floor_identities_u64, count_a, fib_u64, floor_phi_u64, is_palindrome,
    letter_at_u64, prefix,
};
use crate::oracle::{
    kernel_correspondence, naive_distinct_palindromes, naive_suffix_counts, return_words,
    Eertree,
};
use crate::singular::{find_all, kernel, singular};
use crate::sweep::{first_failing_item, first_failure};

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: Suite,
    pub name: &'static str,
    /// Number of cases examined.
    pub checked: u64,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}/{} ({} cases)", self.suite, self.name, self.checked),
            Some(e) => write!(f, "FAIL {}/{}: {e}", self.suite, self.name),
        }
    }
}

fn report(suite: Suite, name: &'static str, checked: u64, failure: Option<String>) -> CheckReport {
    CheckReport { suite, name, checked, failure }
}

/// Scale parameters for the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: u64,
    pub max_m: i32,
    pub max_p: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 10_000, max_m: 15, max_p: 500 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Floors,
    Cylinder,
    Chain,
    Tau,
    Counts,
    Richness,
    ReturnWords,
    Kernels,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Floors,
        Suite::Cylinder,
        Suite::Chain,
        Suite::Tau,
        Suite::Counts,
        Suite::Richness,
        Suite::ReturnWords,
        Suite::Kernels,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Floors => "floors",
            Suite::Cylinder => "cylinder",
            Suite::Chain => "chain",
            Suite::Tau => "tau",
            Suite::Counts => "counts",
            Suite::Richness => "richness",
            Suite::ReturnWords => "return-words",
            Suite::Kernels => "kernels",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| domain(format!("unknown suite {s:?}")))
    }
}

/// Runs every check of `suite` at the given scale.
pub fn run_suite(suite: Suite, lim: &Limits) -> Result<Vec<CheckReport>> {
    let n = lim.max_n;
    Ok(match suite {
        Suite::Floors => vec![
            floor_identities(n.max(1)),
            floor_steps(n.max(1)),
            letters_match_morphism(n)?,
            count_a_matches_scan(n)?,
        ],
        Suite::Cylinder => vec![
            coordinate_round_trip(lim.max_m.min(12))?,
            cylinder_exhaustive(n.max(1000), 100)?,
            cylinder_classification(lim.max_m.min(12))?,
            palindromes_per_length(1000)?,
            conjugate_counts(lim.max_m)?,
        ],
        Suite::Chain => vec![
            chain_partition(n),
            interval_bijection(lim.max_m, lim.max_p),
            kernel_positions(lim.max_m.min(8), lim.max_p.min(30), n.max(1000))?,
            palindrome_positions(60, n)?,
            new_pal_inverts_first_occurrence(n),
            prefix_palindromes(n)?,
        ],
        Suite::Tau => vec![
            tau_partition(lim.max_m, lim.max_p)?,
            tau2_maximum(lim.max_p)?,
            preimage_partition(n.max(2)),
            k4_expansion()?,
        ],
        Suite::Counts => vec![
            counts_match_eertree(n)?,
            blocks_match_pointwise(lim.max_m.clamp(3, 20))?,
            closed_forms_match_oracle(lim.max_m.clamp(2, 25))?,
            closed_form_divisibility(500),
            c_telescoping(100)?,
            suffix_correspondence(lim.max_m.min(6), lim.max_p.min(20))?,
        ],
        Suite::Richness => vec![richness(n)?, eertree_matches_naive(n.min(2000))?],
        Suite::ReturnWords => vec![return_word_structure(8, n.max(2000))?],
        Suite::Kernels => vec![
            kernel_uniqueness(50, n.max(10_000))?,
            kernel_occurrence_correspondence(12, 50, n.max(10_000))?,
        ],
    })
}

fn err_str(e: Error) -> Option<String> {
    Some(e.to_string())
}

// ---------------------------------------------------------------- floors

/// The four floor identities for `1 ≤ p ≤ max_p`.
pub fn floor_identities(max_p: u64) -> CheckReport {
    let bad = first_failure(1..max_p + 1, |p| match check_floor_identities_u64(p) {
        Ok(r) if r.all() => None,
        Ok(r) => Some(format!("p={p}: {r:?}")),
        Err(e) => err_str(e),
    });
    report(Suite::Floors, "floor-identities", max_p, bad.map(|b| b.1))
}

/// `⌊φp⌋` brackets `φp` and increases by 0 or 1 per step.
pub fn floor_steps(max_p: u64) -> CheckReport {
    let bad = first_failure(1..max_p + 1, |p| {
        let q = floor_phi_u64(p) as u128;
        let pp = p as u128;
        let lower = (2 * q + pp).pow(2) < 5 * pp * pp;
        let upper = 5 * pp * pp < (2 * q + pp + 2).pow(2);
        let step = floor_phi_u64(p + 1) - floor_phi_u64(p);
        (!(lower && upper && step <= 1)).then(|| format!("p={p}: floor={q} step={step}"))
    });
    report(Suite::Floors, "floor-brackets", max_p, bad.map(|b| b.1))
}

pub fn letters_match_morphism(max_n: u64) -> Result<CheckReport> {
    let w = prefix(max_n)?;
    let bad = first_failure(1..max_n + 1, |n| {
        let got = letter_at_u64(n).map(|l| l.as_byte());
        (got.as_ref().ok() != Some(&w[n as usize - 1]))
            .then(|| format!("n={n}: closed form {got:?}, morphism {}", w[n as usize - 1] as char))
    });
    Ok(report(Suite::Floors, "letter-at", max_n, bad.map(|b| b.1)))
}

pub fn count_a_matches_scan(max_n: u64) -> Result<CheckReport> {
    let w = prefix(max_n)?;
    let mut seen = 0u64;
    let mut failure = None;
    for (k, &c) in w.iter().enumerate() {
        seen += (c == b'a') as u64;
        if count_a(&BigUint::from(k + 1)) != BigUint::from(seen) {
            failure = Some(format!("n={}: scan gives {seen}", k + 1));
            break;
        }
    }
    Ok(report(Suite::Floors, "count-a", max_n, failure))
}

// -------------------------------------------------------------- cylinder

fn coords_up_to(max_m: i32) -> Vec<PalCoord> {
    (-1..=max_m)
        .flat_map(|m| {
            let top = fib_u64(m + 1).expect("small m");
            (1..=top).map(move |i| PalCoord { m, i: BigUint::from(i) })
        })
        .collect()
}

/// Both constructions agree and [`coord_from_pal`] inverts them.
pub fn coordinate_round_trip(max_m: i32) -> Result<CheckReport> {
    let coords = coords_up_to(max_m);
    let bad = first_failing_item(&coords, |c| {
        let w = match pal_from_coord(c) {
            Ok(w) => w,
            Err(e) => return err_str(e),
        };
        match pal_from_coord_enclosing(c) {
            Ok(v) if v == w => {}
            Ok(_) => return Some(format!("{c}: the two constructions differ")),
            Err(e) => return err_str(e),
        }
        if !is_palindrome(&w) {
            return Some(format!("{c}: not a palindrome"));
        }
        match coord_from_pal(&w) {
            Ok(back) if back == *c => None,
            Ok(back) => Some(format!("{c}: round trip gave {back}")),
            Err(e) => err_str(e),
        }
    });
    Ok(report(Suite::Cylinder, "round-trip", coords.len() as u64, bad.map(|b| b.1)))
}

/// Coordinates of length `≤ max_len` enumerate exactly the palindromic
/// factors of `𝔽[1, scan_len]` up to that length.
pub fn cylinder_exhaustive(scan_len: u64, max_len: usize) -> Result<CheckReport> {
    let w = prefix(scan_len)?;
    let mut from_scan: BTreeSet<Vec<u8>> = BTreeSet::new();
    for i in 0..w.len() {
        for l in 1..=max_len.min(w.len() - i) {
            let s = &w[i..i + l];
            if is_palindrome(s) {
                from_scan.insert(s.to_vec());
            }
        }
    }
    let mut from_coords = BTreeSet::new();
    for len in 1..=max_len {
        for c in pals_of_length(&BigUint::from(len))? {
            from_coords.insert(pal_from_coord(&c)?);
        }
    }
    let failure = (from_scan != from_coords).then(|| {
        let missing = from_scan.difference(&from_coords).next();
        let extra = from_coords.difference(&from_scan).next();
        format!(
            "scan-only {:?}, coordinate-only {:?}",
            missing.map(|v| String::from_utf8_lossy(v).into_owned()),
            extra.map(|v| String::from_utf8_lossy(v).into_owned())
        )
    });
    Ok(report(Suite::Cylinder, "exhaustive", from_scan.len() as u64, failure))
}

/// Kernel index mod 3 agrees with the parity/middle-letter rule.
pub fn cylinder_classification(max_m: i32) -> Result<CheckReport> {
    let coords = coords_up_to(max_m);
    let bad = first_failing_item(&coords, |c| match pal_from_coord(c) {
        Ok(w) => (Cylinder::of_word(&w) != Some(c.cylinder()))
            .then(|| format!("{c}: word rule {:?}, index rule {:?}", Cylinder::of_word(&w), c.cylinder())),
        Err(e) => err_str(e),
    });
    Ok(report(Suite::Cylinder, "classification", coords.len() as u64, bad.map(|b| b.1)))
}

/// Two palindromes of each odd length, one of each even length.
pub fn palindromes_per_length(max_len: u64) -> Result<CheckReport> {
    let bad = first_failure(1..max_len + 1, |n| match pals_of_length(&BigUint::from(n)) {
        Ok(v) => {
            let want = if n % 2 == 0 { 1 } else { 2 };
            (v.len() != want).then(|| format!("n={n}: {} palindromes", v.len()))
        }
        Err(e) => err_str(e),
    });
    Ok(report(Suite::Cylinder, "per-length", max_len, bad.map(|b| b.1)))
}

/// No palindromic conjugate of `F_m` iff `m ≡ 1 (mod 3)`, otherwise one.
pub fn conjugate_counts(max_m: i32) -> Result<CheckReport> {
    let mut failure = None;
    for m in -1..=max_m {
        let got = palindromic_conjugates(m)?.len();
        let want = if m.rem_euclid(3) == 1 { 0 } else { 1 };
        if got != want {
            failure = Some(format!("m={m}: {got} palindromic conjugates"));
            break;
        }
    }
    Ok(report(Suite::Cylinder, "conjugates", (max_m + 2) as u64, failure))
}

// ----------------------------------------------------------------- chain

/// `⟨K_m, 1⟩` for consecutive `m` tile `1..=max_n` without gaps or overlap.
pub fn chain_partition(max_n: u64) -> CheckReport {
    let mut expect_lo = 1u64;
    let mut m = -1;
    let mut failure = None;
    while expect_lo <= max_n {
        match chain_interval_u64(m, 1) {
            Some((lo, hi)) if lo == expect_lo && hi - lo + 1 == fib_u64(m + 1).unwrap_or(0) => {
                expect_lo = hi + 1;
            }
            got => {
                failure = Some(format!("m={m}: interval {got:?}, expected to start at {expect_lo}"));
                break;
            }
        }
        m += 1;
    }
    report(Suite::Chain, "partition", max_n, failure)
}

/// Pal endings over `i` fill `⟨K_m, p⟩` exactly.
pub fn interval_bijection(max_m: i32, max_p: u64) -> CheckReport {
    let mut cases = 0;
    let mut failure = None;
    'outer: for m in -1..=max_m.min(14) {
        let top = fib_u64(m + 1).expect("small m");
        for p in 1..=max_p {
            let (lo, hi) = chain_interval_u64(m, p).expect("fits");
            let ends: BTreeSet<u64> =
                (1..=top).map(|i| end_pos_pal_u64(m, i, p).expect("fits")).collect();
            cases += 1;
            if ends.len() as u64 != top || ends.first() != Some(&lo) || ends.last() != Some(&hi) {
                failure = Some(format!("m={m} p={p}"));
                break 'outer;
            }
        }
    }
    report(Suite::Chain, "bijection", cases, failure)
}

/// `P(K_m, p)` against scanned occurrences of `K_m`.
pub fn kernel_positions(max_m: i32, max_p: u64, scan_len: u64) -> Result<CheckReport> {
    let hay = prefix(scan_len)?;
    let mut cases = 0;
    for m in -1..=max_m {
        let k = singular(m)?;
        let ends: Vec<usize> = find_all(&hay, &k).into_iter().map(|s| s + k.len() - 1).collect();
        if (ends.len() as u64) < max_p {
            return Err(domain(format!("prefix of length {scan_len} holds too few K_{m}")));
        }
        for p in 1..=max_p {
            cases += 1;
            let want = ends[p as usize - 1] as u64;
            if end_pos_kernel_u64(m, p) != Some(want) {
                let fail = format!("K_{m}, p={p}: formula {:?}, scan {want}", end_pos_kernel_u64(m, p));
                return Ok(report(Suite::Chain, "kernel-positions", cases, Some(fail)));
            }
        }
    }
    Ok(report(Suite::Chain, "kernel-positions", cases, None))
}

/// Every occurrence in `𝔽[1, scan_len]` of every palindrome of length
/// `≤ max_len` sits where the coordinate formula says.
pub fn palindrome_positions(max_len: u64, scan_len: u64) -> Result<CheckReport> {
    let hay = prefix(scan_len)?;
    let mut coords = Vec::new();
    for len in 1..=max_len {
        coords.extend(pals_of_length(&BigUint::from(len))?);
    }
    let words = coords.iter().map(pal_from_coord).collect::<Result<Vec<_>>>()?;
    let items: Vec<(PalCoord, Vec<u8>)> = coords.into_iter().zip(words).collect();
    let bad = first_failing_item(&items, |(c, w)| {
        let m = c.m;
        let i = c.i.to_u64().expect("small");
        let len = w.len() as u64;
        for (k, start) in find_all(&hay, w).into_iter().enumerate() {
            let p = k as u64 + 1;
            let end = start as u64 + len - 1;
            if end_pos_pal_u64(m, i, p) != Some(end) {
                return Some(format!("{c} p={p}: formula {:?}, scan ends at {end}", end_pos_pal_u64(m, i, p)));
            }
        }
        // the formula must not predict an occurrence the scan missed
        let next = end_pos_pal_u64(m, i, find_all(&hay, w).len() as u64 + 1)?;
        (next <= scan_len).then(|| format!("{c}: predicted occurrence ending at {next} not found"))
    });
    Ok(report(Suite::Chain, "palindrome-positions", items.len() as u64, bad.map(|b| b.1)))
}

/// `P(new_pal_at(n), 1) = n`.
pub fn new_pal_inverts_first_occurrence(max_n: u64) -> CheckReport {
    let bad = first_failure(1..max_n + 1, |n| {
        let (m, i) = new_pal_at_u64(n)?;
        (end_pos_pal_u64(m, i, 1) != Some(n)).then(|| format!("n={n}: coordinate ({m}, {i})"))
    });
    report(Suite::Chain, "new-palindrome", max_n, bad.map(|b| b.1))
}

/// `𝔽[1, n]` is a palindrome exactly for `n = f_m − 2`, and exactly when the
/// new palindrome at `n` starts at 1.
pub fn prefix_palindromes(max_n: u64) -> Result<CheckReport> {
    let w = prefix(max_n)?;
    let predicted: HashSet<u64> = prefix_palindrome_lengths(&BigUint::from(max_n))
        .iter()
        .map(|v| v.to_u64().expect("small"))
        .collect();
    let mut tree = Eertree::with_capacity(w.len());
    let mut failure = None;
    for (k, &c) in w.iter().enumerate() {
        tree.push(c);
        let n = k as u64 + 1;
        let is_pal = tree.longest_suffix_len() as u64 == n;
        let (m, i) = new_pal_at_u64(n).expect("fits");
        let starts_at_one = fib_u64(m + 3).expect("fits") - 2 * i == n;
        if is_pal != predicted.contains(&n) || is_pal != starts_at_one {
            failure = Some(format!("n={n}: palindrome={is_pal}, predicted={}", predicted.contains(&n)));
            break;
        }
    }
    if failure.is_none() {
        if let Some(n) = predicted.iter().find(|&&n| !is_palindrome(&w[..n as usize])) {
            failure = Some(format!("n={n}: predicted prefix is not a palindrome"));
        }
    }
    Ok(report(Suite::Chain, "prefix-palindromes", max_n, failure))
}

// ------------------------------------------------------------------- tau

/// `tau1` splits `⟨K_m, p⟩` exactly for `1 ≤ m ≤ max_m`, `p ≤ max_p`.
pub fn tau_partition(max_m: i32, max_p: u64) -> Result<CheckReport> {
    let mut cases = 0;
    for m in 1..=max_m {
        for p in 1..=max_p {
            cases += 1;
            let s = tau1(m, &BigUint::from(p))?;
            if !s.is_partition() {
                let fail = format!("m={m} p={p}: {} + {} != {}", s.left, s.right, s.parent);
                return Ok(report(Suite::Tau, "tau1-partition", cases, Some(fail)));
            }
        }
    }
    Ok(report(Suite::Tau, "tau1-partition", cases, None))
}

pub fn tau2_maximum(max_p: u64) -> Result<CheckReport> {
    for p in 1..=max_p {
        let c = tau2(&BigUint::from(p))?;
        let (_, hi) = chain_interval_u64(0, p).expect("fits");
        if c.lo != BigUint::from(hi) || c.hi != c.lo {
            return Ok(report(Suite::Tau, "tau2-maximum", p, Some(format!("p={p}: {c}"))));
        }
    }
    Ok(report(Suite::Tau, "tau2-maximum", max_p, None))
}

/// `{P(a,p)+1} ⊔ {P(b,p)+1} = {2, 3, …}`.
pub fn preimage_partition(max_n: u64) -> CheckReport {
    let mut hits = vec![0u8; max_n as usize + 1];
    let mut p = 1u64;
    loop {
        let fp = floor_phi_u64(p);
        let a = p + fp + 1;
        if a > max_n {
            break;
        }
        hits[a as usize] += 1;
        let b = 2 * p + fp + 1;
        if b <= max_n {
            hits[b as usize] += 1;
        }
        p += 1;
    }
    let failure = (2..=max_n)
        .find(|&n| hits[n as usize] != 1)
        .map(|n| format!("n={n} is hit {} times", hits[n as usize]));
    report(Suite::Tau, "preimage-partition", max_n - 1, failure)
}

/// Expansion of `⟨K_4, 1⟩`: eight `⟨a, ·⟩` leaves at known positions, passing
/// through `⟨b, 8⟩ … ⟨b, 12⟩`.
pub fn k4_expansion() -> Result<CheckReport> {
    let tree = expand(4, &BigUint::from(1u32), None)?;
    let small = |iv: &&crate::chain::ChainInterval| (iv.m, iv.p.to_u64().expect("small"), iv.lo.to_u64().expect("small"));
    let leaves: Vec<(i32, u64, u64)> = tree.leaves().iter().map(small).collect();
    let b_nodes: Vec<u64> = tree.nodes().iter().filter(|iv| iv.m == 0).map(|iv| small(iv).1).collect();
    let want_leaves: Vec<(i32, u64, u64)> = (13..=20)
        .zip([21, 22, 24, 25, 27, 29, 30, 32])
        .map(|(p, lo)| (-1, p, lo))
        .collect();
    let failure = if leaves != want_leaves {
        Some(format!("leaves {leaves:?}"))
    } else if b_nodes != [8, 9, 10, 11, 12] {
        Some(format!("<b> nodes {b_nodes:?}"))
    } else {
        None
    };
    Ok(report(Suite::Tau, "k4-expansion", tree.nodes().len() as u64, failure))
}

// ---------------------------------------------------------------- counts

/// `A(n)` and `B(n)` against the palindromic tree for `n ≤ max_n`.
pub fn counts_match_eertree(max_n: u64) -> Result<CheckReport> {
    let w = prefix(max_n)?;
    let tree = Eertree::build(&w);
    let oracle = tree.suffix_counts();
    let mut running = Vec::with_capacity(oracle.len());
    let mut acc = 0u64;
    for &v in oracle {
        acc += v as u64;
        running.push(acc);
    }
    let bad = first_failure(1..max_n + 1, |n| {
        let big = BigUint::from(n);
        let a = ending_count(&big).ok()?;
        let b = occurrence_count(&big);
        let (wa, wb) = (oracle[n as usize - 1] as u64, running[n as usize - 1]);
        (a != wa || b != BigUint::from(wb)).then(|| format!("n={n}: A={a} (tree {wa}), B={b} (tree {wb})"))
    });
    Ok(report(Suite::Counts, "eertree-equivalence", max_n, bad.map(|b| b.1)))
}

pub fn blocks_match_pointwise(max_m: i32) -> Result<CheckReport> {
    let mut cases = 0;
    for m in 3..=max_m {
        let block = a_block(m)?;
        let first = block.first_position();
        for (k, &v) in block.values.iter().enumerate() {
            cases += 1;
            let n = &first + k;
            let a = ending_count(&n)?;
            if a != v {
                let fail = format!("m={m}, n={n}: block {v}, pointwise {a}");
                return Ok(report(Suite::Counts, "blocks", cases, Some(fail)));
            }
        }
    }
    Ok(report(Suite::Counts, "blocks", cases, None))
}

/// Closed forms for `C`, `B(f_m − 2)`, `B(f_m)`, the special `A` values and
/// the convolution identity, against sums read off the palindromic tree.
pub fn closed_forms_match_oracle(max_m: i32) -> Result<CheckReport> {
    let top = fib_u64(max_m + 2).expect("small m");
    let w = prefix(top)?;
    let tree = Eertree::build(&w);
    let a = |n: u64| tree.suffix_counts()[n as usize - 1] as u64;
    let b = |n: u64| (1..=n).map(a).sum::<u64>();
    let f = |m: i32| fib_u64(m).expect("small m");
    let mut cases = 0;
    for m in 1..=max_m {
        let mut fails = Vec::new();
        let block_sum: u64 = (f(m) - 1..=f(m + 1) - 2).map(a).sum();
        if c_closed(m)? != BigUint::from(block_sum) {
            fails.push(format!("C({m})={} but block sum {block_sum}", c_closed(m)?));
        }
        if m >= 3 && f(m - 1) + c_closed(m - 1)? + c_closed(m - 2)? != c_closed(m)? {
            fails.push(format!("C recursion fails at m={m}"));
        }
        if !convolution_check(m)? {
            fails.push(format!("convolution identity fails at m={m}"));
        }
        if m >= 2 {
            if b_fm_minus2(m)? != BigUint::from(b(f(m) - 2)) {
                fails.push(format!("B(f_{m}-2)={} but oracle {}", b_fm_minus2(m)?, b(f(m) - 2)));
            }
            if b_fm(m)? != BigUint::from(b(f(m))) {
                fails.push(format!("B(f_{m})={} but oracle {}", b_fm(m)?, b(f(m))));
            }
            let (x, y, z) = a_special(m)?;
            let want = (a(f(m) - 2), a(f(m) - 1), a(f(m)));
            if (x, y, z) != want || y + z != m as u64 + 1 {
                fails.push(format!("special A at m={m}: {:?} vs oracle {want:?}", (x, y, z)));
            }
        }
        cases += 1;
        if let Some(first) = fails.into_iter().next() {
            return Ok(report(Suite::Counts, "closed-forms", cases, Some(first)));
        }
    }
    Ok(report(Suite::Counts, "closed-forms", cases, None))
}

/// Every `/5` numerator is a multiple of five for `2 ≤ m ≤ max_m`.
pub fn closed_form_divisibility(max_m: i32) -> CheckReport {
    let five = BigInt::from(5);
    let mut failure = None;
    'outer: for m in 2..=max_m {
        for (name, num) in closed_form_numerators(m) {
            if !(num % &five).is_zero() {
                failure = Some(format!("{name} numerator at m={m} is not a multiple of 5"));
                break 'outer;
            }
        }
    }
    report(Suite::Counts, "divisibility", (max_m - 1).max(0) as u64, failure)
}

/// `B(f_{m+1} − 2) − B(f_m − 2) = C(m)`.
pub fn c_telescoping(max_m: i32) -> Result<CheckReport> {
    for m in 2..=max_m {
        if b_fm_minus2(m + 1)? - b_fm_minus2(m)? != c_closed(m)? {
            return Ok(report(Suite::Counts, "telescoping", (m - 1) as u64, Some(format!("m={m}"))));
        }
    }
    Ok(report(Suite::Counts, "telescoping", (max_m - 1).max(0) as u64, None))
}

fn palindromic_suffixes(w: &[u8], n: usize) -> Vec<&[u8]> {
    (0..n).map(|i| &w[i..n]).filter(|s| is_palindrome(s)).collect()
}

/// Palindromic suffixes with kernel index `≤ m` at the `i`-th position of
/// `⟨K_m, p⟩` coincide with all palindromic suffixes at the `i`-th position
/// of `⟨K_m, 1⟩`.
pub fn suffix_correspondence(max_m: i32, max_p: u64) -> Result<CheckReport> {
    let f = |m: i32| fib_u64(m).expect("small m");
    let longest = (max_p + 1) * f(max_m + 1) + (floor_phi_u64(max_p) + 1) * f(max_m);
    let w = prefix(longest)?;
    let mut cases = 0;
    for m in -1..=max_m {
        for i in 1..=f(m + 1) {
            let base_pos = (f(m + 2) + i - 2) as usize;
            let want: BTreeSet<&[u8]> = palindromic_suffixes(&w, base_pos).into_iter().collect();
            for p in 1..=max_p {
                cases += 1;
                let pos = (p * f(m + 1) + (floor_phi_u64(p) + 1) * f(m) + i - 2) as usize;
                let mut got = BTreeSet::new();
                for s in palindromic_suffixes(&w, pos) {
                    if kernel(s, false)?.m <= m {
                        got.insert(s);
                    }
                }
                if got != want {
                    let fail = format!("m={m} p={p} i={i}: positions {pos} vs {base_pos}");
                    return Ok(report(Suite::Counts, "suffix-correspondence", cases, Some(fail)));
                }
            }
        }
    }
    Ok(report(Suite::Counts, "suffix-correspondence", cases, None))
}

// -------------------------------------------------------------- richness

/// `𝔽[1, n]` has exactly `n` distinct nonempty palindromic factors.
pub fn richness(max_n: u64) -> Result<CheckReport> {
    let w = prefix(max_n)?;
    let mut tree = Eertree::with_capacity(w.len());
    for (k, &c) in w.iter().enumerate() {
        tree.push(c);
        if tree.distinct() != k + 1 {
            let fail = format!("n={}: {} distinct palindromes", k + 1, tree.distinct());
            return Ok(report(Suite::Richness, "distinct-equals-n", max_n, Some(fail)));
        }
    }
    let failure = tree.check_invariants().err();
    Ok(report(Suite::Richness, "distinct-equals-n", max_n, failure))
}

/// Palindromic tree against quadratic enumeration on `𝔽[1, n]`.
pub fn eertree_matches_naive(n: u64) -> Result<CheckReport> {
    let w = prefix(n)?;
    let tree = Eertree::build(&w);
    let from_tree: BTreeSet<Vec<u8>> = tree.palindromes().map(<[u8]>::to_vec).collect();
    let failure = if from_tree != naive_distinct_palindromes(&w) {
        Some("distinct palindrome sets differ".to_owned())
    } else if tree.suffix_counts() != naive_suffix_counts(&w).as_slice() {
        Some("per-position suffix counts differ".to_owned())
    } else {
        None
    };
    Ok(report(Suite::Richness, "eertree-vs-naive", n, failure))
}

// ----------------------------------------------------------- return words

/// Every factor of length `≤ max_len` has two return words whose sequence
/// is the Fibonacci word over them.
pub fn return_word_structure(max_len: usize, scan_len: u64) -> Result<CheckReport> {
    let w = prefix(scan_len)?;
    let mut factors: BTreeSet<&[u8]> = BTreeSet::new();
    for len in 1..=max_len {
        factors.extend(w.windows(len));
    }
    let mut cases = 0;
    for fct in factors {
        cases += 1;
        let seq = return_words(fct, scan_len)?;
        if !seq.is_fibonacci()? {
            let fail = format!("{}: coded returns are not Fibonacci", String::from_utf8_lossy(fct));
            return Ok(report(Suite::ReturnWords, "fibonacci-returns", cases, Some(fail)));
        }
    }
    Ok(report(Suite::ReturnWords, "fibonacci-returns", cases, None))
}

// --------------------------------------------------------------- kernels

/// Each factor of length `≤ max_len` contains its kernel exactly once.
pub fn kernel_uniqueness(max_len: usize, scan_len: u64) -> Result<CheckReport> {
    let w = prefix(scan_len)?;
    let mut factors: BTreeSet<&[u8]> = BTreeSet::new();
    for len in 1..=max_len {
        factors.extend(w.windows(len));
    }
    let items: Vec<&[u8]> = factors.into_iter().collect();
    let bad = first_failing_item(&items, |fct| {
        let k = match kernel(fct, false) {
            Ok(k) => k,
            Err(e) => return err_str(e),
        };
        let kw = singular(k.m).ok()?;
        let count = find_all(fct, &kw).len();
        let bigger = singular(k.m + 1).ok().is_some_and(|b| !find_all(fct, &b).is_empty());
        (count != 1 || bigger).then(|| {
            format!("{}: K_{} occurs {count} times", String::from_utf8_lossy(fct), k.m)
        })
    });
    Ok(report(Suite::Kernels, "uniqueness", items.len() as u64, bad.map(|b| b.1)))
}

/// The kernel inside the `p`-th occurrence of a factor is the `p`-th
/// occurrence of the kernel, for sampled factors and `p ≤ max_p`.
pub fn kernel_occurrence_correspondence(max_len: usize, max_p: usize, scan_len: u64) -> Result<CheckReport> {
    let w = prefix(scan_len)?;
    let mut factors: BTreeSet<&[u8]> = BTreeSet::new();
    for len in 1..=max_len {
        factors.extend(w.windows(len));
    }
    let mut cases = 0;
    for fct in factors {
        if find_all(&w, fct).len() < max_p {
            continue;
        }
        cases += 1;
        if !kernel_correspondence(fct, max_p, scan_len)? {
            let fail = format!("{}", String::from_utf8_lossy(fct));
            return Ok(report(Suite::Kernels, "occurrence-correspondence", cases, Some(fail)));
        }
    }
    Ok(report(Suite::Kernels, "occurrence-correspondence", cases, None))
}

/// One row of the closed-form versus palindromic-tree timing comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: u64,
    pub b: BigUint,
    /// Mean time of one closed-form evaluation.
    pub closed_form: Duration,
    /// Time to build the tree over `𝔽[1, n]` and sum its suffix counts.
    pub eertree: Duration,
}

impl BenchRow {
    pub fn speedup(&self) -> f64 {
        self.eertree.as_secs_f64() / self.closed_form.as_secs_f64().max(1e-12)
    }
}

/// Times `B(n)` both ways; the prefix itself is built outside the timed region.
pub fn bench_row(n: u64) -> Result<BenchRow> {
    let big = BigUint::from(n);
    let b = occurrence_count(&big);
    let reps = 200u32;
    let t = Instant::now();
    for _ in 0..reps {
        std::hint::black_box(occurrence_count(std::hint::black_box(&big)));
    }
    let closed_form = t.elapsed() / reps;
    let w = prefix(n)?;
    let t = Instant::now();
    let tree = Eertree::build(&w);
    let total: u64 = tree.suffix_counts().iter().map(|&v| v as u64).sum();
    let eertree = t.elapsed();
    if BigUint::from(total) != b {
        return Err(domain(format!("n={n}: closed form {b}, tree {total}")));
    }
    Ok(BenchRow { n, b, closed_form, eertree })
}
