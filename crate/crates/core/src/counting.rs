//! Recursive structure of the chain intervals and occurrence counting.
//!
//! `A(n)` is the number of palindrome occurrences ending exactly at `n` and
//! `B(n) = A(1) + … + A(n)` the number of palindrome occurrences in
//! `𝔽[1, n]`. Both are evaluated in `O(log n)` big-integer steps: `A` by the
//! block self-similarity of the vector `[A(f_m − 1), …, A(f_{m+1} − 2)]`,
//! `B` by a closed form for `B(f_m − 2)` plus a telescoping tail sum.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::chain::{chain_interval, end_pos_a, end_pos_b, ChainInterval};
use crate::error::{domain, Result};
use crate::fibword::{check_cap, FibTable};

/// One application of the split `⟨K_m,p⟩ = ⟨K_{m−2},P(b,p)+1⟩ ⊔ ⟨K_{m−1},P(a,p)+1⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauStep {
    pub parent: ChainInterval,
    pub left: ChainInterval,
    pub right: ChainInterval,
}

impl TauStep {
    /// Whether the children tile the parent exactly, left then right.
    pub fn is_partition(&self) -> bool {
        self.left.lo == self.parent.lo
            && self.right.hi == self.parent.hi
            && &self.left.hi + 1u32 == self.right.lo
    }
}

/// Splits `⟨K_m, p⟩` for `m ≥ 1`.
pub fn tau1(m: i32, p: &BigUint) -> Result<TauStep> {
    if m < 1 {
        return Err(domain(format!("tau1 needs m >= 1, got {m}; use tau2 for m = 0")));
    }
    let parent = chain_interval(m, p)?;
    let left = chain_interval(m - 2, &(end_pos_b(p) + 1u32))?;
    let right = chain_interval(m - 1, &(end_pos_a(p) + 1u32))?;
    let step = TauStep { parent, left, right };
    assert!(step.is_partition(), "tau1 split of <K_{m},{p}> is not a partition");
    Ok(step)
}

/// Maps `⟨b, p⟩` to the singleton `⟨a, P(a,p)+1⟩`, which is `{max ⟨b, p⟩}`.
pub fn tau2(p: &BigUint) -> Result<ChainInterval> {
    let parent = chain_interval(0, p)?;
    let child = chain_interval(-1, &(end_pos_a(p) + 1u32))?;
    assert!(
        child.lo == child.hi && child.lo == parent.hi,
        "tau2 image of <b,{p}> is not its maximum"
    );
    Ok(child)
}

/// A node of the recursive expansion of a chain interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauNode {
    pub interval: ChainInterval,
    pub children: Vec<TauNode>,
}

impl TauNode {
    /// Intervals at the bottom of the expansion, left to right.
    pub fn leaves(&self) -> Vec<&ChainInterval> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a ChainInterval>) {
        if self.children.is_empty() {
            out.push(&self.interval);
        }
        for c in &self.children {
            c.collect_leaves(out);
        }
    }

    /// Every node in pre-order.
    pub fn nodes(&self) -> Vec<&ChainInterval> {
        let mut out = vec![&self.interval];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(TauNode::depth).max().unwrap_or(0)
    }
}

/// Expands `⟨K_m, p⟩` by `tau1`/`tau2` down to `⟨a, ·⟩` leaves, or at most
/// `max_depth` levels when given.
pub fn expand(m: i32, p: &BigUint, max_depth: Option<usize>) -> Result<TauNode> {
    let interval = chain_interval(m, p)?;
    let children = match max_depth {
        Some(0) => Vec::new(),
        _ => {
            let next = max_depth.map(|d| d - 1);
            match m {
                -1 => Vec::new(),
                0 => {
                    let c = tau2(p)?;
                    vec![expand(-1, &c.p, next)?]
                }
                _ => {
                    let s = tau1(m, p)?;
                    vec![expand(m - 2, &s.left.p, next)?, expand(m - 1, &s.right.p, next)?]
                }
            }
        }
    };
    Ok(TauNode { interval, children })
}

const A_BASE: [u64; 6] = [1, 1, 2, 2, 2, 3];

/// Smallest first index of the `A` block recursion that applies.
const A_RECURSION_FROM: u64 = 4;

/// Locates the block `m` holding position `n`: `f_m ≤ n + 1 < f_{m+1}`.
fn block_of(table: &mut FibTable, n: &BigUint) -> i32 {
    table.index_at_most(&(n + 1u32)).expect("n + 1 >= 1")
}

/// `A(n)`: palindrome occurrences ending at position `n`.
pub fn ending_count(n: &BigUint) -> Result<u64> {
    ending_count_with(&mut FibTable::new(), n)
}

fn ending_count_with(table: &mut FibTable, n: &BigUint) -> Result<u64> {
    if n.is_zero() {
        return Err(domain("A(n) is defined for n >= 1"));
    }
    let mut cur = n.clone();
    let mut m = block_of(table, &cur);
    let mut depth = 0u64;
    while cur >= BigUint::from(A_RECURSION_FROM) {
        while table.get(m) > &(&cur + 1u32) {
            m -= 1;
        }
        debug_assert!(m >= 3);
        cur -= table.get(m - 1);
        depth += 1;
    }
    let base = cur.to_usize().expect("base position < 4");
    Ok(depth + A_BASE[base - 1])
}

/// The vector `[A(f_m − 1), …, A(f_{m+1} − 2)]` of length `f_{m−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ABlock {
    pub m: i32,
    pub values: Vec<u64>,
}

impl ABlock {
    /// First position covered, `f_m − 1`.
    pub fn first_position(&self) -> BigUint {
        crate::fibword::fib(self.m).expect("m >= 1") - 1u32
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().sum()
    }
}

/// Builds block `m ≥ 1` by concatenating blocks `m − 2` and `m − 1` and adding one.
pub fn a_block(m: i32) -> Result<ABlock> {
    if m < 1 {
        return Err(domain(format!("A blocks start at m = 1, got {m}")));
    }
    check_cap(crate::fibword::fib(m - 1)?)?;
    let mut older: Vec<u64> = vec![1];
    if m == 1 {
        return Ok(ABlock { m, values: older });
    }
    let mut newer: Vec<u64> = vec![1, 2];
    for _ in 3..=m {
        let mut next = Vec::with_capacity(older.len() + newer.len());
        next.extend(older.iter().chain(newer.iter()).map(|v| v + 1));
        older = std::mem::replace(&mut newer, next);
    }
    Ok(ABlock { m, values: newer })
}

/// Exact division by five of a numerator known to be a multiple of five.
fn fifth(numerator: BigInt) -> BigInt {
    let (q, r) = numerator.div_rem(&BigInt::from(5));
    assert!(r.is_zero(), "closed-form numerator {numerator} is not a multiple of 5");
    q
}

fn to_natural(v: BigInt) -> BigUint {
    match v.sign() {
        Sign::Minus => panic!("closed form produced a negative count {v}"),
        _ => v.magnitude().clone(),
    }
}

fn fb(table: &mut FibTable, m: i32) -> BigInt {
    BigInt::from(table.get(m).clone())
}

/// `C(m) = ((m+1)·f_{m+1} + (m−2)·f_{m−1}) / 5`, the sum of block `m`.
pub fn c_closed(m: i32) -> Result<BigUint> {
    if m < 1 {
        return Err(domain(format!("C(m) is defined for m >= 1, got {m}")));
    }
    let t = &mut FibTable::new();
    let num = BigInt::from(m + 1) * fb(t, m + 1) + BigInt::from(m - 2) * fb(t, m - 1);
    Ok(to_natural(fifth(num)))
}

/// `B(f_m − 2) = ((m−3)·f_{m+2} + (m−1)·f_m) / 5 + 2`.
pub fn b_fm_minus2(m: i32) -> Result<BigUint> {
    if m < 2 {
        return Err(domain(format!("B(f_m - 2) is stated for m >= 2, got {m}")));
    }
    Ok(to_natural(b_fm_minus2_with(&mut FibTable::new(), m)))
}

fn b_fm_minus2_with(t: &mut FibTable, m: i32) -> BigInt {
    let num = BigInt::from(m - 3) * fb(t, m + 2) + BigInt::from(m - 1) * fb(t, m);
    fifth(num) + 2
}

/// `B(f_m) = ((m−3)·f_{m+2} + (m−1)·f_m) / 5 + m + 3`, the count in `F_m`.
pub fn b_fm(m: i32) -> Result<BigUint> {
    if m < 2 {
        return Err(domain(format!("B(f_m) is stated for m >= 2, got {m}")));
    }
    let t = &mut FibTable::new();
    let num = BigInt::from(m - 3) * fb(t, m + 2) + BigInt::from(m - 1) * fb(t, m);
    Ok(to_natural(fifth(num) + m + 3))
}

/// `(A(f_m − 2), A(f_m − 1), A(f_m))` in closed form.
pub fn a_special(m: i32) -> Result<(u64, u64, u64)> {
    if m < 2 {
        return Err(domain(format!("special values are stated for m >= 2, got {m}")));
    }
    let m = m as u64;
    Ok((m - 1, m.div_ceil(2), m / 2 + 1))
}

/// Compares `Σ_{i=−1}^{m} f_i·f_{m−i−1}` with `((m+2)·f_{m+2} + (m+4)·f_m) / 5`.
pub fn convolution_check(m: i32) -> Result<bool> {
    if m < 1 {
        return Err(domain(format!("the convolution identity is stated for m >= 1, got {m}")));
    }
    let t = &mut FibTable::new();
    let mut lhs = BigUint::zero();
    for i in -1..=m {
        lhs += t.get(i).clone() * t.get(m - i - 1);
    }
    let num = BigInt::from(m + 2) * fb(t, m + 2) + BigInt::from(m + 4) * fb(t, m);
    let (q, r) = num.div_rem(&BigInt::from(5));
    Ok(r.is_zero() && BigInt::from(lhs) == q)
}

/// The integer numerators that every closed form divides by five, at `m`.
///
/// Each must be a multiple of five; `m ≥ 2` so that every index is `≥ −1`.
pub fn closed_form_numerators(m: i32) -> Vec<(&'static str, BigInt)> {
    assert!(m >= 2, "numerators are defined for m >= 2");
    let t = &mut FibTable::new();
    let k = |x: i32| BigInt::from(x);
    vec![
        ("C(m)", k(m + 1) * fb(t, m + 1) + k(m - 2) * fb(t, m - 1)),
        ("B(f_m-2)", k(m - 3) * fb(t, m + 2) + k(m - 1) * fb(t, m)),
        ("tail constant", k(m - 11) * fb(t, m - 1) + k(m + 1) * fb(t, m - 3)),
        ("convolution", k(m + 2) * fb(t, m + 2) + k(m + 4) * fb(t, m)),
    ]
}

/// Which branch of the tail recursion a step took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailCase {
    /// `n + 1 < 2·f_{m−1}`: the sum falls inside the copy of block `m − 2`.
    Head,
    /// Otherwise: it covers block `m − 2` whole and part of block `m − 1`.
    Tail,
}

/// One reduction `Σ_{f_m−1}^{n} A = Σ_{·}^{n − f_{m−1}} A + constant`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailStep {
    pub m: i32,
    pub n: BigUint,
    pub case: TailCase,
    pub constant: BigUint,
    pub next: BigUint,
}

/// Full derivation of `B(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BTrace {
    pub n: BigUint,
    /// Block index with `f_m ≤ n + 1 < f_{m+1}`.
    pub m: i32,
    /// `B(f_m − 2)` from the closed form.
    pub base: BigUint,
    /// `Σ_{i=f_m−1}^{n} A(i)`.
    pub tail: BigUint,
    pub steps: Vec<TailStep>,
    /// Direct-table contribution at the bottom of the recursion.
    pub base_sum: u64,
    pub total: BigUint,
}

const TAIL_TABLE_BELOW: u64 = 7;

/// `Σ_{i=f_m−1}^{n} A(i)` where `f_m ≤ n + 1 < f_{m+1}`.
pub fn tail_sum(n: &BigUint) -> Result<BigUint> {
    Ok(tail_sum_traced(&mut FibTable::new(), n)?.0)
}

fn tail_sum_traced(t: &mut FibTable, n: &BigUint) -> Result<(BigUint, Vec<TailStep>, u64)> {
    if n.is_zero() {
        return Err(domain("tail sums are defined for n >= 1"));
    }
    let mut steps = Vec::new();
    let mut acc = BigUint::zero();
    let mut cur = n.clone();
    let mut m = block_of(t, &cur);
    while cur >= BigUint::from(TAIL_TABLE_BELOW) {
        debug_assert_eq!(block_of(t, &cur), m);
        let twice_prev = t.get(m - 1).clone() * 2u32;
        let (case, constant, next_m) = if &cur + 1u32 < twice_prev {
            (TailCase::Head, &cur + 2u32 - t.get(m), m - 2)
        } else {
            let num = BigInt::from(m - 11) * fb(t, m - 1) + BigInt::from(m + 1) * fb(t, m - 3);
            let c = BigInt::from(cur.clone()) + fifth(num) + 2;
            (TailCase::Tail, to_natural(c), m - 1)
        };
        let next = &cur - t.get(m - 1);
        acc += &constant;
        steps.push(TailStep { m, n: cur, case, constant, next: next.clone() });
        cur = next;
        m = next_m;
    }
    let lo = t.get(m).to_usize().expect("small block") - 1;
    let hi = cur.to_usize().expect("small position");
    let base_sum: u64 = A_BASE[lo - 1..hi].iter().sum();
    acc += base_sum;
    Ok((acc, steps, base_sum))
}

/// `B(n)`: palindrome occurrences in `𝔽[1, n]`, counted with repetition. `B(0) = 0`.
pub fn occurrence_count(n: &BigUint) -> BigUint {
    occurrence_count_traced(n).total
}

/// [`occurrence_count`] together with its derivation.
pub fn occurrence_count_traced(n: &BigUint) -> BTrace {
    let t = &mut FibTable::new();
    if n.is_zero() {
        return BTrace {
            n: n.clone(),
            m: 0,
            base: BigUint::zero(),
            tail: BigUint::zero(),
            steps: Vec::new(),
            base_sum: 0,
            total: BigUint::zero(),
        };
    }
    let m = block_of(t, n);
    let base = if m >= 2 { to_natural(b_fm_minus2_with(t, m)) } else { BigUint::zero() };
    let (tail, steps, base_sum) = tail_sum_traced(t, n).expect("n >= 1");
    let total = &base + &tail;
    BTrace { n: n.clone(), m, base, tail, steps, base_sum, total }
}

/// Memo tables for repeated `A`/tail-sum queries.
#[derive(Debug, Default, Clone)]
pub struct CountState {
    table: FibTable,
    memo_a: HashMap<BigUint, u64>,
    memo_tail: HashMap<(i32, BigUint), BigUint>,
}

impl CountState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ending_count(&mut self, n: &BigUint) -> Result<u64> {
        if let Some(v) = self.memo_a.get(n) {
            return Ok(*v);
        }
        let v = ending_count_with(&mut self.table, n)?;
        self.memo_a.insert(n.clone(), v);
        Ok(v)
    }

    pub fn tail_sum(&mut self, n: &BigUint) -> Result<BigUint> {
        if n.is_zero() {
            return Err(domain("tail sums are defined for n >= 1"));
        }
        let key = (block_of(&mut self.table, n), n.clone());
        if let Some(v) = self.memo_tail.get(&key) {
            return Ok(v.clone());
        }
        let (v, steps, _) = tail_sum_traced(&mut self.table, n)?;
        // every suffix of the reduction path is itself a tail sum
        let mut rest = v.clone();
        for s in &steps {
            self.memo_tail.entry((s.m, s.n.clone())).or_insert_with(|| rest.clone());
            rest -= &s.constant;
        }
        self.memo_tail.insert(key, v.clone());
        Ok(v)
    }

    pub fn occurrence_count(&mut self, n: &BigUint) -> BigUint {
        if n.is_zero() {
            return BigUint::zero();
        }
        let m = block_of(&mut self.table, n);
        let base = if m >= 2 { to_natural(b_fm_minus2_with(&mut self.table, m)) } else { BigUint::zero() };
        base + self.tail_sum(n).expect("n >= 1")
    }

    pub fn memo_len(&self) -> (usize, usize) {
        (self.memo_a.len(), self.memo_tail.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn pair(iv: &ChainInterval) -> (u64, u64) {
        (iv.lo.to_u64().unwrap(), iv.hi.to_u64().unwrap())
    }

    #[test]
    fn tau1_examples() {
        let s = tau1(4, &big(1)).unwrap();
        assert_eq!((s.left.m, s.left.p.clone(), pair(&s.left)), (2, big(3), (20, 24)));
        assert_eq!((s.right.m, s.right.p.clone(), pair(&s.right)), (3, big(2), (25, 32)));
        let s = tau1(1, &big(1)).unwrap();
        assert_eq!((s.left.m, s.left.p.clone(), pair(&s.left)), (-1, big(3), (4, 4)));
        assert_eq!((s.right.m, s.right.p.clone(), pair(&s.right)), (0, big(2), (5, 6)));
        let s = tau1(2, &big(1)).unwrap();
        assert_eq!((s.left.m, s.left.p.clone(), pair(&s.left)), (0, big(3), (7, 8)));
        assert_eq!((s.right.m, s.right.p.clone(), pair(&s.right)), (1, big(2), (9, 11)));
        assert!(tau1(0, &big(1)).is_err());
    }

    #[test]
    fn tau2_examples() {
        let c = tau2(&big(1)).unwrap();
        assert_eq!((c.p.clone(), pair(&c)), (big(2), (3, 3)));
        let c = tau2(&big(2)).unwrap();
        assert_eq!((c.p.clone(), pair(&c)), (big(4), (6, 6)));
        let c = tau2(&big(5)).unwrap();
        assert_eq!((c.p.clone(), pair(&c)), (big(9), (14, 14)));
    }

    #[test]
    fn ending_count_examples() {
        assert_eq!(ending_count(&big(1)).unwrap(), 1);
        assert_eq!(ending_count(&big(6)).unwrap(), 3);
        assert_eq!(ending_count(&big(32)).unwrap(), 6);
        assert!(ending_count(&big(0)).is_err());
    }

    #[test]
    fn block_examples() {
        assert_eq!(a_block(1).unwrap().values, vec![1]);
        assert_eq!(a_block(2).unwrap().values, vec![1, 2]);
        assert_eq!(a_block(3).unwrap().values, vec![2, 2, 3]);
        assert_eq!(a_block(4).unwrap().values, vec![2, 3, 3, 3, 4]);
        assert_eq!(a_block(5).unwrap().values, vec![3, 3, 4, 3, 4, 4, 4, 5]);
        assert_eq!(a_block(6).unwrap().values, vec![3, 4, 4, 4, 5, 4, 4, 5, 4, 5, 5, 5, 6]);
        assert!(a_block(0).is_err());
    }

    #[test]
    fn blocks_match_pointwise() {
        for m in 1..=20 {
            let b = a_block(m).unwrap();
            let first = b.first_position();
            for (k, v) in b.values.iter().enumerate() {
                assert_eq!(ending_count(&(&first + k)).unwrap(), *v, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn tail_sum_examples() {
        assert_eq!(tail_sum(&big(29)).unwrap(), big(42));
        assert_eq!(tail_sum(&big(8)).unwrap(), big(5));
        assert_eq!(tail_sum(&big(16)).unwrap(), big(17));
    }

    #[test]
    fn tail_trace_matches_worked_example() {
        let (v, steps, base) = tail_sum_traced(&mut FibTable::new(), &big(29)).unwrap();
        assert_eq!(v, big(42));
        let summary: Vec<_> = steps
            .iter()
            .map(|s| (s.m, s.n.to_u64().unwrap(), s.case, s.constant.to_u64().unwrap()))
            .collect();
        assert_eq!(
            summary,
            vec![(6, 29, TailCase::Tail, 25), (5, 16, TailCase::Tail, 12), (4, 8, TailCase::Head, 2)]
        );
        assert_eq!(base, 3);
    }

    #[test]
    fn occurrence_count_examples() {
        assert_eq!(occurrence_count(&big(0)), big(0));
        assert_eq!(occurrence_count(&big(1)), big(1));
        assert_eq!(occurrence_count(&big(2)), big(2));
        assert_eq!(occurrence_count(&big(3)), big(4));
        assert_eq!(occurrence_count(&big(13)), big(32));
        assert_eq!(occurrence_count(&big(19)), big(56));
        assert_eq!(occurrence_count(&big(29)), big(98));
        let tr = occurrence_count_traced(&big(29));
        assert_eq!((tr.m, tr.base.clone(), tr.tail.clone()), (6, big(56), big(42)));
    }

    #[test]
    fn occurrence_count_is_running_sum() {
        let mut running = 0u64;
        for n in 1..3000u64 {
            running += ending_count(&big(n)).unwrap();
            assert_eq!(occurrence_count(&big(n)), big(running), "n={n}");
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(c_closed(1).unwrap(), big(1));
        assert_eq!(c_closed(4).unwrap(), big(15));
        assert_eq!(c_closed(5).unwrap(), big(30));
        assert_eq!(b_fm_minus2(2).unwrap(), big(1));
        assert_eq!(b_fm_minus2(3).unwrap(), big(4));
        assert_eq!(b_fm_minus2(6).unwrap(), big(56));
        assert_eq!(b_fm(5).unwrap(), big(32));
        assert_eq!(b_fm(6).unwrap(), big(63));
        assert_eq!(b_fm(2).unwrap(), big(4));
        assert_eq!(a_special(6).unwrap(), (5, 3, 4));
        assert_eq!(a_special(5).unwrap(), (4, 3, 3));
        assert_eq!(a_special(2).unwrap(), (1, 1, 2));
        assert!(c_closed(0).is_err());
        assert!(b_fm_minus2(1).is_err());
        assert!(b_fm(1).is_err());
        assert!(a_special(1).is_err());
    }

    #[test]
    fn convolution_examples() {
        assert!(convolution_check(1).unwrap());
        assert!(convolution_check(2).unwrap());
        assert!(convolution_check(20).unwrap());
        assert!(convolution_check(0).is_err());
    }

    #[test]
    fn k4_expansion() {
        let tree = expand(4, &big(1), None).unwrap();
        let leaves: Vec<_> = tree.leaves().iter().map(|iv| (iv.m, iv.p.to_u64().unwrap())).collect();
        assert_eq!(leaves, (13..=20).map(|p| (-1, p)).collect::<Vec<_>>());
        let b_nodes: Vec<_> = tree
            .nodes()
            .iter()
            .filter(|iv| iv.m == 0)
            .map(|iv| iv.p.to_u64().unwrap())
            .collect();
        assert_eq!(b_nodes, vec![8, 9, 10, 11, 12]);
        let shallow = expand(4, &big(1), Some(1)).unwrap();
        assert_eq!(shallow.depth(), 2);
    }

    #[test]
    fn count_state_memo_is_consistent() {
        let mut st = CountState::new();
        for n in (1..2000u64).rev() {
            let n = big(n);
            assert_eq!(st.ending_count(&n).unwrap(), ending_count(&n).unwrap());
            assert_eq!(st.occurrence_count(&n), occurrence_count(&n));
        }
        for n in 1..2000u64 {
            assert_eq!(st.tail_sum(&big(n)).unwrap(), tail_sum(&big(n)).unwrap());
        }
        assert!(st.memo_len().1 > 0);
    }

    #[test]
    fn huge_n_is_fast_and_shallow() {
        let n = BigUint::from(10u32).pow(18);
        let tr = occurrence_count_traced(&n);
        assert!(tr.steps.len() <= 90);
        assert!(ending_count(&n).unwrap() < 90);
    }
}
