//! Suffix array, inverse suffix array, LCP array, and cyclic rotation order.
//!
//! All positions are 0-based. Both the suffix order and the rotation order
//! come from one prefix-doubling routine over cyclic conjugates, with
//! counting sorts in each round, for `O(n log n)` total work.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::text::{Symbol, Text};

/// `sa[r]` is the start of the `r`-th smallest suffix, `isa[sa[r]] = r`,
/// `lcp[0] = 0` and `lcp[r]` is the longest common prefix of suffixes
/// `sa[r - 1]` and `sa[r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixContext {
    pub sa: Vec<usize>,
    pub isa: Vec<usize>,
    pub lcp: Vec<usize>,
}

impl SuffixContext {
    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }
}

pub fn build_suffix_context(w: &Text) -> Result<SuffixContext> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(suffix_context(w.symbols()))
}

pub(crate) fn suffix_context(w: &[Symbol]) -> SuffixContext {
    let sa = suffix_order(w);
    let isa = inverse(&sa);
    let lcp = kasai(w, &sa, &isa);
    SuffixContext { sa, isa, lcp }
}

/// Start positions of the rotations of `w` in non-decreasing order of the
/// rotation strings; equal rotations are ordered by start position.
pub fn cyclic_rotation_order(w: &Text) -> Result<Vec<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(rotation_order(w.symbols()))
}

pub(crate) fn rotation_order(w: &[Symbol]) -> Vec<usize> {
    let n = w.len();
    sort_conjugates(compress(w), &[0..n])
}

/// Suffix order of `w`, computed as the rotation order of `w` followed by a
/// unique smallest terminator.
pub(crate) fn suffix_order(w: &[Symbol]) -> Vec<usize> {
    let n = w.len();
    let mut keys: Vec<u32> = compress(w).into_iter().map(|k| k + 1).collect();
    keys.push(0);
    let order = sort_conjugates(keys, &[0..n + 1]);
    debug_assert_eq!(order[0], n);
    order.into_iter().skip(1).collect()
}

pub(crate) fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (r, &p) in perm.iter().enumerate() {
        inv[p] = r;
    }
    inv
}

/// Dense ranks `0..k` preserving symbol order.
pub(crate) fn compress(w: &[Symbol]) -> Vec<u32> {
    let mut alphabet = w.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    w.iter()
        .map(|s| alphabet.binary_search(s).unwrap() as u32)
        .collect()
}

/// Sorts every position `i` of the concatenated cycles by the infinite
/// periodic word `conj(i)^ω`, where `conj(i)` is the conjugate of the cycle
/// containing `i` that starts at `i`. Ties are broken by position.
///
/// `cycles` must partition `0..keys.len()` into consecutive non-empty
/// ranges. `keys` must be dense ranks.
pub(crate) fn sort_conjugates(keys: Vec<u32>, cycles: &[Range<usize>]) -> Vec<usize> {
    let total = keys.len();
    if total == 0 {
        return Vec::new();
    }
    let mut cycle_of: Vec<(usize, usize)> = Vec::with_capacity(total);
    for c in cycles {
        cycle_of.extend(std::iter::repeat((c.start, c.len())).take(c.len()));
    }
    debug_assert_eq!(cycle_of.len(), total);
    let max_len = cycles.iter().map(|c| c.len()).max().unwrap_or(0);
    let uniform = cycles.iter().all(|c| c.len() == max_len);
    // Prefixes of the periodic words of this length decide the order.
    let horizon = if uniform { max_len } else { 2 * max_len };

    let mut class = keys;
    let mut classes = class.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut h = 1usize;
    let mut order: Vec<usize> = (0..total).collect();
    let mut scratch = vec![0usize; total];
    let mut next_of = vec![0usize; total];

    while classes < total && h < horizon {
        for (i, slot) in next_of.iter_mut().enumerate() {
            let (start, len) = cycle_of[i];
            *slot = start + (i - start + h) % len;
        }
        // LSD radix: second half, then first half (both stable).
        counting_sort(&(0..total).collect::<Vec<_>>(), &mut scratch, classes, |i| {
            class[next_of[i]] as usize
        });
        counting_sort(&scratch, &mut order, classes, |i| class[i] as usize);

        let mut fresh = vec![0u32; total];
        let mut count = 0u32;
        for r in 1..total {
            let (a, b) = (order[r - 1], order[r]);
            if class[a] != class[b] || class[next_of[a]] != class[next_of[b]] {
                count += 1;
            }
            fresh[b] = count;
        }
        fresh[order[0]] = 0;
        class = fresh;
        classes = count as usize + 1;
        h = h.saturating_mul(2);
    }

    // Final stable pass in position order settles ties by position.
    counting_sort(&(0..total).collect::<Vec<_>>(), &mut order, classes, |i| {
        class[i] as usize
    });
    order
}

fn counting_sort<F: Fn(usize) -> usize>(input: &[usize], out: &mut [usize], buckets: usize, key: F) {
    let mut start = vec![0usize; buckets + 1];
    for &i in input {
        start[key(i) + 1] += 1;
    }
    for b in 0..buckets {
        start[b + 1] += start[b];
    }
    for &i in input {
        let k = key(i);
        out[start[k]] = i;
        start[k] += 1;
    }
}

fn kasai(w: &[Symbol], sa: &[usize], isa: &[usize]) -> Vec<usize> {
    let n = w.len();
    let mut lcp = vec![0; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = isa[i];
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + h < n && j + h < n && w[i + h] == w[j + h] {
            h += 1;
        }
        lcp[r] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Quadratic reference constructions used to cross-check the fast ones.
pub mod naive {
    use super::SuffixContext;
    use crate::text::Symbol;

    /// Sorts the suffixes by direct comparison and scans each LCP.
    pub fn suffix_context(w: &[Symbol]) -> SuffixContext {
        let n = w.len();
        let mut sa: Vec<usize> = (0..n).collect();
        sa.sort_by(|&a, &b| w[a..].cmp(&w[b..]));
        let mut isa = vec![0; n];
        for (r, &p) in sa.iter().enumerate() {
            isa[p] = r;
        }
        let mut lcp = vec![0; n];
        for r in 1..n {
            lcp[r] = w[sa[r - 1]..]
                .iter()
                .zip(&w[sa[r]..])
                .take_while(|(a, b)| a == b)
                .count();
        }
        SuffixContext { sa, isa, lcp }
    }

    /// Sorts materialized rotations; stable, so ties stay in position order.
    pub fn rotation_order(w: &[Symbol]) -> Vec<usize> {
        let n = w.len();
        let rot = |i: usize| -> Vec<Symbol> { w[i..].iter().chain(&w[..i]).copied().collect() };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_cached_key(|&i| rot(i));
        order
    }
}
