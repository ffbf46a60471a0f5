//! Substring complexity and right-extension counts.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::suffix::suffix_context;
use crate::text::{Symbol, Text};
use crate::Rational;

/// `max_k |S_w(k)| / k`, exact.
pub fn substring_complexity(w: &Text) -> Result<Rational> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    let counts = distinct_substring_counts(w.symbols());
    Ok(counts
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| Rational::new(c as i64, k as i64))
        .max()
        .expect("non-empty text"))
}

/// `out[k]` = number of distinct substrings of length `k`, for `k` in `0..=n`.
///
/// The suffix of rank `r` starts a new length-`k` class exactly when
/// `lcp[r] < k <= n - sa[r]`.
pub fn distinct_substring_counts(w: &[Symbol]) -> Vec<u64> {
    let n = w.len();
    let mut diff = vec![0i64; n + 2];
    diff[0] += 1;
    diff[1] -= 1;
    if n > 0 {
        let ctx = suffix_context(w);
        for r in 0..n {
            let (lo, hi) = (ctx.lcp[r] + 1, n - ctx.sa[r]);
            if lo <= hi {
                diff[lo] += 1;
                diff[hi + 1] -= 1;
            }
        }
    }
    let mut acc = 0i64;
    diff[..=n]
        .iter()
        .map(|d| {
            acc += d;
            acc as u64
        })
        .collect()
}

/// `E_r(w)`: every substring `xa` whose `x` is right-maximal, where `x`
/// (the empty string included) is right-maximal when it is followed by at
/// least two distinct symbols in `w` or is a suffix of `w`.
///
/// Enumerates every substring occurrence; meant for short texts. See
/// [`right_extension_count`] for the size alone.
pub fn right_extensions(w: &Text) -> Result<Vec<Text>> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    let s = w.symbols();
    let n = s.len();
    let mut followers: HashMap<&[Symbol], BTreeSet<Symbol>> = HashMap::new();
    for i in 0..=n {
        for j in i..=n {
            let entry = followers.entry(&s[i..j]).or_default();
            if j < n {
                entry.insert(s[j]);
            }
        }
    }
    let mut out: BTreeSet<Vec<Symbol>> = BTreeSet::new();
    for (x, next) in &followers {
        let is_suffix = s.ends_with(x);
        if next.len() >= 2 || is_suffix {
            for &a in next {
                let mut xa = x.to_vec();
                xa.push(a);
                out.insert(xa);
            }
        }
    }
    Ok(out.into_iter().map(|v| w.derive(v)).collect())
}

/// `e(w) = |E_r(w)|` in `O(n log n)`.
///
/// Every right-maximal `x` that has a follower occurs at least twice, so it
/// is the label of an lcp-interval. Walking the lcp-interval tree bottom-up
/// gives each node's depth, left bound and child count; the followers of
/// the node are its children minus the child that is `x` itself when `x` is
/// a suffix of `w`.
pub fn right_extension_count(w: &Text) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    let n = w.len();
    let ctx = suffix_context(w.symbols());
    struct Node {
        depth: usize,
        lb: usize,
        boundaries: usize,
    }
    // Non-root nodes always have two or more followers unless `x` is itself
    // a suffix, in which case it is right-maximal anyway: every node counts.
    let finalize = |node: &Node| -> usize {
        let exact = node.depth > 0 && n - ctx.sa[node.lb] == node.depth;
        node.boundaries + 1 - usize::from(exact)
    };
    let mut total = 0;
    let mut stack = vec![Node {
        depth: 0,
        lb: 0,
        boundaries: 0,
    }];
    for t in 1..n {
        let l = ctx.lcp[t];
        let mut lb = t - 1;
        while stack.last().is_some_and(|top| top.depth > l) {
            let node = stack.pop().unwrap();
            total += finalize(&node);
            lb = node.lb;
        }
        let top = stack.last_mut().unwrap();
        if top.depth == l {
            top.boundaries += 1;
        } else {
            stack.push(Node {
                depth: l,
                lb,
                boundaries: 1,
            });
        }
    }
    while let Some(node) = stack.pop() {
        total += finalize(&node);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Text {
        Text::from_ascii(s)
    }

    #[test]
    fn delta_examples() {
        assert_eq!(substring_complexity(&t("aaaa")).unwrap(), Rational::from_integer(1));
        assert_eq!(substring_complexity(&t("ab")).unwrap(), Rational::from_integer(2));
        assert_eq!(
            substring_complexity(&t("abracadabracabra")).unwrap(),
            Rational::from_integer(5)
        );
        assert_eq!(substring_complexity(&t("")), Err(Error::EmptyText));
    }

    #[test]
    fn distinct_counts_small() {
        // abab: {a,b}, {ab,ba}, {aba,bab}, {abab}
        assert_eq!(distinct_substring_counts(t("abab").symbols()), [1, 2, 2, 2, 1]);
    }

    #[test]
    fn right_extension_examples() {
        let w = t("abbbbb");
        let ext: Vec<String> = right_extensions(&w).unwrap().iter().map(Text::to_string).collect();
        assert_eq!(ext, ["a", "b", "bb", "bbb", "bbbb", "bbbbb"]);
        assert_eq!(right_extension_count(&w).unwrap(), 6);

        let w = t("bbbbba");
        assert_eq!(right_extensions(&w).unwrap().len(), 10);
        assert_eq!(right_extension_count(&w).unwrap(), 10);

        let w = t("ab");
        assert_eq!(right_extensions(&w).unwrap(), [t("a"), t("b")]);
        assert_eq!(right_extension_count(&w).unwrap(), 2);
    }

    #[test]
    fn count_matches_enumeration() {
        for s in ["a", "aaa", "aba", "abracadabracabra", "mississippi", "baabaaba"] {
            let w = t(s);
            assert_eq!(
                right_extension_count(&w).unwrap(),
                right_extensions(&w).unwrap().len(),
                "{s}"
            );
        }
    }
}
