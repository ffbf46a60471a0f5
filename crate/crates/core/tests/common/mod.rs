//! Brute-force reference implementations. Quadratic to exponential; only for
//! short inputs.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use rand::Rng;
use revsense::text::{Symbol, Text};

pub fn ranks(w: &Text) -> Vec<u32> {
    w.symbols().iter().map(|s| s.rank()).collect()
}

pub fn text(r: &[u32]) -> Text {
    Text::from_ranks(r.iter().copied())
}

pub fn random_ranks<R: Rng>(rng: &mut R, max_len: usize, sigma: u32) -> Vec<u32> {
    let n = rng.gen_range(1..=max_len);
    (0..n).map(|_| rng.gen_range(0..sigma)).collect()
}

pub fn suffix_array(s: &[u32]) -> Vec<usize> {
    let mut sa: Vec<usize> = (0..s.len()).collect();
    sa.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
    sa
}

fn common_prefix(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// `lcp[r]` between suffix ranks `r - 1` and `r`; `lcp[0] = 0`.
pub fn lcp_array(s: &[u32], sa: &[usize]) -> Vec<usize> {
    (0..sa.len())
        .map(|r| if r == 0 { 0 } else { common_prefix(&s[sa[r - 1]..], &s[sa[r]..]) })
        .collect()
}

fn rotation(s: &[u32], i: usize) -> Vec<u32> {
    s[i..].iter().chain(&s[..i]).copied().collect()
}

/// Rotation start positions in sorted order, ties broken by position.
pub fn rotation_order(s: &[u32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..s.len()).collect();
    idx.sort_by_key(|&i| (rotation(s, i), i));
    idx
}

pub fn bwt(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    rotation_order(s).into_iter().map(|i| s[(i + n - 1) % n]).collect()
}

/// BWT of `s$` over ranks shifted up by one, `$` being rank 0.
pub fn bwt_sentinel(s: &[u32]) -> Vec<u32> {
    let mut t: Vec<u32> = s.iter().map(|c| c + 1).collect();
    t.push(0);
    bwt(&t)
}

pub fn is_lyndon(s: &[u32]) -> bool {
    !s.is_empty() && (1..s.len()).all(|i| s < &s[i..])
}

/// Each factor is the longest Lyndon prefix of what remains.
pub fn lyndon_factors(s: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let len = (1..=s.len() - i).rev().find(|&l| is_lyndon(&s[i..i + l])).unwrap();
        out.push(s[i..i + len].to_vec());
        i += len;
    }
    out
}

/// Compares `x^ω` and `y^ω` through their common length `|x||y|`.
pub fn omega_cmp(x: &[u32], y: &[u32]) -> std::cmp::Ordering {
    let xx: Vec<u32> = x.iter().copied().cycle().take(x.len() * y.len()).collect();
    let yy: Vec<u32> = y.iter().copied().cycle().take(x.len() * y.len()).collect();
    xx.cmp(&yy)
}

pub fn bbwt(s: &[u32]) -> Vec<u32> {
    let mut conj: Vec<Vec<u32>> = Vec::new();
    for f in lyndon_factors(s) {
        for i in 0..f.len() {
            conj.push(rotation(&f, i));
        }
    }
    conj.sort_by(|a, b| omega_cmp(a, b));
    conj.into_iter().map(|c| *c.last().unwrap()).collect()
}

pub fn runs(s: &[u32]) -> usize {
    if s.is_empty() {
        0
    } else {
        1 + s.windows(2).filter(|p| p[0] != p[1]).count()
    }
}

/// Longest `l` with `s[i..i+l] = s[j..j+l]` for some `j < i`.
fn lpf(s: &[u32], i: usize) -> usize {
    (0..i).map(|j| common_prefix(&s[j..], &s[i..])).max().unwrap_or(0)
}

/// Phrase lengths of greedy LZ (overlap allowed).
pub fn lz(s: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let l = lpf(s, i).max(1);
        out.push(l);
        i += l;
    }
    out
}

/// Phrase lengths of greedy LZ with the source ending at or before `i`.
pub fn lz_no_overlap(s: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let l = (0..i)
            .map(|j| common_prefix(&s[j..i], &s[i..]))
            .max()
            .unwrap_or(0)
            .max(1);
        out.push(l);
        i += l;
    }
    out
}

/// Longest `l` such that `s[i..i+l]` also ends exactly at some `e` in `ends`.
fn end_match(s: &[u32], i: usize, ends: &BTreeSet<usize>) -> usize {
    (1..=s.len() - i)
        .rev()
        .find(|&l| ends.iter().any(|&e| e >= l && s[e - l..e] == s[i..i + l]))
        .unwrap_or(0)
}

pub fn lz_end_greedy(s: &[u32]) -> Vec<usize> {
    let mut ends = BTreeSet::new();
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let l = end_match(s, i, &ends).max(1);
        out.push(l);
        i += l;
        ends.insert(i);
    }
    out
}

/// Size of the smallest LZ-End parsing by exhaustive search. Exponential.
pub fn z_end(s: &[u32]) -> usize {
    fn go(
        s: &[u32],
        i: usize,
        ends: &mut BTreeSet<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), usize>,
    ) -> usize {
        if i == s.len() {
            return 0;
        }
        let key = (i, ends.iter().copied().collect::<Vec<_>>());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut best = usize::MAX;
        for l in 1..=s.len() - i {
            let ok = l == 1 || ends.iter().any(|&e| e >= l && s[e - l..e] == s[i..i + l]);
            if ok {
                let fresh = ends.insert(i + l);
                best = best.min(1 + go(s, i + l, ends, memo));
                if fresh {
                    ends.remove(&(i + l));
                }
            }
        }
        memo.insert(key, best);
        best
    }
    go(s, 0, &mut BTreeSet::new(), &mut HashMap::new())
}

/// Fewest phrases when every phrase is a single symbol or has an earlier
/// starting occurrence (overlap allowed).
pub fn min_left_source_parsing(s: &[u32]) -> usize {
    let n = s.len();
    let mut dp = vec![usize::MAX; n + 1];
    dp[n] = 0;
    for i in (0..n).rev() {
        let reach = lpf(s, i).max(1);
        dp[i] = (1..=reach).map(|l| 1 + dp[i + l]).min().unwrap();
    }
    dp[0]
}

/// Phrase lengths of the lex-parse.
pub fn lex_parse(s: &[u32]) -> Vec<usize> {
    let sa = suffix_array(s);
    let mut rank = vec![0; s.len()];
    for (r, &i) in sa.iter().enumerate() {
        rank[i] = r;
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let r = rank[i];
        let l = if r == 0 { 0 } else { common_prefix(&s[sa[r - 1]..], &s[i..]) };
        out.push(l.max(1));
        i += l.max(1);
    }
    out
}

/// δ as a reduced fraction `(num, den)`.
pub fn delta(s: &[u32]) -> (u64, u64) {
    let n = s.len();
    let mut best = (0u64, 1u64);
    for k in 1..=n {
        let d = s.windows(k).collect::<HashSet<_>>().len() as u64;
        if d * best.1 > best.0 * k as u64 {
            best = (d, k as u64);
        }
    }
    let g = gcd(best.0, best.1);
    (best.0 / g, best.1 / g)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `|{xa : x right-maximal}|`, where `x` is right-maximal when followed by two
/// distinct symbols or a suffix of `s`.
pub fn right_extensions(s: &[u32]) -> usize {
    let n = s.len();
    let mut follow: HashMap<&[u32], HashSet<u32>> = HashMap::new();
    for i in 0..=n {
        for j in i..=n {
            let e = follow.entry(&s[i..j]).or_default();
            if j < n {
                e.insert(s[j]);
            }
        }
    }
    follow
        .iter()
        .filter(|(x, f)| f.len() >= 2 || s.ends_with(x))
        .map(|(_, f)| f.len())
        .sum()
}

pub fn symbols(r: &[u32]) -> Vec<Symbol> {
    r.iter().map(|&c| Symbol(c)).collect()
}
