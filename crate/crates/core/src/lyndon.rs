//! Lyndon words, Lyndon factorization and the omega-order.

use std::cmp::Ordering;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::text::{Symbol, Text};

/// Compares `x^ω` with `y^ω`.
///
/// Two periodic infinite words with periods `|x|` and `|y|` that agree on
/// their first `|x| + |y| - gcd(|x|, |y|)` symbols are identical (Fine and
/// Wilf), so scanning `|x| + |y|` positions decides the order exactly.
pub fn omega_compare(x: &Text, y: &Text) -> Result<Ordering> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(omega_cmp(x.symbols(), y.symbols()))
}

pub(crate) fn omega_cmp(x: &[Symbol], y: &[Symbol]) -> Ordering {
    let (lx, ly) = (x.len(), y.len());
    (0..lx + ly)
        .map(|t| x[t % lx].cmp(&y[t % ly]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// True iff `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &Text) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(is_lyndon_slice(w.symbols()))
}

pub(crate) fn is_lyndon_slice(w: &[Symbol]) -> bool {
    !w.is_empty() && first_factor_len(w) == w.len()
}

/// Lyndon factorization (Duval). Factors are non-increasing Lyndon words.
pub fn lyndon_factorize(w: &Text) -> Result<Vec<Text>> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(lyndon_factor_bounds(w.symbols())
        .into_iter()
        .map(|r| w.slice(r))
        .collect())
}

/// Factor ranges of the Lyndon factorization, in text order.
pub fn lyndon_factor_bounds(w: &[Symbol]) -> Vec<Range<usize>> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(i..i + period);
            i += period;
        }
    }
    out
}

fn first_factor_len(w: &[Symbol]) -> usize {
    lyndon_factor_bounds(w).first().map_or(0, |r| r.len())
}
