//! BWT, sentinel BWT, bijective BWT and their run counts.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lyndon::lyndon_factor_bounds;
use crate::rle::run_count;
use crate::suffix::{compress, rotation_order, sort_conjugates};
use crate::text::{NameTable, Symbol, Text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformVariant {
    Plain,
    Sentinel,
    Bijective,
}

impl TransformVariant {
    pub fn id(self) -> &'static str {
        match self {
            TransformVariant::Plain => "bwt",
            TransformVariant::Sentinel => "bwt_dollar",
            TransformVariant::Bijective => "bbwt",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    /// For the sentinel variant the output lives over the input alphabet
    /// extended by a smallest symbol named `$`: ranks are shifted up by one
    /// and rank 0 is the sentinel. [`TransformResult::original_symbols`]
    /// undoes the shift.
    pub output: Text,
    pub run_count: usize,
    pub variant: TransformVariant,
}

impl TransformResult {
    /// Output symbols in the input's own ranks; `None` marks the sentinel.
    pub fn original_symbols(&self) -> Vec<Option<Symbol>> {
        let shifted = self.variant == TransformVariant::Sentinel;
        self.output
            .symbols()
            .iter()
            .map(|&s| match (shifted, s.0) {
                (false, _) => Some(s),
                (true, 0) => None,
                (true, r) => Some(Symbol(r - 1)),
            })
            .collect()
    }

    pub fn sentinel_index(&self) -> Option<usize> {
        if self.variant != TransformVariant::Sentinel {
            return None;
        }
        self.output.symbols().iter().position(|s| s.0 == 0)
    }
}

fn result(output: Text, variant: TransformVariant) -> TransformResult {
    let run_count = run_count(output.symbols());
    TransformResult {
        output,
        run_count,
        variant,
    }
}

pub fn bwt(w: &Text) -> Result<TransformResult> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    let s = w.symbols();
    let n = s.len();
    let out = rotation_order(s)
        .into_iter()
        .map(|i| s[(i + n - 1) % n])
        .collect();
    Ok(result(w.derive(out), TransformVariant::Plain))
}

/// BWT of `w$` with `$` smaller than every symbol of `w`.
pub fn bwt_sentinel(w: &Text) -> Result<TransformResult> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    if w.symbols().iter().any(|s| w.symbol_name(*s) == "$") {
        return Err(Error::SentinelPresent);
    }
    let s: Vec<Symbol> = w
        .symbols()
        .iter()
        .map(|sym| Symbol(sym.0 + 1))
        .chain(std::iter::once(Symbol(0)))
        .collect();
    let n = s.len();
    let out: Vec<Symbol> = rotation_order(&s)
        .into_iter()
        .map(|i| s[(i + n - 1) % n])
        .collect();
    let names = sentinel_names(w)?;
    Ok(result(
        Text::with_names(out, Arc::new(names)),
        TransformVariant::Sentinel,
    ))
}

fn sentinel_names(w: &Text) -> Result<NameTable> {
    let mut entries: Vec<(u32, String)> = vec![(0, "$".to_string())];
    for sym in w.alphabet() {
        entries.push((sym.0 + 1, w.symbol_name(sym).into_owned()));
    }
    if let Some(table) = w.names() {
        for (sym, name) in table.iter() {
            if !entries.iter().any(|(r, _)| *r == sym.0 + 1) {
                entries.push((sym.0 + 1, name.to_string()));
            }
        }
    }
    NameTable::new(entries)
}

/// Bijective BWT: last symbols of all rotations of all Lyndon factors, in
/// omega-order. Equal rotations keep factor order, then rotation order.
pub fn bbwt(w: &Text) -> Result<TransformResult> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    let s = w.symbols();
    let factors = lyndon_factor_bounds(s);
    let order = sort_conjugates(compress(s), &factors);
    let mut factor_of: Vec<(usize, usize)> = Vec::with_capacity(s.len());
    for f in &factors {
        factor_of.extend(std::iter::repeat((f.start, f.end)).take(f.len()));
    }
    let out = order
        .into_iter()
        .map(|i| {
            let (start, end) = factor_of[i];
            s[if i == start { end - 1 } else { i - 1 }]
        })
        .collect();
    Ok(result(w.derive(out), TransformVariant::Bijective))
}

/// The slice of `bwt(w)` over rows whose rotation starts with `prefix`.
pub fn bwt_range(w: &Text, prefix: &Text) -> Result<Text> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    if prefix.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let s = w.symbols();
    let p = prefix.symbols();
    let n = s.len();
    if p.len() > n {
        return Ok(w.derive(Vec::new()));
    }
    let starts_with = |i: usize| p.iter().enumerate().all(|(t, c)| s[(i + t) % n] == *c);
    let out = rotation_order(s)
        .into_iter()
        .filter(|&i| starts_with(i))
        .map(|i| s[(i + n - 1) % n])
        .collect();
    Ok(w.derive(out))
}

/// Sorted rotation matrix rows, for display.
pub fn sorted_rotations(w: &Text) -> Result<Vec<(usize, Text)>> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    let s = w.symbols();
    Ok(rotation_order(s)
        .into_iter()
        .map(|i| {
            let row: Vec<Symbol> = s[i..].iter().chain(&s[..i]).copied().collect();
            (i, w.derive(row))
        })
        .collect())
}
