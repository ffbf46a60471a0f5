//! Ordered-alphabet symbols and texts.
//!
//! A [`Symbol`] is an integer rank; the alphabet order is the integer order.
//! A [`Text`] is a sequence of symbols with an optional [`NameTable`] used
//! only for display and serialization. Two texts are equal when their symbol
//! sequences are equal, regardless of names.

use std::borrow::Cow;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn rank(self) -> u32 {
        self.0
    }
}

/// Display names for symbol ranks. Names are unique, non-empty and contain
/// no whitespace, so they can be used verbatim as tokens.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NameTable {
    by_rank: BTreeMap<u32, String>,
}

impl NameTable {
    pub fn new<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, S)>,
        S: Into<String>,
    {
        let mut by_rank = BTreeMap::new();
        let mut seen = HashSet::new();
        for (rank, name) in entries {
            let name = name.into();
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::Alphabet(format!("bad symbol name {name:?}")));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::Alphabet(format!("duplicate symbol name {name:?}")));
            }
            if by_rank.insert(rank, name).is_some() {
                return Err(Error::Alphabet(format!("rank {rank} named twice")));
            }
        }
        Ok(NameTable { by_rank })
    }

    pub fn name(&self, sym: Symbol) -> Option<&str> {
        self.by_rank.get(&sym.0).map(String::as_str)
    }

    pub fn rank_of(&self, name: &str) -> Option<Symbol> {
        self.by_rank
            .iter()
            .find(|(_, n)| n.as_str() == name)
            .map(|(&r, _)| Symbol(r))
    }

    /// Entries in increasing rank order.
    pub fn iter(&self) -> impl Iterator<Item = (Symbol, &str)> {
        self.by_rank.iter().map(|(&r, n)| (Symbol(r), n.as_str()))
    }

    pub fn len(&self) -> usize {
        self.by_rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_rank.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Text {
    symbols: Vec<Symbol>,
    names: Option<Arc<NameTable>>,
}

impl PartialEq for Text {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Text {}

impl Text {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Text {
            symbols,
            names: None,
        }
    }

    pub fn from_ranks<I: IntoIterator<Item = u32>>(ranks: I) -> Self {
        Text::new(ranks.into_iter().map(Symbol).collect())
    }

    /// One symbol per byte, rank = byte value.
    pub fn from_ascii(s: &str) -> Self {
        Text::from_ranks(s.bytes().map(u32::from))
    }

    pub fn with_names(symbols: Vec<Symbol>, names: Arc<NameTable>) -> Self {
        Text {
            symbols,
            names: Some(names),
        }
    }

    /// Same symbols, names replaced.
    pub fn named(mut self, names: Option<Arc<NameTable>>) -> Self {
        self.names = names;
        self
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn names(&self) -> Option<&Arc<NameTable>> {
        self.names.as_ref()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// A text over the same alphabet (names are shared).
    pub fn derive(&self, symbols: Vec<Symbol>) -> Text {
        Text {
            symbols,
            names: self.names.clone(),
        }
    }

    pub fn slice(&self, range: Range<usize>) -> Text {
        self.derive(self.symbols[range].to_vec())
    }

    pub fn concat(&self, other: &Text) -> Text {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Text {
            symbols,
            names: self.names.clone().or_else(|| other.names.clone()),
        }
    }

    /// Distinct symbols in increasing order.
    pub fn alphabet(&self) -> Vec<Symbol> {
        let mut syms = self.symbols.clone();
        syms.sort_unstable();
        syms.dedup();
        syms
    }

    /// Display name of a symbol: its table entry, the byte itself for
    /// unnamed printable ASCII ranks, or `s<rank>` otherwise.
    pub fn symbol_name(&self, sym: Symbol) -> Cow<'_, str> {
        if let Some(name) = self.names.as_ref().and_then(|t| t.name(sym)) {
            return Cow::Borrowed(name);
        }
        match sym.0 {
            0x21..=0x7e => Cow::Owned(char::from(sym.0 as u8).to_string()),
            r => Cow::Owned(format!("s{r}")),
        }
    }

    /// Symbols rendered as names, one entry per position.
    pub fn tokens(&self) -> Vec<Cow<'_, str>> {
        self.symbols.iter().map(|&s| self.symbol_name(s)).collect()
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens = self.tokens();
        let sep = if tokens.iter().all(|t| t.chars().count() == 1) {
            ""
        } else {
            " "
        };
        write!(f, "{}", tokens.join(sep))
    }
}

pub fn reverse(w: &Text) -> Text {
    let mut symbols = w.symbols.clone();
    symbols.reverse();
    w.derive(symbols)
}

/// The rotation `w[offset..] w[..offset]` (0-based offset).
pub fn rotate(w: &Text, offset: usize) -> Result<Text> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    if offset >= w.len() {
        return Err(Error::IndexOutOfRange {
            index: offset,
            len: w.len(),
        });
    }
    let mut symbols = w.symbols.clone();
    symbols.rotate_left(offset);
    Ok(w.derive(symbols))
}

/// All 0-based start positions of `pattern` in `text`, ascending
/// (Knuth-Morris-Pratt).
pub fn occurrences(pattern: &Text, text: &Text) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(find_all(pattern.symbols(), text.symbols()))
}

pub(crate) fn find_all(pattern: &[Symbol], text: &[Symbol]) -> Vec<usize> {
    let m = pattern.len();
    let mut border = vec![0usize; m];
    let mut k = 0;
    for i in 1..m {
        while k > 0 && pattern[i] != pattern[k] {
            k = border[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        border[i] = k;
    }
    let mut hits = Vec::new();
    let mut q = 0;
    for (i, &c) in text.iter().enumerate() {
        while q > 0 && c != pattern[q] {
            q = border[q - 1];
        }
        if c == pattern[q] {
            q += 1;
        }
        if q == m {
            hits.push(i + 1 - m);
            q = border[q - 1];
        }
    }
    hits
}
