//! Text serializations.
//!
//! ASCII mode: one byte per symbol, byte order is symbol order, `$` is
//! reserved for the sentinel. Token mode: a header line
//! `#alphabet name1 name2 ...` listing names in increasing symbol order,
//! then one line of whitespace-separated tokens.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::text::{NameTable, Symbol, Text};

pub const ALPHABET_HEADER: &str = "#alphabet";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Tokens,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "tokens" => Ok(Format::Tokens),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

/// Parses `input`; with no explicit format, a leading `#alphabet` line
/// selects token mode.
pub fn parse_text(input: &str, format: Option<Format>) -> Result<Text> {
    let format = format.unwrap_or(if input.starts_with(ALPHABET_HEADER) {
        Format::Tokens
    } else {
        Format::Ascii
    });
    match format {
        Format::Ascii => parse_ascii(input),
        Format::Tokens => parse_tokens(input),
    }
}

pub fn parse_ascii(input: &str) -> Result<Text> {
    let body = input
        .strip_suffix("\r\n")
        .or_else(|| input.strip_suffix('\n'))
        .unwrap_or(input);
    for (i, b) in body.bytes().enumerate() {
        if b == b'$' {
            return Err(Error::Parse(format!("`$` at byte {i} is reserved")));
        }
        if !(0x21..=0x7e).contains(&b) {
            return Err(Error::Parse(format!(
                "byte {b:#04x} at {i} is not a printable non-space ASCII character"
            )));
        }
    }
    Ok(Text::from_ascii(body))
}

pub fn parse_tokens(input: &str) -> Result<Text> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing #alphabet line".into()))?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some(ALPHABET_HEADER) {
        return Err(Error::Parse("first line must start with #alphabet".into()));
    }
    let names: Vec<&str> = fields.collect();
    let table = NameTable::new(names.iter().enumerate().map(|(r, n)| (r as u32, *n)))?;
    let mut symbols = Vec::new();
    for line in lines {
        for token in line.split_whitespace() {
            let sym = table
                .rank_of(token)
                .ok_or_else(|| Error::Parse(format!("token `{token}` is not in the alphabet")))?;
            symbols.push(sym);
        }
    }
    Ok(Text::with_names(symbols, Arc::new(table)))
}

pub fn write_text(w: &Text, format: Format) -> Result<String> {
    match format {
        Format::Ascii => write_ascii(w),
        Format::Tokens => Ok(write_tokens(w)),
    }
}

/// True when every symbol renders as one printable byte other than `$`, in
/// an order-preserving way.
pub fn ascii_representable(w: &Text) -> bool {
    ascii_bytes(w).is_ok()
}

fn ascii_bytes(w: &Text) -> Result<Vec<(Symbol, u8)>> {
    let mut map = Vec::new();
    for sym in w.alphabet() {
        let name = w.symbol_name(sym);
        let byte = match name.as_bytes() {
            [b] if (0x21..=0x7e).contains(b) && *b != b'$' => *b,
            _ => {
                return Err(Error::Alphabet(format!(
                    "symbol `{name}` has no single-byte form; use token mode"
                )))
            }
        };
        map.push((sym, byte));
    }
    if map.windows(2).any(|p| p[0].1 >= p[1].1) {
        return Err(Error::Alphabet(
            "symbol names do not follow byte order; use token mode".into(),
        ));
    }
    Ok(map)
}

pub fn write_ascii(w: &Text) -> Result<String> {
    let map = ascii_bytes(w)?;
    let mut out: String = w
        .symbols()
        .iter()
        .map(|s| {
            let i = map.binary_search_by_key(s, |(sym, _)| *sym).unwrap();
            char::from(map[i].1)
        })
        .collect();
    out.push('\n');
    Ok(out)
}

/// Header lists the name table when present, otherwise the symbols that
/// occur.
pub fn write_tokens(w: &Text) -> String {
    let mut syms: BTreeSet<Symbol> = w.alphabet().into_iter().collect();
    if let Some(table) = w.names() {
        syms.extend(table.iter().map(|(s, _)| s));
    }
    let mut out = String::from(ALPHABET_HEADER);
    for sym in syms {
        out.push(' ');
        out.push_str(&w.symbol_name(sym));
    }
    out.push('\n');
    out.push_str(&w.tokens().join(" "));
    out.push('\n');
    out
}
