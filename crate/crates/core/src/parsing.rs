//! Factorizations of a text into phrases.

use std::collections::HashSet;
use std::fmt;

use crate::text::{Symbol, Text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseVariant {
    /// Greedy LZ; the source starts before the phrase and may overlap it.
    Lz,
    /// Greedy LZ; the source lies entirely before the phrase.
    LzNoOverlap,
    /// Greedy LZ-End; the source ends at an earlier phrase boundary.
    LzEndGreedy,
    /// Smallest parsing under the LZ-End constraint.
    LzEndOptimal,
    /// Lex-parse; the source is the lexicographically preceding suffix.
    Lex,
}

impl ParseVariant {
    pub fn id(self) -> &'static str {
        match self {
            ParseVariant::Lz => "lz",
            ParseVariant::LzNoOverlap => "lz_no",
            ParseVariant::LzEndGreedy => "lz_e",
            ParseVariant::LzEndOptimal => "lz_end",
            ParseVariant::Lex => "lex",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Literal(Symbol),
    /// Copy of the `len` symbols starting at `from`.
    Copy { from: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phrase {
    pub start: usize,
    pub len: usize,
    pub source: Source,
}

impl Phrase {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn source_start(&self) -> Option<usize> {
        match self.source {
            Source::Copy { from } => Some(from),
            Source::Literal(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsing {
    pub variant: ParseVariant,
    pub phrases: Vec<Phrase>,
}

impl Parsing {
    /// Number of phrases.
    pub fn len(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.phrases.iter().map(|p| p.len).collect()
    }

    pub fn phrase_texts(&self, w: &Text) -> Vec<Text> {
        self.phrases
            .iter()
            .map(|p| w.slice(p.start..p.end()))
            .collect()
    }

    /// Same phrase boundaries (sources may differ).
    pub fn same_phrases(&self, other: &Parsing) -> bool {
        self.lengths() == other.lengths()
    }

    /// Checks tiling, literal shape, source content, and the variant's
    /// source constraint against `w`.
    pub fn validate(&self, w: &Text) -> Result<(), String> {
        let s = w.symbols();
        let mut pos = 0;
        let mut ends: HashSet<usize> = HashSet::new();
        for (k, p) in self.phrases.iter().enumerate() {
            if p.start != pos || p.len == 0 {
                return Err(format!("phrase {k} does not continue the tiling at {pos}"));
            }
            if p.end() > s.len() {
                return Err(format!("phrase {k} runs past the end of the text"));
            }
            match p.source {
                Source::Literal(c) => {
                    if p.len != 1 || s[p.start] != c {
                        return Err(format!("phrase {k} is a malformed literal"));
                    }
                }
                Source::Copy { from } => {
                    if from + p.len > s.len() || s[from..from + p.len] != s[p.start..p.end()] {
                        return Err(format!("phrase {k} does not match its source"));
                    }
                    let ok = match self.variant {
                        ParseVariant::Lz => from < p.start,
                        ParseVariant::LzNoOverlap => from + p.len <= p.start,
                        ParseVariant::LzEndGreedy | ParseVariant::LzEndOptimal => {
                            ends.contains(&(from + p.len))
                        }
                        ParseVariant::Lex => from != p.start,
                    };
                    if !ok {
                        return Err(format!(
                            "phrase {k} violates the {} source constraint",
                            self.variant.id()
                        ));
                    }
                }
            }
            ends.insert(p.end());
            pos = p.end();
        }
        if pos != s.len() {
            return Err(format!("phrases cover {pos} of {} symbols", s.len()));
        }
        Ok(())
    }

    /// Rebuilds the text from literals and copy pointers alone. Returns
    /// `None` when the pointers do not bottom out in literals.
    pub fn decode(&self) -> Option<Vec<Symbol>> {
        let n = self.phrases.last().map_or(0, Phrase::end);
        // Each position either holds a literal or points at another position.
        let mut link: Vec<Result<Symbol, usize>> = Vec::with_capacity(n);
        for p in &self.phrases {
            for t in 0..p.len {
                link.push(match p.source {
                    Source::Literal(c) => Ok(c),
                    Source::Copy { from } => Err(from + t),
                });
            }
        }
        let mut out: Vec<Option<Symbol>> = vec![None; n];
        for start in 0..n {
            let mut chain = Vec::new();
            let mut at = start;
            let sym = loop {
                if let Some(c) = out[at] {
                    break c;
                }
                match link.get(at)? {
                    Ok(c) => break *c,
                    Err(next) => {
                        chain.push(at);
                        if chain.len() > n {
                            return None;
                        }
                        at = *next;
                    }
                }
            };
            out[at] = Some(sym);
            for p in chain {
                out[p] = Some(sym);
            }
        }
        out.into_iter().collect()
    }

    /// Phrases rendered as texts over `w`'s alphabet, comma-separated.
    pub fn display<'a>(&'a self, w: &'a Text) -> impl fmt::Display + 'a {
        DisplayParsing { parsing: self, text: w }
    }
}

struct DisplayParsing<'a> {
    parsing: &'a Parsing,
    text: &'a Text,
}

impl fmt::Display for DisplayParsing<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parsing
            .phrase_texts(self.text)
            .iter()
            .map(Text::to_string)
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}
