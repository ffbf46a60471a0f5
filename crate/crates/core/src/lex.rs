//! Lex-parse: the phrase starting at `i` has length `max(1, lcp[isa[i]])` and
//! copies from the lexicographically preceding suffix.

use crate::error::{Error, Result};
use crate::parsing::{ParseVariant, Parsing, Phrase, Source};
use crate::suffix::{suffix_context, SuffixContext};
use crate::text::Text;

pub fn lex_parse(w: &Text) -> Result<Parsing> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(lex_parse_with(w, &suffix_context(w.symbols())))
}

/// Lex-parse from a precomputed suffix context of `w`.
pub fn lex_parse_with(w: &Text, ctx: &SuffixContext) -> Parsing {
    let s = w.symbols();
    let mut phrases = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let rank = ctx.isa[i];
        let phrase = match ctx.lcp[rank] {
            0 => Phrase {
                start: i,
                len: 1,
                source: Source::Literal(s[i]),
            },
            len => Phrase {
                start: i,
                len,
                source: Source::Copy {
                    from: ctx.sa[rank - 1],
                },
            },
        };
        i = phrase.end();
        phrases.push(phrase);
    }
    Parsing {
        variant: ParseVariant::Lex,
        phrases,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let w = Text::from_ascii("abracadabracabra");
        let p = lex_parse(&w).unwrap();
        let got: Vec<String> = p.phrase_texts(&w).iter().map(Text::to_string).collect();
        assert_eq!(got, ["abraca", "d", "abra", "c", "a", "b", "r", "a"]);
        p.validate(&w).unwrap();
        assert_eq!(p.decode().unwrap(), w.symbols());

        let w = Text::from_ascii("abc");
        assert_eq!(lex_parse(&w).unwrap().lengths(), [1, 1, 1]);
        assert_eq!(lex_parse(&Text::from_ascii("")), Err(Error::EmptyText));
    }
}
