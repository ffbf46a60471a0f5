//! Repetitiveness measures on strings over ordered integer alphabets, and
//! how they change when the string is reversed.
//!
//! Positions are 0-based throughout.

pub mod bwt;
pub mod complexity;
pub mod error;
pub mod families;
pub mod format;
pub mod harness;
pub mod lex;
pub mod lyndon;
pub mod lz;
pub mod measures;
pub mod parsing;
pub mod rle;
mod rmq;
pub mod suffix;
pub mod text;

/// Exact rational used for δ and multiplicative sensitivities.
pub type Rational = num_rational::Ratio<i64>;

pub use bwt::{bbwt, bwt, bwt_sentinel, TransformResult, TransformVariant};
pub use complexity::{right_extension_count, right_extensions, substring_complexity};
pub use error::{Error, Result};
pub use families::{generate, predict, predict_reverse, predict_transform, FamilyId, FamilySpec};
pub use lex::lex_parse;
pub use lyndon::{is_lyndon, lyndon_factorize, omega_compare};
pub use lz::{lz_end_greedy, lz_end_optimal, lz_end_search, lz_no_overlap, lz_parse};
pub use measures::{compute, MeasureId, MeasureOptions, Measured};
pub use parsing::{ParseVariant, Parsing, Phrase, Source};
pub use suffix::{build_suffix_context, cyclic_rotation_order, SuffixContext};
pub use text::{occurrences, reverse, rotate, Symbol, Text};
