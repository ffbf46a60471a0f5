//! Measure identifiers and a single dispatch point for computing them.

use std::fmt;
use std::str::FromStr;

use crate::bwt::{bbwt, bwt, bwt_sentinel};
use crate::complexity::{right_extension_count, substring_complexity};
use crate::error::{Error, Result};
use crate::lex::lex_parse;
use crate::lz::{lz_end_greedy, lz_end_optimal, lz_no_overlap, lz_parse};
use crate::text::Text;
use crate::Rational;

/// Declaration order is the canonical output order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MeasureId {
    R,
    RDollar,
    RB,
    Z,
    ZNo,
    ZE,
    ZEnd,
    V,
    Delta,
    E,
}

impl MeasureId {
    pub const ALL: [MeasureId; 10] = [
        MeasureId::R,
        MeasureId::RDollar,
        MeasureId::RB,
        MeasureId::Z,
        MeasureId::ZNo,
        MeasureId::ZE,
        MeasureId::ZEnd,
        MeasureId::V,
        MeasureId::Delta,
        MeasureId::E,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MeasureId::R => "r",
            MeasureId::RDollar => "r_dollar",
            MeasureId::RB => "r_b",
            MeasureId::Z => "z",
            MeasureId::ZNo => "z_no",
            MeasureId::ZE => "z_e",
            MeasureId::ZEnd => "z_end",
            MeasureId::V => "v",
            MeasureId::Delta => "delta",
            MeasureId::E => "e",
        }
    }

    /// Parses a comma-separated list, dropping duplicates and sorting.
    pub fn parse_list(list: &str) -> Result<Vec<MeasureId>> {
        let mut out = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<MeasureId>>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for MeasureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MeasureId::ALL
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::UnknownMeasure(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Measured {
    pub value: Rational,
    /// False only for a z_end search that ran out of budget; the value is
    /// then an upper bound.
    pub exact: bool,
}

impl Measured {
    fn count(n: usize) -> Self {
        Measured {
            value: Rational::from_integer(n as i64),
            exact: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasureOptions {
    pub node_budget: u64,
}

impl Default for MeasureOptions {
    fn default() -> Self {
        MeasureOptions {
            node_budget: crate::lz::DEFAULT_NODE_BUDGET,
        }
    }
}

pub fn compute(w: &Text, measure: MeasureId, opts: MeasureOptions) -> Result<Measured> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(match measure {
        MeasureId::R => Measured::count(bwt(w)?.run_count),
        MeasureId::RDollar => Measured::count(bwt_sentinel(w)?.run_count),
        MeasureId::RB => Measured::count(bbwt(w)?.run_count),
        MeasureId::Z => Measured::count(lz_parse(w)?.len()),
        MeasureId::ZNo => Measured::count(lz_no_overlap(w)?.len()),
        MeasureId::ZE => Measured::count(lz_end_greedy(w)?.len()),
        MeasureId::ZEnd => {
            let (p, exact) = lz_end_optimal(w, opts.node_budget)?;
            Measured {
                value: Rational::from_integer(p.len() as i64),
                exact,
            }
        }
        MeasureId::V => Measured::count(lex_parse(w)?.len()),
        MeasureId::Delta => Measured {
            value: substring_complexity(w)?,
            exact: true,
        },
        MeasureId::E => Measured::count(right_extension_count(w)?),
    })
}
