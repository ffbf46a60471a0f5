use crate::text::{Symbol, Text};

/// Maximal equal-symbol runs. Adjacent runs carry distinct symbols and every
/// count is positive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RunLengthEncoding {
    runs: Vec<(Symbol, usize)>,
}

impl RunLengthEncoding {
    pub fn of(symbols: &[Symbol]) -> Self {
        let mut runs: Vec<(Symbol, usize)> = Vec::new();
        for &s in symbols {
            match runs.last_mut() {
                Some((last, count)) if *last == s => *count += 1,
                _ => runs.push((s, 1)),
            }
        }
        RunLengthEncoding { runs }
    }

    pub fn runs(&self) -> &[(Symbol, usize)] {
        &self.runs
    }

    /// Number of runs.
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn expand(&self) -> Vec<Symbol> {
        self.runs
            .iter()
            .flat_map(|&(s, c)| std::iter::repeat(s).take(c))
            .collect()
    }
}

pub fn rle(w: &Text) -> RunLengthEncoding {
    RunLengthEncoding::of(w.symbols())
}

/// Number of runs without materializing them.
pub(crate) fn run_count(symbols: &[Symbol]) -> usize {
    if symbols.is_empty() {
        return 0;
    }
    1 + symbols.windows(2).filter(|p| p[0] != p[1]).count()
}
