//! Sparse-table range minimum / maximum queries.

pub(crate) struct SparseTable {
    levels: Vec<Vec<usize>>,
    max: bool,
}

impl SparseTable {
    pub(crate) fn min(values: &[usize]) -> Self {
        Self::build(values, false)
    }

    pub(crate) fn max(values: &[usize]) -> Self {
        Self::build(values, true)
    }

    fn build(values: &[usize], max: bool) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let next: Vec<usize> = (0..=values.len() - 2 * width)
                .map(|i| pick(max, prev[i], prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable { levels, max }
    }

    /// Extremum over the half-open range `lo..hi`; `lo < hi` required.
    pub(crate) fn query(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo < hi);
        let k = usize::BITS as usize - 1 - (hi - lo).leading_zeros() as usize;
        let level = &self.levels[k];
        pick(self.max, level[lo], level[hi - (1 << k)])
    }
}

fn pick(max: bool, a: usize, b: usize) -> usize {
    if max {
        a.max(b)
    } else {
        a.min(b)
    }
}
