//! Streaming enumeration of compositions and partition multiplicity vectors.
//!
//! Both iterators keep an explicit work stack instead of recursing, so the
//! auxiliary memory stays O(n) even when the streams run to billions of
//! elements.

/// Ordered tuples `(i_1, ..., i_k)` with every part in `[min_part, max_part]`
/// and `i_1 + ... + i_k = n`, over all lengths `k`, in lexicographic order.
///
/// `max_part = None` leaves the parts unbounded above.
pub fn compositions(n: usize, min_part: usize, max_part: Option<usize>) -> Compositions {
    assert!(n >= 1 && min_part >= 1);
    if let Some(mx) = max_part {
        assert!(min_part <= mx);
    }
    Compositions { n, min_part, max_part, current: Vec::new(), remaining: n, fresh: true }
}

#[derive(Debug, Clone)]
pub struct Compositions {
    n: usize,
    min_part: usize,
    max_part: Option<usize>,
    current: Vec<usize>,
    remaining: usize,
    fresh: bool,
}

impl Compositions {
    fn feasible(&self, part: usize) -> bool {
        part <= self.remaining
            && self.max_part.is_none_or(|mx| part <= mx)
            && (self.remaining - part == 0 || self.remaining - part >= self.min_part)
    }

    /// Extends the current prefix with the smallest feasible parts.
    /// Returns false if the prefix cannot be completed.
    fn descend(&mut self) -> bool {
        while self.remaining > 0 {
            let mut part = self.min_part;
            loop {
                if self.feasible(part) {
                    break;
                }
                part += 1;
                if part > self.remaining {
                    return false;
                }
            }
            self.current.push(part);
            self.remaining -= part;
        }
        true
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.fresh {
            self.fresh = false;
            debug_assert!(self.remaining == self.n);
            if self.descend() {
                return Some(self.current.clone());
            }
            return None;
        }
        // backtrack: bump the last part that still has a feasible successor
        while let Some(last) = self.current.pop() {
            self.remaining += last;
            let mut part = last + 1;
            while part <= self.remaining {
                if self.feasible(part) {
                    self.current.push(part);
                    self.remaining -= part;
                    if self.descend() {
                        return Some(self.current.clone());
                    }
                    // descend cannot fail after a feasible push, but stay safe
                    let p = self.current.pop().unwrap();
                    self.remaining += p;
                }
                part += 1;
            }
        }
        None
    }
}

/// Multiplicity vectors `(t_1, ..., t_n)` with `sum l * t_l = n`, `t_l = 0`
/// outside `[min_part, max_part]`. Each item has length `n`, entry `l-1`
/// being the multiplicity of part `l`.
pub fn partition_multiplicities(
    n: usize,
    min_part: usize,
    max_part: Option<usize>,
) -> PartitionMultiplicities {
    assert!(n >= 1 && min_part >= 1);
    let max_part = max_part.unwrap_or(n).min(n);
    PartitionMultiplicities {
        n,
        min_part,
        max_part,
        counts: vec![0; n],
        stack: Vec::new(),
        state: PartitionState::Fresh,
    }
}

#[derive(Debug, Clone)]
enum PartitionState {
    Fresh,
    Running,
    Done,
}

#[derive(Debug, Clone)]
pub struct PartitionMultiplicities {
    n: usize,
    min_part: usize,
    max_part: usize,
    counts: Vec<usize>,
    /// `(part, remaining_before_choice)` for each part with a chosen multiplicity.
    stack: Vec<(usize, usize)>,
    state: PartitionState,
}

impl PartitionMultiplicities {
    /// Assigns maximal multiplicities to parts `from..=max_part` greedily,
    /// largest part first, leaving remainder zero or failing.
    fn fill_from(&mut self, from: usize, mut remaining: usize) -> Option<usize> {
        for part in (self.min_part..=from.min(self.max_part)).rev() {
            let t = remaining / part;
            self.counts[part - 1] = t;
            self.stack.push((part, remaining));
            remaining -= t * part;
        }
        (remaining == 0).then_some(remaining)
    }
}

impl Iterator for PartitionMultiplicities {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        match self.state {
            PartitionState::Done => return None,
            PartitionState::Fresh => {
                self.state = PartitionState::Running;
                if self.fill_from(self.n, self.n).is_some() {
                    return Some(self.counts.clone());
                }
            }
            PartitionState::Running => {}
        }
        // decrease the multiplicity of the smallest part with t > 0 that can
        // shed weight onto smaller parts
        while let Some((part, before)) = self.stack.pop() {
            let t = self.counts[part - 1];
            self.counts[part - 1] = 0;
            if t == 0 || part == self.min_part {
                continue;
            }
            // retry this part with one fewer copy
            self.counts[part - 1] = t - 1;
            self.stack.push((part, before));
            let rest = before - (t - 1) * part;
            if self.fill_from(part - 1, rest).is_some() {
                return Some(self.counts.clone());
            }
        }
        self.state = PartitionState::Done;
        None
    }
}

/// Partition counting oracle by dynamic programming, for tests and checks.
pub fn partition_count(n: usize, min_part: usize, max_part: Option<usize>) -> u128 {
    let max_part = max_part.unwrap_or(n).min(n);
    let mut table = vec![0u128; n + 1];
    table[0] = 1;
    for part in min_part..=max_part {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_of_three() {
        let all: Vec<_> = compositions(3, 1, None).collect();
        assert_eq!(all, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
    }

    #[test]
    fn compositions_with_bounds() {
        let only: Vec<_> = compositions(2, 2, None).collect();
        assert_eq!(only, vec![vec![2]]);

        let unit: Vec<_> = compositions(4, 1, Some(1)).collect();
        assert_eq!(unit, vec![vec![1, 1, 1, 1]]);

        assert_eq!(compositions(3, 4, None).count(), 0);
    }

    #[test]
    fn composition_counts_are_powers_of_two() {
        for n in 1..=12 {
            assert_eq!(compositions(n, 1, None).count(), 1 << (n - 1), "n={}", n);
        }
    }

    #[test]
    fn partitions_of_three() {
        let all: Vec<_> = partition_multiplicities(3, 1, None).collect();
        let mut sorted = all.clone();
        sorted.sort();
        let mut expect = vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]];
        expect.sort();
        assert_eq!(sorted, expect);
    }

    #[test]
    fn partitions_with_min_part() {
        let got: Vec<_> = partition_multiplicities(2, 2, None).collect();
        assert_eq!(got, vec![vec![0, 1]]);
    }

    #[test]
    fn partition_counts_match_dp_oracle() {
        assert_eq!(partition_count(5, 1, None), 7);
        for n in 1..=18 {
            for min_part in 1..=3 {
                let stream = partition_multiplicities(n, min_part, None).count() as u128;
                assert_eq!(stream, partition_count(n, min_part, None), "n={n} min={min_part}");
            }
        }
    }

    #[test]
    fn bounded_partitions_match_dp_oracle() {
        for n in 1..=16 {
            for max_part in 1..=4 {
                let stream = partition_multiplicities(n, 1, Some(max_part)).count() as u128;
                assert_eq!(stream, partition_count(n, 1, Some(max_part)), "n={n} max={max_part}");
            }
        }
    }

    #[test]
    fn multiplicity_vectors_sum_correctly() {
        for v in partition_multiplicities(9, 2, Some(5)) {
            let total: usize = v.iter().enumerate().map(|(i, t)| (i + 1) * t).sum();
            assert_eq!(total, 9);
            assert_eq!(v[0], 0);
            assert!(v[5..].iter().all(|&t| t == 0));
        }
    }
}
