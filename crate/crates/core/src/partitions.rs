//! Set partitions of `1..=n` as restricted growth strings.
//!
//! A restricted growth string `a` has `a[0] = 0` and `a[i] <= 1 + max(a[..i])`;
//! point `i + 1` lies in block `a[i]`. Blocks are therefore ordered by minimum.

use crate::matroid::{GroundSubset, Partition};

/// Iterator over all restricted growth strings of length `n`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    rgs: Vec<u8>,
    /// `prefix_max[i] = max(rgs[..=i])`.
    prefix_max: Vec<u8>,
    started: bool,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions { rgs: vec![0; n], prefix_max: vec![0; n], started: false, done: n == 0 }
    }

    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.rgs.clone())
    }
}

/// Blocks of a restricted growth string as subsets.
pub fn blocks_of(rgs: &[u8]) -> Vec<GroundSubset> {
    let k = rgs.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut blocks = vec![GroundSubset::EMPTY; k];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b as usize] = blocks[b as usize].with(i + 1);
    }
    blocks
}

pub fn partition_of(rgs: &[u8]) -> Partition {
    Partition::new(rgs.len(), blocks_of(rgs)).expect("restricted growth strings encode partitions")
}

/// Bell numbers by the triangle recurrence.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}
