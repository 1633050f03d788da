//! Ordered set partitions of `[N] = {1, ..., N}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of non-empty, pairwise disjoint blocks covering `[N]`.
///
/// Blocks are stored sorted. Read as a leveled tree on `N + 1` leaves,
/// `j` in block `i` means the branches holding leaves `j` and `j + 1`
/// meet at level `i` (levels counted from one).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct OrderedPartition {
    ground: usize,
    blocks: Vec<Vec<u32>>,
}

impl OrderedPartition {
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let ground: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; ground];
        let mut sorted = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in &block {
                if v == 0 || v as usize > ground {
                    return Err(Error::InvalidPartition(format!("{v} outside [1, {ground}]")));
                }
                if std::mem::replace(&mut seen[v as usize - 1], true) {
                    return Err(Error::InvalidPartition(format!("{v} appears twice")));
                }
            }
            block.sort_unstable();
            sorted.push(block);
        }
        Ok(Self { ground, blocks: sorted })
    }

    /// The partition of the empty ground set.
    pub fn empty() -> Self {
        Self {
            ground: 0,
            blocks: Vec::new(),
        }
    }

    /// `[N]` as a single block.
    pub fn single_block(n: usize) -> Self {
        Self::new(vec![(1..=n as u32).collect()]).expect("valid")
    }

    /// `1|2|...|N`.
    pub fn singletons(n: usize) -> Self {
        Self::new((1..=n as u32).map(|v| vec![v]).collect()).expect("valid")
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block holding `v`.
    pub fn block_of(&self, v: u32) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok())
    }

    /// Block of each element, `levels[v - 1]`.
    pub fn levels(&self) -> Vec<usize> {
        let mut out = vec![0; self.ground];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v as usize - 1] = i;
            }
        }
        out
    }

    pub fn reversed(&self) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.reverse();
        Self {
            ground: self.ground,
            blocks,
        }
    }
}

impl TryFrom<Vec<Vec<u32>>> for OrderedPartition {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(blocks)
    }
}

impl From<OrderedPartition> for Vec<Vec<u32>> {
    fn from(p: OrderedPartition) -> Self {
        p.blocks
    }
}

/// `13|2` style; multi-digit elements are comma separated (`1,12|2,...`).
impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "∅");
        }
        let sep = if self.ground >= 10 { "," } else { "" };
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(u32::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl FromStr for OrderedPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∅" || s.is_empty() {
            return Ok(Self::empty());
        }
        let blocks = s
            .split('|')
            .map(|b| {
                let tokens: Vec<String> = if b.contains(',') {
                    b.split(',').map(|t| t.trim().to_string()).collect()
                } else {
                    b.trim().chars().map(String::from).collect()
                };
                tokens
                    .into_iter()
                    .map(|t| {
                        t.parse::<u32>().map_err(|e| Error::Parse {
                            token: t.clone(),
                            reason: e.to_string(),
                        })
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }
}
