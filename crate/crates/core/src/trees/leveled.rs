//! Leveled trees read off ordered partitions, and the Tonks projection.

use serde::Serialize;

use super::planar::PlanarTree;
use crate::su_diagonal::OrderedPartition;

/// One corolla of a leveled tree: it merges the branches whose leaves run
/// from `first_leaf` to `last_leaf` (1-based, inclusive) into one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCorolla {
    pub first_leaf: usize,
    pub last_leaf: usize,
    pub arity: usize,
}

/// A planar tree with `N + 1` leaves whose internal nodes sit on levels
/// `1..=s`, one level per block of the partition it was read from.
#[derive(Debug, Clone)]
pub struct LeveledTree {
    partition: OrderedPartition,
    levels: Vec<Vec<LevelCorolla>>,
    root: PlanarTree,
}

impl LeveledTree {
    /// `j ∈ A_i` means the branches holding leaves `j` and `j + 1` meet at
    /// level `i`.
    pub fn from_partition(partition: &OrderedPartition) -> Self {
        let leaves = partition.ground() + 1;
        // Components are intervals of leaves; `start[l]` is the first leaf of
        // the component holding leaf `l`, `tree[first]` its subtree.
        let mut start: Vec<usize> = (0..leaves).collect();
        let mut end: Vec<usize> = (0..leaves).collect();
        let mut tree: Vec<Option<PlanarTree>> = vec![Some(PlanarTree::Leaf); leaves];
        let mut levels = Vec::with_capacity(partition.block_count());
        for block in partition.blocks() {
            // Merges chain into one corolla when the component to the right
            // of one merge point ends at the next merge point.
            let mut groups: Vec<Vec<usize>> = Vec::new();
            for &j in block {
                let j = j as usize - 1;
                match groups.last_mut() {
                    Some(g) if *g.last().unwrap() == start[j] => g.push(j + 1),
                    _ => groups.push(vec![start[j], j + 1]),
                }
            }
            let mut corollas = Vec::with_capacity(groups.len());
            for firsts in groups {
                let first = firsts[0];
                let last = end[*firsts.last().unwrap()];
                let children: Vec<PlanarTree> = firsts.iter().map(|&c| tree[c].take().unwrap()).collect();
                corollas.push(LevelCorolla {
                    first_leaf: first + 1,
                    last_leaf: last + 1,
                    arity: children.len(),
                });
                tree[first] = Some(PlanarTree::Node(children));
                for l in first..=last {
                    start[l] = first;
                    end[l] = last;
                }
            }
            levels.push(corollas);
        }
        let root = tree[0].take().unwrap();
        Self {
            partition: partition.clone(),
            levels,
            root,
        }
    }

    pub fn partition(&self) -> &OrderedPartition {
        &self.partition
    }

    pub fn leaves(&self) -> usize {
        self.partition.ground() + 1
    }

    /// Corollas per level, bottom level first.
    pub fn levels(&self) -> &[Vec<LevelCorolla>] {
        &self.levels
    }

    /// The level (1-based) at which leaves `j` and `j + 1` meet.
    pub fn meet_level(&self, j: usize) -> Option<usize> {
        self.partition.block_of(j as u32).map(|i| i + 1)
    }

    /// Some level holds more than one corolla. Such a face has lower
    /// dimension than its level count and projects to zero.
    pub fn is_degenerate(&self) -> bool {
        self.levels.iter().any(|l| l.len() > 1)
    }

    /// The underlying planar tree, levels forgotten.
    pub fn forget_levels(&self) -> &PlanarTree {
        &self.root
    }

    /// Corolla arities per level.
    pub fn corolla_profile(&self) -> Vec<Vec<usize>> {
        self.levels.iter().map(|l| l.iter().map(|c| c.arity).collect()).collect()
    }
}

/// The Tonks projection: the planar tree of `λ`, or `None` (zero) when the
/// leveled tree is degenerate.
pub fn tonks(partition: &OrderedPartition) -> Option<PlanarTree> {
    let t = LeveledTree::from_partition(partition);
    if t.is_degenerate() {
        None
    } else {
        Some(t.root)
    }
}

/// Corolla arities at each level of the leveled tree of `λ`.
pub fn corolla_profile(partition: &OrderedPartition) -> Vec<Vec<usize>> {
    LeveledTree::from_partition(partition).corolla_profile()
}
