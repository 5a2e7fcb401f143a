use crate::{Brick, Pattern};

/// The recursive cut structure of a pattern: either a single brick of the
/// pattern (identified by its index), or a half-split of the current region
/// along one axis with the lower half first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitTree {
    Leaf(usize),
    Split {
        axis: usize,
        low: Box<SplitTree>,
        high: Box<SplitTree>,
    },
}

impl SplitTree {
    /// Number of splits in the tree (= number of bricks − 1).
    pub fn split_count(&self) -> usize {
        match self {
            SplitTree::Leaf(_) => 0,
            SplitTree::Split { low, high, .. } => 1 + low.split_count() + high.split_count(),
        }
    }

    /// Brick indices in left-to-right (lower-half-first) leaf order.
    pub fn leaf_order(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            SplitTree::Leaf(i) => out.push(*i),
            SplitTree::Split { low, high, .. } => {
                low.collect_leaves(out);
                high.collect_leaves(out);
            }
        }
    }
}

/// Recovers a sequence of half-splits producing `pattern`, as a cut tree.
///
/// A region's midline along axis `a` separates its bricks exactly when every
/// brick's axis-`a` word strictly extends the region's; the lowest such axis
/// is always chosen, so the result is deterministic. In dimensions 1 and 2
/// the search cannot fail on a valid pattern: a brick spanning the full width
/// of a region and a brick spanning its full height would overlap, so at most
/// one axis is ever blocked. From dimension 3 on, partitions into bricks
/// exist that no half-split separates; for those the offending region is
/// returned as the error.
pub fn guillotine_decompose(pattern: &Pattern) -> Result<SplitTree, Brick> {
    let members: Vec<usize> = (0..pattern.len()).collect();
    decompose_region(pattern, &Brick::whole(pattern.dim()), &members)
}

fn decompose_region(
    pattern: &Pattern,
    region: &Brick,
    members: &[usize],
) -> Result<SplitTree, Brick> {
    if members.len() == 1 {
        return Ok(SplitTree::Leaf(members[0]));
    }
    for axis in 0..pattern.dim() {
        let cut = region.word(axis).len();
        let separates = members
            .iter()
            .all(|&i| pattern.brick(i).word(axis).len() > cut);
        if !separates {
            continue;
        }
        let (low_region, high_region) = region.split(axis);
        let (low, high): (Vec<usize>, Vec<usize>) = members
            .iter()
            .partition(|&&i| pattern.brick(i).word(axis).bit(cut) == 0);
        let low = decompose_region(pattern, &low_region, &low)?;
        let high = decompose_region(pattern, &high_region, &high)?;
        return Ok(SplitTree::Split { axis, low: Box::new(low), high: Box::new(high) });
    }
    Err(region.clone())
}
