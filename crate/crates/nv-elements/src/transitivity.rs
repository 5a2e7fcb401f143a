use std::collections::BTreeSet;
use std::fmt;

use cantor_core::{Brick, Pattern, Word};

use crate::Element;

/// Why [`transitivity_map`] rejects its arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransitivityError {
    EmptySelection,
    WholeSelection,
    WholeCubeTarget,
    IndexOutOfRange(usize),
}

impl fmt::Display for TransitivityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransitivityError::EmptySelection => write!(f, "selection is empty"),
            TransitivityError::WholeSelection => {
                write!(f, "selection must be a proper subset of the pattern")
            }
            TransitivityError::WholeCubeTarget => {
                write!(f, "target brick must have nonempty complement")
            }
            TransitivityError::IndexOutOfRange(i) => write!(f, "no brick {i} in the pattern"),
        }
    }
}

impl std::error::Error for TransitivityError {}

/// The staircase complement of `u`: for every axis `j` and every position `t`
/// in `u`'s axis-`j` word, the brick agreeing with `u` on axes before `j`,
/// following `u`'s word up to `t` but then taking the other half on axis `j`,
/// and unconstrained afterwards. Together with `u` these bricks partition the
/// cube, and the enumeration order (axis-major, then position) is fixed.
pub fn isolating_bricks(u: &Brick) -> Vec<Brick> {
    let mut out = Vec::new();
    for j in 0..u.dim() {
        let w = u.word(j);
        for t in 0..w.len() {
            out.push(u.map_words(|c, wc| {
                if c < j {
                    wc.clone()
                } else if c == j {
                    let mut prefix = Word::from_bits(w.bits()[..t].iter().copied());
                    prefix.push(1 - w.bit(t));
                    prefix
                } else {
                    Word::empty()
                }
            }));
        }
    }
    out
}

/// Builds an element `h` of `nV` whose image of every selected brick lies
/// inside the target brick `u` — the constructive form of the statement that
/// `nV` moves any proper brick selection into any proper brick.
///
/// Construction: the range pattern is `u`, subdivided into one sub-brick per
/// selected index by repeated axis-0 splits of the lexicographically least
/// piece, together with the staircase complement of `u`; the domain pattern
/// is the input pattern. Whichever side has fewer bricks is padded by
/// axis-0-splitting its lexicographically least paddable brick (domain: not
/// selected; range: not inside `u`). Selected bricks are then paired with the
/// `u` sub-bricks in order, and the remainder in order.
pub fn transitivity_map(
    pattern: &Pattern,
    selection: &BTreeSet<usize>,
    u: &Brick,
) -> Result<Element, TransitivityError> {
    if selection.is_empty() {
        return Err(TransitivityError::EmptySelection);
    }
    if let Some(&i) = selection.iter().find(|&&i| i >= pattern.len()) {
        return Err(TransitivityError::IndexOutOfRange(i));
    }
    if selection.len() == pattern.len() {
        return Err(TransitivityError::WholeSelection);
    }
    if u.total_len() == 0 {
        return Err(TransitivityError::WholeCubeTarget);
    }

    // Range: |selection| sub-bricks of u, then the staircase complement.
    let mut targets = vec![u.clone()];
    while targets.len() < selection.len() {
        let at = position_of_min(&targets);
        split_in_place(&mut targets, at);
    }
    let mut range = targets;
    let boundary = range.len();
    range.extend(isolating_bricks(u));

    // Domain: selected bricks first, the rest after, in index order.
    let mut domain: Vec<Brick> = selection.iter().map(|&i| pattern.brick(i).clone()).collect();
    domain.extend(
        (0..pattern.len())
            .filter(|i| !selection.contains(i))
            .map(|i| pattern.brick(i).clone()),
    );

    // Pad the shorter side; only unselected/complement bricks may split.
    while domain.len() < range.len() {
        let at = selection.len() + position_of_min(&domain[selection.len()..]);
        split_in_place(&mut domain, at);
    }
    while range.len() < domain.len() {
        let at = boundary + position_of_min(&range[boundary..]);
        split_in_place(&mut range, at);
    }

    Ok(Element::new(
        Pattern::from_partition(domain),
        Pattern::from_partition(range),
    )
    .expect("balanced partitions of equal size"))
}

fn position_of_min(bricks: &[Brick]) -> usize {
    let (at, _) = bricks
        .iter()
        .enumerate()
        .min_by_key(|(_, b)| *b)
        .expect("nonempty brick list");
    at
}

fn split_in_place(bricks: &mut Vec<Brick>, at: usize) {
    let (low, high) = bricks[at].split(0);
    bricks[at] = low;
    bricks.insert(at + 1, high);
}
