use std::fmt;

use cantor_core::{Brick, Pattern, PatternError};

use crate::letter::{MonoidLetter, MonoidWord};

/// The side-count of every brick here: the monoid acts on sequences of unit
/// squares, so all bricks are two-dimensional.
pub const DIM: usize = 2;

/// An infinite sequence of numbered square decompositions, stored finitely.
///
/// Square `i < squares.len()` is decomposed into the listed bricks, each
/// carrying a global number tag; every later square `i` is undivided and
/// carries the single number `i + tail_offset`.  The number tags across the
/// whole sequence are exactly `0, 1, 2, …`, each used once.
///
/// The representation is kept canonical: bricks within a square are sorted by
/// number, and trailing squares that are undivided with the correct tail
/// number are absorbed into the implicit tail.  With that normal form,
/// structural equality coincides with equality of the (infinite) sequences.
#[derive(Clone, PartialEq, Eq)]
pub struct PatternSequence {
    squares: Vec<Vec<(Brick, usize)>>,
    tail_offset: usize,
}

/// Why an explicitly supplied sequence is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceError {
    /// A listed square is not a valid decomposition of the unit square.
    BadSquare { square: usize, source: PatternError },
    /// A brick does not have exactly two coordinates.
    WrongDim { square: usize },
    /// The number tags are not exactly `0 ..= len + tail_offset - 1`.
    BadNumbering,
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::BadSquare { square, source } => {
                write!(f, "square {square} is not a decomposition: {source}")
            }
            SequenceError::WrongDim { square } => {
                write!(f, "square {square} holds a brick of the wrong dimension")
            }
            SequenceError::BadNumbering => {
                write!(f, "number tags are not consecutive from 0")
            }
        }
    }
}

impl std::error::Error for SequenceError {}

impl PatternSequence {
    /// The sequence of undivided squares numbered `0, 1, 2, …` — the monoid
    /// identity.
    pub fn trivial() -> PatternSequence {
        PatternSequence {
            squares: Vec::new(),
            tail_offset: 0,
        }
    }

    /// Builds a sequence from explicit squares, validating and normalizing.
    pub fn from_parts(
        squares: Vec<Vec<(Brick, usize)>>,
        tail_offset: usize,
    ) -> Result<PatternSequence, SequenceError> {
        let mut seq = PatternSequence {
            squares,
            tail_offset,
        };
        seq.validate()?;
        seq.normalize();
        Ok(seq)
    }

    fn validate(&self) -> Result<(), SequenceError> {
        let total = self.squares.len() + self.tail_offset;
        let mut seen = vec![false; total];
        for (square, entries) in self.squares.iter().enumerate() {
            for (brick, number) in entries {
                if brick.dim() != DIM {
                    return Err(SequenceError::WrongDim { square });
                }
                if *number >= total || seen[*number] {
                    return Err(SequenceError::BadNumbering);
                }
                seen[*number] = true;
            }
            let bricks: Vec<Brick> = entries.iter().map(|(b, _)| b.clone()).collect();
            if let Err(source) = Pattern::new(bricks) {
                return Err(SequenceError::BadSquare { square, source });
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(SequenceError::BadNumbering);
        }
        Ok(())
    }

    /// Sorts each square by number and absorbs trailing undivided squares
    /// whose number already matches the implicit tail.
    fn normalize(&mut self) {
        for square in &mut self.squares {
            square.sort_by_key(|&(_, n)| n);
        }
        while let Some(last) = self.squares.last() {
            let tail_number = self.squares.len() - 1 + self.tail_offset;
            if last.len() == 1 && last[0].1 == tail_number && last[0].0 == Brick::whole(DIM) {
                self.squares.pop();
            } else {
                break;
            }
        }
    }

    /// Number of explicitly stored squares; all later squares are undivided.
    pub fn explicit_len(&self) -> usize {
        self.squares.len()
    }

    /// Amount by which tail numbers are shifted: square `i ≥ explicit_len()`
    /// carries number `i + tail_offset()`.
    pub fn tail_offset(&self) -> usize {
        self.tail_offset
    }

    /// The numbered bricks of square `s`, materialized if `s` is in the tail.
    pub fn square_view(&self, s: usize) -> Vec<(Brick, usize)> {
        if s < self.squares.len() {
            self.squares[s].clone()
        } else {
            vec![(Brick::whole(DIM), s + self.tail_offset)]
        }
    }

    /// True when every square past the first is undivided, i.e. the sequence
    /// is determined by its first square.
    pub fn in_pi0(&self) -> bool {
        self.squares.len() <= 1
    }

    /// For a sequence with only square 0 divided: its bricks listed in
    /// number-tag order (tag `i` at index `i`).  `None` otherwise.
    pub fn pi0_bricks(&self) -> Option<Vec<Brick>> {
        if !self.in_pi0() {
            return None;
        }
        Some(self.square_view(0).into_iter().map(|(b, _)| b).collect())
    }

    /// Brings every number up to `n` into the explicit part by materializing
    /// undivided tail squares.
    fn materialize(&mut self, n: usize) {
        while self.squares.len() + self.tail_offset <= n {
            let number = self.squares.len() + self.tail_offset;
            self.squares.push(vec![(Brick::whole(DIM), number)]);
        }
    }

    /// Splits the brick numbered `i` along `axis`; the low (bit-0) child
    /// keeps number `i`, the high child becomes `i + 1`, and all higher
    /// numbers shift up by one.
    fn split_numbered(&mut self, i: usize, axis: usize) {
        self.materialize(i);
        for square in &mut self.squares {
            for entry in square.iter_mut() {
                if entry.1 > i {
                    entry.1 += 1;
                }
            }
        }
        let (s, p) = self
            .position_of(i)
            .expect("materialized number is present");
        let (low, high) = self.squares[s][p].0.split(axis);
        self.squares[s][p] = (low, i);
        self.squares[s].insert(p + 1, (high, i + 1));
        self.tail_offset += 1;
        self.normalize();
    }

    /// Swaps the number tags `i` and `i + 1`.
    fn swap_numbers(&mut self, i: usize) {
        self.materialize(i + 1);
        for square in &mut self.squares {
            for entry in square.iter_mut() {
                if entry.1 == i {
                    entry.1 = i + 1;
                } else if entry.1 == i + 1 {
                    entry.1 = i;
                }
            }
        }
        self.normalize();
    }

    fn position_of(&self, number: usize) -> Option<(usize, usize)> {
        for (s, square) in self.squares.iter().enumerate() {
            if let Some(p) = square.iter().position(|&(_, n)| n == number) {
                return Some((s, p));
            }
        }
        None
    }

    /// Applies one generator letter in place.
    pub fn apply_letter(&mut self, letter: MonoidLetter) {
        match letter {
            MonoidLetter::V(i) => self.split_numbered(i, 0),
            MonoidLetter::H(i) => self.split_numbered(i, 1),
            MonoidLetter::S(i) => self.swap_numbers(i),
        }
    }
}

impl fmt::Display for PatternSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, square) in self.squares.iter().enumerate() {
            write!(f, "[{i}: ")?;
            for (j, (brick, number)) in square.iter().enumerate() {
                if j > 0 {
                    write!(f, "|")?;
                }
                write!(f, "{brick}#{number}")?;
            }
            write!(f, "] ")?;
        }
        write!(
            f,
            "tail={},offset={}",
            self.squares.len(),
            self.tail_offset
        )
    }
}

impl fmt::Debug for PatternSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Runs a word letter by letter from the trivial sequence.
pub fn eval_word(word: &MonoidWord) -> PatternSequence {
    let mut seq = PatternSequence::trivial();
    for &letter in word.letters() {
        seq.apply_letter(letter);
    }
    seq
}

/// Monoid product: pastes square `n` of `q` affinely into the brick numbered
/// `n` of `p`, for every `n`; the result keeps `q`'s numbering.
pub fn multiply(p: &PatternSequence, q: &PatternSequence) -> PatternSequence {
    let explicit = p
        .explicit_len()
        .max(q.explicit_len().saturating_sub(p.tail_offset()));
    let mut squares = Vec::with_capacity(explicit);
    for s in 0..explicit {
        let mut square = Vec::new();
        for (brick, n) in p.square_view(s) {
            for (sub, m) in q.square_view(n) {
                square.push((sub.prefixed_by(&brick), m));
            }
        }
        squares.push(square);
    }
    let mut out = PatternSequence {
        squares,
        tail_offset: p.tail_offset() + q.tail_offset(),
    };
    out.normalize();
    out
}

/// Embeds a numbered decomposition of the unit square (brick `i` carrying
/// number `i`) as the sequence dividing square 0 only.
pub fn pi0_sequence(pattern: &Pattern) -> PatternSequence {
    assert_eq!(pattern.dim(), DIM, "sequences hold two-dimensional bricks");
    let square: Vec<(Brick, usize)> = pattern
        .bricks()
        .iter()
        .cloned()
        .zip(0..)
        .collect();
    let mut seq = PatternSequence {
        squares: vec![square],
        tail_offset: pattern.len() - 1,
    };
    seq.normalize();
    seq
}
