use std::fmt;
use std::str::FromStr;

use cantor_core::ParseError;

/// The five kinds of named generators.  `Pi` and `PiBar` are the two
/// permutation species; `A`, `B`, `C` split and re-glue rectangles.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SigmaBase {
    A,
    B,
    C,
    Pi,
    PiBar,
}

impl SigmaBase {
    pub const ALL: [SigmaBase; 5] = [
        SigmaBase::A,
        SigmaBase::B,
        SigmaBase::C,
        SigmaBase::Pi,
        SigmaBase::PiBar,
    ];

    fn token(&self) -> char {
        match self {
            SigmaBase::A => 'A',
            SigmaBase::B => 'B',
            SigmaBase::C => 'C',
            SigmaBase::Pi => 'p',
            SigmaBase::PiBar => 'q',
        }
    }
}

/// One generator occurrence: base kind, index, and an exponent sign.
///
/// Textual form: base token + index + optional `'` for the inverse, e.g.
/// `A3`, `p1`, `q0'`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SigmaLetter {
    pub base: SigmaBase,
    pub index: usize,
    pub inverse: bool,
}

impl SigmaLetter {
    pub fn new(base: SigmaBase, index: usize) -> SigmaLetter {
        SigmaLetter {
            base,
            index,
            inverse: false,
        }
    }

    pub fn a(index: usize) -> SigmaLetter {
        SigmaLetter::new(SigmaBase::A, index)
    }

    pub fn b(index: usize) -> SigmaLetter {
        SigmaLetter::new(SigmaBase::B, index)
    }

    pub fn c(index: usize) -> SigmaLetter {
        SigmaLetter::new(SigmaBase::C, index)
    }

    pub fn pi(index: usize) -> SigmaLetter {
        SigmaLetter::new(SigmaBase::Pi, index)
    }

    pub fn pibar(index: usize) -> SigmaLetter {
        SigmaLetter::new(SigmaBase::PiBar, index)
    }

    pub fn inverted(mut self) -> SigmaLetter {
        self.inverse = !self.inverse;
        self
    }
}

impl fmt::Display for SigmaLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base.token(), self.index)?;
        if self.inverse {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SigmaLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SigmaLetter {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<SigmaLetter, ParseError> {
        let mut chars = s.chars();
        let base = match chars.next() {
            Some('A') => SigmaBase::A,
            Some('B') => SigmaBase::B,
            Some('C') => SigmaBase::C,
            Some('p') => SigmaBase::Pi,
            Some('q') => SigmaBase::PiBar,
            _ => return Err(ParseError::new(format!("unknown generator in {s:?}"))),
        };
        let rest = chars.as_str();
        let (digits, inverse) = match rest.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let index: usize = digits
            .parse()
            .map_err(|_| ParseError::new(format!("bad generator index in {s:?}")))?;
        Ok(SigmaLetter {
            base,
            index,
            inverse,
        })
    }
}

/// A word in the named generators, applied as maps from right to left (the
/// leftmost letter acts last).
///
/// Textual form: letters separated by whitespace; the empty word is `""` or
/// `"-"`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SigmaWord {
    letters: Vec<SigmaLetter>,
}

impl SigmaWord {
    pub fn new(letters: Vec<SigmaLetter>) -> SigmaWord {
        SigmaWord { letters }
    }

    pub fn empty() -> SigmaWord {
        SigmaWord::default()
    }

    pub fn letters(&self) -> &[SigmaLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: SigmaLetter) {
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &SigmaWord) -> SigmaWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        SigmaWord { letters }
    }

    /// The group inverse: letters reversed with exponents flipped.
    pub fn inverse(&self) -> SigmaWord {
        SigmaWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| l.inverted())
                .collect(),
        }
    }
}

impl fmt::Display for SigmaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "-");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SigmaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for SigmaWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<SigmaWord, ParseError> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(SigmaWord::empty());
        }
        let letters: Result<Vec<SigmaLetter>, ParseError> =
            s.split_whitespace().map(str::parse).collect();
        Ok(SigmaWord { letters: letters? })
    }
}
