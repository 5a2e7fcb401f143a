use std::fmt;
use std::str::FromStr;

use cantor_core::ParseError;

/// A generator of the pattern-sequence monoid:
///
/// * `V(i)` — split global rectangle `i` vertically (axis 0),
/// * `H(i)` — split global rectangle `i` horizontally (axis 1),
/// * `S(i)` — swap the number tags `i` and `i + 1`.
///
/// Textual form: `v<i>`, `h<i>`, `s<i>`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonoidLetter {
    V(usize),
    H(usize),
    S(usize),
}

impl MonoidLetter {
    pub fn index(&self) -> usize {
        match *self {
            MonoidLetter::V(i) | MonoidLetter::H(i) | MonoidLetter::S(i) => i,
        }
    }

    /// True for the splitting letters `V`/`H`.
    pub fn is_split(&self) -> bool {
        !matches!(self, MonoidLetter::S(_))
    }

    /// The same splitting kind at a different index; panics on `S`.
    pub fn split_at(&self, index: usize) -> MonoidLetter {
        match self {
            MonoidLetter::V(_) => MonoidLetter::V(index),
            MonoidLetter::H(_) => MonoidLetter::H(index),
            MonoidLetter::S(_) => panic!("split_at applies to V/H letters"),
        }
    }
}

impl fmt::Display for MonoidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidLetter::V(i) => write!(f, "v{i}"),
            MonoidLetter::H(i) => write!(f, "h{i}"),
            MonoidLetter::S(i) => write!(f, "s{i}"),
        }
    }
}

impl fmt::Debug for MonoidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for MonoidLetter {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<MonoidLetter, ParseError> {
        let (kind, index) = s.split_at(1.min(s.len()));
        let index: usize = index
            .parse()
            .map_err(|_| ParseError::new(format!("bad letter index in {s:?}")))?;
        match kind {
            "v" => Ok(MonoidLetter::V(index)),
            "h" => Ok(MonoidLetter::H(index)),
            "s" => Ok(MonoidLetter::S(index)),
            _ => Err(ParseError::new(format!("unknown letter kind in {s:?}"))),
        }
    }
}

/// A word over the monoid letters, applied left to right.
///
/// Textual form: letters separated by whitespace, e.g. `"v0 h1 s0"`; the
/// empty word is written `""` or `"-"`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MonoidWord {
    letters: Vec<MonoidLetter>,
}

impl MonoidWord {
    pub fn new(letters: Vec<MonoidLetter>) -> MonoidWord {
        MonoidWord { letters }
    }

    pub fn empty() -> MonoidWord {
        MonoidWord::default()
    }

    pub fn letters(&self) -> &[MonoidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: MonoidLetter) {
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &MonoidWord) -> MonoidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        MonoidWord { letters }
    }
}

impl fmt::Display for MonoidWord {
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

impl fmt::Debug for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for MonoidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<MonoidWord, ParseError> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(MonoidWord::empty());
        }
        let letters: Result<Vec<MonoidLetter>, ParseError> =
            s.split_whitespace().map(str::parse).collect();
        Ok(MonoidWord { letters: letters? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_parse_and_print_round_trip() {
        let w: MonoidWord = "v0 h12 s3".parse().unwrap();
        assert_eq!(w.letters().len(), 3);
        assert_eq!(w.to_string(), "v0 h12 s3");
        assert_eq!("-".parse::<MonoidWord>().unwrap(), MonoidWord::empty());
        assert_eq!(MonoidWord::empty().to_string(), "-");
    }

    #[test]
    fn malformed_letters_are_rejected() {
        assert!("x0".parse::<MonoidLetter>().is_err());
        assert!("v".parse::<MonoidLetter>().is_err());
        assert!("v-1".parse::<MonoidLetter>().is_err());
    }
}
