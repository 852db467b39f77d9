use std::fmt;

use super::perm::Perm;
use crate::{Error, Result};

/// Braid word on `strands` strands: entry `i` means the Artin generator
/// `sigma_i`, `-i` its inverse, with `1 <= |i| <= strands - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    pub strands: usize,
    pub word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self> {
        for (pos, &g) in word.iter().enumerate() {
            let idx = g.unsigned_abs() as usize;
            if g == 0 || idx >= strands {
                return Err(Error::BraidParse {
                    pos,
                    msg: format!("generator {} out of range for {} strands", g, strands),
                });
            }
        }
        Ok(BraidWord { strands, word })
    }

    /// Parse a string of space-separated signed integers.
    pub fn parse(s: &str, strands: usize) -> Result<Self> {
        let mut word = Vec::new();
        for (pos, tok) in s.split_whitespace().enumerate() {
            let g: i32 = tok.parse().map_err(|_| Error::BraidParse {
                pos,
                msg: format!("cannot parse generator '{}'", tok),
            })?;
            word.push(g);
        }
        BraidWord::new(strands, word)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Writhe: positive minus negative crossings.
    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|&g| g.signum() as i64).sum()
    }

    /// The underlying permutation, composing crossings left to right:
    /// `w = s_{i_1} s_{i_2} ... s_{i_r}` with `(vw)(i) = v(w(i))`.
    pub fn permutation(&self) -> Perm {
        let mut w = Perm::identity(self.strands);
        for &g in &self.word {
            let i = g.unsigned_abs() as usize;
            let s = Perm::transposition(self.strands, i, i + 1);
            w = w.compose(&s);
        }
        w
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        self.permutation().num_cycles()
    }

    /// Cyclic rotation by k: moves the first k letters to the end.
    pub fn rotated(&self, k: usize) -> BraidWord {
        let mut word = self.word.clone();
        let len = word.len().max(1);
        word.rotate_left(k % len);
        BraidWord { strands: self.strands, word }
    }

    /// Is `other` a cyclic rotation of `self`?
    pub fn is_rotation_of(&self, other: &BraidWord) -> bool {
        if self.strands != other.strands || self.word.len() != other.word.len() {
            return false;
        }
        if self.word.is_empty() {
            return true;
        }
        (0..self.word.len()).any(|k| self.rotated(k).word == other.word)
    }

    /// Markov stabilization: the same closure on one more strand, with a
    /// positive or negative crossing appended.
    pub fn stabilized(&self, sign: i32) -> BraidWord {
        let mut word = self.word.clone();
        word.push(sign.signum() * self.strands as i32);
        BraidWord { strands: self.strands + 1, word }
    }

    /// All words of exactly the given length (corpus enumeration).
    pub fn all_words(strands: usize, len: usize) -> Vec<BraidWord> {
        let gens: Vec<i32> = (1..strands as i32)
            .flat_map(|i| [i, -i])
            .collect();
        let mut out: Vec<Vec<i32>> = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    gens.iter().map(move |&g| {
                        let mut w2 = w.clone();
                        w2.push(g);
                        w2
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|word| BraidWord { strands, word })
            .collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.word.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", toks.join(" "))
    }
}
