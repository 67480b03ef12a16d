//! Words in free groups, group presentations and coset tables.

mod coset;
mod parse;

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

pub use coset::{coset_table, subgroup_presentation, CosetTable, Permutation, SchreierGenerator};
pub use parse::parse_presentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordsError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{name}` at byte {pos}")]
    UnknownGenerator { name: String, pos: usize },
    #[error("zero exponent at byte {pos}")]
    ZeroExponent { pos: usize },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("relator {index} uses generator index {generator} but only {count} generators exist")]
    GeneratorOutOfRange {
        index: usize,
        generator: usize,
        count: usize,
    },
    #[error("relator {index} (`{relator}`) does not act trivially")]
    RelatorViolated { index: usize, relator: String },
    #[error("expected {expected} permutation images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("action is not transitive: coset {0} is unreachable from coset 0")]
    NotTransitive(usize),
}

/// A freely reduced word, stored as runs `(generator, exponent)`.
///
/// Adjacent runs always have distinct generators and nonzero exponents, so
/// structural equality is equality in the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Word {
            letters: vec![(g, 1)],
        }
    }

    pub fn power_of(g: usize, exp: i64) -> Self {
        let mut w = Word::identity();
        w.push(g, exp);
        w
    }

    /// Builds a word from arbitrary runs, freely reducing as it goes.
    pub fn from_runs(runs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in runs {
            w.push(g, e);
        }
        w
    }

    /// Appends `g^exp` on the right, reducing.
    pub fn push(&mut self, g: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((last, e)) if *last == g => {
                *e += exp;
                if *e == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, exp)),
        }
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.letters
    }

    /// Letters one at a time, as `(generator, ±1)`.
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = (usize, i64)> + '_ {
        self.letters
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    /// Length in the free group (sum of absolute exponents).
    pub fn len(&self) -> usize {
        self.letters
            .iter()
            .map(|&(_, e)| e.unsigned_abs() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = Word::identity();
        for _ in 0..exp.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Renders the word with the given generator names. Names are
    /// concatenated when they are all single characters, otherwise joined by `*`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }

    /// All reduced words of length at most `max_len` over `generators`
    /// generators, ordered by length and then by letter order
    /// `g0, g0⁻¹, g1, g1⁻¹, …`.
    pub fn enumerate(generators: usize, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::identity()];
        let mut frontier = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in 0..generators {
                    for s in [1, -1] {
                        let mut v = w.clone();
                        v.push(g, s);
                        if v.len() == w.len() + 1 {
                            next.push(v);
                        }
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut out = self.clone();
        for &(g, e) in &rhs.letters {
            out.push(g, e);
        }
        out
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        let sep = if self.names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            "*"
        };
        for (k, &(g, e)) in self.word.letters.iter().enumerate() {
            if k > 0 {
                write!(f, "{sep}")?;
            }
            match self.names.get(g) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "g{g}")?,
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A finite presentation `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, WordsError> {
        for (i, name) in generators.iter().enumerate() {
            if generators[..i].contains(name) {
                return Err(WordsError::DuplicateGenerator(name.clone()));
            }
        }
        for (index, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator().filter(|&g| g >= generators.len()) {
                return Err(WordsError::GeneratorOutOfRange {
                    index,
                    generator: g,
                    count: generators.len(),
                });
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// The free group on `d` generators named `a, b, c, …` (or `g1, g2, …` past 26).
    pub fn free(d: usize) -> Self {
        let generators = (0..d)
            .map(|i| {
                if d <= 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("g{}", i + 1)
                }
            })
            .collect();
        Presentation {
            generators,
            relators: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        w.display(&self.generators).to_string()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}|", self.generators.join(","))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        write!(f, ">")
    }
}
