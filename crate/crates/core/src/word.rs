//! Words over a vertex alphabet and the graphs they represent.
//!
//! Two distinct letters `x` and `y` alternate in a word when the word
//! restricted to `{x, y}` reads `xyxy...` or `yxyx...`. A word represents a
//! graph when alternation coincides with adjacency.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A letter is a dense vertex id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for Letter {
    fn from(v: u32) -> Self {
        Letter(v)
    }
}

impl From<usize> for Letter {
    fn from(v: usize) -> Self {
        Letter(v as u32)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite sequence of letters together with its alphabet.
///
/// The alphabet is kept sorted and may contain letters that do not occur,
/// which is what [`Word::restrict`] needs when the restricting set is larger
/// than the occurring letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let alphabet: BTreeSet<Letter> = alphabet.into_iter().collect();
        if let Some(bad) = letters.iter().find(|l| !alphabet.contains(l)) {
            return Err(Error::LetterOutsideAlphabet(bad.0));
        }
        Ok(Word {
            letters,
            alphabet: alphabet.into_iter().collect(),
        })
    }

    /// Word whose alphabet is exactly the set of occurring letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let letters: Vec<Letter> = letters.into_iter().collect();
        let alphabet: BTreeSet<Letter> = letters.iter().copied().collect();
        Word {
            letters,
            alphabet: alphabet.into_iter().collect(),
        }
    }

    pub fn from_ids(ids: &[u32]) -> Self {
        Self::from_letters(ids.iter().map(|&i| Letter(i)))
    }

    /// Parses a compact digit string such as `"6345123215"`, one letter per
    /// decimal digit.
    pub fn from_digits(s: &str) -> Self {
        Self::from_letters(s.chars().filter_map(|c| c.to_digit(10)).map(Letter))
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
            alphabet: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn ids(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.0).collect()
    }

    pub fn count(&self, x: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == x).count()
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.letters.contains(&x)
    }

    /// Concatenation; the alphabet is the union.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let alphabet: BTreeSet<Letter> = self
            .alphabet
            .iter()
            .chain(other.alphabet.iter())
            .copied()
            .collect();
        Word {
            letters,
            alphabet: alphabet.into_iter().collect(),
        }
    }

    /// `w = uv` becomes `vu`, with `u` the first `at` letters.
    pub fn rotate(&self, at: usize) -> Word {
        let at = at.min(self.letters.len());
        let mut letters = self.letters[at..].to_vec();
        letters.extend_from_slice(&self.letters[..at]);
        Word {
            letters,
            alphabet: self.alphabet.clone(),
        }
    }

    /// Keeps only occurrences of letters in `keep`, in order.
    pub fn restrict(&self, keep: &BTreeSet<Letter>) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|l| keep.contains(l))
                .collect(),
            alphabet: self
                .alphabet
                .iter()
                .copied()
                .filter(|l| keep.contains(l))
                .collect(),
        }
    }

    pub fn alternates(&self, x: Letter, y: Letter) -> Result<bool> {
        if x == y {
            return Err(Error::SameLetter(x.0));
        }
        for l in [x, y] {
            if !self.contains(l) {
                return Err(Error::MissingLetter(l.0));
            }
        }
        Ok(self.alternates_unchecked(x, y))
    }

    // Strict alternation of the restriction to {x, y}.
    fn alternates_unchecked(&self, x: Letter, y: Letter) -> bool {
        let mut last = None;
        for &l in &self.letters {
            if l == x || l == y {
                if last == Some(l) {
                    return false;
                }
                last = Some(l);
            }
        }
        true
    }

    /// Leftmost occurrence of each letter, in order.
    pub fn initial_permutation(&self) -> Word {
        let mut seen = BTreeSet::new();
        let letters = self
            .letters
            .iter()
            .copied()
            .filter(|l| seen.insert(*l))
            .collect();
        Word {
            letters,
            alphabet: self.alphabet.clone(),
        }
    }

    /// Rightmost occurrence of each letter, in order.
    pub fn final_permutation(&self) -> Word {
        let mut seen = BTreeSet::new();
        let mut letters: Vec<Letter> = self
            .letters
            .iter()
            .rev()
            .copied()
            .filter(|l| seen.insert(*l))
            .collect();
        letters.reverse();
        Word {
            letters,
            alphabet: self.alphabet.clone(),
        }
    }

    /// `Some(k)` when every alphabet letter occurs exactly `k` times.
    pub fn uniformity(&self) -> Result<Option<usize>> {
        if self.letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        let counts = self.counts();
        let k = counts.get(&self.alphabet[0]).copied().unwrap_or(0);
        if k == 0
            || self
                .alphabet
                .iter()
                .any(|l| counts.get(l).copied().unwrap_or(0) != k)
        {
            return Ok(None);
        }
        Ok(Some(k))
    }

    fn counts(&self) -> BTreeMap<Letter, usize> {
        let mut counts = BTreeMap::new();
        for &l in &self.letters {
            *counts.entry(l).or_insert(0) += 1;
        }
        counts
    }

    /// True iff `v` occurs as a contiguous block.
    pub fn is_factor(&self, v: &Word) -> bool {
        if v.letters.is_empty() {
            return true;
        }
        self.letters
            .windows(v.letters.len())
            .any(|w| w == v.letters.as_slice())
    }

    /// All distinct non-empty factors.
    pub fn factors(&self) -> BTreeSet<Vec<Letter>> {
        let n = self.letters.len();
        let mut out = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..=n {
                out.insert(self.letters[i..j].to_vec());
            }
        }
        out
    }

    /// The graph on the alphabet in which letters are adjacent iff they
    /// alternate. Vertex `i` of the result is `self.alphabet()[i]`, so for a
    /// dense alphabet `0..k` ids coincide.
    pub fn derive_graph(&self) -> SimpleGraph {
        let k = self.alphabet.len();
        let index: BTreeMap<Letter, usize> = self
            .alphabet
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i))
            .collect();
        let mut positions = vec![Vec::new(); k];
        for (p, l) in self.letters.iter().enumerate() {
            positions[index[l]].push(p);
        }
        let mut g = SimpleGraph::new(k);
        for i in 0..k {
            for j in i + 1..k {
                if alternating_positions(&positions[i], &positions[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// True iff this word represents `g`. The alphabet must be exactly
    /// `0..g.n()`.
    pub fn represents(&self, g: &SimpleGraph) -> Result<bool> {
        self.check_alphabet(g)?;
        if self.alphabet.iter().any(|&l| !self.contains(l)) {
            return Ok(false);
        }
        Ok(self.derive_graph() == *g)
    }

    /// First vertex pair on which the word and `g` disagree.
    pub fn first_mismatch(&self, g: &SimpleGraph) -> Result<Option<(u32, u32)>> {
        self.check_alphabet(g)?;
        if let Some(l) = self.alphabet.iter().find(|&&l| !self.contains(l)) {
            return Ok(Some((l.0, l.0)));
        }
        let derived = self.derive_graph();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if derived.adjacent(u, v) != g.adjacent(u, v) {
                    return Ok(Some((u as u32, v as u32)));
                }
            }
        }
        Ok(None)
    }

    fn check_alphabet(&self, g: &SimpleGraph) -> Result<()> {
        let dense = self.alphabet.len() == g.n()
            && self
                .alphabet
                .iter()
                .enumerate()
                .all(|(i, l)| l.index() == i);
        if !dense {
            return Err(Error::AlphabetMismatch(format!(
                "word alphabet has {} letters, graph has vertices 0..{}",
                self.alphabet.len(),
                g.n()
            )));
        }
        Ok(())
    }

    /// Letters occurring exactly once in every gap between consecutive
    /// occurrences of `x`. Any neighbour of `x` in the represented graph is
    /// among them. With a single occurrence of `x` there is no gap and every
    /// other alphabet letter is returned.
    pub fn alternation_candidates(&self, x: Letter) -> Result<BTreeSet<Letter>> {
        let occ: Vec<usize> = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == x)
            .map(|(i, _)| i)
            .collect();
        if occ.is_empty() {
            return Err(Error::MissingLetter(x.0));
        }
        let mut cands: BTreeSet<Letter> =
            self.alphabet.iter().copied().filter(|&l| l != x).collect();
        for pair in occ.windows(2) {
            let mut counts: BTreeMap<Letter, usize> = BTreeMap::new();
            for &l in &self.letters[pair[0] + 1..pair[1]] {
                *counts.entry(l).or_insert(0) += 1;
            }
            cands.retain(|l| counts.get(l) == Some(&1));
        }
        Ok(cands)
    }
}

// Two sorted position lists alternate iff the merged sequence never repeats
// an owner.
fn alternating_positions(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    let mut last: Option<bool> = None;
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i] < b[j]);
        if last == Some(take_a) {
            return false;
        }
        last = Some(take_a);
        if take_a {
            i += 1;
        } else {
            j += 1;
        }
    }
    true
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}
