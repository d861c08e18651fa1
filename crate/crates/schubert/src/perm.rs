//! Permutations in one-line notation: length, descents, the Bruhat covering
//! relation, descent subwords and flattening.
//!
//! Positions and values are 1-based throughout the public API, matching the
//! usual one-line notation `w(1) w(2) ... w(n)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors reported by permutation construction and queries.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("permutation word is empty")]
    EmptyWord,
    #[error("value {value} is out of range 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("value {value} appears more than once")]
    DuplicateValue { value: usize },
    #[error("position {position} is out of range 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("expected positions i < j, got i={i} and j={j}")]
    NotAnAscendingPair { i: usize, j: usize },
    #[error("position {position} is not a descent")]
    NotADescent { position: usize },
    #[error("expected exactly one descent, found {descents}")]
    NotGrassmannian { descents: usize },
    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

/// A transposition `(i <-> j)` whose application raises the owning
/// permutation by exactly one step in the Bruhat order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverTransposition {
    pub i: usize,
    pub j: usize,
}

impl Permutation {
    /// Builds a permutation from its one-line word, validating that the word
    /// is a bijection on `{1, .., n}` with `n >= 1`.
    pub fn new(word: Vec<usize>) -> Result<Self, PermError> {
        if word.is_empty() {
            return Err(PermError::EmptyWord);
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &value in &word {
            if value == 0 || value > n {
                return Err(PermError::ValueOutOfRange { value, n });
            }
            if seen[value] {
                return Err(PermError::DuplicateValue { value });
            }
            seen[value] = true;
        }
        Ok(Self { word })
    }

    /// Constructor for words already known to be valid (enumeration loops).
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    /// The identity permutation of size `n`.
    ///
    /// Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations must have size at least 1");
        Self {
            word: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at the 1-based position `i`. Panics when `i` is out of range.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.word.len()];
        for (pos, &value) in self.word.iter().enumerate() {
            inv[value - 1] = pos + 1;
        }
        Self { word: inv }
    }

    /// Coxeter length, computed as the inversion count.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `d` with `w(d) > w(d+1)`, in ascending order.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.word.len())
            .filter(|&d| self.word[d - 1] > self.word[d])
            .collect()
    }

    /// Whether swapping positions `i < j` covers this permutation in the
    /// Bruhat order: `w(i) < w(j)` and no intermediate value lies strictly
    /// between `w(i)` and `w(j)`.
    pub fn is_cover(&self, i: usize, j: usize) -> Result<bool, PermError> {
        self.check_pair(i, j)?;
        Ok(self.cover_unchecked(i, j))
    }

    pub(crate) fn cover_unchecked(&self, i: usize, j: usize) -> bool {
        let (lo, hi) = (self.word[i - 1], self.word[j - 1]);
        lo < hi && self.word[i..j - 1].iter().all(|&mid| mid < lo || mid > hi)
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<(), PermError> {
        let n = self.n();
        for position in [i, j] {
            if position == 0 || position > n {
                return Err(PermError::PositionOutOfRange { position, n });
            }
        }
        if i >= j {
            return Err(PermError::NotAnAscendingPair { i, j });
        }
        Ok(())
    }

    /// All Bruhat cover transpositions of this permutation, ordered
    /// lexicographically by `(i, j)`.
    pub fn covers(&self) -> Vec<CoverTransposition> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..n {
            for j in i + 1..=n {
                if self.cover_unchecked(i, j) {
                    out.push(CoverTransposition { i, j });
                }
            }
        }
        out
    }

    /// The permutation obtained by swapping positions `i < j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Result<Self, PermError> {
        self.check_pair(i, j)?;
        let mut word = self.word.clone();
        word.swap(i - 1, j - 1);
        Ok(Self { word })
    }

    /// The subword attached to a descent `d`: the right-to-left minima of
    /// `w(1..d)` followed by the left-to-right maxima of `w(d+1..n)`.
    ///
    /// The result always contains positions `d` and `d+1`, and its flattening
    /// is Grassmannian with its unique descent at the number of subword
    /// indices that are `<= d`.
    pub fn descent_subword(&self, d: usize) -> Result<DescentSubword, PermError> {
        let n = self.n();
        if d == 0 || d >= n || self.word[d - 1] <= self.word[d] {
            return Err(PermError::NotADescent { position: d });
        }
        let mut indices = Vec::new();
        // right-to-left minima of the left segment; a singleton segment is
        // its own minimum
        let mut min = usize::MAX;
        for i in (1..=d).rev() {
            if self.at(i) < min {
                min = self.at(i);
                indices.push(i);
            }
        }
        indices.reverse();
        // left-to-right maxima of the right segment
        let mut max = 0;
        for i in d + 1..=n {
            if self.at(i) > max {
                max = self.at(i);
                indices.push(i);
            }
        }
        let values = indices.iter().map(|&i| self.at(i)).collect();
        Ok(DescentSubword {
            descent: d,
            indices,
            values,
        })
    }

    /// Digit-string form, available when `n <= 9`.
    pub fn to_compact(&self) -> Option<String> {
        if self.n() > 9 {
            return None;
        }
        Some(
            self.word
                .iter()
                .map(|v| char::from(b'0' + *v as u8))
                .collect(),
        )
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses either space-separated one-line notation (`"3 1 4 9 7 2 6 5 8"`)
    /// or a compact digit string (`"314972658"`, only for `n <= 9`).
    fn from_str(s: &str) -> Result<Self, PermError> {
        let parse_err = |reason: &str| PermError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(PermError::EmptyWord);
        }
        if trimmed.contains(char::is_whitespace) {
            let mut word = Vec::new();
            for token in trimmed.split_whitespace() {
                let value = token
                    .parse::<usize>()
                    .map_err(|_| parse_err(&format!("{token:?} is not a positive integer")))?;
                word.push(value);
            }
            return Self::new(word);
        }
        if !trimmed.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(
                "expected space-separated values or a digit string",
            ));
        }
        if trimmed.len() > 9 {
            return Err(parse_err(
                "the digit-string form is limited to n <= 9; use space-separated values",
            ));
        }
        Self::new(trimmed.bytes().map(|b| (b - b'0') as usize).collect())
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.word.serialize(serializer)
    }
}

impl serde::Serialize for CoverTransposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.i, self.j).serialize(serializer)
    }
}

/// The subword `v_d(w)` of a permutation at one of its descents, together
/// with the positions it occupies in `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentSubword {
    descent: usize,
    indices: Vec<usize>,
    values: Vec<usize>,
}

impl DescentSubword {
    /// The descent of `w` this subword was built at.
    pub fn descent(&self) -> usize {
        self.descent
    }

    /// 1-based positions in `w`, strictly increasing.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The values of `w` at those positions.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The flattening of the subword, a Grassmannian permutation.
    pub fn flattened(&self) -> Permutation {
        flatten(&self.values).expect("subword values are distinct")
    }

    /// Position of the unique descent of [`Self::flattened`]: the number of
    /// subword indices at or left of the original descent.
    pub fn flattened_descent(&self) -> usize {
        self.indices
            .iter()
            .take_while(|&&i| i <= self.descent)
            .count()
    }
}

/// The unique permutation order-isomorphic to a word with distinct entries.
pub fn flatten(word: &[usize]) -> Result<Permutation, PermError> {
    if word.is_empty() {
        return Err(PermError::EmptyWord);
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&k| word[k]);
    for pair in order.windows(2) {
        if word[pair[0]] == word[pair[1]] {
            return Err(PermError::DuplicateValue {
                value: word[pair[0]],
            });
        }
    }
    let mut flat = vec![0; word.len()];
    for (rank, &k) in order.iter().enumerate() {
        flat[k] = rank + 1;
    }
    Ok(Permutation::from_word_unchecked(flat))
}

/// Advances `word` to its lexicographic successor in place; returns `false`
/// when `word` was already the last arrangement.
pub fn next_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Iterates over all of `S_n` in lexicographic order, starting from the
/// identity.
pub fn all_permutations(n: usize) -> Permutations {
    Permutations {
        word: (1..=n).collect(),
        done: n == 0,
    }
}

pub struct Permutations {
    word: Vec<usize>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation::from_word_unchecked(self.word.clone());
        if !next_permutation(&mut self.word) {
            self.done = true;
        }
        Some(out)
    }
}
