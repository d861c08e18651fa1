//! Classical and Bruhat-restricted pattern containment.
//!
//! A restricted pattern is a permutation `v` together with a set of cover
//! transpositions of `v`; an embedding of `v` into a host `w` counts only
//! when each designated transposition, transported along the embedding, is
//! again a Bruhat cover of `w`.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use thiserror::Error;

use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("host has size {host} but the pattern has size {pattern}")]
    HostTooShort { pattern: usize, host: usize },
    #[error("restriction ({i},{j}) is not a Bruhat cover of the pattern")]
    RestrictionNotCover { i: usize, j: usize },
    #[error("cannot parse pattern {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// An occurrence of a pattern inside a host permutation: the 1-based host
/// positions, strictly increasing and order-isomorphic to the pattern.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Embedding {
    indices: Vec<usize>,
}

impl Embedding {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// A pattern permutation with a set of Bruhat transpositions that embeddings
/// must transport to covers of the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedPattern {
    pattern: Permutation,
    restrictions: Vec<(usize, usize)>,
}

impl RestrictedPattern {
    /// Validates that every restriction is a cover transposition of the
    /// pattern itself.
    pub fn new(
        pattern: Permutation,
        restrictions: Vec<(usize, usize)>,
    ) -> Result<Self, PatternError> {
        for &(i, j) in &restrictions {
            if !matches!(pattern.is_cover(i, j), Ok(true)) {
                return Err(PatternError::RestrictionNotCover { i, j });
            }
        }
        Ok(Self {
            pattern,
            restrictions,
        })
    }

    /// A classical pattern: no restrictions.
    pub fn classical(pattern: Permutation) -> Self {
        Self {
            pattern,
            restrictions: Vec::new(),
        }
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn restrictions(&self) -> &[(usize, usize)] {
        &self.restrictions
    }
}

impl fmt::Display for RestrictedPattern {
    /// The literal grammar: compact digits when the pattern fits (`"31524"`),
    /// a bracketed word otherwise, then `:(m,n)(m,n)...` for restrictions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pattern.to_compact() {
            Some(compact) => f.write_str(&compact)?,
            None => write!(f, "[{}]", self.pattern)?,
        }
        if !self.restrictions.is_empty() {
            f.write_str(":")?;
            for &(i, j) in &self.restrictions {
                write!(f, "({i},{j})")?;
            }
        }
        Ok(())
    }
}

impl FromStr for RestrictedPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, PatternError> {
        let parse_err = |reason: String| PatternError::Parse {
            input: s.to_string(),
            reason,
        };
        let (word_part, pairs_part) = match s.find(':') {
            Some(colon) => (&s[..colon], Some(&s[colon + 1..])),
            None => (s, None),
        };
        let word_part = word_part.trim();
        let pattern: Permutation = if let Some(inner) = word_part.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| parse_err("missing closing bracket".to_string()))?;
            inner.parse().map_err(PatternError::Perm)?
        } else {
            if !word_part.bytes().all(|b| b.is_ascii_digit()) || word_part.is_empty() {
                return Err(parse_err(
                    "pattern word must be digits or a bracketed list".into(),
                ));
            }
            if word_part.len() > 9 {
                return Err(parse_err("digit words are limited to n <= 9".into()));
            }
            word_part.parse().map_err(PatternError::Perm)?
        };
        let mut restrictions = Vec::new();
        if let Some(mut rest) = pairs_part {
            if rest.is_empty() {
                return Err(parse_err("expected restriction pairs after ':'".into()));
            }
            while !rest.is_empty() {
                let body = rest
                    .strip_prefix('(')
                    .ok_or_else(|| parse_err(format!("expected '(' at {rest:?}")))?;
                let close = body
                    .find(')')
                    .ok_or_else(|| parse_err("missing closing parenthesis".into()))?;
                let (m, n) = body[..close]
                    .split_once(',')
                    .ok_or_else(|| parse_err("expected \"(m,n)\"".into()))?;
                let m: usize = m
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(format!("{m:?} is not a position")))?;
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(format!("{n:?} is not a position")))?;
                restrictions.push((m, n));
                rest = &body[close + 1..];
            }
        }
        Self::new(pattern, restrictions)
    }
}

/// Lazy stream of every classical embedding of `v` into `w`, in
/// lexicographic order of index sequences.
///
/// Rejects hosts shorter than the pattern.
pub fn embeddings<'a>(
    v: &'a Permutation,
    w: &'a Permutation,
) -> Result<Embeddings<'a>, PatternError> {
    if v.n() > w.n() {
        return Err(PatternError::HostTooShort {
            pattern: v.n(),
            host: w.n(),
        });
    }
    Ok(Embeddings {
        v: v.word(),
        w: w.word(),
        stack: Vec::with_capacity(v.n()),
        cursor: 0,
        done: false,
    })
}

pub struct Embeddings<'a> {
    v: &'a [usize],
    w: &'a [usize],
    /// chosen 0-based host indices for pattern positions `0..stack.len()`
    stack: Vec<usize>,
    /// next 0-based candidate for the position being filled
    cursor: usize,
    done: bool,
}

impl Embeddings<'_> {
    fn consistent(&self, candidate: usize) -> bool {
        let t = self.stack.len();
        self.stack
            .iter()
            .enumerate()
            .all(|(a, &ia)| (self.w[ia] > self.w[candidate]) == (self.v[a] > self.v[t]))
    }
}

impl Iterator for Embeddings<'_> {
    type Item = Embedding;

    fn next(&mut self) -> Option<Embedding> {
        if self.done {
            return None;
        }
        let len = self.v.len();
        loop {
            if self.stack.len() == len {
                let found = Embedding {
                    indices: self.stack.iter().map(|&i| i + 1).collect(),
                };
                // backtrack so the next call resumes after this one
                self.cursor = self.stack.pop().expect("patterns are nonempty") + 1;
                return Some(found);
            }
            // enough host positions must remain for the unfilled suffix
            let hi = self.w.len() - len + self.stack.len();
            let mut extended = false;
            while self.cursor <= hi {
                if self.consistent(self.cursor) {
                    self.stack.push(self.cursor);
                    self.cursor = *self.stack.last().unwrap() + 1;
                    extended = true;
                    break;
                }
                self.cursor += 1;
            }
            if !extended {
                match self.stack.pop() {
                    Some(prev) => self.cursor = prev + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// First classical embedding of `v` into `w`, if any. Hosts shorter than the
/// pattern trivially contain nothing.
pub fn contains_classical(w: &Permutation, v: &Permutation) -> Option<Embedding> {
    embeddings(v, w).ok()?.next()
}

/// The lexicographically least restricted embedding of the pattern into `w`,
/// or `None` when `w` avoids the pattern with its Bruhat restrictions.
pub fn contains_restricted(w: &Permutation, p: &RestrictedPattern) -> Option<Embedding> {
    let stream = embeddings(p.pattern(), w).ok()?;
    stream.into_iter().find(|emb| {
        p.restrictions()
            .iter()
            .all(|&(m, n)| w.cover_unchecked(emb.indices[m - 1], emb.indices[n - 1]))
    })
}

/// `true` when `w` has no restricted embedding of the pattern.
pub fn avoids_restricted(w: &Permutation, p: &RestrictedPattern) -> bool {
    contains_restricted(w, p).is_none()
}

/// Independent validity check of a claimed embedding: the order isomorphism
/// and every cover restriction, verified from the definitions.
pub fn check_embedding(w: &Permutation, p: &RestrictedPattern, emb: &Embedding) -> bool {
    let v = p.pattern();
    let idx = emb.indices();
    if idx.len() != v.n() {
        return false;
    }
    if idx.windows(2).any(|pair| pair[0] >= pair[1]) {
        return false;
    }
    if idx.iter().any(|&i| i == 0 || i > w.n()) {
        return false;
    }
    for a in 1..=v.n() {
        for b in a + 1..=v.n() {
            if (w.at(idx[a - 1]) > w.at(idx[b - 1])) != (v.at(a) > v.at(b)) {
                return false;
            }
        }
    }
    p.restrictions()
        .iter()
        .all(|&(m, n)| w.is_cover(idx[m - 1], idx[n - 1]) == Ok(true))
}

static GORENSTEIN_PATTERNS: LazyLock<[RestrictedPattern; 2]> = LazyLock::new(|| {
    [
        RestrictedPattern::new(
            Permutation::new(vec![3, 1, 5, 2, 4]).unwrap(),
            vec![(1, 5), (2, 3)],
        )
        .unwrap(),
        RestrictedPattern::new(
            Permutation::new(vec![2, 4, 1, 5, 3]).unwrap(),
            vec![(1, 5), (3, 4)],
        )
        .unwrap(),
    ]
});

static SMOOTH_PATTERNS: LazyLock<[Permutation; 2]> = LazyLock::new(|| {
    [
        Permutation::new(vec![1, 3, 2, 4]).unwrap(),
        Permutation::new(vec![2, 1, 4, 3]).unwrap(),
    ]
});

/// The two restricted patterns whose avoidance, together with the inner
/// corner condition, characterizes Gorenstein Schubert varieties.
pub fn gorenstein_patterns() -> &'static [RestrictedPattern; 2] {
    &GORENSTEIN_PATTERNS
}

/// The two classical patterns whose avoidance characterizes smooth Schubert
/// varieties.
pub fn smooth_patterns() -> &'static [Permutation; 2] {
    &SMOOTH_PATTERNS
}
