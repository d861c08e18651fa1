//! Top-level verdicts: the combinatorial Gorenstein test, smoothness,
//! factoriality and Fano-ness, plus the reductions for partial flags and
//! matrix Schubert varieties.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::divisor::{self, CanonicalWeight};
use crate::partition::{frak_i, FrakI};
use crate::pattern;
use crate::perm::Permutation;

/// Evidence that a permutation fails the Gorenstein test: either a descent
/// whose corner distances are mixed, or a witness restricted embedding of a
/// forbidden pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    MixedCorners {
        descent: usize,
        distances: Vec<usize>,
    },
    ForbiddenPattern {
        pattern: String,
        embedding: Vec<usize>,
    },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::MixedCorners { descent, distances } => {
                write!(f, "descent {descent} has inner corner distances (")?;
                for (k, d) in distances.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{d}")?;
                }
                write!(f, ")")
            }
            Certificate::ForbiddenPattern { pattern, embedding } => {
                write!(f, "pattern {pattern} embeds at (")?;
                for (k, i) in embedding.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// The combinatorial Gorenstein test, with a certificate on failure.
///
/// The inner corner condition at every descent is checked first (it is the
/// cheap test), then avoidance of the two restricted patterns; the
/// certificate records whichever criterion failed first in that order.
pub fn check_gorenstein(w: &Permutation) -> Result<(), Certificate> {
    for d in w.descents() {
        let flat = w.descent_subword(d).expect("descent positions").flattened();
        if let FrakI::Mixed(distances) = frak_i(&flat).expect("flattened subwords are Grassmannian")
        {
            return Err(Certificate::MixedCorners {
                descent: d,
                distances,
            });
        }
    }
    for p in pattern::gorenstein_patterns() {
        if let Some(emb) = pattern::contains_restricted(w, p) {
            return Err(Certificate::ForbiddenPattern {
                pattern: p.to_string(),
                embedding: emb.indices().to_vec(),
            });
        }
    }
    Ok(())
}

/// Whether the Schubert variety indexed by `w` is Gorenstein.
pub fn is_gorenstein(w: &Permutation) -> bool {
    check_gorenstein(w).is_ok()
}

/// Whether the Schubert variety indexed by `w` is smooth: `w` must avoid
/// both classical smoothness patterns.
pub fn is_smooth(w: &Permutation) -> bool {
    pattern::smooth_patterns()
        .iter()
        .all(|p| pattern::contains_classical(w, p).is_none())
}

/// Whether a Gorenstein Schubert variety is Fano: every descent's common
/// corner distance is at most 1. `None` when the variety is not Gorenstein,
/// since Fano-ness is only defined there.
pub fn is_fano(w: &Permutation) -> Option<bool> {
    if !is_gorenstein(w) {
        return None;
    }
    Some(corner_distances_at_most_one(w))
}

fn corner_distances_at_most_one(w: &Permutation) -> bool {
    w.descents().into_iter().all(|d| {
        let flat = w.descent_subword(d).expect("descent positions").flattened();
        match frak_i(&flat).expect("flattened subwords are Grassmannian") {
            FrakI::AntiDiagonal(dist) => dist <= 1,
            FrakI::Mixed(_) => false,
        }
    })
}

/// Bundled verdicts for one permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub w: Permutation,
    pub gorenstein: bool,
    pub smooth: bool,
    pub factorial: bool,
    /// Present exactly when the variety is Gorenstein.
    pub fano: Option<bool>,
    /// The canonical sheaf weight, present exactly when Gorenstein.
    pub weight: Option<CanonicalWeight>,
    /// The failure certificate, present exactly when not Gorenstein.
    pub certificate: Option<Certificate>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "w: {}", self.w)?;
        writeln!(f, "gorenstein: {}", self.gorenstein)?;
        writeln!(f, "smooth: {}", self.smooth)?;
        writeln!(f, "factorial: {}", self.factorial)?;
        match self.fano {
            Some(fano) => writeln!(f, "fano: {fano}")?,
            None => writeln!(f, "fano: undefined")?,
        }
        if let Some(weight) = &self.weight {
            writeln!(f, "weight: {weight}")?;
        }
        if let Some(certificate) = &self.certificate {
            writeln!(f, "certificate: {certificate}")?;
        }
        Ok(())
    }
}

/// Runs every verdict on one permutation.
pub fn classify(w: &Permutation) -> ClassificationReport {
    let certificate = check_gorenstein(w).err();
    let gorenstein = certificate.is_none();
    let weight = if gorenstein {
        Some(divisor::canonical_weight(w).expect("the candidate solves Gorenstein systems"))
    } else {
        None
    };
    let smooth = is_smooth(w);
    let factorial = divisor::is_factorial(w);
    let fano = if gorenstein {
        Some(corner_distances_at_most_one(w))
    } else {
        None
    };
    debug_assert!(!smooth || factorial, "smooth must imply factorial for {w}");
    debug_assert!(
        !factorial || gorenstein,
        "factorial must imply Gorenstein for {w}"
    );
    ClassificationReport {
        w: w.clone(),
        gorenstein,
        smooth,
        factorial,
        fano,
        weight,
        certificate,
    }
}

/// Errors from partial-flag compositions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition for n={n} needs dimension steps strictly inside 1..{n}, got {step}")]
    StepOutOfRange { step: usize, n: usize },
    #[error("dimension steps must be strictly increasing, got {prev} before {next}")]
    NotIncreasing { prev: usize, next: usize },
    #[error("block sizes must be positive")]
    EmptyBlock,
    #[error("composition is for n={expected} but the permutation has size {got}")]
    SizeMismatch { expected: usize, got: usize },
}

/// The dimension steps `0 = i_0 < i_1 < ... < i_k < i_{k+1} = n` of a
/// partial flag variety. Only the interior steps are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    n: usize,
    steps: Vec<usize>,
}

impl Composition {
    pub fn new(n: usize, steps: Vec<usize>) -> Result<Self, CompositionError> {
        let mut prev = 0;
        for &step in &steps {
            if step == 0 || step >= n {
                return Err(CompositionError::StepOutOfRange { step, n });
            }
            if step <= prev {
                return Err(CompositionError::NotIncreasing { prev, next: step });
            }
            prev = step;
        }
        Ok(Self { n, steps })
    }

    /// A composition from consecutive block sizes, e.g. `[2, 2, 3]` for the
    /// steps `2 < 4` inside `n = 7`.
    pub fn from_block_sizes(sizes: &[usize]) -> Result<Self, CompositionError> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(CompositionError::EmptyBlock);
        }
        let n = sizes.iter().sum();
        let mut steps = Vec::with_capacity(sizes.len() - 1);
        let mut acc = 0;
        for &size in &sizes[..sizes.len() - 1] {
            acc += size;
            steps.push(acc);
        }
        Ok(Self { n, steps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// The position blocks `(i_{j-1}, i_j]` as inclusive 1-based ranges.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut lo = 1;
        for &step in &self.steps {
            out.push((lo, step));
            lo = step + 1;
        }
        out.push((lo, self.n));
        out
    }
}

/// The minimal-length representative of the coset `wS`: the values of `w`
/// sorted increasingly within each block, leaving no descent interior to any
/// block.
pub fn min_coset_rep(w: &Permutation, c: &Composition) -> Result<Permutation, CompositionError> {
    if c.n() != w.n() {
        return Err(CompositionError::SizeMismatch {
            expected: c.n(),
            got: w.n(),
        });
    }
    let mut word = w.word().to_vec();
    for (lo, hi) in c.blocks() {
        word[lo - 1..hi].sort_unstable();
    }
    Ok(Permutation::new(word).expect("sorting blocks preserves the word"))
}

/// Whether the partial-flag Schubert variety indexed by the coset `wS` is
/// Gorenstein: decided on the minimal coset representative.
pub fn coset_gorenstein(w: &Permutation, c: &Composition) -> Result<bool, CompositionError> {
    Ok(is_gorenstein(&min_coset_rep(w, c)?))
}

/// The permutation `v x id` of size `2n` that agrees with `v` on the first
/// `n` positions and fixes the rest. The matrix Schubert variety of `v` is
/// Gorenstein exactly when the Schubert variety of the embedded permutation
/// is.
pub fn matrix_schubert_embed(v: &Permutation) -> Permutation {
    let n = v.n();
    let mut word = v.word().to_vec();
    word.extend(n + 1..=2 * n);
    Permutation::new(word).expect("the extension is a bijection")
}
