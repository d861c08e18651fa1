//! The cover-interval linear system attached to a permutation, its integer
//! and rational feasibility, the closed-form candidate solution, the lattice
//! test for factoriality, and canonical sheaf weights.
//!
//! Every cover `(i <-> j)` of `w` imposes `alpha_i + ... + alpha_{j-1} = 1`
//! on unknowns `alpha_1 .. alpha_{n-1}`; the indexed Schubert variety is
//! Gorenstein exactly when the system has an integral solution. All
//! arithmetic here is exact: machine integers for the solver, arbitrary
//! precision for elimination and Smith normal form.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::{frak_i, FrakI};
use crate::perm::{CoverTransposition, Permutation};
use crate::snf;

/// The inner corner condition fails at a descent: the corner distances of
/// the flattened descent subword are not all equal.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("inner corner condition violated at descent {descent}: distances {distances:?}")]
pub struct MixedCornersError {
    pub descent: usize,
    pub distances: Vec<usize>,
}

/// Why a canonical weight could not be produced.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("not Gorenstein: {0}")]
    MixedCorners(#[from] MixedCornersError),
    #[error(
        "not Gorenstein: cover ({i},{j}) sums to {sum}, expected 1",
        i = cover.i,
        j = cover.j
    )]
    UnsatisfiedCover { cover: CoverTransposition, sum: i64 },
}

/// Integer coefficients `alpha_1 .. alpha_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaVector {
    values: Vec<i64>,
}

impl AlphaVector {
    pub fn new(values: Vec<i64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for AlphaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.values)
    }
}

impl serde::Serialize for AlphaVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

/// Coefficients of the canonical sheaf weight of a Gorenstein Schubert
/// variety: entry `r` multiplies the fundamental weight with index `n - r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalWeight {
    coefficients: Vec<i64>,
}

impl CanonicalWeight {
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }
}

impl fmt::Display for CanonicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.coefficients)
    }
}

impl serde::Serialize for CanonicalWeight {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coefficients.serialize(serializer)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// One interval-sum constraint per Bruhat cover of a fixed permutation.
#[derive(Debug, Clone)]
pub struct CoverSystem {
    n: usize,
    covers: Vec<CoverTransposition>,
    /// per-position values used for degrees of freedom the constraints do
    /// not pin down; taken from the candidate solution so the solver and the
    /// closed form agree exactly on Gorenstein inputs
    free_defaults: Vec<i64>,
}

/// Builds the system of a permutation: one constraint per cover.
pub fn build_system(w: &Permutation) -> CoverSystem {
    CoverSystem {
        n: w.n(),
        covers: w.covers(),
        free_defaults: candidate_defaults(w),
    }
}

impl CoverSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[CoverTransposition] {
        &self.covers
    }

    pub fn unknowns(&self) -> usize {
        self.n - 1
    }

    /// Exact check of every constraint, in cover order.
    pub fn verify(&self, alpha: &AlphaVector) -> bool {
        self.first_violation(alpha).is_none()
    }

    /// The first violated cover in lexicographic order, with the sum its
    /// interval actually attains.
    pub fn first_violation(&self, alpha: &AlphaVector) -> Option<(CoverTransposition, i64)> {
        assert_eq!(alpha.len(), self.unknowns(), "alpha length must be n - 1");
        for &cover in &self.covers {
            let sum: i64 = alpha.values()[cover.i - 1..cover.j - 1].iter().sum();
            if sum != 1 {
                return Some((cover, sum));
            }
        }
        None
    }

    /// Integral solution of the system, if one exists.
    ///
    /// In prefix-sum unknowns `P_0 = 0, P_k = alpha_1 + .. + alpha_k` each
    /// cover `(i <-> j)` reads `P_{j-1} - P_{i-1} = 1`, a difference
    /// constraint graph on nodes `0 .. n-1`. Potentials are assigned per
    /// connected component by breadth-first search; any inconsistent cycle
    /// means no solution exists, over the integers or the rationals alike.
    /// Components left unpinned take the stored free defaults.
    pub fn solve(&self) -> Option<AlphaVector> {
        let n = self.n;
        let mut adjacency: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for c in &self.covers {
            adjacency[c.i - 1].push((c.j - 1, 1));
            adjacency[c.j - 1].push((c.i - 1, -1));
        }

        const UNSEEN: usize = usize::MAX;
        let mut component = vec![UNSEEN; n];
        let mut potential = vec![0i64; n];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if component[start] != UNSEEN {
                continue;
            }
            component[start] = components;
            potential[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &(v, step) in &adjacency[u] {
                    let p = potential[u] + step;
                    if component[v] == UNSEEN {
                        component[v] = components;
                        potential[v] = p;
                        queue.push_back(v);
                    } else if potential[v] != p {
                        return None;
                    }
                }
            }
            components += 1;
        }

        // pin absolute prefix values left to right; each component not yet
        // pinned starts its first alpha at the free default
        let mut offset: Vec<Option<i64>> = vec![None; components];
        offset[component[0]] = Some(-potential[0]);
        let mut prefix = vec![0i64; n];
        for r in 1..n {
            prefix[r] = match offset[component[r]] {
                Some(off) => potential[r] + off,
                None => {
                    let pinned = prefix[r - 1] + self.free_defaults[r - 1];
                    offset[component[r]] = Some(pinned - potential[r]);
                    pinned
                }
            };
        }

        let alpha = AlphaVector::new((1..n).map(|r| prefix[r] - prefix[r - 1]).collect());
        assert!(
            self.verify(&alpha),
            "solver output must satisfy every constraint"
        );
        Some(alpha)
    }

    /// Feasibility over the rationals, by exact Gaussian elimination.
    /// Computed independently of [`Self::solve`].
    pub fn rational_feasible(&self) -> bool {
        let vars = self.unknowns();
        // reduced rows in echelon form, tagged with their pivot column
        let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
        for c in &self.covers {
            let mut row = vec![BigRational::zero(); vars + 1];
            for r in c.i..c.j {
                row[r - 1] = BigRational::one();
            }
            row[vars] = BigRational::one();
            for (p, reduced) in &basis {
                if !row[*p].is_zero() {
                    let factor = row[*p].clone();
                    for (slot, b) in row.iter_mut().zip(reduced) {
                        *slot -= &factor * b;
                    }
                }
            }
            match (0..vars).find(|&t| !row[t].is_zero()) {
                Some(p) => {
                    let lead = row[p].clone();
                    for slot in row.iter_mut() {
                        *slot /= &lead;
                    }
                    basis.push((p, row));
                }
                None => {
                    if !row[vars].is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Machine-readable form: `{"n", "covers", "alpha", "feasible"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let alpha = self.solve();
        serde_json::json!({
            "n": self.n,
            "covers": self.covers,
            "alpha": alpha,
            "feasible": alpha.is_some(),
        })
    }
}

/// Per-position defaults: the candidate value where it is defined, 1 at
/// descents whose corners are mixed.
fn candidate_defaults(w: &Permutation) -> Vec<i64> {
    let mut defaults = vec![1i64; w.n() - 1];
    for d in w.descents() {
        let flat = w.descent_subword(d).expect("descent positions").flattened();
        if let FrakI::AntiDiagonal(dist) =
            frak_i(&flat).expect("flattened subwords are Grassmannian")
        {
            defaults[d - 1] = 1 - dist as i64;
        }
    }
    defaults
}

/// The closed-form candidate: `1 - frak_i` of the flattened subword at each
/// descent, `1` elsewhere. Undefined when some descent has mixed corner
/// distances.
pub fn candidate_alpha(w: &Permutation) -> Result<AlphaVector, MixedCornersError> {
    let mut values = vec![1i64; w.n() - 1];
    for d in w.descents() {
        let flat = w.descent_subword(d).expect("descent positions").flattened();
        match frak_i(&flat).expect("flattened subwords are Grassmannian") {
            FrakI::AntiDiagonal(dist) => values[d - 1] = 1 - dist as i64,
            FrakI::Mixed(distances) => {
                return Err(MixedCornersError {
                    descent: d,
                    distances,
                })
            }
        }
    }
    Ok(AlphaVector::new(values))
}

/// The canonical sheaf weight of a Gorenstein permutation: coefficient
/// `-1 - alpha_r` for the fundamental weight indexed `n - r`, equivalently
/// `-2 + frak_i` at descents and `-2` elsewhere.
///
/// Rejects non-Gorenstein input, naming the criterion that failed.
pub fn canonical_weight(w: &Permutation) -> Result<CanonicalWeight, WeightError> {
    let alpha = candidate_alpha(w)?;
    let system = build_system(w);
    if let Some((cover, sum)) = system.first_violation(&alpha) {
        return Err(WeightError::UnsatisfiedCover { cover, sum });
    }
    Ok(CanonicalWeight {
        coefficients: alpha.values().iter().map(|a| -1 - a).collect(),
    })
}

/// Whether the indexed Schubert variety is locally factorial: the rows of
/// the cover-incidence matrix (one row per vertical bar, one column per
/// cover) must generate the full integer lattice on cover coordinates, i.e.
/// the Smith normal form must carry `#covers` invariant factors, all 1.
pub fn is_factorial(w: &Permutation) -> bool {
    let covers = w.covers();
    if covers.is_empty() {
        return true;
    }
    let matrix: Vec<Vec<BigInt>> = (1..w.n())
        .map(|r| {
            covers
                .iter()
                .map(|c| {
                    if c.i <= r && r < c.j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let factors = snf::invariant_factors(matrix);
    factors.len() == covers.len() && factors.iter().all(|f| f.is_one())
}

/// Monospaced rendering of the cover diagram: the values of `w` head `n`
/// columns, each cover draws a horizontal bar between the midpoints of its
/// columns, and the vertical bars between adjacent columns are labelled
/// `a1 .. a{n-1}`.
pub fn bar_diagram(w: &Permutation) -> String {
    let n = w.n();
    let cell = n.to_string().len() + 3;
    let center = |c: usize| 2 + (c - 1) * cell;
    let bar = |r: usize| center(r) + cell / 2;

    let mut lines: Vec<String> = Vec::new();
    let mut row: Vec<char> = Vec::new();

    let put = |row: &mut Vec<char>, pos: usize, text: &str| {
        let end = pos + text.chars().count();
        if row.len() < end {
            row.resize(end, ' ');
        }
        for (k, ch) in text.chars().enumerate() {
            row[pos + k] = ch;
        }
    };
    let flush = |row: &mut Vec<char>, lines: &mut Vec<String>| {
        let text: String = row.iter().collect();
        lines.push(text.trim_end().to_string());
        row.clear();
    };

    for c in 1..=n {
        put(&mut row, center(c), &w.at(c).to_string());
    }
    flush(&mut row, &mut lines);

    if n >= 2 {
        for r in 1..n {
            put(&mut row, bar(r), "|");
        }
        flush(&mut row, &mut lines);
    }

    for cover in w.covers() {
        for r in 1..n {
            put(&mut row, bar(r), "|");
        }
        for pos in center(cover.i)..=center(cover.j) {
            put(&mut row, pos, "-");
        }
        for r in cover.i..cover.j {
            put(&mut row, bar(r), "+");
        }
        flush(&mut row, &mut lines);
    }

    if n >= 2 {
        for r in 1..n {
            put(&mut row, bar(r) - 1, &format!("a{r}"));
        }
        flush(&mut row, &mut lines);
    }

    let mut out = lines.join("\n");
    out.push('\n');
    out
}
