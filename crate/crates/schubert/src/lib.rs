//! Combinatorial classification of Schubert varieties in the complete flag
//! variety.
//!
//! For a permutation `w` in one-line notation this crate decides whether the
//! Schubert variety it indexes is Gorenstein — by a descent-subword corner
//! test plus Bruhat-restricted pattern avoidance, and independently by
//! integral feasibility of a cover-interval linear system — as well as
//! smooth, locally factorial and Fano, and computes the canonical sheaf
//! weight in the Gorenstein case. An enumeration harness sweeps all of
//! `S_n` and tallies the verdicts.
//!
//! The building blocks live in dedicated modules and are re-exported here:
//!
//! - [`perm`]: one-line permutations, Bruhat covers, descent subwords,
//!   flattening;
//! - [`partition`]: the lattice-path partition of a Grassmannian permutation
//!   and its inner corners;
//! - [`pattern`]: classical and Bruhat-restricted pattern containment;
//! - [`divisor`]: the cover-interval system, its solvers, factoriality and
//!   canonical weights;
//! - [`classify`](mod@classify): the bundled verdicts and partial-flag
//!   reductions;
//! - [`census`](mod@census): the exhaustive enumeration harness.

pub mod census;
pub mod classify;
pub mod divisor;
pub mod partition;
pub mod pattern;
pub mod perm;
pub mod snf;

pub use census::{census, CensusError, CensusOptions, CensusRow};
pub use classify::{
    check_gorenstein, classify, coset_gorenstein, is_fano, is_gorenstein, is_smooth,
    matrix_schubert_embed, min_coset_rep, Certificate, ClassificationReport, Composition,
    CompositionError,
};
pub use divisor::{
    bar_diagram, build_system, candidate_alpha, canonical_weight, is_factorial, AlphaVector,
    CanonicalWeight, CoverSystem, MixedCornersError, WeightError,
};
pub use partition::{
    frak_i, grassmannian_partition, FrakI, InnerCorner, PartitionError, RectPartition,
};
pub use pattern::{
    avoids_restricted, check_embedding, contains_classical, contains_restricted, embeddings,
    gorenstein_patterns, smooth_patterns, Embedding, Embeddings, PatternError, RestrictedPattern,
};
pub use perm::{
    all_permutations, flatten, next_permutation, CoverTransposition, DescentSubword, PermError,
    Permutation,
};
