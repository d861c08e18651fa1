//! Partitions attached to Grassmannian permutations: the bounding rectangle,
//! the lattice-path lower border, and inner corner analysis.

use thiserror::Error;

use crate::perm::{PermError, Permutation};

/// Errors from building a partition directly from its parts.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("{got} parts do not fit in {rows} rows")]
    TooManyParts { got: usize, rows: usize },
    #[error("part {part} exceeds the rectangle width {width}")]
    PartTooWide { part: usize, width: usize },
    #[error("parts must be weakly decreasing, got {prev} before {next}")]
    NotWeaklyDecreasing { prev: usize, next: usize },
}

/// An inner corner of the lattice path: a path vertex with path points both
/// directly below and directly to its right. `row` and `col` are offsets
/// from the top and left edges of the bounding rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InnerCorner {
    pub row: usize,
    pub col: usize,
}

impl InnerCorner {
    /// Sum of the distances from the top and left edges.
    pub fn distance(&self) -> usize {
        self.row + self.col
    }
}

/// Whether all inner corners of a partition lie on one antidiagonal.
///
/// `AntiDiagonal(d)` carries the common corner distance, with `d = 0` when
/// there are no corners. `Mixed` carries every corner distance in path order
/// (bottom-left to top-right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrakI {
    AntiDiagonal(usize),
    Mixed(Vec<usize>),
}

impl FrakI {
    pub fn is_anti_diagonal(&self) -> bool {
        matches!(self, FrakI::AntiDiagonal(_))
    }

    /// The common distance, when it exists.
    pub fn value(&self) -> Option<usize> {
        match self {
            FrakI::AntiDiagonal(d) => Some(*d),
            FrakI::Mixed(_) => None,
        }
    }
}

/// A partition inside a `rows x width` rectangle together with the inner
/// corners of its lattice-path lower border.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectPartition {
    rows: usize,
    width: usize,
    parts: Vec<usize>,
    corners: Vec<InnerCorner>,
}

impl RectPartition {
    /// The partition of a Grassmannian permutation `v` with unique descent
    /// `e`, drawn in the `e x (n - e)` rectangle.
    ///
    /// The lower border is traced value by value: step `a` goes right when
    /// `a` sits after position `e` in `v`, and up otherwise. Inner corners
    /// are the up-then-right vertices of that path.
    pub fn from_grassmannian(v: &Permutation) -> Result<Self, PermError> {
        let descents = v.descents();
        if descents.len() != 1 {
            return Err(PermError::NotGrassmannian {
                descents: descents.len(),
            });
        }
        let e = descents[0];
        let m = v.n();
        let inv = v.inverse();

        let parts: Vec<usize> = (1..=e).rev().map(|k| v.at(k) - k).collect();

        let mut corners = Vec::new();
        let (mut hor, mut vert) = (0usize, 0usize);
        let mut prev_vertical = false;
        for a in 1..=m {
            if inv.at(a) > e {
                if prev_vertical {
                    corners.push(InnerCorner {
                        row: e - vert,
                        col: hor,
                    });
                }
                hor += 1;
                prev_vertical = false;
            } else {
                vert += 1;
                prev_vertical = true;
            }
        }

        let partition = Self {
            rows: e,
            width: m - e,
            parts,
            corners,
        };
        debug_assert!(
            partition.size() == v.length(),
            "|parts| must equal the length of {v}"
        );
        debug_assert!(
            partition.corners_match_covers(v, e),
            "path corners must agree with the straddling covers of {v}"
        );
        Ok(partition)
    }

    /// A partition given by its parts, validated against the rectangle.
    pub fn from_parts(rows: usize, width: usize, parts: &[usize]) -> Result<Self, PartitionError> {
        let trimmed: Vec<usize> = {
            let mut p = parts.to_vec();
            while p.last() == Some(&0) {
                p.pop();
            }
            p
        };
        if trimmed.len() > rows {
            return Err(PartitionError::TooManyParts {
                got: trimmed.len(),
                rows,
            });
        }
        for pair in trimmed.windows(2) {
            if pair[0] < pair[1] {
                return Err(PartitionError::NotWeaklyDecreasing {
                    prev: pair[0],
                    next: pair[1],
                });
            }
        }
        if let Some(&first) = trimmed.first() {
            if first > width {
                return Err(PartitionError::PartTooWide { part: first, width });
            }
        }
        let mut padded = trimmed;
        padded.resize(rows, 0);

        // walk the lower border bottom-up; a corner appears wherever the
        // border widens above an up step
        let mut corners = Vec::new();
        for k in 1..=rows {
            let cur = padded[rows - k];
            let above = if k < rows {
                padded[rows - k - 1]
            } else {
                width
            };
            if above > cur {
                corners.push(InnerCorner {
                    row: rows - k,
                    col: cur,
                });
            }
        }
        Ok(Self {
            rows,
            width,
            parts: padded,
            corners,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Parts, padded with zeros to `rows` entries.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Inner corners in path order (bottom-left to top-right).
    pub fn inner_corners(&self) -> &[InnerCorner] {
        &self.corners
    }

    pub fn corner_distances(&self) -> Vec<usize> {
        self.corners.iter().map(InnerCorner::distance).collect()
    }

    pub fn frak_i(&self) -> FrakI {
        let distances = self.corner_distances();
        match distances.split_first() {
            None => FrakI::AntiDiagonal(0),
            Some((&first, rest)) if rest.iter().all(|&d| d == first) => FrakI::AntiDiagonal(first),
            _ => FrakI::Mixed(distances),
        }
    }

    /// The permutation whose lattice path draws this partition: the first
    /// `rows` positions read the border bottom-up, the rest fill in
    /// ascending order. An empty partition yields the identity.
    pub fn to_permutation(&self) -> Permutation {
        let m = self.rows + self.width;
        let mut word = Vec::with_capacity(m);
        for k in 1..=self.rows {
            word.push(self.parts[self.rows - k] + k);
        }
        let mut used = vec![false; m + 1];
        for &v in &word {
            used[v] = true;
        }
        word.extend((1..=m).filter(|&v| !used[v]));
        Permutation::from_word_unchecked(word)
    }

    /// Cross-check of the corner list against the covers of `v` that
    /// straddle the descent, including the distance identity `j - i - 1`.
    fn corners_match_covers(&self, v: &Permutation, e: usize) -> bool {
        let mut from_covers: Vec<usize> = v
            .covers()
            .into_iter()
            .filter(|c| c.i <= e && e < c.j)
            .map(|c| c.j - c.i - 1)
            .collect();
        let mut from_path = self.corner_distances();
        from_covers.sort_unstable();
        from_path.sort_unstable();
        from_covers == from_path
    }
}

/// The partition of a Grassmannian permutation.
pub fn grassmannian_partition(v: &Permutation) -> Result<RectPartition, PermError> {
    RectPartition::from_grassmannian(v)
}

/// The common inner corner distance of a Grassmannian permutation, or the
/// mixed distances when the corners are not on one antidiagonal.
pub fn frak_i(v: &Permutation) -> Result<FrakI, PermError> {
    Ok(RectPartition::from_grassmannian(v)?.frak_i())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn partition_of_the_five_by_seven_example() {
        let v = perm(&[3, 5, 8, 9, 11, 1, 2, 4, 6, 7, 10, 12]);
        let p = grassmannian_partition(&v).unwrap();
        assert_eq!(p.rows(), 5);
        assert_eq!(p.width(), 7);
        assert_eq!(p.parts(), &[6, 5, 5, 3, 2]);
        assert_eq!(p.size(), v.length());
        assert_eq!(p.inner_corners().len(), 4);
        assert_eq!(p.corner_distances(), vec![6, 6, 6, 6]);
        assert_eq!(p.frak_i(), FrakI::AntiDiagonal(6));
    }

    #[test]
    fn small_partitions() {
        let p = grassmannian_partition(&perm(&[1, 2, 4, 3, 5])).unwrap();
        assert_eq!(p.corner_distances(), vec![1, 1]);

        let q = grassmannian_partition(&perm(&[2, 1])).unwrap();
        assert_eq!(q.parts(), &[1]);
        assert!(q.inner_corners().is_empty());
        assert_eq!(q.frak_i(), FrakI::AntiDiagonal(0));
    }

    #[test]
    fn rejects_non_grassmannian_input() {
        assert_eq!(
            grassmannian_partition(&Permutation::identity(4)),
            Err(PermError::NotGrassmannian { descents: 0 })
        );
        assert_eq!(
            grassmannian_partition(&perm(&[2, 1, 4, 3])),
            Err(PermError::NotGrassmannian { descents: 2 })
        );
    }

    #[test]
    fn frak_i_examples() {
        assert_eq!(
            frak_i(&perm(&[2, 4, 1, 3, 5])).unwrap(),
            FrakI::AntiDiagonal(2)
        );
        assert_eq!(
            frak_i(&perm(&[1, 2, 4, 3, 5])).unwrap(),
            FrakI::AntiDiagonal(1)
        );
        assert_eq!(
            frak_i(&perm(&[1, 3, 4, 6, 2, 5])).unwrap(),
            FrakI::Mixed(vec![3, 2])
        );
    }

    #[test]
    fn partition_size_equals_length_up_to_s8() {
        let mut checked = 0;
        for v in all_permutations(8) {
            if v.descents().len() != 1 {
                continue;
            }
            let p = grassmannian_partition(&v).unwrap();
            assert_eq!(p.size(), v.length(), "v={v}");
            checked += 1;
        }
        assert_eq!(checked, 2usize.pow(8) - 8 - 1);
    }

    #[test]
    fn from_parts_matches_the_lattice_path() {
        let p = RectPartition::from_parts(5, 7, &[7, 7, 2, 2, 2]).unwrap();
        assert_eq!(p.inner_corners(), &[InnerCorner { row: 2, col: 2 }]);
        assert_eq!(p.frak_i(), FrakI::AntiDiagonal(4));
        assert_eq!(
            p.to_permutation().word(),
            &[3, 4, 5, 11, 12, 1, 2, 6, 7, 8, 9, 10]
        );

        let mu = RectPartition::from_parts(5, 7, &[6, 5, 5, 3, 2]).unwrap();
        assert_eq!(mu.corner_distances(), vec![6, 6, 6, 6]);
        let v = mu.to_permutation();
        assert_eq!(v.word(), &[3, 5, 8, 9, 11, 1, 2, 4, 6, 7, 10, 12]);
        assert_eq!(grassmannian_partition(&v).unwrap(), mu);

        // the empty partition corresponds to the identity and carries the
        // single distance-0 corner at the rectangle's top-left vertex
        let empty = RectPartition::from_parts(3, 4, &[]).unwrap();
        assert_eq!(empty.to_permutation(), Permutation::identity(7));
        assert_eq!(empty.corner_distances(), vec![0]);
        assert_eq!(empty.frak_i(), FrakI::AntiDiagonal(0));
    }

    #[test]
    fn from_parts_rejects_bad_shapes() {
        assert_eq!(
            RectPartition::from_parts(2, 7, &[8, 1]),
            Err(PartitionError::PartTooWide { part: 8, width: 7 })
        );
        assert_eq!(
            RectPartition::from_parts(2, 7, &[3, 2, 1]),
            Err(PartitionError::TooManyParts { got: 3, rows: 2 })
        );
        assert_eq!(
            RectPartition::from_parts(3, 7, &[2, 3, 1]),
            Err(PartitionError::NotWeaklyDecreasing { prev: 2, next: 3 })
        );
    }

    #[test]
    fn roundtrip_through_grassmannians_up_to_s7() {
        for v in all_permutations(7) {
            if v.descents().len() != 1 {
                continue;
            }
            let p = grassmannian_partition(&v).unwrap();
            assert_eq!(p.to_permutation(), v);
        }
    }
}
