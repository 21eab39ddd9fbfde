//! Partitions, skew shapes and Frobenius coordinates.
//!
//! Indices handed to [`Partition::part`] and [`Partition::conj_part`] are
//! 1-based, and every part beyond the length reads as zero.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Fails if the nonzero parts are not weakly decreasing or a zero is
    /// followed by a positive part.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ'_i`, the length of column `i`.
    pub fn conj_part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= i).count()
    }

    pub fn first_part(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first_part()).map(|i| self.conj_part(i)).collect();
        Partition { parts }
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn to_frobenius(&self) -> FrobeniusCoordinates {
        let p = self.durfee();
        let arms = (1..=p).map(|i| self.part(i) - i).collect();
        let legs = (1..=p).map(|i| self.conj_part(i) - i).collect();
        FrobeniusCoordinates { arms, legs }
    }

    /// All partitions of `size` whose diagram fits inside `rows × cols`.
    pub fn all_of_size_in_box(size: usize, rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if cur.len() == rows {
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, rows, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, cols, rows, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self` (including the empty one and `self`).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &Partition, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if i > outer.len() {
                return;
            }
            for p in (1..=max.min(outer.part(i))).rev() {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 1, self.first_part(), &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    pub fn single_row(r: usize) -> Partition {
        if r == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![r] }
        }
    }

    pub fn single_column(c: usize) -> Partition {
        Partition { parts: vec![1; c] }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Arm and leg lengths measured from the diagonal cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusCoordinates {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusCoordinates {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidFrobenius { arms, legs });
        }
        Ok(FrobeniusCoordinates { arms, legs })
    }

    /// Durfee square size.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn to_partition(&self) -> Partition {
        let p = self.rank();
        if p == 0 {
            return Partition::empty();
        }
        // rows 1..=p come from the arms, the rest from the column lengths
        let mut parts: Vec<usize> = (0..p).map(|i| self.arms[i] + i + 1).collect();
        let depth = self.legs[0] + 1;
        for row in p + 1..=depth {
            // number of columns j <= p whose leg reaches this row
            let cols = (0..p).filter(|&j| self.legs[j] + j + 1 >= row).count();
            parts.push(cols);
        }
        Partition { parts }
    }
}

/// Validated `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Containment {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells `(row, col)`, 1-based, in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=self.outer.len() {
            for c in self.inner.part(r) + 1..=self.outer.part(r) {
                out.push((r, c));
            }
        }
        out
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r >= 1 && c > self.inner.part(r) && c <= self.outer.part(r)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Shorthand used throughout the tests.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[4, 4, 4, 2, 1]).conjugate(), part(&[5, 4, 3, 3]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[3]).conjugate(), part(&[1, 1, 1]));
    }

    #[test]
    fn frobenius_examples() {
        let f = part(&[6, 5, 4, 4, 1]).to_frobenius();
        assert_eq!(f.arms, vec![5, 3, 1, 0]);
        assert_eq!(f.legs, vec![4, 2, 1, 0]);
        let f = part(&[3, 2]).to_frobenius();
        assert_eq!((f.arms, f.legs), (vec![2, 0], vec![1, 0]));
        let f = Partition::empty().to_frobenius();
        assert!(f.arms.is_empty() && f.legs.is_empty());
    }

    #[test]
    fn from_frobenius_examples() {
        let f = FrobeniusCoordinates::new(vec![5, 3, 1, 0], vec![4, 2, 1, 0]).unwrap();
        assert_eq!(f.to_partition(), part(&[6, 5, 4, 4, 1]));
        let f = FrobeniusCoordinates::new(vec![0], vec![0]).unwrap();
        assert_eq!(f.to_partition(), part(&[1]));
        let f = FrobeniusCoordinates::new(vec![2, 0], vec![1, 0]).unwrap();
        assert_eq!(f.to_partition(), part(&[3, 2]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FrobeniusCoordinates::new(vec![1, 1], vec![2, 0]).is_err());
        assert!(FrobeniusCoordinates::new(vec![1], vec![2, 0]).is_err());
        assert!(Partition::new(vec![2, 3]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), part(&[2, 1]));
        assert!(SkewShape::new(part(&[2]), part(&[1, 1])).is_err());
    }

    #[test]
    fn exhaustive_involutions_up_to_twelve() {
        for size in 0..=12 {
            for p in Partition::all_of_size_in_box(size, size, size) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.to_frobenius().to_partition(), p, "{p}");
                let f = p.to_frobenius();
                assert_eq!(p.conjugate().to_frobenius(), FrobeniusCoordinates { arms: f.legs.clone(), legs: f.arms.clone() });
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size_in_box(n, n, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        // pairs inside a 2x2 box: 6 partitions
        assert_eq!(part(&[2, 2]).subpartitions().len(), 6);
    }

    #[test]
    fn skew_cells() {
        let s = SkewShape::new(part(&[3, 2, 2, 1, 1]), part(&[1])).unwrap();
        assert_eq!(s.size(), 8);
        assert_eq!(s.cells()[0], (1, 2));
        assert!(!s.contains_cell(1, 1));
    }
}
