//! Integer partitions: normalization, conjugation, shape classification,
//! centralizer orders and enumeration.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A partition stored as weakly decreasing positive parts.
///
/// Trailing zeros are never stored, so two partitions that differ only by
/// zeros compare equal. The empty partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

/// Builds a partition from arbitrary nonnegative integers: sorts them and
/// drops zeros.
pub fn make_partition(raw: &[i64]) -> Result<Partition> {
    if let Some(&neg) = raw.iter().find(|&&p| p < 0) {
        return Err(Error::NegativePart(neg));
    }
    let parts = raw
        .iter()
        .map(|&p| u32::try_from(p).map_err(|_| Error::Parse(format!("part {p} too large"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::from_parts(parts))
}

impl Partition {
    /// Sorts and strips zeros.
    pub fn from_parts<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row shape `(n)`.
    pub fn row(n: u32) -> Self {
        Self::from_parts([n])
    }

    /// The single-column shape `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self::from_parts(std::iter::repeat_n(1, n as usize))
    }

    /// The hook `(arm, 1^leg)`.
    pub fn hook(arm: u32, leg: u32) -> Self {
        Self::from_parts(std::iter::once(arm).chain(std::iter::repeat_n(1, leg as usize)))
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `n`, the number of cells.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the cell in row `i`, column `j` (both 1-based) lies in the diagram.
    pub fn contains_cell(&self, i: usize, j: u32) -> bool {
        i >= 1 && j >= 1 && self.part(i - 1) >= j
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// The conjugate partition, `λ'_i = |{j : λ_j ≥ i}|`.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition {
            parts,
            size: self.size,
        }
    }

    /// Parameters `(leg, arm)` when the shape is a proper hook `(arm, 1^leg)`
    /// with `leg ≥ 1` and `arm ≥ 2`. Independent of the classification priority,
    /// so `(3,1)` reports `Some((1, 3))` even though it classifies as two-row.
    pub fn hook_params(&self) -> Option<(u32, u32)> {
        let leg = self.len().checked_sub(1)? as u32;
        (leg >= 1 && self.part(0) >= 2 && self.part(1) == 1).then_some((leg, self.part(0)))
    }

    /// Leg length of any shape of the form `(arm, 1^leg)`, including the
    /// degenerate `(n)` (leg 0) and `(1^n)` (leg n−1).
    pub(crate) fn hook_leg_any(&self) -> Option<u32> {
        (self.part(1) <= 1 && !self.is_empty()).then(|| self.len() as u32 - 1)
    }

    /// Double-hook decomposition `λ = (1^{d1} 2^{d2} n3 n4)`, available when
    /// the cell (2,2) is in λ and (3,3) is not.
    pub fn double_hook_params(&self) -> Option<DoubleHook> {
        if self.part(1) < 2 || self.part(2) > 2 {
            return None;
        }
        // Reading multiplicities from the smallest parts up assigns every part
        // equal to 2 to the `2^{d2}` block, leaving the parts larger than 2 as
        // `n3 ≤ n4`. A missing `n4` (second row equal to 2) is rewritten as
        // `(1^{d1} 2^{d2-1} 2 n3)`; after that step `n3 = λ2` and `n4 = λ1`.
        let d1 = self.multiplicity(1) as u32;
        let mut d2 = self.multiplicity(2) as u32;
        let big: Vec<u32> = self.parts.iter().copied().filter(|&p| p > 2).collect();
        let (n3, n4) = match big.as_slice() {
            [a, b] => (*b, *a),
            // n4 = 0: rewrite with d2 := d2 - 1, n3 := 2, n4 := old n3.
            [a] => {
                d2 -= 1;
                (2, *a)
            }
            // No part exceeds 2, so the rewrite consumes two of the 2s.
            [] => {
                d2 -= 2;
                (2, 2)
            }
            _ => unreachable!("λ3 ≤ 2 was checked above"),
        };
        debug_assert_eq!((n3, n4), (self.part(1), self.part(0)));
        Some(DoubleHook { d1, d2, n3, n4 })
    }

    /// Shape classification by the priority
    /// OneRow > SingleColumn > TwoRow > Hook > DoubleHook > AtMostFourRows > General.
    pub fn classify(&self) -> ShapeClass {
        if self.len() <= 1 {
            return ShapeClass::OneRow;
        }
        if self.part(0) == 1 {
            return ShapeClass::SingleColumn;
        }
        if self.len() == 2 {
            return ShapeClass::TwoRow(self.part(0), self.part(1));
        }
        if let Some((leg, arm)) = self.hook_params() {
            return ShapeClass::Hook { leg, arm };
        }
        if let Some(dh) = self.double_hook_params() {
            return ShapeClass::DoubleHook(dh);
        }
        if self.len() <= 4 {
            ShapeClass::AtMostFourRows
        } else {
            ShapeClass::General
        }
    }

    /// Centralizer order `z_λ = ∏ i^{d_i} d_i!`.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&p| p == part).count();
            for k in 1..=mult {
                z *= part;
                z *= k as u32;
            }
            i += mult;
        }
        z
    }

    /// Whether the two-row formulas accept this shape (at most two parts).
    pub fn is_two_row_like(&self) -> bool {
        self.len() <= 2
    }
}

/// Free-function spelling of [`Partition::conjugate`].
pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// Free-function spelling of [`Partition::classify`].
pub fn classify(lambda: &Partition) -> ShapeClass {
    lambda.classify()
}

/// Free-function spelling of [`Partition::z`].
pub fn z_of(lambda: &Partition) -> BigUint {
    lambda.z()
}

/// Parameters of a double hook `(1^{d1} 2^{d2} n3 n4)` with `n4 ≥ n3 ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DoubleHook {
    pub d1: u32,
    pub d2: u32,
    pub n3: u32,
    pub n4: u32,
}

/// Most specific shape family a partition belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeClass {
    OneRow,
    SingleColumn,
    TwoRow(u32, u32),
    Hook { leg: u32, arm: u32 },
    DoubleHook(DoubleHook),
    AtMostFourRows,
    General,
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`
/// and ending at `(1^n)`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    PartitionIter::new(n).collect()
}

/// Iterator behind [`enumerate_partitions`].
#[derive(Clone, Debug)]
pub struct PartitionIter {
    current: Option<Vec<u32>>,
}

impl PartitionIter {
    pub fn new(n: u32) -> Self {
        let start = if n == 0 { Vec::new() } else { vec![n] };
        PartitionIter {
            current: Some(start),
        }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_parts(cur.iter().copied());

        // Successor: drop trailing ones, decrement the last part > 1, and
        // redistribute the freed cells in parts no larger than it.
        let mut parts = cur;
        let mut freed = 0u32;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let p = freed.min(cap);
                parts.push(p);
                freed -= p;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,3,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let raw = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        make_partition(&raw)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, the same text format [`FromStr`] accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(raw: Vec<i64>) -> Result<Self> {
        make_partition(&raw)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    #[test]
    fn normalization() {
        let a = make_partition(&[4, 3, 1]).unwrap();
        assert_eq!(a.parts(), &[4, 3, 1]);
        assert_eq!(a.size(), 8);
        assert_eq!(make_partition(&[1, 3, 0, 4]).unwrap(), a);
        let e = make_partition(&[0, 0]).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.size(), 0);
        assert_eq!(make_partition(&[2, -1]), Err(Error::NegativePart(-1)));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        assert_eq!(Partition::row(6).conjugate(), Partition::column(6));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(p(&[5, 3]).classify(), ShapeClass::TwoRow(5, 3));
        assert_eq!(
            p(&[3, 1, 1]).classify(),
            ShapeClass::Hook { leg: 2, arm: 3 }
        );
        assert_eq!(
            p(&[4, 3, 2, 2, 1, 1]).classify(),
            ShapeClass::DoubleHook(DoubleHook {
                d1: 2,
                d2: 2,
                n3: 3,
                n4: 4
            })
        );
        assert_eq!(p(&[7]).classify(), ShapeClass::OneRow);
        assert_eq!(p(&[1, 1, 1]).classify(), ShapeClass::SingleColumn);
        assert_eq!(p(&[1]).classify(), ShapeClass::OneRow);
        assert_eq!(p(&[3, 3, 3]).classify(), ShapeClass::AtMostFourRows);
        assert_eq!(p(&[3, 3, 3, 1, 1]).classify(), ShapeClass::General);
        // (3,1) is a two-row shape first, but still a hook geometrically.
        assert_eq!(p(&[3, 1]).classify(), ShapeClass::TwoRow(3, 1));
        assert_eq!(p(&[3, 1]).hook_params(), Some((1, 3)));
    }

    #[test]
    fn double_hook_rewrite_when_second_row_is_two() {
        // (5,2,2,1): naive reading is 1^1 2^2 with a single big part 5.
        let dh = p(&[5, 2, 2, 1]).double_hook_params().unwrap();
        assert_eq!(
            dh,
            DoubleHook {
                d1: 1,
                d2: 1,
                n3: 2,
                n4: 5
            }
        );
        // (3,2,2,1) read as 1^1 2^2 3 and rewritten to 1^1 2^1 2 3.
        let dh = p(&[3, 2, 2, 1]).double_hook_params().unwrap();
        assert_eq!(
            dh,
            DoubleHook {
                d1: 1,
                d2: 1,
                n3: 2,
                n4: 3
            }
        );
        // All parts at most 2.
        let dh = p(&[2, 2, 2, 1]).double_hook_params().unwrap();
        assert_eq!(
            dh,
            DoubleHook {
                d1: 1,
                d2: 1,
                n3: 2,
                n4: 2
            }
        );
        assert_eq!(p(&[3, 1, 1]).double_hook_params(), None);
        assert_eq!(p(&[3, 3, 3]).double_hook_params(), None);
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1, 1]).z(), BigUint::from(6u32));
        assert_eq!(p(&[2, 1]).z(), BigUint::from(2u32));
        assert_eq!(p(&[3, 2, 2, 1]).z(), BigUint::from(24u32));
        assert_eq!(Partition::empty().z(), BigUint::from(1u32));
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<Vec<u32>> = enumerate_partitions(4)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(enumerate_partitions(12).len(), 77);
    }

    #[test]
    fn text_format() {
        assert_eq!("4,3,1".parse::<Partition>().unwrap(), p(&[4, 3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" 1, 3 ,2".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert!("4,x".parse::<Partition>().is_err());
        assert!(matches!(
            "4,-1".parse::<Partition>(),
            Err(Error::NegativePart(-1))
        ));
        assert_eq!(p(&[4, 3, 1]).to_string(), "4,3,1");
        assert_eq!(Partition::empty().to_string(), "");
    }
}
