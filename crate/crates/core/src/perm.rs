//! Permutations of `{1, …, n}`.
//!
//! Points are stored 0-based internally and printed 1-based. Products are
//! read left to right: `i^(xy) = (i^x)^y`, so `x.compose(&y)` applies `x`
//! first. Conjugation follows the same convention, `x^w = w⁻¹ x w`.

use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::arith::{lcm, Prime};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotABijection(n));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation from 1-based images, e.g. `[2, 3, 1, 4]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let shifted = images
            .iter()
            .map(|&i| i.checked_sub(1).ok_or(Error::NotABijection(n)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(shifted)
    }

    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        CycleNotation::new(cycles.to_vec(), degree)?.to_permutation()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    /// Smallest 0-based point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &j)| i != j as usize)
            .map(|(i, _)| i)
    }

    /// Extends to a larger degree, fixing the new points.
    pub fn padded(&self, degree: usize) -> Result<Self> {
        if degree < self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: degree,
            });
        }
        let mut images = self.images.to_vec();
        images.extend(self.degree() as u32..degree as u32);
        Ok(Permutation {
            images: images.into(),
        })
    }

    /// Moves every point up by `offset` into a permutation of degree `degree`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Self {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + j;
        }
        Permutation {
            images: images.into(),
        }
    }

    /// Left-to-right product: the result maps `i` to `other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation {
            images: images.into(),
        }
    }

    /// `w⁻¹ · self · w`.
    pub fn conjugate_by(&self, w: &Permutation) -> Permutation {
        // (i^w)^(x^w) = (i^x)^w
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[w.images[i] as usize] = w.images[j as usize];
        }
        Permutation {
            images: images.into(),
        }
    }

    /// `[self, other] = self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .mul_unchecked(&other.inverse())
            .mul_unchecked(self)
            .mul_unchecked(other)
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// Lengths of all cycles including fixed points, in order of their least point.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t = self.cycle_lengths();
        t.sort_unstable();
        t
    }

    /// Least `k ≥ 1` with `self^k = 1`. Panics if the order overflows `u128`.
    pub fn order(&self) -> u128 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u128, |acc, l| lcm(acc, l as u128))
    }

    /// True iff the order is a power of `p` (the identity counts, as `p⁰`).
    pub fn is_p_element(&self, p: Prime) -> bool {
        self.cycle_lengths()
            .into_iter()
            .all(|l| p.is_power(l as u128))
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycle_lengths().iter().map(|l| l - 1).sum();
        transpositions.is_multiple_of(2)
    }

    pub fn cycles(&self) -> CycleNotation {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            cycles.push(cycle);
        }
        CycleNotation { cycles, degree: n }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.cycles(), self.degree())
    }
}

/// Disjoint cycle notation with 1-based points, e.g. `(1,2,3)(4,5)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleNotation {
    cycles: Vec<Vec<usize>>,
    degree: usize,
}

impl CycleNotation {
    /// Validates disjointness and range. Cycles of length one are dropped.
    pub fn new(cycles: Vec<Vec<usize>>, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        for cycle in &cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if seen[p - 1] {
                    return Err(Error::RepeatedPoint(p));
                }
                seen[p - 1] = true;
            }
        }
        let cycles = cycles.into_iter().filter(|c| c.len() >= 2).collect();
        Ok(CycleNotation { cycles, degree })
    }

    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut cycles = Vec::new();
        let malformed = |position: usize, reason: &str| Error::MalformedCycles {
            position,
            reason: reason.to_string(),
        };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(malformed(pos, "empty text; write `()` for the identity"));
        }
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(malformed(pos, "expected `(`"));
            }
            pos += 1;
            skip_ws(&mut pos);
            let mut cycle = Vec::new();
            if pos < bytes.len() && bytes[pos] == b')' {
                pos += 1;
                skip_ws(&mut pos);
                continue;
            }
            loop {
                skip_ws(&mut pos);
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(malformed(pos, "expected a point"));
                }
                let point: usize = text[start..pos]
                    .parse()
                    .map_err(|_| malformed(start, "point too large"))?;
                cycle.push(point);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    Some(_) => return Err(malformed(pos, "expected `,` or `)`")),
                    None => return Err(malformed(pos, "unterminated cycle")),
                }
            }
            cycles.push(cycle);
            skip_ws(&mut pos);
        }
        Self::new(cycles, degree)
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..self.degree).collect();
        for cycle in &self.cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                images[p - 1] = q - 1;
            }
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for CycleNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    CycleNotation::parse(text, degree)?.to_permutation()
}

pub fn format_cycles(x: &Permutation) -> String {
    x.cycles().to_string()
}
