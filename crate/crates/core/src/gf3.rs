//! Linear algebra over GF(3).
//!
//! Residues are stored canonically as `u8` values in `0..3`. A [`Gf3Basis`]
//! is always kept in reduced row-echelon form, so two bases spanning the same
//! subspace compare equal.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("dimension mismatch: expected length {expected}, got {found}")]
pub struct DimensionError {
    pub expected: usize,
    pub found: usize,
}

#[inline]
pub fn reduce(x: i64) -> u8 {
    x.rem_euclid(3) as u8
}

#[inline]
pub fn add_mod3(a: u8, b: u8) -> u8 {
    let s = a + b;
    if s >= 3 {
        s - 3
    } else {
        s
    }
}

#[inline]
pub fn mul_mod3(a: u8, b: u8) -> u8 {
    (a * b) % 3
}

#[inline]
pub fn neg_mod3(a: u8) -> u8 {
    if a == 0 {
        0
    } else {
        3 - a
    }
}

/// A fixed-length vector over GF(3).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Gf3Vector(Vec<u8>);

impl Gf3Vector {
    pub fn zero(len: usize) -> Self {
        Gf3Vector(vec![0; len])
    }

    /// Unit vector with a 1 at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zero(len);
        v.0[index] = 1;
        v
    }

    /// Builds a vector from arbitrary integers, reducing each mod 3.
    pub fn from_ints<I: IntoIterator<Item = i64>>(entries: I) -> Self {
        Gf3Vector(entries.into_iter().map(reduce).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, value: i64) {
        self.0[i] = reduce(value);
    }

    pub fn add_at(&mut self, i: usize, value: u8) {
        self.0[i] = add_mod3(self.0[i], value % 3);
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Index of the first nonzero entry.
    pub fn leading(&self) -> Option<usize> {
        self.0.iter().position(|&x| x != 0)
    }

    fn check_len(&self, other: &Self) -> Result<(), DimensionError> {
        if self.len() != other.len() {
            return Err(DimensionError {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, DimensionError> {
        self.check_len(other)?;
        Ok(Gf3Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| add_mod3(a, b))
                .collect(),
        ))
    }

    /// `self += factor * other`, in place.
    pub fn add_scaled(&mut self, other: &Self, factor: u8) -> Result<(), DimensionError> {
        self.check_len(other)?;
        let factor = factor % 3;
        if factor == 0 {
            return Ok(());
        }
        for (a, &b) in self.0.iter_mut().zip(&other.0) {
            *a = add_mod3(*a, mul_mod3(b, factor));
        }
        Ok(())
    }

    pub fn scale(&self, factor: u8) -> Self {
        Gf3Vector(self.0.iter().map(|&a| mul_mod3(a, factor % 3)).collect())
    }

    pub fn neg(&self) -> Self {
        Gf3Vector(self.0.iter().map(|&a| neg_mod3(a)).collect())
    }

    /// Entries as balanced residues in `{-1, 0, 1}`.
    pub fn to_signed(&self) -> Vec<i8> {
        self.0
            .iter()
            .map(|&a| if a == 2 { -1 } else { a as i8 })
            .collect()
    }
}

impl fmt::Debug for Gf3Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Row basis of a subspace of GF(3)^len in reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gf3Basis {
    len: usize,
    rows: Vec<Gf3Vector>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl Gf3Basis {
    pub fn new(len: usize) -> Self {
        Gf3Basis {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Gf3Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &Gf3Vector) -> Result<(), DimensionError> {
        if v.len() != self.len {
            return Err(DimensionError {
                expected: self.len,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Reduces `v` against every row. The residue is zero iff `v` lies in the
    /// span, and has no entry in any pivot column.
    pub fn sift(&self, v: &Gf3Vector) -> Result<Gf3Vector, DimensionError> {
        self.check_len(v)?;
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r.get(p);
            if c != 0 {
                r.add_scaled(row, neg_mod3(c))?;
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &Gf3Vector) -> Result<bool, DimensionError> {
        Ok(self.sift(v)?.is_zero())
    }

    /// Adds `v` to the basis. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &Gf3Vector) -> Result<bool, DimensionError> {
        let mut r = self.sift(v)?;
        let Some(p) = r.leading() else {
            return Ok(false);
        };
        // leading coefficient 1; the inverse of 2 is 2
        if r.get(p) == 2 {
            r = r.scale(2);
        }
        for row in &mut self.rows {
            let c = row.get(p);
            if c != 0 {
                row.add_scaled(&r, neg_mod3(c))?;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        Ok(true)
    }

    /// Checks the reduced row-echelon invariant.
    pub fn is_reduced_echelon(&self) -> bool {
        if self.rows.len() != self.pivots.len() || self.rows.len() > self.len {
            return false;
        }
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if row.len() != self.len || row.leading() != Some(p) || row.get(p) != 1 {
                return false;
            }
            if i > 0 && self.pivots[i - 1] >= p {
                return false;
            }
            for (j, other) in self.rows.iter().enumerate() {
                if j != i && other.get(p) != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Rank of a list of vectors of common length `len`.
pub fn rank_of(len: usize, vectors: &[Gf3Vector]) -> Result<usize, DimensionError> {
    let mut basis = Gf3Basis::new(len);
    for v in vectors {
        basis.insert(v)?;
    }
    Ok(basis.rank())
}

/// Determinant of a square matrix over GF(3), by elimination.
pub fn determinant(rows: &[Gf3Vector]) -> Result<u8, DimensionError> {
    let n = rows.len();
    let mut m: Vec<Gf3Vector> = rows.to_vec();
    for r in &m {
        if r.len() != n {
            return Err(DimensionError {
                expected: n,
                found: r.len(),
            });
        }
    }
    let mut det = 1u8;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r].get(col) != 0) else {
            return Ok(0);
        };
        if pivot != col {
            m.swap(pivot, col);
            det = neg_mod3(det);
        }
        let p = m[col].get(col);
        det = mul_mod3(det, p);
        // p^{-1} = p in GF(3)
        let inv = p;
        for r in col + 1..n {
            let c = m[r].get(col);
            if c != 0 {
                let factor = neg_mod3(mul_mod3(c, inv));
                let pivot_row = m[col].clone();
                m[r].add_scaled(&pivot_row, factor)?;
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Gf3Vector {
        Gf3Vector::from_ints(xs.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert_eq!(v(&[1, 2, 0]).add(&v(&[2, 2, 1])).unwrap(), v(&[0, 1, 1]));
        let x = v(&[2, 1, 0, 1]);
        assert_eq!(x.add(&Gf3Vector::zero(4)).unwrap(), x);
        assert!(x.add(&x).unwrap().add(&x).unwrap().is_zero());
        assert!(x.add(&Gf3Vector::zero(3)).is_err());
    }

    #[test]
    fn canonical_entries() {
        assert_eq!(v(&[-1, 3, 4, -5]).entries(), &[2, 0, 1, 1]);
    }

    #[test]
    fn sift_examples() {
        let empty = Gf3Basis::new(3);
        assert_eq!(empty.sift(&v(&[1, 2, 0])).unwrap(), v(&[1, 2, 0]));

        let mut b = Gf3Basis::new(3);
        b.insert(&v(&[1, 0, 0])).unwrap();
        assert_eq!(b.sift(&v(&[1, 1, 0])).unwrap(), v(&[0, 1, 0]));

        let r1 = v(&[0, 2, 1]);
        b.insert(&r1).unwrap();
        assert!(b.sift(&r1).unwrap().is_zero());
        assert!(b.sift(&v(&[1, 1])).is_err());
    }

    #[test]
    fn insert_examples() {
        let mut b = Gf3Basis::new(4);
        assert!(!b.insert(&Gf3Vector::zero(4)).unwrap());
        for i in 0..4 {
            assert!(b.insert(&Gf3Vector::unit(4, i)).unwrap());
        }
        assert_eq!(b.rank(), 4);
        assert!(!b.insert(&v(&[1, 2, 1, 1])).unwrap());
        assert!(b.is_reduced_echelon());
    }

    #[test]
    fn insert_keeps_reduced_form() {
        let mut b = Gf3Basis::new(4);
        b.insert(&v(&[0, 2, 1, 1])).unwrap();
        b.insert(&v(&[2, 1, 0, 0])).unwrap();
        b.insert(&v(&[1, 1, 1, 0])).unwrap();
        assert!(b.is_reduced_echelon());
        assert_eq!(b.rank(), 3);
        // the first three columns are dependent
        assert_eq!(b.pivots(), &[0, 1, 3]);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&[v(&[1, 0]), v(&[0, 1])]).unwrap(), 1);
        assert_eq!(determinant(&[v(&[0, 1]), v(&[1, 0])]).unwrap(), 2);
        assert_eq!(determinant(&[v(&[1, 1]), v(&[2, 2])]).unwrap(), 0);
        assert_eq!(determinant(&[v(&[2, 0]), v(&[1, 2])]).unwrap(), 1);
    }
}
