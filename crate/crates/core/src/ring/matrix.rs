use super::Ring;
use crate::error::{Error, Result};

/// Dense square matrix over a [`Ring`], stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RingMatrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParams("matrix dimension must be positive".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        if entries.iter().any(|e| !e.compatible(&entries[0])) {
            return Err(Error::DimensionMismatch("entries from different rings".into()));
        }
        Ok(RingMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        let flat: Vec<R> = rows.into_iter().flatten().collect();
        Self::from_fn(dim, |i, j| flat[i * dim + j].clone())
    }

    pub fn identity(dim: usize, proto: &R) -> Result<Self> {
        Self::from_fn(dim, |i, j| if i == j { proto.one_like() } else { proto.zero_like() })
    }

    pub fn zeros(dim: usize, proto: &R) -> Result<Self> {
        Self::from_fn(dim, |_, _| proto.zero_like())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.dim)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("{0}x{0} vs {1}x{1}", self.dim, other.dim)));
        }
        if !self.entries[0].compatible(&other.entries[0]) {
            return Err(Error::DimensionMismatch("entry rings differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(RingMatrix { dim: self.dim, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect();
        Ok(RingMatrix { dim: self.dim, entries })
    }

    pub fn scale(&self, s: &R) -> Self {
        RingMatrix { dim: self.dim, entries: self.entries.iter().map(|e| e.mul(s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.dim;
        let zero = self.entries[0].zero_like();
        let mut out = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero_like() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero_like() {
                        out[i * n + j] = out[i * n + j].add(&a.mul(b));
                    }
                }
            }
        }
        RingMatrix { dim: n, entries: out }
    }

    /// `self^m`; `m = 0` gives the identity.
    pub fn pow(&self, mut m: u64) -> Self {
        let mut acc = Self::identity(self.dim, &self.entries[0]).expect("dim > 0");
        let mut sq = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            m >>= 1;
            if m > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        acc
    }

    /// Every row is the previous one rotated right by one place.
    pub fn is_circulant(&self) -> bool {
        let n = self.dim;
        (1..n).all(|i| (0..n).all(|j| self.get(i, j) == self.get(i - 1, (j + n - 1) % n)))
    }
}
