//! Dense square matrices: small integer matrices for the Lie algebra data
//! and ring-valued matrices for group elements.

use std::fmt;

use crate::ring::{Ideal, Ring, RingElement, Value};

/// A square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix { dim, data: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from `(row, col, value)` entries.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut m = Self::zero(dim);
        for &(r, c, v) in entries {
            m.set(r, c, m.get(r, c) + v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn nonzero(&self) -> Vec<(usize, usize, i64)> {
        let d = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i / d, i % d, v))
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = IntMatrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.data[i * d + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { dim: self.dim, data }
    }

    pub fn scale(&self, s: i64) -> IntMatrix {
        IntMatrix { dim: self.dim, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        self.add(&other.scale(-1))
    }

    /// The Lie bracket `AB − BA`.
    pub fn bracket(&self, other: &IntMatrix) -> IntMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Entrywise exact division; `None` if some entry is not divisible.
    pub fn div_exact(&self, d: i64) -> Option<IntMatrix> {
        if self.data.iter().any(|x| x % d != 0) {
            return None;
        }
        Some(IntMatrix { dim: self.dim, data: self.data.iter().map(|x| x / d).collect() })
    }

    pub fn transpose(&self) -> IntMatrix {
        let d = self.dim;
        let mut out = IntMatrix::zero(d);
        for r in 0..d {
            for c in 0..d {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let d = self.dim + other.dim;
        let mut out = IntMatrix::zero(d);
        for (r, c, v) in self.nonzero() {
            out.set(r, c, v);
        }
        for (r, c, v) in other.nonzero() {
            out.set(self.dim + r, self.dim + c, v);
        }
        out
    }

    /// `Some(c)` if `self = c·other` for an integer `c`, with `other ≠ 0`.
    pub fn ratio_to(&self, other: &IntMatrix) -> Option<i64> {
        let (r, c, v) = *other.nonzero().first()?;
        let here = self.get(r, c);
        if here % v != 0 {
            return None;
        }
        let k = here / v;
        (*self == other.scale(k)).then_some(k)
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.dim).map(|r| r.to_vec()).collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// A square matrix with entries in one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    dim: usize,
    data: Vec<Value>,
}

impl Matrix {
    pub fn zero(ring: &Ring, dim: usize) -> Self {
        Matrix { ring: ring.clone(), dim, data: vec![ring.zero_value(); dim * dim] }
    }

    pub fn identity(ring: &Ring, dim: usize) -> Self {
        let mut m = Self::zero(ring, dim);
        let one = ring.one_value();
        for i in 0..dim {
            m.data[i * dim + i] = one.clone();
        }
        m
    }

    pub fn from_int(ring: &Ring, m: &IntMatrix) -> Self {
        let data = m.data.iter().map(|&v| ring.small_value(v)).collect();
        Matrix { ring: ring.clone(), dim: m.dim, data }
    }

    pub fn from_elements(ring: &Ring, dim: usize, entries: Vec<RingElement>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        let data = entries
            .into_iter()
            .map(|e| {
                assert_eq!(e.ring(), ring, "entry from a different ring");
                e.into_value()
            })
            .collect();
        Matrix { ring: ring.clone(), dim, data }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> RingElement {
        self.ring.wrap(self.data[r * self.dim + c].clone())
    }

    pub(crate) fn value(&self, r: usize, c: usize) -> &Value {
        &self.data[r * self.dim + c]
    }

    /// Adds `coeff · v` at `(r, c)`.
    pub(crate) fn add_scaled(&mut self, r: usize, c: usize, coeff: &Value, v: i64) {
        let ring = &self.ring;
        let t = ring.mul_values(coeff, &ring.small_value(v));
        let idx = r * self.dim + c;
        self.data[idx] = ring.add_values(&self.data[idx], &t);
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        assert_eq!(self.ring, other.ring, "matrices over different rings");
        let d = self.dim;
        let ring = &self.ring;
        let row_nz: Vec<Vec<(usize, &Value)>> = (0..d)
            .map(|k| {
                (0..d)
                    .map(|j| (j, &other.data[k * d + j]))
                    .filter(|(_, v)| !ring.is_zero_value(v))
                    .collect()
            })
            .collect();
        let mut data = vec![ring.zero_value(); d * d];
        for i in 0..d {
            for (k, nz) in row_nz.iter().enumerate() {
                let a = &self.data[i * d + k];
                if ring.is_zero_value(a) {
                    continue;
                }
                for &(j, b) in nz {
                    let t = ring.mul_values(a, b);
                    data[i * d + j] = ring.add_values(&data[i * d + j], &t);
                }
            }
        }
        Matrix { ring: ring.clone(), dim: d, data }
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(&self.ring, self.dim)
    }

    /// `self − 1`.
    pub fn minus_identity(&self) -> Matrix {
        let mut m = self.clone();
        let one = self.ring.one_value();
        for i in 0..self.dim {
            let idx = i * self.dim + i;
            m.data[idx] = self.ring.sub_values(&m.data[idx], &one);
        }
        m
    }

    /// Entrywise image under the map `f` into `target`.
    pub fn map_into(&self, target: &Ring, f: impl Fn(&RingElement) -> RingElement) -> Matrix {
        let data = (0..self.dim * self.dim)
            .map(|i| f(&self.ring.wrap(self.data[i].clone())).into_value())
            .collect();
        Matrix { ring: target.clone(), dim: self.dim, data }
    }

    /// Whether every entry of `self − 1` lies in `ideal`.
    pub fn congruent_to_identity(&self, ideal: &Ideal) -> bool {
        assert_eq!(ideal.ring(), &self.ring);
        let d = self.minus_identity();
        d.data.iter().all(|v| ideal.contains(&self.ring.wrap(v.clone())))
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.dim;
        let mut data = self.data.clone();
        for r in 0..d {
            for c in 0..d {
                data[c * d + r] = self.data[r * d + c].clone();
            }
        }
        Matrix { ring: self.ring.clone(), dim: d, data }
    }

    /// Rows as display strings, for reports.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }

    /// Residues for matrices over `Z/n`.
    pub fn residues(&self) -> Option<Vec<u64>> {
        self.data
            .iter()
            .map(|v| match v {
                Value::Mod(r) => Some(*r),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_strings()).finish()
    }
}
