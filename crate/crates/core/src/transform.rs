//! Discrete Fourier transforms over GF(q) on the cyclic group of order q−1.
//!
//! Conventions (n = q−1):
//!
//! * `dft1(a)[i]   = Σ_h a[h] α^{ih}`
//! * `idft1(a)[h]  = −Σ_i a[i] α^{−ih}`, the leading −1 being n⁻¹ in characteristic p
//! * `dft2(a)[i,j] = Σ_{r,s} a[r,s] α^{ri+sj}` (evaluation of the array at (α^i, α^j))
//! * `idft2(a)[r,s] = Σ_{i,j} a[i,j] α^{−ri−sj}`, unnormalised since n² = 1 in GF(q)
//!
//! Both pairs compose to the identity.

use std::ops::{Index, IndexMut};

use thiserror::Error;

use crate::galois::{Elt, Field};
use crate::poly::Cell;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("DimensionMismatch: expected side {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// (q−1)×(q−1) grid of field elements indexed by exponent pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Array2D {
    n: usize,
    data: Vec<Elt>,
}

impl Array2D {
    pub fn zeros(n: usize) -> Array2D {
        Array2D { n, data: vec![Elt::ZERO; n * n] }
    }

    pub fn for_field(field: &Field) -> Array2D {
        Array2D::zeros(field.order() as usize)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Cell) -> Elt) -> Array2D {
        let mut a = Array2D::zeros(n);
        for r in 0..n {
            for s in 0..n {
                a[(r, s)] = f((r, s));
            }
        }
        a
    }

    /// Builds from row-major rows; every row must have length `rows.len()`.
    pub fn from_rows(rows: &[Vec<Elt>]) -> Result<Array2D, TransformError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(TransformError::DimensionMismatch { expected: n, got: bad.len() });
        }
        Ok(Array2D { n, data: rows.concat() })
    }

    pub fn side(&self) -> usize {
        self.n
    }

    /// Value at (r mod n, s mod n).
    pub fn get_wrapped(&self, (r, s): Cell) -> Elt {
        self.data[(r % self.n) * self.n + s % self.n]
    }

    pub fn row(&self, r: usize) -> &[Elt] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> {
        let n = self.n;
        (0..n).flat_map(move |r| (0..n).map(move |s| (r, s)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &Array2D, field: &Field) -> Array2D {
        self.zip(other, |a, b| field.add(a, b))
    }

    pub fn sub(&self, other: &Array2D, field: &Field) -> Array2D {
        self.zip(other, |a, b| field.sub(a, b))
    }

    pub fn scale(&self, lambda: Elt, field: &Field) -> Array2D {
        Array2D { n: self.n, data: self.data.iter().map(|&v| field.mul(v, lambda)).collect() }
    }

    fn zip(&self, other: &Array2D, f: impl Fn(Elt, Elt) -> Elt) -> Array2D {
        assert_eq!(self.n, other.n, "array sides differ");
        Array2D {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}

impl Index<Cell> for Array2D {
    type Output = Elt;
    fn index(&self, (r, s): Cell) -> &Elt {
        &self.data[r * self.n + s]
    }
}

impl IndexMut<Cell> for Array2D {
    fn index_mut(&mut self, (r, s): Cell) -> &mut Elt {
        &mut self.data[r * self.n + s]
    }
}

impl std::fmt::Debug for Array2D {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.n {
            let row: Vec<String> = self.row(r).iter().map(|v| format!("{:>2}", v.log())).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Length-(q−1) vector.
pub type Array1D = Vec<Elt>;

fn check_side(field: &Field, got: usize) -> Result<usize, TransformError> {
    let n = field.order() as usize;
    if got != n {
        return Err(TransformError::DimensionMismatch { expected: n, got });
    }
    Ok(n)
}

/// out[i] = Σ_h a[h] α^{sign·ih}, by Horner's rule in α^{sign·i}.
fn transform1(field: &Field, a: &[Elt], sign: i64) -> Vec<Elt> {
    let n = a.len();
    (0..n)
        .map(|i| {
            let root = field.alpha_pow(sign * i as i64);
            a.iter().rev().fold(Elt::ZERO, |acc, &v| field.add(field.mul(acc, root), v))
        })
        .collect()
}

pub fn dft1(field: &Field, a: &[Elt]) -> Result<Array1D, TransformError> {
    check_side(field, a.len())?;
    Ok(transform1(field, a, 1))
}

/// Inverse of [`dft1`]; includes the factor (q−1)⁻¹ = −1.
pub fn idft1(field: &Field, a: &[Elt]) -> Result<Array1D, TransformError> {
    check_side(field, a.len())?;
    Ok(transform1(field, a, -1).into_iter().map(|v| field.neg(v)).collect())
}

/// Row-column 2-D transform with kernel α^{sign(ri+sj)}.
fn transform2(field: &Field, a: &Array2D, sign: i64) -> Array2D {
    let n = a.side();
    let mut tmp = Array2D::zeros(n);
    for r in 0..n {
        let row = transform1(field, a.row(r), sign);
        for (j, v) in row.into_iter().enumerate() {
            tmp[(r, j)] = v;
        }
    }
    let mut out = Array2D::zeros(n);
    let mut col = vec![Elt::ZERO; n];
    for j in 0..n {
        for (r, slot) in col.iter_mut().enumerate() {
            *slot = tmp[(r, j)];
        }
        for (i, v) in transform1(field, &col, sign).into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    out
}

pub fn dft2(field: &Field, a: &Array2D) -> Result<Array2D, TransformError> {
    check_side(field, a.side())?;
    Ok(transform2(field, a, 1))
}

pub fn idft2(field: &Field, a: &Array2D) -> Result<Array2D, TransformError> {
    check_side(field, a.side())?;
    Ok(transform2(field, a, -1))
}
