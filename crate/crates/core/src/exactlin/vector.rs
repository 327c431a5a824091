use std::fmt;
use std::ops::Index;

use super::{Field, LinAlgError, Scalar};

/// A fixed-dimension vector of exact scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector { entries }
    }

    pub fn zeros(field: Field, dim: usize) -> Self {
        Vector {
            entries: vec![field.zero(); dim],
        }
    }

    pub fn from_i64(field: Field, values: &[i64]) -> Self {
        Vector {
            entries: values.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn to_field(&self, field: Field) -> Result<Vector, LinAlgError> {
        self.entries
            .iter()
            .map(|s| s.to_field(field))
            .collect::<Result<Vec<_>, _>>()
            .map(Vector::new)
    }

    fn check_dim(&self, other: &Vector) -> Result<(), LinAlgError> {
        if self.dim() != other.dim() {
            return Err(LinAlgError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector, LinAlgError> {
        self.check_dim(other)?;
        Ok(Vector::new(
            self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector, LinAlgError> {
        self.check_dim(other)?;
        Ok(Vector::new(
            self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector::new(self.entries.iter().map(|a| a * c).collect())
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &Vector) -> Result<Vector, LinAlgError> {
        self.check_dim(other)?;
        Ok(Vector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + &(c * b))
                .collect(),
        ))
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Standard dot product.
pub fn inner_product(u: &Vector, v: &Vector) -> Result<Scalar, LinAlgError> {
    u.check_dim(v)?;
    let mut iter = u.entries.iter().zip(&v.entries);
    let Some((a, b)) = iter.next() else {
        return Err(LinAlgError::EmptyVector);
    };
    let mut acc = a * b;
    for (a, b) in iter {
        acc += &(a * b);
    }
    Ok(acc)
}

/// Row-major rectangular grid of scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinAlgError::DimensionMismatch {
                left: cols,
                right: bad.len(),
            });
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn trace(&self) -> Option<Scalar> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let mut acc = self.get(0, 0).clone();
        for i in 1..self.rows {
            acc += self.get(i, i);
        }
        Some(acc)
    }

    /// Entries as integers, when every entry is integral.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Scalar::to_i64).collect())
            .collect()
    }
}
