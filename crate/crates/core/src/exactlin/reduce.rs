use super::{Field, LinAlgError, Scalar, Vector};

/// Reduced row echelon form of a row set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReduction {
    /// Nonzero rows of the reduced echelon form, pivots normalized to 1.
    pub basis: Vec<Vector>,
    /// Pivot column of each basis row.
    pub pivots: Vec<usize>,
}

impl RowReduction {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

fn common_dim(rows: &[Vector]) -> Result<Option<usize>, LinAlgError> {
    let Some(first) = rows.first() else {
        return Ok(None);
    };
    let dim = first.dim();
    if let Some(bad) = rows.iter().find(|r| r.dim() != dim) {
        return Err(LinAlgError::DimensionMismatch {
            left: dim,
            right: bad.dim(),
        });
    }
    Ok(Some(dim))
}

/// In-place Gauss-Jordan elimination. Pivot column is the leftmost column
/// with a nonzero entry among the remaining rows; the first such row wins.
fn rref_in_place(m: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced echelon basis of the row space of `rows`, computed over `field`.
pub fn row_reduce(rows: &[Vector], field: Field) -> Result<RowReduction, LinAlgError> {
    let Some(ncols) = common_dim(rows)? else {
        return Ok(RowReduction {
            basis: Vec::new(),
            pivots: Vec::new(),
        });
    };
    let mut m = rows
        .iter()
        .map(|r| r.to_field(field).map(Vector::into_entries))
        .collect::<Result<Vec<_>, _>>()?;
    let pivots = rref_in_place(&mut m, ncols);
    m.truncate(pivots.len());
    Ok(RowReduction {
        basis: m.into_iter().map(Vector::new).collect(),
        pivots,
    })
}

pub fn rank(rows: &[Vector], field: Field) -> Result<usize, LinAlgError> {
    Ok(row_reduce(rows, field)?.rank())
}

/// Coefficients `c` with `sum c[i] * basis[i] = v`, or `None` when `v` lies
/// outside the span. With a dependent `basis` the free coefficients are 0.
pub fn solve_membership(v: &Vector, basis: &[Vector]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
    let field = v.entries().first().map(Scalar::field);
    let Some(field) = field else {
        return Ok(Some(vec![]));
    };
    if let Some(bad) = basis.iter().find(|b| b.dim() != v.dim()) {
        return Err(LinAlgError::DimensionMismatch {
            left: v.dim(),
            right: bad.dim(),
        });
    }
    let k = basis.len();
    // Columns are the basis vectors, last column is v.
    let mut m: Vec<Vec<Scalar>> = (0..v.dim())
        .map(|i| {
            let mut row: Vec<Scalar> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let pivots = rref_in_place(&mut m, k + 1);
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![field.zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        coeffs[c] = m[row][k].clone();
    }
    Ok(Some(coeffs))
}

/// Basis of `{x : r . x = 0 for every row r}` in a space of dimension `ncols`.
pub fn null_space(rows: &[Vector], ncols: usize, field: Field) -> Result<Vec<Vector>, LinAlgError> {
    if let Some(d) = common_dim(rows)? {
        if d != ncols {
            return Err(LinAlgError::DimensionMismatch { left: ncols, right: d });
        }
    }
    let red = row_reduce(rows, field)?;
    let free = (0..ncols).filter(|c| !red.pivots.contains(c));
    Ok(free
        .map(|f| {
            let mut x = vec![field.zero(); ncols];
            x[f] = field.one();
            for (row, &p) in red.basis.iter().zip(&red.pivots) {
                x[p] = -&row[f];
            }
            Vector::new(x)
        })
        .collect())
}
