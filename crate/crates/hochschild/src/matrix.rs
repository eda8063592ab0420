//! Exact integer matrices sized for poset incidence work: multiplication,
//! unit-triangular inversion, fraction-free determinants, and characteristic
//! polynomials by evaluation–interpolation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exec;
use crate::poly::{interpolate_int, IntPoly};

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zeros(dim);
        for i in 0..dim {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_fn<F>(dim: usize, f: F) -> Self
    where
        F: Fn(usize, usize) -> BigInt,
    {
        let mut m = IntMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix::from_fn(dim, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.dim + j]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let dim = self.dim;
        let rows = exec::map_indices(dim, |i| {
            let mut row = vec![BigInt::zero(); dim];
            for k in 0..dim {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell += a * other.at(k, j);
                }
            }
            row
        });
        let mut out = IntMatrix::zeros(dim);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                *out.at_mut(i, j) = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.dim, |i, j| self.at(j, i).clone())
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::from_fn(self.dim, |i, j| -self.at(i, j))
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        IntMatrix::from_fn(self.dim, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        IntMatrix::from_fn(self.dim, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn scale(&self, factor: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.dim, |i, j| self.at(i, j) * factor)
    }

    pub fn pow(&self, e: usize) -> IntMatrix {
        let mut result = IntMatrix::identity(self.dim);
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    pub fn is_unit_upper_triangular(&self) -> bool {
        (0..self.dim).all(|i| {
            self.at(i, i).is_one() && (0..i).all(|j| self.at(i, j).is_zero())
        })
    }

    /// Inverse of a unit upper-triangular matrix — integral, by back
    /// substitution. Panics if the matrix is not unit upper-triangular.
    pub fn inverse_unit_upper_triangular(&self) -> IntMatrix {
        assert!(
            self.is_unit_upper_triangular(),
            "inverse requires a unit upper-triangular matrix"
        );
        let dim = self.dim;
        let mut inv = IntMatrix::identity(dim);
        // solve column by column: columns of the inverse are independent
        let columns = exec::map_indices(dim, |c| {
            let mut col = vec![BigInt::zero(); dim];
            col[c] = BigInt::one();
            for i in (0..dim).rev() {
                let mut value = std::mem::take(&mut col[i]);
                for j in i + 1..dim {
                    if !self.at(i, j).is_zero() {
                        value -= self.at(i, j) * &col[j];
                    }
                }
                col[i] = value;
            }
            col
        });
        for (c, col) in columns.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                *inv.at_mut(i, c) = v;
            }
        }
        inv
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn det(&self) -> BigInt {
        let dim = self.dim;
        if dim == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let at = |i: usize, j: usize| i * dim + j;
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..dim - 1 {
            if m[at(k, k)].is_zero() {
                let Some(pivot) = (k + 1..dim).find(|&r| !m[at(r, k)].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..dim {
                    m.swap(at(k, j), at(pivot, j));
                }
                sign = -sign;
            }
            for i in k + 1..dim {
                for j in k + 1..dim {
                    let numerator = &m[at(k, k)] * &m[at(i, j)] - &m[at(i, k)] * &m[at(k, j)];
                    m[at(i, j)] = numerator / &prev;
                }
                m[at(i, k)] = BigInt::zero();
            }
            prev = m[at(k, k)].clone();
        }
        let det = m[at(dim - 1, dim - 1)].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Characteristic polynomial `det(xI − A)`, exact: the determinant is
    /// evaluated at `dim + 1` integer points (in parallel) and interpolated.
    pub fn char_poly(&self) -> IntPoly {
        let dim = self.dim;
        if dim == 0 {
            return IntPoly::one();
        }
        // nodes centered at zero keep the determinant magnitudes small
        let lo = -(dim as i64) / 2;
        let nodes: Vec<i64> = (0..=dim as i64).map(|t| lo + t).collect();
        let points: Vec<(BigInt, BigInt)> = exec::map_collect(nodes, |t| {
            let x = BigInt::from(t);
            let shifted = IntMatrix::from_fn(dim, |i, j| {
                let mut v = -self.at(i, j);
                if i == j {
                    v += &x;
                }
                v
            });
            (x, shifted.det())
        });
        let poly = interpolate_int(&points);
        poly.to_int_poly()
            .expect("characteristic polynomial has integer coefficients")
    }

    /// Characteristic polynomial by Laplace expansion over polynomial
    /// entries — exponential, only for cross-checking small matrices.
    pub fn char_poly_direct(&self) -> IntPoly {
        assert!(self.dim <= 8, "direct expansion is for small matrices only");
        let entries: Vec<Vec<IntPoly>> = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let mut coeffs = vec![-self.at(i, j).clone()];
                        if i == j {
                            coeffs.push(BigInt::one());
                        }
                        IntPoly::from_coeffs(coeffs)
                    })
                    .collect()
            })
            .collect();
        fn det_poly(rows: &[Vec<IntPoly>], cols: &mut Vec<usize>) -> IntPoly {
            let Some((first_row, rest)) = rows.split_first() else {
                return IntPoly::one();
            };
            let mut acc = IntPoly::zero();
            for pos in 0..cols.len() {
                let c = cols.remove(pos);
                let minor = det_poly(rest, cols);
                let term = first_row[c].mul(&minor);
                acc = if pos % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
                cols.insert(pos, c);
            }
            acc
        }
        let mut cols: Vec<usize> = (0..self.dim).collect();
        det_poly(&entries, &mut cols)
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
