//! The Catalan matrix `[C(i+j, i)]`, exact determinants by fraction-free
//! elimination, and the triangularization check for matrices of power
//! coefficients `[x^j] f^(2i+1)`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::family::c;
use crate::numeric::{binomial, factorial, pow2, ExactInt};
use crate::series::{series_mul, TruncatedSeries};

/// Square matrix of exact integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<ExactInt>,
}

impl ExactMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> ExactInt) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { dim, entries }
    }

    /// Build from rows; `None` unless every row has `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<ExactInt>>) -> Option<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        Some(ExactMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(dim: usize) -> Self {
        ExactMatrix::from_fn(dim, |i, j| if i == j { ExactInt::one() } else { ExactInt::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactInt {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<ExactInt>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(<[_]>::to_vec).collect()
    }

    /// Panics if the dimensions differ.
    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        ExactMatrix::from_fn(self.dim, |i, j| {
            (0..self.dim).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<ExactInt> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The `(N+1) x (N+1)` matrix with entries `(2i+1)(2(i+j))! / (j! (2i+j+1)!)`,
/// each cross-checked against `C(i+j, i)`.
pub fn catalan_matrix(n: i64) -> Result<ExactMatrix> {
    if n < 0 {
        return domain(format!("matrix size index must be non-negative, got {n}"));
    }
    let dim = n as usize + 1;
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim as u64 {
        let mut row = Vec::with_capacity(dim);
        for j in 0..dim as u64 {
            let num = ExactInt::from(2 * i + 1) * factorial(2 * (i + j));
            let den = factorial(j) * factorial(2 * i + j + 1);
            let (entry, rem) = num.div_rem(&den);
            if !rem.is_zero() {
                return Err(Error::NonIntegral {
                    context: format!("catalan_matrix entry ({i},{j})"),
                    value: format!("{num}/{den}"),
                });
            }
            let expected = c((i + j) as i64, i as i64);
            assert_eq!(entry, expected, "factorial and family forms disagree at ({i},{j})");
            row.push(entry);
        }
        rows.push(row);
    }
    Ok(ExactMatrix::from_rows(rows).expect("square by construction"))
}

/// Determinant by Bareiss fraction-free elimination. Every division is exact.
pub fn det_exact(mat: &ExactMatrix) -> ExactInt {
    let n = mat.dim;
    if n == 0 {
        return ExactInt::one();
    }
    let mut a = mat.rows();
    let mut sign = false;
    let mut prev = ExactInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return ExactInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][k] = ExactInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// `c_{i,j} = [x^j] f^(2i+1)` for `0 <= i, j <= N`. `f` must have constant
/// term 1, integer coefficients, and order at least `N`.
pub fn coeff_matrix_from_series(f: &TruncatedSeries, n: usize) -> Result<ExactMatrix> {
    let coeffs = f
        .integer_coeffs()
        .ok_or_else(|| Error::BadSeries("coefficients must be integers".into()))?;
    if !coeffs[0].is_one() {
        return Err(Error::BadSeries("constant term must be 1".into()));
    }
    if f.order() < n {
        return Err(Error::BadSeries(format!(
            "series order {} is below the matrix index {n}",
            f.order()
        )));
    }
    let f = f.truncate(n);
    let f2 = series_mul(&f, &f);
    let mut rows = Vec::with_capacity(n + 1);
    let mut power = f.clone();
    for _ in 0..=n {
        rows.push(power.integer_coeffs().expect("integral powers of an integral series"));
        power = series_mul(&power, &f2);
    }
    Ok(ExactMatrix::from_rows(rows).expect("square by construction"))
}

/// Outcome of multiplying the power-coefficient matrix by the signed
/// binomial matrix `B = [(-1)^(i+j) binom(i, j)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularReport {
    pub product: ExactMatrix,
    pub upper_triangular: bool,
    pub diagonal: Vec<ExactInt>,
    /// `(2 a1)^i` for each row `i`.
    pub expected_diagonal: Vec<ExactInt>,
    pub determinant: ExactInt,
    /// `(2 a1)^(N(N+1)/2)`.
    pub expected_determinant: ExactInt,
}

impl TriangularReport {
    pub fn holds(&self) -> bool {
        self.upper_triangular
            && self.diagonal == self.expected_diagonal
            && self.determinant == self.expected_determinant
    }
}

pub fn signed_binomial_matrix(dim: usize) -> ExactMatrix {
    ExactMatrix::from_fn(dim, |i, j| {
        let b = binomial(i as i64, j as i64);
        if (i + j) % 2 == 1 {
            -b
        } else {
            b
        }
    })
}

pub fn triangularize_check(f: &TruncatedSeries, n: usize) -> Result<TriangularReport> {
    let coeff = coeff_matrix_from_series(f, n)?;
    let a1 = f.integer_coeffs().expect("checked above").get(1).cloned().unwrap_or_default();
    let two_a1: ExactInt = a1 * 2;
    let product = signed_binomial_matrix(n + 1).mul(&coeff);
    let expected_diagonal = (0..=n as u32).map(|i| num_traits::pow(two_a1.clone(), i as usize)).collect();
    let expected_determinant = num_traits::pow(two_a1, n * (n + 1) / 2);
    Ok(TriangularReport {
        upper_triangular: product.is_upper_triangular(),
        diagonal: product.diagonal(),
        determinant: det_exact(&coeff),
        product,
        expected_diagonal,
        expected_determinant,
    })
}

/// `(det [C(i+j,i)], 2^(N(N+1)/2), equal)`.
pub fn verify_catalan_determinant(n: usize) -> (ExactInt, ExactInt, bool) {
    let det = det_exact(&catalan_matrix(n as i64).expect("non-negative size"));
    let expected = pow2((n * (n + 1) / 2) as u64);
    let ok = det == expected;
    (det, expected, ok)
}
