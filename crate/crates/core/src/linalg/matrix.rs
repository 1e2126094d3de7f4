use std::fmt;

use num_traits::{One, Zero};

use super::LinalgError;
use crate::ring::{LaurentPoly, Rational};

/// Commutative ring element usable as a matrix entry.
///
/// `zero_like`/`one_like` exist because Laurent polynomials carry their
/// variable context, so constants have to be minted from an existing entry.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
}

// Matrix entries always share one context, so the fallible ring operations
// cannot fail here.
impl Scalar for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.context())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.context())
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("matrix entries share a context")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("matrix entries share a context")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("matrix entries share a context")
    }
    fn negate(&self) -> Self {
        self.neg()
    }
}

/// Dense row-major matrix.
///
/// Generator matrices act on column vectors from the left: column `j` is the
/// image of the `j`-th basis vector.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// `n × n` identity built from the ring of `proto`.
    pub fn identity(n: usize, proto: &T) -> Self {
        let zero = proto.zero_like();
        let one = proto.one_like();
        let data = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    one.clone()
                } else {
                    zero.clone()
                }
            })
            .collect();
        Matrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn zeros(rows: usize, cols: usize, proto: &T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![proto.zero_like(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc: Option<T> = None;
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if a.vanishes() || b.vanishes() {
                        continue;
                    }
                    let p = a.times(b);
                    acc = Some(match acc {
                        Some(s) => s.plus(&p),
                        None => p,
                    });
                }
                data.push(acc.unwrap_or_else(|| self.data[0].zero_like()));
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.data[0].zero_like(), |acc, (a, b)| {
                        acc.plus(&a.times(b))
                    })
            })
            .collect())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::Shape(
                "sum of differently shaped matrices".into(),
            ));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| x.times(k))
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Kronecker product; entry `((i,k),(j,l))` is `self[i][j] · rhs[k][l]`
    /// with row index `i·rhs.rows + k`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..self.rows {
            for k in 0..rhs.rows {
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    for l in 0..rhs.cols {
                        data.push(a.times(rhs.get(k, l)));
                    }
                }
            }
        }
        Matrix { rows, cols, data }
    }

    /// Top-left `rows × cols` block.
    pub fn leading_block(&self, rows: usize, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            data.extend_from_slice(&self.row(r)[..cols]);
        }
        Matrix { rows, cols, data }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        *x == x.one_like()
                    } else {
                        x.vanishes()
                    }
                })
            })
    }

    /// Determinant by Laplace expansion along rows, memoized over column
    /// subsets; division-free, so it works over any commutative ring.
    pub fn det(&self) -> Result<T, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        if n == 0 {
            return Err(LinalgError::Shape("empty matrix".into()));
        }
        if n > 20 {
            return Err(LinalgError::Shape("determinant limited to n <= 20".into()));
        }
        let zero = self.data[0].zero_like();
        // minors[mask] = det of rows (n - |mask|).. against the columns in mask
        let mut minors: Vec<Option<T>> = vec![None; 1 << n];
        minors[0] = Some(self.data[0].one_like());
        for mask in 1usize..(1 << n) {
            let row = n - mask.count_ones() as usize;
            let mut acc = zero.clone();
            let mut sign_neg = false;
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let entry = self.get(row, c);
                if !entry.vanishes() {
                    if let Some(sub) = &minors[mask & !(1 << c)] {
                        let term = entry.times(sub);
                        acc = if sign_neg {
                            acc.minus(&term)
                        } else {
                            acc.plus(&term)
                        };
                    }
                }
                sign_neg = !sign_neg;
            }
            minors[mask] = Some(acc);
        }
        Ok(minors[(1 << n) - 1].take().unwrap())
    }
}

impl Matrix<Rational> {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::ring::integer(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn identity_q(n: usize) -> Self {
        Matrix::identity(n, &Rational::zero())
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Matrix::identity_q(n).to_rows();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(LinalgError::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip();
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x *= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let d = &f * &a[col][c];
                    a[r][c] -= d;
                    let d = &f * &inv[col][c];
                    inv[r][c] -= d;
                }
            }
        }
        Matrix::from_rows(inv)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Characteristic polynomial `det(xI − A)`, coefficients from the
    /// constant term up (Faddeev–LeVerrier).
    pub fn charpoly(&self) -> Result<Vec<Rational>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape(
                "characteristic polynomial of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Matrix::zeros(n, n, &Rational::zero());
        let id = Matrix::identity_q(n);
        for k in 1..=n {
            m = self.mul(&m)?.add(&id.scale(&coeffs[n - k + 1]))?;
            let am = self.mul(&m)?;
            coeffs[n - k] = -am.trace() / crate::ring::integer(k as i64);
        }
        Ok(coeffs)
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.data[r * self.cols + c].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
