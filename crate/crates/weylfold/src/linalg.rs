//! Dense exact matrices.
//!
//! Three entry domains cover the crate: [`IMat`] over `i64` with checked
//! arithmetic (Weyl elements, Cartan matrices, root coordinates; entries are
//! provably tiny, overflow aborts instead of wrapping), and the generic
//! [`Mat`] instantiated as [`ZMat`] (`BigInt`: lattice bases, Smith normal
//! form) and [`QMat`] (`BigRational`: Gram matrices, exact solving, congruent
//! diagonalization).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Entry requirements for the generic matrix.
pub trait Entry: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}
impl<T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>> Entry for T {}

/// Dense row-major matrix over an exact scalar type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Arbitrary-precision integer matrix.
pub type ZMat = Mat<BigInt>;
/// Arbitrary-precision rational matrix.
pub type QMat = Mat<BigRational>;

impl<T: Entry> Mat<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Build from nested rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Build entrywise from a function of (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Diagonal matrix from its entries.
    pub fn from_diag(diag: Vec<T>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product; panics on shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
            }
            acc
        })
    }

    /// Entrywise difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, below: &Self) -> Self {
        assert_eq!(self.cols, below.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Mat {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    /// Entrywise map into another scalar type.
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Whether the matrix equals its transpose.
    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[&Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(n, c);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(ro + i, co + j)] = b[(i, j)].clone();
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, c: &T) {
        for j in 0..self.cols {
            let add = c.clone() * self[(src, j)].clone();
            self[(dst, j)] = self[(dst, j)].clone() + add;
        }
    }

    /// col[dst] += c * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, c: &T) {
        for i in 0..self.rows {
            let add = c.clone() * self[(i, src)].clone();
            self[(i, dst)] = self[(i, dst)].clone() + add;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Smith normal form `u * a * v = d` with unimodular `u`, `v` and `d` diagonal
/// with nonnegative entries in a divisibility chain.
#[derive(Clone, Debug)]
pub struct Snf {
    /// Diagonalized matrix, same shape as the input.
    pub d: ZMat,
    /// Unimodular row transform.
    pub u: ZMat,
    /// Unimodular column transform.
    pub v: ZMat,
}

impl Snf {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

impl ZMat {
    /// Smith normal form with both transforms.
    pub fn snf(&self) -> Snf {
        let (m, n) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = ZMat::identity(m);
        let mut v = ZMat::identity(n);
        let mut t = 0;
        while t < m.min(n) {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !d[(i, j)].is_zero()
                        && pivot.map_or(true, |(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            'reduce: loop {
                for i in t + 1..m {
                    if d[(i, t)].is_zero() {
                        continue;
                    }
                    let q = -(&d[(i, t)] / &d[(t, t)]);
                    if !q.is_zero() {
                        d.row_axpy(i, t, &q);
                        u.row_axpy(i, t, &q);
                    }
                    if !d[(i, t)].is_zero() {
                        d.swap_rows(i, t);
                        u.swap_rows(i, t);
                    }
                    continue 'reduce;
                }
                for j in t + 1..n {
                    if d[(t, j)].is_zero() {
                        continue;
                    }
                    let q = -(&d[(t, j)] / &d[(t, t)]);
                    if !q.is_zero() {
                        d.col_axpy(j, t, &q);
                        v.col_axpy(j, t, &q);
                    }
                    if !d[(t, j)].is_zero() {
                        d.swap_cols(j, t);
                        v.swap_cols(j, t);
                    }
                    continue 'reduce;
                }
                for i in t + 1..m {
                    for j in t + 1..n {
                        if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                            let one = BigInt::one();
                            d.row_axpy(t, i, &one);
                            u.row_axpy(t, i, &one);
                            continue 'reduce;
                        }
                    }
                }
                break;
            }
            if d[(t, t)].is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        Snf { d, u, v }
    }

    /// Basis of the integer kernel `{x : self · x = 0}`, returned as rows.
    /// The kernel lattice is saturated by construction.
    pub fn kernel_basis(&self) -> ZMat {
        let snf = self.snf();
        let rank = snf.rank();
        let v = snf.v;
        let n = self.cols;
        let mut rows = Vec::new();
        for j in rank..n {
            rows.push((0..n).map(|i| v[(i, j)].clone()).collect());
        }
        if rows.is_empty() {
            Mat {
                rows: 0,
                cols: n,
                data: Vec::new(),
            }
        } else {
            ZMat::from_rows(rows)
        }
    }

    /// Exact determinant (square matrices).
    pub fn det(&self) -> BigInt {
        let q = self.to_q().det();
        debug_assert!(q.is_integer());
        q.to_integer()
    }

    /// Promote to a rational matrix.
    pub fn to_q(&self) -> QMat {
        self.map(|x| BigRational::from_integer(x.clone()))
    }
}

impl QMat {
    /// Exact determinant via fraction Gaussian elimination.
    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigRational::zero();
            };
            if p != k {
                a.swap_rows(k, p);
                det = -det;
            }
            det *= a[(k, k)].clone();
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let c = -(&a[(i, k)] / &a[(k, k)]);
                a.row_axpy(i, k, &c);
            }
        }
        det
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..m).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            for i in 0..m {
                if i != rank && !a[(i, col)].is_zero() {
                    let c = -(&a[(i, col)] / &a[(rank, col)]);
                    a.row_axpy(i, rank, &c);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solve `self · x = rhs` exactly. Returns `None` when the system is
    /// inconsistent or the solution is not unique (rank below column count).
    pub fn solve(&self, rhs: &QMat) -> Option<QMat> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        let (m, n, k) = (self.rows, self.cols, rhs.cols);
        let mut a = self.clone();
        let mut b = rhs.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..m).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            b.swap_rows(r, p);
            let inv = a[(r, col)].recip();
            for j in 0..n {
                a[(r, j)] = &a[(r, j)] * &inv;
            }
            for j in 0..k {
                b[(r, j)] = &b[(r, j)] * &inv;
            }
            for i in 0..m {
                if i != r && !a[(i, col)].is_zero() {
                    let c = -a[(i, col)].clone();
                    a.row_axpy(i, r, &c);
                    b.row_axpy(i, r, &c);
                }
            }
            pivot_cols.push(col);
            r += 1;
        }
        if r < n {
            return None;
        }
        for i in r..m {
            if (0..k).any(|j| !b[(i, j)].is_zero()) {
                return None;
            }
        }
        let mut x = QMat::zeros(n, k);
        for (row, &col) in pivot_cols.iter().enumerate() {
            for j in 0..k {
                x[(col, j)] = b[(row, j)].clone();
            }
        }
        Some(x)
    }

    /// Exact inverse of a nonsingular square matrix.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        self.solve(&QMat::identity(self.rows))
    }

    /// Signature `(positive, negative, zero)` of a symmetric matrix, computed
    /// by exact congruent diagonalization.
    pub fn signature(&self) -> (usize, usize, usize) {
        assert!(self.is_symmetric(), "signature of a non-symmetric matrix");
        let n = self.rows;
        let mut s = self.clone();
        let (mut pos, mut neg, mut zero) = (0, 0, 0);
        for k in 0..n {
            if s[(k, k)].is_zero() {
                if let Some(l) = (k + 1..n).find(|&l| !s[(l, l)].is_zero()) {
                    s.swap_rows(k, l);
                    s.swap_cols(k, l);
                } else if let Some(l) = (k + 1..n).find(|&l| !s[(k, l)].is_zero()) {
                    let one = BigRational::one();
                    s.row_axpy(k, l, &one);
                    s.col_axpy(k, l, &one);
                } else {
                    zero += 1;
                    continue;
                }
            }
            if s[(k, k)].is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if s[(i, k)].is_zero() {
                    continue;
                }
                let c = -(&s[(i, k)] / &s[(k, k)]);
                s.row_axpy(i, k, &c);
                s.col_axpy(i, k, &c);
            }
        }
        (pos, neg, zero)
    }

    /// Whether every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(BigRational::is_integer)
    }

    /// Demote to an integer matrix; `None` unless every entry is an integer.
    pub fn to_z(&self) -> Option<ZMat> {
        if !self.is_integral() {
            return None;
        }
        Some(self.map(|x| x.to_integer()))
    }

    /// Pairing `aᵀ · self · b` of two integer coordinate vectors.
    pub fn pair_i64(&self, a: &[i64], b: &[i64]) -> BigRational {
        assert_eq!(a.len(), self.rows);
        assert_eq!(b.len(), self.cols);
        let mut acc = BigRational::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                acc += &self[(i, j)] * BigRational::from_integer(BigInt::from(ai * bj));
            }
        }
        acc
    }
}

/// Dense `i64` matrix with checked arithmetic. Any overflow panics; results
/// are therefore exact whenever they are produced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IMat {
    /// Zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Build from nested rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Build entrywise from a function of (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IMat { rows, cols, data }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Checked matrix product; panics on shape mismatch or overflow.
    pub fn mul(&self, rhs: &IMat) -> IMat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = 0i64;
            for k in 0..self.cols {
                acc = self[(i, k)]
                    .checked_mul(rhs[(k, j)])
                    .and_then(|p| acc.checked_add(p))
                    .expect("i64 overflow in exact matrix arithmetic");
            }
            acc
        })
    }

    /// Checked matrix-vector product (column vector).
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(
            self.cols,
            v.len(),
            "shape mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|i| {
                let mut acc = 0i64;
                for k in 0..self.cols {
                    acc = self[(i, k)]
                        .checked_mul(v[k])
                        .and_then(|p| acc.checked_add(p))
                        .expect("i64 overflow in exact matrix arithmetic");
                }
                acc
            })
            .collect()
    }

    /// Whether the matrix equals its transpose.
    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Promote to an arbitrary-precision integer matrix.
    pub fn to_z(&self) -> ZMat {
        ZMat::from_fn(self.rows, self.cols, |i, j| BigInt::from(self[(i, j)]))
    }

    /// Promote to a rational matrix.
    pub fn to_q(&self) -> QMat {
        QMat::from_fn(self.rows, self.cols, |i, j| {
            BigRational::from_integer(BigInt::from(self[(i, j)]))
        })
    }
}

impl Index<(usize, usize)> for IMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(
                f,
                "[{}]",
                self.row(i)
                    .iter()
                    .map(|x| alloc::format!("{x}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}
