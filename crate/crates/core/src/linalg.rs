//! Dense exact linear and bilinear algebra.
//!
//! Linear maps use the column convention: column `j` holds the coordinates
//! of the image of basis vector `j`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{check_dim, Error, Result};
use crate::field::Field;

/// Coordinates of a vector in a fixed basis.
pub type Vector<F> = Vec<<F as Field>::Elem>;

/// Coefficients of a linear functional on a space with a fixed basis.
pub type LinearFunctional<F> = Vec<<F as Field>::Elem>;

/// Coordinate-wise vector arithmetic, available on every field.
pub trait VectorOps: Field {
    fn zero_vec(&self, n: usize) -> Vector<Self> {
        vec![self.zero(); n]
    }

    fn unit_vec(&self, n: usize, i: usize) -> Vector<Self> {
        let mut v = self.zero_vec(n);
        v[i] = self.one();
        v
    }

    fn vadd(&self, u: &[Self::Elem], w: &[Self::Elem]) -> Vector<Self> {
        u.iter().zip(w).map(|(a, b)| self.add(a, b)).collect()
    }

    fn vsub(&self, u: &[Self::Elem], w: &[Self::Elem]) -> Vector<Self> {
        u.iter().zip(w).map(|(a, b)| self.sub(a, b)).collect()
    }

    fn vneg(&self, u: &[Self::Elem]) -> Vector<Self> {
        u.iter().map(|a| self.neg(a)).collect()
    }

    fn vscale(&self, c: &Self::Elem, u: &[Self::Elem]) -> Vector<Self> {
        u.iter().map(|a| self.mul(c, a)).collect()
    }

    /// `acc += c * w`
    fn axpy(&self, acc: &mut [Self::Elem], c: &Self::Elem, w: &[Self::Elem]) {
        if self.is_zero(c) {
            return;
        }
        for (a, b) in acc.iter_mut().zip(w) {
            if !self.is_zero(b) {
                *a = self.add(a, &self.mul(c, b));
            }
        }
    }

    fn vis_zero(&self, u: &[Self::Elem]) -> bool {
        u.iter().all(|a| self.is_zero(a))
    }

    fn dot(&self, u: &[Self::Elem], w: &[Self::Elem]) -> Self::Elem {
        u.iter()
            .zip(w)
            .fold(self.zero(), |acc, (a, b)| self.add(&acc, &self.mul(a, b)))
    }

    fn vsum<'a, I>(&self, n: usize, terms: I) -> Vector<Self>
    where
        I: IntoIterator<Item = &'a Vector<Self>>,
        Self: 'a,
    {
        let mut acc = self.zero_vec(n);
        let one = self.one();
        for t in terms {
            self.axpy(&mut acc, &one, t);
        }
        acc
    }
}

impl<F: Field> VectorOps for F {}

/// A dense matrix, also used for linear maps between coordinate spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Linear maps are matrices in the column convention.
pub type LinearMap<F> = Matrix<F>;

impl<F: Field> Matrix<F> {
    pub fn zeros(k: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![k.zero(); rows * cols],
        }
    }

    pub fn identity(k: &F, n: usize) -> Self {
        let mut m = Self::zeros(k, n, n);
        for i in 0..n {
            m.set(i, i, k.one());
        }
        m
    }

    /// Builds a matrix from row-major data.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        check_dim("matrix data", rows * cols, data.len())?;
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_columns(k: &F, rows: usize, columns: &[Vector<F>]) -> Result<Self> {
        let mut m = Self::zeros(k, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            check_dim("matrix column", rows, c.len())?;
            m.set_column(j, c);
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[F::Elem]) {
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    pub fn is_zero(&self, k: &F) -> bool {
        k.vis_zero(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `self * v`. Panics on a length mismatch.
    pub fn apply(&self, k: &F, v: &[F::Elem]) -> Vector<F> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| k.dot(self.row(i), v)).collect()
    }

    /// `self ∘ other`, i.e. the matrix product `self * other`.
    pub fn compose(&self, k: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !k.is_zero(b) {
                        let idx = i * out.cols + j;
                        out.data[idx] = k.add(&out.data[idx], &k.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, k: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: k.vadd(&self.data, &other.data),
        }
    }

    pub fn sub(&self, k: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: k.vsub(&self.data, &other.data),
        }
    }

    pub fn scale(&self, k: &F, c: &F::Elem) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: k.vscale(c, &self.data),
        }
    }

    pub fn neg(&self, k: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: k.vneg(&self.data),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, k: &F, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(k, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vconcat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_block(&self, start: usize, end: usize) -> Self {
        Matrix {
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// Columns `start..end` as a new matrix.
    pub fn column_block(&self, start: usize, end: usize) -> Self {
        Self::from_fn(self.rows, end - start, |i, j| self.get(i, start + j).clone())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self, k: &F) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !k.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = k.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = k.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if k.is_zero(&factor) {
                    continue;
                }
                let factor = k.neg(&factor);
                let start = i * m.cols;
                k.axpy(&mut m.data[start..start + m.cols], &factor, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, k: &F) -> usize {
        self.rref(k).1.len()
    }

    pub fn is_invertible(&self, k: &F) -> bool {
        self.is_square() && self.rank(k) == self.rows
    }

    pub fn inverse(&self, k: &F) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hconcat(k, &Self::identity(k, n));
        let (r, pivots) = aug.rref(k);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(r.column_block(n, 2 * n))
    }

    /// Basis of the null space, as the columns of a `cols x nullity` matrix.
    pub fn kernel(&self, k: &F) -> Self {
        let (r, pivots) = self.rref(k);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(k, self.cols, free.len());
        for (b, &fc) in free.iter().enumerate() {
            basis.set(fc, b, k.one());
            for (row, &pc) in pivots.iter().enumerate() {
                basis.set(pc, b, k.neg(r.get(row, fc)));
            }
        }
        basis
    }

    /// A basis (column-echelon, deterministic) of the column space.
    pub fn column_space(&self, k: &F) -> Self {
        let (r, pivots) = self.transpose().rref(k);
        r.row_block(0, pivots.len()).transpose()
    }

    pub fn trace(&self, k: &F) -> F::Elem {
        (0..self.rows.min(self.cols)).fold(k.zero(), |acc, i| k.add(&acc, self.get(i, i)))
    }
}

/// The affine solution set `particular + span(kernel columns)` of `M x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution<F: Field> {
    pub particular: Vector<F>,
    pub kernel: Matrix<F>,
}

impl<F: Field> AffineSolution<F> {
    pub fn dimension(&self) -> usize {
        self.kernel.cols()
    }

    /// `particular + Σ coeffs_i kernel_i`.
    pub fn point(&self, k: &F, coeffs: &[F::Elem]) -> Vector<F> {
        let mut v = self.particular.clone();
        for (j, c) in coeffs.iter().enumerate() {
            k.axpy(&mut v, c, &self.kernel.column(j));
        }
        v
    }
}

/// Solves `system * x = rhs` exactly. Returns `None` when inconsistent.
pub fn solve_linear<F: Field>(
    k: &F,
    system: &Matrix<F>,
    rhs: &[F::Elem],
) -> Result<Option<AffineSolution<F>>> {
    check_dim("right-hand side", system.rows(), rhs.len())?;
    let n = system.cols();
    let mut aug = Matrix::zeros(k, system.rows(), n + 1);
    for i in 0..system.rows() {
        for j in 0..n {
            aug.set(i, j, system.get(i, j).clone());
        }
        aug.set(i, n, rhs[i].clone());
    }
    let (r, pivots) = aug.rref(k);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = k.zero_vec(n);
    for (row, &pc) in pivots.iter().enumerate() {
        particular[pc] = r.get(row, n).clone();
    }
    Ok(Some(AffineSolution {
        particular,
        kernel: system.kernel(k),
    }))
}

/// Coordinates of `v` in the (linearly independent) columns of `basis`,
/// or `None` when `v` is outside their span.
pub fn coordinates<F: Field>(k: &F, basis: &Matrix<F>, v: &[F::Elem]) -> Option<Vector<F>> {
    solve_linear(k, basis, v).ok().flatten().map(|s| s.particular)
}

pub fn in_span<F: Field>(k: &F, basis: &Matrix<F>, v: &[F::Elem]) -> bool {
    coordinates(k, basis, v).is_some()
}

/// Whether two sets of columns span the same subspace.
pub fn same_span<F: Field>(k: &F, a: &Matrix<F>, b: &Matrix<F>) -> bool {
    a.column_space(k) == b.column_space(k)
}

/// A bilinear map `k^left x k^right -> k^target` stored as the tensor of
/// images of basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearMap<F: Field> {
    left: usize,
    right: usize,
    target: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> BilinearMap<F> {
    pub fn zero(k: &F, left: usize, right: usize, target: usize) -> Self {
        BilinearMap {
            left,
            right,
            target,
            data: vec![k.zero(); left * right * target],
        }
    }

    pub fn from_fn(
        k: &F,
        left: usize,
        right: usize,
        target: usize,
        mut f: impl FnMut(usize, usize) -> Vector<F>,
    ) -> Self {
        let mut m = Self::zero(k, left, right, target);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                m.set(i, j, &v);
            }
        }
        m
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }
    pub fn right_dim(&self) -> usize {
        self.right
    }
    pub fn target_dim(&self) -> usize {
        self.target
    }

    /// `(left, right, target)`
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.target)
    }

    /// Image of the basis pair `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &[F::Elem] {
        let start = (i * self.right + j) * self.target;
        &self.data[start..start + self.target]
    }

    pub fn set(&mut self, i: usize, j: usize, v: &[F::Elem]) {
        assert_eq!(v.len(), self.target, "bilinear entry has wrong length");
        let start = (i * self.right + j) * self.target;
        self.data[start..start + self.target].clone_from_slice(v);
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_symmetric(&mut self, i: usize, j: usize, v: &[F::Elem]) {
        self.set(i, j, v);
        self.set(j, i, v);
    }

    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn is_zero(&self, k: &F) -> bool {
        k.vis_zero(&self.data)
    }

    /// `Σ u_i w_j c[i][j]`. Panics on a length mismatch.
    pub fn apply(&self, k: &F, u: &[F::Elem], w: &[F::Elem]) -> Vector<F> {
        assert_eq!(u.len(), self.left, "bilinear left argument length");
        assert_eq!(w.len(), self.right, "bilinear right argument length");
        let mut out = k.zero_vec(self.target);
        for (i, ui) in u.iter().enumerate() {
            if k.is_zero(ui) {
                continue;
            }
            for (j, wj) in w.iter().enumerate() {
                if k.is_zero(wj) {
                    continue;
                }
                let c = k.mul(ui, wj);
                k.axpy(&mut out, &c, self.get(i, j));
            }
        }
        out
    }

    /// `apply` with basis vector `i` in the left slot.
    pub fn apply_left_basis(&self, k: &F, i: usize, w: &[F::Elem]) -> Vector<F> {
        let mut out = k.zero_vec(self.target);
        for (j, wj) in w.iter().enumerate() {
            k.axpy(&mut out, wj, self.get(i, j));
        }
        out
    }

    /// `apply` with basis vector `j` in the right slot.
    pub fn apply_right_basis(&self, k: &F, u: &[F::Elem], j: usize) -> Vector<F> {
        let mut out = k.zero_vec(self.target);
        for (i, ui) in u.iter().enumerate() {
            k.axpy(&mut out, ui, self.get(i, j));
        }
        out
    }

    /// The linear map `w -> m(u, w)` as a `target x right` matrix.
    pub fn left_operator(&self, k: &F, u: &[F::Elem]) -> Matrix<F> {
        let mut m = Matrix::zeros(k, self.target, self.right);
        for j in 0..self.right {
            m.set_column(j, &self.apply_right_basis(k, u, j));
        }
        m
    }

    /// Basis pairs `(i, j)`, `i < j`, where `c[i][j] != c[j][i]`.
    pub fn asymmetric_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if self.left != self.right {
            return out;
        }
        for i in 0..self.left {
            for j in i + 1..self.right {
                if self.get(i, j) != self.get(j, i) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.left == self.right && self.asymmetric_pairs().is_empty()
    }

    pub fn scale(&self, k: &F, c: &F::Elem) -> Self {
        BilinearMap {
            data: k.vscale(c, &self.data),
            ..self.clone()
        }
    }

    pub fn add(&self, k: &F, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        BilinearMap {
            data: k.vadd(&self.data, &other.data),
            ..self.clone()
        }
    }
}

/// Builds the projection `p` onto the first block along the second block,
/// in coordinates of the first block: `p(a_i) = e_i`, `p(c_j) = 0`.
pub fn projection_along<F: Field>(
    k: &F,
    block: &Matrix<F>,
    complement: &Matrix<F>,
) -> Result<Matrix<F>> {
    check_dim("complement rows", block.rows(), complement.rows())?;
    let joined = block.hconcat(k, complement);
    if joined.cols() != joined.rows() {
        return Err(Error::Invalid(alloc::format!(
            "subspaces of dimensions {} and {} cannot be complementary in dimension {}",
            block.cols(),
            complement.cols(),
            block.rows()
        )));
    }
    let inv = joined
        .inverse(k)
        .ok_or_else(|| Error::Invalid("subspaces are not complementary".into()))?;
    Ok(inv.row_block(0, block.cols()))
}
