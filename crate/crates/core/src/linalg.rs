//! Exact rational linear algebra over coordinate vectors.
//!
//! Every question the rest of the crate asks about Lie algebras (is this
//! subspace closed, what is the intersection, which element solves this
//! system) is reduced to the primitives in this module. Nothing here uses
//! floating point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rational = BigRational;

/// A coordinate vector.
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// `Σ coeffs[i] * vectors[i]`; `n` is the ambient dimension.
pub fn combine(n: usize, coeffs: &[Rational], vectors: &[Vector]) -> Vector {
    let mut out = zero_vector(n);
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Matrix unit `E_{ij}` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m[(i, j)] = Rational::one();
        m
    }

    pub fn from_rows(rows: &[Vector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    /// Builds a matrix from small integers; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let vecs: Vec<Vector> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Matrix::from_rows(&vecs).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, cols: &[Vector]) -> Self {
        let mut m = Matrix::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
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

    pub fn as_flat(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| c * x).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.rows, "incompatible matrix product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vector(n, i));
                r
            })
            .collect();
        let (reduced, pivots) = rref(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let inv: Vec<Vector> = reduced.iter().map(|r| r[n..].to_vec()).collect();
        Matrix::from_rows(&inv).ok()
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vectors();
        rref(&mut rows, self.cols).1.len()
    }

    /// Integer power for square matrices.
    pub fn pow(&self, k: usize) -> Matrix {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(format_rational).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Reduced row-echelon form in place. Returns the nonzero rows and the pivot
/// columns. Pivots are chosen by column order only.
pub(crate) fn rref(rows: &mut [Vector], ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows[..r].to_vec(), pivots)
}

/// Null space of `m` viewed as a map `Q^cols -> Q^rows`.
pub fn kernel(m: &Matrix) -> Subspace {
    kernel_of_rows(m.row_vectors(), m.cols)
}

fn kernel_of_rows(mut rows: Vec<Vector>, ncols: usize) -> Subspace {
    let (reduced, pivots) = rref(&mut rows, ncols);
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vector(ncols);
        v[free] = Rational::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    Subspace::span_unchecked(ncols, basis)
}

/// One solution of `m x = b` (free variables set to zero), or `None`.
pub fn solve(m: &Matrix, b: &[Rational]) -> Option<Vector> {
    assert_eq!(m.rows, b.len());
    let n = m.cols;
    let mut rows: Vec<Vector> = (0..m.rows)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = zero_vector(n);
    for (row, &p) in reduced.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// A linear subspace of `Q^n`, stored by its reduced row-echelon basis.
///
/// The representation is unique, so derived equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

/// Which combination [`subspace_combine`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Intersect,
    ComplementIn,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(), pivots: (0..ambient).collect() }
    }

    /// Canonical basis of the span of `vectors` in `Q^ambient`.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch { expected: ambient, found: v.len() });
        }
        Ok(Self::span_unchecked(ambient, vectors.to_vec()))
    }

    pub(crate) fn span_unchecked(ambient: usize, mut vectors: Vec<Vector>) -> Self {
        let (basis, pivots) = rref(&mut vectors, ambient);
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient != n {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: n });
        }
        Ok(())
    }

    /// Coordinates of `v` in this subspace's basis, or `None` if `v` is not
    /// a member.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = combine(self.ambient, &coords, &self.basis);
        (rebuilt.as_slice() == v).then_some(coords)
    }

    /// Membership with a dimension check.
    pub fn membership(&self, v: &[Rational]) -> Result<Option<Vector>> {
        self.check_ambient(v.len())?;
        Ok(self.coordinates(v))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    /// The vector with the given coordinates in this basis.
    pub fn element(&self, coords: &[Rational]) -> Vector {
        combine(self.ambient, coords, &self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Self::span_unchecked(self.ambient, all))
    }

    /// Linear functionals vanishing on this subspace, as a basis of row vectors.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        kernel_of_rows(self.basis.clone(), self.ambient)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let mut stacked = self.annihilator().basis;
        stacked.extend(other.annihilator().basis);
        if stacked.is_empty() {
            return Ok(Subspace::full(self.ambient));
        }
        Ok(kernel_of_rows(stacked, self.ambient))
    }

    /// Canonical complement of `self` inside `container`: the container's
    /// echelon rows whose pivot columns are not pivots of `self`.
    pub fn complement_in(&self, container: &Subspace) -> Result<Subspace> {
        container.check_ambient(self.ambient)?;
        if !container.contains_subspace(self) {
            return Err(Error::NotContained);
        }
        let rows: Vec<Vector> = container
            .basis
            .iter()
            .zip(&container.pivots)
            .filter(|(_, p)| !self.pivots.contains(p))
            .map(|(v, _)| v.clone())
            .collect();
        Ok(Self::span_unchecked(self.ambient, rows))
    }

    /// Image under a linear map given as a `m × ambient` matrix.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols, self.ambient);
        let vs: Vec<Vector> = self.basis.iter().map(|v| map.mul_vec(v)).collect();
        Self::span_unchecked(map.rows, vs)
    }

    /// Matrix whose rows are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::zeros(0, self.ambient);
        }
        Matrix::from_rows(&self.basis).expect("basis rows share a length")
    }
}

/// `canonical_basis` entry point: the unique echelon representation of a span.
pub fn canonical_basis(ambient: usize, vectors: &[Vector]) -> Result<Subspace> {
    Subspace::span(ambient, vectors)
}

pub fn subspace_combine(a: &Subspace, b: &Subspace, kind: Combine) -> Result<Subspace> {
    match kind {
        Combine::Sum => a.sum(b),
        Combine::Intersect => a.intersect(b),
        Combine::ComplementIn => a.complement_in(b),
    }
}

/// Decomposition of a vector along an internal direct sum of subspaces.
#[derive(Clone, Debug)]
pub struct DirectSum {
    parts: Vec<Subspace>,
    total: Subspace,
    offsets: Vec<usize>,
    stacked: Matrix,
}

impl DirectSum {
    /// Fails with `NotDirect` when the parts overlap.
    pub fn new(parts: Vec<Subspace>) -> Result<Self> {
        let ambient = parts.first().map_or(0, Subspace::ambient_dim);
        Self::in_ambient(ambient, parts)
    }

    /// Like [`DirectSum::new`], but well defined for an empty list of parts.
    pub fn in_ambient(ambient: usize, parts: Vec<Subspace>) -> Result<Self> {
        let mut cols = Vec::new();
        let mut offsets = Vec::new();
        for p in &parts {
            p.check_ambient(ambient)?;
            offsets.push(cols.len());
            cols.extend(p.basis.iter().cloned());
        }
        let total = Subspace::span_unchecked(ambient, cols.clone());
        if total.dim() != cols.len() {
            return Err(Error::NotDirect);
        }
        Ok(DirectSum { parts, total, offsets, stacked: Matrix::from_columns(ambient, &cols) })
    }

    pub fn total(&self) -> &Subspace {
        &self.total
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    /// Components of `v` in each part, or `None` if `v` is outside the sum.
    pub fn components(&self, v: &[Rational]) -> Option<Vec<Vector>> {
        if !self.total.contains(v) {
            return None;
        }
        let ambient = self.total.ambient;
        if self.total.dim() == 0 {
            return Some(self.parts.iter().map(|_| zero_vector(ambient)).collect());
        }
        let coeffs = solve(&self.stacked, v)?;
        Some(
            self.parts
                .iter()
                .zip(&self.offsets)
                .map(|(p, &o)| combine(ambient, &coeffs[o..o + p.dim()], &p.basis))
                .collect(),
        )
    }

    /// Projection onto part `i` along the others.
    pub fn project(&self, i: usize, v: &[Rational]) -> Option<Vector> {
        self.components(v).map(|mut c| c.swap_remove(i))
    }

    pub fn project_subspace(&self, i: usize, s: &Subspace) -> Option<Subspace> {
        let vs = s.basis.iter().map(|v| self.project(i, v)).collect::<Option<Vec<_>>>()?;
        Some(Subspace::span_unchecked(self.total.ambient, vs))
    }
}

/// Signature of a symmetric rational matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn is_negative_definite(&self) -> bool {
        self.positive == 0 && self.zero == 0
    }

    pub fn is_negative_semidefinite(&self) -> bool {
        self.positive == 0
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }
}

/// Exact inertia by symmetric pivoting (congruence transformations only).
pub fn inertia(sym: &Matrix) -> Result<Inertia> {
    if !sym.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = sym.rows;
    let mut a = sym.clone();
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut k = 0;
    while k < n {
        let diag = (k..n).find(|&i| !a[(i, i)].is_zero());
        let p = match diag {
            Some(p) => p,
            None => {
                let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero());
                let Some((i, j)) = off else {
                    out.zero += n - k;
                    break;
                };
                // row/col i += row/col j makes the (i, i) entry 2 a_ij
                for c in 0..n {
                    let v = a[(j, c)].clone();
                    a[(i, c)] += v;
                }
                for r in 0..n {
                    let v = a[(r, j)].clone();
                    a[(r, i)] += v;
                }
                i
            }
        };
        symmetric_swap(&mut a, k, p);
        let pivot = a[(k, k)].clone();
        if pivot.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &pivot;
            for c in k..n {
                let v = &f * &a[(k, c)];
                a[(i, c)] -= v;
            }
            for r in k..n {
                let v = &f * &a[(r, k)];
                a[(r, i)] -= v;
            }
        }
        k += 1;
    }
    Ok(out)
}

fn symmetric_swap(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows;
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

/// Characteristic polynomial `det(xI - A)`, coefficients from degree 0 up
/// (Faddeev-LeVerrier).
pub fn characteristic_polynomial(a: &Matrix) -> Vec<Rational> {
    assert!(a.is_square());
    let n = a.rows;
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&m);
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        m = next;
        let am = a.mul(&m);
        coeffs[n - k] = -am.trace() / rat(k as i64);
    }
    coeffs
}

/// Error raised by [`rational_eigenvalues`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumFailure {
    /// Some eigenvalue is not rational.
    Irrational,
    /// All eigenvalues are rational but eigenspaces do not fill the space.
    NotDiagonalizable,
}

/// Distinct eigenvalues and eigenspaces of a diagonalizable matrix with
/// rational spectrum, in increasing order of eigenvalue.
pub fn rational_eigenspaces(a: &Matrix) -> std::result::Result<Vec<(Rational, Subspace)>, SpectrumFailure> {
    let n = a.rows;
    if n == 0 {
        return Ok(Vec::new());
    }
    // Scale to an integer matrix: rational eigenvalues are then integers.
    let scale = a
        .as_flat()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scale_q = Rational::from_integer(scale.clone());
    let m = a.scale(&scale_q);
    let poly = characteristic_polynomial(&m);
    let int_poly: Vec<BigInt> = poly.iter().map(|c| c.to_integer()).collect();
    let roots = integer_roots(&int_poly, &m);
    let found: usize = roots.iter().map(|(_, mult)| mult).sum();
    if found < n {
        return Err(SpectrumFailure::Irrational);
    }
    let mut out = Vec::new();
    let mut total = 0;
    for (root, _) in roots {
        let lambda = Rational::new(root, scale.clone());
        let mut shifted = a.clone();
        for i in 0..n {
            shifted[(i, i)] -= &lambda;
        }
        let space = kernel(&shifted);
        total += space.dim();
        out.push((lambda, space));
    }
    if total < n {
        return Err(SpectrumFailure::NotDiagonalizable);
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Integer roots with multiplicity of a monic integer polynomial, given as
/// coefficients from degree 0 up. Candidates are bounded by the row-sum norm
/// of the matrix the polynomial came from and must divide the lowest nonzero
/// coefficient.
fn integer_roots(poly: &[BigInt], m: &Matrix) -> Vec<(BigInt, usize)> {
    let mut p: Vec<BigInt> = poly.to_vec();
    let mut roots = Vec::new();
    let zero_mult = p.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((BigInt::zero(), zero_mult));
        p.drain(..zero_mult);
    }
    if p.len() <= 1 {
        return roots;
    }
    let norm = (0..m.rows)
        .map(|i| m.row(i).iter().fold(BigInt::zero(), |acc, x| acc + x.to_integer().abs()))
        .max()
        .unwrap_or_default();
    let c0 = p[0].abs();
    let bound = if norm < c0 { norm } else { c0 };
    let mut k = BigInt::one();
    while k <= bound && p.len() > 1 {
        if p[0].is_multiple_of(&k) {
            for cand in [k.clone(), -k.clone()] {
                let mut mult = 0;
                while p.len() > 1 {
                    match divide_by_linear(&p, &cand) {
                        Some(q) => {
                            p = q;
                            mult += 1;
                        }
                        None => break,
                    }
                }
                if mult > 0 {
                    roots.push((cand, mult));
                }
            }
        }
        k += 1;
    }
    roots
}

/// Synthetic division by `(x - r)`; `None` if `r` is not a root.
fn divide_by_linear(p: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let deg = p.len() - 1;
    let mut q = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for i in (0..=deg).rev() {
        let v = &p[i] + &carry * r;
        if i == 0 {
            return v.is_zero().then_some(q);
        }
        q[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}
