//! Standard matrix realizations used throughout the catalog, tests and
//! examples.
//!
//! Basis conventions:
//! * `sl(n)`: `H_i = E_ii - E_(i+1)(i+1)` for `i < n-1`, then `E_ij` (`i != j`) row-major.
//! * `gl(n)`: `E_ii`, then `E_ij` (`i != j`) row-major.
//! * `so(n)`: `E_ij - E_ji` for `i < j`.

use crate::liealg::LieAlgebra;
use crate::linalg::{rat, Matrix};

fn off_diagonal_units(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(Matrix::unit(n, i, j));
            }
        }
    }
    out
}

pub fn sl_basis(n: usize) -> Vec<Matrix> {
    let mut basis: Vec<Matrix> =
        (0..n.saturating_sub(1)).map(|i| Matrix::unit(n, i, i).sub(&Matrix::unit(n, i + 1, i + 1))).collect();
    basis.extend(off_diagonal_units(n));
    basis
}

pub fn gl_basis(n: usize) -> Vec<Matrix> {
    let mut basis: Vec<Matrix> = (0..n).map(|i| Matrix::unit(n, i, i)).collect();
    basis.extend(off_diagonal_units(n));
    basis
}

pub fn so_basis(n: usize) -> Vec<Matrix> {
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            basis.push(Matrix::unit(n, i, j).sub(&Matrix::unit(n, j, i)));
        }
    }
    basis
}

pub fn sl(n: usize) -> LieAlgebra {
    LieAlgebra::new(n, sl_basis(n), Some(format!("sl({n},R)"))).expect("sl(n) is a Lie algebra")
}

pub fn gl(n: usize) -> LieAlgebra {
    LieAlgebra::new(n, gl_basis(n), Some(format!("gl({n},R)"))).expect("gl(n) is a Lie algebra")
}

pub fn so(n: usize) -> LieAlgebra {
    LieAlgebra::new(n, so_basis(n), Some(format!("so({n})"))).expect("so(n) is a Lie algebra")
}

/// Places square blocks along the diagonal of a larger matrix.
pub fn block_diagonal(blocks: &[&Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut m = Matrix::zeros(n, n);
    let mut offset = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m[(offset + i, offset + j)] = b[(i, j)].clone();
            }
        }
        offset += b.rows();
    }
    m
}

/// Embeds a matrix of one block into slot `slot` of a block-diagonal layout.
pub fn embed_block(sizes: &[usize], slot: usize, m: &Matrix) -> Matrix {
    let zeros: Vec<Matrix> = sizes.iter().map(|&s| Matrix::zeros(s, s)).collect();
    let blocks: Vec<&Matrix> = (0..sizes.len()).map(|k| if k == slot { m } else { &zeros[k] }).collect();
    block_diagonal(&blocks)
}

/// Direct sum of matrix Lie algebras, realized block-diagonally. The basis is
/// the concatenation of the factors' bases.
pub fn direct_sum(factors: &[&LieAlgebra]) -> LieAlgebra {
    let sizes: Vec<usize> = factors.iter().map(|g| g.matrix_size()).collect();
    let mut basis = Vec::new();
    for (slot, g) in factors.iter().enumerate() {
        basis.extend(g.basis().iter().map(|b| embed_block(&sizes, slot, b)));
    }
    let name = factors.iter().map(|g| g.name().unwrap_or("g").to_string()).collect::<Vec<_>>().join(" + ");
    LieAlgebra::new(sizes.iter().sum(), basis, Some(name)).expect("direct sum of Lie algebras")
}

/// The diagonal copy `{(X, ..., X)}` of a block-repeated algebra, as matrices.
pub fn diagonal_copy(g: &LieAlgebra, copies: usize) -> Vec<Matrix> {
    g.basis().iter().map(|b| block_diagonal(&vec![b; copies])).collect()
}

/// `sl(2, C)` viewed as a real Lie algebra, realized as 4×4 real matrices via
/// `a + ib ↦ [[a, -b], [b, a]]` applied entrywise. Basis: `H, E, F, iH, iE, iF`.
pub fn sl2c_real() -> LieAlgebra {
    LieAlgebra::new(4, sl2c_real_basis(), Some("sl(2,C)".into())).expect("sl(2,C) is a Lie algebra")
}

pub fn sl2c_real_basis() -> Vec<Matrix> {
    let complexify = |re: &Matrix, im: &Matrix| {
        let mut m = Matrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                m[(2 * i, 2 * j)] = re[(i, j)].clone();
                m[(2 * i, 2 * j + 1)] = -im[(i, j)].clone();
                m[(2 * i + 1, 2 * j)] = im[(i, j)].clone();
                m[(2 * i + 1, 2 * j + 1)] = re[(i, j)].clone();
            }
        }
        m
    };
    let zero = Matrix::zeros(2, 2);
    let real: Vec<Matrix> = sl_basis(2);
    let mut basis: Vec<Matrix> = real.iter().map(|x| complexify(x, &zero)).collect();
    basis.extend(real.iter().map(|x| complexify(&zero, x)));
    basis
}

/// Identity-scaled helper used for centers.
pub fn scalar(n: usize, c: i64) -> Matrix {
    Matrix::identity(n).scale(&rat(c))
}
