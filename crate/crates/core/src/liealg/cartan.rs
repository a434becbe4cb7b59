use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, Subspace, Vector};

use super::LieAlgebra;

/// A Cartan involution on coordinates together with its eigenspaces.
#[derive(Clone, Debug)]
pub struct CartanDecomposition {
    pub theta: Matrix,
    pub k: Subspace,
    pub s: Subspace,
}

impl CartanDecomposition {
    /// Uses the supplied involution, or `X ↦ -Xᵀ` when `None`.
    pub fn new(g: &LieAlgebra, theta: Option<Matrix>) -> Result<Self> {
        let theta = match theta {
            Some(t) => t,
            None => default_theta(g)?,
        };
        validate_theta(g, &theta)?;
        let d = g.dim();
        let id = Matrix::identity(d);
        let k = kernel(&theta.sub(&id));
        let s = kernel(&theta.add(&id));
        Ok(CartanDecomposition { theta, k, s })
    }

    pub fn apply(&self, x: &[crate::linalg::Rational]) -> Vector {
        self.theta.mul_vec(x)
    }

    /// `(x + θx) / 2` and `(x - θx) / 2`.
    pub fn split(&self, x: &[crate::linalg::Rational]) -> (Vector, Vector) {
        let tx = self.apply(x);
        let half = crate::linalg::frac(1, 2);
        let kp = x.iter().zip(&tx).map(|(a, b)| (a + b) * &half).collect();
        let sp = x.iter().zip(&tx).map(|(a, b)| (a - b) * &half).collect();
        (kp, sp)
    }
}

/// Coordinate matrix of `X ↦ -Xᵀ`, provided the basis span is closed under it.
pub fn default_theta(g: &LieAlgebra) -> Result<Matrix> {
    let cols = g
        .basis()
        .iter()
        .enumerate()
        .map(|(index, b)| {
            let minus_t = b.transpose().scale(&crate::linalg::rat(-1));
            g.coordinates(&minus_t).ok_or(Error::ThetaNotPreserving { index })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(g.dim(), &cols))
}

/// Checks that `theta` is an involutive automorphism of `g`.
pub fn validate_theta(g: &LieAlgebra, theta: &Matrix) -> Result<()> {
    let d = g.dim();
    if theta.rows() != d || theta.cols() != d {
        return Err(Error::DimensionMismatch { expected: d, found: theta.rows() });
    }
    if theta.mul(theta) != Matrix::identity(d) {
        return Err(Error::ThetaNotInvolutive);
    }
    let images: Vec<Vector> = (0..d).map(|i| theta.column(i)).collect();
    for i in 0..d {
        for j in i + 1..d {
            let lhs = theta.mul_vec(g.structure_constants(i, j));
            let rhs = g.bracket(&images[i], &images[j]);
            if lhs != rhs {
                return Err(Error::ThetaNotAutomorphism { i, j });
            }
        }
    }
    Ok(())
}

/// A maximal abelian subspace of `s` containing `seed`.
///
/// Basis vectors of `s` are added greedily in echelon order; afterwards the
/// centralizer `z_s(a)` is computed and any excess is absorbed until
/// `z_s(a) = a` holds exactly.
pub fn maximal_abelian(g: &LieAlgebra, s: &Subspace, seed: Option<&Subspace>) -> Result<Subspace> {
    let d = g.dim();
    let mut a = match seed {
        Some(seed) => {
            if !s.contains_subspace(seed) {
                return Err(Error::SeedNotInS);
            }
            if !g.is_abelian(seed) {
                return Err(Error::NotAbelian);
            }
            seed.clone()
        }
        None => Subspace::zero(d),
    };
    for v in s.basis() {
        if a.contains(v) {
            continue;
        }
        if a.basis().iter().all(|w| crate::linalg::is_zero_vector(&g.bracket(v, w))) {
            a = a.sum(&Subspace::span_unchecked(d, vec![v.clone()]))?;
        }
    }
    loop {
        let z = g.centralizer(&a, s);
        if z == a {
            return Ok(a);
        }
        let extra = a.complement_in(&z)?;
        a = a.sum(&Subspace::span_unchecked(d, vec![extra.basis()[0].clone()]))?;
    }
}
