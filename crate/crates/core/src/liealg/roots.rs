use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, rational_eigenspaces, solve, Matrix, Rational, SpectrumFailure, Subspace, Vector};

use super::{maximal_abelian, CartanDecomposition, LieAlgebra};

/// A restricted root: its values on the basis of `a` and its root space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub values: Vector,
    pub space: Subspace,
    pub positive: bool,
    /// Coefficients in terms of the simple roots (in `CartanData::simple` order).
    pub simple_coords: Vector,
}

/// Cartan involution, maximal split abelian `a`, and the restricted root
/// space decomposition relative to a lexicographic positivity.
#[derive(Clone, Debug)]
pub struct CartanData {
    pub theta: Matrix,
    pub k: Subspace,
    pub s: Subspace,
    pub a: Subspace,
    /// Sorted by decreasing lexicographic value on the positivity basis, so
    /// positive roots come first.
    pub roots: Vec<Root>,
    pub zero_space: Subspace,
    pub positivity: Vec<Vector>,
    /// Indices into `roots`.
    pub simple: Vec<usize>,
    pub m: Subspace,
    pub n: Subspace,
    pub p: Subspace,
}

impl CartanData {
    /// Full pipeline: Cartan involution (default `-Xᵀ`), maximal abelian `a`
    /// extending `a_seed`, and roots ordered by `positivity` (default: the
    /// echelon basis of `a`).
    pub fn new(
        g: &LieAlgebra,
        theta: Option<Matrix>,
        a_seed: Option<&Subspace>,
        positivity: Option<Vec<Vector>>,
    ) -> Result<Self> {
        let cd = CartanDecomposition::new(g, theta)?;
        let a = maximal_abelian(g, &cd.s, a_seed)?;
        Self::from_parts(g, cd, a, positivity)
    }

    /// Builds the root data for a given abelian `a ⊆ s`.
    pub fn from_parts(
        g: &LieAlgebra,
        cd: CartanDecomposition,
        a: Subspace,
        positivity: Option<Vec<Vector>>,
    ) -> Result<Self> {
        let d = g.dim();
        if !g.is_abelian(&a) {
            return Err(Error::NotAbelian);
        }
        if !cd.s.contains_subspace(&a) {
            return Err(Error::SeedNotInS);
        }
        let positivity = positivity.unwrap_or_else(|| a.basis().to_vec());
        let pos_coords = positivity.iter().map(|p| a.coordinates(p)).collect::<Option<Vec<_>>>().ok_or(Error::BadPositivity)?;
        if positivity.len() != a.dim() || Subspace::span(d, &positivity)?.dim() != a.dim() {
            return Err(Error::BadPositivity);
        }

        let mut pieces: Vec<(Vector, Subspace)> = vec![(Vec::new(), Subspace::full(d))];
        for (index, h) in a.basis().iter().enumerate() {
            let eig = rational_eigenspaces(&g.ad(h)).map_err(|f| match f {
                SpectrumFailure::Irrational => Error::IrrationalSpectrum { index },
                SpectrumFailure::NotDiagonalizable => Error::NotSemisimple { index },
            })?;
            let mut next = Vec::new();
            for (vals, space) in &pieces {
                for (lambda, e) in &eig {
                    let inter = space.intersect(e)?;
                    if !inter.is_zero() {
                        let mut v = vals.clone();
                        v.push(lambda.clone());
                        next.push((v, inter));
                    }
                }
            }
            pieces = next;
        }

        let mut zero_space = Subspace::zero(d);
        let mut raw: Vec<(Vector, Vector, Subspace)> = Vec::new();
        for (vals, space) in pieces {
            if vals.iter().all(|v| v.is_zero()) {
                zero_space = space;
            } else {
                let pv: Vector = pos_coords.iter().map(|c| dot(c, &vals)).collect();
                raw.push((pv, vals, space));
            }
        }
        raw.sort_by(|x, y| y.0.cmp(&x.0));

        let positive: Vec<bool> = raw.iter().map(|(pv, _, _)| first_nonzero_positive(pv)).collect();
        let pos_idx: Vec<usize> = (0..raw.len()).filter(|&i| positive[i]).collect();
        let is_sum_of_two = |i: usize| {
            pos_idx.iter().any(|&b| {
                pos_idx.iter().any(|&c| {
                    raw[b].1.iter().zip(&raw[c].1).zip(&raw[i].1).all(|((x, y), z)| &(x + y) == z)
                })
            })
        };
        let simple: Vec<usize> = pos_idx.iter().copied().filter(|&i| !is_sum_of_two(i)).collect();

        let r = a.dim();
        let simple_matrix = Matrix::from_columns(r, &simple.iter().map(|&i| raw[i].1.clone()).collect::<Vec<_>>());
        let mut roots = Vec::with_capacity(raw.len());
        for (i, (_, values, space)) in raw.into_iter().enumerate() {
            let simple_coords = if simple.is_empty() {
                Vec::new()
            } else {
                solve(&simple_matrix, &values).ok_or_else(|| Error::Internal("root outside the span of simple roots".into()))?
            };
            let sign_ok = simple_coords.iter().all(|c| if positive[i] { !c.is_negative() } else { !c.is_positive() });
            if !sign_ok {
                return Err(Error::Internal("root has mixed-sign simple coordinates".into()));
            }
            roots.push(Root { values, space, positive: positive[i], simple_coords });
        }

        let mut n = Subspace::zero(d);
        for root in roots.iter().filter(|r| r.positive) {
            n = n.sum(&root.space)?;
        }
        let m = zero_space.intersect(&cd.k)?;
        let p = zero_space.sum(&n)?;
        Ok(CartanData { theta: cd.theta, k: cd.k, s: cd.s, a, roots, zero_space, positivity, simple, m, n, p })
    }

    pub fn rank(&self) -> usize {
        self.a.dim()
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = &Root> {
        self.simple.iter().map(move |&i| &self.roots[i])
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.positive)
    }

    pub fn root_index(&self, values: &[Rational]) -> Option<usize> {
        self.roots.iter().position(|r| r.values == values)
    }

    /// Space `g_λ` for an arbitrary functional (zero space for `λ = 0`, the
    /// zero subspace if `λ` is not a root).
    pub fn weight_space(&self, values: &[Rational]) -> Subspace {
        if values.iter().all(|v| v.is_zero()) {
            return self.zero_space.clone();
        }
        match self.root_index(values) {
            Some(i) => self.roots[i].space.clone(),
            None => Subspace::zero(self.zero_space.ambient_dim()),
        }
    }

    /// `α(H)` for `H ∈ a`.
    pub fn evaluate(&self, values: &[Rational], h: &[Rational]) -> Option<Rational> {
        Some(dot(values, &self.a.coordinates(h)?))
    }

    /// Restricted-root invariants: dimensions add up, brackets respect root
    /// addition, θ swaps `g_α` and `g_{-α}`, and `p` is a subalgebra.
    pub fn check_invariants(&self, g: &LieAlgebra) -> Result<()> {
        let total = self.zero_space.dim() + self.roots.iter().map(|r| r.space.dim()).sum::<usize>();
        if total != g.dim() {
            return Err(Error::Internal(format!("root decomposition covers {total} of {} dimensions", g.dim())));
        }
        let mut weights: Vec<(Vector, &Subspace)> = self.roots.iter().map(|r| (r.values.clone(), &r.space)).collect();
        weights.push((vec![Rational::zero(); self.a.dim()], &self.zero_space));
        for (va, sa) in &weights {
            for (vb, sb) in &weights {
                let sum: Vector = va.iter().zip(vb).map(|(x, y)| x + y).collect();
                let target = self.weight_space(&sum);
                if !target.contains_subspace(&g.bracket_span(sa, sb)) {
                    return Err(Error::Internal("bracket of root spaces escapes the sum root space".into()));
                }
            }
        }
        for root in &self.roots {
            let neg: Vector = root.values.iter().map(|x| -x).collect();
            let image = root.space.image(&self.theta);
            if image != self.weight_space(&neg) {
                return Err(Error::Internal("theta does not swap opposite root spaces".into()));
            }
        }
        if !g.is_subalgebra(&self.p) {
            return Err(Error::Internal("p is not a subalgebra".into()));
        }
        Ok(())
    }
}

fn first_nonzero_positive(v: &[Rational]) -> bool {
    v.iter().find(|x| !x.is_zero()).map(|x| x.is_positive()).unwrap_or(false)
}

/// Positivity basis obtained by flipping the signs of `a`'s echelon basis.
pub fn positivity_from_signs(a: &Subspace, signs: &[i8]) -> Result<Vec<Vector>> {
    if signs.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: signs.len() });
    }
    Ok(a
        .basis()
        .iter()
        .zip(signs)
        .map(|(v, &s)| if s < 0 { v.iter().map(|x| -x).collect() } else { v.clone() })
        .collect())
}
