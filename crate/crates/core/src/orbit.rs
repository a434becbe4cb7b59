//! The nilpotent orbit identity `e^{ad u} X₀ = X₀ + [X₀, u]`: forward
//! verification and a constructive inverse.

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::random_element;
use crate::liealg::LieAlgebra;
use crate::linalg::{add_vectors, is_zero_vector, rational_eigenspaces, scale_vector, sub_vectors, DirectSum, Rational, Subspace, Vector};

/// A nilpotent subalgebra `u` with an element `X₀` normalizing it, such that
/// `ad X₀|_u` is diagonalizable with rational, nonpositive eigenvalues.
#[derive(Clone, Debug)]
pub struct DerivationPair {
    u: Subspace,
    x0: Vector,
    /// `(λ, u_λ)` where `-ad X₀` acts on `u_λ` by `λ ≥ 0`, increasing in `λ`.
    layers: Vec<(Rational, Subspace)>,
    grading: DirectSum,
}

impl DerivationPair {
    pub fn new(g: &LieAlgebra, u: Subspace, x0: Vector) -> Result<Self> {
        if !g.is_subalgebra(&u) {
            return Err(Error::BadDerivationPair("u is not a subalgebra".into()));
        }
        let mut lower = u.clone();
        while !lower.is_zero() {
            let next = g.bracket_span(&u, &lower);
            if next.dim() == lower.dim() {
                return Err(Error::BadDerivationPair("u is not nilpotent".into()));
            }
            lower = next;
        }
        let restricted = g
            .restricted_ad(&x0, &u)
            .ok_or_else(|| Error::BadDerivationPair("ad X0 does not preserve u".into()))?;
        let eig = rational_eigenspaces(&restricted)
            .map_err(|_| Error::BadDerivationPair("ad X0 on u is not diagonalizable over Q".into()))?;
        let mut layers = Vec::new();
        for (mu, e) in eig.into_iter().rev() {
            if mu.is_positive() {
                return Err(Error::BadDerivationPair("ad X0 has a positive eigenvalue on u".into()));
            }
            let vs: Vec<Vector> = e.basis().iter().map(|c| u.element(c)).collect();
            layers.push((-mu, Subspace::span(g.dim(), &vs)?));
        }
        let grading = DirectSum::in_ambient(g.dim(), layers.iter().map(|(_, s)| s.clone()).collect())?;
        Ok(DerivationPair { u, x0, layers, grading })
    }

    pub fn u(&self) -> &Subspace {
        &self.u
    }

    pub fn x0(&self) -> &[Rational] {
        &self.x0
    }

    pub fn layers(&self) -> &[(Rational, Subspace)] {
        &self.layers
    }

    /// `[X₀, u]`, the sum of the layers with nonzero eigenvalue.
    pub fn image(&self) -> Subspace {
        let mut acc = Subspace::zero(self.u.ambient_dim());
        for (lambda, s) in &self.layers {
            if !lambda.is_zero() {
                acc = acc.sum(s).expect("same ambient");
            }
        }
        acc
    }
}

/// `e^{ad U} Y`, summed until the terms vanish. `ad U` must be nilpotent on `g`.
pub fn exp_ad_apply(g: &LieAlgebra, u: &[Rational], y: &[Rational]) -> Result<Vector> {
    let ad = g.ad(u);
    if !ad.pow(g.dim()).is_zero() {
        return Err(Error::NotNilpotent);
    }
    let mut out = y.to_vec();
    let mut term = y.to_vec();
    let mut k = 1i64;
    loop {
        term = scale_vector(&Rational::new(1.into(), k.into()), &ad.mul_vec(&term));
        if is_zero_vector(&term) {
            return Ok(out);
        }
        out = add_vectors(&out, &term);
        k += 1;
    }
}

/// Outcome of a batch of forward orbit-identity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCheck {
    pub samples: usize,
    pub passed: usize,
    /// First `U` for which `e^{ad U}X₀ - X₀ ∉ [X₀, u]`.
    pub witness: Option<Vector>,
}

impl OrbitCheck {
    pub fn ok(&self) -> bool {
        self.witness.is_none() && self.passed == self.samples
    }
}

/// Samples random `U ∈ u` and checks `e^{ad U}X₀ ∈ X₀ + [X₀, u]`.
pub fn orbit_identity_check<R: Rng>(g: &LieAlgebra, dp: &DerivationPair, samples: usize, rng: &mut R) -> Result<OrbitCheck> {
    let image = dp.image();
    let mut passed = 0;
    for _ in 0..samples {
        let u = random_element(rng, &dp.u);
        let moved = exp_ad_apply(g, &u, &dp.x0)?;
        if image.contains(&sub_vectors(&moved, &dp.x0)) {
            passed += 1;
        } else {
            return Ok(OrbitCheck { samples, passed, witness: Some(u) });
        }
    }
    Ok(OrbitCheck { samples, passed, witness: None })
}

/// Finds `U ∈ u` with `e^{ad U}X₀ = X₀ + W`, peeling eigenvalue layers from
/// the lowest upward.
pub fn solve_conjugator(g: &LieAlgebra, dp: &DerivationPair, w: &[Rational]) -> Result<Vector> {
    let comps = dp.grading.components(w).ok_or(Error::NotInImage)?;
    for ((lambda, _), c) in dp.layers.iter().zip(&comps) {
        if lambda.is_zero() && !is_zero_vector(c) {
            return Err(Error::ZeroLayerTarget);
        }
    }
    let target = add_vectors(&dp.x0, w);
    let mut u = g.zero();
    for (i, (lambda, _)) in dp.layers.iter().enumerate() {
        if lambda.is_zero() {
            continue;
        }
        let residual = sub_vectors(&target, &exp_ad_apply(g, &u, &dp.x0)?);
        let r = dp.grading.project(i, &residual).ok_or_else(|| Error::Internal("residual left u".into()))?;
        u = add_vectors(&u, &scale_vector(&lambda.recip(), &r));
    }
    if exp_ad_apply(g, &u, &dp.x0)? != target {
        return Err(Error::Internal("layer peeling left a nonzero residual".into()));
    }
    Ok(u)
}
