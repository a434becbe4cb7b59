//! Standard parabolic subalgebras `q_F ⊇ p` and the fine structure of their
//! Levi factors.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::liealg::{simple_ideal_split, CartanData, IdealSplit, LieAlgebra};
use crate::linalg::{rat, solve, DirectSum, Matrix, Rational, Subspace, Vector};

/// `q_F = l_F ⊕ u_F` for a subset `F` of the simple roots (indices into
/// `CartanData::simple`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    pub subset: Vec<usize>,
    pub q: Subspace,
    pub l: Subspace,
    pub u: Subspace,
    /// The minimal parabolic this one was built over.
    pub p: Subspace,
}

/// `l = z_np ⊕ z_cp ⊕ l_c ⊕ l_n`.
#[derive(Clone, Debug)]
pub struct LeviFineStructure {
    pub z_l: Subspace,
    pub z_np: Subspace,
    pub z_cp: Subspace,
    pub l_c: Subspace,
    pub l_n: Subspace,
    pub split: IdealSplit,
    decomposition: DirectSum,
}

impl LeviFineStructure {
    /// The four-part decomposition, in the order `z_np, z_cp, l_c, l_n`.
    pub fn decomposition(&self) -> &DirectSum {
        &self.decomposition
    }

    pub fn project_z_np(&self, v: &[Rational]) -> Option<Vector> {
        self.decomposition.project(0, v)
    }

    /// `z(l) + l_c`.
    pub fn compact_and_center(&self) -> Subspace {
        self.z_l.sum(&self.l_c).expect("same ambient")
    }
}

fn normalize_subset(cd: &CartanData, subset: &[usize]) -> Result<Vec<usize>> {
    let mut f: Vec<usize> = subset.to_vec();
    f.sort_unstable();
    f.dedup();
    if let Some(&bad) = f.iter().find(|&&i| i >= cd.simple.len()) {
        return Err(Error::NotSimpleRoot(bad));
    }
    Ok(f)
}

fn supported_in(coords: &[Rational], f: &[usize]) -> bool {
    coords.iter().enumerate().all(|(i, c)| c.is_zero() || f.contains(&i))
}

pub fn standard_parabolic(cd: &CartanData, subset: &[usize]) -> Result<ParabolicData> {
    let f = normalize_subset(cd, subset)?;
    let mut l = cd.zero_space.clone();
    let mut u = Subspace::zero(cd.zero_space.ambient_dim());
    for root in &cd.roots {
        if supported_in(&root.simple_coords, &f) {
            l = l.sum(&root.space)?;
        } else if root.positive {
            u = u.sum(&root.space)?;
        }
    }
    let q = l.sum(&u)?;
    Ok(ParabolicData { subset: f, q, l, u, p: cd.p.clone() })
}

/// All `2^|Δ|` standard parabolics, subsets in binary-counting order.
pub fn all_standard_parabolics(cd: &CartanData) -> Result<Vec<ParabolicData>> {
    (0..1usize << cd.simple.len()).map(|mask| standard_parabolic(cd, &subset_from_mask(mask, cd.simple.len()))).collect()
}

pub fn subset_from_mask(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn levi_fine_structure(g: &LieAlgebra, cd: &CartanData, l: &Subspace) -> Result<LeviFineStructure> {
    let mut hints: Vec<Vector> = Vec::new();
    for root in &cd.roots {
        if l.contains_subspace(&root.space) {
            hints.extend(root.space.basis().iter().cloned());
        }
    }
    for x in l.basis() {
        let tx = cd.theta.mul_vec(x);
        hints.push(x.iter().zip(&tx).map(|(a, b)| a + b).collect());
        hints.push(x.iter().zip(&tx).map(|(a, b)| a - b).collect());
    }
    let split = simple_ideal_split(g, l, &hints)?;
    let z_l = split.center.clone();
    let z_np = z_l.intersect(&cd.s)?;
    let z_cp = z_l.intersect(&cd.k)?;
    let l_c = split.compact_part();
    let l_n = split.noncompact_part();
    let decomposition = DirectSum::new(vec![z_np.clone(), z_cp.clone(), l_c.clone(), l_n.clone()])
        .map_err(|_| Error::Internal("Levi components are not independent".into()))?;
    if decomposition.total() != l {
        return Err(Error::NotReductive("center is not the sum of its θ-parts".into()));
    }
    Ok(LeviFineStructure { z_l, z_np, z_cp, l_c, l_n, split, decomposition })
}

/// `X_s ∈ a ∩ [g, g]` with `α(X_s) = 0` for `α ∈ F` and `-1` on the other
/// simple roots.
pub fn characteristic_element(g: &LieAlgebra, cd: &CartanData, subset: &[usize]) -> Result<Vector> {
    let f = normalize_subset(cd, subset)?;
    let a_ss = cd.a.intersect(&g.derived(&g.full()))?;
    if cd.simple.is_empty() {
        return Ok(g.zero());
    }
    let rows: Vec<Vector> = cd
        .simple_roots()
        .map(|root| a_ss.basis().iter().map(|b| cd.evaluate(&root.values, b).expect("b in a")).collect())
        .collect();
    let target: Vector = (0..cd.simple.len()).map(|i| if f.contains(&i) { rat(0) } else { rat(-1) }).collect();
    let m = Matrix::from_rows(&rows)?;
    let coeffs = if a_ss.is_zero() { None } else { solve(&m, &target) };
    match coeffs {
        Some(t) => Ok(a_ss.element(&t)),
        None => Err(Error::Internal("simple roots are not independent on a ∩ [g, g]".into())),
    }
}

/// Returns whether `l ∩ u′ = 0`; when it is, also confirms `q ⊆ q′`.
pub fn parabolic_containment_check(q: &ParabolicData, q2: &ParabolicData) -> Result<bool> {
    if q.p != q2.p {
        return Err(Error::MismatchedParabolics);
    }
    let disjoint = q.l.intersect(&q2.u)?.is_zero();
    if disjoint && !q2.q.contains_subspace(&q.q) {
        return Err(Error::Internal("l ∩ u' = 0 but q is not contained in q'".into()));
    }
    Ok(disjoint)
}
