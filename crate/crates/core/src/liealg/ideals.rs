use crate::error::{Error, Result};
use crate::linalg::{inertia, kernel, rational_eigenspaces, DirectSum, Matrix, Subspace, Vector};

use super::LieAlgebra;

/// Largest piece on which the commutant refinement is attempted.
const COMMUTANT_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleIdeal {
    pub space: Subspace,
    pub compact: bool,
}

/// `l = z(l) ⊕ J_1 ⊕ ... ⊕ J_r` with each `J_i` a simple ideal of `[l, l]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSplit {
    pub center: Subspace,
    pub ideals: Vec<SimpleIdeal>,
}

impl IdealSplit {
    fn sum_where(&self, compact: bool) -> Subspace {
        let mut acc = Subspace::zero(self.center.ambient_dim());
        for ideal in self.ideals.iter().filter(|i| i.compact == compact) {
            acc = acc.sum(&ideal.space).expect("same ambient");
        }
        acc
    }

    /// Sum of the compact simple ideals.
    pub fn compact_part(&self) -> Subspace {
        self.sum_where(true)
    }

    /// Sum of the noncompact simple ideals.
    pub fn noncompact_part(&self) -> Subspace {
        self.sum_where(false)
    }
}

/// Splits a reductive subalgebra `l ⊆ g` into its center and simple ideals.
///
/// Ideals are found by generating ideals from single vectors (basis vectors
/// and the supplied `hints`, projected onto the current pieces) and splitting
/// off Killing-orthogonal complements. Small pieces that survive are further
/// refined by eigenspaces of their `ad`-commutant.
pub fn simple_ideal_split(g: &LieAlgebra, l: &Subspace, hints: &[Vector]) -> Result<IdealSplit> {
    if !g.is_subalgebra(l) {
        return Err(Error::NotSubalgebra);
    }
    let center = g.center_of(l);
    let derived = g.derived(l);
    if !center.intersect(&derived)?.is_zero() || center.dim() + derived.dim() != l.dim() {
        return Err(Error::NotReductive("l is not the direct sum of its center and [l, l]".into()));
    }
    if derived.is_zero() {
        return Ok(IdealSplit { center, ideals: Vec::new() });
    }
    if !inertia(&g.killing_form_on(&derived)?)?.is_nondegenerate() {
        return Err(Error::NotReductive("[l, l] has degenerate Killing form".into()));
    }
    let outer = DirectSum::new(vec![center.clone(), derived.clone()])?;
    let mut candidates: Vec<Vector> = derived.basis().to_vec();
    for h in hints {
        if let Some(p) = outer.project(1, h) {
            candidates.push(p);
        }
    }

    let mut pieces = vec![derived.clone()];
    'refine: loop {
        let split = DirectSum::new(pieces.clone())?;
        for v in &candidates {
            let comps = split.components(v).expect("candidate lies in [l, l]");
            for (pi, w) in comps.iter().enumerate() {
                if crate::linalg::is_zero_vector(w) {
                    continue;
                }
                let j = g.ideal_generated(std::slice::from_ref(w), &pieces[pi]);
                if j.dim() < pieces[pi].dim() {
                    let rest = killing_complement(g, &pieces[pi], &j)?;
                    pieces.splice(pi..=pi, [j, rest]);
                    continue 'refine;
                }
            }
        }
        for pi in 0..pieces.len() {
            if pieces[pi].dim() <= COMMUTANT_LIMIT {
                if let Some(parts) = commutant_split(g, &pieces[pi]) {
                    pieces.splice(pi..=pi, parts);
                    continue 'refine;
                }
            }
        }
        break;
    }

    let mut ideals = pieces
        .into_iter()
        .map(|space| {
            let compact = inertia(&g.killing_form_on(&space)?)?.is_negative_definite();
            Ok(SimpleIdeal { space, compact })
        })
        .collect::<Result<Vec<_>>>()?;
    ideals.sort_by(|a, b| a.space.basis().cmp(b.space.basis()));
    Ok(IdealSplit { center, ideals })
}

/// Killing-orthogonal complement of the ideal `j` inside the semisimple ideal `p`.
fn killing_complement(g: &LieAlgebra, p: &Subspace, j: &Subspace) -> Result<Subspace> {
    let form = g.killing_form_on(p)?;
    let rows: Vec<Vector> = j
        .basis()
        .iter()
        .map(|x| {
            let c = p.coordinates(x).expect("ideal inside piece");
            form.mul_vec(&c)
        })
        .collect();
    let sol = kernel(&Matrix::from_rows(&rows)?);
    let vs: Vec<Vector> = sol.basis().iter().map(|t| p.element(t)).collect();
    let rest = Subspace::span(p.ambient_dim(), &vs)?;
    if rest.dim() + j.dim() != p.dim() || !rest.intersect(j)?.is_zero() {
        return Err(Error::NotReductive("ideal has degenerate Killing form".into()));
    }
    Ok(rest)
}

/// Splits `p` along eigenspaces of an element of its `ad`-commutant, when one
/// with several rational eigenvalues exists.
fn commutant_split(g: &LieAlgebra, p: &Subspace) -> Option<Vec<Subspace>> {
    let k = p.dim();
    let ads: Vec<Matrix> = p.basis().iter().map(|x| g.restricted_ad(x, p).expect("p is an ideal")).collect();
    let mut rows = Vec::new();
    for a in &ads {
        for r in 0..k {
            for s in 0..k {
                let mut row = vec![crate::linalg::rat(0); k * k];
                for t in 0..k {
                    row[r * k + t] += &a[(t, s)];
                    row[t * k + s] -= &a[(r, t)];
                }
                rows.push(row);
            }
        }
    }
    let commutant = kernel(&Matrix::from_rows(&rows).ok()?);
    if commutant.dim() <= 1 {
        return None;
    }
    for t in commutant.basis() {
        let tm = Matrix::from_flat(k, k, t.clone());
        if let Ok(eig) = rational_eigenspaces(&tm) {
            if eig.len() > 1 {
                return Some(
                    eig.into_iter()
                        .map(|(_, e)| {
                            let vs: Vec<Vector> = e.basis().iter().map(|c| p.element(c)).collect();
                            Subspace::span(p.ambient_dim(), &vs).expect("same ambient")
                        })
                        .collect(),
                );
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, Matrix};
    use crate::models;

    #[test]
    fn sl2_is_simple_noncompact() {
        let g = models::sl(2);
        let split = simple_ideal_split(&g, &g.full(), &[]).unwrap();
        assert!(split.center.is_zero());
        assert_eq!(split.ideals.len(), 1);
        assert!(!split.ideals[0].compact);
    }

    #[test]
    fn so3_plus_center() {
        let mut basis = models::so(3).basis().to_vec();
        basis.push(Matrix::identity(3));
        let g = LieAlgebra::new(3, basis, None).unwrap();
        let split = simple_ideal_split(&g, &g.full(), &[]).unwrap();
        assert_eq!(split.center.dim(), 1);
        assert_eq!(split.ideals.len(), 1);
        assert!(split.ideals[0].compact);
    }

    #[test]
    fn abelian_is_all_center() {
        let g = LieAlgebra::new(2, vec![Matrix::unit(2, 0, 0), Matrix::unit(2, 1, 1)], None).unwrap();
        let split = simple_ideal_split(&g, &g.full(), &[]).unwrap();
        assert_eq!(split.center.dim(), 2);
        assert!(split.ideals.is_empty());
    }

    #[test]
    fn mixed_basis_of_so4_splits() {
        // so(4) = so(3) + so(3); its standard basis vectors are all mixed
        let g = models::so(4);
        let split = simple_ideal_split(&g, &g.full(), &[]).unwrap();
        assert_eq!(split.ideals.len(), 2);
        assert!(split.ideals.iter().all(|i| i.compact && i.space.dim() == 3));
    }

    #[test]
    fn ideals_commute_and_are_orthogonal() {
        let g = models::direct_sum(&[&models::sl(2), &models::so(3)]);
        let split = simple_ideal_split(&g, &g.full(), &[]).unwrap();
        assert_eq!(split.ideals.len(), 2);
        let (a, b) = (&split.ideals[0].space, &split.ideals[1].space);
        assert!(g.bracket_span(a, b).is_zero());
        let kf = g.killing_form();
        for x in a.basis() {
            for y in b.basis() {
                assert_eq!(crate::linalg::dot(&kf.mul_vec(x), y), rat(0));
            }
        }
        assert_eq!(split.compact_part().dim(), 3);
        assert_eq!(split.noncompact_part().dim(), 3);
    }

    #[test]
    fn non_reductive_is_rejected() {
        let g = LieAlgebra::new(2, vec![Matrix::unit(2, 0, 0), Matrix::unit(2, 0, 1)], None).unwrap();
        assert!(matches!(simple_ideal_split(&g, &g.full(), &[]), Err(Error::NotReductive(_))));
    }
}
