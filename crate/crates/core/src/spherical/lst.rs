use crate::error::{Error, Result};
use crate::group::exp_ad;
use crate::linalg::{add_vectors, is_zero_vector, solve, DirectSum, Matrix, Subspace, Vector};
use crate::orbit::{solve_conjugator, DerivationPair};
use crate::parabolic::{characteristic_element, levi_fine_structure, LeviFineStructure, ParabolicData};

use super::{adapted_parabolic, complementary_subsets, is_spherical, SphericalPair};

/// The adapted parabolic together with a conjugate `h° = e^{-ad U} h`,
/// `U ∈ u`, for which the standard Levi `l_F` contains `q ∩ h°`.
#[derive(Clone, Debug)]
pub struct AlignedFrame {
    pub parabolic: ParabolicData,
    pub fine: LeviFineStructure,
    pub x_s: Vector,
    /// `X₀ = e^{ad U} X_s`, an element of `X_s + u` centralizing `q ∩ h`.
    pub x0: Vector,
    pub conjugator: Vector,
    /// `e^{-ad U}` in coordinates.
    pub untwist: Matrix,
    pub h_aligned: Subspace,
    /// Whether some `X₀ ∈ X_s + u` centralizes `q ∩ h`.
    pub aligned: bool,
}

impl AlignedFrame {
    /// Moves any subspace into the aligned frame.
    pub fn align(&self, s: &Subspace) -> Subspace {
        s.image(&self.untwist)
    }
}

/// Solves `[X_s + v, q ∩ h] = 0` for `v ∈ u` and conjugates accordingly. If
/// no solution exists the identity frame is returned with `aligned = false`.
pub fn aligned_frame(pair: &SphericalPair, parabolic: ParabolicData) -> Result<AlignedFrame> {
    let g = &pair.g;
    let fine = levi_fine_structure(g, &pair.cd, &parabolic.l)?;
    let x_s = characteristic_element(g, &pair.cd, &parabolic.subset)?;
    let q_h = parabolic.q.intersect(&pair.h)?;
    let u_basis = parabolic.u.basis();

    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    for y in q_h.basis() {
        let cols: Vec<Vector> = u_basis.iter().map(|b| g.bracket(b, y)).collect();
        let target = g.bracket(y, &x_s);
        for r in 0..g.dim() {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
            rhs.push(target[r].clone());
        }
    }
    let v = if rows.is_empty() {
        Some(g.zero())
    } else if u_basis.is_empty() {
        is_zero_vector(&rhs).then(|| g.zero())
    } else {
        solve(&Matrix::from_rows(&rows)?, &rhs).map(|t| parabolic.u.element(&t))
    };

    let (aligned, v) = match v {
        Some(v) => (true, v),
        None => (false, g.zero()),
    };
    let conjugator = if is_zero_vector(&v) {
        g.zero()
    } else {
        let dp = DerivationPair::new(g, parabolic.u.clone(), x_s.clone())?;
        solve_conjugator(g, &dp, &v)?
    };
    let minus_u: Vector = conjugator.iter().map(|c| -c).collect();
    let untwist = exp_ad(g, &minus_u)?;
    let h_aligned = pair.h.image(&untwist);
    let x0 = add_vectors(&x_s, &v);
    Ok(AlignedFrame { parabolic, fine, x_s, x0, conjugator, untwist, h_aligned, aligned })
}

/// Pass/fail flags for the structural identities, evaluated in the aligned
/// frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LstChecks {
    /// `q ∩ h ⊆ l`.
    pub q_cap_h_in_l: bool,
    /// `l_n ⊆ h`.
    pub l_n_in_h: bool,
    /// `(l ∩ p) + (l ∩ h) = l`.
    pub levi_sum: bool,
    /// `q + h = g`.
    pub q_plus_h: bool,
    /// `u ⊕ (n ∩ h) = n`.
    pub u_complements: bool,
    /// `l ∩ h = ((z(l) + l_c) ∩ h) ⊕ l_n`.
    pub levi_intersection: bool,
    /// `a = a_Z ⊕ a_h ⊕ (a ∩ l_n)`.
    pub third_decomposition: bool,
}

impl LstChecks {
    pub fn all(&self) -> bool {
        self.q_cap_h_in_l
            && self.l_n_in_h
            && self.levi_sum
            && self.q_plus_h
            && self.u_complements
            && self.levi_intersection
            && self.third_decomposition
    }

    pub fn named(&self) -> [(&'static str, bool); 7] {
        [
            ("q_cap_h_in_l", self.q_cap_h_in_l),
            ("l_n_in_h", self.l_n_in_h),
            ("levi_sum", self.levi_sum),
            ("q_plus_h", self.q_plus_h),
            ("u_complements_n_cap_h", self.u_complements),
            ("levi_intersection", self.levi_intersection),
            ("third_decomposition", self.third_decomposition),
        ]
    }
}

#[derive(Clone, Debug)]
pub struct LstReport {
    pub is_spherical: bool,
    pub defect: usize,
    pub candidates_passing: usize,
    pub adapted: Option<Vec<usize>>,
    pub frame: Option<AlignedFrame>,
    pub checks: Option<LstChecks>,
    pub a_h: Option<Subspace>,
    pub a_z: Option<Subspace>,
    pub rank: Option<usize>,
}

impl LstReport {
    /// Spherical, a unique adapted subset, and every identity holds.
    pub fn ok(&self) -> bool {
        self.is_spherical && self.candidates_passing == 1 && self.checks.map(|c| c.all()).unwrap_or(false)
    }
}

pub fn lst_report(pair: &SphericalPair) -> Result<LstReport> {
    let sph = is_spherical(pair);
    let mut report = LstReport {
        is_spherical: sph.spherical,
        defect: sph.defect,
        candidates_passing: complementary_subsets(pair)?.len(),
        adapted: None,
        frame: None,
        checks: None,
        a_h: None,
        a_z: None,
        rank: None,
    };
    if !sph.spherical {
        return Ok(report);
    }
    let adapted = match adapted_parabolic(pair) {
        Ok(a) => a,
        Err(Error::NotUnique { .. }) => return Ok(report),
        Err(e) => return Err(e),
    };
    let frame = aligned_frame(pair, adapted.parabolic)?;
    let cd = &pair.cd;
    let (q, l, u) = (&frame.parabolic.q, &frame.parabolic.l, &frame.parabolic.u);
    let h = &frame.h_aligned;
    let fine = &frame.fine;
    let g_dim = pair.g.dim();

    let l_h = l.intersect(h)?;
    let n_h = cd.n.intersect(h)?;
    let d = fine.compact_and_center();
    let c = d.intersect(h)?;

    let a_h_vectors: Vec<Vector> =
        c.basis().iter().map(|x| fine.project_z_np(x).expect("c lies in l")).collect();
    let a_h = Subspace::span(g_dim, &a_h_vectors)?;
    let a_z = a_h.complement_in(&fine.z_np)?;
    let a_ln = cd.a.intersect(&fine.l_n)?;
    let third = DirectSum::new(vec![a_z.clone(), a_h.clone(), a_ln])
        .map(|s| s.total() == &cd.a)
        .unwrap_or(false);

    let checks = LstChecks {
        q_cap_h_in_l: l.contains_subspace(&q.intersect(h)?),
        l_n_in_h: h.contains_subspace(&fine.l_n),
        levi_sum: l.intersect(&cd.p)?.sum(&l_h)? == *l,
        q_plus_h: q.sum(h)?.dim() == g_dim,
        u_complements: u.intersect(&n_h)?.is_zero() && u.dim() + n_h.dim() == cd.n.dim(),
        levi_intersection: c.intersect(&fine.l_n)?.is_zero() && c.sum(&fine.l_n)? == l_h,
        third_decomposition: third,
    };
    report.adapted = Some(frame.parabolic.subset.clone());
    report.rank = Some(a_z.dim());
    report.a_h = Some(a_h);
    report.a_z = Some(a_z);
    report.checks = Some(checks);
    report.frame = Some(frame);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::CartanData;
    use crate::linalg::{rat, Subspace};
    use crate::models;

    fn pair(g: crate::liealg::LieAlgebra, cd: CartanData, h: &[Vec<i64>]) -> SphericalPair {
        let vs: Vec<Vector> = h.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
        let h = Subspace::span(g.dim(), &vs).unwrap();
        SphericalPair::new(g, cd, h, None).unwrap()
    }

    fn sl2(h: &[Vec<i64>]) -> SphericalPair {
        let g = models::sl(2);
        let cd = CartanData::new(&g, None, None, None).unwrap();
        pair(g, cd, h)
    }

    #[test]
    fn sl2_so2_rank_one() {
        let r = lst_report(&sl2(&[vec![0, 1, -1]])).unwrap();
        assert!(r.ok());
        assert_eq!(r.adapted, Some(vec![]));
        assert_eq!(r.rank, Some(1));
        assert!(r.a_h.unwrap().is_zero());
    }

    #[test]
    fn sl2_opposite_borel_rank_zero() {
        let r = lst_report(&sl2(&[vec![1, 0, 0], vec![0, 0, 1]])).unwrap();
        assert!(r.ok());
        assert_eq!(r.rank, Some(0));
        assert_eq!(r.a_h.unwrap().dim(), 1);
    }

    #[test]
    fn non_spherical_report() {
        let r = lst_report(&sl2(&[vec![0, 1, 0]])).unwrap();
        assert!(!r.is_spherical);
        assert_eq!(r.defect, 1);
        assert!(r.rank.is_none());
        assert!(!r.ok());
    }

    #[test]
    fn gl2_over_sl2_keeps_center() {
        let g = models::gl(2);
        let cd = CartanData::new(&g, None, None, None).unwrap();
        // sl(2) inside gl(2): E11 - E22, E12, E21
        let p = pair(g, cd, &[vec![1, -1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
        let r = lst_report(&p).unwrap();
        assert!(r.ok());
        assert_eq!(r.adapted, Some(vec![0]));
        assert_eq!(r.rank, Some(1));
    }

    #[test]
    fn misaligned_borel_is_aligned_by_conjugation() {
        // h = span(H + 2E, F - E - H/2 ...) obtained by conjugating a + n̄ with e^{ad E}
        let g = models::sl(2);
        let cd = CartanData::new(&g, None, None, None).unwrap();
        let base = pair(g.clone(), cd, &[vec![1, 0, 0], vec![0, 0, 1]]);
        let m = exp_ad(&g, &[rat(0), rat(1), rat(0)]).unwrap();
        let moved = base.conjugated(&m).unwrap();
        assert_ne!(moved.h, base.h);
        let r = lst_report(&moved).unwrap();
        assert!(r.ok());
        assert_eq!(r.rank, Some(0));
        assert!(r.frame.unwrap().aligned);
    }
}
