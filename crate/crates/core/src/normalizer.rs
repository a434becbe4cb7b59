//! The normalizer `ñ = n_g(h)` of a spherical subalgebra and its splitting
//! `ñ = h ⊕ ã ⊕ m̃`.

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{inertia, kernel, DirectSum, Matrix, Subspace, Vector};
use crate::spherical::{adapted_parabolic, lst_report, SphericalPair};

/// Exact normalizer of the subalgebra `h`; checks that the result is a
/// subalgebra in which `h` is an ideal.
pub fn normalizer_in(g: &LieAlgebra, h: &Subspace) -> Result<Subspace> {
    if !g.is_subalgebra(h) {
        return Err(Error::NotSubalgebra);
    }
    let n = g.normalizer_within(h, &g.full());
    if !g.is_subalgebra(&n) || !h.contains_subspace(&g.bracket_span(&n, h)) {
        return Err(Error::Internal("normalizer is not a subalgebra containing h as an ideal".into()));
    }
    Ok(n)
}

#[derive(Clone, Debug)]
pub struct NormalizerReport {
    /// `n_g(h)` for the `h` as given.
    pub n_tilde: Subspace,
    /// `n_g(h°)` for the conjugate `h°` used by the local structure report.
    pub n_tilde_aligned: Subspace,
    pub c_tilde: Subspace,
    pub a_tilde: Subspace,
    pub m_tilde: Subspace,
    pub split_ok: bool,
    pub elementary_ok: bool,
    pub self_normalizing_ok: bool,
    pub same_adapted_ok: bool,
}

impl NormalizerReport {
    pub fn all_ok(&self) -> bool {
        self.split_ok && self.elementary_ok && self.self_normalizing_ok && self.same_adapted_ok
    }
}

pub fn normalizer_report(pair: &SphericalPair) -> Result<NormalizerReport> {
    let g = &pair.g;
    let lst = lst_report(pair)?;
    if !lst.is_spherical {
        return Err(Error::NotSpherical { defect: lst.defect });
    }
    let frame = lst.frame.ok_or(Error::NotUnique { passing: Vec::new() })?;
    let fine = &frame.fine;
    let h = &frame.h_aligned;
    let n_tilde = normalizer_in(g, &pair.h)?;
    let n_al = normalizer_in(g, h)?;

    let d = fine.compact_and_center();
    let w = n_al.intersect(&d)?;
    let c = h.intersect(&d)?;
    let compact_side = fine.z_cp.sum(&fine.l_c)?;
    let project = |slots: &[usize]| -> Subspace {
        let vs: Vec<Vector> = w
            .basis()
            .iter()
            .map(|x| {
                let comps = fine.decomposition().components(x).expect("w lies in l");
                slots.iter().fold(g.zero(), |acc, &s| crate::linalg::add_vectors(&acc, &comps[s]))
            })
            .collect();
        Subspace::span(g.dim(), &vs).expect("same ambient")
    };
    let w_a = project(&[0]);
    let w_m = project(&[1, 2]);
    let projections_inside = w.contains_subspace(&w_a) && w.contains_subspace(&w_m);

    let a_tilde = c.sum(&w_m)?.intersect(&w_a)?.complement_in(&w_a)?;
    let taken = c.sum(&a_tilde)?.intersect(&w_m)?;
    let m_tilde = orthogonal_complement(g, &taken, &w_m)?;
    let c_tilde = DirectSum::new(vec![a_tilde.clone(), m_tilde.clone()])
        .map(|s| s.total().clone())
        .unwrap_or_else(|_| a_tilde.sum(&m_tilde).expect("same ambient"));

    let normalizes = |s: &Subspace| h.contains_subspace(&g.bracket_span(s, h));
    let split_ok = projections_inside
        && c_tilde.dim() == a_tilde.dim() + m_tilde.dim()
        && c_tilde.intersect(h)?.is_zero()
        && c_tilde.sum(h)? == n_al
        && normalizes(&a_tilde)
        && normalizes(&m_tilde)
        && g.bracket_span(&a_tilde, &m_tilde).is_zero()
        && g.is_subalgebra(&c_tilde)
        && fine.z_np.contains_subspace(&a_tilde)
        && compact_side.contains_subspace(&m_tilde);

    let center_g = g.center_of(&g.full());
    let m_form = g.restrict_form(&g.killing_form(), &m_tilde);
    let m_radical: Vec<Vector> = kernel(&m_form).basis().iter().map(|t| m_tilde.element(t)).collect();
    let elementary_ok = g.is_abelian(&a_tilde)
        && pair.cd.a.contains_subspace(&a_tilde)
        && inertia(&m_form)?.is_negative_semidefinite()
        && m_radical.iter().all(|x| center_g.contains(x));

    let self_normalizing_ok = normalizer_in(g, &n_al)? == n_al && normalizer_in(g, &n_tilde)? == n_tilde;

    let u = &frame.parabolic.u;
    let n_n = pair.cd.n.intersect(&n_al)?;
    let complement_ok = u.intersect(&n_n)?.is_zero() && u.dim() + n_n.dim() == pair.cd.n.dim();
    let same_adapted_ok = complement_ok
        && adapted_parabolic(&pair.with_h(n_tilde.clone())?)
            .map(|a| a.parabolic.subset == frame.parabolic.subset)
            .unwrap_or(false);

    Ok(NormalizerReport {
        n_tilde,
        n_tilde_aligned: n_al,
        c_tilde,
        a_tilde,
        m_tilde,
        split_ok,
        elementary_ok,
        self_normalizing_ok,
        same_adapted_ok,
    })
}

/// Complement of `inner` in `outer` orthogonal for `-κ`, which is positive
/// definite on the compactly embedded subalgebras where this is used.
fn orthogonal_complement(g: &LieAlgebra, inner: &Subspace, outer: &Subspace) -> Result<Subspace> {
    if inner.is_zero() {
        return Ok(outer.clone());
    }
    let form = g.invariant_form()?;
    let rows: Vec<Vector> = inner
        .basis()
        .iter()
        .map(|x| {
            let fx = form.mul_vec(x);
            outer.basis().iter().map(|y| crate::linalg::dot(&fx, y)).collect()
        })
        .collect();
    let sol = kernel(&Matrix::from_rows(&rows)?);
    let vs: Vec<Vector> = sol.basis().iter().map(|t| outer.element(t)).collect();
    Subspace::span(g.dim(), &vs)
}
