//! Spherical pairs `(g, h)`: the open-orbit test, the adapted parabolic,
//! the local structure checks and the real rank.

mod lst;
mod search;
mod transitivity;

pub use lst::{aligned_frame, lst_report, AlignedFrame, LstChecks, LstReport};
pub use search::{conjugate_search, SearchOutcome};
pub use transitivity::{compact_transitivity_check, TransitivityReport, TransitivityVerdict};

use crate::error::{Error, Result};
use crate::liealg::{CartanData, LieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::parabolic::{all_standard_parabolics, ParabolicData};

/// A reductive `g` with fixed Cartan data and a subalgebra `h`.
#[derive(Clone, Debug)]
pub struct SphericalPair {
    pub g: LieAlgebra,
    pub cd: CartanData,
    pub h: Subspace,
    pub label: Option<String>,
}

impl SphericalPair {
    pub fn new(g: LieAlgebra, cd: CartanData, h: Subspace, label: Option<String>) -> Result<Self> {
        if h.ambient_dim() != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), found: h.ambient_dim() });
        }
        if !g.is_subalgebra(&h) {
            return Err(Error::NotSubalgebra);
        }
        Ok(SphericalPair { g, cd, h, label })
    }

    /// The same `g` and Cartan data with `h` replaced.
    pub fn with_h(&self, h: Subspace) -> Result<Self> {
        SphericalPair::new(self.g.clone(), self.cd.clone(), h, self.label.clone())
    }

    /// `(g, Ad(m) h)` for an automorphism `m` given in coordinates.
    pub fn conjugated(&self, m: &Matrix) -> Result<Self> {
        self.with_h(self.h.image(m))
    }
}

/// Result of the base-point openness test `p + h = g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sphericity {
    pub spherical: bool,
    /// `dim g - dim(p + h)`.
    pub defect: usize,
}

pub fn is_spherical(pair: &SphericalPair) -> Sphericity {
    let sum = pair.cd.p.sum(&pair.h).expect("same ambient");
    let defect = pair.g.dim() - sum.dim();
    Sphericity { spherical: defect == 0, defect }
}

/// The unique standard parabolic whose nilradical complements `n ∩ h` in `n`.
#[derive(Clone, Debug)]
pub struct AdaptedParabolic {
    pub parabolic: ParabolicData,
    /// Every subset that passed the complementarity test (exactly one).
    pub candidates: Vec<Vec<usize>>,
}

/// Subsets `F` with `u_F ⊕ (n ∩ h) = n`, in binary-counting order.
pub fn complementary_subsets(pair: &SphericalPair) -> Result<Vec<ParabolicData>> {
    let n_h = pair.cd.n.intersect(&pair.h)?;
    let n_dim = pair.cd.n.dim();
    Ok(all_standard_parabolics(&pair.cd)?
        .into_iter()
        .filter(|q| q.u.dim() + n_h.dim() == n_dim && q.u.intersect(&n_h).map(|i| i.is_zero()).unwrap_or(false))
        .collect())
}

pub fn adapted_parabolic(pair: &SphericalPair) -> Result<AdaptedParabolic> {
    let sph = is_spherical(pair);
    if !sph.spherical {
        return Err(Error::NotSpherical { defect: sph.defect });
    }
    let mut passing = complementary_subsets(pair)?;
    if passing.len() != 1 {
        return Err(Error::NotUnique { passing: passing.into_iter().map(|q| q.subset).collect() });
    }
    let parabolic = passing.pop().expect("one candidate");
    Ok(AdaptedParabolic { candidates: vec![parabolic.subset.clone()], parabolic })
}
