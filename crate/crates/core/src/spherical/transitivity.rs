use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{random_group_element, weyl_representatives};
use crate::linalg::{inertia, Matrix};

use super::{is_spherical, SphericalPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransitivityVerdict {
    /// `h` is of compact type and `h + Ad(g)p = g` held on every sample.
    ConsistentWithCompact,
    /// `h` is of noncompact type and some sample violates `h + Ad(g)p = g`.
    WitnessOfNoncompactness,
    /// `h` is of noncompact type but no sample failed.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct TransitivityReport {
    pub compact_type: bool,
    pub verdict: TransitivityVerdict,
    pub samples_checked: usize,
    /// Index of the failing sample (Weyl representatives come first).
    pub witness_index: Option<usize>,
    pub witness: Option<Matrix>,
}

/// Samples automorphisms `g` (Weyl representatives first, then random
/// products) and tests `h + Ad(g)p = g`.
pub fn compact_transitivity_check(pair: &SphericalPair, samples: usize, seed: u64) -> Result<TransitivityReport> {
    let g = &pair.g;
    if !g.is_semisimple() {
        return Err(Error::Hypothesis("g is not semisimple".into()));
    }
    if !g.largest_ideal_in(&pair.h).is_zero() {
        return Err(Error::Hypothesis("h contains a nonzero ideal of g".into()));
    }
    let sph = is_spherical(pair);
    if !sph.spherical {
        return Err(Error::NotSpherical { defect: sph.defect });
    }
    let form = g.restrict_form(&g.killing_form(), &pair.h);
    let compact_type = inertia(&form)?.is_negative_definite();

    let weyl = weyl_representatives(g, &pair.cd)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for index in 0..samples {
        let m = match weyl.get(index) {
            Some(w) => w.clone(),
            None => random_group_element(&mut rng, g, &pair.cd, &weyl)?,
        };
        let moved_p = pair.cd.p.image(&m);
        if pair.h.sum(&moved_p)?.dim() != g.dim() {
            if compact_type {
                return Err(Error::Internal("compact-type h failed h + Ad(g)p = g".into()));
            }
            return Ok(TransitivityReport {
                compact_type,
                verdict: TransitivityVerdict::WitnessOfNoncompactness,
                samples_checked: index + 1,
                witness_index: Some(index),
                witness: Some(m),
            });
        }
    }
    let verdict = if compact_type { TransitivityVerdict::ConsistentWithCompact } else { TransitivityVerdict::Inconclusive };
    Ok(TransitivityReport { compact_type, verdict, samples_checked: samples, witness_index: None, witness: None })
}
