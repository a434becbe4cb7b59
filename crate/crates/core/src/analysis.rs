//! End-to-end analysis of a pair: openness at the base point, optional
//! conjugate search, local structure report, normalizer and orbit checks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{random_group_element, random_p_element, weyl_representatives};
use crate::normalizer::{normalizer_report, NormalizerReport};
use crate::orbit::{exp_ad_apply, orbit_identity_check, solve_conjugator, DerivationPair, OrbitCheck};
use crate::spherical::{conjugate_search, is_spherical, lst_report, LstReport, SearchOutcome, Sphericity, SphericalPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub conjugate_search: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { conjugate_search: 0, seed: 0, samples: 100 }
    }
}

/// Forward samples and round trips of the orbit identity for `(u_F, X_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    pub forward: OrbitCheck,
    pub round_trips: usize,
    pub round_trip_failures: usize,
}

impl OrbitSummary {
    pub fn ok(&self) -> bool {
        self.forward.ok() && self.round_trip_failures == 0
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub base: Sphericity,
    pub search: Option<SearchOutcome>,
    /// The pair actually analyzed (conjugated if the search succeeded).
    pub pair: SphericalPair,
    pub lst: LstReport,
    pub normalizer: Option<NormalizerReport>,
    pub orbit: Option<OrbitSummary>,
}

impl Analysis {
    pub fn spherical(&self) -> bool {
        self.lst.is_spherical
    }

    pub fn ok(&self) -> bool {
        self.lst.ok()
            && self.normalizer.as_ref().map(|n| n.all_ok()).unwrap_or(false)
            && self.orbit.as_ref().map(|o| o.ok()).unwrap_or(false)
    }
}

pub fn analyze(pair: &SphericalPair, opts: &Options) -> Result<Analysis> {
    let base = is_spherical(pair);
    let (search, working) = if base.spherical {
        (None, pair.clone())
    } else if opts.conjugate_search > 0 {
        let outcome = conjugate_search(pair, opts.conjugate_search, opts.seed)?;
        let working = match &outcome {
            SearchOutcome::Found { pair, .. } => (**pair).clone(),
            SearchOutcome::Inconclusive { .. } => pair.clone(),
        };
        (Some(outcome), working)
    } else {
        (None, pair.clone())
    };
    let lst = lst_report(&working)?;
    let (normalizer, orbit) = if lst.ok() {
        (Some(normalizer_report(&working)?), Some(orbit_summary(&working, &lst, opts.samples, opts.seed)?))
    } else {
        (None, None)
    };
    Ok(Analysis { base, search, pair: working, lst, normalizer, orbit })
}

/// Orbit identity checks for the derivation pair `(u_F, X_s)` of the adapted
/// parabolic.
pub fn orbit_summary(pair: &SphericalPair, lst: &LstReport, samples: usize, seed: u64) -> Result<OrbitSummary> {
    let frame = lst.frame.as_ref().ok_or(Error::NotSpherical { defect: lst.defect })?;
    let g = &pair.g;
    let dp = DerivationPair::new(g, frame.parabolic.u.clone(), frame.x_s.clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let forward = orbit_identity_check(g, &dp, samples, &mut rng)?;
    let image = dp.image();
    let mut failures = 0;
    for _ in 0..samples {
        let w = crate::group::random_element(&mut rng, &image);
        let ok = solve_conjugator(g, &dp, &w)
            .and_then(|u| exp_ad_apply(g, &u, dp.x0()))
            .map(|moved| moved == crate::linalg::add_vectors(dp.x0(), &w))
            .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    Ok(OrbitSummary { forward, round_trips: samples, round_trip_failures: failures })
}

/// Ranks of conjugates `Ad(x)h` that stay open at the base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankInvariance {
    pub base_rank: usize,
    pub conjugate_ranks: Vec<usize>,
    /// Random candidates discarded because the conjugate was not open.
    pub rejected: usize,
}

impl RankInvariance {
    pub fn invariant(&self) -> bool {
        self.conjugate_ranks.iter().all(|&r| r == self.base_rank)
    }
}

/// Samples `count` openness-preserving conjugates: half from the identity
/// component of `P` (which fixes `p`), the rest random elements filtered by
/// the openness test.
pub fn rank_invariance(pair: &SphericalPair, count: usize, seed: u64) -> Result<RankInvariance> {
    let base = lst_report(pair)?;
    let base_rank = base.rank.ok_or(Error::NotSpherical { defect: base.defect })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weyl = weyl_representatives(&pair.g, &pair.cd)?;
    let mut ranks = Vec::with_capacity(count);
    let mut rejected = 0;
    let from_p = count / 2;
    while ranks.len() < count {
        let m = if ranks.len() < from_p {
            random_p_element(&mut rng, &pair.g, &pair.cd)?
        } else {
            random_group_element(&mut rng, &pair.g, &pair.cd, &weyl)?
        };
        let candidate = pair.conjugated(&m)?;
        if !is_spherical(&candidate).spherical {
            rejected += 1;
            if rejected > 50 * count {
                return Err(Error::Internal("too few open conjugates found".into()));
            }
            continue;
        }
        let r = lst_report(&candidate)?;
        ranks.push(r.rank.ok_or_else(|| Error::Internal("open conjugate without a rank".into()))?);
    }
    Ok(RankInvariance { base_rank, conjugate_ranks: ranks, rejected })
}
