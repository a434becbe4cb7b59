use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::group::{exp_ad, random_group_element, weyl_representatives};
use crate::linalg::Matrix;

use super::{is_spherical, SphericalPair};

/// Outcome of a search for `g` with `p + Ad(g)h = g`.
#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found {
        /// Coordinate matrix of `Ad(g)`.
        element: Matrix,
        /// Number of candidates tried, including the successful one.
        attempts: usize,
        pair: Box<SphericalPair>,
    },
    /// Nothing found within the budget. This is not a proof of non-sphericity.
    Inconclusive { attempts: usize },
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        matches!(self, SearchOutcome::Found { .. })
    }
}

/// Tries the identity, then Weyl representatives combined with unit
/// exponentials of root vectors (negative roots first), then random
/// products, for at most `budget` candidates beyond the identity.
pub fn conjugate_search(pair: &SphericalPair, budget: usize, seed: u64) -> Result<SearchOutcome> {
    let g = &pair.g;
    let id = Matrix::identity(g.dim());
    if is_spherical(pair).spherical {
        return Ok(SearchOutcome::Found { element: id, attempts: 1, pair: Box::new(pair.clone()) });
    }
    let mut attempts = 1;
    let try_element = |m: Matrix, attempts: &mut usize| -> Result<Option<SearchOutcome>> {
        *attempts += 1;
        let candidate = pair.conjugated(&m)?;
        Ok(is_spherical(&candidate).spherical.then(|| SearchOutcome::Found {
            element: m,
            attempts: *attempts,
            pair: Box::new(candidate),
        }))
    };
    if budget == 0 {
        return Ok(SearchOutcome::Inconclusive { attempts });
    }

    let weyl = weyl_representatives(g, &pair.cd)?;
    let mut root_vectors = Vec::new();
    for root in pair.cd.roots.iter().filter(|r| !r.positive).chain(pair.cd.positive_roots()) {
        root_vectors.extend(root.space.basis().iter().cloned());
    }
    let exps = root_vectors.iter().map(|x| exp_ad(g, x)).collect::<Result<Vec<_>>>()?;
    for w in &weyl {
        for m in std::iter::once(w.clone()).chain(exps.iter().map(|e| e.mul(w))) {
            if attempts > budget {
                return Ok(SearchOutcome::Inconclusive { attempts });
            }
            if let Some(found) = try_element(m, &mut attempts)? {
                return Ok(found);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while attempts <= budget {
        let m = random_group_element(&mut rng, g, &pair.cd, &weyl)?;
        if let Some(found) = try_element(m, &mut attempts)? {
            return Ok(found);
        }
    }
    Ok(SearchOutcome::Inconclusive { attempts })
}
