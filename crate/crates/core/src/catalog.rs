//! Built-in pairs with frozen expectations.
//!
//! Expected values are reproduced in the test suite by an independent
//! brute-force computation that shares no code with the solver.

use crate::analysis::{analyze, Analysis, Options};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::models;
use crate::problem::Problem;
use crate::spherical::SearchOutcome;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub spherical_at_base: bool,
    /// Spherical after the entry's conjugate search.
    pub spherical: bool,
    pub adapted: Option<Vec<usize>>,
    pub rank: Option<usize>,
    pub normalizer_dim: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub search_budget: usize,
    pub expected: Expected,
    pub notes: &'static str,
    build: fn() -> Problem,
}

impl CatalogEntry {
    pub fn problem(&self) -> Problem {
        (self.build)()
    }
}

fn problem(name: &str, g: &crate::liealg::LieAlgebra, h: Vec<Matrix>) -> Problem {
    Problem {
        name: name.to_string(),
        matrix_size: g.matrix_size(),
        basis: g.basis().to_vec(),
        subalgebra_basis: h,
        theta: None,
        a_seed: None,
        positivity_basis: None,
        minimal_parabolic_hint: None,
    }
}

fn m(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(rows)
}

fn sl2_h() -> Matrix {
    m(&[&[1, 0], &[0, -1]])
}

fn sl2_e() -> Matrix {
    m(&[&[0, 1], &[0, 0]])
}

fn sl2_f() -> Matrix {
    m(&[&[0, 0], &[1, 0]])
}

/// Upper triangular positivity for `sl(3)`: `diag(1,0,-1)` then `diag(1,-1,0)`.
fn sl3_positivity() -> Vec<Matrix> {
    vec![m(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]), m(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]])]
}

fn sl2_so2() -> Problem {
    problem("sl2_so2", &models::sl(2), vec![sl2_e().sub(&sl2_f())])
}

fn sl2_opposite_borel() -> Problem {
    problem("sl2_opposite_borel", &models::sl(2), vec![sl2_h(), sl2_f()])
}

fn sl2xsl2_diag() -> Problem {
    let sl2 = models::sl(2);
    let g = models::direct_sum(&[&sl2, &sl2]);
    let mut p = problem("sl2xsl2_diag", &g, models::diagonal_copy(&sl2, 2));
    p.minimal_parabolic_hint = Some(vec![1, -1]);
    p
}

fn sl2_cubed_diag() -> Problem {
    let sl2 = models::sl(2);
    let g = models::direct_sum(&[&sl2, &sl2, &sl2]);
    let mut p = problem("sl2_cubed_diag", &g, models::diagonal_copy(&sl2, 3));
    p.minimal_parabolic_hint = Some(vec![1, 1, -1]);
    p
}

fn sl3_so3() -> Problem {
    let mut p = problem("sl3_so3", &models::sl(3), models::so_basis(3));
    p.positivity_basis = Some(sl3_positivity());
    p
}

fn gl2_e11() -> Problem {
    problem("gl2_e11", &models::gl(2), vec![m(&[&[1, 0], &[0, 0]])])
}

fn so3_so2() -> Problem {
    problem("so3_so2", &models::so(3), vec![m(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]])])
}

fn gl2_sl2() -> Problem {
    problem("gl2_sl2", &models::gl(2), models::sl_basis(2))
}

fn sl3_affine() -> Problem {
    let e = |i: usize, j: usize| Matrix::unit(3, i, j);
    let h1 = e(0, 0).sub(&e(1, 1));
    let mut p = problem("sl3_affine", &models::sl(3), vec![h1, e(0, 1), e(1, 0), e(2, 0), e(2, 1)]);
    p.positivity_basis = Some(sl3_positivity());
    p
}

fn sl2c_real_borel() -> Problem {
    let basis = models::sl2c_real_basis();
    // H, F, iF
    problem("sl2c_real_borel", &models::sl2c_real(), vec![basis[0].clone(), basis[2].clone(), basis[5].clone()])
}

fn sl2_n() -> Problem {
    problem("sl2_n", &models::sl(2), vec![sl2_e()])
}

fn sl2_zero() -> Problem {
    problem("sl2_zero", &models::sl(2), Vec::new())
}

fn spherical(adapted: &[usize], rank: usize, normalizer_dim: usize) -> Expected {
    Expected {
        spherical_at_base: true,
        spherical: true,
        adapted: Some(adapted.to_vec()),
        rank: Some(rank),
        normalizer_dim: Some(normalizer_dim),
    }
}

fn after_search(adapted: &[usize], rank: usize, normalizer_dim: usize) -> Expected {
    Expected { spherical_at_base: false, ..spherical(adapted, rank, normalizer_dim) }
}

const NOT_SPHERICAL: Expected =
    Expected { spherical_at_base: false, spherical: false, adapted: None, rank: None, normalizer_dim: None };

/// All entries, sorted by name.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    let mut entries = vec![
        CatalogEntry {
            name: "sl2_so2",
            description: "sl(2,R) with the compact Cartan subalgebra so(2)",
            search_budget: 0,
            expected: spherical(&[], 1, 1),
            notes: "Riemannian symmetric space; p + k = g.",
            build: sl2_so2,
        },
        CatalogEntry {
            name: "sl2_opposite_borel",
            description: "sl(2,R) with the lower Borel a + n̄",
            search_budget: 0,
            expected: spherical(&[], 0, 2),
            notes: "Open Bruhat cell; the noncompact h fails h + Ad(w)p = g at the Weyl flip.",
            build: sl2_opposite_borel,
        },
        CatalogEntry {
            name: "sl2xsl2_diag",
            description: "sl(2,R) + sl(2,R) with the diagonal, opposite positive systems",
            search_budget: 0,
            expected: spherical(&[], 1, 3),
            notes: "Group case; the positivity hint (+,-) makes the base point open.",
            build: sl2xsl2_diag,
        },
        CatalogEntry {
            name: "sl2_cubed_diag",
            description: "sl(2,R)^3 with the diagonal sl(2,R)",
            search_budget: 200,
            expected: after_search(&[], 3, 3),
            notes: "Triple space. Sign convention (+,+,-); the base point is not open and a conjugate is located by search.",
            build: sl2_cubed_diag,
        },
        CatalogEntry {
            name: "sl3_so3",
            description: "sl(3,R) with so(3)",
            search_budget: 0,
            expected: spherical(&[], 2, 3),
            notes: "Riemannian symmetric space; rank equals the split rank of g.",
            build: sl3_so3,
        },
        CatalogEntry {
            name: "gl2_e11",
            description: "gl(2,R) with span(E11)",
            search_budget: 20,
            expected: after_search(&[], 2, 2),
            notes: "Search finds exp(E21), giving span(E11 + E21). At group level the normalizer is strictly \
                    larger than its identity component; only the algebra is modelled.",
            build: gl2_e11,
        },
        CatalogEntry {
            name: "so3_so2",
            description: "compact so(3) with so(2)",
            search_budget: 0,
            expected: spherical(&[], 0, 1),
            notes: "Compact g: p = g, so Q = G and the rank is zero.",
            build: so3_so2,
        },
        CatalogEntry {
            name: "gl2_sl2",
            description: "gl(2,R) with sl(2,R)",
            search_budget: 0,
            expected: spherical(&[0], 1, 4),
            notes: "h contains the noncompact semisimple part; Q = G and the center carries the rank.",
            build: gl2_sl2,
        },
        CatalogEntry {
            name: "sl3_affine",
            description: "sl(3,R) with sl(2,R) ⋉ R^2 (lower affine)",
            search_budget: 0,
            expected: spherical(&[0], 1, 6),
            notes: "Adapted parabolic is the (2,1) block parabolic; ã = span(diag(1,1,-2)).",
            build: sl3_affine,
        },
        CatalogEntry {
            name: "sl2c_real_borel",
            description: "sl(2,C) as a real algebra with span(H, F, iF)",
            search_budget: 0,
            expected: spherical(&[], 0, 4),
            notes: "m = span(iH) is nonzero; the normalizer adds m̃ = span(iH).",
            build: sl2c_real_borel,
        },
        CatalogEntry {
            name: "sl2_n",
            description: "sl(2,R) with n = span(E)",
            search_budget: 0,
            expected: NOT_SPHERICAL,
            notes: "Not open at the base point (p + n = p). The Weyl conjugate span(F) is open, so a \
                    positive search budget succeeds; the entry is frozen with budget 0.",
            build: sl2_n,
        },
        CatalogEntry {
            name: "sl2_zero",
            description: "sl(2,R) with the zero subalgebra",
            search_budget: 40,
            expected: NOT_SPHERICAL,
            notes: "dim p < dim g, so no conjugate is open; the search reports inconclusive.",
            build: sl2_zero,
        },
    ];
    entries.sort_by_key(|e| e.name);
    entries
}

pub fn find_entry(name: &str) -> Result<CatalogEntry> {
    catalog_entries().into_iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// An entry's analysis compared against its expectations.
#[derive(Clone, Debug)]
pub struct EntryRun {
    pub name: &'static str,
    pub analysis: Analysis,
    pub mismatches: Vec<String>,
}

impl EntryRun {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// What the pipeline actually produced, in the shape of [`Expected`].
pub fn observed(analysis: &Analysis) -> Expected {
    Expected {
        spherical_at_base: analysis.base.spherical,
        spherical: analysis.spherical(),
        adapted: analysis.lst.adapted.clone(),
        rank: analysis.lst.rank,
        normalizer_dim: analysis.normalizer.as_ref().map(|n| n.n_tilde.dim()),
    }
}

pub fn run_entry(entry: &CatalogEntry, seed: u64, samples: usize) -> Result<EntryRun> {
    let pair = entry.problem().build()?;
    let opts = Options { conjugate_search: entry.search_budget, seed, samples };
    let analysis = analyze(&pair, &opts)?;
    let got = observed(&analysis);
    let want = &entry.expected;
    let mut mismatches = Vec::new();
    let mut compare = |field: &str, w: String, g: String| {
        if w != g {
            mismatches.push(format!("{field}: expected {w}, got {g}"));
        }
    };
    compare("spherical_at_base", format!("{}", want.spherical_at_base), format!("{}", got.spherical_at_base));
    compare("spherical", format!("{}", want.spherical), format!("{}", got.spherical));
    compare("adapted", format!("{:?}", want.adapted), format!("{:?}", got.adapted));
    compare("rank", format!("{:?}", want.rank), format!("{:?}", got.rank));
    compare("normalizer_dim", format!("{:?}", want.normalizer_dim), format!("{:?}", got.normalizer_dim));
    if want.spherical && !analysis.ok() {
        mismatches.push("structural checks failed".into());
    }
    if !want.spherical && entry.search_budget > 0 {
        if let Some(SearchOutcome::Found { .. }) = analysis.search {
            mismatches.push("search unexpectedly found an open conjugate".into());
        }
    }
    Ok(EntryRun { name: entry.name, analysis, mismatches })
}
