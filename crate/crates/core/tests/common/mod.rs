//! Checks shared by the acceptance harness and the regular test suite.

#![allow(dead_code)]

use std::time::{Duration, Instant};

use sphercert::analysis::{analyze, orbit_summary, rank_invariance, Options};
use sphercert::catalog::{catalog_entries, find_entry, run_entry, CatalogEntry};
use sphercert::liealg::{simple_ideal_split, CartanData, LieAlgebra};
use sphercert::linalg::{inertia, Matrix};
use sphercert::normalizer::normalizer_report;
use sphercert::parabolic::{all_standard_parabolics, parabolic_containment_check};
use sphercert::spherical::lst_report;
use sphercert::spherical::{compact_transitivity_check, TransitivityVerdict};
use sphercert::spherical::{complementary_subsets, SphericalPair};
use sphercert::models;

use crate::oracle;

pub type Check = Result<String, String>;
pub type Criterion = (&'static str, fn() -> Check);

/// The open representative used for every spherical catalog entry.
pub fn open_pair(entry: &CatalogEntry) -> SphericalPair {
    let pair = entry.problem().build().expect("catalog problems build");
    let opts = Options { conjugate_search: entry.search_budget, seed: 0, samples: 0 };
    analyze(&pair, &opts).expect("analysis runs").pair
}

pub fn spherical_entries() -> Vec<(CatalogEntry, SphericalPair)> {
    catalog_entries()
        .into_iter()
        .filter(|e| e.expected.spherical)
        .map(|e| {
            let p = open_pair(&e);
            (e, p)
        })
        .collect()
}

pub fn to_oracle(m: &Matrix) -> oracle::M {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn uniqueness() -> Check {
    let started = Instant::now();
    let runs: Vec<_> = catalog_entries()
        .iter()
        .map(|e| run_entry(e, 0, 100).map_err(|err| format!("{}: {err}", e.name)))
        .collect::<Result<_, _>>()?;
    let elapsed = started.elapsed();
    for run in &runs {
        ensure(run.passed(), || format!("{}: {:?}", run.name, run.mismatches))?;
    }
    let verdicts: Vec<_> = oracle::cases().iter().map(|c| (c.name, oracle::evaluate(c))).collect();
    let mut checked = 0;
    for (entry, pair) in spherical_entries() {
        let found = complementary_subsets(&pair).map_err(|e| e.to_string())?;
        ensure(found.len() == 1, || format!("{}: {} complementary subsets", entry.name, found.len()))?;
        let (_, v) = verdicts.iter().find(|(n, _)| *n == entry.name).ok_or(format!("{}: no oracle case", entry.name))?;
        ensure(v.passing == vec![found[0].subset.clone()], || {
            format!("{}: library {:?}, oracle {:?}", entry.name, found[0].subset, v.passing)
        })?;
        checked += 1;
    }
    ensure(elapsed < Duration::from_secs(10), || format!("catalog run took {elapsed:?}"))?;
    Ok(format!("{checked} spherical entries, catalog in {:.2}s", elapsed.as_secs_f64()))
}

pub fn lst_conclusions() -> Check {
    let mut checked = 0;
    for (entry, pair) in spherical_entries() {
        let report = lst_report(&pair).map_err(|e| e.to_string())?;
        let checks = report.checks.ok_or(format!("{}: no checks", entry.name))?;
        for (name, ok) in checks.named() {
            ensure(ok, || format!("{}: {name} failed", entry.name))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} entries, 7 identities each"))
}

pub fn rank_values() -> Check {
    let targets = [("sl2_so2", 1), ("sl2_opposite_borel", 0), ("sl2xsl2_diag", 1), ("sl3_so3", 2)];
    let cases = oracle::cases();
    for (name, want) in targets {
        let case = cases.iter().find(|c| c.name == name).ok_or(format!("no oracle case {name}"))?;
        let derived = oracle::evaluate(case).rank;
        ensure(derived == want, || format!("{name}: oracle rank {derived}, expected {want}"))?;
        let pair = open_pair(&find_entry(name).map_err(|e| e.to_string())?);
        let got = lst_report(&pair).map_err(|e| e.to_string())?.rank;
        ensure(got == Some(derived), || format!("{name}: library rank {got:?}, oracle {derived}"))?;
    }
    for case in &cases {
        let pair = open_pair(&find_entry(case.name).map_err(|e| e.to_string())?);
        let got = lst_report(&pair).map_err(|e| e.to_string())?.rank;
        let derived = oracle::evaluate(case).rank;
        ensure(got == Some(derived), || format!("{}: library rank {got:?}, oracle {derived}", case.name))?;
    }
    Ok(format!("4 named ranks, {} entries against the oracle", cases.len()))
}

pub fn rank_invariance_check() -> Check {
    let mut total = 0;
    for (entry, pair) in spherical_entries() {
        let r = rank_invariance(&pair, 20, 7).map_err(|e| format!("{}: {e}", entry.name))?;
        ensure(r.conjugate_ranks.len() >= 20, || format!("{}: only {} conjugates", entry.name, r.conjugate_ranks.len()))?;
        ensure(r.invariant(), || format!("{}: base {} vs {:?}", entry.name, r.base_rank, r.conjugate_ranks))?;
        total += r.conjugate_ranks.len();
    }
    Ok(format!("{total} conjugates"))
}

pub fn orbit_identity() -> Check {
    let mut forward = 0;
    let mut trips = 0;
    for (entry, pair) in spherical_entries() {
        let lst = lst_report(&pair).map_err(|e| e.to_string())?;
        let s = orbit_summary(&pair, &lst, 100, 11).map_err(|e| format!("{}: {e}", entry.name))?;
        ensure(s.forward.samples >= 100 && s.forward.ok(), || {
            format!("{}: forward {}/{}", entry.name, s.forward.passed, s.forward.samples)
        })?;
        ensure(s.round_trips >= 100 && s.round_trip_failures == 0, || {
            format!("{}: {} round-trip failures", entry.name, s.round_trip_failures)
        })?;
        forward += s.forward.passed;
        trips += s.round_trips;
    }
    Ok(format!("{forward} forward samples, {trips} round trips"))
}

pub fn normalizer_suite() -> Check {
    let cases = oracle::cases();
    let mut checked = 0;
    for (entry, pair) in spherical_entries() {
        let r = normalizer_report(&pair).map_err(|e| format!("{}: {e}", entry.name))?;
        ensure(r.split_ok, || format!("{}: splitting failed", entry.name))?;
        ensure(r.elementary_ok, || format!("{}: c~ not elementary", entry.name))?;
        ensure(r.self_normalizing_ok, || format!("{}: n~ not self-normalizing", entry.name))?;
        ensure(r.same_adapted_ok, || format!("{}: adapted subset changed", entry.name))?;
        let lst = lst_report(&pair).map_err(|e| e.to_string())?;
        let fine = &lst.frame.as_ref().ok_or("no frame")?.fine;
        ensure(fine.z_np.contains_subspace(&r.a_tilde), || format!("{}: a~ outside z(l)_np", entry.name))?;
        let compact_side = fine.z_cp.sum(&fine.l_c).map_err(|e| e.to_string())?;
        ensure(compact_side.contains_subspace(&r.m_tilde), || format!("{}: m~ outside z(l)_cp + l_c", entry.name))?;
        let case = cases.iter().find(|c| c.name == entry.name).ok_or("missing oracle case")?;
        let want = oracle::normalizer_dim(&case.g, &case.h);
        ensure(r.n_tilde.dim() == want, || format!("{}: dim n~ {} vs oracle {want}", entry.name, r.n_tilde.dim()))?;
        checked += 1;
    }
    Ok(format!("{checked} entries"))
}

pub fn compact_transitivity() -> Check {
    let so2 = open_pair(&find_entry("sl2_so2").map_err(|e| e.to_string())?);
    let r = compact_transitivity_check(&so2, 100, 3).map_err(|e| e.to_string())?;
    ensure(r.compact_type && r.verdict == TransitivityVerdict::ConsistentWithCompact && r.samples_checked >= 100, || {
        format!("so(2): {:?} after {}", r.verdict, r.samples_checked)
    })?;
    let borel = open_pair(&find_entry("sl2_opposite_borel").map_err(|e| e.to_string())?);
    let b = compact_transitivity_check(&borel, 100, 3).map_err(|e| e.to_string())?;
    let weyl = sphercert::group::weyl_representatives(&borel.g, &borel.cd).map_err(|e| e.to_string())?;
    ensure(b.verdict == TransitivityVerdict::WitnessOfNoncompactness, || format!("borel: {:?}", b.verdict))?;
    let idx = b.witness_index.ok_or("no witness index")?;
    ensure(idx < weyl.len(), || format!("witness {idx} outside the {} Bruhat representatives", weyl.len()))?;
    Ok(format!("so(2) {} samples, borel witness at representative {idx}", r.samples_checked))
}

fn algebra_ideal_flags(g: &LieAlgebra) -> Result<Vec<(bool, bool)>, String> {
    let split = simple_ideal_split(g, &g.full(), &[]).map_err(|e| e.to_string())?;
    Ok(split
        .ideals
        .iter()
        .map(|ideal| {
            let mats: Vec<oracle::M> = ideal.space.basis().iter().map(|v| to_oracle(&g.matrix(v))).collect();
            (ideal.compact, oracle::negative_definite(&oracle::killing(&mats)))
        })
        .collect())
}

pub fn compactness() -> Check {
    let so3 = models::so(3);
    let sl2 = models::sl(2);
    ensure(inertia(&so3.killing_form()).map_err(|e| e.to_string())?.is_negative_definite(), || "so(3) not negative definite".into())?;
    ensure(!inertia(&sl2.killing_form()).map_err(|e| e.to_string())?.is_negative_definite(), || "sl(2) negative definite".into())?;
    let so3_m: Vec<oracle::M> = models::so_basis(3).iter().map(to_oracle).collect();
    let sl2_m: Vec<oracle::M> = models::sl_basis(2).iter().map(to_oracle).collect();
    ensure(oracle::negative_definite(&oracle::killing(&so3_m)), || "oracle: so(3)".into())?;
    ensure(!oracle::negative_definite(&oracle::killing(&sl2_m)), || "oracle: sl(2)".into())?;
    let mixed = models::direct_sum(&[&sl2, &so3]);
    let algebras = [("so3", so3), ("sl2", sl2), ("sl2+so3", mixed), ("gl2", models::gl(2)), ("sl2c", models::sl2c_real())];
    let mut ideals = 0;
    for (name, g) in &algebras {
        for (flag, oracle_flag) in algebra_ideal_flags(g)? {
            ensure(flag == oracle_flag, || format!("{name}: split flag {flag}, Sylvester {oracle_flag}"))?;
            ideals += 1;
        }
    }
    let flags = algebra_ideal_flags(&algebras[2].1)?;
    ensure(flags.len() == 2 && flags.iter().filter(|f| f.0).count() == 1, || format!("sl2+so3 flags {flags:?}"))?;
    Ok(format!("{ideals} simple ideals classified"))
}

pub fn lattice_algebras() -> Vec<(&'static str, LieAlgebra)> {
    let sl2 = models::sl(2);
    let sl3 = models::sl(3);
    vec![
        ("sl2", sl2.clone()),
        ("gl2", models::gl(2)),
        ("sl3", sl3.clone()),
        ("sl4", models::sl(4)),
        ("sl2^2", models::direct_sum(&[&sl2, &sl2])),
        ("sl2^3", models::direct_sum(&[&sl2, &sl2, &sl2])),
        ("sl2+sl3", models::direct_sum(&[&sl2, &sl3])),
        ("sl2c", models::sl2c_real()),
    ]
}

pub fn parabolic_lattice() -> Check {
    let mut pairs = 0;
    for (name, g) in lattice_algebras() {
        let cd = CartanData::new(&g, None, None, None).map_err(|e| format!("{name}: {e}"))?;
        ensure(cd.simple.len() <= 3, || format!("{name}: rank too large"))?;
        let qs = all_standard_parabolics(&cd).map_err(|e| e.to_string())?;
        ensure(qs.len() == 1 << cd.simple.len(), || format!("{name}: {} parabolics", qs.len()))?;
        for q in &qs {
            for q2 in &qs {
                let subset = q.subset.iter().all(|i| q2.subset.contains(i));
                let contained = q2.q.contains_subspace(&q.q);
                ensure(subset == contained, || format!("{name}: {:?} vs {:?}", q.subset, q2.subset))?;
                let disjoint = parabolic_containment_check(q, q2).map_err(|e| format!("{name}: {e}"))?;
                ensure(!disjoint || contained, || format!("{name}: lemma fails at {:?}, {:?}", q.subset, q2.subset))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

pub const CRITERIA: [Criterion; 9] = [
    ("uniqueness_of_adapted_parabolic", uniqueness),
    ("levi_structure_identities", lst_conclusions),
    ("rank_values", rank_values),
    ("rank_invariance", rank_invariance_check),
    ("orbit_identity", orbit_identity),
    ("normalizer_suite", normalizer_suite),
    ("compact_transitivity", compact_transitivity),
    ("compactness_classification", compactness),
    ("parabolic_lattice", parabolic_lattice),
];
