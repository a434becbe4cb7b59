//! Levi structure checks and the real rank of several spherical pairs.

use sphercert::catalog::find_entry;
use sphercert::spherical::lst_report;

fn main() {
    for name in ["sl2_so2", "sl2_opposite_borel", "sl2xsl2_diag", "sl3_so3", "sl3_affine", "sl2c_real_borel"] {
        let pair = find_entry(name).unwrap().problem().build().unwrap();
        let report = lst_report(&pair).unwrap();
        let checks = report.checks.expect("spherical pair");
        let dims = |s: &Option<sphercert::linalg::Subspace>| s.as_ref().map_or(0, |s| s.dim());
        println!("{name}: rank {:?}  (dim a_h = {}, dim a_Z = {})", report.rank, dims(&report.a_h), dims(&report.a_z));
        for (check, ok) in checks.named() {
            println!("    {check:<24} {ok}");
        }
    }
}
