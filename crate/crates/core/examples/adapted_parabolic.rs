//! The unique parabolic whose nilradical complements n ∩ h in n.

use sphercert::catalog::find_entry;
use sphercert::spherical::{adapted_parabolic, complementary_subsets, is_spherical};

fn main() {
    for name in ["sl3_affine", "sl3_so3", "gl2_sl2", "sl2xsl2_diag"] {
        let pair = find_entry(name).unwrap().problem().build().unwrap();
        let open = is_spherical(&pair);
        let passing: Vec<_> = complementary_subsets(&pair).unwrap().into_iter().map(|q| q.subset).collect();
        let adapted = adapted_parabolic(&pair).unwrap();
        println!(
            "{name:<14} open: {} defect: {}  passing subsets: {:?}  adapted F = {:?}  dim q = {}, dim u = {}",
            open.spherical,
            open.defect,
            passing,
            adapted.parabolic.subset,
            adapted.parabolic.q.dim(),
            adapted.parabolic.u.dim()
        );
    }
}
