//! Normalizer of h and its splitting into h plus an elementary part.

use sphercert::catalog::find_entry;
use sphercert::normalizer::normalizer_report;

fn main() {
    for name in ["sl2_so2", "sl3_affine", "gl2_sl2", "sl2c_real_borel", "so3_so2"] {
        let pair = find_entry(name).unwrap().problem().build().unwrap();
        let r = normalizer_report(&pair).unwrap();
        println!(
            "{name:<16} dim h = {}  dim n(h) = {}  c~ = a~ ({}) + m~ ({})  split {}  elementary {}  self-normalizing {}  same F {}",
            pair.h.dim(),
            r.n_tilde.dim(),
            r.a_tilde.dim(),
            r.m_tilde.dim(),
            r.split_ok,
            r.elementary_ok,
            r.self_normalizing_ok,
            r.same_adapted_ok
        );
    }
}
