//! h + Ad(g)p = g for compact h, and a Bruhat witness for a noncompact one.

use sphercert::catalog::find_entry;
use sphercert::spherical::compact_transitivity_check;

fn main() {
    for name in ["sl2_so2", "sl2_opposite_borel", "sl3_so3"] {
        let pair = find_entry(name).unwrap().problem().build().unwrap();
        let r = compact_transitivity_check(&pair, 100, 0).unwrap();
        println!(
            "{name:<20} compact type: {:<5}  verdict: {:?}  samples: {}  witness index: {:?}",
            r.compact_type, r.verdict, r.samples_checked, r.witness_index
        );
        if let Some(w) = r.witness {
            println!("witness automorphism (coordinates):\n{w}");
        }
    }
}
