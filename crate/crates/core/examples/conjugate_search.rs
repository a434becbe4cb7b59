//! Finding an open conjugate Ad(x)h when the base point is not open.

use sphercert::catalog::find_entry;
use sphercert::spherical::{conjugate_search, is_spherical, lst_report, SearchOutcome};

fn main() {
    for (name, budget) in [("gl2_e11", 20), ("sl2_cubed_diag", 200), ("sl2_zero", 40)] {
        let pair = find_entry(name).unwrap().problem().build().unwrap();
        println!("{name}: defect at the base point {}", is_spherical(&pair).defect);
        match conjugate_search(&pair, budget, 0).unwrap() {
            SearchOutcome::Found { attempts, pair, .. } => {
                let r = lst_report(&pair).unwrap();
                println!("  open conjugate after {attempts} attempts: adapted {:?}, rank {:?}", r.adapted, r.rank);
            }
            SearchOutcome::Inconclusive { attempts } => println!("  no open conjugate in {attempts} attempts"),
        }
    }
}
