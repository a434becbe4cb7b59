//! e^{ad U} X0 stays in X0 + [X0, u], and every such point is reached.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sphercert::group::random_element;
use sphercert::liealg::CartanData;
use sphercert::linalg::format_vector;
use sphercert::models;
use sphercert::orbit::{exp_ad_apply, orbit_identity_check, solve_conjugator, DerivationPair};
use sphercert::parabolic::{characteristic_element, standard_parabolic};

fn main() {
    let g = models::sl(3);
    let cd = CartanData::new(&g, None, None, None).unwrap();
    let q = standard_parabolic(&cd, &[]).unwrap();
    let xs = characteristic_element(&g, &cd, &[]).unwrap();
    println!("X_s = {}", g.matrix(&xs));
    let dp = DerivationPair::new(&g, q.u.clone(), xs).unwrap();
    for (value, layer) in dp.layers() {
        println!("eigenvalue {value} on a layer of dimension {}", layer.dim());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let check = orbit_identity_check(&g, &dp, 100, &mut rng).unwrap();
    println!("forward identity: {}/{} samples", check.passed, check.samples);

    let w = random_element(&mut rng, &dp.image());
    let u = solve_conjugator(&g, &dp, &w).unwrap();
    let moved = exp_ad_apply(&g, &u, dp.x0()).unwrap();
    println!("target offset  {}", format_vector(&w));
    println!("conjugator U   {}", format_vector(&u));
    println!("e^(ad U) X0    {}", format_vector(&moved));
}
