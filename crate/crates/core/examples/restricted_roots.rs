//! Restricted roots of sl(3, R) and of sl(2, C) viewed as a real algebra.

use sphercert::liealg::CartanData;
use sphercert::linalg::format_vector;
use sphercert::models;

fn show(name: &str, g: &sphercert::liealg::LieAlgebra) {
    let cd = CartanData::new(g, None, None, None).expect("root data");
    println!("{name}: dim g = {}, dim a = {}, dim m = {}, dim n = {}", g.dim(), cd.a.dim(), cd.m.dim(), cd.n.dim());
    for root in cd.positive_roots() {
        println!(
            "  root {:<12} multiplicity {}  simple coordinates {}",
            format_vector(&root.values),
            root.space.dim(),
            format_vector(&root.simple_coords)
        );
    }
    let simple: Vec<String> = cd.simple_roots().map(|r| format_vector(&r.values)).collect();
    println!("  simple roots: {}", simple.join(", "));
    cd.check_invariants(g).expect("g = m + a + sum of root spaces");
}

fn main() {
    show("sl(3,R)", &models::sl(3));
    show("sl(2,C)", &models::sl2c_real());
    show("so(3)", &models::so(3));
}
