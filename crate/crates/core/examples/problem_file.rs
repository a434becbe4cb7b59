//! Writing a pair as a JSON problem, reading it back and analyzing it.

use sphercert::analysis::{analyze, Options};
use sphercert::linalg::Matrix;
use sphercert::problem::Problem;
use sphercert::report::{analysis_body, render_text};

fn main() {
    let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
    let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
    let h = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let problem = Problem {
        name: "sl2_so2_by_hand".into(),
        matrix_size: 2,
        basis: vec![h, e.clone(), f.clone()],
        subalgebra_basis: vec![e.sub(&f)],
        theta: None,
        a_seed: None,
        positivity_basis: None,
        minimal_parabolic_hint: None,
    };
    let text = problem.to_json_string();
    println!("{text}");
    let parsed = Problem::from_json_str(&text).unwrap();
    assert_eq!(parsed, problem);

    let pair = parsed.build().unwrap();
    let analysis = analyze(&pair, &Options::default()).unwrap();
    println!("{}", render_text(&serde_json::Value::Object(analysis_body(&analysis))));
}
