//! Classifying integer functions on the ground set: rank-feasible (level
//! sets feasible), strongly feasible (level intervals boolean), and generic
//! (boolean and modular). Generic functions are exactly what the invariant
//! counts.
//!
//! Run with `cargo run --example coloring_check`.

use megagreedoid::{invariants, samples};

fn main() {
    let m = samples::rooted_graph_megagreedoid();
    println!("ground order: {:?}", m.ground().labels());

    // values are positional against the ground order a, f, p, s
    let cases: &[(&str, [i64; 4])] = &[
        ("f=1 p=2 s=3 a=4", [4, 1, 2, 3]),
        ("f=1 p=2 s=3 a=2", [2, 1, 2, 3]),
        ("f=1 p=1 s=2 a=3", [3, 1, 1, 2]),
        ("f=2 p=1 s=1 a=2", [2, 2, 1, 1]),
        ("constant 1", [1, 1, 1, 1]),
    ];
    for (label, values) in cases {
        println!(
            "{label}: feasible={} strongly={} generic={}",
            invariants::is_feasible_function(&m, values).unwrap(),
            invariants::is_strongly_feasible_function(&m, values).unwrap(),
            invariants::is_generic_function(&m, values).unwrap(),
        );
    }

    println!("\ngeneric-function counts, brute force vs specialization:");
    let chi = invariants::chi_fundamental(&m);
    for n in 1..=5 {
        println!(
            "  {n} colors: {} = {}",
            invariants::oracle_count_generic(&m, n),
            chi.count_specialize(n)
        );
    }

    // the minor convolution splits a count over all feasible restriction sets
    println!(
        "\nconvolution identity at (2,2): {}",
        invariants::convolution_check(&m, 2, 2)
    );
}
