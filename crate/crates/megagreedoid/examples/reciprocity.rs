//! Combinatorial reciprocity: the counting polynomial at negative
//! arguments counts rank-feasible functions weighted by distinct greedy
//! vertices, and for rooted graphs its value at -1 counts the acyclic
//! orientations in which every vertex can reach the root.
//!
//! Run with `cargo run --example reciprocity`.

use megagreedoid::constructions::from_poset;
use megagreedoid::{invariants, samples};

fn main() {
    let g = samples::rooted_graph();
    let m = samples::rooted_graph_megagreedoid();
    let poly = invariants::chi_fundamental(&m).counting_polynomial();

    println!("counting polynomial: {poly}");
    for n in 1..=3 {
        println!(
            "  value at -{n}: {} (sign-corrected: {})",
            poly.eval(-n),
            invariants::reciprocity_eval(&m, n)
        );
    }

    println!(
        "\nacyclic orientations reaching the root: {}",
        invariants::count_rooted_acyclic_orientations(&g).unwrap()
    );

    // the vertex-weighted count over all rank-feasible functions
    for n in 1..=3 {
        println!(
            "sum of vertex multiplicities over feasible functions into [{n}]: {} = {}",
            invariants::vertex_count_sum(&m, n),
            invariants::reciprocity_eval(&m, n)
        );
    }

    // the same identity on a small poset
    let chain = from_poset(&samples::chain_poset()).unwrap();
    println!(
        "\ntwo-chain poset at 4 colors: {} weak maps = {}",
        invariants::vertex_count_sum(&chain, 4),
        invariants::reciprocity_eval(&chain, 4)
    );
}
