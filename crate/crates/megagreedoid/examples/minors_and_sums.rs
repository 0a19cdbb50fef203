//! Restriction, contraction, and direct sums, and how the graph-level
//! operations (with half-edges and parallel edges) commute with them.
//!
//! Run with `cargo run --example minors_and_sums`.

use megagreedoid::constructions::from_rooted_graph;
use megagreedoid::{samples, Megagreedoid};

fn print_structure(label: &str, m: &Megagreedoid) {
    println!("{label}: on {:?}, {}", m.ground().labels(), m.encode());
}

fn main() {
    let g = samples::rooted_graph();
    let m = from_rooted_graph(&g).unwrap();
    let fp = m.ground().subset_of_labels(["f", "p"]).unwrap();

    print_structure("restriction to {f,p}", &m.restrict(fp).unwrap());
    print_structure("contraction by {f,p}", &m.contract(fp).unwrap());

    // the same operations at the graph level
    let restricted = g.restrict(fp).unwrap();
    println!(
        "\nrestricted graph keeps edges {:?} and gains half-edges at {:?}",
        restricted.edge_labels(),
        restricted.half_edge_labels()
    );
    let contracted = g.contract(fp).unwrap();
    println!(
        "contracted graph has edges {:?} (note the doubled root edge)",
        contracted.edge_labels()
    );

    // building after cutting equals cutting after building
    assert_eq!(from_rooted_graph(&restricted).unwrap(), m.restrict(fp).unwrap());
    assert_eq!(from_rooted_graph(&contracted).unwrap(), m.contract(fp).unwrap());
    println!("\ngraph minors commute with structure minors on this subset");

    // direct sums concatenate label-disjoint structures
    let left = samples::greedoid_megagreedoid();
    let right = samples::polymatroid_megagreedoid()
        .with_labels(&["x", "y", "z"])
        .unwrap();
    let sum = left.direct_sum(&right).unwrap();
    println!(
        "\ndirect sum on {:?}: {} feasible sets, rank of the full set {}",
        sum.ground().labels(),
        sum.family().len(),
        sum.rank(sum.ground().full()).unwrap()
    );
}
