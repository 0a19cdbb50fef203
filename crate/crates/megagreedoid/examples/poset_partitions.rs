//! Posets as input: the family of lower order ideals with the cardinality
//! rank. Feasible permutations are the linear extensions, generic integer
//! functions are the strict order-preserving maps, and the counting
//! polynomial enumerates them.
//!
//! Run with `cargo run --example poset_partitions`.

use megagreedoid::constructions::{from_poset, Poset};
use megagreedoid::{invariants, GroundSet};

fn main() {
    // a V: x and y below z, plus an incomparable w
    let ground = GroundSet::new(["w", "x", "y", "z"]).unwrap();
    let poset = Poset::new(ground, &[("x", "z"), ("y", "z")]).unwrap();
    let m = from_poset(&poset).unwrap();

    println!("ideals ({}):", m.family().len());
    for (s, _) in m.entries() {
        print!(" {}", m.ground().format_subset(s));
    }
    println!();

    let perms = m.feasible_permutations();
    println!("\nlinear extensions ({}):", perms.len());
    for p in &perms {
        let word: String = p.iter().map(|&i| m.ground().label(i).to_string()).collect();
        print!(" {word}");
    }
    println!();

    let chi = invariants::chi_fundamental(&m);
    println!("\ninvariant: {}", chi.render());
    let poly = chi.counting_polynomial();
    println!("strict order-preserving maps: {poly}");
    for n in 1..=4 {
        println!(
            "  into [{n}]: {} (brute force {})",
            poly.eval(n),
            invariants::oracle_count_generic(&m, n)
        );
    }

    // feasibility of a single assignment: strictness along relations
    println!("\nw=1 x=1 y=2 z=3 is generic: {}",
        invariants::is_generic_function(&m, &[1, 1, 2, 3]).unwrap());
    println!("w=1 x=1 y=1 z=1 is generic: {}",
        invariants::is_generic_function(&m, &[1, 1, 1, 1]).unwrap());
}
