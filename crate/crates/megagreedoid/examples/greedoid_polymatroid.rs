//! Rank tables as input: a greedoid table (whose rank-feasible sets form
//! the family) and a polymatroid table (full boolean family), with their
//! invariants.
//!
//! Run with `cargo run --example greedoid_polymatroid`.

use megagreedoid::constructions::{from_greedoid, from_polymatroid};
use megagreedoid::{invariants, samples};

fn main() {
    let table = samples::greedoid_table();
    println!("greedoid rank table on {:?}:", table.ground().labels());
    for (s, r) in table.entries() {
        println!("  {} -> {}", table.ground().format_subset(s), r);
    }
    let m = from_greedoid(&table).unwrap();
    println!("rank-feasible family has {} of 8 subsets:", m.family().len());
    for (s, _) in m.entries() {
        print!(" {}", m.ground().format_subset(s));
    }
    println!();
    println!("invariant: {}", invariants::chi_fundamental(&m).render());

    let table = samples::polymatroid_table();
    println!("\npolymatroid rank table on {:?}:", table.ground().labels());
    for (s, r) in table.entries() {
        println!("  {} -> {}", table.ground().format_subset(s), r);
    }
    let m = from_polymatroid(&table).unwrap();
    println!("family is the full boolean lattice: {}", m.family_is_boolean());
    println!("invariant: {}", invariants::chi_fundamental(&m).render());

    // the ingestion checks reject invalid tables with a witness
    let ground = megagreedoid::GroundSet::new(["a", "b"]).unwrap();
    let bad = megagreedoid::constructions::RankTable::from_fn(ground, |s| {
        megagreedoid::rational::rat((s.len() * s.len()) as i64)
    })
    .unwrap();
    println!("\nrejecting a supermodular table: {}", from_polymatroid(&bad).unwrap_err());
}
