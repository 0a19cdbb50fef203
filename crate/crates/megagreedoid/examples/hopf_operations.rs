//! Formal sums of structures: the restriction/contraction coproduct, the
//! boolean-and-modular character, and the recursive antipode with its
//! defining convolution identity.
//!
//! Run with `cargo run --example hopf_operations`.

use megagreedoid::{hopf, samples, Megagreedoid};

fn main() {
    let m = samples::greedoid_megagreedoid();
    let fp = m.ground().subset_of_labels(["f", "n"]).unwrap();

    let delta = hopf::coproduct(&m, fp);
    println!("coproduct at {{f,n}}:");
    for ((left, right), coeff) in delta.terms() {
        println!("  {coeff} * {left} (x) {right}");
    }
    let u = m.ground().subset_of_labels(["u"]).unwrap();
    println!("coproduct at the infeasible {{u}} is zero: {}", hopf::coproduct(&m, u).is_zero());

    println!("\ncharacter values:");
    println!("  greedoid figure: {}", hopf::character_zeta(&m));
    println!("  one-point structure: {}", hopf::character_zeta(&Megagreedoid::trivial()));

    let antipode = hopf::antipode(&m);
    println!("\nantipode ({} terms):", antipode.terms().count());
    for (basis, coeff) in antipode.terms() {
        println!("  {coeff} * {basis}");
    }

    // the recursion agrees with the expansion over ordered set compositions
    assert_eq!(antipode, hopf::antipode_takeuchi(&m));
    println!("\nrecursive antipode equals the composition expansion");

    // the defining property: convolving the antipode against the identity
    // annihilates every structure on a nonempty ground set
    let convolution = hopf::antipode_convolution(&m);
    println!("antipode convolution is zero: {}", convolution.is_zero());

    // the compatibility axioms, checked against a relabeled copy
    let partner = m.with_labels(&["x", "y", "z"]).unwrap();
    let product = m.direct_sum(&partner).unwrap();
    println!(
        "compatibility with a relabeled copy: {:?}",
        hopf::check_compatibility(&m, &partner, &product).is_ok()
    );
}
