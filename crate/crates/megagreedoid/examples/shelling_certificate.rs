//! The relative order complex and its shelling: faces are chains of proper
//! feasible sets, the distinguished part Ψ keeps the chains whose padded
//! intervals are boolean with modular rank, and the first-fit greedy order
//! shells it with one facet per feasible permutation.
//!
//! Run with `cargo run --example shelling_certificate`.

use megagreedoid::complex::{self, ChainFace};
use megagreedoid::qsym::Basis;
use megagreedoid::{invariants, samples};

fn main() {
    let m = samples::rooted_graph_megagreedoid();

    // membership in psi for a few chains
    let g = m.ground();
    let thick = ChainFace::new(vec![
        g.subset_of_labels(["f"]).unwrap(),
        g.subset_of_labels(["f", "p", "a"]).unwrap(),
    ])
    .unwrap();
    let vertex = ChainFace::new(vec![g.subset_of_labels(["f", "a"]).unwrap()]).unwrap();
    println!("({{f}} < {{f,p,a}}) in psi: {}", complex::in_psi(&m, &thick));
    println!("({{f,a}}) in psi:          {}", complex::in_psi(&m, &vertex));
    println!("empty chain in psi:       {}", complex::in_psi(&m, &ChainFace::empty()));

    let cert = complex::verify_shelling(&m).unwrap();
    println!("\nshelling with {} facets:", cert.steps.len());
    for step in &cert.steps {
        let word: String = step
            .permutation
            .iter()
            .map(|&i| m.ground().label(i).to_string())
            .collect();
        println!(
            "  {word}: {} new faces, restriction {}",
            step.new_faces,
            step.restriction.render(&m)
        );
    }

    let expansion = complex::shelling_qsym(&cert);
    println!("\nshelling expansion: {}", expansion.render());
    println!(
        "face enumeration:   {}",
        complex::face_qsym(&m).to_basis(Basis::F).render()
    );
    println!(
        "flag formula:       {}",
        invariants::chi_flag(&m).to_basis(Basis::F).render()
    );
}
