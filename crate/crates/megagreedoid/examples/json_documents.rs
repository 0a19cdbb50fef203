//! The JSON document format used by the command-line interface, driven
//! through the library: parse, validate, compute, and emit a reproducible
//! random corpus.
//!
//! Run with `cargo run --example json_documents`.

use megagreedoid::cli::{build, parse_document, render_document};
use megagreedoid::{corpus, invariants};

fn main() {
    let text = r#"{
        "name": "triangle-with-tail",
        "order": ["a", "b", "c"],
        "structure": {
            "kind": "rooted_graph",
            "root": "r",
            "edges": [["r", "a"], ["a", "b"], ["b", "c"], ["c", "a"]]
        }
    }"#;
    let doc = parse_document(text).unwrap();
    let built = build(&doc).unwrap();
    let m = built.megagreedoid();
    println!("built `{}` ({}): {} feasible sets", doc.name, built.kind_name(), m.family().len());
    println!("invariant: {}", invariants::chi_fundamental(m).render());
    println!("round-trips: {}", parse_document(&render_document(&doc)).unwrap() == doc);

    // schema violations and invalid structures are rejected with reasons
    let broken = r#"{"name": "x", "order": ["a"], "structure": {"kind": "poset", "covers": [["a", "a"]]}}"#;
    match build(&parse_document(broken).unwrap()) {
        Err(e) => println!("\nrejected self-relation: {e}"),
        Ok(_) => unreachable!(),
    }

    // a reproducible corpus of documents, as emitted by the corpus command
    println!("\nseeded corpus:");
    for instance in corpus::generate(7, 4) {
        let m = instance.structure.megagreedoid();
        println!(
            "  {} ({}): |I| = {}, chi = {}",
            instance.name,
            instance.structure.kind_name(),
            m.size(),
            invariants::chi_fundamental(m).render()
        );
    }
}
