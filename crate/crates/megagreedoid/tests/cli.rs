//! End-to-end tests of the binary: golden outputs, exit codes, and
//! determinism of the emitted text.

use megagreedoid::cli::{render_document, StructureDocument, StructureKind};
use megagreedoid::corpus;
use megagreedoid::samples;
use std::path::PathBuf;
use std::process::{Command, Output};

fn write_doc(name: &str, doc: &StructureDocument) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("megagreedoid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, render_document(doc)).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_megagreedoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn rooted_graph_doc() -> PathBuf {
    write_doc(
        "rooted-graph",
        &corpus::document_for_graph("rooted-graph", &samples::rooted_graph()),
    )
}

fn greedoid_doc() -> PathBuf {
    write_doc(
        "greedoid",
        &corpus::document_for_table("greedoid", &samples::greedoid_table(), false),
    )
}

#[test]
fn chi_fundamental_golden() {
    let doc = rooted_graph_doc();
    let out = run(&["chi", doc.to_str().unwrap(), "--basis", "f"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "6*F[{1,2,3};4] + 2*F[{1,3};4]\n");
}

#[test]
fn checked_in_documents_match_the_generated_ones() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let out = run(&["chi", &format!("{data}/rooted_graph.json"), "--basis", "F"]);
    assert_eq!(stdout_of(&out), "6*F[{1,2,3};4] + 2*F[{1,3};4]\n");
    let out = run(&["perms", &format!("{data}/greedoid.json"), "--descents"]);
    assert_eq!(stdout_of(&out), "fun {1,2}\nfnu {2}\nnfu {1,2}\nnuf {1,2}\n");
}

#[test]
fn chi_monomial_golden() {
    let doc = rooted_graph_doc();
    for basis in ["m", "M"] {
        let out = run(&["chi", doc.to_str().unwrap(), "--basis", basis]);
        assert!(out.status.success());
        assert_eq!(stdout_of(&out), "8*M[{1,2,3};4] + 2*M[{1,3};4]\n");
    }
}

#[test]
fn poly_at_negative_one_golden() {
    let doc = rooted_graph_doc();
    let out = run(&["poly", doc.to_str().unwrap(), "--at", "-1"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "6\n");
    // several points at once, one line each
    let out = run(&["poly", doc.to_str().unwrap(), "--at", "1", "--at", "3", "--at", "4"]);
    assert_eq!(stdout_of(&out), "0\n2\n16\n");
}

#[test]
fn perms_with_descents_golden() {
    let doc = greedoid_doc();
    let out = run(&["perms", doc.to_str().unwrap(), "--descents"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "fun {1,2}\nfnu {2}\nnfu {1,2}\nnuf {1,2}\n");
    // without descents, just the permutations in greedy order
    let out = run(&["perms", doc.to_str().unwrap()]);
    assert_eq!(stdout_of(&out), "fun\nfnu\nnfu\nnuf\n");
}

#[test]
fn perms_descend_mode_diagnostics() {
    let doc = greedoid_doc();
    let swap = run(&[
        "perms",
        doc.to_str().unwrap(),
        "--descents",
        "--descent-mode",
        "swap",
    ]);
    assert!(swap.status.success());
    // the local swap diagnostic agrees with the shelling on this structure
    assert_eq!(stdout_of(&swap), "fun {1,2}\nfnu {2}\nnfu {1,2}\nnuf {1,2}\n");
    let literal = run(&[
        "perms",
        doc.to_str().unwrap(),
        "--descents",
        "--descent-mode",
        "literal",
    ]);
    assert!(literal.status.success());
    assert!(stdout_of(&literal).starts_with("fun"));
}

#[test]
fn generic_function_classification() {
    let doc = rooted_graph_doc();
    // values positionally against the order a, f, p, s
    let out = run(&["generic", doc.to_str().unwrap(), "--fn", "2,1,2,3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "feasible: true\nstrongly_feasible: true\ngeneric: true\n"
    );
    let out = run(&["generic", doc.to_str().unwrap(), "--fn", "2,2,1,1"]);
    assert_eq!(
        stdout_of(&out),
        "feasible: false\nstrongly_feasible: false\ngeneric: false\n"
    );
    let out = run(&["generic", doc.to_str().unwrap(), "--count", "4"]);
    assert_eq!(stdout_of(&out), "16\n");
}

#[test]
fn shelling_certificate_output() {
    let doc = rooted_graph_doc();
    let out = run(&["shelling", doc.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "afps des={1,2,3} min=({a} < {a,f} < {a,f,p})");
    assert!(lines.contains(&"afsp des={1,3} min=({a} < {a,f,s})"));
    assert!(lines.contains(&"faps des={1,3} min=({f} < {a,f,p})"));
}

#[test]
fn reciprocity_and_orientations() {
    let doc = rooted_graph_doc();
    let out = run(&["reciprocity", doc.to_str().unwrap(), "--n", "1"]);
    assert_eq!(stdout_of(&out), "6\n");
    let out = run(&["orientations", doc.to_str().unwrap()]);
    assert_eq!(stdout_of(&out), "6\n");
    // orientations on a non-graph document is an input error
    let gd = greedoid_doc();
    let out = run(&["orientations", gd.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn antipode_output() {
    let doc = write_doc(
        "single",
        &StructureDocument {
            name: "single".into(),
            order: vec!["v".into()],
            structure: StructureKind::Explicit {
                family: vec![(vec![], "0".into()), (vec!["v".into()], "3".into())],
            },
        },
    );
    let out = run(&["antipode", doc.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "-1 * [{}:0, {v}:3]\n");
}

#[test]
fn verification_commands_pass_on_samples() {
    for doc in [rooted_graph_doc(), greedoid_doc()] {
        let out = run(&["hopf-verify", doc.to_str().unwrap()]);
        assert!(out.status.success(), "{}", stdout_of(&out));
        let text = stdout_of(&out);
        assert!(text.contains("antipode convolution identity: pass"));

        let out = run(&["oracle", doc.to_str().unwrap()]);
        assert!(out.status.success(), "{}", stdout_of(&out));
        assert!(!stdout_of(&out).contains("FAIL"));
    }
}

#[test]
fn check_exit_codes() {
    let good = rooted_graph_doc();
    let out = run(&["check", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).starts_with("ok: rooted-graph (rooted_graph): |I| = 4, |family| = 11"));

    // an explicit family violating accessibility fails verification
    let bad = write_doc(
        "bad-explicit",
        &StructureDocument {
            name: "bad-explicit".into(),
            order: vec!["a".into(), "b".into()],
            structure: StructureKind::Explicit {
                family: vec![
                    (vec![], "0".into()),
                    (vec!["a".into(), "b".into()], "2".into()),
                ],
            },
        },
    );
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("fail"));
    assert!(text.contains("augmenting") || text.contains("removable"));

    // malformed json is an input error
    let dir = std::env::temp_dir().join(format!("megagreedoid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // a non-submodular polymatroid table is rejected with a witness
    let non_submodular = write_doc(
        "bad-polymatroid",
        &StructureDocument {
            name: "bad-polymatroid".into(),
            order: vec!["a".into(), "b".into()],
            structure: StructureKind::Polymatroid {
                table: vec![
                    (vec![], "0".into()),
                    (vec!["a".into()], "1".into()),
                    (vec!["b".into()], "1".into()),
                    (vec!["a".into(), "b".into()], "3".into()),
                ],
            },
        },
    );
    let out = run(&["chi", non_submodular.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("submodularity fails"));
    assert!(err.contains("{a}") && err.contains("{b}"));
}

#[test]
fn corpus_emission_is_deterministic_and_valid() {
    let first = run(&["corpus", "--seed", "5", "--size", "4"]);
    let second = run(&["corpus", "--seed", "5", "--size", "4"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let docs: Vec<StructureDocument> = serde_json::from_str(&stdout_of(&first)).unwrap();
    assert_eq!(docs.len(), 4);
    for doc in &docs {
        megagreedoid::cli::build(doc).expect("emitted documents build");
    }
}

#[test]
fn outputs_are_bit_identical_across_runs() {
    let doc = rooted_graph_doc();
    for args in [
        vec!["chi", doc.to_str().unwrap(), "--basis", "f"],
        vec!["shelling", doc.to_str().unwrap()],
        vec!["antipode", doc.to_str().unwrap()],
        vec!["oracle", doc.to_str().unwrap()],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}
