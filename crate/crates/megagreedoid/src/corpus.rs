//! Seeded random instance generation: connected rooted multigraphs, posets,
//! coverage polymatroids, and greedoid rank tables. These feed the property
//! and acceptance suites and the `corpus` CLI command; a fixed seed always
//! reproduces the same instances byte for byte.

use crate::cli::{self, BuiltStructure, StructureDocument};
use crate::constructions::{Poset, RankTable, RootedMultigraph};
use crate::ground::{GroundSet, Subset};
use crate::rational::{rat, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct CorpusInstance {
    pub name: String,
    pub document: StructureDocument,
    pub structure: BuiltStructure,
}

fn ground_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// A connected multigraph on `n` vertices plus a root: a random attachment
/// tree, extra (possibly parallel) edges, and optionally a few half-edges.
pub fn random_rooted_graph(rng: &mut ChaCha8Rng, n: usize, allow_half_edges: bool) -> RootedMultigraph {
    let labels = ground_labels(n);
    let ground = GroundSet::new(labels.clone()).unwrap();
    let root = "r".to_string();
    let name_of = |v: usize| {
        if v == n {
            root.clone()
        } else {
            labels[v].clone()
        }
    };
    let mut edges: Vec<(String, String)> = Vec::new();
    for v in 0..n {
        // attach to a uniform choice among the root and earlier vertices
        let pick = rng.gen_range(0..=v);
        let anchor = if pick == v { n } else { pick };
        edges.push((name_of(anchor), name_of(v)));
    }
    let extras = rng.gen_range(0..=n);
    for _ in 0..extras {
        let a = rng.gen_range(0..=n);
        let b = rng.gen_range(0..=n);
        if a != b {
            edges.push((name_of(a), name_of(b)));
        }
    }
    let mut half = Vec::new();
    if allow_half_edges && n > 0 && rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..=2) {
            half.push(labels[rng.gen_range(0..n)].clone());
        }
    }
    RootedMultigraph::new(ground, root, &edges, &half).expect("attachment tree is connected")
}

/// A random partial order from an acyclic relation on position-ordered
/// elements.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize) -> Poset {
    let labels = ground_labels(n);
    let ground = GroundSet::new(labels.clone()).unwrap();
    let mut relations = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(0.35) {
                relations.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Poset::new(ground, &relations).expect("relation on ordered positions is acyclic")
}

/// A coverage polymatroid: each element covers a random subset of a small
/// universe and the rank of a set is the size of the union it covers,
/// optionally halved to exercise non-integer ranks.
pub fn random_coverage_table(rng: &mut ChaCha8Rng, n: usize) -> RankTable {
    let ground = GroundSet::new(ground_labels(n)).unwrap();
    let universe = n + 2;
    let covers: Vec<u32> = (0..n)
        .map(|_| rng.gen_range(0..(1u32 << universe)))
        .collect();
    let halve = rng.gen_bool(0.3);
    RankTable::from_fn(ground, move |s: Subset| {
        let mut union = 0u32;
        for i in s.iter() {
            union |= covers[i];
        }
        let count = rat(union.count_ones() as i64);
        if halve {
            count / rat(2)
        } else {
            count
        }
    })
    .expect("total by construction")
}

/// A greedoid rank table: either the maximum-ideal-size rank of a random
/// poset or a uniform matroid rank.
pub fn random_greedoid_table(rng: &mut ChaCha8Rng, n: usize) -> RankTable {
    if rng.gen_bool(0.6) {
        let poset = random_poset(rng, n);
        let ideals = poset.ideals();
        RankTable::from_fn(poset.ground().clone(), move |s: Subset| {
            let best = ideals
                .iter()
                .filter(|ideal| ideal.is_subset_of(s))
                .map(|ideal| ideal.len())
                .max()
                .unwrap_or(0);
            rat(best as i64)
        })
        .expect("total by construction")
    } else {
        let k = rng.gen_range(0..=n);
        let ground = GroundSet::new(ground_labels(n)).unwrap();
        RankTable::from_fn(ground, move |s: Subset| rat(s.len().min(k) as i64))
            .expect("total by construction")
    }
}

fn rational_string(r: &Rational) -> String {
    r.to_string()
}

pub fn document_for_graph(name: &str, g: &RootedMultigraph) -> StructureDocument {
    StructureDocument {
        name: name.to_string(),
        order: g.ground().labels().to_vec(),
        structure: cli::StructureKind::RootedGraph {
            root: g.root_label().to_string(),
            edges: g.edge_labels(),
            half_edges: g.half_edge_labels(),
        },
    }
}

pub fn document_for_poset(name: &str, p: &Poset) -> StructureDocument {
    StructureDocument {
        name: name.to_string(),
        order: p.ground().labels().to_vec(),
        structure: cli::StructureKind::Poset {
            covers: p.cover_labels(),
        },
    }
}

pub fn document_for_table(name: &str, t: &RankTable, polymatroid: bool) -> StructureDocument {
    let table: Vec<(Vec<String>, String)> = t
        .entries()
        .map(|(s, r)| (t.ground().labels_of(s), rational_string(r)))
        .collect();
    StructureDocument {
        name: name.to_string(),
        order: t.ground().labels().to_vec(),
        structure: if polymatroid {
            cli::StructureKind::Polymatroid { table }
        } else {
            cli::StructureKind::Greedoid { table }
        },
    }
}

/// Generate `count` reproducible instances, cycling through the four kinds
/// with ground sizes in `1..=5`. Every instance is built through the
/// document parser, so the generated documents are known-valid.
pub fn generate(seed: u64, count: usize) -> Vec<CorpusInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut index = 0usize;
    while out.len() < count {
        let n = 1 + (index + index / 4) % 5;
        let kind = index % 4;
        index += 1;
        let name = format!("corpus-{seed}-{index}");
        let document = match kind {
            0 => document_for_graph(&name, &random_rooted_graph(&mut rng, n, true)),
            1 => document_for_poset(&name, &random_poset(&mut rng, n)),
            2 => document_for_table(&name, &random_coverage_table(&mut rng, n), true),
            _ => document_for_table(&name, &random_greedoid_table(&mut rng, n), false),
        };
        let structure = cli::build(&document).expect("generated documents are valid");
        out.push(CorpusInstance {
            name,
            document,
            structure,
        });
    }
    out
}
