//! Corpus-wide structural properties: minor closure, coassociativity of
//! minors, the two modularity routes, facet characterizations, and the
//! morphisms that embed graphs, posets, greedoids, and polymatroids.

mod common;

use megagreedoid::cli::BuiltStructure;
use megagreedoid::complex;
use megagreedoid::constructions::{
    from_greedoid, from_poset, from_rooted_graph, RankTable, RootedMultigraph,
};
use megagreedoid::corpus;
use megagreedoid::ground::GroundSet;
use megagreedoid::hopf;
use megagreedoid::invariants;
use megagreedoid::megagreedoid::check_axioms;
use megagreedoid::rational::{rat, Rational};
use megagreedoid::samples;
use megagreedoid::{Megagreedoid, Subset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus_megas(seed: u64, count: usize) -> Vec<Megagreedoid> {
    let mut megas = samples::all_megagreedoids();
    megas.extend(
        corpus::generate(seed, count)
            .into_iter()
            .map(|i| i.structure.megagreedoid().clone()),
    );
    megas
}

fn assert_valid(m: &Megagreedoid) {
    let entries: Vec<(Subset, Rational)> = m.entries().map(|(s, r)| (s, r.clone())).collect();
    let report = check_axioms(m.ground(), m.family(), &entries).unwrap();
    assert!(report.passes(), "axioms fail:\n{report}\nfor {m}");
}

#[test]
fn corpus_and_minors_satisfy_the_axioms() {
    for m in corpus_megas(101, 30) {
        assert_valid(&m);
        for &s in m.family() {
            assert_valid(&m.restrict(s).unwrap());
            assert_valid(&m.contract(s).unwrap());
        }
    }
}

#[test]
fn minors_compose() {
    for m in corpus_megas(102, 20) {
        let feasible: Vec<Subset> = m.family().to_vec();
        for &b in &feasible {
            for &a in &feasible {
                if !a.is_subset_of(b) {
                    continue;
                }
                // restriction chains collapse
                let via_b = m.restrict(b).unwrap();
                let a_in_b = via_b
                    .ground()
                    .subset_of_labels(m.ground().labels_of(a))
                    .unwrap();
                assert_eq!(via_b.restrict(a_in_b).unwrap(), m.restrict(a).unwrap());
                // contraction chains collapse
                let via_a = m.contract(a).unwrap();
                let b_minus_a = via_a
                    .ground()
                    .subset_of_labels(m.ground().labels_of(b.difference(a)))
                    .unwrap();
                if via_a.is_feasible(b_minus_a) {
                    assert_eq!(via_a.contract(b_minus_a).unwrap(), m.contract(b).unwrap());
                }
            }
        }
    }
}

#[test]
fn modularity_routes_agree_on_all_boolean_intervals() {
    for m in corpus_megas(103, 25) {
        for &y in m.family() {
            for x in y.submasks() {
                if !m.is_feasible(x) || !m.is_boolean_interval(x, y).unwrap() {
                    continue;
                }
                assert_eq!(
                    m.is_modular_on_interval(x, y).unwrap(),
                    m.is_modular_four_point(x, y).unwrap(),
                    "modularity routes disagree on [{x:?}, {y:?}] of {m}"
                );
            }
        }
    }
}

#[test]
fn boolean_intervals_satisfy_the_diamond_inequality() {
    for m in corpus_megas(104, 25) {
        for &y in m.family() {
            for x in y.submasks() {
                if !m.is_feasible(x) || !m.is_boolean_interval(x, y).unwrap() {
                    continue;
                }
                let free: Vec<usize> = y.difference(x).iter().collect();
                for base in y.difference(x).submasks() {
                    for (i, &a) in free.iter().enumerate() {
                        if base.contains(a) {
                            continue;
                        }
                        for &b in &free[i + 1..] {
                            if base.contains(b) {
                                continue;
                            }
                            let w = x.union(base);
                            let lhs = m.rank(w.with(a)).unwrap() + m.rank(w.with(b)).unwrap();
                            let rhs =
                                m.rank(w.with(a).with(b)).unwrap() + m.rank(w).unwrap();
                            assert!(lhs >= rhs, "diamond fails in {m}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn feasible_permutations_equal_single_step_chains() {
    for m in corpus_megas(105, 25) {
        let mut perms = m.feasible_permutations();
        perms.sort();
        assert_eq!(perms, common::single_step_chains(&m));
    }
}

#[test]
fn direct_sums_of_corpus_pairs_are_valid() {
    let megas = corpus_megas(106, 16);
    for pair in megas.windows(2) {
        let left = pair[0]
            .with_labels(&(0..pair[0].size()).map(|i| format!("L{i}")).collect::<Vec<_>>())
            .unwrap();
        let right = pair[1]
            .with_labels(&(0..pair[1].size()).map(|i| format!("R{i}")).collect::<Vec<_>>())
            .unwrap();
        if left.size() + right.size() > 8 {
            continue;
        }
        assert_valid(&left.direct_sum(&right).unwrap());
    }
}

#[test]
fn graph_minors_commute_with_structure_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for trial in 0..30 {
        let n = 1 + trial % 5;
        let g = corpus::random_rooted_graph(&mut rng, n, true);
        let m = from_rooted_graph(&g).unwrap();
        for &s in m.family() {
            let restricted = from_rooted_graph(&g.restrict(s).unwrap()).unwrap();
            assert_eq!(restricted, m.restrict(s).unwrap(), "restriction of {g:?} at {s:?}");
            let contracted = from_rooted_graph(&g.contract(s).unwrap()).unwrap();
            assert_eq!(contracted, m.contract(s).unwrap(), "contraction of {g:?} at {s:?}");
            // the paired coproducts match as well
            let (gl, gr) = hopf::rg_coproduct(&g, s).unwrap().unwrap();
            let delta = hopf::coproduct(&m, s);
            let ((ml, mr), _) = delta.terms().next().unwrap();
            assert_eq!(&from_rooted_graph(&gl).unwrap(), ml);
            assert_eq!(&from_rooted_graph(&gr).unwrap(), mr);
        }
        // infeasible sets are the zero tensor on both sides
        for s in g.ground().full().submasks() {
            if !m.is_feasible(s) {
                assert!(hopf::rg_coproduct(&g, s).unwrap().is_none());
                assert!(hopf::coproduct(&m, s).is_zero());
            }
        }
    }
}

#[test]
fn poset_minors_commute_with_structure_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for trial in 0..30 {
        let n = 1 + trial % 5;
        let p = corpus::random_poset(&mut rng, n);
        let m = from_poset(&p).unwrap();
        for &s in m.family() {
            let restricted = from_poset(&p.restrict_ideal(s).unwrap()).unwrap();
            assert_eq!(restricted, m.restrict(s).unwrap());
            let contracted = from_poset(&p.contract_ideal(s).unwrap()).unwrap();
            assert_eq!(contracted, m.contract(s).unwrap());
        }
    }
}

#[test]
fn greedoid_table_minors_commute_on_the_generated_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for trial in 0..25 {
        let n = 1 + trial % 4;
        let t = corpus::random_greedoid_table(&mut rng, n);
        let m = from_greedoid(&t).unwrap();
        for &s in m.family() {
            let restricted = from_greedoid(&t.greedoid_restrict(s).unwrap()).unwrap();
            assert_eq!(restricted, m.restrict(s).unwrap());
            let contracted = from_greedoid(&t.greedoid_contract(s).unwrap()).unwrap();
            assert_eq!(contracted, m.contract(s).unwrap());
        }
    }
}

#[test]
fn greedoid_contraction_commutes_even_on_adversarial_tables() {
    // a greedoid whose restriction minors leave the embedded image; its
    // contraction minors still commute
    let ground = GroundSet::new(["a", "b", "c"]).unwrap();
    let lookup = ground.clone();
    let values = move |s: Subset| -> Rational {
        let has = |l: &str| s.contains(lookup.position(l).unwrap());
        match (has("a"), has("b"), has("c")) {
            (false, false, false) => rat(0),
            (true, false, false) => rat(0),
            (false, true, false) | (false, false, true) => rat(1),
            (true, true, false) => rat(1),
            _ => rat(2),
        }
    };
    let t = RankTable::from_fn(ground, values).unwrap();
    t.check_greedoid().unwrap();
    let m = from_greedoid(&t).unwrap();
    assert_eq!(m.family().len(), 7);
    for &s in m.family() {
        let contracted = from_greedoid(&t.greedoid_contract(s).unwrap()).unwrap();
        assert_eq!(contracted, m.contract(s).unwrap());
    }
}

#[test]
fn polymatroid_table_minors_commute() {
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    for trial in 0..25 {
        let n = 1 + trial % 4;
        let t = corpus::random_coverage_table(&mut rng, n);
        let m = megagreedoid::constructions::from_polymatroid(&t).unwrap();
        for &s in m.family() {
            let restricted =
                megagreedoid::constructions::from_polymatroid(&t.restrict_to(s)).unwrap();
            assert_eq!(restricted, m.restrict(s).unwrap());
            let contracted =
                megagreedoid::constructions::from_polymatroid(&t.contract_by(s)).unwrap();
            assert_eq!(contracted, m.contract(s).unwrap());
        }
    }
}

#[test]
fn poset_permutations_are_linear_extensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    for trial in 0..20 {
        let n = 1 + trial % 5;
        let p = corpus::random_poset(&mut rng, n);
        let m = from_poset(&p).unwrap();
        let mut perms = m.feasible_permutations();
        perms.sort();
        let mut extensions = common::linear_extensions(&p);
        extensions.sort();
        assert_eq!(perms, extensions);
    }
}

#[test]
fn psi_is_up_closed_and_extends_to_facets() {
    for m in corpus_megas(112, 12) {
        if m.size() > 4 {
            continue;
        }
        let full = m.ground().full();
        let proper: Vec<Subset> = m
            .family()
            .iter()
            .copied()
            .filter(|&s| !s.is_empty() && s != full)
            .collect();
        // enumerate every chain of proper feasible sets
        let mut chains: Vec<Vec<Subset>> = vec![Vec::new()];
        for &s in proper.iter() {
            let mut extended = Vec::new();
            for chain in &chains {
                if chain.last().is_none_or(|&last| last.is_subset_of(s) && last != s) {
                    let mut c = chain.clone();
                    c.push(s);
                    extended.push(c);
                }
            }
            chains.extend(extended);
        }
        let faces: Vec<complex::ChainFace> = chains
            .into_iter()
            .map(|sets| complex::ChainFace::new(sets).unwrap())
            .collect();
        let facet_list = complex::facets(&m);
        let mut maximal_in_psi: Vec<&complex::ChainFace> = Vec::new();
        for face in &faces {
            if !complex::in_psi(&m, face) {
                continue;
            }
            // up-closure: every extension inside the proper part stays in psi
            for other in &faces {
                if face.is_subchain_of(other) {
                    assert!(
                        complex::in_psi(&m, other),
                        "psi is not up-closed at {} < {} in {m}",
                        face.render(&m),
                        other.render(&m)
                    );
                }
            }
            // extension property: some facet contains it
            assert!(
                facet_list.iter().any(|f| face.is_subchain_of(f)),
                "face {} of psi extends to no facet in {m}",
                face.render(&m)
            );
            if !faces
                .iter()
                .any(|g| g != face && face.is_subchain_of(g) && complex::in_psi(&m, g))
            {
                maximal_in_psi.push(face);
            }
        }
        // maximal faces of psi are exactly the permutation facets
        let mut maximal: Vec<complex::ChainFace> = maximal_in_psi.into_iter().cloned().collect();
        maximal.sort();
        let mut expected = facet_list.clone();
        expected.sort();
        assert_eq!(maximal, expected, "facet characterization fails in {m}");
    }
}

#[test]
fn shelling_certificates_are_valid_and_complete() {
    for m in corpus_megas(113, 25) {
        let cert = complex::verify_shelling(&m).unwrap();
        assert_eq!(cert.steps.len(), m.feasible_permutations().len());
        // each facet appears exactly once
        let mut perms: Vec<Vec<usize>> = cert.steps.iter().map(|s| s.permutation.clone()).collect();
        perms.sort();
        let mut expected = m.feasible_permutations();
        expected.sort();
        assert_eq!(perms, expected);
        // the restriction face is a subchain of its facet
        for step in &cert.steps {
            assert!(step.restriction.is_subchain_of(&step.facet));
            assert!(complex::in_psi(&m, &step.restriction));
        }
        // the expansion over restriction faces is the invariant
        assert_eq!(
            complex::shelling_qsym(&cert),
            invariants::chi_flag(&m).to_basis(megagreedoid::qsym::Basis::F)
        );
    }
}

#[test]
fn local_swap_descents_agree_with_the_shelling_on_the_samples() {
    // the local greedy-swap conditions are a diagnostic; on the worked
    // examples they coincide with the shelling descent sets facet by facet
    for m in samples::all_megagreedoids() {
        let cert = complex::verify_shelling(&m).unwrap();
        for step in &cert.steps {
            let local = invariants::descents(&m, &step.permutation).unwrap();
            assert_eq!(local.descent_mask, step.restriction.cardinality_mask());
        }
    }
}

#[test]
fn chi_flag_multiplicativity_over_random_pairs() {
    let megas = corpus_megas(114, 10);
    for pair in megas.windows(2) {
        let left = pair[0]
            .with_labels(&(0..pair[0].size()).map(|i| format!("L{i}")).collect::<Vec<_>>())
            .unwrap();
        let right = pair[1]
            .with_labels(&(0..pair[1].size()).map(|i| format!("R{i}")).collect::<Vec<_>>())
            .unwrap();
        if left.size() + right.size() > 7 {
            continue;
        }
        let sum = left.direct_sum(&right).unwrap();
        assert_eq!(
            invariants::chi_flag(&sum),
            invariants::chi_flag(&left).multiply(&invariants::chi_flag(&right))
        );
        assert_eq!(
            invariants::chi_fundamental(&sum),
            invariants::chi_fundamental(&left).multiply(&invariants::chi_fundamental(&right))
        );
    }
}

#[test]
fn convolution_identity_over_the_corpus() {
    for m in corpus_megas(115, 12) {
        if m.size() > 4 {
            continue;
        }
        for n in 0..=2 {
            for k in 0..=(5 - n).min(2) {
                assert!(
                    invariants::convolution_check(&m, n, k),
                    "convolution fails at ({n},{k}) for {m}"
                );
            }
        }
    }
}

#[test]
fn reciprocity_vertex_sums_match_on_small_instances() {
    use num::ToPrimitive;
    for m in corpus_megas(116, 10) {
        if m.size() > 3 {
            continue;
        }
        for n in 1..=3 {
            assert_eq!(
                invariants::vertex_count_sum(&m, n),
                invariants::reciprocity_eval(&m, n).to_u64().unwrap(),
                "vertex reciprocity fails at n={n} for {m}"
            );
        }
    }
}

#[test]
fn literal_descent_mode_stays_within_the_permutation_count() {
    // the diagnostic reading still produces one descent set per permutation
    for m in corpus_megas(117, 8) {
        for perm in m.feasible_permutations() {
            let report = invariants::descents_with_mode(
                &m,
                &perm,
                invariants::DescentMode::ChainLiteral,
            )
            .unwrap();
            assert!(report.descent_mask < (1 << m.size().max(1)));
        }
    }
}

#[test]
fn strong_feasibility_matches_order_free_refinement() {
    // strongly feasible iff every way of refining each level block into
    // single steps stays inside the family
    let mut rng = ChaCha8Rng::seed_from_u64(118);
    for trial in 0..12 {
        let n = 1 + trial % 4;
        let g = corpus::random_rooted_graph(&mut rng, n, false);
        let m = from_rooted_graph(&g).unwrap();
        let mut values = vec![1i64; n];
        'functions: loop {
            let expected = all_refinements_feasible(&m, &values);
            assert_eq!(
                invariants::is_strongly_feasible_function(&m, &values).unwrap(),
                expected,
                "strong feasibility mismatch at {values:?} for {m}"
            );
            let mut i = 0;
            loop {
                if i == n {
                    break 'functions;
                }
                if values[i] < 3 {
                    values[i] += 1;
                    break;
                }
                values[i] = 1;
                i += 1;
            }
        }
    }
}

fn all_refinements_feasible(m: &Megagreedoid, values: &[i64]) -> bool {
    fn perms_of(set: Subset) -> Vec<Vec<usize>> {
        let items: Vec<usize> = set.iter().collect();
        let mut out = vec![Vec::new()];
        for _ in 0..items.len() {
            let mut next = Vec::new();
            for p in &out {
                for &x in &items {
                    if !p.contains(&x) {
                        let mut q = p.clone();
                        q.push(x);
                        next.push(q);
                    }
                }
            }
            out = next;
        }
        out
    }
    let chain = match invariants::level_chain(m.size(), values) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let mut orders: Vec<Vec<usize>> = vec![Vec::new()];
    let mut prev = Subset::EMPTY;
    for &level in &chain {
        let block = level.difference(prev);
        let mut next = Vec::new();
        for order in &orders {
            for refinement in perms_of(block) {
                let mut extended = order.clone();
                extended.extend(refinement);
                next.push(extended);
            }
        }
        orders = next;
        prev = level;
    }
    orders.iter().all(|order| {
        let mut prefix = Subset::EMPTY;
        order.iter().all(|&x| {
            prefix = prefix.with(x);
            m.is_feasible(prefix)
        })
    })
}

#[test]
fn corpus_documents_rebuild_identically() {
    for instance in corpus::generate(119, 20) {
        let text = megagreedoid::cli::render_document(&instance.document);
        let parsed = megagreedoid::cli::parse_document(&text).unwrap();
        assert_eq!(parsed, instance.document);
        let rebuilt = megagreedoid::cli::build(&parsed).unwrap();
        assert_eq!(
            rebuilt.megagreedoid(),
            instance.structure.megagreedoid()
        );
        match (&rebuilt, &instance.structure) {
            (BuiltStructure::RootedGraph(g1, _), BuiltStructure::RootedGraph(g2, _)) => {
                assert_eq!(g1, g2)
            }
            (BuiltStructure::Poset(p1, _), BuiltStructure::Poset(p2, _)) => {
                assert_eq!(p1.ground(), p2.ground())
            }
            _ => {}
        }
    }
}

#[test]
fn half_edges_count_toward_the_rank_of_their_anchor() {
    let ground = GroundSet::new(["x", "y"]).unwrap();
    let g = RootedMultigraph::new(
        ground,
        "r",
        &[("r", "x"), ("r", "y"), ("x", "y")],
        &["x", "x", "y"],
    )
    .unwrap();
    let m = from_rooted_graph(&g).unwrap();
    assert!(m.family_is_boolean());
    let x = m.ground().subset_of_labels(["x"]).unwrap();
    let y = m.ground().subset_of_labels(["y"]).unwrap();
    // x: edge xy (1) + two half-edges, y: edge xy + one half-edge; the
    // root edges never count
    assert_eq!(m.rank(x), Some(&rat(3)));
    assert_eq!(m.rank(y), Some(&rat(2)));
    assert_eq!(m.rank(m.ground().full()), Some(&rat(4)));
}

#[test]
fn poset_strong_feasibility_forces_strict_maps() {
    let p = samples::chain_poset();
    let m = from_poset(&p).unwrap();
    assert!(invariants::is_feasible_function(&m, &[1, 1]).unwrap());
    assert!(!invariants::is_strongly_feasible_function(&m, &[1, 1]).unwrap());
    assert!(invariants::is_strongly_feasible_function(&m, &[1, 2]).unwrap());
    assert!(invariants::is_generic_function(&m, &[1, 2]).unwrap());
    assert!(!invariants::is_feasible_function(&m, &[2, 1]).unwrap());
}

#[test]
fn poset_hopf_minor_zero_cases_agree() {
    // non-ideals are zero on both sides
    let p = samples::chain_poset();
    let m = from_poset(&p).unwrap();
    let q_only = p.ground().subset_of_labels(["q"]).unwrap();
    assert!(p.restrict_ideal(q_only).is_err());
    assert!(hopf::coproduct(&m, q_only).is_zero());
}

#[test]
fn construction_maps_commute_with_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(120);
    for trial in 0..10 {
        let n1 = 1 + trial % 3;
        let n2 = 1 + (trial + 1) % 3;

        // posets: disjoint union maps to the direct sum
        let p1 = corpus::random_poset(&mut rng, n1);
        let p2 = corpus::random_poset(&mut rng, n2);
        let left_labels: Vec<String> = (0..n1).map(|i| format!("L{i}")).collect();
        let right_labels: Vec<String> = (0..n2).map(|i| format!("R{i}")).collect();
        let union_ground = GroundSet::new(
            left_labels.iter().chain(right_labels.iter()).cloned().collect::<Vec<_>>(),
        )
        .unwrap();
        let mut relations: Vec<(String, String)> = Vec::new();
        for j in 0..n1 {
            for i in p1.strictly_below(j).iter() {
                relations.push((left_labels[i].clone(), left_labels[j].clone()));
            }
        }
        for j in 0..n2 {
            for i in p2.strictly_below(j).iter() {
                relations.push((right_labels[i].clone(), right_labels[j].clone()));
            }
        }
        let union = megagreedoid::constructions::Poset::new(union_ground, &relations).unwrap();
        let lhs = from_poset(&union).unwrap();
        let rhs = from_poset(&p1)
            .unwrap()
            .with_labels(&left_labels)
            .unwrap()
            .direct_sum(&from_poset(&p2).unwrap().with_labels(&right_labels).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);

        // rooted graphs: gluing at the root maps to the direct sum
        let g1 = corpus::random_rooted_graph(&mut rng, n1, true);
        let g2 = corpus::random_rooted_graph(&mut rng, n2, true);
        let relabel = |g: &RootedMultigraph, labels: &[String]| {
            let mut edges = Vec::new();
            for (a, b) in g.edge_labels() {
                let map = |l: String| {
                    if l == g.root_label() {
                        "r".to_string()
                    } else {
                        labels[g.ground().position(&l).unwrap()].clone()
                    }
                };
                edges.push((map(a), map(b)));
            }
            let halves: Vec<String> = g
                .half_edge_labels()
                .iter()
                .map(|l| labels[g.ground().position(l).unwrap()].clone())
                .collect();
            (edges, halves)
        };
        let (mut edges, mut halves) = relabel(&g1, &left_labels);
        let (e2, h2) = relabel(&g2, &right_labels);
        edges.extend(e2);
        halves.extend(h2);
        let glued_ground = GroundSet::new(
            left_labels.iter().chain(right_labels.iter()).cloned().collect::<Vec<_>>(),
        )
        .unwrap();
        let glued = RootedMultigraph::new(glued_ground, "r", &edges, &halves).unwrap();
        let lhs = from_rooted_graph(&glued).unwrap();
        let rhs = from_rooted_graph(&g1)
            .unwrap()
            .with_labels(&left_labels)
            .unwrap()
            .direct_sum(&from_rooted_graph(&g2).unwrap().with_labels(&right_labels).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);

        // greedoid tables: the coordinate-wise sum table maps to the direct sum
        let t1 = corpus::random_greedoid_table(&mut rng, n1);
        let t2 = corpus::random_greedoid_table(&mut rng, n2);
        let sum_ground = GroundSet::new(
            left_labels.iter().chain(right_labels.iter()).cloned().collect::<Vec<_>>(),
        )
        .unwrap();
        let sum_table = RankTable::from_fn(sum_ground, |s| {
            let left = Subset::from_mask(s.mask() & ((1 << n1) - 1));
            let right = Subset::from_mask(s.mask() >> n1);
            t1.value(left) + t2.value(right)
        })
        .unwrap();
        let lhs = from_greedoid(&sum_table).unwrap();
        let rhs = from_greedoid(&t1)
            .unwrap()
            .with_labels(&left_labels)
            .unwrap()
            .direct_sum(&from_greedoid(&t2).unwrap().with_labels(&right_labels).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
#[ignore = "broad stress pass; run with cargo test -- --ignored"]
fn stress_cross_checks_at_scale() {
    use megagreedoid::qsym::Basis;
    let mut instances = 0usize;
    for seed in 0..20u64 {
        for item in corpus::generate(seed, 40) {
            let m = item.structure.megagreedoid();
            let chi = invariants::chi_fundamental(m);
            let flag = invariants::chi_flag(m);
            assert_eq!(flag.to_basis(Basis::F), chi, "flag vs chi on {m}");
            assert_eq!(complex::face_qsym(m), flag, "faces vs flag on {m}");
            for n in 1..=2i64 {
                assert_eq!(
                    chi.count_specialize(n),
                    rat(invariants::oracle_count_generic(m, n) as i64),
                    "oracle mismatch on {m}"
                );
            }
            assert!(hopf::antipode_convolution(m).is_zero() || m.size() == 0);
            instances += 1;
        }
    }
    println!("stress pass over {instances} instances");
}
