//! Independent oracles shared by the integration suites. Everything here
//! recomputes expected values from first principles, without touching the
//! code paths under test.
#![allow(dead_code)] // each test target uses a different subset

use megagreedoid::constructions::Poset;
use megagreedoid::qsym::{Basis, QsymElement};
use megagreedoid::rational::rat;
use megagreedoid::{Megagreedoid, Subset};

/// All linear extensions of a poset, as position sequences, by direct
/// recursive enumeration of minimal elements.
pub fn linear_extensions(p: &Poset) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn recurse(p: &Poset, taken: Subset, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = p.ground().len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for next in 0..n {
            if !taken.contains(next) && p.strictly_below(next).is_subset_of(taken) {
                prefix.push(next);
                recurse(p, taken.with(next), prefix, out);
                prefix.pop();
            }
        }
    }
    recurse(p, Subset::EMPTY, &mut prefix, &mut out);
    out
}

/// The strict order-preserving generating function of a poset, expanded
/// over linear extensions: each extension contributes the fundamental
/// element at its ascent set (positions where the next element is larger
/// in the ground order).
pub fn gessel_expansion(p: &Poset) -> QsymElement {
    let n = p.ground().len();
    let mut out = QsymElement::zero(Basis::F);
    for ext in linear_extensions(p) {
        let mut mask = 0u16;
        for i in 1..n {
            if ext[i - 1] < ext[i] {
                mask |= 1 << (i - 1);
            }
        }
        out.add_term(n, mask, rat(1));
    }
    out
}

/// Chromatic polynomial of a simple graph by deletion–contraction,
/// evaluated at `colors`. Vertices are `0..vertices`; parallel edges are
/// collapsed and loops annihilate.
pub fn chromatic_value(vertices: usize, edges: &[(usize, usize)], colors: i64) -> i64 {
    let mut simple: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    simple.sort();
    simple.dedup();
    if simple.iter().any(|&(a, b)| a == b) {
        return 0;
    }
    match simple.pop() {
        None => colors.pow(vertices as u32),
        Some((u, v)) => {
            let deleted = chromatic_value(vertices, &simple, colors);
            // contract v into u: relabel v -> u, then shift indices above v
            let contracted: Vec<(usize, usize)> = simple
                .iter()
                .map(|&(a, b)| {
                    let relabel = |x: usize| {
                        let x = if x == v { u } else { x };
                        if x > v {
                            x - 1
                        } else {
                            x
                        }
                    };
                    (relabel(a), relabel(b))
                })
                .collect();
            let merged = chromatic_value(vertices - 1, &contracted, colors);
            deleted - merged
        }
    }
}

/// Single-element-step chains of the family from the empty set to the full
/// set, enumerated from the family poset rather than by prefix search.
pub fn single_step_chains(m: &Megagreedoid) -> Vec<Vec<usize>> {
    let n = m.size();
    let by_size: Vec<Vec<Subset>> = (0..=n)
        .map(|k| {
            m.family()
                .iter()
                .copied()
                .filter(|s| s.len() == k)
                .collect()
        })
        .collect();
    let mut frontier: Vec<(Subset, Vec<usize>)> = vec![(Subset::EMPTY, Vec::new())];
    for level in by_size.iter().skip(1) {
        let mut next = Vec::new();
        for (prev, word) in &frontier {
            for &s in level {
                if prev.is_subset_of(s) {
                    let mut extended = word.clone();
                    extended.push(s.difference(*prev).iter().next().unwrap());
                    next.push((s, extended));
                }
            }
        }
        frontier = next;
    }
    let mut words: Vec<Vec<usize>> = frontier.into_iter().map(|(_, w)| w).collect();
    words.sort();
    words
}
