//! Three small worked structures used throughout the tests, docs, and
//! runnable examples: a rooted graph, a greedoid rank table, and a
//! polymatroid rank table, all on three or four elements.

use crate::constructions::{
    from_greedoid, from_polymatroid, from_rooted_graph, Poset, RankTable, RootedMultigraph,
};
use crate::ground::GroundSet;
use crate::megagreedoid::Megagreedoid;
use crate::rational::rat;

/// A connected graph on vertices `{f, p, s, a}` plus a root `c`, with edges
/// `cf, ca, fp, fa, ps, sa`. The ground order is `a < f < p < s`.
pub fn rooted_graph() -> RootedMultigraph {
    let ground = GroundSet::new(["a", "f", "p", "s"]).unwrap();
    let edges = vec![
        ("c", "f"),
        ("c", "a"),
        ("f", "p"),
        ("f", "a"),
        ("p", "s"),
        ("s", "a"),
    ];
    RootedMultigraph::new(ground, "c", &edges, &[]).unwrap()
}

pub fn rooted_graph_megagreedoid() -> Megagreedoid {
    from_rooted_graph(&rooted_graph()).unwrap()
}

/// A greedoid rank table on `{f, u, n}` (ground order `f < u < n`): the
/// singleton `u` has rank 0, the other singletons rank 1, and every larger
/// set rank 2. Its rank-feasible family is the boolean lattice minus `{u}`.
pub fn greedoid_table() -> RankTable {
    let ground = GroundSet::new(["f", "u", "n"]).unwrap();
    RankTable::from_fn(ground.clone(), |s| {
        let u = ground.position("u").unwrap();
        let others = s.without(u).len();
        match (others, s.contains(u)) {
            (0, _) => rat(0),
            (1, false) => rat(1),
            _ => rat(2),
        }
    })
    .unwrap()
}

pub fn greedoid_megagreedoid() -> Megagreedoid {
    from_greedoid(&greedoid_table()).unwrap()
}

/// A polymatroid rank table on `{f, u, n}` (ground order `f < u < n`):
/// singletons rank 3, `fu` and `un` rank 5, `fn` and `fun` rank 6.
pub fn polymatroid_table() -> RankTable {
    let ground = GroundSet::new(["f", "u", "n"]).unwrap();
    let f = ground.position("f").unwrap();
    let u = ground.position("u").unwrap();
    let n = ground.position("n").unwrap();
    RankTable::from_fn(ground.clone(), move |s| match s.len() {
        0 => rat(0),
        1 => rat(3),
        2 => {
            if s.contains(f) && s.contains(n) {
                rat(6)
            } else {
                rat(5)
            }
        }
        _ => {
            let _ = u;
            rat(6)
        }
    })
    .unwrap()
}

pub fn polymatroid_megagreedoid() -> Megagreedoid {
    from_polymatroid(&polymatroid_table()).unwrap()
}

/// A two-element chain `p < q`, the smallest poset with a forced order.
pub fn chain_poset() -> Poset {
    let ground = GroundSet::new(["p", "q"]).unwrap();
    Poset::new(ground, &[("p", "q")]).unwrap()
}

/// The three headline structures as megagreedoids.
pub fn all_megagreedoids() -> Vec<Megagreedoid> {
    vec![
        rooted_graph_megagreedoid(),
        greedoid_megagreedoid(),
        polymatroid_megagreedoid(),
    ]
}
