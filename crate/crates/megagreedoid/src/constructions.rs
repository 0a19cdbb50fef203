//! Builders that produce megagreedoids from rooted multigraphs, posets,
//! greedoid rank functions, and polymatroid (submodular) rank functions,
//! together with the structure-level restriction/contraction operations
//! that the Hopf module delegates to.

use crate::error::Error;
use crate::ground::{GroundSet, Subset};
use crate::megagreedoid::Megagreedoid;
use crate::rational::{rat, Rational};
use num::{Signed, Zero};
use std::collections::BTreeMap;

/// One endpoint of an edge: the distinguished root or a ground vertex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum End {
    Vertex(usize),
    Root,
}

/// A connected multigraph on `I ∪ {root}` with a distinguished root.
/// Parallel edges are kept with multiplicity, and an edge may be a
/// half-edge: a dangling stub anchored at a single ground vertex, produced
/// when a restriction cuts an edge crossing the boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootedMultigraph {
    ground: GroundSet,
    root: String,
    edges: Vec<(End, End)>, // each edge normalized (min, max), list sorted
    half_edges: Vec<usize>, // anchors, sorted
}

impl RootedMultigraph {
    pub fn new<S: AsRef<str>>(
        ground: GroundSet,
        root: impl Into<String>,
        edges: &[(S, S)],
        half_edges: &[S],
    ) -> Result<Self, Error> {
        let root = root.into();
        if ground.position(&root).is_some() {
            return Err(Error::RootLabelClash { label: root });
        }
        if root.is_empty() {
            return Err(Error::BadGroundLabels {
                reason: "empty root label".into(),
            });
        }
        let resolve = |label: &str| -> Result<End, Error> {
            if label == root {
                Ok(End::Root)
            } else {
                ground
                    .position(label)
                    .map(End::Vertex)
                    .ok_or_else(|| Error::UnknownLabel {
                        label: label.to_string(),
                    })
            }
        };
        let mut edge_list = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (ea, eb) = (resolve(a.as_ref())?, resolve(b.as_ref())?);
            if ea == eb {
                return Err(Error::SelfLoop);
            }
            edge_list.push((ea.min(eb), ea.max(eb)));
        }
        let mut half_list = Vec::with_capacity(half_edges.len());
        for h in half_edges {
            match resolve(h.as_ref())? {
                End::Vertex(i) => half_list.push(i),
                End::Root => {
                    return Err(Error::BadGroundLabels {
                        reason: "half-edges must be anchored at ground vertices".into(),
                    })
                }
            }
        }
        edge_list.sort();
        half_list.sort();
        let graph = RootedMultigraph {
            ground,
            root,
            edges: edge_list,
            half_edges: half_list,
        };
        graph.check_connected()?;
        Ok(graph)
    }

    fn from_parts(
        ground: GroundSet,
        root: String,
        mut edges: Vec<(End, End)>,
        mut half_edges: Vec<usize>,
    ) -> Self {
        edges.sort();
        half_edges.sort();
        RootedMultigraph {
            ground,
            root,
            edges,
            half_edges,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn root_label(&self) -> &str {
        &self.root
    }

    pub fn edges(&self) -> &[(End, End)] {
        &self.edges
    }

    pub fn half_edges(&self) -> &[usize] {
        &self.half_edges
    }

    pub fn has_half_edges(&self) -> bool {
        !self.half_edges.is_empty()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.end_label(a), self.end_label(b)))
            .collect()
    }

    pub fn half_edge_labels(&self) -> Vec<String> {
        self.half_edges
            .iter()
            .map(|&i| self.ground.label(i).to_string())
            .collect()
    }

    fn end_label(&self, e: End) -> String {
        match e {
            End::Root => self.root.clone(),
            End::Vertex(i) => self.ground.label(i).to_string(),
        }
    }

    /// Reachability from the root inside the subgraph induced by
    /// `s ∪ {root}` (full edges only; half-edges never connect anything).
    fn reachable_from_root(&self, s: Subset) -> Subset {
        let in_scope = |e: End| match e {
            End::Root => true,
            End::Vertex(v) => s.contains(v),
        };
        let mut seen = Subset::EMPTY;
        let mut frontier: Vec<End> = vec![End::Root];
        while let Some(current) = frontier.pop() {
            for &(a, b) in &self.edges {
                let other = if a == current {
                    b
                } else if b == current {
                    a
                } else {
                    continue;
                };
                if let End::Vertex(v) = other {
                    if in_scope(other) && !seen.contains(v) {
                        seen = seen.with(v);
                        frontier.push(End::Vertex(v));
                    }
                }
            }
        }
        seen
    }

    fn check_connected(&self) -> Result<(), Error> {
        let full = self.ground.full();
        let reached = self.reachable_from_root(full);
        if reached != full {
            let missing = full.difference(reached).iter().next().unwrap();
            return Err(Error::DisconnectedGraph {
                vertex: self.ground.label(missing).to_string(),
            });
        }
        Ok(())
    }

    /// Whether `s ∪ {root}` induces a connected subgraph.
    pub fn is_feasible_subset(&self, s: Subset) -> bool {
        self.reachable_from_root(s) == s
    }

    /// Incidence rank of `s`: full edges with at least one endpoint in `s`
    /// and the other endpoint a ground vertex (root edges never count),
    /// with multiplicity, plus half-edges anchored in `s`.
    pub fn incidence(&self, s: Subset) -> i64 {
        let mut count = 0i64;
        for &(a, b) in &self.edges {
            let touches = |e: End| matches!(e, End::Vertex(v) if s.contains(v));
            let in_ground = |e: End| matches!(e, End::Vertex(_));
            if (touches(a) && in_ground(b)) || (touches(b) && in_ground(a)) {
                count += 1;
            }
        }
        count += self.half_edges.iter().filter(|&&h| s.contains(h)).count() as i64;
        count
    }

    /// Restriction to a feasible subset `s`: keep `s ∪ {root}`; an edge with
    /// exactly one endpoint in `s` and the other a ground vertex outside `s`
    /// becomes a half-edge at its `s` endpoint; edges within `s ∪ {root}`
    /// are kept; everything else is dropped.
    pub fn restrict(&self, s: Subset) -> Result<Self, Error> {
        if !self.is_feasible_subset(s) {
            return Err(Error::InfeasibleSet {
                set: self.ground.format_subset(s),
            });
        }
        let sub_ground = self.ground.restrict_to(s);
        let remap: BTreeMap<usize, usize> = s.iter().enumerate().map(|(new, old)| (old, new)).collect();
        let mut edges = Vec::new();
        let mut halves = Vec::new();
        for &(a, b) in &self.edges {
            let in_s = |e: End| matches!(e, End::Vertex(v) if s.contains(v));
            let map_end = |e: End| match e {
                End::Root => End::Root,
                End::Vertex(v) => End::Vertex(remap[&v]),
            };
            match (in_s(a) || a == End::Root, in_s(b) || b == End::Root) {
                (true, true) => {
                    // skip root-root impossible; keep edges inside s ∪ {root}
                    // unless neither endpoint is actually in s (a root edge
                    // to an outside vertex cannot reach this arm)
                    edges.push((map_end(a).min(map_end(b)), map_end(a).max(map_end(b))));
                }
                (true, false) => {
                    if let End::Vertex(v) = a {
                        halves.push(remap[&v]);
                    }
                    // a root endpoint with the other endpoint outside keeps
                    // nothing: no endpoint lies in s
                }
                (false, true) => {
                    if let End::Vertex(v) = b {
                        halves.push(remap[&v]);
                    }
                }
                (false, false) => {}
            }
        }
        for &h in &self.half_edges {
            if s.contains(h) {
                halves.push(remap[&h]);
            }
        }
        Ok(Self::from_parts(sub_ground, self.root.clone(), edges, halves))
    }

    /// Contraction of a feasible subset `s`: collapse `s ∪ {root}` to the
    /// root. Edges from outside into the collapsed blob become root edges
    /// (kept with multiplicity); edges inside the blob disappear;
    /// half-edges at surviving vertices are kept.
    pub fn contract(&self, s: Subset) -> Result<Self, Error> {
        if !self.is_feasible_subset(s) {
            return Err(Error::InfeasibleSet {
                set: self.ground.format_subset(s),
            });
        }
        let keep = self.ground.full().difference(s);
        let sub_ground = self.ground.restrict_to(keep);
        let remap: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(new, old)| (old, new)).collect();
        let collapse = |e: End| match e {
            End::Root => End::Root,
            End::Vertex(v) if s.contains(v) => End::Root,
            End::Vertex(v) => End::Vertex(remap[&v]),
        };
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            let (ca, cb) = (collapse(a), collapse(b));
            if ca == End::Root && cb == End::Root {
                continue;
            }
            edges.push((ca.min(cb), ca.max(cb)));
        }
        let halves = self
            .half_edges
            .iter()
            .filter(|&&h| keep.contains(h))
            .map(|&h| remap[&h])
            .collect();
        Ok(Self::from_parts(sub_ground, self.root.clone(), edges, halves))
    }
}

/// Megagreedoid of a rooted multigraph: feasible sets are the subsets whose
/// union with the root induces a connected subgraph; the rank is the
/// incidence count.
pub fn from_rooted_graph(g: &RootedMultigraph) -> Result<Megagreedoid, Error> {
    g.check_connected()?;
    let full = g.ground().full();
    let mut entries = Vec::new();
    for s in full.submasks() {
        if g.is_feasible_subset(s) {
            entries.push((s, rat(g.incidence(s))));
        }
    }
    Megagreedoid::new(g.ground().clone(), entries)
}

/// A finite poset over an ordered ground set, stored via its strict
/// order relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    ground: GroundSet,
    below: Vec<Subset>, // below[i] = elements strictly below i
}

impl Poset {
    /// Build from relation pairs `(lower, upper)`; the transitive closure is
    /// computed here and antisymmetry (acyclicity) is enforced.
    pub fn new<S: AsRef<str>>(ground: GroundSet, relations: &[(S, S)]) -> Result<Self, Error> {
        let n = ground.len();
        let mut below = vec![Subset::EMPTY; n];
        for (lo, hi) in relations {
            let i = ground.position(lo.as_ref()).ok_or_else(|| Error::UnknownLabel {
                label: lo.as_ref().to_string(),
            })?;
            let j = ground.position(hi.as_ref()).ok_or_else(|| Error::UnknownLabel {
                label: hi.as_ref().to_string(),
            })?;
            if i == j {
                return Err(Error::InvalidPoset {
                    reason: format!("`{}` related to itself", ground.label(i)),
                });
            }
            below[j] = below[j].with(i);
        }
        // transitive closure
        loop {
            let mut changed = false;
            for j in 0..n {
                let mut acc = below[j];
                for i in below[j].iter() {
                    acc = acc.union(below[i]);
                }
                if acc != below[j] {
                    below[j] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for (i, mask) in below.iter().enumerate() {
            if mask.contains(i) {
                return Err(Error::InvalidPoset {
                    reason: format!("cycle through `{}`", ground.label(i)),
                });
            }
        }
        Ok(Poset { ground, below })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn strictly_below(&self, i: usize) -> Subset {
        self.below[i]
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    pub fn is_ideal(&self, s: Subset) -> bool {
        s.iter().all(|i| self.below[i].is_subset_of(s))
    }

    /// All lower order ideals, ascending by mask.
    pub fn ideals(&self) -> Vec<Subset> {
        self.ground
            .full()
            .submasks()
            .filter(|&s| self.is_ideal(s))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Induced subposet on the members of `s`, reindexed.
    pub fn induced(&self, s: Subset) -> Poset {
        let sub_ground = self.ground.restrict_to(s);
        let positions: Vec<usize> = s.iter().collect();
        let below = positions
            .iter()
            .map(|&old| {
                Subset::from_indices(
                    positions
                        .iter()
                        .enumerate()
                        .filter(|(_, &o)| self.below[old].contains(o))
                        .map(|(new, _)| new),
                )
            })
            .collect();
        Poset {
            ground: sub_ground,
            below,
        }
    }

    /// Restriction for the Hopf structure: defined when `s` is an ideal.
    pub fn restrict_ideal(&self, s: Subset) -> Result<Poset, Error> {
        if !self.is_ideal(s) {
            return Err(Error::InfeasibleSet {
                set: self.ground.format_subset(s),
            });
        }
        Ok(self.induced(s))
    }

    /// Contraction for the Hopf structure: the induced subposet on the
    /// complement of an ideal.
    pub fn contract_ideal(&self, s: Subset) -> Result<Poset, Error> {
        if !self.is_ideal(s) {
            return Err(Error::InfeasibleSet {
                set: self.ground.format_subset(s),
            });
        }
        Ok(self.induced(self.ground.full().difference(s)))
    }

    /// Cover pairs `(lower, upper)` recomputed from the closure,
    /// deterministically ordered.
    pub fn cover_labels(&self) -> Vec<(String, String)> {
        let n = self.ground.len();
        let mut covers = Vec::new();
        for j in 0..n {
            for i in self.below[j].iter() {
                let between = self.below[j]
                    .iter()
                    .any(|k| k != i && self.below[k].contains(i));
                if !between {
                    covers.push((
                        self.ground.label(i).to_string(),
                        self.ground.label(j).to_string(),
                    ));
                }
            }
        }
        covers.sort();
        covers
    }
}

/// Megagreedoid of a poset: the family of lower order ideals with the
/// cardinality rank.
pub fn from_poset(p: &Poset) -> Result<Megagreedoid, Error> {
    let entries = p
        .ideals()
        .into_iter()
        .map(|s| (s, rat(s.len() as i64)))
        .collect();
    Megagreedoid::new(p.ground().clone(), entries)
}

/// A total rank table on `2^I`, normalized so the empty set has value zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankTable {
    ground: GroundSet,
    values: Vec<Rational>, // indexed by mask
}

impl RankTable {
    pub fn new(ground: GroundSet, entries: &[(Subset, Rational)]) -> Result<Self, Error> {
        let size = 1usize << ground.len();
        let mut values: Vec<Option<Rational>> = vec![None; size];
        for (s, r) in entries {
            if !ground.contains_mask(*s) {
                return Err(Error::MalformedTable {
                    reason: "table entry uses elements outside the ground set".into(),
                });
            }
            if values[s.mask() as usize].replace(r.clone()).is_some() {
                return Err(Error::MalformedTable {
                    reason: format!("duplicate table entry for {}", ground.format_subset(*s)),
                });
            }
        }
        let mut resolved = Vec::with_capacity(size);
        for (mask, v) in values.into_iter().enumerate() {
            match v {
                Some(r) => resolved.push(r),
                None => {
                    return Err(Error::MalformedTable {
                        reason: format!(
                            "table is not total: missing {}",
                            ground.format_subset(Subset::from_mask(mask as u16))
                        ),
                    })
                }
            }
        }
        let base = resolved[0].clone();
        if !base.is_zero() {
            for r in &mut resolved {
                *r = &*r - &base;
            }
        }
        Ok(RankTable {
            ground,
            values: resolved,
        })
    }

    pub fn from_fn(ground: GroundSet, f: impl Fn(Subset) -> Rational) -> Result<Self, Error> {
        let entries: Vec<(Subset, Rational)> = ground
            .full()
            .submasks()
            .map(|s| (s, f(s)))
            .collect();
        Self::new(ground, &entries)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn value(&self, s: Subset) -> &Rational {
        &self.values[s.mask() as usize]
    }

    pub fn entries(&self) -> impl Iterator<Item = (Subset, &Rational)> {
        self.values
            .iter()
            .enumerate()
            .map(|(mask, r)| (Subset::from_mask(mask as u16), r))
    }

    /// The three greedoid rank axioms: bounded by cardinality, monotone,
    /// and the local exchange property; values must be nonnegative
    /// integers.
    pub fn check_greedoid(&self) -> Result<(), Error> {
        let full = self.ground.full();
        for (s, r) in self.entries() {
            if !r.is_integer() || r.is_negative() {
                return Err(Error::InvalidGreedoid {
                    reason: format!(
                        "rank of {} is {}, not a natural number",
                        self.ground.format_subset(s),
                        r
                    ),
                });
            }
            if r > &rat(s.len() as i64) {
                return Err(Error::InvalidGreedoid {
                    reason: format!(
                        "cardinality bound fails: rank {} of {} exceeds {}",
                        r,
                        self.ground.format_subset(s),
                        s.len()
                    ),
                });
            }
        }
        for (s, r) in self.entries() {
            for y in full.difference(s).iter() {
                if self.value(s.with(y)) < r {
                    return Err(Error::InvalidGreedoid {
                        reason: format!(
                            "monotonicity fails at {} and element `{}`",
                            self.ground.format_subset(s),
                            self.ground.label(y)
                        ),
                    });
                }
            }
        }
        for (s, r) in self.entries() {
            let outside: Vec<usize> = full.difference(s).iter().collect();
            for (ai, &x) in outside.iter().enumerate() {
                if self.value(s.with(x)) != r {
                    continue;
                }
                for &y in &outside[ai + 1..] {
                    if self.value(s.with(y)) == r && self.value(s.with(x).with(y)) != r {
                        return Err(Error::InvalidGreedoid {
                            reason: format!(
                                "exchange fails at {} with `{}`, `{}`",
                                self.ground.format_subset(s),
                                self.ground.label(x),
                                self.ground.label(y)
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Monotone and submodular (the table is normalized on construction).
    /// The witness names the two sets violating the four-point inequality.
    pub fn check_polymatroid(&self) -> Result<(), Error> {
        let full = self.ground.full();
        for (s, r) in self.entries() {
            for y in full.difference(s).iter() {
                if self.value(s.with(y)) < r {
                    return Err(Error::InvalidPolymatroid {
                        reason: format!(
                            "monotonicity fails at {} and element `{}`",
                            self.ground.format_subset(s),
                            self.ground.label(y)
                        ),
                    });
                }
            }
        }
        for (s, _) in self.entries() {
            let outside: Vec<usize> = full.difference(s).iter().collect();
            for (ai, &x) in outside.iter().enumerate() {
                for &y in &outside[ai + 1..] {
                    let lhs = self.value(s.with(x)) + self.value(s.with(y));
                    let rhs = self.value(s.with(x).with(y)) + self.value(s);
                    if lhs < rhs {
                        return Err(Error::InvalidPolymatroid {
                            reason: format!(
                                "submodularity fails for ({}, {})",
                                self.ground.format_subset(s.with(x)),
                                self.ground.format_subset(s.with(y))
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `s` is rank feasible when `r(s ∪ X) ≤ r(s) + |X|` for every
    /// `X ⊆ I∖s`; decided by brute force over all `X`.
    pub fn is_rank_feasible(&self, s: Subset) -> bool {
        let free = self.ground.full().difference(s);
        free.submasks()
            .all(|x| self.value(s.union(x)) - self.value(s) <= rat(x.len() as i64))
    }

    pub fn rank_feasible_sets(&self) -> Vec<Subset> {
        self.ground
            .full()
            .submasks()
            .filter(|&s| self.is_rank_feasible(s))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// The table restricted to `2^R`, on the sub-ground-set `R`.
    pub fn restrict_to(&self, r: Subset) -> RankTable {
        let sub_ground = self.ground.restrict_to(r);
        let positions: Vec<usize> = r.iter().collect();
        RankTable::from_fn(sub_ground, |s| {
            let original = Subset::from_indices(s.iter().map(|i| positions[i]));
            self.value(original).clone()
        })
        .expect("total by construction")
    }

    /// The contracted table `S ↦ r(S ∪ R) − r(R)` on the complement of `R`.
    pub fn contract_by(&self, r: Subset) -> RankTable {
        let keep = self.ground.full().difference(r);
        let sub_ground = self.ground.restrict_to(keep);
        let positions: Vec<usize> = keep.iter().collect();
        let base = self.value(r).clone();
        RankTable::from_fn(sub_ground, |s| {
            let original = Subset::from_indices(s.iter().map(|i| positions[i]));
            self.value(original.union(r)) - &base
        })
        .expect("total by construction")
    }

    /// Greedoid restriction, defined for rank-feasible sets.
    pub fn greedoid_restrict(&self, r: Subset) -> Result<RankTable, Error> {
        if !self.is_rank_feasible(r) {
            return Err(Error::InfeasibleSet {
                set: self.ground.format_subset(r),
            });
        }
        Ok(self.restrict_to(r))
    }

    /// Greedoid contraction by a rank-feasible set: `r/R(S) = r(S ∪ R) − r(R)`.
    pub fn greedoid_contract(&self, r: Subset) -> Result<RankTable, Error> {
        if !self.is_rank_feasible(r) {
            return Err(Error::InfeasibleSet {
                set: self.ground.format_subset(r),
            });
        }
        Ok(self.contract_by(r))
    }
}

/// Megagreedoid of a greedoid rank table: the family of rank-feasible sets
/// carrying the table's values. The greedoid axioms are verified first.
pub fn from_greedoid(t: &RankTable) -> Result<Megagreedoid, Error> {
    t.check_greedoid()?;
    let entries = t
        .rank_feasible_sets()
        .into_iter()
        .map(|s| (s, t.value(s).clone()))
        .collect();
    Megagreedoid::new(t.ground().clone(), entries)
}

/// Megagreedoid of a polymatroid rank table: the full boolean family with
/// the table as rank. Monotonicity and submodularity are verified first.
pub fn from_polymatroid(t: &RankTable) -> Result<Megagreedoid, Error> {
    t.check_polymatroid()?;
    let entries = t.entries().map(|(s, r)| (s, r.clone())).collect();
    Megagreedoid::new(t.ground().clone(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn sample_graph_megagreedoid_matches_figures() {
        let g = samples::rooted_graph();
        let m = from_rooted_graph(&g).unwrap();
        assert_eq!(m.family().len(), 11);
        let gr = m.ground();
        let f = gr.subset_of_labels(["f"]).unwrap();
        let fp = gr.subset_of_labels(["f", "p"]).unwrap();
        assert_eq!(m.rank(f), Some(&rat(2)));
        assert_eq!(m.rank(fp), Some(&rat(3)));
        assert_eq!(m.rank(gr.full()), Some(&rat(4)));
        assert!(!m.is_feasible(gr.subset_of_labels(["p"]).unwrap()));
        assert!(!m.is_feasible(gr.subset_of_labels(["s"]).unwrap()));
    }

    #[test]
    fn star_graph_is_boolean_with_zero_rank() {
        let ground = GroundSet::new(["x", "y", "z"]).unwrap();
        let edges = vec![("r", "x"), ("r", "y"), ("r", "z")];
        let g = RootedMultigraph::new(ground, "r", &edges, &[]).unwrap();
        let m = from_rooted_graph(&g).unwrap();
        assert!(m.family_is_boolean());
        for (_, r) in m.entries() {
            assert!(r.is_zero());
        }
    }

    #[test]
    fn single_vertex_graph() {
        let ground = GroundSet::new(["v"]).unwrap();
        let g = RootedMultigraph::new(ground, "r", &[("r", "v")], &[]).unwrap();
        let m = from_rooted_graph(&g).unwrap();
        assert_eq!(m.family().len(), 2);
        assert_eq!(m.rank(m.ground().full()), Some(&rat(0)));
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let ground = GroundSet::new(["x", "y"]).unwrap();
        let result = RootedMultigraph::new(ground, "r", &[("r", "x")], &[]);
        assert!(matches!(result, Err(Error::DisconnectedGraph { .. })));
    }

    #[test]
    fn restriction_of_sample_graph_cuts_edges_into_half_edges() {
        let g = samples::rooted_graph();
        let fp = g.ground().subset_of_labels(["f", "p"]).unwrap();
        let r = g.restrict(fp).unwrap();
        assert_eq!(r.ground().labels(), &["f", "p"]);
        let mut edges = r.edge_labels();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                ("f".to_string(), "c".to_string()),
                ("f".to_string(), "p".to_string())
            ]
        );
        assert_eq!(r.half_edge_labels(), vec!["f".to_string(), "p".to_string()]);
    }

    #[test]
    fn contraction_of_sample_graph_doubles_the_root_edge() {
        let g = samples::rooted_graph();
        let fp = g.ground().subset_of_labels(["f", "p"]).unwrap();
        let c = g.contract(fp).unwrap();
        assert_eq!(c.ground().labels(), &["a", "s"]);
        let mut edges = c.edge_labels();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                ("a".to_string(), "c".to_string()),
                ("a".to_string(), "c".to_string()),
                ("a".to_string(), "s".to_string()),
                ("s".to_string(), "c".to_string()),
            ]
        );
        assert!(c.half_edges().is_empty());
    }

    #[test]
    fn graph_minor_identities() {
        let g = samples::rooted_graph();
        assert_eq!(g.restrict(g.ground().full()).unwrap(), g);
        assert_eq!(g.contract(Subset::EMPTY).unwrap(), g);
    }

    #[test]
    fn poset_ideals_and_megagreedoid() {
        let ground = GroundSet::new(["p", "q"]).unwrap();
        let chain = Poset::new(ground, &[("p", "q")]).unwrap();
        let m = from_poset(&chain).unwrap();
        assert_eq!(m.family().len(), 3);
        assert_eq!(m.rank(m.ground().full()), Some(&rat(2)));

        let anti = Poset::new(GroundSet::new(["x", "y", "z"]).unwrap(), &[] as &[(&str, &str)])
            .unwrap();
        let m = from_poset(&anti).unwrap();
        assert!(m.family_is_boolean());
    }

    #[test]
    fn poset_rejects_cycles() {
        let ground = GroundSet::new(["a", "b"]).unwrap();
        let result = Poset::new(ground, &[("a", "b"), ("b", "a")]);
        assert!(matches!(result, Err(Error::InvalidPoset { .. })));
    }

    #[test]
    fn poset_closure_is_transitive() {
        let ground = GroundSet::new(["a", "b", "c"]).unwrap();
        let p = Poset::new(ground, &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p.less(0, 2));
        assert_eq!(p.cover_labels().len(), 2);
    }

    #[test]
    fn sample_greedoid_extraction_deletes_the_zero_rank_singleton() {
        let t = samples::greedoid_table();
        let m = from_greedoid(&t).unwrap();
        assert_eq!(m.family().len(), 7);
        let u = m.ground().subset_of_labels(["u"]).unwrap();
        assert!(!m.is_feasible(u));
    }

    #[test]
    fn matroid_ranks_are_fully_feasible() {
        // uniform matroids
        for (k, labels) in [(1usize, vec!["a", "b"]), (2, vec!["a", "b", "c"])] {
            let ground = GroundSet::new(labels).unwrap();
            let t = RankTable::from_fn(ground, |s| rat(s.len().min(k) as i64)).unwrap();
            let m = from_greedoid(&t).unwrap();
            assert!(m.family_is_boolean());
        }
        // plain cardinality
        let ground = GroundSet::new(["a", "b", "c"]).unwrap();
        let t = RankTable::from_fn(ground, |s| rat(s.len() as i64)).unwrap();
        assert!(from_greedoid(&t).unwrap().family_is_boolean());
    }

    #[test]
    fn greedoid_check_names_violations() {
        let ground = GroundSet::new(["a", "b"]).unwrap();
        let t = RankTable::from_fn(ground.clone(), |s| rat((2 * s.len()) as i64)).unwrap();
        assert!(matches!(t.check_greedoid(), Err(Error::InvalidGreedoid { .. })));
        let t = RankTable::from_fn(ground, |s| rat(1) / rat(2) * rat(s.len() as i64)).unwrap();
        assert!(matches!(t.check_greedoid(), Err(Error::InvalidGreedoid { .. })));
    }

    #[test]
    fn sample_polymatroid_is_valid() {
        let t = samples::polymatroid_table();
        let m = from_polymatroid(&t).unwrap();
        assert!(m.family_is_boolean());
        assert_eq!(m.rank(m.ground().full()), Some(&rat(6)));
    }

    #[test]
    fn zero_rank_is_a_polymatroid() {
        let ground = GroundSet::new(["a", "b"]).unwrap();
        let t = RankTable::from_fn(ground, |_| rat(0)).unwrap();
        assert!(from_polymatroid(&t).is_ok());
    }

    #[test]
    fn submodularity_violations_are_reported_with_a_witness() {
        let ground = GroundSet::new(["a", "b"]).unwrap();
        // strictly supermodular: r = |S|^2
        let t = RankTable::from_fn(ground, |s| rat((s.len() * s.len()) as i64)).unwrap();
        match t.check_polymatroid() {
            Err(Error::InvalidPolymatroid { reason }) => {
                assert!(reason.contains("submodularity fails"));
                assert!(reason.contains("{a}") && reason.contains("{b}"));
            }
            other => panic!("expected polymatroid rejection, got {other:?}"),
        }
    }

    #[test]
    fn coverage_tables_are_polymatroids() {
        // rank(S) = |union of assigned label sets|
        let ground = GroundSet::new(["a", "b", "c"]).unwrap();
        let assigned: Vec<u32> = vec![0b011, 0b110, 0b100];
        let t = RankTable::from_fn(ground, |s| {
            let mut union = 0u32;
            for i in s.iter() {
                union |= assigned[i];
            }
            rat(union.count_ones() as i64)
        })
        .unwrap();
        assert!(t.check_polymatroid().is_ok());
    }
}
