//! The central data model: a feasible set family over an ordered ground set
//! together with an exact rational rank function.
//!
//! A valid structure satisfies two axioms:
//!
//! 1. accessibility both ways: every nonempty feasible set has a removable
//!    element staying feasible, and every proper feasible set has an
//!    augmenting element staying feasible (the empty set and the full set
//!    are always required to be feasible);
//! 2. local submodularity: for feasible `X ⊆ Y` and `z` outside `Y` with
//!    both `X ∪ {z}` and `Y ∪ {z}` feasible,
//!    `r(Y ∪ {z}) − r(Y) ≤ r(X ∪ {z}) − r(X)`.
//!
//! Ranks are normalized on ingestion so the empty set has rank zero.

use crate::error::Error;
use crate::ground::{GroundSet, Subset};
use crate::rational::Rational;
use num::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    MissingEmptySet,
    MissingFullSet,
    /// No element of `set` can be removed while staying feasible.
    NoRemovableElement { set: Subset },
    /// No outside element can be added to `set` while staying feasible.
    NoAugmentingElement { set: Subset },
    /// The local submodularity inequality fails for `(lower, upper, element)`.
    SubmodularityFailure {
        lower: Subset,
        upper: Subset,
        element: usize,
    },
}

/// Outcome of checking a raw family/rank table against the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub ground: GroundSet,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passes() {
            return write!(f, "all axioms hold");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            match v {
                AxiomViolation::MissingEmptySet => write!(f, "the empty set is not feasible")?,
                AxiomViolation::MissingFullSet => write!(f, "the full ground set is not feasible")?,
                AxiomViolation::NoRemovableElement { set } => write!(
                    f,
                    "axiom 1: no removable element for {}",
                    self.ground.format_subset(*set)
                )?,
                AxiomViolation::NoAugmentingElement { set } => write!(
                    f,
                    "axiom 1: no augmenting element for {}",
                    self.ground.format_subset(*set)
                )?,
                AxiomViolation::SubmodularityFailure {
                    lower,
                    upper,
                    element,
                } => write!(
                    f,
                    "axiom 2: adding `{}` to {} gains more than adding it to {}",
                    self.ground.label(*element),
                    self.ground.format_subset(*upper),
                    self.ground.format_subset(*lower)
                )?,
            }
        }
        Ok(())
    }
}

/// Check a raw candidate. `family` lists the feasible sets; `ranks` assigns
/// rational values. A family member without a rank, a rank on a set outside
/// the family, out-of-range masks, or duplicates are malformed input, not
/// axiom violations.
pub fn check_axioms(
    ground: &GroundSet,
    family: &[Subset],
    ranks: &[(Subset, Rational)],
) -> Result<AxiomReport, Error> {
    let full = ground.full();
    let mut rank_map: BTreeMap<Subset, Rational> = BTreeMap::new();
    for (s, r) in ranks {
        if !s.is_subset_of(full) {
            return Err(Error::MalformedTable {
                reason: "rank entry uses elements outside the ground set".into(),
            });
        }
        if rank_map.insert(*s, r.clone()).is_some() {
            return Err(Error::MalformedTable {
                reason: format!("duplicate rank entry for {}", ground.format_subset(*s)),
            });
        }
    }
    let mut seen: Vec<Subset> = Vec::new();
    for s in family {
        if !s.is_subset_of(full) {
            return Err(Error::MalformedTable {
                reason: "family member uses elements outside the ground set".into(),
            });
        }
        if seen.contains(s) {
            return Err(Error::MalformedTable {
                reason: format!("duplicate family member {}", ground.format_subset(*s)),
            });
        }
        seen.push(*s);
        if !rank_map.contains_key(s) {
            return Err(Error::MalformedTable {
                reason: format!("rank missing for {}", ground.format_subset(*s)),
            });
        }
    }
    for s in rank_map.keys() {
        if !seen.contains(s) {
            return Err(Error::MalformedTable {
                reason: format!(
                    "rank given for {} which is not in the family",
                    ground.format_subset(*s)
                ),
            });
        }
    }

    // Normalize so the empty set (when present) has rank zero; both axioms
    // are invariant under a constant shift.
    if let Some(base) = rank_map.get(&Subset::EMPTY).cloned() {
        if !base.is_zero() {
            for r in rank_map.values_mut() {
                *r = &*r - &base;
            }
        }
    }

    let mut violations = Vec::new();
    let is_feasible = |s: Subset| rank_map.contains_key(&s);
    if !is_feasible(Subset::EMPTY) {
        violations.push(AxiomViolation::MissingEmptySet);
    }
    if !is_feasible(full) {
        violations.push(AxiomViolation::MissingFullSet);
    }

    for &s in rank_map.keys().collect::<Vec<_>>() {
        if !s.is_empty() && !s.iter().any(|x| is_feasible(s.without(x))) {
            violations.push(AxiomViolation::NoRemovableElement { set: s });
        }
        if s != full
            && !full
                .difference(s)
                .iter()
                .any(|y| is_feasible(s.with(y)))
        {
            violations.push(AxiomViolation::NoAugmentingElement { set: s });
        }
    }

    // Local submodularity over all nested feasible pairs.
    'outer: for (&upper, r_upper) in &rank_map {
        for lower in upper.submasks() {
            if lower == upper {
                continue;
            }
            let r_lower = match rank_map.get(&lower) {
                Some(r) => r,
                None => continue,
            };
            for z in full.difference(upper).iter() {
                let (uz, lz) = (upper.with(z), lower.with(z));
                if let (Some(r_uz), Some(r_lz)) = (rank_map.get(&uz), rank_map.get(&lz)) {
                    if r_uz - r_upper > r_lz - r_lower {
                        violations.push(AxiomViolation::SubmodularityFailure {
                            lower,
                            upper,
                            element: z,
                        });
                        // One witness per check keeps reports readable.
                        break 'outer;
                    }
                }
            }
        }
    }

    Ok(AxiomReport {
        ground: ground.clone(),
        violations,
    })
}

/// A feasible set family with an exact rational rank function, over an
/// ordered ground set. Immutable after construction; all operations are
/// pure functions returning new values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Megagreedoid {
    ground: GroundSet,
    family: Vec<Subset>,    // sorted by mask
    ranks: Vec<Rational>,   // parallel to `family`, ranks normalized at the empty set
}

impl Megagreedoid {
    /// Validating constructor: checks both axioms and normalizes ranks.
    pub fn new(ground: GroundSet, entries: Vec<(Subset, Rational)>) -> Result<Self, Error> {
        let family: Vec<Subset> = entries.iter().map(|(s, _)| *s).collect();
        let report = check_axioms(&ground, &family, &entries)?;
        if !report.passes() {
            return Err(Error::AxiomFailure { report });
        }
        Ok(Self::from_parts_unchecked(ground, entries))
    }

    /// Build without running the axiom check. The caller asserts validity;
    /// intended for diagnostics and fault-injection tests. Ranks are still
    /// normalized and duplicate sets still collapse (last entry wins).
    pub fn from_parts_unchecked(ground: GroundSet, entries: Vec<(Subset, Rational)>) -> Self {
        let mut map: BTreeMap<Subset, Rational> = BTreeMap::new();
        for (s, r) in entries {
            map.insert(s, r);
        }
        if let Some(base) = map.get(&Subset::EMPTY).cloned() {
            if !base.is_zero() {
                for r in map.values_mut() {
                    *r = &*r - &base;
                }
            }
        }
        let (family, ranks): (Vec<_>, Vec<_>) = map.into_iter().unzip();
        Megagreedoid {
            ground,
            family,
            ranks,
        }
    }

    fn from_map(ground: GroundSet, map: BTreeMap<Subset, Rational>) -> Self {
        let (family, ranks): (Vec<_>, Vec<_>) = map.into_iter().unzip();
        Megagreedoid {
            ground,
            family,
            ranks,
        }
    }

    /// The one-point structure on an empty ground set.
    pub fn trivial() -> Self {
        Megagreedoid {
            ground: GroundSet::empty(),
            family: vec![Subset::EMPTY],
            ranks: vec![Rational::zero()],
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    /// Feasible sets in ascending mask order.
    pub fn family(&self) -> &[Subset] {
        &self.family
    }

    pub fn entries(&self) -> impl Iterator<Item = (Subset, &Rational)> {
        self.family.iter().copied().zip(self.ranks.iter())
    }

    pub fn is_feasible(&self, s: Subset) -> bool {
        self.family.binary_search(&s).is_ok()
    }

    pub fn rank(&self, s: Subset) -> Option<&Rational> {
        self.family.binary_search(&s).ok().map(|i| &self.ranks[i])
    }

    fn rank_req(&self, s: Subset) -> Result<&Rational, Error> {
        self.rank(s).ok_or_else(|| Error::InfeasibleSet {
            set: self.ground.format_subset(s),
        })
    }

    /// Whether the family is the full boolean lattice.
    pub fn family_is_boolean(&self) -> bool {
        self.family.len() == 1 << self.ground.len()
    }

    /// Restriction to a feasible set `s`: members contained in `s`, same
    /// ranks, ground set reindexed to the elements of `s` in the original
    /// order.
    pub fn restrict(&self, s: Subset) -> Result<Self, Error> {
        self.rank_req(s)?;
        let sub_ground = self.ground.restrict_to(s);
        let positions: Vec<usize> = s.iter().collect();
        let mut map = BTreeMap::new();
        for (x, r) in self.entries() {
            if x.is_subset_of(s) {
                let remapped = Subset::from_indices(
                    positions
                        .iter()
                        .enumerate()
                        .filter(|(_, &old)| x.contains(old))
                        .map(|(new, _)| new),
                );
                map.insert(remapped, r.clone());
            }
        }
        Ok(Self::from_map(sub_ground, map))
    }

    /// Contraction by a feasible set `s`: family `{X ⊆ I∖s : X ∪ s feasible}`
    /// with ranks `r(X ∪ s) − r(s)`, on the ground set `I∖s`.
    pub fn contract(&self, s: Subset) -> Result<Self, Error> {
        let r_s = self.rank_req(s)?.clone();
        let complement = self.ground.full().difference(s);
        let sub_ground = self.ground.restrict_to(complement);
        let positions: Vec<usize> = complement.iter().collect();
        let mut map = BTreeMap::new();
        for (y, r) in self.entries() {
            if s.is_subset_of(y) {
                let x = y.difference(s);
                let remapped = Subset::from_indices(
                    positions
                        .iter()
                        .enumerate()
                        .filter(|(_, &old)| x.contains(old))
                        .map(|(new, _)| new),
                );
                map.insert(remapped, r - &r_s);
            }
        }
        Ok(Self::from_map(sub_ground, map))
    }

    /// `(self|_outer) / inner`, where `inner ⊆ outer` are given as masks of
    /// this structure's ground set.
    pub fn minor(&self, outer: Subset, inner: Subset) -> Result<Self, Error> {
        if !inner.is_subset_of(outer) {
            return Err(Error::NotNested {
                lower: self.ground.format_subset(inner),
                upper: self.ground.format_subset(outer),
            });
        }
        let restricted = self.restrict(outer)?;
        let inner_labels = self.ground.labels_of(inner);
        let inner_mask = restricted.ground.subset_of_labels(&inner_labels)?;
        restricted.contract(inner_mask)
    }

    /// Direct sum on label-disjoint ground sets; the combined order is
    /// `self`'s order followed by `other`'s.
    pub fn direct_sum(&self, other: &Megagreedoid) -> Result<Self, Error> {
        let ground = self.ground.concat(&other.ground)?;
        let shift = self.ground.len();
        let mut map = BTreeMap::new();
        for (x, rx) in self.entries() {
            for (y, ry) in other.entries() {
                let combined = Subset::from_mask(x.mask() | (y.mask() << shift));
                map.insert(combined, rx + ry);
            }
        }
        Ok(Self::from_map(ground, map))
    }

    /// True when every set between `x` and `y` is feasible. Both endpoints
    /// must be feasible and nested.
    pub fn is_boolean_interval(&self, x: Subset, y: Subset) -> Result<bool, Error> {
        if !x.is_subset_of(y) {
            return Err(Error::NotNested {
                lower: self.ground.format_subset(x),
                upper: self.ground.format_subset(y),
            });
        }
        self.rank_req(x)?;
        self.rank_req(y)?;
        let free = y.difference(x);
        Ok(free.submasks().all(|d| self.is_feasible(x.union(d))))
    }

    /// On a boolean interval `[x, y]`, whether the local rank is additive:
    /// `r(x ∪ T) − r(x) = Σ_{t ∈ T} (r(x ∪ {t}) − r(x))` for every
    /// `T ⊆ y∖x`.
    pub fn is_modular_on_interval(&self, x: Subset, y: Subset) -> Result<bool, Error> {
        if !self.is_boolean_interval(x, y)? {
            return Err(Error::NotBooleanInterval {
                lower: self.ground.format_subset(x),
                upper: self.ground.format_subset(y),
            });
        }
        let r_x = self.rank(x).unwrap().clone();
        let free = y.difference(x);
        let gains: BTreeMap<usize, Rational> = free
            .iter()
            .map(|t| (t, self.rank(x.with(t)).unwrap() - &r_x))
            .collect();
        for d in free.submasks() {
            if d.len() < 2 {
                continue;
            }
            let mut expected = Rational::zero();
            for t in d.iter() {
                expected += &gains[&t];
            }
            if self.rank(x.union(d)).unwrap() - &r_x != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Four-point modular law on a boolean interval: `r(Z) + r(W) =
    /// r(Z ∪ W) + r(Z ∩ W)` for all `x ⊆ Z, W ⊆ y`. An alternative route to
    /// [`Megagreedoid::is_modular_on_interval`]; the two must agree.
    pub fn is_modular_four_point(&self, x: Subset, y: Subset) -> Result<bool, Error> {
        if !self.is_boolean_interval(x, y)? {
            return Err(Error::NotBooleanInterval {
                lower: self.ground.format_subset(x),
                upper: self.ground.format_subset(y),
            });
        }
        let free = y.difference(x);
        let sets: Vec<Subset> = free.submasks().map(|d| x.union(d)).collect();
        for &z in &sets {
            for &w in &sets {
                let lhs = self.rank(z).unwrap() + self.rank(w).unwrap();
                let rhs = self.rank(z.union(w)).unwrap() + self.rank(z.intersection(w)).unwrap();
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All permutations of the ground set whose every prefix set is
    /// feasible, in the greedy chain order.
    pub fn feasible_permutations(&self) -> Vec<Vec<usize>> {
        let n = self.ground.len();
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::with_capacity(n);
        self.perm_dfs(Subset::EMPTY, &mut stack, &mut out);
        let mut perms = out;
        perms.sort_by(|a, b| self.greedy_compare_permutations(a, b));
        perms
    }

    fn perm_dfs(&self, prefix: Subset, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = self.ground.len();
        if stack.len() == n {
            out.push(stack.clone());
            return;
        }
        for next in 0..n {
            if prefix.contains(next) {
                continue;
            }
            let extended = prefix.with(next);
            if self.is_feasible(extended) {
                stack.push(next);
                self.perm_dfs(extended, stack, out);
                stack.pop();
            }
        }
    }

    /// Greedy chain order on feasible permutations: at the first position
    /// where they differ, the one whose prefix there has smaller rank comes
    /// first; rank ties break by the ground order of the differing elements.
    ///
    /// This order alone is not always a shelling order of the relative
    /// complex; the shelling verifier repairs it by a first-fit pass.
    pub fn greedy_compare_permutations(&self, a: &[usize], b: &[usize]) -> Ordering {
        let mut prefix_a = Subset::EMPTY;
        let mut prefix_b = Subset::EMPTY;
        for (&xa, &xb) in a.iter().zip(b.iter()) {
            prefix_a = prefix_a.with(xa);
            prefix_b = prefix_b.with(xb);
            if xa != xb {
                let ra = self.rank(prefix_a).expect("feasible prefix");
                let rb = self.rank(prefix_b).expect("feasible prefix");
                return ra.cmp(rb).then(xa.cmp(&xb));
            }
        }
        Ordering::Equal
    }

    /// Check that `perm` is a feasible permutation; returns the prefix masks
    /// `P_1, …, P_n`.
    pub fn prefix_chain(&self, perm: &[usize]) -> Result<Vec<Subset>, Error> {
        let n = self.ground.len();
        if perm.len() != n {
            return Err(Error::BadFunctionLength {
                expected: n,
                got: perm.len(),
            });
        }
        let mut prefix = Subset::EMPTY;
        let mut chain = Vec::with_capacity(n);
        for &x in perm {
            if x >= n || prefix.contains(x) {
                return Err(Error::InfeasiblePermutation {
                    prefix: format!("{perm:?}"),
                });
            }
            prefix = prefix.with(x);
            if !self.is_feasible(prefix) {
                return Err(Error::InfeasiblePermutation {
                    prefix: self.ground.format_subset(prefix),
                });
            }
            chain.push(prefix);
        }
        Ok(chain)
    }

    /// Re-express over a ground set carrying the same labels, possibly in a
    /// different order.
    pub fn relabel_to(&self, target: &GroundSet) -> Result<Self, Error> {
        if !self.ground.same_label_set(target) {
            return Err(Error::IncompatibleGround);
        }
        let perm: Vec<usize> = self
            .ground
            .labels()
            .iter()
            .map(|l| target.position(l).expect("same label set"))
            .collect();
        let mut map = BTreeMap::new();
        for (s, r) in self.entries() {
            let remapped = Subset::from_indices(s.iter().map(|i| perm[i]));
            map.insert(remapped, r.clone());
        }
        Ok(Self::from_map(target.clone(), map))
    }

    /// Rename position `i` to `labels[i]`, keeping the order.
    pub fn with_labels<S: Into<String> + Clone>(&self, labels: &[S]) -> Result<Self, Error> {
        if labels.len() != self.ground.len() {
            return Err(Error::IncompatibleGround);
        }
        let ground = GroundSet::new(labels.to_vec())?;
        Ok(Megagreedoid {
            ground,
            family: self.family.clone(),
            ranks: self.ranks.clone(),
        })
    }

    /// Canonical representative: same structure re-expressed over the
    /// lexicographically sorted label order. Two structures that differ only
    /// in their stored order have equal canonical forms.
    pub fn canonical(&self) -> Self {
        self.relabel_to(&self.ground.sorted()).expect("same labels")
    }

    /// Compact deterministic encoding, used by formal-sum serialization.
    pub fn encode(&self) -> String {
        let mut out = String::from("[");
        for (k, (s, r)) in self.entries().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            out.push_str(&self.ground.format_subset(s));
            out.push(':');
            out.push_str(&r.to_string());
        }
        out.push(']');
        out
    }
}

impl fmt::Debug for Megagreedoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Megagreedoid(on [{}] {})",
            self.ground.labels().join(","),
            self.encode()
        )
    }
}

impl fmt::Display for Megagreedoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}
