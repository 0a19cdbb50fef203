//! Formal rational sums of structures on a fixed ground set, with the
//! direct-sum product, the restriction/contraction coproduct, the recursive
//! antipode, and verifiers for the compatibility axioms.
//!
//! Infeasible restriction sets make the coproduct zero rather than raising
//! an error. Minors of minors inherit sub-orders of the ambient ground
//! order, so every term of a formal sum is relabeled into the ambient
//! order before it is stored; equality of sums is equality of these
//! canonical terms.

use crate::constructions::RootedMultigraph;
use crate::error::Error;
use crate::ground::{GroundSet, Subset};
use crate::megagreedoid::Megagreedoid;
use crate::rational::{rat, Rational};
use num::Zero;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A rational linear combination of structures sharing one ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    ground: GroundSet,
    terms: BTreeMap<Megagreedoid, Rational>,
}

impl FormalSum {
    pub fn zero(ground: GroundSet) -> Self {
        FormalSum {
            ground,
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(m: Megagreedoid) -> Self {
        let ground = m.ground().clone();
        let mut sum = Self::zero(ground);
        sum.add_scaled(&m, &rat(1)).expect("same ground");
        sum
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Megagreedoid, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Megagreedoid) -> Rational {
        let key = match m.relabel_to(&self.ground) {
            Ok(k) => k,
            Err(_) => return Rational::zero(),
        };
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Add `c · m`, relabeling `m` into the ambient ground order first.
    pub fn add_scaled(&mut self, m: &Megagreedoid, c: &Rational) -> Result<(), Error> {
        if c.is_zero() {
            return Ok(());
        }
        let key = m.relabel_to(&self.ground)?;
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = m.relabel_to(&self.ground)?;
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn add(&mut self, other: &FormalSum) -> Result<(), Error> {
        for (m, c) in other.terms() {
            self.add_scaled(m, c)?;
        }
        Ok(())
    }

    pub fn negate(&self) -> FormalSum {
        FormalSum {
            ground: self.ground.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> FormalSum {
        if c.is_zero() {
            return Self::zero(self.ground.clone());
        }
        FormalSum {
            ground: self.ground.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Deterministic rendering: one `<coeff> * <encoding>` line per term,
    /// sorted by the canonical term encoding.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let lines: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{} * {}", c, m.encode()))
            .collect();
        lines.join("\n")
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A rational combination of ordered pairs of structures on complementary
/// ground sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSum {
    ground: GroundSet,
    terms: BTreeMap<(Megagreedoid, Megagreedoid), Rational>,
}

impl TensorSum {
    pub fn zero(ground: GroundSet) -> Self {
        TensorSum {
            ground,
            terms: BTreeMap::new(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Megagreedoid, Megagreedoid), &Rational)> {
        self.terms.iter()
    }

    pub fn add_scaled(
        &mut self,
        left: &Megagreedoid,
        right: &Megagreedoid,
        c: &Rational,
    ) -> Result<(), Error> {
        if c.is_zero() {
            return Ok(());
        }
        let combined = left.ground().concat(right.ground())?;
        if !combined.same_label_set(&self.ground) {
            return Err(Error::IncompatibleGround);
        }
        let key = (left.clone(), right.clone());
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }
}

/// `Δ_S(m) = m|_S ⊗ m/S` when `S` is feasible, and zero otherwise.
pub fn coproduct(m: &Megagreedoid, s: Subset) -> TensorSum {
    let mut out = TensorSum::zero(m.ground().clone());
    if m.is_feasible(s) {
        let left = m.restrict(s).expect("feasible");
        let right = m.contract(s).expect("feasible");
        out.add_scaled(&left, &right, &rat(1)).expect("partition");
    }
    out
}

/// Linear extension of the coproduct to formal sums.
pub fn coproduct_sum(x: &FormalSum, s: Subset) -> TensorSum {
    let mut out = TensorSum::zero(x.ground().clone());
    for (m, c) in x.terms() {
        if m.is_feasible(s) {
            let left = m.restrict(s).expect("feasible");
            let right = m.contract(s).expect("feasible");
            out.add_scaled(&left, &right, c).expect("partition");
        }
    }
    out
}

/// The basic character: 1 when the family is the full boolean lattice and
/// the rank is modular on it, 0 otherwise.
pub fn character_zeta(m: &Megagreedoid) -> Rational {
    if !m.family_is_boolean() {
        return Rational::zero();
    }
    let full = m.ground().full();
    if m.is_modular_on_interval(Subset::EMPTY, full)
        .expect("boolean family")
    {
        rat(1)
    } else {
        Rational::zero()
    }
}

/// The recursive antipode
/// `s(m) = − Σ_{J ⊊ I feasible} s(m|_J) · (m/J)`, with the one-point
/// structure fixed. Evaluated with memoization on structure values.
pub fn antipode(m: &Megagreedoid) -> FormalSum {
    let mut memo: HashMap<Megagreedoid, FormalSum> = HashMap::new();
    antipode_memo(m, &mut memo)
}

fn antipode_memo(m: &Megagreedoid, memo: &mut HashMap<Megagreedoid, FormalSum>) -> FormalSum {
    if let Some(hit) = memo.get(m) {
        return hit.clone();
    }
    let full = m.ground().full();
    let result = if m.size() == 0 {
        FormalSum::singleton(m.clone())
    } else {
        let mut acc = FormalSum::zero(m.ground().clone());
        for &j in m.family() {
            if j == full {
                continue;
            }
            let restricted = m.restrict(j).expect("family member");
            let contracted = m.contract(j).expect("family member");
            let inner = antipode_memo(&restricted, memo);
            for (basis, coeff) in inner.terms() {
                let term = basis.direct_sum(&contracted).expect("disjoint minors");
                acc.add_scaled(&term, coeff).expect("same labels");
            }
        }
        acc.negate()
    };
    memo.insert(m.clone(), result.clone());
    result
}

/// The antipode expanded over ordered set compositions: feasible chains
/// `∅ = U_0 ⊂ U_1 ⊂ … ⊂ U_k = I` contribute
/// `(−1)^k (m|_{U_1}/U_0) · ⋯ · (m|_{U_k}/U_{k−1})`.
pub fn antipode_takeuchi(m: &Megagreedoid) -> FormalSum {
    let mut out = FormalSum::zero(m.ground().clone());
    let full = m.ground().full();
    if m.size() == 0 {
        out.add_scaled(m, &rat(1)).expect("same ground");
        return out;
    }
    let mut blocks: Vec<Megagreedoid> = Vec::new();
    takeuchi_chains(m, Subset::EMPTY, full, &mut blocks, &mut out);
    out
}

fn takeuchi_chains(
    m: &Megagreedoid,
    current: Subset,
    full: Subset,
    blocks: &mut Vec<Megagreedoid>,
    out: &mut FormalSum,
) {
    if current == full {
        let sign = if blocks.len().is_multiple_of(2) { rat(1) } else { rat(-1) };
        let mut product = Megagreedoid::trivial();
        for block in blocks.iter() {
            product = product.direct_sum(block).expect("disjoint blocks");
        }
        out.add_scaled(&product, &sign).expect("same labels");
        return;
    }
    for &next in m.family() {
        if current.is_subset_of(next) && next != current {
            let block = m.minor(next, current).expect("feasible nested pair");
            blocks.push(block);
            takeuchi_chains(m, next, full, blocks, out);
            blocks.pop();
        }
    }
}

/// `Σ_{S feasible} s(m|_S) · (m/S)`: the defining convolution. For a
/// nonempty ground set this is the zero sum; on the empty ground set it is
/// the one-point structure itself.
pub fn antipode_convolution(m: &Megagreedoid) -> FormalSum {
    let mut out = FormalSum::zero(m.ground().clone());
    let mut memo: HashMap<Megagreedoid, FormalSum> = HashMap::new();
    for &s in m.family() {
        let restricted = m.restrict(s).expect("family member");
        let contracted = m.contract(s).expect("family member");
        let inner = antipode_memo(&restricted, &mut memo);
        for (basis, coeff) in inner.terms() {
            let term = basis.direct_sum(&contracted).expect("disjoint minors");
            out.add_scaled(&term, coeff).expect("same labels");
        }
    }
    out
}

/// Coproduct for rooted multigraphs: `(g|_S, g/S)` when `S ∪ {root}` is
/// connected, `None` (the zero tensor) otherwise.
pub fn rg_coproduct(
    g: &RootedMultigraph,
    s: Subset,
) -> Result<Option<(RootedMultigraph, RootedMultigraph)>, Error> {
    if !g.is_feasible_subset(s) {
        return Ok(None);
    }
    Ok(Some((g.restrict(s)?, g.contract(s)?)))
}

/// One witness string per failed identity.
#[derive(Clone, Debug, Default)]
pub struct HopfReport {
    pub checks_run: usize,
    pub failures: Vec<String>,
}

impl HopfReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, outcome: Result<(), String>) {
        self.checks_run += 1;
        if let Err(witness) = outcome {
            self.failures.push(witness);
        }
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passes() {
            write!(f, "{} checks passed", self.checks_run)
        } else {
            writeln!(
                f,
                "{} of {} checks failed:",
                self.failures.len(),
                self.checks_run
            )?;
            for failure in &self.failures {
                writeln!(f, "  {failure}")?;
            }
            Ok(())
        }
    }
}

/// Coassociativity of the minors over all nested `A ⊆ B`:
/// `(m|_B)|_A = m|_A`, `(m|_B)/A = (m/A)|_{B−A}`, and
/// `(m/A)/(B−A) = m/B`, with agreeing zero cases.
pub fn check_coassociativity(m: &Megagreedoid) -> Result<(), String> {
    let full = m.ground().full();
    for b in full.submasks() {
        for a in b.submasks() {
            let b_feasible = m.is_feasible(b);
            let a_feasible = m.is_feasible(a);
            if !(a_feasible && b_feasible) {
                // both routes must degenerate together: A feasible in m|_B
                // iff A feasible in m; B−A feasible in m/A iff B feasible
                if a_feasible {
                    let contracted = m.contract(a).unwrap();
                    let b_minus_a_labels = m.ground().labels_of(b.difference(a));
                    let shifted = contracted
                        .ground()
                        .subset_of_labels(&b_minus_a_labels)
                        .unwrap();
                    if contracted.is_feasible(shifted) != b_feasible {
                        return Err(format!(
                            "zero cases disagree at A={}, B={} of {}",
                            m.ground().format_subset(a),
                            m.ground().format_subset(b),
                            m
                        ));
                    }
                }
                continue;
            }
            let restricted_b = m.restrict(b).unwrap();
            let a_labels = m.ground().labels_of(a);
            let a_in_b = restricted_b.ground().subset_of_labels(&a_labels).unwrap();
            let lhs_left = restricted_b.restrict(a_in_b).unwrap();
            let lhs_mid = restricted_b.contract(a_in_b).unwrap();
            let rhs_left = m.restrict(a).unwrap();
            let contracted_a = m.contract(a).unwrap();
            let b_minus_a_labels = m.ground().labels_of(b.difference(a));
            let ba_in_ca = contracted_a
                .ground()
                .subset_of_labels(&b_minus_a_labels)
                .unwrap();
            let rhs_mid = contracted_a.restrict(ba_in_ca).unwrap();
            let rhs_right = contracted_a.contract(ba_in_ca).unwrap();
            let lhs_right = m.contract(b).unwrap();
            if lhs_left != rhs_left || lhs_mid != rhs_mid || lhs_right != rhs_right {
                return Err(format!(
                    "coassociativity fails at A={}, B={} of {}",
                    m.ground().format_subset(a),
                    m.ground().format_subset(b),
                    m
                ));
            }
        }
    }
    Ok(())
}

/// Compatibility of product and coproduct: for every `A`,
/// `(f·g)|_A = f|_{A∩S} · g|_{A∩T}` and `(f·g)/A = f/(A∩S) · g/(A∩T)`,
/// with agreeing zero cases. `product` is normally `f.direct_sum(&g)`;
/// passing anything else should be detected.
pub fn check_compatibility(
    f: &Megagreedoid,
    g: &Megagreedoid,
    product: &Megagreedoid,
) -> Result<(), String> {
    let ground = product.ground().clone();
    let s_mask = ground
        .subset_of_labels(f.ground().labels())
        .map_err(|_| "product ground does not contain the left factor".to_string())?;
    let t_mask = ground
        .subset_of_labels(g.ground().labels())
        .map_err(|_| "product ground does not contain the right factor".to_string())?;
    let full = ground.full();
    if s_mask.union(t_mask) != full || !s_mask.intersection(t_mask).is_empty() {
        return Err("factors do not partition the product ground".to_string());
    }
    for a in full.submasks() {
        let a_s = a.intersection(s_mask);
        let a_t = a.intersection(t_mask);
        let f_mask = to_local(&ground, f.ground(), a_s);
        let g_mask = to_local(&ground, g.ground(), a_t);
        let factors_feasible = f.is_feasible(f_mask) && g.is_feasible(g_mask);
        if product.is_feasible(a) != factors_feasible {
            return Err(format!(
                "zero cases disagree at A={} of {} · {}",
                ground.format_subset(a),
                f,
                g
            ));
        }
        if !factors_feasible {
            continue;
        }
        // both sides inherit the same ordered ground, so equality is direct
        let lhs_restrict = product.restrict(a).unwrap();
        let rhs_restrict = f
            .restrict(f_mask)
            .unwrap()
            .direct_sum(&g.restrict(g_mask).unwrap())
            .unwrap();
        let lhs_contract = product.contract(a).unwrap();
        let rhs_contract = f
            .contract(f_mask)
            .unwrap()
            .direct_sum(&g.contract(g_mask).unwrap())
            .unwrap();
        if lhs_restrict != rhs_restrict || lhs_contract != rhs_contract {
            return Err(format!(
                "compatibility fails at A={} of {} · {}",
                ground.format_subset(a),
                f,
                g
            ));
        }
    }
    Ok(())
}

fn to_local(ambient: &GroundSet, local: &GroundSet, mask: Subset) -> Subset {
    let labels = ambient.labels_of(mask);
    local.subset_of_labels(&labels).expect("labels of factor")
}

/// `(f·g)·h = f·(g·h)` structurally.
pub fn check_product_associativity(
    f: &Megagreedoid,
    g: &Megagreedoid,
    h: &Megagreedoid,
) -> Result<(), String> {
    let left = f
        .direct_sum(g)
        .and_then(|fg| fg.direct_sum(h))
        .map_err(|e| e.to_string())?;
    let right = g
        .direct_sum(h)
        .and_then(|gh| f.direct_sum(&gh))
        .map_err(|e| e.to_string())?;
    if left == right {
        Ok(())
    } else {
        Err(format!("associativity fails for {f} · {g} · {h}"))
    }
}

/// `ζ(f·g) = ζ(f) ζ(g)`.
pub fn check_character_multiplicativity(f: &Megagreedoid, g: &Megagreedoid) -> Result<(), String> {
    let sum = f.direct_sum(g).map_err(|e| e.to_string())?;
    if character_zeta(&sum) == character_zeta(f) * character_zeta(g) {
        Ok(())
    } else {
        Err(format!("character multiplicativity fails for {f} · {g}"))
    }
}

/// Run coassociativity on every element, and compatibility/associativity on
/// disjointified consecutive pairs and triples of the corpus.
pub fn verify_hopf_axioms(corpus: &[Megagreedoid]) -> HopfReport {
    let mut report = HopfReport::default();
    for m in corpus {
        report.record(check_coassociativity(m));
    }
    let relabeled = |m: &Megagreedoid, prefix: &str| {
        let labels: Vec<String> = (0..m.size()).map(|i| format!("{prefix}{i}")).collect();
        m.with_labels(&labels).expect("same size")
    };
    for window in corpus.windows(2) {
        let (f, g) = (&window[0], &window[1]);
        if f.size() + g.size() > 8 {
            continue;
        }
        let f = relabeled(f, "a");
        let g = relabeled(g, "b");
        let product = f.direct_sum(&g).expect("disjoint labels");
        report.record(check_compatibility(&f, &g, &product));
        report.record(check_character_multiplicativity(&f, &g));
    }
    for window in corpus.windows(3) {
        let (f, g, h) = (&window[0], &window[1], &window[2]);
        if f.size() + g.size() + h.size() > 9 {
            continue;
        }
        report.record(check_product_associativity(
            &relabeled(f, "a"),
            &relabeled(g, "b"),
            &relabeled(h, "c"),
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::samples;

    #[test]
    fn coproduct_of_the_sample_graph() {
        let m = samples::rooted_graph_megagreedoid();
        let fp = m.ground().subset_of_labels(["f", "p"]).unwrap();
        let delta = coproduct(&m, fp);
        assert_eq!(delta.terms().count(), 1);
        let ((left, right), coeff) = delta.terms().next().unwrap();
        assert_eq!(coeff, &rat(1));
        assert_eq!(left, &m.restrict(fp).unwrap());
        assert_eq!(right, &m.contract(fp).unwrap());

        // the empty set splits off the unit on the left
        let unit_split = coproduct(&m, Subset::EMPTY);
        let ((left, right), _) = unit_split.terms().next().unwrap();
        assert_eq!(left, &Megagreedoid::trivial());
        assert_eq!(right, &m);

        // infeasible sets give the zero tensor
        let p = m.ground().subset_of_labels(["p"]).unwrap();
        assert!(coproduct(&m, p).is_zero());
    }

    #[test]
    fn zeta_values() {
        assert_eq!(character_zeta(&Megagreedoid::trivial()), rat(1));
        assert_eq!(character_zeta(&samples::rooted_graph_megagreedoid()), rat(0));
        assert_eq!(character_zeta(&samples::polymatroid_megagreedoid()), rat(0));
        // boolean family with zero (modular) rank
        let ground = crate::ground::GroundSet::new(["x", "y"]).unwrap();
        let m = Megagreedoid::new(
            ground.clone(),
            ground.full().submasks().map(|s| (s, rat(0))).collect(),
        )
        .unwrap();
        assert_eq!(character_zeta(&m), rat(1));
    }

    #[test]
    fn antipode_of_small_structures() {
        let trivial = Megagreedoid::trivial();
        let s = antipode(&trivial);
        assert_eq!(s.coefficient(&trivial), rat(1));
        assert_eq!(s.terms().count(), 1);

        let ground = crate::ground::GroundSet::new(["v"]).unwrap();
        let single = Megagreedoid::new(
            ground.clone(),
            vec![(Subset::EMPTY, rat(0)), (ground.full(), rat(3))],
        )
        .unwrap();
        let s = antipode(&single);
        assert_eq!(s.terms().count(), 1);
        assert_eq!(s.coefficient(&single), rat(-1));
    }

    #[test]
    fn antipode_matches_composition_expansion_on_samples() {
        for m in samples::all_megagreedoids() {
            assert_eq!(antipode(&m), antipode_takeuchi(&m));
        }
    }

    #[test]
    fn convolution_identity_on_samples() {
        for m in samples::all_megagreedoids() {
            assert!(antipode_convolution(&m).is_zero());
        }
        let trivial = Megagreedoid::trivial();
        let conv = antipode_convolution(&trivial);
        assert_eq!(conv.coefficient(&trivial), rat(1));
    }

    #[test]
    fn antipode_coefficients_are_integers() {
        for m in samples::all_megagreedoids() {
            for (_, coeff) in antipode(&m).terms() {
                assert!(coeff.is_integer());
            }
        }
    }

    #[test]
    fn axioms_hold_vacuously_on_the_trivial_structure() {
        let report = verify_hopf_axioms(&[Megagreedoid::trivial()]);
        assert!(report.passes());
    }

    #[test]
    fn axioms_hold_on_the_samples() {
        let report = verify_hopf_axioms(&samples::all_megagreedoids());
        assert!(report.passes(), "{report}");
        assert!(report.checks_run >= 6);
    }

    #[test]
    fn corrupted_product_is_detected() {
        let f = samples::greedoid_megagreedoid();
        let g = samples::polymatroid_megagreedoid()
            .with_labels(&["x", "y", "z"])
            .unwrap();
        let good = f.direct_sum(&g).unwrap();
        assert!(check_compatibility(&f, &g, &good).is_ok());

        // corrupt one rank value of the product
        let mut entries: Vec<(Subset, Rational)> =
            good.entries().map(|(s, r)| (s, r.clone())).collect();
        let full = good.ground().full();
        for (s, r) in entries.iter_mut() {
            if *s == full {
                *r += rat(7);
            }
        }
        let corrupted = Megagreedoid::from_parts_unchecked(good.ground().clone(), entries);
        let outcome = check_compatibility(&f, &g, &corrupted);
        assert!(outcome.is_err());
        assert!(outcome.unwrap_err().contains("compatibility fails"));
    }

    #[test]
    fn graph_coproduct_matches_structure_coproduct() {
        let g = samples::rooted_graph();
        let m = samples::rooted_graph_megagreedoid();
        let fp = g.ground().subset_of_labels(["f", "p"]).unwrap();
        let (left, right) = rg_coproduct(&g, fp).unwrap().unwrap();
        let delta = coproduct(&m, fp);
        let ((ml, mr), _) = delta.terms().next().unwrap();
        assert_eq!(&crate::constructions::from_rooted_graph(&left).unwrap(), ml);
        assert_eq!(&crate::constructions::from_rooted_graph(&right).unwrap(), mr);

        // infeasible subsets give the zero marker
        let p = g.ground().subset_of_labels(["p"]).unwrap();
        assert!(rg_coproduct(&g, p).unwrap().is_none());
    }
}
