//! The relative order complex of the feasible family: faces are chains of
//! proper nonempty feasible sets, and the distinguished cocomplex `Ψ`
//! consists of the chains whose padded consecutive intervals are all
//! boolean with modular local rank. Facets of `Ψ` biject with the feasible
//! permutations; emitting them first-fit along the greedy order yields a
//! shelling whose restriction faces define the descent sets.

use crate::error::Error;
use crate::ground::Subset;
use crate::megagreedoid::Megagreedoid;
use crate::qsym::{Basis, QsymElement};
use crate::rational::rat;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// A face of the order complex: a strictly increasing chain of proper
/// nonempty feasible sets. The empty chain is a valid face.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChainFace {
    sets: Vec<Subset>,
}

impl ChainFace {
    pub fn new(sets: Vec<Subset>) -> Result<Self, Error> {
        for w in sets.windows(2) {
            if !(w[0].is_subset_of(w[1]) && w[0] != w[1]) {
                return Err(Error::BadDocument {
                    reason: "chain sets must strictly increase".into(),
                });
            }
        }
        Ok(ChainFace { sets })
    }

    pub fn empty() -> Self {
        ChainFace { sets: Vec::new() }
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Cardinalities of the member sets as a 1-based position mask; this is
    /// the balanced coloring of the face.
    pub fn cardinality_mask(&self) -> u16 {
        let mut mask = 0u16;
        for s in &self.sets {
            mask |= 1 << (s.len() - 1);
        }
        mask
    }

    pub fn is_subchain_of(&self, other: &ChainFace) -> bool {
        self.sets.iter().all(|s| other.sets.contains(s))
    }

    pub fn render(&self, m: &Megagreedoid) -> String {
        let parts: Vec<String> = self
            .sets
            .iter()
            .map(|&s| m.ground().format_subset(s))
            .collect();
        format!("({})", parts.join(" < "))
    }
}

/// Membership in `Ψ`: pad the chain with the empty and full sets and
/// require every consecutive interval to be boolean with modular local
/// rank. Chains containing an infeasible, empty, or full member are not
/// faces of the proper part at all, hence not in `Ψ`.
pub fn in_psi(m: &Megagreedoid, c: &ChainFace) -> bool {
    let full = m.ground().full();
    for &s in c.sets() {
        if s.is_empty() || s == full || !m.is_feasible(s) {
            return false;
        }
    }
    let mut padded = vec![Subset::EMPTY];
    padded.extend_from_slice(c.sets());
    if *padded.last().unwrap() != full {
        padded.push(full);
    }
    for w in padded.windows(2) {
        match m.is_boolean_interval(w[0], w[1]) {
            Ok(true) => {}
            _ => return false,
        }
        match m.is_modular_on_interval(w[0], w[1]) {
            Ok(true) => {}
            _ => return false,
        }
    }
    true
}

/// The facet chain of a feasible permutation: its proper prefix sets.
pub fn facet_of_permutation(m: &Megagreedoid, perm: &[usize]) -> Result<ChainFace, Error> {
    let prefixes = m.prefix_chain(perm)?;
    let n = perm.len();
    let sets = if n <= 1 {
        Vec::new()
    } else {
        prefixes[..n - 1].to_vec()
    };
    ChainFace::new(sets)
}

/// Facets of `Ψ` in the greedy order, one per feasible permutation.
pub fn facets(m: &Megagreedoid) -> Vec<ChainFace> {
    m.feasible_permutations()
        .iter()
        .map(|p| facet_of_permutation(m, p).expect("feasible permutation"))
        .collect()
}

/// Recover the permutation underlying a facet chain.
fn facet_permutation(m: &Megagreedoid, c: &ChainFace) -> Result<Vec<usize>, Error> {
    let n = m.size();
    if n == 0 {
        return if c.is_empty() {
            Ok(Vec::new())
        } else {
            Err(Error::NotFacetChain)
        };
    }
    if c.len() + 1 != n {
        return Err(Error::NotFacetChain);
    }
    let mut perm = Vec::with_capacity(n);
    let mut prev = Subset::EMPTY;
    for &s in c.sets().iter().chain(std::iter::once(&m.ground().full())) {
        let step = s.difference(prev);
        if step.len() != 1 {
            return Err(Error::NotFacetChain);
        }
        perm.push(step.iter().next().unwrap());
        prev = s;
    }
    Ok(perm)
}

/// Greedy comparison of two facet chains: at the first differing prefix,
/// smaller local rank wins, with ties broken by the ground order.
pub fn greedy_compare(m: &Megagreedoid, c1: &ChainFace, c2: &ChainFace) -> Result<Ordering, Error> {
    let p1 = facet_permutation(m, c1)?;
    let p2 = facet_permutation(m, c2)?;
    Ok(m.greedy_compare_permutations(&p1, &p2))
}

/// One step of a verified shelling: the facet, its permutation, and the
/// unique minimal new face.
#[derive(Clone, Debug)]
pub struct ShellingStep {
    pub permutation: Vec<usize>,
    pub facet: ChainFace,
    pub restriction: ChainFace,
    /// Number of faces of this facet first covered at this step.
    pub new_faces: usize,
}

#[derive(Clone, Debug)]
pub struct ShellingCertificate {
    pub degree: usize,
    pub steps: Vec<ShellingStep>,
}

/// Build and verify a shelling: facets are considered in the greedy order
/// and emitted first-fit — at each step the earliest not-yet-emitted facet
/// whose new `Ψ`-faces (faces not covered by previously emitted facets)
/// have a unique minimal element is emitted, and that minimal face is
/// recorded as its restriction face.
///
/// The plain greedy order emits without any skips on structures whose rank
/// ties are benign (in particular on every structure in
/// [`crate::samples`]), but rank ties can force either tie orientation
/// depending on global structure, so a fixed comparator alone is not always
/// a shelling order; the first-fit pass repairs exactly those cases. An
/// error is returned only if no remaining facet has a unique minimal new
/// face, which would disprove shellability of the relative complex.
pub fn verify_shelling(m: &Megagreedoid) -> Result<ShellingCertificate, Error> {
    let perms = m.feasible_permutations();
    let mut pending: Vec<(Vec<usize>, ChainFace, Vec<ChainFace>)> = Vec::with_capacity(perms.len());
    for perm in perms {
        let facet = facet_of_permutation(m, &perm)?;
        // Faces of the facet = subchains = subsets of its member list.
        let psi_faces: Vec<ChainFace> = Subset::full(facet.len())
            .submasks()
            .map(|pick| {
                ChainFace::new(pick.iter().map(|i| facet.sets()[i]).collect::<Vec<_>>())
                    .expect("subchain of a chain")
            })
            .filter(|face| in_psi(m, face))
            .collect();
        pending.push((perm, facet, psi_faces));
    }
    let mut seen: BTreeSet<ChainFace> = BTreeSet::new();
    let mut steps = Vec::with_capacity(pending.len());
    while !pending.is_empty() {
        let mut emitted = None;
        for (pos, (_, _, psi_faces)) in pending.iter().enumerate() {
            let new_faces: Vec<&ChainFace> =
                psi_faces.iter().filter(|f| !seen.contains(*f)).collect();
            let minimal: Vec<&ChainFace> = new_faces
                .iter()
                .copied()
                .filter(|f| !new_faces.iter().any(|g| *g != *f && g.is_subchain_of(f)))
                .collect();
            if minimal.len() == 1 {
                emitted = Some((pos, minimal[0].clone(), new_faces.len()));
                break;
            }
        }
        let (pos, restriction, count) = match emitted {
            Some(found) => found,
            None => {
                let (_, facet, psi_faces) = &pending[0];
                let new_faces: Vec<&ChainFace> =
                    psi_faces.iter().filter(|f| !seen.contains(*f)).collect();
                let minimal_count = new_faces
                    .iter()
                    .copied()
                    .filter(|f| !new_faces.iter().any(|g| *g != *f && g.is_subchain_of(f)))
                    .count();
                return Err(Error::ShellingFailure {
                    facet: facet.render(m),
                    count: minimal_count,
                });
            }
        };
        let (permutation, facet, psi_faces) = pending.remove(pos);
        for face in psi_faces {
            seen.insert(face);
        }
        steps.push(ShellingStep {
            permutation,
            facet,
            restriction,
            new_faces: count,
        });
    }
    Ok(ShellingCertificate {
        degree: m.size(),
        steps,
    })
}

/// Face enumerator of `(Σ, Γ)` in the monomial basis: every chain in `Ψ`
/// contributes `M` at its cardinality set. Enumerates all chains of proper
/// nonempty feasible sets directly; an independent route to the flag
/// formula.
pub fn face_qsym(m: &Megagreedoid) -> QsymElement {
    let full = m.ground().full();
    let proper: Vec<Subset> = m
        .family()
        .iter()
        .copied()
        .filter(|&s| !s.is_empty() && s != full)
        .collect();
    let mut out = QsymElement::zero(Basis::M);
    let mut chain: Vec<Subset> = Vec::new();
    enumerate_chains(m, &proper, 0, &mut chain, &mut out);
    out
}

fn enumerate_chains(
    m: &Megagreedoid,
    proper: &[Subset],
    from: usize,
    chain: &mut Vec<Subset>,
    out: &mut QsymElement,
) {
    let face = ChainFace {
        sets: chain.clone(),
    };
    if in_psi(m, &face) {
        out.add_term(m.size(), face.cardinality_mask(), rat(1));
    }
    for (offset, &next) in proper[from..].iter().enumerate() {
        if chain
            .last()
            .is_none_or(|&last| last.is_subset_of(next) && last != next)
        {
            chain.push(next);
            enumerate_chains(m, proper, from + offset + 1, chain, out);
            chain.pop();
        }
    }
}

/// The shelling expansion in the fundamental basis: one `F` term per facet
/// at the coloring of its restriction face.
pub fn shelling_qsym(cert: &ShellingCertificate) -> QsymElement {
    let mut out = QsymElement::zero(Basis::F);
    for step in &cert.steps {
        out.add_term(cert.degree, step.restriction.cardinality_mask(), rat(1));
    }
    out
}
