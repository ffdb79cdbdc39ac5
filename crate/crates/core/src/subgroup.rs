//! Subgroups as explicit element sets.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};

/// Membership bitmap over the elements of one `G_n`, indexed by [`GroupParams::index_of`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: Vec<u64>,
}

impl ElementSet {
    pub fn empty(g: &GroupParams) -> Self {
        let words = (g.group_order() as usize).div_ceil(64);
        Self {
            bits: vec![0; words],
        }
    }

    pub fn contains(&self, g: &GroupParams, x: Element) -> bool {
        let i = g.index_of(x);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns `true` if `x` was not already present.
    pub fn insert(&mut self, g: &GroupParams, x: Element) -> bool {
        let i = g.index_of(x);
        let mask = 1u64 << (i % 64);
        let fresh = self.bits[i / 64] & mask == 0;
        self.bits[i / 64] |= mask;
        fresh
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

/// A subgroup of a fixed `G_n`. Equality is by element set; the generator list is
/// informational.
#[derive(Clone, Debug)]
pub struct Subgroup {
    generators: Vec<Element>,
    elements: Vec<Element>,
    members: ElementSet,
    group_order: u64,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group_order == other.group_order && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn index(&self) -> u64 {
        self.group_order / self.order()
    }

    pub fn contains(&self, g: &GroupParams, x: Element) -> bool {
        self.members.contains(g, x)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn with_generators(mut self, generators: Vec<Element>) -> Self {
        self.generators = generators;
        self
    }

    fn from_set(g: &GroupParams, generators: Vec<Element>, members: ElementSet) -> Self {
        let elements = g.elements().filter(|&x| members.contains(g, x)).collect();
        Self {
            generators,
            elements,
            members,
            group_order: g.group_order(),
        }
    }

    /// Builds a subgroup from an element list that is already known to be closed,
    /// choosing a generating set greedily in ascending element order.
    pub fn from_closed_elements(g: &GroupParams, elements: &[Element]) -> Result<Self> {
        let mut members = ElementSet::empty(g);
        for &x in elements {
            members.insert(g, x);
        }
        let candidate = Self::from_set(g, Vec::new(), members);
        // the greedy span covers every listed element, so it equals the list iff the
        // list is closed
        let generators = greedy_generators(g, &candidate.elements);
        let span = closure(g, &generators);
        if span.members != candidate.members {
            return Err(Error::Structure(
                "element list is not closed under multiplication".into(),
            ));
        }
        Ok(span)
    }

    pub fn whole(g: &GroupParams) -> Self {
        closure(g, &g.generators())
    }

    pub fn trivial(g: &GroupParams) -> Self {
        closure(g, &[])
    }

    /// Normal in the whole group iff conjugation by each of `s`, `t`, `r` preserves it.
    pub fn is_normal(&self, g: &GroupParams) -> bool {
        self.is_normalized_by(g, &g.generators())
    }

    pub fn is_normalized_by(&self, g: &GroupParams, by: &[Element]) -> bool {
        by.iter().all(|&h| {
            self.elements
                .iter()
                .all(|&x| self.contains(g, g.conjugate(x, h)))
        })
    }

    pub fn is_abelian(&self, g: &GroupParams) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }
}

/// Picks elements in ascending order, keeping each one not yet in the span of those
/// already kept.
fn greedy_generators(g: &GroupParams, elements: &[Element]) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut span = closure(g, &[]);
    for &x in elements {
        if !span.contains(g, x) {
            gens.push(x);
            span = closure(g, &gens);
        }
    }
    gens
}

/// The subgroup generated by `gens`.
pub fn closure(g: &GroupParams, gens: &[Element]) -> Subgroup {
    let mut members = ElementSet::empty(g);
    let mut queue = VecDeque::new();
    members.insert(g, g.identity());
    queue.push_back(g.identity());
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if members.insert(g, y) {
                queue.push_back(y);
            }
        }
    }
    Subgroup::from_set(g, gens.to_vec(), members)
}

/// Smallest subgroup containing `gens` and normalized by every element of `by`.
pub fn normal_closure(g: &GroupParams, gens: &[Element], by: &[Element]) -> Subgroup {
    let mut current = gens.to_vec();
    let mut sub = closure(g, &current);
    loop {
        let mut extra = None;
        'search: for &h in by {
            for &x in &current {
                let y = g.conjugate(x, h);
                if !sub.contains(g, y) {
                    extra = Some(y);
                    break 'search;
                }
            }
        }
        match extra {
            Some(y) => {
                current.push(y);
                sub = closure(g, &current);
            }
            None => return sub,
        }
    }
}

/// `[H, H]`, computed as the normal closure in `H` of the commutators of its generators.
pub fn derived_subgroup(g: &GroupParams, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let mut comms = Vec::new();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            let c = g.commutator(x, y);
            if !c.is_identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms, gens)
}

/// `[N, H]` for `N` normalized by `H`.
pub fn commutator_subgroup(g: &GroupParams, n: &Subgroup, h: &Subgroup) -> Subgroup {
    let mut comms = Vec::new();
    for &x in n.generators() {
        for &y in h.generators() {
            let c = g.commutator(x, y);
            if !c.is_identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms, h.generators())
}

/// Frattini subgroup of a 2-group: generated by all squares (which already contain
/// the commutators, since `[x, y] = x^-2 (x y^-1)^2 y^2`).
pub fn frattini_subgroup(g: &GroupParams, h: &Subgroup) -> Subgroup {
    let mut squares: Vec<Element> = h.elements().iter().map(|&x| g.mul(x, x)).collect();
    squares.sort();
    squares.dedup();
    let sub = closure(g, &squares);
    let gens = greedy_generators(g, sub.elements());
    sub.with_generators(gens)
}

/// Cosets `xN` of a subgroup `N` inside `H`, each represented by its least member.
#[derive(Clone, Debug)]
pub struct Quotient {
    parent_generators: Vec<Element>,
    modulus: Subgroup,
    reps: Vec<Element>,
    rep_of: Vec<u32>,
}

impl Quotient {
    /// `H / N`; requires `N <= H` and `N` normal in `H`.
    pub fn new(g: &GroupParams, h: &Subgroup, n: &Subgroup) -> Result<Self> {
        if !n.is_subgroup_of(h) {
            return Err(Error::Structure(
                "modulus is not contained in the subgroup".into(),
            ));
        }
        if !n.is_normalized_by(g, h.generators()) {
            return Err(Error::NotNormal(
                "modulus is not normal in the subgroup".into(),
            ));
        }
        Ok(Self::left_cosets(g, h, n))
    }

    /// Left cosets `xN` of any `N <= H`, least member as representative.
    pub fn left_cosets(g: &GroupParams, h: &Subgroup, n: &Subgroup) -> Self {
        let mut rep_of = vec![u32::MAX; g.group_order() as usize];
        let mut reps = Vec::new();
        for &x in h.elements() {
            if rep_of[g.index_of(x)] != u32::MAX {
                continue;
            }
            // ascending traversal, so x is the least member of its coset
            let slot = g.index_of(x) as u32;
            reps.push(x);
            for &m in n.elements() {
                rep_of[g.index_of(g.mul(x, m))] = slot;
            }
        }
        Self {
            parent_generators: h.generators().to_vec(),
            modulus: n.clone(),
            reps,
            rep_of,
        }
    }

    pub fn modulus(&self) -> &Subgroup {
        &self.modulus
    }

    pub fn representatives(&self) -> &[Element] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Least member of the coset containing `x`; `None` if `x` is outside `H`.
    pub fn rep(&self, g: &GroupParams, x: Element) -> Option<Element> {
        match self.rep_of[g.index_of(x)] {
            u32::MAX => None,
            slot => Some(g.element_at(slot as usize)),
        }
    }

    pub fn mul(&self, g: &GroupParams, x: Element, y: Element) -> Option<Element> {
        self.rep(g, g.mul(x, y))
    }

    pub fn is_identity(&self, g: &GroupParams, x: Element) -> bool {
        self.modulus.contains(g, x)
    }

    pub fn pow(&self, g: &GroupParams, x: Element, k: i64) -> Option<Element> {
        self.rep(g, g.pow(x, k))
    }

    /// `H/N` is abelian iff the commutators of generators of `H` lie in `N`.
    pub fn is_abelian(&self, g: &GroupParams) -> bool {
        let gens = &self.parent_generators;
        gens.iter().all(|&x| {
            gens.iter()
                .all(|&y| self.modulus.contains(g, g.commutator(x, y)))
        })
    }
}
