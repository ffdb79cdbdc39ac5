//! Subgroups of index 2 and 4.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};
use crate::subgroup::{
    closure, derived_subgroup, frattini_subgroup, ElementSet, Quotient, Subgroup,
};

/// `H_{i,j}`: the `i`-th subgroup of index `j` containing `G_n'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupLabel {
    pub i: u8,
    pub index: u8,
}

impl SubgroupLabel {
    pub fn new(i: u8, index: u8) -> Result<Self> {
        if !(1..=7).contains(&i) || !(index == 2 || index == 4) {
            return Err(Error::UnknownLabel(format!("H{i}_{index}")));
        }
        Ok(Self { i, index })
    }

    pub fn all() -> impl Iterator<Item = SubgroupLabel> {
        [2u8, 4]
            .into_iter()
            .flat_map(|index| (1..=7).map(move |i| SubgroupLabel { i, index }))
    }

    /// `H_{1,2}` style rendering.
    pub fn to_tex(self) -> String {
        format!("H_{{{},{}}}", self.i, self.index)
    }

    /// Member vectors of the subspace of `G/G' = F_2^3` whose preimage is this
    /// subgroup (bit 0 = s, bit 1 = t, bit 2 = r).
    pub fn subspace(self) -> Vec<u8> {
        match self.index {
            2 => {
                let f = HYPERPLANE_FUNCTIONALS[self.i as usize - 1];
                (0u8..8)
                    .filter(|&x| (x & f).count_ones().is_multiple_of(2))
                    .collect()
            }
            _ => vec![0, LINES[self.i as usize - 1]],
        }
    }
}

// H_{i,2} is the kernel of the functional; with bit 0 = s, bit 1 = t, bit 2 = r these are
// r, t, s, s+t, s+r, t+r, s+t+r.
const HYPERPLANE_FUNCTIONALS: [u8; 7] = [0b100, 0b010, 0b001, 0b011, 0b101, 0b110, 0b111];
// H_{i,4} is the preimage of the line through s, t, r, st, sr, tr, str.
const LINES: [u8; 7] = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

impl fmt::Display for SubgroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}_{}", self.i, self.index)
    }
}

impl FromStr for SubgroupLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownLabel(s.to_string());
        let rest = s
            .strip_prefix('H')
            .or_else(|| s.strip_prefix('h'))
            .ok_or_else(bad)?;
        let (i, j) = rest.split_once('_').ok_or_else(bad)?;
        let i: u8 = i.parse().map_err(|_| bad())?;
        let j: u8 = j.parse().map_err(|_| bad())?;
        Self::new(i, j).map_err(|_| bad())
    }
}

impl Serialize for SubgroupLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SubgroupLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Preimage in `G_n` of a subspace of `G/G'`, given by its member vectors.
pub fn preimage_of_subspace(g: &GroupParams, members: &[u8]) -> Subgroup {
    let lifts: Vec<Element> = members
        .iter()
        .filter(|&&v| v != 0)
        .map(|&v| lift_parity(g, v))
        .collect();
    let derived_gens = [g.pow(g.sigma(), 2), g.pow(g.tau(), 2)];
    let elements: Vec<Element> = g
        .elements()
        .filter(|x| members.contains(&x.parity_bits()))
        .collect();
    let mut set = ElementSet::empty(g);
    for &x in &elements {
        set.insert(g, x);
    }
    let gens: Vec<Element> = lifts.into_iter().chain(derived_gens).collect();
    let sub = closure(g, &gens);
    debug_assert!(sub.members() == &set);
    sub
}

/// `s^e0 t^e1 r^e2` for the bits `e0, e1, e2` of `v`.
pub fn lift_parity(g: &GroupParams, v: u8) -> Element {
    g.normalize(
        i64::from(v & 1),
        i64::from(v >> 1 & 1),
        i64::from(v >> 2 & 1),
    )
}

pub fn labeled_subgroup(g: &GroupParams, label: SubgroupLabel) -> Subgroup {
    preimage_of_subspace(g, &label.subspace())
}

/// The seven subgroups of index 2, labeled `H1_2 .. H7_2`.
pub fn maximal_subgroups(g: &GroupParams) -> Vec<(SubgroupLabel, Subgroup)> {
    (1..=7)
        .map(|i| {
            let label = SubgroupLabel { i, index: 2 };
            (label, labeled_subgroup(g, label))
        })
        .collect()
}

/// The seven subgroups of index 4 containing `G_n'`, labeled `H1_4 .. H7_4`.
pub fn index4_subgroups_above_derived(g: &GroupParams) -> Vec<(SubgroupLabel, Subgroup)> {
    (1..=7)
        .map(|i| {
            let label = SubgroupLabel { i, index: 4 };
            (label, labeled_subgroup(g, label))
        })
        .collect()
}

/// All subgroups of index 2 in `h`, read off from the hyperplanes of `h / Phi(h)`.
pub fn index2_subgroups(g: &GroupParams, h: &Subgroup) -> Vec<Subgroup> {
    let phi = frattini_subgroup(g, h);
    let quotient = Quotient::left_cosets(g, h, &phi);

    // basis of the elementary abelian quotient
    let mut basis: Vec<Element> = Vec::new();
    let mut span = phi.clone();
    for &x in quotient.representatives() {
        if !span.contains(g, x) {
            basis.push(x);
            let gens: Vec<Element> = phi
                .generators()
                .iter()
                .copied()
                .chain(basis.iter().copied())
                .collect();
            span = closure(g, &gens);
        }
    }
    let rank = basis.len();
    debug_assert_eq!(1usize << rank, quotient.len());

    // coordinates of each coset representative
    let mut coords = std::collections::HashMap::new();
    for mask in 0u32..(1 << rank) {
        let x = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .fold(g.identity(), |acc, (_, &b)| g.mul(acc, b));
        coords.insert(quotient.rep(g, x).expect("product stays inside h"), mask);
    }

    (1u32..(1 << rank))
        .map(|functional| {
            let members: Vec<Element> = h
                .elements()
                .iter()
                .copied()
                .filter(|&x| {
                    let c = coords[&quotient.rep(g, x).unwrap()];
                    (c & functional).count_ones() % 2 == 0
                })
                .collect();
            Subgroup::from_closed_elements(g, &members).expect("kernel of a functional")
        })
        .collect()
}

/// Index-2 or index-4 subgroups of `G_n`, split by whether they contain `G_n'`.
#[derive(Clone, Debug)]
pub struct SubgroupCensus {
    pub index: u64,
    pub containing_derived: Vec<Subgroup>,
    pub not_containing_derived: Vec<Subgroup>,
}

impl SubgroupCensus {
    pub fn total(&self) -> usize {
        self.containing_derived.len() + self.not_containing_derived.len()
    }
}

pub fn all_subgroups_of_index(g: &GroupParams, k: u64) -> Result<SubgroupCensus> {
    let whole = Subgroup::whole(g);
    let found = match k {
        2 => index2_subgroups(g, &whole),
        4 => {
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for m in index2_subgroups(g, &whole) {
                for sub in index2_subgroups(g, &m) {
                    if seen.insert(sub.members().clone()) {
                        out.push(sub);
                    }
                }
            }
            out
        }
        _ => return Err(Error::Parameter(format!("index must be 2 or 4, got {k}"))),
    };
    let derived = derived_subgroup(g, &whole);
    let (containing_derived, not_containing_derived) =
        found.into_iter().partition(|s| derived.is_subgroup_of(s));
    Ok(SubgroupCensus {
        index: k,
        containing_derived,
        not_containing_derived,
    })
}
