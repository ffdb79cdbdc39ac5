//! The transfer `V: G/G' -> H/H'` into a subgroup `H` of finite index.
//!
//! Three independent routes are provided: the orbit formula
//! `V(gG') = prod_i x_i^-1 g^f x_i . H'` with `f = [<g>H : H]` and `x_i` running over
//! `G / <g>H` (normal `H` only), the classical transversal product, and the closed
//! forms for index 2 and for normal index 4.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};
use crate::kernel::{AbelianizationCoord, KernelSubspace};
use crate::subgroup::{closure, derived_subgroup, Quotient, Subgroup};

/// A coset `h H'` inside `H`, identified by its least member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    rep: Element,
}

impl Coset {
    pub fn rep(self) -> Element {
        self.rep
    }

    pub fn is_trivial(self) -> bool {
        self.rep.is_identity()
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            f.write_str("H'")
        } else {
            write!(f, "{} H'", self.rep)
        }
    }
}

/// Which closed form applies to a subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormCase {
    /// Index 2 with `G/H = {1, zH}`.
    IndexTwo { z: Element },
    /// Normal of index 4 with `G/H` cyclic, generated by `zH`.
    Cyclic { z: Element },
    /// Normal of index 4 with `G/H = {1, z1 H, z2 H, z1 z2 H}`.
    Klein { z1: Element, z2: Element },
}

/// Precomputed data for transfers into one subgroup.
#[derive(Clone, Debug)]
pub struct Transfer<'g> {
    g: &'g GroupParams,
    h: Subgroup,
    derived: Subgroup,
    abelianized: Quotient,
    cosets: Quotient,
    normal: bool,
}

impl<'g> Transfer<'g> {
    pub fn new(g: &'g GroupParams, h: &Subgroup) -> Self {
        let derived = derived_subgroup(g, h);
        let abelianized = Quotient::left_cosets(g, h, &derived);
        let cosets = Quotient::left_cosets(g, &Subgroup::whole(g), h);
        Self {
            g,
            normal: h.is_normal(g),
            h: h.clone(),
            derived,
            abelianized,
            cosets,
        }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.h
    }

    pub fn derived(&self) -> &Subgroup {
        &self.derived
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// Least member of each left coset `xH`, in ascending order; the identity comes first.
    pub fn transversal(&self) -> &[Element] {
        self.cosets.representatives()
    }

    /// The coset of `H'` containing `x`, which must lie in `H`.
    pub fn coset(&self, x: Element) -> Result<Coset> {
        self.abelianized
            .rep(self.g, x)
            .map(|rep| Coset { rep })
            .ok_or_else(|| Error::Structure(format!("{x} is not in the subgroup")))
    }

    fn coset_of_product(&self, factors: impl IntoIterator<Item = Element>) -> Result<Coset> {
        let g = self.g;
        let product = factors
            .into_iter()
            .fold(g.identity(), |acc, y| g.mul(acc, y));
        self.coset(product)
    }

    fn require_normal(&self) -> Result<()> {
        if self.normal {
            Ok(())
        } else {
            Err(Error::NotNormal(format!(
                "subgroup of index {} is not normal in G",
                self.h.index()
            )))
        }
    }

    /// Orbit formula with least coset representatives of `G / <x>H`.
    pub fn orbit_form(&self, x: Element) -> Result<Coset> {
        self.require_normal()?;
        let g = self.g;
        let cosets = self.orbit_cosets(x);
        let f = (cosets.modulus().order() / self.h.order()) as i64;
        let gf = g.pow(x, f);
        self.coset_of_product(
            cosets
                .representatives()
                .iter()
                .map(|&xi| g.conjugate(gf, xi)),
        )
    }

    /// `<x>H` and its left cosets.
    pub fn orbit_cosets(&self, x: Element) -> Quotient {
        let g = self.g;
        let mut gens = self.h.generators().to_vec();
        gens.push(x);
        let k = closure(g, &gens);
        Quotient::left_cosets(g, &Subgroup::whole(g), &k)
    }

    /// Orbit formula with caller-chosen representatives, one per coset of `<x>H`.
    pub fn orbit_form_with_representatives(&self, x: Element, reps: &[Element]) -> Result<Coset> {
        self.require_normal()?;
        let g = self.g;
        let cosets = self.orbit_cosets(x);
        let f = (cosets.modulus().order() / self.h.order()) as i64;
        let mut seen: Vec<Element> = reps
            .iter()
            .map(|&r| cosets.rep(g, r).expect("whole group"))
            .collect();
        seen.sort();
        seen.dedup();
        if seen.len() != reps.len() || seen.len() != cosets.len() {
            return Err(Error::Structure(
                "not a set of coset representatives".into(),
            ));
        }
        let gf = g.pow(x, f);
        self.coset_of_product(reps.iter().map(|&xi| g.conjugate(gf, xi)))
    }

    /// Classical transfer through the least-member transversal.
    pub fn via_transversal(&self, x: Element) -> Coset {
        let reps = self.transversal().to_vec();
        self.with_transversal(x, &reps)
            .expect("least members form a transversal")
    }

    /// Classical transfer: for `x t_i = t_(pi i) h_i`, the product of the `h_i` mod `H'`.
    pub fn with_transversal(&self, x: Element, transversal: &[Element]) -> Result<Coset> {
        let g = self.g;
        let slot = |y: Element| -> Result<usize> {
            let hits: Vec<usize> = transversal
                .iter()
                .enumerate()
                .filter(|(_, &t)| self.h.contains(g, g.mul(g.inv(t), y)))
                .map(|(i, _)| i)
                .collect();
            match hits.as_slice() {
                [i] => Ok(*i),
                _ => Err(Error::Structure("not a left transversal".into())),
            }
        };
        if transversal.len() as u64 != self.h.index() {
            return Err(Error::Structure("not a left transversal".into()));
        }
        let mut factors = Vec::with_capacity(transversal.len());
        for &t in transversal {
            let y = g.mul(x, t);
            let target = transversal[slot(y)?];
            factors.push(g.mul(g.inv(target), y));
        }
        self.coset_of_product(factors)
    }

    /// Detects which closed form applies from the structure of `G/H`.
    pub fn closed_form_case(&self) -> Result<ClosedFormCase> {
        let g = self.g;
        let reps = self.transversal();
        match self.h.index() {
            2 => Ok(ClosedFormCase::IndexTwo { z: reps[1] }),
            4 => {
                self.require_normal()?;
                let generator = reps[1..]
                    .iter()
                    .copied()
                    .find(|&z| !self.h.contains(g, g.mul(z, z)));
                Ok(match generator {
                    Some(z) => ClosedFormCase::Cyclic { z },
                    None => ClosedFormCase::Klein {
                        z1: reps[1],
                        z2: reps[2],
                    },
                })
            }
            other => Err(Error::Inapplicable(format!(
                "closed forms cover index 2 and 4, not {other}"
            ))),
        }
    }

    /// The closed-form expression for the detected case, evaluated as written.
    pub fn closed_form(&self, x: Element) -> Result<Coset> {
        let g = self.g;
        let inv = |y| g.inv(y);
        let in_h = |y| self.h.contains(g, y);
        let same_coset = |y: Element, z: Element| in_h(g.mul(inv(z), y));
        match self.closed_form_case()? {
            ClosedFormCase::IndexTwo { z } => {
                if in_h(x) {
                    self.coset_of_product([x, inv(z), x, z])
                } else {
                    self.coset(g.pow(x, 2))
                }
            }
            ClosedFormCase::Cyclic { z } => {
                if in_h(x) {
                    let zi = inv(z);
                    self.coset_of_product([x, zi, x, zi, x, zi, x, g.pow(z, 3)])
                } else if same_coset(x, z) {
                    self.coset(g.pow(x, 4))
                } else {
                    let x2 = g.pow(x, 2);
                    self.coset_of_product([x2, inv(z), x2, z])
                }
            }
            ClosedFormCase::Klein { z1, z2 } => {
                if in_h(x) {
                    self.coset_of_product([x, inv(z1), x, z1, inv(z2), x, inv(z1), x, z1, z2])
                } else {
                    let zs = [z1, z2, g.mul(z1, z2)];
                    let j = zs
                        .iter()
                        .position(|&z| same_coset(x, z))
                        .expect("x lies in one of the three nontrivial cosets");
                    let i = (0..3).find(|&i| i != j).unwrap();
                    let x2 = g.pow(x, 2);
                    self.coset_of_product([x2, inv(zs[i]), x2, zs[i]])
                }
            }
        }
    }

    /// Images of the eight classes of `G/G'`, via the orbit formula.
    pub fn table(&self) -> Result<TransferTable> {
        let images = AbelianizationCoord::all()
            .map(|v| Ok((v, self.orbit_form(v.lift(self.g))?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(TransferTable { images })
    }

    /// Classes of `G/G'` mapped into `H'`, with a reduced echelon basis.
    pub fn kernel(&self) -> Result<KernelSubspace> {
        let table = self.table()?;
        let members: Vec<_> = table
            .images
            .iter()
            .filter(|(_, c)| c.is_trivial())
            .map(|&(v, _)| v)
            .collect();
        KernelSubspace::from_members(&members)
    }

    /// Product of two cosets of `H'`.
    pub fn coset_mul(&self, a: Coset, b: Coset) -> Coset {
        self.coset(self.g.mul(a.rep, b.rep)).expect("closed in H")
    }
}

/// `V(v)` for each `v` in `G/G'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferTable {
    pub images: Vec<(AbelianizationCoord, Coset)>,
}

impl TransferTable {
    pub fn image(&self, v: AbelianizationCoord) -> Coset {
        self.images[usize::from(v.bits())].1
    }

    /// `V(u + v) = V(u) V(v)` for all pairs.
    pub fn is_homomorphism(&self, transfer: &Transfer<'_>) -> bool {
        AbelianizationCoord::all().all(|u| {
            AbelianizationCoord::all()
                .all(|v| self.image(u + v) == transfer.coset_mul(self.image(u), self.image(v)))
        })
    }
}

pub fn coset_transversal(g: &GroupParams, h: &Subgroup) -> Vec<Element> {
    Quotient::left_cosets(g, &Subgroup::whole(g), h)
        .representatives()
        .to_vec()
}

pub fn transfer_orbit_form(g: &GroupParams, h: &Subgroup, x: Element) -> Result<Coset> {
    Transfer::new(g, h).orbit_form(x)
}

pub fn transfer_transversal(g: &GroupParams, h: &Subgroup, x: Element) -> Coset {
    Transfer::new(g, h).via_transversal(x)
}

pub fn transfer_closed_form(g: &GroupParams, h: &Subgroup, x: Element) -> Result<Coset> {
    Transfer::new(g, h).closed_form(x)
}

pub fn transfer_kernel(g: &GroupParams, h: &Subgroup) -> Result<KernelSubspace> {
    Transfer::new(g, h).kernel()
}
