//! Coordinates on `G/G' = F_2^3` and subspaces of it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};

/// `(e_s, e_t, e_r)` in `F_2^3`, packed as bits 0, 1, 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianizationCoord(u8);

impl AbelianizationCoord {
    pub const ZERO: Self = Self(0);

    pub const fn new(s: u8, t: u8, r: u8) -> Self {
        Self((s & 1) | (t & 1) << 1 | (r & 1) << 2)
    }

    pub fn from_bits(bits: u8) -> Self {
        Self(bits & 0b111)
    }

    pub fn of(x: Element) -> Self {
        Self(x.parity_bits())
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn components(self) -> [u8; 3] {
        [self.0 & 1, self.0 >> 1 & 1, self.0 >> 2 & 1]
    }

    pub fn all() -> impl Iterator<Item = Self> {
        (0u8..8).map(Self)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `s^e_s t^e_t r^e_r`.
    pub fn lift(self, g: &GroupParams) -> Element {
        let [s, t, r] = self.components();
        g.normalize(s.into(), t.into(), r.into())
    }

    /// Leftmost nonzero coordinate, in the order s, t, r.
    fn pivot(self) -> Option<u8> {
        (0..3).find(|k| self.0 >> k & 1 == 1)
    }
}

impl std::ops::Add for AbelianizationCoord {
    type Output = Self;

    // addition in F_2^3 is XOR
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl fmt::Display for AbelianizationCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [s, t, r] = self.components();
        write!(f, "({s},{t},{r})")
    }
}

impl Serialize for AbelianizationCoord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.components().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AbelianizationCoord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [s, t, r] = <[u8; 3]>::deserialize(d)?;
        if s > 1 || t > 1 || r > 1 {
            return Err(serde::de::Error::custom("coordinates must be 0 or 1"));
        }
        Ok(Self::new(s, t, r))
    }
}

/// A subspace of `F_2^3`, kept with a basis and its full member list.
///
/// Equality compares members only.
#[derive(Clone, Debug, Eq)]
pub struct KernelSubspace {
    basis: Vec<AbelianizationCoord>,
    members: Vec<AbelianizationCoord>,
}

impl PartialEq for KernelSubspace {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl KernelSubspace {
    /// Span of `gens`; the basis keeps the given vectors in order, dropping dependent ones.
    pub fn span(gens: &[AbelianizationCoord]) -> Self {
        let mut basis = Vec::new();
        let mut members = vec![AbelianizationCoord::ZERO];
        for &v in gens {
            if members.contains(&v) {
                continue;
            }
            basis.push(v);
            let shifted: Vec<_> = members.iter().map(|&m| m + v).collect();
            members.extend(shifted);
        }
        members.sort();
        Self { basis, members }
    }

    /// Validates that `members` is closed under addition and contains zero, then
    /// attaches the reduced echelon basis.
    pub fn from_members(members: &[AbelianizationCoord]) -> Result<Self> {
        let mut sorted = members.to_vec();
        sorted.sort();
        sorted.dedup();
        if !sorted.contains(&AbelianizationCoord::ZERO) {
            return Err(Error::Structure("kernel does not contain zero".into()));
        }
        for &u in &sorted {
            for &v in &sorted {
                if sorted.binary_search(&(u + v)).is_err() {
                    return Err(Error::Structure(format!("kernel not closed: {u} + {v}")));
                }
            }
        }
        Ok(Self::span(&sorted).reduced())
    }

    pub fn full() -> Self {
        Self::span(&[
            AbelianizationCoord::new(1, 0, 0),
            AbelianizationCoord::new(0, 1, 0),
            AbelianizationCoord::new(0, 0, 1),
        ])
    }

    pub fn zero() -> Self {
        Self::span(&[])
    }

    pub fn basis(&self) -> &[AbelianizationCoord] {
        &self.basis
    }

    pub fn members(&self) -> &[AbelianizationCoord] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: AbelianizationCoord) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == 8
    }

    /// Same subspace with its reduced row-echelon basis (pivot columns s, t, r).
    pub fn reduced(&self) -> Self {
        let mut rows: Vec<AbelianizationCoord> = self.basis.clone();
        let mut out: Vec<AbelianizationCoord> = Vec::new();
        for col in 0..3u8 {
            // remaining rows have no bits left of `col`
            let Some(pos) = rows.iter().position(|r| r.pivot() == Some(col)) else {
                continue;
            };
            let pivot_row = rows.remove(pos);
            for r in rows.iter_mut().chain(out.iter_mut()) {
                if r.0 >> col & 1 == 1 {
                    *r = *r + pivot_row;
                }
            }
            out.push(pivot_row);
        }
        out.sort_by_key(|r| r.pivot());
        Self {
            basis: out,
            members: self.members.clone(),
        }
    }
}

impl fmt::Display for KernelSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("span{")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}
