//! Invariant types of finite abelian 2-groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::subgroup::{derived_subgroup, Quotient, Subgroup};

/// `(2^e_1, ..., 2^e_r)` stored as the ascending exponent list `[e_1, ..., e_r]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianType(Vec<u32>);

impl AbelianType {
    pub fn new(mut exps: Vec<u32>) -> Result<Self> {
        if exps.contains(&0) {
            return Err(Error::Parameter(
                "abelian type exponents must be positive".into(),
            ));
        }
        exps.sort_unstable();
        Ok(Self(exps))
    }

    /// Type from cyclic factor orders, e.g. `[2, 4]` for `(2, 4)`.
    pub fn from_orders(orders: &[u64]) -> Result<Self> {
        let exps = orders
            .iter()
            .map(|&o| {
                if o >= 2 && o.is_power_of_two() {
                    Ok(o.trailing_zeros())
                } else {
                    Err(Error::Parameter(format!(
                        "{o} is not a nontrivial power of two"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn log2_order(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Recovers the type from `log2 c_k`, where `c_k` counts elements killed by `2^k`,
    /// for `k = 0, 1, ...` until the counts stop growing.
    pub fn from_kernel_counts(log2_counts: &[u32]) -> Self {
        // d_k = log2 c_k - log2 c_(k-1) = #{ i : e_i >= k }
        let d: Vec<u32> = log2_counts.windows(2).map(|w| w[1] - w[0]).collect();
        let mut exps = Vec::new();
        for (k, &dk) in d.iter().enumerate() {
            let next = d.get(k + 1).copied().unwrap_or(0);
            for _ in 0..dk.saturating_sub(next) {
                exps.push(k as u32 + 1);
            }
        }
        Self(exps)
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if self.0.is_empty() {
            f.write_str("1")?;
        }
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", 1u64 << e)?;
        }
        f.write_str(")")
    }
}

fn exact_log2(count: u64) -> Result<u32> {
    if count.is_power_of_two() {
        Ok(count.trailing_zeros())
    } else {
        Err(Error::Structure(format!(
            "{count} elements is not a power of two"
        )))
    }
}

fn type_from_counter(log2_order: u32, mut count: impl FnMut(u32) -> u64) -> Result<AbelianType> {
    let mut logs = vec![0];
    let mut k = 1;
    while *logs.last().unwrap() < log2_order {
        logs.push(exact_log2(count(k))?);
        if logs[k as usize] < logs[k as usize - 1] {
            return Err(Error::Structure("element counts are not monotone".into()));
        }
        k += 1;
    }
    Ok(AbelianType::from_kernel_counts(&logs))
}

/// Type of an abelian subgroup; non-abelian input is rejected.
pub fn abelian_type(g: &GroupParams, a: &Subgroup) -> Result<AbelianType> {
    if !a.is_abelian(g) {
        return Err(Error::Structure("subgroup is not abelian".into()));
    }
    let log2_order = exact_log2(a.order())?;
    type_from_counter(log2_order, |k| {
        a.elements()
            .iter()
            .filter(|&&x| g.pow(x, 1 << k).is_identity())
            .count() as u64
    })
}

/// Type of an abelian coset quotient `H/N`.
pub fn quotient_abelian_type(g: &GroupParams, q: &Quotient) -> Result<AbelianType> {
    if !q.is_abelian(g) {
        return Err(Error::Structure("quotient is not abelian".into()));
    }
    let log2_order = exact_log2(q.len() as u64)?;
    type_from_counter(log2_order, |k| {
        q.representatives()
            .iter()
            .filter(|&&x| q.is_identity(g, g.pow(x, 1 << k)))
            .count() as u64
    })
}

/// Type of `H/H'`.
pub fn abelianization(g: &GroupParams, h: &Subgroup) -> AbelianType {
    let derived = derived_subgroup(g, h);
    let q = Quotient::left_cosets(g, h, &derived);
    quotient_abelian_type(g, &q).expect("H/H' is abelian of 2-power order")
}
