//! Exact computations in the metabelian 2-groups
//!
//! `G_n = < s, t, r | r^4 = s^8 = t^(2^(n+2)) = 1, s^4 = t^(2^(n+1)), r^2 = t^(2^n) s^2,
//!        [t, s] = 1, [r, s] = s^-2, [r, t] = t^2 >`,  `n >= 1`,
//!
//! whose abelianization is elementary abelian of rank 3: normal-form arithmetic,
//! subgroups of index 2 and 4, abelian invariants, the lower central series, and the
//! transfer (Verlagerung) into each of the fourteen subgroups containing `G_n'`.

pub mod abelian;
pub mod capitulation;
pub mod check;
pub mod claims;
pub mod cli;
pub mod error;
pub mod group;
pub mod kernel;
pub mod lattice;
pub mod presentation;
pub mod report;
pub mod series;
pub mod subgroup;
pub mod tables;
pub mod transfer;
pub mod verify;
pub mod word;

pub use abelian::{abelian_type, abelianization, AbelianType};
pub use check::{CheckEntry, CheckReport};
pub use error::{Error, Result};
pub use group::{Element, GroupParams};
pub use subgroup::{closure, derived_subgroup, Subgroup};
pub use word::{parse_element_word, ElementWord, Generator};
