//! The subgroup tables for index 2 and index 4: generators, derived subgroups and
//! abelianization types, with the `n = 1` / `n >= 2` branches resolved, and a checker
//! that recomputes every entry.

use serde::{Deserialize, Serialize};

use crate::abelian::{abelianization, AbelianType};
use crate::check::CheckReport;
use crate::group::GroupParams;
use crate::lattice::{labeled_subgroup, SubgroupLabel};
use crate::subgroup::{closure, derived_subgroup};
use crate::word::{parse_element_word, ElementWord};

/// One table row for a fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub label: SubgroupLabel,
    pub generators: Vec<ElementWord>,
    pub derived_generators: Vec<ElementWord>,
    pub abelianization: AbelianType,
}

fn words(list: &[&str]) -> Vec<ElementWord> {
    list.iter()
        .map(|w| parse_element_word(w).expect("table words are well formed"))
        .collect()
}

fn entry(i: u8, index: u8, gens: &[&str], derived: &[&str], exps: Vec<u32>) -> TableEntry {
    TableEntry {
        label: SubgroupLabel::new(i, index).expect("valid label"),
        generators: words(gens),
        derived_generators: words(derived),
        abelianization: AbelianType::new(exps).expect("positive exponents"),
    }
}

/// Subgroups of index 2.
pub fn table_index2(n: u32) -> Vec<TableEntry> {
    let first = n == 1;
    vec![
        entry(1, 2, &["s", "t"], &[], vec![2, n + 2]),
        if first {
            entry(2, 2, &["s", "r"], &["s^2"], vec![1, 2])
        } else {
            entry(2, 2, &["s", "t^2", "r"], &["s^2", "t^4"], vec![1, 1, 1])
        },
        entry(3, 2, &["r", "t"], &["t^2"], vec![1, 2]),
        if first {
            entry(
                4,
                2,
                &["s*t", "r", "s^2"],
                &["s*t*s*t", "s^4"],
                vec![1, 1, 1],
            )
        } else {
            entry(4, 2, &["s*t", "r"], &["s*t*s*t"], vec![1, 2])
        },
        entry(5, 2, &["s*r", "t"], &["t^2"], vec![1, 2]),
        if first {
            entry(6, 2, &["t*r", "s"], &["s^2"], vec![1, 2])
        } else {
            entry(6, 2, &["t*r", "s", "t^2"], &["s^2", "t^4"], vec![1, 1, 1])
        },
        if first {
            entry(
                7,
                2,
                &["s*t", "t*r", "s^2"],
                &["s^4", "s*t*s*t*s*t*s*t"],
                vec![1, 1, 1],
            )
        } else {
            entry(7, 2, &["s*t", "t*r"], &["s*t*s*t"], vec![1, 2])
        },
    ]
}

/// Subgroups of index 4 containing the derived group.
pub fn table_index4(n: u32) -> Vec<TableEntry> {
    vec![
        entry(1, 4, &["s", "t^2"], &[], vec![n.min(2), (n + 1).max(3)]),
        // printed as (2^min(1, n+1), 2^max(2 n+2)); read as max(2, n+2)
        entry(2, 4, &["t", "s^2"], &[], vec![1, (n + 2).max(2)]),
        entry(3, 4, &["r", "t^2"], &["t^4"], vec![1, 2]),
        if n == 1 {
            entry(4, 4, &["s*t", "s^2"], &[], vec![2, 2])
        } else {
            entry(4, 4, &["s*t", "s^2"], &[], vec![1, n + 2])
        },
        entry(5, 4, &["s*r", "t^2"], &["t^4"], vec![1, 2]),
        entry(6, 4, &["t*r", "t^2"], &["t^4"], vec![1, 2]),
        entry(7, 4, &["s*t*r", "t^2"], &["t^4"], vec![1, 2]),
    ]
}

pub fn table_entries(n: u32) -> Vec<TableEntry> {
    let mut all = table_index2(n);
    all.extend(table_index4(n));
    all
}

/// Recomputed values for one table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub label: SubgroupLabel,
    pub subgroup_matches: bool,
    pub derived_matches: bool,
    pub computed_type: AbelianType,
    pub expected_type: AbelianType,
    pub subgroup_order: u64,
    pub derived_order: u64,
}

impl RowCheck {
    pub fn pass(&self) -> bool {
        self.subgroup_matches && self.derived_matches && self.computed_type == self.expected_type
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    pub n: u32,
    pub rows: Vec<RowCheck>,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(RowCheck::pass)
    }

    pub fn to_check_report(&self) -> CheckReport {
        let mut report = CheckReport::new();
        for row in &self.rows {
            let table = if row.label.index == 2 {
                "index-2 table"
            } else {
                "index-4 table"
            };
            report.push(
                format!("{table} row {}", row.label),
                row.pass(),
                format!(
                    "subgroup {} (order {}), derived {} (order {}), type {} vs expected {}",
                    verdict(row.subgroup_matches),
                    row.subgroup_order,
                    verdict(row.derived_matches),
                    row.derived_order,
                    row.computed_type,
                    row.expected_type
                ),
            );
        }
        report
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "matches"
    } else {
        "differs"
    }
}

pub fn check_row(g: &GroupParams, entry: &TableEntry) -> RowCheck {
    let constructed = labeled_subgroup(g, entry.label);
    let eval = |ws: &[ElementWord]| ws.iter().map(|w| w.evaluate(g)).collect::<Vec<_>>();
    let from_table = closure(g, &eval(&entry.generators));
    let derived = derived_subgroup(g, &constructed);
    let expected_derived = closure(g, &eval(&entry.derived_generators));
    RowCheck {
        label: entry.label,
        subgroup_matches: from_table == constructed,
        derived_matches: derived == expected_derived,
        computed_type: abelianization(g, &constructed),
        expected_type: entry.abelianization.clone(),
        subgroup_order: constructed.order(),
        derived_order: derived.order(),
    }
}

pub fn verify_tables_against(g: &GroupParams, entries: &[TableEntry]) -> TableReport {
    TableReport {
        n: g.n(),
        rows: entries.iter().map(|e| check_row(g, e)).collect(),
    }
}

pub fn verify_tables(g: &GroupParams) -> TableReport {
    verify_tables_against(g, &table_entries(g.n()))
}
