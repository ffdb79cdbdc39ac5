//! Per-`n` report document, rendered as markdown or JSON.
//!
//! The JSON layout is documented in `docs/report-schema.md` at the repository root.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::abelian::{abelianization, AbelianType};
use crate::capitulation::capitulation_view;
use crate::check::CheckEntry;
use crate::error::Result;
use crate::group::GroupParams;
use crate::kernel::{AbelianizationCoord, KernelSubspace};
use crate::lattice::{labeled_subgroup, SubgroupLabel};
use crate::tables::{table_entries, TableEntry};
use crate::verify::{verify_with_tables, Verification};
use crate::word::ElementWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub order: u64,
    pub nilpotency_class: u32,
    pub coclass: u32,
    pub derived_order: u64,
    pub derived_type: AbelianType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRow {
    pub label: SubgroupLabel,
    pub generators: Vec<String>,
    pub derived_generators: Vec<String>,
    pub abelianization: AbelianType,
    pub transfer_kernel_basis: Vec<AbelianizationCoord>,
    pub capitulation_labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub n: u32,
    pub group: GroupSummary,
    pub maximal_subgroups: Vec<SubgroupRow>,
    pub index4_subgroups: Vec<SubgroupRow>,
    pub checks: Vec<CheckEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Json,
}

fn row(g: &GroupParams, entry: &TableEntry, kernel: &KernelSubspace) -> SubgroupRow {
    let h = labeled_subgroup(g, entry.label);
    let kernel = kernel.reduced();
    SubgroupRow {
        label: entry.label,
        generators: entry
            .generators
            .iter()
            .map(ElementWord::to_string)
            .collect(),
        derived_generators: entry
            .derived_generators
            .iter()
            .map(ElementWord::to_string)
            .collect(),
        abelianization: abelianization(g, &h),
        transfer_kernel_basis: kernel.basis().to_vec(),
        capitulation_labels: capitulation_view(&kernel)
            .labels
            .iter()
            .map(|l| l.ascii())
            .collect(),
    }
}

impl ReportDocument {
    pub fn build(g: &GroupParams) -> Result<Self> {
        Self::build_with_tables(g, &table_entries(g.n()))
    }

    pub fn build_with_tables(g: &GroupParams, tables: &[TableEntry]) -> Result<Self> {
        let verification = verify_with_tables(g, tables)?;
        Ok(Self::from_verification(g, tables, &verification))
    }

    pub fn from_verification(g: &GroupParams, tables: &[TableEntry], v: &Verification) -> Self {
        let derived = &v.series.gamma[1];
        let kernel_of = |label: SubgroupLabel| {
            v.kernels
                .iter()
                .find(|k| k.label == label)
                .map(|k| k.computed.clone())
                .expect("a kernel for every label")
        };
        let rows = |index: u8| -> Vec<SubgroupRow> {
            tables
                .iter()
                .filter(|e| e.label.index == index)
                .map(|e| row(g, e, &kernel_of(e.label)))
                .collect()
        };
        Self {
            n: g.n(),
            group: GroupSummary {
                order: g.group_order(),
                nilpotency_class: v.series.nilpotency_class,
                coclass: v.series.coclass,
                derived_order: derived.order(),
                derived_type: crate::abelian::abelian_type(g, derived)
                    .expect("the derived group is abelian"),
            },
            maximal_subgroups: rows(2),
            index4_subgroups: rows(4),
            checks: v.report.entries.clone(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Markdown => self.to_markdown(),
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let g = &self.group;
        let _ = writeln!(out, "# G_{} (n = {})\n", self.n, self.n);
        let _ = writeln!(out, "| invariant | value |");
        let _ = writeln!(out, "|---|---|");
        let _ = writeln!(
            out,
            "| order | {} = 2^{} |",
            g.order,
            g.order.trailing_zeros()
        );
        let _ = writeln!(out, "| nilpotency class | {} |", g.nilpotency_class);
        let _ = writeln!(out, "| coclass | {} |", g.coclass);
        let _ = writeln!(out, "| order of G' | {} |", g.derived_order);
        let _ = writeln!(out, "| type of G' | {} |", g.derived_type);
        out.push('\n');
        for (title, rows, j) in [
            ("Subgroups of index 2", &self.maximal_subgroups, 2),
            ("Subgroups of index 4", &self.index4_subgroups, 4),
        ] {
            let _ = writeln!(out, "## {title}\n");
            let _ = writeln!(
                out,
                "| i | H_{{i,{j}}} | H'_{{i,{j}}} | H/H' | ker V | capitulation |"
            );
            let _ = writeln!(out, "|---|---|---|---|---|---|");
            for r in rows.iter() {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} |",
                    r.label.i,
                    angle(&r.generators),
                    angle(&r.derived_generators),
                    type_string(&r.abelianization),
                    kernel_string(&r.transfer_kernel_basis),
                    capitulation_string(r),
                );
            }
            out.push('\n');
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "## Checks ({passed}/{} pass)\n", self.checks.len());
        for c in &self.checks {
            let mark = if c.pass { "x" } else { " " };
            let _ = writeln!(out, "- [{mark}] {}: {}", c.name, c.detail);
        }
        out
    }
}

fn unicode_word(w: &str) -> String {
    w.parse::<ElementWord>()
        .map(|w| w.to_unicode())
        .unwrap_or_else(|_| w.to_string())
}

fn angle(words: &[String]) -> String {
    if words.is_empty() {
        return "⟨1⟩".into();
    }
    let inner: Vec<String> = words.iter().map(|w| unicode_word(w)).collect();
    format!("⟨{}⟩", inner.join(", "))
}

fn type_string(t: &AbelianType) -> String {
    t.to_string()
}

fn kernel_string(basis: &[AbelianizationCoord]) -> String {
    if basis.len() == 3 {
        return "G/G'".into();
    }
    let words: Vec<String> = basis
        .iter()
        .map(|v| {
            let [s, t, r] = v.components();
            let mut w = String::new();
            for (bit, ch) in [(s, 'σ'), (t, 'τ'), (r, 'ρ')] {
                if bit == 1 {
                    w.push(ch);
                }
            }
            w
        })
        .collect();
    format!("⟨{}⟩", words.join(", "))
}

fn capitulation_string(r: &SubgroupRow) -> String {
    if r.transfer_kernel_basis.len() == 3 {
        "C_k,2".into()
    } else {
        format!("⟨{}⟩", r.capitulation_labels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_one_json_values() {
        let g = GroupParams::new(1).unwrap();
        let doc = ReportDocument::build(&g).unwrap();
        assert_eq!(doc.maximal_subgroups.len(), 7);
        assert_eq!(doc.index4_subgroups.len(), 7);
        let h44 = &doc.index4_subgroups[3];
        assert_eq!(h44.label.to_string(), "H4_4");
        assert_eq!(h44.abelianization.exponents(), &[2, 2]);
        let json = doc.to_json();
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert!(json.contains("\"label\": \"H1_2\""));
    }

    #[test]
    fn markdown_rows() {
        let g = GroupParams::new(1).unwrap();
        let md = ReportDocument::build(&g).unwrap().to_markdown();
        let h12 = md.lines().find(|l| l.starts_with("| 1 | ⟨σ, τ⟩")).unwrap();
        assert!(h12.ends_with("| ⟨τ⟩ | ⟨b⟩ |"), "{h12}");

        let g = GroupParams::new(3).unwrap();
        let md = ReportDocument::build(&g).unwrap().to_markdown();
        let h14 = md.lines().find(|l| l.starts_with("| 1 | ⟨σ, τ²⟩")).unwrap();
        assert!(h14.contains("| (4, 16) |"), "{h14}");
    }
}
