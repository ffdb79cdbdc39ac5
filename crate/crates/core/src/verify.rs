//! Every check for one `n`, gathered into a single report.

use crate::check::CheckReport;
use crate::claims::{compare_kernels, group_side_report, kernel_report, KernelComparison};
use crate::error::Result;
use crate::group::GroupParams;
use crate::lattice::all_subgroups_of_index;
use crate::presentation::check_presentation;
use crate::series::{lower_central_series, SeriesReport};
use crate::subgroup::closure;
use crate::tables::{table_entries, verify_tables_against, TableEntry};

#[derive(Clone, Debug)]
pub struct Verification {
    pub n: u32,
    pub report: CheckReport,
    pub series: SeriesReport,
    pub kernels: Vec<KernelComparison>,
    /// Index-4 subgroups of any kind; only those containing `G'` are gated.
    pub index4_total: usize,
}

impl Verification {
    pub fn all_pass(&self) -> bool {
        self.report.all_pass()
    }
}

fn series_checks(g: &GroupParams, series: &SeriesReport) -> CheckReport {
    let mut report = CheckReport::new();
    let n = g.n();
    let order = series.gamma[0].order();
    report.push(
        "order |G| = 2^(n+5)",
        order == 1 << (n + 5),
        format!("|G| = {order}"),
    );
    let derived = series.gamma[1].order();
    report.push(
        "order |G'| = 2^(n+2)",
        derived == 1 << (n + 2),
        format!("|G'| = {derived}"),
    );
    report.push(
        "nilpotency class n+2",
        series.nilpotency_class == n + 2,
        format!("class {}", series.nilpotency_class),
    );
    report.push(
        "coclass 3",
        series.coclass == 3,
        format!("coclass {}", series.coclass),
    );
    let mismatched: Vec<usize> = series
        .gamma
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(j, term)| {
            let e = 1i64 << j;
            **term != closure(g, &[g.pow(g.sigma(), e), g.pow(g.tau(), e)])
        })
        .map(|(j, _)| j + 1)
        .collect();
    report.push(
        "lower central terms gamma_(j+1) = <s^(2^j), t^(2^j)>",
        mismatched.is_empty(),
        if mismatched.is_empty() {
            format!("{} terms checked", series.gamma.len() - 1)
        } else {
            format!("differs at gamma_{mismatched:?}")
        },
    );
    report
}

pub fn verify_with_tables(g: &GroupParams, tables: &[TableEntry]) -> Result<Verification> {
    let mut report = check_presentation(g);
    let series = lower_central_series(g);
    report.extend(series_checks(g, &series));

    let two = all_subgroups_of_index(g, 2)?;
    report.push(
        "seven subgroups of index 2",
        two.total() == 7,
        format!("{} found", two.total()),
    );
    let four = all_subgroups_of_index(g, 4)?;
    report.push(
        "seven subgroups of index 4 containing G'",
        four.containing_derived.len() == 7,
        format!(
            "{} found containing G', {} in total",
            four.containing_derived.len(),
            four.total()
        ),
    );

    report.extend(verify_tables_against(g, tables).to_check_report());
    let kernels = compare_kernels(g)?;
    report.extend(kernel_report(&kernels));
    report.extend(group_side_report(g, &kernels)?);

    Ok(Verification {
        n: g.n(),
        report,
        series,
        kernels,
        index4_total: four.total(),
    })
}

pub fn verify(g: &GroupParams) -> Result<Verification> {
    verify_with_tables(g, &table_entries(g.n()))
}
