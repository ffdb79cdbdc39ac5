//! Command-line front end. `run` returns the process exit status: 0 on success, 1 when
//! a verification fails, 2 for usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::abelian::abelianization;
use crate::check::CheckEntry;
use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::kernel::AbelianizationCoord;
use crate::lattice::{labeled_subgroup, SubgroupLabel};
use crate::report::{ReportDocument, ReportFormat};
use crate::subgroup::{closure, derived_subgroup, Subgroup};
use crate::tables::{table_entries, TableEntry};
use crate::transfer::Transfer;
use crate::verify::verify_with_tables;
use crate::word::parse_element_word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_N_CEILING: u32 = 16;

#[derive(Debug, Parser)]
#[command(
    name = "gnlab",
    version,
    about = "Subgroups and transfer kernels of the 2-groups G_n"
)]
pub struct Cli {
    /// Largest n accepted by any command.
    #[arg(long, global = true, default_value_t = DEFAULT_N_CEILING)]
    pub n_ceiling: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every check for each n in a range.
    Verify {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        /// Emit one JSON document instead of text summaries.
        #[arg(long)]
        json: bool,
    },
    /// Write the subgroup/kernel report for one n.
    Report {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transfer one element into a normal subgroup.
    Transfer {
        #[arg(long)]
        n: u32,
        /// A label such as H1_2, or comma-separated generator words.
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        element: String,
    },
    /// Print order, derived subgroup, abelianization and normality of a subgroup.
    Inspect {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        subgroup: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Md => ReportFormat::Markdown,
            Format::Json => ReportFormat::Json,
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let ceiling = cli.n_ceiling;
    let result = match cli.command {
        Command::Verify { n_min, n_max, json } => {
            verify_range(n_min, n_max, ceiling, json, &table_entries, out)
        }
        Command::Report {
            n,
            format,
            out: path,
        } => report(n, ceiling, format.into(), path, out),
        Command::Transfer {
            n,
            subgroup,
            element,
        } => transfer(n, ceiling, &subgroup, &element, out),
        Command::Inspect { n, subgroup } => inspect(n, ceiling, &subgroup, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn group(n: u32, ceiling: u32) -> Result<GroupParams> {
    if n > ceiling {
        return Err(Error::Parameter(format!(
            "n = {n} exceeds the ceiling {ceiling}"
        )));
    }
    GroupParams::new(n)
}

/// A label such as `H3_4`, or comma-separated generator words.
pub fn resolve_subgroup(g: &GroupParams, spec: &str) -> Result<Subgroup> {
    if let Ok(label) = spec.trim().parse::<SubgroupLabel>() {
        return Ok(labeled_subgroup(g, label));
    }
    let gens = spec
        .split(',')
        .map(|w| parse_element_word(w).map(|w| w.evaluate(g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(closure(g, &gens))
}

#[derive(Serialize)]
struct VerifySummary {
    n: u32,
    pass: bool,
    passed: usize,
    total: usize,
    index4_total: usize,
    checks: Vec<CheckEntry>,
    observations: Vec<CheckEntry>,
}

/// Verifies each `n` in `n_min..=n_max` on its own thread; output is emitted in order
/// of `n`. `tables` supplies the table rows to check for each `n`.
pub fn verify_range(
    n_min: u32,
    n_max: u32,
    ceiling: u32,
    json: bool,
    tables: &(dyn Fn(u32) -> Vec<TableEntry> + Sync),
    out: &mut dyn Write,
) -> Result<i32> {
    if n_min < 1 || n_min > n_max {
        return Err(Error::Parameter(format!(
            "need 1 <= n-min <= n-max, got {n_min}..{n_max}"
        )));
    }
    let groups = (n_min..=n_max)
        .map(|n| group(n, ceiling))
        .collect::<Result<Vec<_>>>()?;

    let results: Vec<Result<VerifySummary>> = std::thread::scope(|scope| {
        let handles: Vec<_> = groups
            .iter()
            .map(|g| {
                scope.spawn(move || {
                    let v = verify_with_tables(g, &tables(g.n()))?;
                    Ok(VerifySummary {
                        n: g.n(),
                        pass: v.all_pass(),
                        passed: v.report.passed(),
                        total: v.report.entries.len(),
                        index4_total: v.index4_total,
                        checks: v.report.entries,
                        observations: v.report.observations,
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    let summaries = results.into_iter().collect::<Result<Vec<_>>>()?;
    let all_pass = summaries.iter().all(|s| s.pass);

    let io = |e: std::io::Error| Error::Output(format!("cannot write output: {e}"));
    if json {
        let text = serde_json::to_string_pretty(&summaries).expect("summaries serialize");
        writeln!(out, "{text}").map_err(io)?;
    } else {
        for s in &summaries {
            let status = if s.pass { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "n = {}: {status} ({}/{} checks; {} subgroups of index 4 in total)",
                s.n, s.passed, s.total, s.index4_total
            )
            .map_err(io)?;
            for c in s.checks.iter().filter(|c| !c.pass) {
                writeln!(out, "  FAIL {}: {}", c.name, c.detail).map_err(io)?;
            }
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_FAILED })
}

fn report(
    n: u32,
    ceiling: u32,
    format: ReportFormat,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32> {
    let g = group(n, ceiling)?;
    let text = ReportDocument::build(&g)?.render(format);
    match path {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Error::Output(format!("cannot write {}: {e}", path.display())))?,
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Error::Output(format!("cannot write output: {e}")))?,
    }
    Ok(EXIT_OK)
}

fn transfer(n: u32, ceiling: u32, spec: &str, element: &str, out: &mut dyn Write) -> Result<i32> {
    let g = group(n, ceiling)?;
    let h = resolve_subgroup(&g, spec)?;
    let x = parse_element_word(element)?.evaluate(&g);
    let t = Transfer::new(&g, &h);
    let image = t.orbit_form(x)?;
    let class = AbelianizationCoord::of(x);
    let verdict = if image.is_trivial() {
        "in kernel"
    } else {
        "not in kernel"
    };
    let coset = if image.is_trivial() {
        "trivial coset".to_string()
    } else {
        format!("coset of {}", image.rep())
    };
    let io = |e: std::io::Error| Error::Output(format!("cannot write output: {e}"));
    writeln!(out, "{coset}; {verdict}").map_err(io)?;
    writeln!(
        out,
        "element {} in normal form, class {class} of G/G', [G:H] = {}",
        x,
        h.index()
    )
    .map_err(io)?;
    Ok(EXIT_OK)
}

fn inspect(n: u32, ceiling: u32, spec: &str, out: &mut dyn Write) -> Result<i32> {
    let g = group(n, ceiling)?;
    let h = resolve_subgroup(&g, spec)?;
    let d = derived_subgroup(&g, &h);
    let whole_derived = derived_subgroup(&g, &Subgroup::whole(&g));
    let io = |e: std::io::Error| Error::Output(format!("cannot write output: {e}"));
    let gens: Vec<String> = d.generators().iter().map(ToString::to_string).collect();
    writeln!(out, "order: {} (index {})", h.order(), h.index()).map_err(io)?;
    writeln!(
        out,
        "derived subgroup: order {}, generated by [{}]",
        d.order(),
        gens.join(", ")
    )
    .map_err(io)?;
    writeln!(out, "abelianization: {}", abelianization(&g, &h)).map_err(io)?;
    writeln!(
        out,
        "normal: {}",
        if h.is_normal(&g) { "yes" } else { "no" }
    )
    .map_err(io)?;
    writeln!(
        out,
        "contains G': {}",
        if whole_derived.is_subgroup_of(&h) {
            "yes"
        } else {
            "no"
        }
    )
    .map_err(io)?;
    Ok(EXIT_OK)
}
