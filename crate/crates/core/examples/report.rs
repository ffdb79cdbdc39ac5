// Full verification run and the markdown report for one n.

use gnlab::report::{ReportDocument, ReportFormat};
use gnlab::verify::verify;
use gnlab::GroupParams;

pub fn run_example() -> gnlab::Result<()> {
    let g = GroupParams::new(2)?;
    let v = verify(&g)?;
    println!(
        "{} of {} checks pass",
        v.report.passed(),
        v.report.entries.len()
    );

    let doc = ReportDocument::build(&g)?;
    print!("{}", doc.render(ReportFormat::Markdown));
    Ok(())
}

#[allow(dead_code)]
fn main() -> gnlab::Result<()> {
    run_example()
}
