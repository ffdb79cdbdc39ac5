// Transfer kernels of all fourteen subgroups, read as capitulation patterns.

use gnlab::capitulation::capitulation_view;
use gnlab::claims::compare_kernels;
use gnlab::GroupParams;

pub fn run_example() -> gnlab::Result<()> {
    for n in [1, 2] {
        let g = GroupParams::new(n)?;
        println!("n = {n}");
        for cmp in compare_kernels(&g)? {
            let view = capitulation_view(&cmp.computed);
            let mark = if cmp.pass() {
                ""
            } else {
                "  (differs from expected)"
            };
            println!(
                "  {}: ker = {}, capitulating {}{mark}",
                cmp.label,
                cmp.computed,
                view.render()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> gnlab::Result<()> {
    run_example()
}
