// Normal-form arithmetic in G_n and a check of the defining relations.

use gnlab::presentation::check_presentation;
use gnlab::{parse_element_word, GroupParams};

pub fn run_example() -> gnlab::Result<()> {
    let g = GroupParams::new(2)?;
    println!(
        "G_{} has order {} = 2^{}",
        g.n(),
        g.group_order(),
        g.log2_order()
    );

    let (s, t, r) = (g.sigma(), g.tau(), g.rho());
    let rs = g.mul(r, s);
    println!("rho*sigma = {rs}, sigma^3*rho = {}", g.mul(g.pow(s, 3), r));
    assert_eq!(rs, g.mul(g.pow(s, 3), r));

    let x = parse_element_word("s*t^3*r")?.evaluate(&g);
    println!(
        "s*t^3*r = {x}, order {}, inverse {}",
        g.element_order(x),
        g.inv(x)
    );
    println!(
        "[rho, tau] = {}, tau^2 = {}",
        g.commutator(r, t),
        g.pow(t, 2)
    );

    let report = check_presentation(&g);
    print!("{report}");
    assert!(report.all_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() -> gnlab::Result<()> {
    run_example()
}
