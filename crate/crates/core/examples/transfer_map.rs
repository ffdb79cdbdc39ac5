// Three ways to evaluate the transfer into a subgroup of index 2.

use gnlab::kernel::AbelianizationCoord;
use gnlab::lattice::{labeled_subgroup, SubgroupLabel};
use gnlab::transfer::{ClosedFormCase, Transfer};
use gnlab::GroupParams;

pub fn run_example() -> gnlab::Result<()> {
    let g = GroupParams::new(2)?;
    let label: SubgroupLabel = "H4_2".parse()?;
    let h = labeled_subgroup(&g, label);
    let t = Transfer::new(&g, &h);
    let reps: Vec<String> = t.transversal().iter().map(ToString::to_string).collect();
    println!("{label}: transversal [{}]", reps.join(", "));
    if let ClosedFormCase::IndexTwo { z } = t.closed_form_case()? {
        println!("G = H + {z}H");
    }

    for v in AbelianizationCoord::all() {
        let x = v.lift(&g);
        let a = t.orbit_form(x)?;
        let b = t.via_transversal(x);
        let c = t.closed_form(x)?;
        assert!(a == b && b == c);
        println!("V({v}) = {}H'", a.rep());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> gnlab::Result<()> {
    run_example()
}
