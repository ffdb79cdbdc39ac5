// Maximal subgroups, their abelianizations, and the lower central series.

use gnlab::lattice::{all_subgroups_of_index, maximal_subgroups};
use gnlab::series::lower_central_series;
use gnlab::{abelianization, derived_subgroup, GroupParams, Subgroup};

pub fn run_example() -> gnlab::Result<()> {
    let g = GroupParams::new(3)?;
    let d = derived_subgroup(&g, &Subgroup::whole(&g));
    println!("|G'| = {}", d.order());

    for (label, h) in maximal_subgroups(&g) {
        let hd = derived_subgroup(&g, &h);
        println!(
            "{label}: order {}, |H'| = {}, H/H' = {}",
            h.order(),
            hd.order(),
            abelianization(&g, &h)
        );
    }

    let series = lower_central_series(&g);
    let orders: Vec<u64> = series.gamma.iter().map(Subgroup::order).collect();
    println!("lower central series orders {orders:?}");
    println!(
        "class {}, coclass {}",
        series.nilpotency_class, series.coclass
    );

    let census = all_subgroups_of_index(&g, 4)?;
    println!(
        "index 4: {} above G', {} others",
        census.containing_derived.len(),
        census.not_containing_derived.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> gnlab::Result<()> {
    run_example()
}
