//! Transfer kernels into the fourteen subgroups above `G_n'`, with the stated
//! generator spans, and the group-side facts that accompany them.

use crate::abelian::{abelian_type, AbelianType};
use crate::check::CheckReport;
use crate::error::Result;
use crate::group::GroupParams;
use crate::kernel::{AbelianizationCoord, KernelSubspace};
use crate::lattice::{all_subgroups_of_index, labeled_subgroup, SubgroupLabel};
use crate::subgroup::{derived_subgroup, Quotient, Subgroup};
use crate::transfer::Transfer;

const S: AbelianizationCoord = AbelianizationCoord::new(1, 0, 0);
const T: AbelianizationCoord = AbelianizationCoord::new(0, 1, 0);
const R: AbelianizationCoord = AbelianizationCoord::new(0, 0, 1);
const ST: AbelianizationCoord = AbelianizationCoord::new(1, 1, 0);
const SR: AbelianizationCoord = AbelianizationCoord::new(1, 0, 1);
const TR: AbelianizationCoord = AbelianizationCoord::new(0, 1, 1);

/// The stated kernel generators for `V: G_n/G_n' -> H/H'`, with the generators in
/// the order they are usually written.
pub fn expected_kernel(label: SubgroupLabel, n: u32) -> KernelSubspace {
    let first = n == 1;
    let gens: Vec<AbelianizationCoord> = match (label.index, label.i) {
        (4, _) => return KernelSubspace::full(),
        (_, 1) => vec![T],
        (_, 2) if first => vec![S, R],
        (_, 2) => vec![S, TR],
        (_, 3) => vec![T, R],
        (_, 4) if first => vec![TR, SR],
        (_, 4) => vec![ST, R],
        (_, 5) => vec![T, SR],
        (_, 6) if first => vec![S, TR],
        (_, 6) => vec![R, S],
        (_, 7) if first => vec![ST, R],
        _ => vec![ST, TR],
    };
    KernelSubspace::span(&gens)
}

#[derive(Clone, Debug)]
pub struct KernelComparison {
    pub label: SubgroupLabel,
    pub computed: KernelSubspace,
    pub expected: KernelSubspace,
}

impl KernelComparison {
    pub fn pass(&self) -> bool {
        self.computed == self.expected
    }
}

pub fn compare_kernels_with(
    g: &GroupParams,
    expected: impl Fn(SubgroupLabel, u32) -> KernelSubspace,
) -> Result<Vec<KernelComparison>> {
    SubgroupLabel::all()
        .map(|label| {
            let h = labeled_subgroup(g, label);
            Ok(KernelComparison {
                label,
                computed: Transfer::new(g, &h).kernel()?,
                expected: expected(label, g.n()),
            })
        })
        .collect()
}

pub fn compare_kernels(g: &GroupParams) -> Result<Vec<KernelComparison>> {
    compare_kernels_with(g, expected_kernel)
}

/// One entry per maximal subgroup, plus one covering all seven index-4 subgroups.
pub fn kernel_report(comparisons: &[KernelComparison]) -> CheckReport {
    let mut report = CheckReport::new();
    for c in comparisons.iter().filter(|c| c.label.index == 2) {
        report.push(
            format!("transfer kernel {}", c.label),
            c.pass(),
            format!(
                "computed {}, stated {}",
                c.computed.reduced(),
                c.expected.reduced()
            ),
        );
    }
    let index4: Vec<_> = comparisons.iter().filter(|c| c.label.index == 4).collect();
    let failing: Vec<String> = index4
        .iter()
        .filter(|c| !c.pass())
        .map(|c| c.label.to_string())
        .collect();
    report.push(
        "transfer kernels of index-4 subgroups are G/G'",
        failing.is_empty() && index4.len() == 7,
        if failing.is_empty() {
            "all seven kernels are the whole of G/G'".to_string()
        } else {
            format!("differs for {}", failing.join(", "))
        },
    );
    report
}

pub fn verify_kernels(g: &GroupParams) -> Result<CheckReport> {
    Ok(kernel_report(&compare_kernels(g)?))
}

/// Abelian type of `G_n'`, expected `(2, 2^(n+1))`.
pub fn derived_group_type(g: &GroupParams) -> Result<AbelianType> {
    let d = derived_subgroup(g, &Subgroup::whole(g));
    abelian_type(g, &d)
}

/// No normal subgroup of index 4 has a cyclic quotient.
pub fn cyclic_quotient_case_is_vacuous(g: &GroupParams) -> Result<bool> {
    let census = all_subgroups_of_index(g, 4)?;
    let whole = Subgroup::whole(g);
    for h in census
        .containing_derived
        .iter()
        .chain(&census.not_containing_derived)
    {
        if !h.is_normal(g) {
            continue;
        }
        let q = Quotient::new(g, &whole, h)?;
        if q.representatives()
            .iter()
            .any(|&z| !h.contains(g, g.mul(z, z)))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Group-side consequences: the type of `G_n'`, that `G_n'` is abelian and proper,
/// and the capitulation counts.
pub fn group_side_report(g: &GroupParams, comparisons: &[KernelComparison]) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let whole = Subgroup::whole(g);
    let d = derived_subgroup(g, &whole);
    let expected = AbelianType::new(vec![1, g.n() + 1])?;
    let computed = abelian_type(g, &d)?;
    report.push(
        "derived group type (2, 2^(n+1))",
        computed == expected,
        format!("computed {computed}, expected {expected}"),
    );
    report.push(
        "derived group abelian and proper",
        d.is_abelian(g) && d.order() < whole.order(),
        format!("|G'| = {}, |G| = {}", d.order(), whole.order()),
    );
    let sizes: Vec<usize> = comparisons
        .iter()
        .filter(|c| c.label.index == 2)
        .map(|c| c.computed.len())
        .collect();
    let fours = sizes.iter().filter(|&&s| s == 4).count();
    let twos = sizes.iter().filter(|&&s| s == 2).count();
    report.push(
        "four classes capitulate in six index-2 cases, two in the remaining one",
        fours == 6 && twos == 1,
        format!("kernel sizes {sizes:?}"),
    );
    Ok(report)
}
