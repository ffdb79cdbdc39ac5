use crate::group::GroupParams;
use crate::subgroup::{commutator_subgroup, Subgroup};

#[derive(Clone, Debug)]
pub struct SeriesReport {
    /// `gamma[0]` is the whole group; the last entry is trivial.
    pub gamma: Vec<Subgroup>,
    pub nilpotency_class: u32,
    pub coclass: u32,
}

/// `gamma_1 = G`, `gamma_(i+1) = [gamma_i, G]`, down to the trivial subgroup.
pub fn lower_central_series(g: &GroupParams) -> SeriesReport {
    let whole = Subgroup::whole(g);
    let mut gamma = vec![whole.clone()];
    while !gamma.last().unwrap().is_trivial() {
        let next = commutator_subgroup(g, gamma.last().unwrap(), &whole);
        assert!(
            next != *gamma.last().unwrap(),
            "lower central series stalled; the group would not be nilpotent"
        );
        gamma.push(next);
    }
    let nilpotency_class = (gamma.len() - 1) as u32;
    SeriesReport {
        coclass: g.log2_order() - nilpotency_class,
        nilpotency_class,
        gamma,
    }
}
