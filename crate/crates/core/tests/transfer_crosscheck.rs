mod common;

use gnlab::kernel::AbelianizationCoord;
use gnlab::lattice::{labeled_subgroup, SubgroupLabel};
use gnlab::subgroup::closure;
use gnlab::transfer::Transfer;
use gnlab::GroupParams;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn all_routes_agree_for_small_n() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=3 {
        let g = GroupParams::new(n).unwrap();
        let check = common::transfer_cross_check(&g, 5, &mut rng);
        assert!(check.mismatches.is_empty(), "{:#?}", check.mismatches);
        assert_eq!(check.comparisons, 14 * 8 * (2 + 2 * 5));
    }
}

#[test]
fn transfer_is_a_homomorphism_on_the_abelianization() {
    for n in 1..=4 {
        let g = GroupParams::new(n).unwrap();
        for label in SubgroupLabel::all() {
            let h = labeled_subgroup(&g, label);
            let t = Transfer::new(&g, &h);
            for u in AbelianizationCoord::all() {
                for v in AbelianizationCoord::all() {
                    let lhs = t.orbit_form((u + v).lift(&g)).unwrap();
                    let rhs = t.coset_mul(
                        t.orbit_form(u.lift(&g)).unwrap(),
                        t.orbit_form(v.lift(&g)).unwrap(),
                    );
                    assert_eq!(lhs, rhs, "n={n} {label} {u} {v}");
                }
            }
        }
    }
}

#[test]
fn transfer_depends_only_on_the_class_mod_derived() {
    let g = GroupParams::new(2).unwrap();
    let h = labeled_subgroup(&g, "H3_2".parse().unwrap());
    let t = Transfer::new(&g, &h);
    for x in g.elements() {
        let v = AbelianizationCoord::of(x);
        assert_eq!(t.via_transversal(x), t.via_transversal(v.lift(&g)));
    }
}

#[test]
fn orbit_form_rejects_non_normal_subgroups() {
    let g = GroupParams::new(1).unwrap();
    let h = closure(&g, &[g.rho()]);
    let t = Transfer::new(&g, &h);
    assert!(t.orbit_form(g.sigma()).is_err());
    // the transversal form still works
    let _ = t.via_transversal(g.sigma());
}

#[test]
fn bad_transversal_is_rejected() {
    let g = GroupParams::new(2).unwrap();
    let h = labeled_subgroup(&g, "H1_4".parse().unwrap());
    let t = Transfer::new(&g, &h);
    let bad = vec![g.identity(); t.transversal().len()];
    assert!(t.with_transversal(g.sigma(), &bad).is_err());
}
