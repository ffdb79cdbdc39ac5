//! Checks that the normal-form arithmetic satisfies the defining relations and the
//! derived conjugation identities.

use crate::check::CheckReport;
use crate::group::{Element, GroupParams};

fn eq_entry(report: &mut CheckReport, name: &str, lhs: Element, rhs: Element) {
    report.push(name, lhs == rhs, format!("lhs = {lhs}, rhs = {rhs}"));
}

pub fn check_presentation(g: &GroupParams) -> CheckReport {
    let mut report = CheckReport::new();
    let (s, t, r) = (g.sigma(), g.tau(), g.rho());
    let one = g.identity();
    let n = i64::from(g.n());
    let pow2 = |e: i64| 1i64 << e;

    eq_entry(&mut report, "relation r^4 = 1", g.pow(r, 4), one);
    eq_entry(&mut report, "relation s^8 = 1", g.pow(s, 8), one);
    eq_entry(
        &mut report,
        "relation t^(2^(n+2)) = 1",
        g.pow(t, pow2(n + 2)),
        one,
    );
    eq_entry(
        &mut report,
        "relation s^4 = t^(2^(n+1))",
        g.pow(s, 4),
        g.pow(t, pow2(n + 1)),
    );
    eq_entry(
        &mut report,
        "relation r^2 = t^(2^n) s^2",
        g.pow(r, 2),
        g.mul(g.pow(t, pow2(n)), g.pow(s, 2)),
    );
    eq_entry(&mut report, "relation [t, s] = 1", g.commutator(t, s), one);
    eq_entry(
        &mut report,
        "relation [r, s] = s^-2",
        g.commutator(r, s),
        g.pow(s, -2),
    );
    eq_entry(
        &mut report,
        "relation [r, t] = t^2",
        g.commutator(r, t),
        g.pow(t, 2),
    );

    eq_entry(
        &mut report,
        "conjugation: r^-1 s r = s^3",
        g.conjugate(s, r),
        g.pow(s, 3),
    );
    eq_entry(
        &mut report,
        "conjugation: r^-1 t r = t^-1",
        g.conjugate(t, r),
        g.inv(t),
    );
    let r2 = g.pow(r, 2);
    eq_entry(
        &mut report,
        "central square: r^2 s = s r^2",
        g.mul(r2, s),
        g.mul(s, r2),
    );
    eq_entry(
        &mut report,
        "central square: r^2 t = t r^2",
        g.mul(r2, t),
        g.mul(t, r2),
    );
    let tr = g.mul(t, r);
    eq_entry(&mut report, "square: (t r)^2 = r^2", g.pow(tr, 2), r2);
    let sr = g.mul(s, r);
    let str_ = g.mul(g.mul(s, t), r);
    let r2s4 = g.mul(r2, g.pow(s, 4));
    eq_entry(
        &mut report,
        "square: (s t r)^2 = r^2 s^4",
        g.pow(str_, 2),
        r2s4,
    );
    eq_entry(&mut report, "square: (s r)^2 = r^2 s^4", g.pow(sr, 2), r2s4);

    // Item 6 is claimed for every r; beyond 2^(r+1) >= max(8, 2^(n+2)) both sides are
    // trivially 1, so only the informative range is listed.
    let bound = 8i64.max(pow2(n + 2));
    let mut e = 0i64;
    while pow2(e + 1) < bound {
        let tt = g.pow(t, pow2(e));
        eq_entry(
            &mut report,
            &format!(
                "commutator power (r = {e}): [r, t^(2^{e})] = t^(2^{})",
                e + 1
            ),
            g.commutator(r, tt),
            g.pow(t, pow2(e + 1)),
        );
        let ss = g.pow(s, pow2(e));
        let lhs = g.commutator(r, ss);
        eq_entry(
            &mut report,
            &format!(
                "commutator power (r = {e}): [r, s^(2^{e})] = s^(-2^{})",
                e + 1
            ),
            lhs,
            g.pow(s, -pow2(e + 1)),
        );
        let positive = g.pow(s, pow2(e + 1));
        report.observe(
            format!(
                "commutator power, plus sign (r = {e}): [r, s^(2^{e})] = s^(+2^{})",
                e + 1
            ),
            lhs == positive,
            format!("lhs = {lhs}, s^(+2^{}) = {positive}", e + 1),
        );
        e += 1;
    }
    report
}
