//! Normal-form arithmetic in the groups
//! `G_n = < s, t, r | r^4 = s^8 = t^(2^(n+2)) = 1, s^4 = t^(2^(n+1)), r^2 = t^(2^n) s^2,
//! [t, s] = 1, [r, s] = s^-2, [r, t] = t^2 >`.
//!
//! Every element is written uniquely as `s^a t^b r^c` with `a < 4`, `b < 2^(n+2)` and
//! `c < 2`. The letters `s`, `t`, `r` stand for the generators sigma, tau and rho.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`GroupParams::new`]. Exhaustive routines are linear or
/// quadratic in `2^(n+5)`, so callers that want a tighter bound enforce it themselves.
pub const MAX_N: u32 = 24;

/// The parameter `n` together with the moduli that the normal form depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    n: u32,
    tau_order: u32,
    sigma_fold: u32,
    rho_square_b: u32,
    group_order: u64,
}

/// An element in normal form `s^a t^b r^c`.
///
/// Ordering is lexicographic on `(c, a, b)`, which is also the order of
/// [`GroupParams::elements`]; the identity is the least element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Element {
    a: u8,
    b: u32,
    c: u8,
}

impl Element {
    pub const IDENTITY: Element = Element { a: 0, b: 0, c: 0 };

    pub fn a(self) -> u8 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn c(self) -> u8 {
        self.c
    }

    pub fn triple(self) -> (u8, u32, u8) {
        (self.a, self.b, self.c)
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// Image in `G/G' = F_2^3`, as `(a mod 2, b mod 2, c mod 2)` packed into bits 0, 1, 2.
    pub fn parity_bits(self) -> u8 {
        (self.a & 1) | (((self.b & 1) as u8) << 1) | ((self.c & 1) << 2)
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.c, self.a, self.b).cmp(&(other.c, other.a, other.b))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl GroupParams {
    pub fn new(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::Parameter(format!("n must be at least 1, got {n}")));
        }
        if n > MAX_N {
            return Err(Error::Parameter(format!(
                "n must be at most {MAX_N}, got {n}"
            )));
        }
        Ok(Self {
            n,
            tau_order: 1 << (n + 2),
            sigma_fold: 1 << (n + 1),
            rho_square_b: 1 << n,
            group_order: 1 << (n + 5),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Order of `t`, `2^(n+2)`.
    pub fn tau_order(&self) -> u32 {
        self.tau_order
    }

    /// The `t`-exponent equal to `s^4`, `2^(n+1)`.
    pub fn sigma_fold(&self) -> u32 {
        self.sigma_fold
    }

    /// The `t`-exponent in `r^2 = t^(2^n) s^2`.
    pub fn rho_square_b(&self) -> u32 {
        self.rho_square_b
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// `log2 |G_n| = n + 5`.
    pub fn log2_order(&self) -> u32 {
        self.n + 5
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn sigma(&self) -> Element {
        Element { a: 1, b: 0, c: 0 }
    }

    pub fn tau(&self) -> Element {
        Element { a: 0, b: 1, c: 0 }
    }

    pub fn rho(&self) -> Element {
        Element { a: 0, b: 0, c: 1 }
    }

    pub fn generators(&self) -> [Element; 3] {
        [self.sigma(), self.tau(), self.rho()]
    }

    /// Reduces `s^a t^b r^c` for arbitrary integer exponents.
    ///
    /// Each `r^2` is traded for `s^2 t^(2^n)` (it is central), then `s^4` for
    /// `t^(2^(n+1))`, then `t` is reduced modulo its order.
    pub fn normalize(&self, a: i64, b: i64, c: i64) -> Element {
        let tau = i64::from(self.tau_order);
        // r^(2q) only matters through q mod 4, since s^8 = 1 and 4 * 2^n = 2^(n+2).
        let q = c.div_euclid(2).rem_euclid(4);
        let c = c.rem_euclid(2);
        let mut a = (a.rem_euclid(8) + 2 * q).rem_euclid(8);
        let mut b = b.rem_euclid(tau) + i64::from(self.rho_square_b) * q;
        if a >= 4 {
            a -= 4;
            b += i64::from(self.sigma_fold);
        }
        Element {
            a: a as u8,
            b: b.rem_euclid(tau) as u32,
            c: c as u8,
        }
    }

    /// Builds an element from a triple already in canonical range.
    pub fn element(&self, a: u8, b: u32, c: u8) -> Result<Element> {
        if a >= 4 || b >= self.tau_order || c >= 2 {
            return Err(Error::Parameter(format!(
                "({a}, {b}, {c}) is not a normal form for n = {}",
                self.n
            )));
        }
        Ok(Element { a, b, c })
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        let (xa, xb, xc) = (i64::from(x.a), i64::from(x.b), i64::from(x.c));
        let (ya, yb, yc) = (i64::from(y.a), i64::from(y.b), i64::from(y.c));
        if x.c == 0 {
            self.normalize(xa + ya, xb + yb, yc)
        } else {
            // r s^a t^b = s^(3a) t^(-b) r
            self.normalize(xa + 3 * ya, xb - yb, xc + yc)
        }
    }

    pub fn inv(&self, x: Element) -> Element {
        let (a, b) = (i64::from(x.a), i64::from(x.b));
        if x.c == 0 {
            self.normalize(-a, -b, 0)
        } else {
            // (s^a t^b r)^-1 = r^-1 s^-a t^-b = s^(-3a) t^(b) r^-1
            self.normalize(-3 * a, b, -1)
        }
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: Element, k: i64) -> Element {
        // x^|G| = 1, so the exponent can be taken modulo the group order.
        let mut e = k.rem_euclid(self.group_order as i64) as u64;
        let mut base = x;
        let mut acc = Element::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x^-1 y^-1 x y`.
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    /// `y^-1 x y`.
    pub fn conjugate(&self, x: Element, y: Element) -> Element {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// Least `k >= 1` with `x^k = 1`; always a power of two.
    pub fn element_order(&self, x: Element) -> u64 {
        let mut order = 1;
        let mut y = x;
        while !y.is_identity() {
            y = self.mul(y, y);
            order *= 2;
        }
        order
    }

    /// Position of `x` in [`GroupParams::elements`].
    pub fn index_of(&self, x: Element) -> usize {
        let t = self.tau_order as usize;
        (usize::from(x.c) * 4 + usize::from(x.a)) * t + x.b as usize
    }

    /// Inverse of [`GroupParams::index_of`].
    pub fn element_at(&self, idx: usize) -> Element {
        let t = self.tau_order as usize;
        let b = (idx % t) as u32;
        let ca = idx / t;
        Element {
            a: (ca % 4) as u8,
            b,
            c: (ca / 4) as u8,
        }
    }

    /// All `2^(n+5)` elements in lexicographic `(c, a, b)` order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = Element> + '_ {
        (0..self.group_order as usize).map(move |i| self.element_at(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32) -> GroupParams {
        GroupParams::new(n).unwrap()
    }

    #[test]
    fn make_group_orders() {
        assert_eq!(g(1).group_order(), 64);
        assert_eq!(g(2).group_order(), 128);
        assert!(matches!(GroupParams::new(0), Err(Error::Parameter(_))));
        for n in 1..=10 {
            let p = g(n);
            assert_eq!(p.group_order(), 4 * u64::from(p.tau_order()) * 2);
            assert_eq!(p.tau_order(), 1 << (n + 2));
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(g(1).normalize(4, 0, 0).triple(), (0, 4, 0));
        assert_eq!(g(1).normalize(0, 0, 2).triple(), (2, 2, 0));
        assert_eq!(g(2).normalize(0, 16, 0).triple(), (0, 0, 0));
    }

    #[test]
    fn normalize_negative_and_huge_exponents() {
        let p = g(3);
        assert_eq!(p.normalize(-1, 0, 0), p.inv(p.sigma()));
        assert_eq!(p.normalize(0, 0, -1), p.inv(p.rho()));
        assert_eq!(p.normalize(0, 0, i64::MIN), p.pow(p.rho(), i64::MIN));
        assert_eq!(
            p.normalize(i64::MAX, i64::MIN, 0),
            p.mul(p.pow(p.sigma(), i64::MAX), p.pow(p.tau(), i64::MIN))
        );
    }

    #[test]
    fn mul_examples() {
        let p = g(1);
        assert_eq!(p.mul(p.rho(), p.sigma()).triple(), (3, 0, 1));
        let tr = p.mul(p.tau(), p.rho());
        assert_eq!(tr.triple(), (0, 1, 1));
        assert_eq!(p.mul(tr, tr).triple(), (2, 2, 0));
        for x in p.elements() {
            assert_eq!(p.mul(x, Element::IDENTITY), x);
            assert_eq!(p.mul(Element::IDENTITY, x), x);
        }
    }

    #[test]
    fn inverse_examples() {
        let p = g(1);
        assert_eq!(p.inv(Element::IDENTITY), Element::IDENTITY);
        assert_eq!(p.inv(p.sigma()).triple(), (3, 4, 0));
        assert_eq!(p.inv(p.rho()), p.pow(p.rho(), 3));
        assert!(p.pow(p.rho(), 4).is_identity());
        for x in p.elements() {
            assert!(p.mul(x, p.inv(x)).is_identity());
            assert!(p.mul(p.inv(x), x).is_identity());
        }
    }

    #[test]
    fn pow_examples() {
        let p = g(1);
        assert_eq!(p.pow(p.rho(), 2).triple(), (2, 2, 0));
        let q = g(2);
        let str_ = q.mul(q.mul(q.sigma(), q.tau()), q.rho());
        assert_eq!(q.pow(str_, 2).triple(), (2, 12, 0));
        for x in q.elements() {
            assert!(q.pow(x, 0).is_identity());
            assert_eq!(q.pow(x, -1), q.inv(x));
        }
    }

    #[test]
    fn commutator_examples() {
        for n in 1..=4 {
            let p = g(n);
            assert!(p.commutator(p.tau(), p.sigma()).is_identity());
        }
        let p = g(1);
        assert_eq!(p.commutator(p.rho(), p.tau()).triple(), (0, 2, 0));
        for x in p.elements() {
            assert!(p.commutator(x, x).is_identity());
        }
    }

    #[test]
    fn element_order_examples() {
        for n in 1..=6 {
            let p = g(n);
            assert_eq!(p.element_order(p.tau()), 1 << (n + 2));
            assert_eq!(p.element_order(p.rho()), 4);
            assert_eq!(p.element_order(Element::IDENTITY), 1);
            assert_eq!(p.element_order(p.sigma()), 8);
        }
    }

    #[test]
    fn enumeration_is_ordered_and_complete() {
        assert_eq!(g(1).elements().len(), 64);
        assert_eq!(g(3).elements().len(), 256);
        let p = g(2);
        let all: Vec<_> = p.elements().collect();
        assert_eq!(all[0], Element::IDENTITY);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (i, x) in all.iter().enumerate() {
            assert_eq!(p.index_of(*x), i);
            assert_eq!(p.normalize(x.a.into(), x.b.into(), x.c.into()), *x);
        }
    }

    #[test]
    fn element_rejects_out_of_range() {
        let p = g(1);
        assert!(p.element(4, 0, 0).is_err());
        assert!(p.element(0, 8, 0).is_err());
        assert!(p.element(0, 0, 2).is_err());
        assert_eq!(p.element(3, 7, 1).unwrap().triple(), (3, 7, 1));
    }
}
