#![allow(dead_code)]

use gnlab::GroupParams;

const NONE: usize = usize::MAX;

/// Columns are `s, s^-1, t, t^-1, r, r^-1`.
type Letter = usize;

fn inv(x: Letter) -> Letter {
    x ^ 1
}

fn power(gen: usize, k: i64) -> Vec<Letter> {
    let letter = if k >= 0 { 2 * gen } else { 2 * gen + 1 };
    vec![letter; k.unsigned_abs() as usize]
}

fn word(parts: &[(usize, i64)]) -> Vec<Letter> {
    parts.iter().flat_map(|&(g, k)| power(g, k)).collect()
}

/// Relators of G_n over `s = 0, t = 1, r = 2`, read straight from the presentation.
pub fn relators(n: u32) -> Vec<Vec<Letter>> {
    let (s, t, r) = (0, 1, 2);
    let e = |k: u32| 1i64 << k;
    vec![
        word(&[(r, 4)]),
        word(&[(s, 8)]),
        word(&[(t, e(n + 2))]),
        word(&[(s, 4), (t, -e(n + 1))]),
        word(&[(r, 2), (s, -2), (t, -e(n))]),
        word(&[(t, -1), (s, -1), (t, 1), (s, 1)]),
        word(&[(r, -1), (s, -1), (r, 1), (s, 1), (s, 2)]),
        word(&[(r, -1), (t, -1), (r, 1), (t, 1), (t, -2)]),
    ]
}

/// Todd-Coxeter enumeration (HLT strategy) of the cosets of the trivial subgroup.
struct CosetTable {
    table: Vec<[usize; 6]>,
    parent: Vec<usize>,
}

impl CosetTable {
    fn new() -> Self {
        Self {
            table: vec![[NONE; 6]],
            parent: vec![0],
        }
    }

    fn define(&mut self, c: usize, x: Letter) {
        let d = self.table.len();
        self.table.push([NONE; 6]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][inv(x)] = c;
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut k = c;
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..6 {
                let f = self.table[e][x];
                if f == NONE {
                    continue;
                }
                self.table[f][inv(x)] = NONE;
                let (mu, nu) = (self.rep(e), self.rep(f));
                if self.table[mu][x] != NONE {
                    let target = self.table[mu][x];
                    self.merge(nu, target, &mut queue);
                } else if self.table[nu][inv(x)] != NONE {
                    let target = self.table[nu][inv(x)];
                    self.merge(mu, target, &mut queue);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][inv(x)] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[Letter]) {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f][w[i]] != NONE {
                f = self.table[f][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return;
            }
            while j >= i as isize && self.table[b][inv(w[j as usize])] != NONE {
                b = self.table[b][inv(w[j as usize])];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            }
            if j == i as isize {
                self.table[f][w[i]] = b;
                self.table[b][inv(w[i])] = f;
                return;
            }
            self.define(f, w[i]);
        }
    }
}

/// Regular permutation representation of G_n: `perms[g][c]` is coset `c` times generator `g`.
pub struct PermRealization {
    pub degree: usize,
    pub perms: [Vec<usize>; 3],
}

pub fn permutation_realization(n: u32) -> PermRealization {
    let rels = relators(n);
    let mut ct = CosetTable::new();
    let mut c = 0;
    while c < ct.table.len() {
        for rel in &rels {
            if ct.parent[c] != c {
                break;
            }
            ct.scan_and_fill(c, rel);
        }
        if ct.parent[c] == c {
            for x in 0..6 {
                if ct.table[c][x] == NONE {
                    ct.define(c, x);
                }
            }
        }
        c += 1;
    }
    let live: Vec<usize> = (0..ct.table.len()).filter(|&k| ct.parent[k] == k).collect();
    let mut slot = vec![NONE; ct.table.len()];
    for (i, &k) in live.iter().enumerate() {
        slot[k] = i;
    }
    let perm = |x: Letter| {
        live.iter()
            .map(|&k| slot[ct.table[k][x]])
            .collect::<Vec<_>>()
    };
    PermRealization {
        degree: live.len(),
        perms: [perm(0), perm(2), perm(4)],
    }
}

impl PermRealization {
    fn act(&self, mut c: usize, gen: usize, k: usize) -> usize {
        for _ in 0..k {
            c = self.perms[gen][c];
        }
        c
    }

    /// Image of coset 0 under `s^a t^b r^c`, i.e. the regular image of that element.
    pub fn point(&self, a: usize, b: usize, c: usize) -> usize {
        let p = self.act(0, 0, a);
        let p = self.act(p, 1, b);
        self.act(p, 2, c)
    }

    /// Permutation of `s^a t^b r^c` acting on the right.
    pub fn element_perm(&self, a: usize, b: usize, c: usize) -> Vec<usize> {
        (0..self.degree)
            .map(|x| {
                let p = self.act(x, 0, a);
                let p = self.act(p, 1, b);
                self.act(p, 2, c)
            })
            .collect()
    }
}

/// Compares the normal-form product with the permutation Cayley table on all pairs.
/// Returns the number of mismatching pairs, or an error if the realization is unusable.
pub fn cayley_mismatches(g: &GroupParams) -> Result<usize, String> {
    let real = permutation_realization(g.n());
    let order = g.group_order() as usize;
    if real.degree != order {
        return Err(format!(
            "coset enumeration gave {} cosets, expected {order}",
            real.degree
        ));
    }
    let elements: Vec<_> = g.elements().collect();
    let triple = |i: usize| {
        let (a, b, c) = elements[i].triple();
        (a as usize, b as usize, c as usize)
    };
    let mut point_to_index = vec![usize::MAX; order];
    for i in 0..order {
        let (a, b, c) = triple(i);
        let p = real.point(a, b, c);
        if point_to_index[p] != usize::MAX {
            return Err(format!(
                "normal forms {} and {} coincide",
                elements[point_to_index[p]], elements[i]
            ));
        }
        point_to_index[p] = i;
    }
    let perms: Vec<Vec<usize>> = (0..order)
        .map(|i| {
            let (a, b, c) = triple(i);
            real.element_perm(a, b, c)
        })
        .collect();
    let mut bad = 0;
    for x in 0..order {
        let px = real.point(triple(x).0, triple(x).1, triple(x).2);
        for y in 0..order {
            let oracle = point_to_index[perms[y][px]];
            let computed = g.index_of(g.mul(elements[x], elements[y]));
            if oracle != computed {
                bad += 1;
            }
        }
    }
    Ok(bad)
}

use gnlab::kernel::AbelianizationCoord;
use gnlab::lattice::{labeled_subgroup, SubgroupLabel};
use gnlab::transfer::Transfer;
use rand::Rng;

#[derive(Debug, Default)]
pub struct CrossCheck {
    pub comparisons: usize,
    pub mismatches: Vec<String>,
}

impl CrossCheck {
    fn compare<T: PartialEq + std::fmt::Debug>(&mut self, what: String, a: T, b: T) {
        self.comparisons += 1;
        if a != b {
            self.mismatches.push(format!("{what}: {a:?} vs {b:?}"));
        }
    }
}

/// Orbit form against the least-member transversal, the closed forms, `trials` random
/// transversals and `trials` random orbit representatives, for every class and subgroup.
pub fn transfer_cross_check(g: &GroupParams, trials: usize, rng: &mut impl Rng) -> CrossCheck {
    let mut out = CrossCheck::default();
    for label in SubgroupLabel::all() {
        let h = labeled_subgroup(g, label);
        let t = Transfer::new(g, &h);
        for v in AbelianizationCoord::all() {
            let x = v.lift(g);
            let tag = |what: &str| format!("n={} {label} class {v} {what}", g.n());
            let base = t.orbit_form(x).unwrap();
            out.compare(tag("transversal"), base, t.via_transversal(x));
            out.compare(
                tag("closed form"),
                Ok(base),
                t.closed_form(x).map_err(|e| e.to_string()),
            );
            for _ in 0..trials {
                let transversal: Vec<_> = t
                    .transversal()
                    .iter()
                    .map(|&r| g.mul(r, h.elements()[rng.random_range(0..h.elements().len())]))
                    .collect();
                let got = t
                    .with_transversal(x, &transversal)
                    .map_err(|e| e.to_string());
                out.compare(tag("random transversal"), Ok(base), got);

                let cosets = t.orbit_cosets(x);
                let k = cosets.modulus().elements();
                let reps: Vec<_> = cosets
                    .representatives()
                    .iter()
                    .map(|&r| g.mul(r, k[rng.random_range(0..k.len())]))
                    .collect();
                let got = t
                    .orbit_form_with_representatives(x, &reps)
                    .map_err(|e| e.to_string());
                out.compare(tag("random orbit representatives"), Ok(base), got);
            }
        }
    }
    out
}
