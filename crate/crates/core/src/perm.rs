//! Finite images A4, S4, A5 and the filter asking whether a word admits the
//! essential representations onto them that a target trace polynomial forces.
//!
//! Permutations act on the right: in a product `ab`, `a` is applied first.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::poly::TargetForm;
use crate::word::{Factor, FactorSpec, Word, RELATOR_POWER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FinGroup {
    A4,
    S4,
    A5,
}

impl FinGroup {
    pub fn order(self) -> usize {
        match self {
            FinGroup::A4 => 12,
            FinGroup::S4 => 24,
            FinGroup::A5 => 60,
        }
    }

    pub fn table(self) -> &'static GroupTable {
        static TABLES: OnceLock<[GroupTable; 3]> = OnceLock::new();
        let t = TABLES.get_or_init(|| {
            [GroupTable::build(FinGroup::A4), GroupTable::build(FinGroup::S4), GroupTable::build(FinGroup::A5)]
        });
        match self {
            FinGroup::A4 => &t[0],
            FinGroup::S4 => &t[1],
            FinGroup::A5 => &t[2],
        }
    }
}

impl fmt::Display for FinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Elements as image arrays on points 0..5 (A4, S4 fix point 4), sorted
/// lexicographically; index 0 is the identity.
pub struct GroupTable {
    pub group: FinGroup,
    degree: usize,
    elements: Vec<[u8; 5]>,
    mul: Vec<u8>,
    order: Vec<u8>,
}

pub type Perm = [u8; 5];

fn compose(a: &Perm, b: &Perm) -> Perm {
    let mut out = [0u8; 5];
    for (i, o) in out.iter_mut().enumerate() {
        *o = b[a[i] as usize];
    }
    out
}

fn is_even(p: &Perm) -> bool {
    let mut seen = [false; 5];
    let mut transpositions = 0;
    for start in 0..5 {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn all_perms(degree: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<u8>, degree: usize, out: &mut Vec<Perm>) {
        if prefix.len() == degree {
            let mut p = [0, 1, 2, 3, 4];
            p[..degree].copy_from_slice(prefix);
            out.push(p);
            return;
        }
        for v in 0..degree as u8 {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, degree, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), degree, &mut out);
    out
}

impl GroupTable {
    fn build(group: FinGroup) -> Self {
        let (degree, even_only) = match group {
            FinGroup::A4 => (4, true),
            FinGroup::S4 => (4, false),
            FinGroup::A5 => (5, true),
        };
        let mut elements: Vec<Perm> = all_perms(degree).into_iter().filter(|p| !even_only || is_even(p)).collect();
        elements.sort();
        let n = elements.len();
        assert_eq!(n, group.order());
        let index = |p: &Perm| elements.binary_search(p).expect("closed under products") as u8;
        let mut mul = vec![0u8; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * n + j] = index(&compose(a, b));
            }
        }
        let order = (0..n)
            .map(|i| {
                let mut x = i;
                let mut k = 1u8;
                while x != 0 {
                    x = mul[x * n + i] as usize;
                    k += 1;
                }
                k
            })
            .collect();
        GroupTable { group, degree, elements, mul, order }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.elements.len() + b as usize]
    }

    #[inline]
    pub fn order(&self, a: u8) -> u8 {
        self.order[a as usize]
    }

    pub fn pow(&self, a: u8, e: u32) -> u8 {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element(&self, a: u8) -> Perm {
        self.elements[a as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u8> {
        self.elements.binary_search(p).ok().map(|i| i as u8)
    }

    /// Cycle notation on points 1..n, e.g. `(1,2)(3,4)`; `()` for the identity.
    pub fn cycles(&self, a: u8) -> String {
        let p = self.element(a);
        let mut seen = [false; 5];
        let mut out = String::new();
        for start in 0..self.degree {
            if seen[start] || p[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = p[i] as usize;
            }
            out.push_str(&format!("({})", cycle.join(",")));
        }
        if out.is_empty() {
            "()".to_string()
        } else {
            out
        }
    }

    /// Image of a word under `first -> x`, `second -> y`.
    pub fn eval_word(&self, w: &Word, x: u8, y: u8) -> u8 {
        w.syllables().iter().fold(0, |acc, s| {
            let g = match s.factor {
                Factor::First => x,
                Factor::Second => y,
            };
            self.mul(acc, self.pow(g, s.exp as u32))
        })
    }
}

/// Which finite image a target factor forces, and the order of the image of xy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepRequirement {
    pub group: FinGroup,
    pub xy_order: u8,
}

impl RepRequirement {
    pub const fn new(group: FinGroup, xy_order: u8) -> Self {
        RepRequirement { group, xy_order }
    }
}

impl fmt::Display for RepRequirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.group, self.xy_order)
    }
}

/// A root λ0 of the trace polynomial gives a representation into PSL(2,C)
/// in which xy has trace λ0 and W has trace 0. The possible roots pin down
/// the order of the image of xy and hence a finite triangle-group image.
pub fn requirements_of(f: &TargetForm) -> BTreeSet<RepRequirement> {
    let mut out = BTreeSet::new();
    match f.case {
        FactorSpec::TwoThree => {
            // λ = ±1: xy of order 3, tetrahedral; λ = ±√2: order 4, octahedral;
            // roots of λ⁴−3λ²+1: order 5, icosahedral
            if f.a > 0 {
                out.insert(RepRequirement::new(FinGroup::A4, 3));
            }
            if f.b > 0 {
                out.insert(RepRequirement::new(FinGroup::S4, 4));
            }
        }
        FactorSpec::ThreeThree => {
            // λ = 0: xy of order 2; λ = 1: order 3; both tetrahedral
            if f.a > 0 {
                out.insert(RepRequirement::new(FinGroup::A4, 2));
            }
            if f.b > 0 {
                out.insert(RepRequirement::new(FinGroup::A4, 3));
            }
        }
    }
    if f.c > 0 {
        out.insert(RepRequirement::new(FinGroup::A5, 5));
    }
    out
}

/// All pairs (x, y) of element indices with x of order p, y of order q and
/// xy of the required order, in lexicographic order.
pub fn essential_pairs(spec: FactorSpec, req: RepRequirement) -> Vec<(u8, u8)> {
    let t = req.group.table();
    let n = t.len() as u8;
    let mut out = Vec::new();
    for x in 0..n {
        if t.order(x) != spec.p() {
            continue;
        }
        for y in 0..n {
            if t.order(y) == spec.q() && t.order(t.mul(x, y)) == req.xy_order {
                out.push((x, y));
            }
        }
    }
    out
}

/// One pair from each orbit of [`essential_pairs`] under conjugation by the
/// full symmetric group, which acts by automorphisms on all three groups.
pub fn pair_class_reps(spec: FactorSpec, req: RepRequirement) -> Vec<(u8, u8)> {
    let t = req.group.table();
    let sym = all_perms(t.degree());
    let inv = |s: &Perm| {
        let mut out = [0, 1, 2, 3, 4];
        for (i, &v) in s.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        out
    };
    let conj = |a: u8, s: &Perm| t.index_of(&compose(&compose(&inv(s), &t.element(a)), s)).expect("normal");
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for (x, y) in essential_pairs(spec, req) {
        if seen.contains(&(x, y)) {
            continue;
        }
        reps.push((x, y));
        for s in &sym {
            seen.insert((conj(x, s), conj(y, s)));
        }
    }
    reps
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub requirement: RepRequirement,
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterOutcome {
    pub passed: bool,
    /// One witness per satisfied requirement, in requirement order.
    pub witnesses: Vec<Witness>,
    pub failed: Vec<RepRequirement>,
}

fn relator_ok(t: &GroupTable, w: &Word, x: u8, y: u8) -> bool {
    t.order(t.eval_word(w, x, y)) as u32 == RELATOR_POWER
}

/// Exhaustive test: each requirement needs some essential pair with W(X,Y)
/// of order exactly 2. Witnesses are the lexicographically first pairs.
pub fn passes_filter(w: &Word, reqs: &BTreeSet<RepRequirement>) -> FilterOutcome {
    let t_spec = w.spec();
    let mut witnesses = Vec::new();
    let mut failed = Vec::new();
    for &req in reqs {
        let t = req.group.table();
        match essential_pairs(t_spec, req).into_iter().find(|&(x, y)| relator_ok(t, w, x, y)) {
            Some((x, y)) => witnesses.push(Witness { requirement: req, x: t.cycles(x), y: t.cycles(y) }),
            None => failed.push(req),
        }
    }
    FilterOutcome { passed: failed.is_empty(), witnesses, failed }
}

/// Same decision as [`passes_filter`] using one pair per conjugacy class.
pub fn passes_filter_fast(w: &Word, reqs: &BTreeSet<RepRequirement>) -> bool {
    reqs.iter().all(|&req| {
        let t = req.group.table();
        pair_class_reps(w.spec(), req).into_iter().any(|(x, y)| relator_ok(t, w, x, y))
    })
}
