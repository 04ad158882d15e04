//! Depth-first enumeration of the pair lists sharing one sequence of
//! entries greater than one, with the permutation images of every prefix
//! carried along so each leaf costs a few table lookups.

use super::crude::is_crude_fixed;
use super::modp;
use crate::perm::{pair_class_reps, requirements_of, GroupTable};
use crate::poly::{expand_target, generator, TargetForm};
use crate::word::{Factor, FactorSpec, Syllable, RELATOR_POWER};

struct RepTables {
    table: &'static GroupTable,
    req: usize,
    /// `(xy)^e` and `(xy²)^e` for e = 0..=n
    pow: [Vec<u8>; 2],
}

/// Everything that depends on the form but not on the work unit.
pub(crate) struct KernelSetup {
    len: usize,
    ones: usize,
    reps: Vec<RepTables>,
    nreq: usize,
    runs: [Vec<modp::Mat>; 2],
    target: u64,
}

pub(crate) const EVAL_POINT: i64 = 2;

impl KernelSetup {
    pub fn new(form: TargetForm, len: usize, ones: usize) -> Self {
        assert_eq!(form.case, FactorSpec::TwoThree);
        let n = form.degree();
        let spec = FactorSpec::TwoThree;
        let mut reps = Vec::new();
        let reqs = requirements_of(&form);
        for (ri, req) in reqs.iter().enumerate() {
            let t = req.group.table();
            for (x, y) in pair_class_reps(spec, *req) {
                let p1 = t.mul(x, y);
                let p2 = t.mul(x, t.mul(y, y));
                let pows = |p: u8| (0..=n as u32).map(|e| t.pow(p, e)).collect::<Vec<u8>>();
                reps.push(RepTables { table: t, req: ri, pow: [pows(p1), pows(p2)] });
            }
        }
        let u = modp::gen_at(generator(spec, Syllable::new(Factor::First, 1)), EVAL_POINT);
        let v1 = modp::gen_at(generator(spec, Syllable::new(Factor::Second, 1)), EVAL_POINT);
        let v2 = modp::gen_at(generator(spec, Syllable::new(Factor::Second, 2)), EVAL_POINT);
        let powers = |m: modp::Mat| {
            let mut out = vec![modp::IDENTITY];
            for _ in 0..n {
                let last = *out.last().expect("nonempty");
                out.push(modp::mat_mul(&last, &m));
            }
            out
        };
        let runs = [powers(modp::mat_mul(&u, &v1)), powers(modp::mat_mul(&u, &v2))];
        let target = modp::from_big(&expand_target(&form).eval(&EVAL_POINT.into()));
        KernelSetup { len, ones, reps, nreq: reqs.len(), runs, target }
    }
}

/// Lists surviving each filter stage within one unit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct UnitCounts {
    pub crude: u64,
    pub perm: u64,
    pub modp: u64,
}

pub(crate) struct UnitOutput {
    pub counts: UnitCounts,
    pub survivors: Vec<Vec<u32>>,
}

struct Walker<'a> {
    s: &'a KernelSetup,
    bigs: &'a [u32],
    list: Vec<u32>,
    /// permutation images of the prefix of length d, for each rep
    state: Vec<u8>,
    mats: Vec<modp::Mat>,
    mats_valid: usize,
    passed: Vec<bool>,
    out: UnitOutput,
}

impl Walker<'_> {
    #[inline]
    fn set(&mut self, d: usize, v: u32) {
        self.list[d] = v;
        let nr = self.s.reps.len();
        let parity = d & 1;
        for (r, rep) in self.s.reps.iter().enumerate() {
            let prev = self.state[d * nr + r];
            self.state[(d + 1) * nr + r] = rep.table.mul(prev, rep.pow[parity][v as usize]);
        }
        self.mats_valid = self.mats_valid.min(d);
    }

    fn dfs(&mut self, d: usize, ones_left: usize, next_big: usize) {
        if d == self.s.len {
            self.leaf();
            return;
        }
        if ones_left > 0 {
            self.set(d, 1);
            self.dfs(d + 1, ones_left - 1, next_big);
        }
        if next_big < self.bigs.len() {
            let v = self.bigs[next_big];
            // even slots beyond the first may not exceed it (crude key)
            if d == 0 || d & 1 == 1 || v <= self.list[0] {
                self.set(d, v);
                self.dfs(d + 1, ones_left, next_big + 1);
            }
        }
    }

    fn leaf(&mut self) {
        let s = self.s;
        if !is_crude_fixed(&self.list) {
            return;
        }
        self.out.counts.crude += 1;
        let nr = s.reps.len();
        let fin = &self.state[s.len * nr..];
        self.passed.iter_mut().for_each(|p| *p = false);
        for (r, rep) in s.reps.iter().enumerate() {
            if rep.table.order(fin[r]) as u32 == RELATOR_POWER {
                self.passed[rep.req] = true;
            }
        }
        if !self.passed.iter().all(|&p| p) {
            return;
        }
        self.out.counts.perm += 1;
        for i in self.mats_valid..s.len {
            self.mats[i + 1] = modp::mat_mul(&self.mats[i], &s.runs[i & 1][self.list[i] as usize]);
        }
        self.mats_valid = s.len;
        if modp::trace(&self.mats[s.len]) != s.target {
            return;
        }
        self.out.counts.modp += 1;
        self.out.survivors.push(self.list.clone());
    }
}

/// Runs one work unit: all lists whose entries greater than one are `bigs`,
/// in order.
pub(crate) fn run_unit(s: &KernelSetup, bigs: &[u32]) -> UnitOutput {
    assert_eq!(bigs.len() + s.ones, s.len);
    let nr = s.reps.len();
    let mut w = Walker {
        s,
        bigs,
        list: vec![0; s.len],
        state: vec![0; (s.len + 1) * nr],
        mats: vec![modp::IDENTITY; s.len + 1],
        mats_valid: 0,
        passed: vec![false; s.nreq],
        out: UnitOutput { counts: UnitCounts::default(), survivors: Vec::new() },
    };
    w.dfs(0, s.ones, 0);
    w.out
}
