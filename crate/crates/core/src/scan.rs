//! Parameter-space sweeps: every valid `(p, m, r, ell, class)` up to a bound,
//! with engine invariants checked on each tuple and the oracle run on every
//! tuple whose algebra has dimension at most the cap.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{elements_of_order, exact_integer_sqrt, gcd, is_prime};
use crate::cohomology::{h2_structure, validate_spec, CocycleClass};
use crate::decomposition::{wedderburn_seeded, Decomposition, SimpleBlock};
use crate::error::{Error, Result};
use crate::ff::{factor_squarefree_seeded, Poly, PrimeField, DEFAULT_SEED};
use crate::oracle::{build_algebra, oracle_decomposition_seeded};
use crate::par::{self, Execution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub max_p: u64,
    pub ells: Vec<u64>,
    /// Largest `N = p m` on which the oracle is run.
    pub oracle_cap: usize,
    pub seed: u64,
    pub exec: Execution,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self { max_p: 31, ells: vec![2, 3, 5, 7, 13], oracle_cap: 400, seed: DEFAULT_SEED, exec: Execution::Parallel }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ScanTuple {
    pub p: u64,
    pub m: u64,
    pub r: u64,
    pub ell: u64,
    pub class_index: u64,
}

/// Every tuple with `p <= max_p`, `m | p - 1`, `m >= 2`, `r` of order `m`,
/// `ell` in the list with `gcd(ell, p m) = 1`, and every class in `H^2`.
pub fn enumerate_tuples(cfg: &ScanConfig) -> Result<Vec<ScanTuple>> {
    for &ell in &cfg.ells {
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
    }
    let mut out = Vec::new();
    for p in (3..=cfg.max_p).filter(|&p| is_prime(p)) {
        for m in (2..p).filter(|m| (p - 1) % m == 0) {
            for r in elements_of_order(m, p) {
                for &ell in &cfg.ells {
                    if gcd(ell, p * m) != 1 {
                        continue;
                    }
                    for class_index in 0..gcd(m, ell - 1) {
                        out.push(ScanTuple { p, m, r, ell, class_index });
                    }
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitShape {
    pub t: u64,
    pub h: u64,
    pub k: u64,
    pub s: u64,
    pub d: u64,
    pub r_mat: u64,
}

/// Outcome for one tuple; serialized as one JSON line by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub p: u64,
    pub m: u64,
    pub r: u64,
    pub ell: u64,
    pub class_index: u64,
    /// The `lambda` the oracle algebra was built from: a non-canonical
    /// member of the class whenever one exists.
    pub lambda: u64,
    pub f: u64,
    pub orbits: Vec<OrbitShape>,
    pub commutative: Vec<u64>,
    pub blocks: Vec<SimpleBlock>,
    pub violations: Vec<String>,
    /// `None` when `p m` exceeds the cap.
    pub oracle: Option<Vec<SimpleBlock>>,
    pub ok: bool,
}

impl ScanRecord {
    pub fn tuple(&self) -> ScanTuple {
        ScanTuple { p: self.p, m: self.m, r: self.r, ell: self.ell, class_index: self.class_index }
    }

    pub fn all_blocks(&self) -> Vec<SimpleBlock> {
        let mut all: Vec<SimpleBlock> = self.commutative.iter().map(|&d| SimpleBlock::new(1, d)).collect();
        all.extend_from_slice(&self.blocks);
        all.sort();
        all
    }
}

/// Structural identities every decomposition must satisfy; returns one
/// message per violation.
pub fn structural_violations(dec: &Decomposition, frobenius_count: u64) -> Vec<String> {
    let p = dec.params.p;
    let m = dec.params.m;
    let f = dec.f;
    let mut out = Vec::new();
    if dec.dimension() != p * m {
        out.push(format!("sum n^2 d = {} != p m = {}", dec.dimension(), p * m));
    }
    if dec.commutative.iter().sum::<u64>() != m {
        out.push(format!("commutative degrees {:?} do not sum to m", dec.commutative));
    }
    let t_sum: u64 = dec.orbits.iter().map(|o| o.t).sum();
    if t_sum != (p - 1) / f || frobenius_count != (p - 1) / f {
        out.push(format!("sum t = {t_sum}, {frobenius_count} Frobenius orbits, (p - 1)/f = {}", (p - 1) / f));
    }
    for o in &dec.orbits {
        let tag = format!("orbit (t,h,s) = ({}, {}, {})", o.t, o.h, o.s);
        if o.t * o.h != m {
            out.push(format!("{tag}: t h != m"));
        }
        if o.d * o.s != f {
            out.push(format!("{tag}: d s != f"));
        }
        if !gcd(o.h, f).is_multiple_of(o.s) {
            out.push(format!("{tag}: s does not divide gcd(h, f)"));
        }
        match exact_integer_sqrt(o.h * o.s) {
            Some(root) if root == o.r_mat => {}
            Some(root) => out.push(format!("{tag}: r_mat = {} but sqrt(h s) = {root}", o.r_mat)),
            None => out.push(format!("{tag}: h s = {} is not a square", o.h * o.s)),
        }
    }
    out
}

/// A member of the class other than its canonical representative, namely
/// `canonical * g^m`, when that differs.
fn alternate_lambda(cls: &CocycleClass) -> Result<u64> {
    let field = cls.lambda().field();
    let h2 = h2_structure(cls.ell(), cls.m())?;
    Ok(field.mul(cls.canonical_lambda().residue(), field.pow(h2.generator, cls.m())))
}

fn factor_degrees(field: PrimeField, m: u64, lambda: u64, seed: u64) -> Result<Vec<u64>> {
    let mut d: Vec<u64> = factor_squarefree_seeded(&Poly::binomial(field, m as usize, lambda), seed)?
        .iter()
        .map(|g| g.degree().expect("nonzero") as u64)
        .collect();
    d.sort_unstable();
    Ok(d)
}

pub fn check_tuple(t: ScanTuple, cfg: &ScanConfig) -> ScanRecord {
    let mut record = ScanRecord {
        p: t.p,
        m: t.m,
        r: t.r,
        ell: t.ell,
        class_index: t.class_index,
        lambda: 0,
        f: 0,
        orbits: Vec::new(),
        commutative: Vec::new(),
        blocks: Vec::new(),
        violations: Vec::new(),
        oracle: None,
        ok: false,
    };
    if let Err(e) = run_checks(t, cfg, &mut record) {
        record.violations.push(format!("error: {e}"));
    }
    record.ok = record.violations.is_empty();
    record
}

fn run_checks(t: ScanTuple, cfg: &ScanConfig, record: &mut ScanRecord) -> Result<()> {
    let spec = validate_spec(t.p, t.m, t.r)?;
    let field = PrimeField::new(t.ell)?;
    let canonical = CocycleClass::all(t.ell, t.m)?
        .into_iter()
        .nth(t.class_index as usize)
        .ok_or_else(|| Error::Internal(format!("no class {} for ell = {}, m = {}", t.class_index, t.ell, t.m)))?;
    let lambda = alternate_lambda(&canonical)?;
    let cls = CocycleClass::from_integer(t.ell, t.m, lambda as i64)?;
    record.lambda = lambda;
    if cls.class_index() != t.class_index {
        record.violations.push(format!("lambda = {lambda} classified as {}", cls.class_index()));
    }

    let dec = wedderburn_seeded(&spec, &cls, cfg.seed)?;
    record.f = dec.f;
    record.orbits = dec.orbits.iter().map(|o| OrbitShape { t: o.t, h: o.h, k: o.k, s: o.s, d: o.d, r_mat: o.r_mat }).collect();
    record.commutative = dec.commutative.clone();
    record.blocks = dec.matrix_blocks.clone();
    let frobenius_count = (t.p - 1) / dec.f;
    record.violations.extend(structural_violations(&dec, frobenius_count));

    // The commutative part is X^m - lambda for any lambda in the class.
    let raw = factor_degrees(field, t.m, lambda, cfg.seed)?;
    if raw != dec.commutative {
        record.violations.push(format!("X^m - {lambda} has degrees {raw:?}, engine gives {:?}", dec.commutative));
    }

    if spec.order() <= cfg.oracle_cap {
        let alg = build_algebra(&spec, &cls)?;
        let oracle = oracle_decomposition_seeded(&alg, cfg.seed, Execution::Sequential)?;
        if oracle.blocks != dec.all_blocks() {
            record.violations.push(format!("oracle {:?} != engine {:?}", oracle.blocks, dec.all_blocks()));
        }
        record.oracle = Some(oracle.blocks);
    }
    Ok(())
}

/// Class-independence of the matrix part within one `(p, m, r, ell)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassGroup {
    pub p: u64,
    pub m: u64,
    pub r: u64,
    pub ell: u64,
    pub classes: usize,
    /// Number of distinct full decompositions across the classes.
    pub distinct_decompositions: usize,
    /// Engine matrix blocks agree across classes.
    pub engine_matrix_invariant: bool,
    /// Oracle blocks with the engine's commutative part removed agree
    /// across classes (`None` if the oracle did not run on every class).
    pub oracle_matrix_invariant: Option<bool>,
}

impl ClassGroup {
    pub fn ok(&self) -> bool {
        self.engine_matrix_invariant && self.oracle_matrix_invariant != Some(false)
    }
}

fn remove_commutative(all: &[SimpleBlock], commutative: &[u64]) -> Option<Vec<SimpleBlock>> {
    let mut rest = all.to_vec();
    for &d in commutative {
        let pos = rest.iter().position(|b| *b == SimpleBlock::new(1, d))?;
        rest.remove(pos);
    }
    Some(rest)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub groups: Vec<ClassGroup>,
}

impl ScanReport {
    pub fn tuples(&self) -> usize {
        self.records.len()
    }

    pub fn oracle_runs(&self) -> usize {
        self.records.iter().filter(|r| r.oracle.is_some()).count()
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.ok).count() + self.groups.iter().filter(|g| !g.ok()).count()
    }

    pub fn ok(&self) -> bool {
        self.failures() == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{} tuples, {} oracle runs, {} class groups, {} failures",
            self.tuples(),
            self.oracle_runs(),
            self.groups.len(),
            self.failures()
        )
    }
}

fn group_classes(records: &[ScanRecord]) -> Vec<ClassGroup> {
    let mut by_key: BTreeMap<(u64, u64, u64, u64), Vec<&ScanRecord>> = BTreeMap::new();
    for r in records {
        by_key.entry((r.p, r.m, r.r, r.ell)).or_default().push(r);
    }
    by_key
        .into_iter()
        .map(|((p, m, r, ell), rs)| {
            let engine_matrix_invariant = rs.windows(2).all(|w| w[0].blocks == w[1].blocks);
            let oracle_matrix_invariant = rs
                .iter()
                .map(|r| r.oracle.as_ref().and_then(|o| remove_commutative(o, &r.commutative)))
                .collect::<Option<Vec<_>>>()
                .map(|parts| parts.windows(2).all(|w| w[0] == w[1]));
            let mut full: Vec<Vec<SimpleBlock>> = rs.iter().map(|r| r.all_blocks()).collect();
            full.sort();
            full.dedup();
            ClassGroup {
                p,
                m,
                r,
                ell,
                classes: rs.len(),
                distinct_decompositions: full.len(),
                engine_matrix_invariant,
                oracle_matrix_invariant,
            }
        })
        .collect()
}

pub fn run_scan(cfg: &ScanConfig) -> Result<ScanReport> {
    let tuples = enumerate_tuples(cfg)?;
    let records = par::map(cfg.exec, &tuples, |&t| check_tuple(t, cfg));
    let groups = group_classes(&records);
    Ok(ScanReport { records, groups })
}

pub fn run_scan_sequential(cfg: &ScanConfig) -> Result<ScanReport> {
    run_scan(&ScanConfig { exec: Execution::Sequential, ..cfg.clone() })
}

pub fn run_scan_parallel(cfg: &ScanConfig) -> Result<ScanReport> {
    run_scan(&ScanConfig { exec: Execution::Parallel, ..cfg.clone() })
}
