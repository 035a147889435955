//! Parameter sweeps that regenerate the classification tables for small `m`
//! and compare the observed orbit shapes against reference rows.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::arith::{elements_of_order, is_prime};
use crate::cohomology::validate_spec;
use crate::error::Result;
use crate::orbits::analyze;
use crate::par::{self, Execution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// Every `m >= 2`, compared against the general rows.
    General,
    /// A single `m`; 2, 3 and 4 have dedicated reference rows.
    Fixed(u64),
}

impl TableKind {
    pub fn label(self) -> String {
        match self {
            TableKind::General => "general".to_string(),
            TableKind::Fixed(m) => format!("m={m}"),
        }
    }
}

/// Constraint a reference row places on `f = ord_p(ell)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FCondition {
    Any,
    Odd,
    Even,
    DivisibleBy(u64),
    /// `f` even but not divisible by 4.
    TwiceOdd,
}

impl FCondition {
    pub fn holds(self, f: u64) -> bool {
        match self {
            FCondition::Any => true,
            FCondition::Odd => f % 2 == 1,
            FCondition::Even => f.is_multiple_of(2),
            FCondition::DivisibleBy(q) => f.is_multiple_of(q),
            FCondition::TwiceOdd => f % 4 == 2,
        }
    }
}

/// Pattern for one of `t`, `h`, `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Slot {
    Exact(u64),
    /// Equal to `m`.
    M,
    /// Anything strictly greater than one.
    AboveOne,
    Any,
}

impl Slot {
    fn matches(self, value: u64, m: u64) -> bool {
        match self {
            Slot::Exact(v) => value == v,
            Slot::M => value == m,
            Slot::AboveOne => value > 1,
            Slot::Any => true,
        }
    }
}

/// One row of a reference classification table. `d = f / s`, `h = m / t`
/// and `r = sqrt(h s)` are implied; `n` pins the component's matrix size
/// when the row states one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReferenceRow {
    pub label: &'static str,
    pub f: FCondition,
    pub t: Slot,
    pub h: Slot,
    pub s: Slot,
    pub n: Option<u64>,
}

impl ReferenceRow {
    /// Whether an orbit with these parameters, observed for every `f` in
    /// `fs`, is described by this row.
    pub fn admits(&self, m: u64, t: u64, h: u64, s: u64, r_mat: u64, fs: &[u64]) -> bool {
        self.t.matches(t, m)
            && self.h.matches(h, m)
            && self.s.matches(s, m)
            && t * h == m
            && r_mat * r_mat == h * s
            && self.n.is_none_or(|n| n == t * r_mat)
            && fs.iter().all(|&f| self.f.holds(f) && f % s == 0)
    }
}

const GENERAL: &[ReferenceRow] = &[
    ReferenceRow { label: "t=1, s=1", f: FCondition::Any, t: Slot::Exact(1), h: Slot::M, s: Slot::Exact(1), n: None },
    ReferenceRow { label: "t=1, s>1", f: FCondition::Any, t: Slot::Exact(1), h: Slot::M, s: Slot::AboveOne, n: None },
    ReferenceRow { label: "t=m (transitive)", f: FCondition::Any, t: Slot::M, h: Slot::Exact(1), s: Slot::Exact(1), n: None },
    ReferenceRow { label: "t, s=1", f: FCondition::Any, t: Slot::Any, h: Slot::Any, s: Slot::Exact(1), n: None },
    ReferenceRow { label: "t, s>1", f: FCondition::Any, t: Slot::Any, h: Slot::Any, s: Slot::AboveOne, n: None },
];

const M2: &[ReferenceRow] = &[
    ReferenceRow { label: "f odd, C_2 fixes orbits", f: FCondition::Odd, t: Slot::Exact(1), h: Slot::Exact(2), s: Slot::Exact(1), n: Some(2) },
    ReferenceRow { label: "f even, C_2 permutes in pairs", f: FCondition::Even, t: Slot::Exact(2), h: Slot::Exact(1), s: Slot::Exact(1), n: Some(2) },
];

const M3: &[ReferenceRow] = &[
    ReferenceRow { label: "3 | f, s=3 (full Galois action)", f: FCondition::DivisibleBy(3), t: Slot::Exact(1), h: Slot::Exact(3), s: Slot::Exact(3), n: Some(3) },
    ReferenceRow { label: "f arbitrary, s=1 (trivial action)", f: FCondition::Any, t: Slot::Exact(3), h: Slot::Exact(1), s: Slot::Exact(1), n: Some(3) },
];

const M4: &[ReferenceRow] = &[
    ReferenceRow { label: "4 | f, s=1 (trivial action)", f: FCondition::DivisibleBy(4), t: Slot::Exact(1), h: Slot::Exact(4), s: Slot::Exact(1), n: Some(4) },
    ReferenceRow { label: "4 | f, s=4 (full Galois action)", f: FCondition::DivisibleBy(4), t: Slot::Exact(1), h: Slot::Exact(4), s: Slot::Exact(4), n: Some(4) },
    ReferenceRow { label: "f even, 4 does not divide f, s=2", f: FCondition::TwiceOdd, t: Slot::Exact(2), h: Slot::Exact(2), s: Slot::Exact(2), n: Some(4) },
    ReferenceRow { label: "f arbitrary, s=1 (transitive)", f: FCondition::Any, t: Slot::Exact(4), h: Slot::Exact(1), s: Slot::Exact(1), n: Some(4) },
];

pub fn reference_rows(kind: TableKind) -> &'static [ReferenceRow] {
    match kind {
        TableKind::Fixed(2) => M2,
        TableKind::Fixed(3) => M3,
        TableKind::Fixed(4) => M4,
        _ => GENERAL,
    }
}

/// One distinct `(m, t, h, s, r_mat)` pattern seen in a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObservedRow {
    pub m: u64,
    pub t: u64,
    pub h: u64,
    pub s: u64,
    pub r_mat: u64,
    /// Matrix size `t r_mat` of the component.
    pub n: u64,
    /// Every `f` for which the pattern occurred (`d = f / s` in each case).
    pub f_values: Vec<u64>,
    /// First `(p, r, ell)` found with this pattern.
    pub witness: (u64, u64, u64),
    pub occurrences: usize,
    /// Label of the first reference row that describes the pattern.
    pub reference: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub kind: TableKind,
    pub tuples: usize,
    pub rows: Vec<ObservedRow>,
}

impl TableReport {
    pub fn all_contained(&self) -> bool {
        self.rows.iter().all(|r| r.reference.is_some())
    }
}

/// `(t, h, s, r_mat, f)` of one orbit.
type Shape = (u64, u64, u64, u64, u64);

/// Sweeps every valid `(p, r)` with `p` in `p_range` (and every `m >= 2` for
/// [`TableKind::General`]) over the coefficient primes `ells`, collecting
/// the distinct orbit shapes.
pub fn table_report(kind: TableKind, ells: &[u64], p_range: RangeInclusive<u64>, exec: Execution) -> Result<TableReport> {
    let mut tuples = Vec::new();
    for p in p_range.filter(|&p| p >= 3 && is_prime(p)) {
        let ms: Vec<u64> = match kind {
            TableKind::General => (2..p).filter(|m| (p - 1) % m == 0).collect(),
            TableKind::Fixed(m) if m >= 2 && (p - 1) % m == 0 => vec![m],
            TableKind::Fixed(_) => vec![],
        };
        for m in ms {
            for r in elements_of_order(m, p) {
                for &ell in ells {
                    tuples.push((p, m, r, ell));
                }
            }
        }
    }
    let results = par::map(exec, &tuples, |&(p, m, r, ell)| -> Result<Option<Vec<Shape>>> {
        let spec = validate_spec(p, m, r)?;
        if spec.check_coefficients(ell).is_err() {
            return Ok(None);
        }
        let analysis = analyze(&spec, ell)?;
        Ok(Some(analysis.orbits.iter().map(|o| (o.t, o.h, o.s, o.r_mat, o.f)).collect()))
    });

    let mut rows: BTreeMap<(u64, u64, u64, u64, u64), ObservedRow> = BTreeMap::new();
    let mut counted = 0usize;
    for (&(p, m, r, ell), res) in tuples.iter().zip(results) {
        let Some(orbits) = res? else { continue };
        counted += 1;
        for (t, h, s, r_mat, f) in orbits {
            let row = rows.entry((m, t, h, s, r_mat)).or_insert_with(|| ObservedRow {
                m,
                t,
                h,
                s,
                r_mat,
                n: t * r_mat,
                f_values: Vec::new(),
                witness: (p, r, ell),
                occurrences: 0,
                reference: None,
            });
            row.occurrences += 1;
            if let Err(pos) = row.f_values.binary_search(&f) {
                row.f_values.insert(pos, f);
            }
        }
    }
    let reference = reference_rows(kind);
    let rows = rows
        .into_values()
        .map(|mut row| {
            row.reference = reference
                .iter()
                .find(|rr| rr.admits(row.m, row.t, row.h, row.s, row.r_mat, &row.f_values))
                .map(|rr| rr.label);
            row
        })
        .collect();
    Ok(TableReport { kind, tuples: counted, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    const ELLS: &[u64] = &[2, 3, 5, 7, 11, 13];

    fn shapes(report: &TableReport) -> Vec<(u64, u64, u64, u64)> {
        report.rows.iter().map(|r| (r.t, r.h, r.s, r.r_mat)).collect()
    }

    #[test]
    fn dihedral_sweep_finds_two_shapes_outside_the_reference_rows() {
        let report = table_report(TableKind::Fixed(2), ELLS, 3..=100, Execution::Sequential).unwrap();
        assert_eq!(shapes(&report), vec![(1, 2, 2, 2), (2, 1, 1, 1)]);
        let fixed = &report.rows[0];
        assert!(fixed.f_values.iter().all(|f| f % 2 == 0));
        let swapped = &report.rows[1];
        assert!(swapped.f_values.iter().all(|f| f % 2 == 1));
        // Both components are 2x2 matrix algebras, but over F_{ell^(f/2)} when
        // f is even, and the (t, h, s) columns of the reference rows are swapped.
        assert!(report.rows.iter().all(|r| r.n == 2));
        assert!(report.rows.iter().all(|r| r.reference.is_none()));
        assert!(!report.all_contained());
    }

    #[test]
    fn m3_sweep_is_contained() {
        let report = table_report(TableKind::Fixed(3), ELLS, 3..=150, Execution::Parallel).unwrap();
        assert!(report.all_contained(), "{report:?}");
        assert_eq!(shapes(&report), vec![(1, 3, 3, 3), (3, 1, 1, 1)]);
    }

    #[test]
    fn m4_sweep_never_shows_a_non_square_shape() {
        let report = table_report(TableKind::Fixed(4), ELLS, 3..=200, Execution::Parallel).unwrap();
        assert!(report.all_contained(), "{report:?}");
        assert!(report.rows.iter().all(|r| !(r.h == 4 && r.s == 2)));
        assert!(report.rows.iter().all(|r| r.r_mat * r.r_mat == r.h * r.s));
        assert_eq!(shapes(&report), vec![(1, 4, 4, 4), (2, 2, 2, 2), (4, 1, 1, 1)]);
    }

    #[test]
    fn general_sweep_is_contained() {
        let report = table_report(TableKind::General, ELLS, 3..=60, Execution::Parallel).unwrap();
        assert!(report.tuples > 0);
        assert!(report.all_contained());
    }

    #[test]
    fn empty_range() {
        let report = table_report(TableKind::Fixed(3), ELLS, 0..=2, Execution::Sequential).unwrap();
        assert_eq!(report.tuples, 0);
        assert!(report.rows.is_empty());
        assert!(report.all_contained());
    }

    #[test]
    fn f_conditions() {
        assert!(FCondition::TwiceOdd.holds(6));
        assert!(!FCondition::TwiceOdd.holds(4));
        assert!(FCondition::DivisibleBy(3).holds(12));
        assert!(FCondition::Odd.holds(5));
    }
}
