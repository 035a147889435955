//! Rendering of decompositions, orbit analyses and `H^2` as text and JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cohomology::{CocycleClass, GroupSpec, H2Structure};
use crate::decomposition::{Decomposition, SimpleBlock};
use crate::orbits::{primary_case, CaseLabel, OrbitAnalysis};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub t: u64,
    pub h: u64,
    pub k: u64,
    pub s: u64,
    pub d: u64,
    pub r_mat: u64,
    pub case: CaseLabel,
}

/// The machine-readable form of a decomposition. Field order is part of the
/// output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub p: u64,
    pub m: u64,
    pub ell: u64,
    pub r: u64,
    pub lambda: u64,
    pub class_index: u64,
    pub f: u64,
    pub orbits: Vec<OrbitReport>,
    /// Field degrees of the commutative component.
    pub commutative: Vec<u64>,
    /// Matrix blocks from the orbits.
    pub blocks: Vec<SimpleBlock>,
    pub dimension: u64,
    /// Oracle agreement, `None` when the oracle was not run.
    pub verified: Option<bool>,
}

impl DecompositionReport {
    pub fn new(dec: &Decomposition, cls: &CocycleClass, verified: Option<bool>) -> Self {
        let m = dec.params.m;
        Self {
            p: dec.params.p,
            m,
            ell: dec.params.ell,
            r: dec.params.r,
            lambda: cls.lambda().residue(),
            class_index: cls.class_index(),
            f: dec.f,
            orbits: dec
                .orbits
                .iter()
                .map(|o| OrbitReport { t: o.t, h: o.h, k: o.k, s: o.s, d: o.d, r_mat: o.r_mat, case: primary_case(o, m) })
                .collect(),
            commutative: dec.commutative.clone(),
            blocks: dec.matrix_blocks.clone(),
            dimension: dec.dimension(),
            verified,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Commutative blocks followed by matrix blocks.
    pub fn ordered_blocks(&self) -> Vec<SimpleBlock> {
        let mut all: Vec<SimpleBlock> = self.commutative.iter().map(|&d| SimpleBlock::new(1, d)).collect();
        all.extend_from_slice(&self.blocks);
        all
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "G = C_{} x| C_{} (r = {}), ell = {}, lambda = {} (class {})",
            self.p, self.m, self.r, self.ell, self.lambda, self.class_index
        );
        let _ = writeln!(out, "{}", render_blocks(self.ell, &self.ordered_blocks()));
        let _ = writeln!(out, "dimension: {}", dimension_identity(&self.ordered_blocks()));
        match self.verified {
            Some(true) => out.push_str("oracle: MATCH\n"),
            Some(false) => out.push_str("oracle: MISMATCH\n"),
            None => {}
        }
        out
    }
}

/// `F_q` for `q = ell^d`, falling back to `F_{ell^d}` when `q` is large.
pub fn field_name(ell: u64, d: u64) -> String {
    match u32::try_from(d).ok().and_then(|d| ell.checked_pow(d)) {
        Some(q) if q < 1_000_000_000 => format!("F_{q}"),
        _ => format!("F_{{{ell}^{d}}}"),
    }
}

pub fn block_name(ell: u64, b: SimpleBlock) -> String {
    if b.n == 1 {
        field_name(ell, b.d)
    } else {
        format!("M{}({})", b.n, field_name(ell, b.d))
    }
}

/// `F_2 (+) F_4 (+) M3(F_2) (+) M3(F_2)`.
pub fn render_blocks(ell: u64, blocks: &[SimpleBlock]) -> String {
    blocks.iter().map(|&b| block_name(ell, b)).collect::<Vec<_>>().join(" (+) ")
}

/// `1 + 2 + 9 + 9 = 21`.
pub fn dimension_identity(blocks: &[SimpleBlock]) -> String {
    let terms: Vec<String> = blocks.iter().map(|b| b.dimension().to_string()).collect();
    let total: u64 = blocks.iter().map(|b| b.dimension()).sum();
    format!("{} = {total}", terms.join(" + "))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitAnalysisReport {
    pub p: u64,
    pub m: u64,
    pub ell: u64,
    pub r: u64,
    pub f: u64,
    pub frobenius_orbits: usize,
    pub orbits: Vec<OrbitReport>,
    /// Exponents of each Frobenius orbit, grouped by `C_m`-orbit.
    pub members: Vec<Vec<Vec<u64>>>,
}

impl OrbitAnalysisReport {
    pub fn new(spec: &GroupSpec, ell: u64, analysis: &OrbitAnalysis) -> Self {
        let m = spec.m();
        Self {
            p: spec.p(),
            m,
            ell,
            r: spec.r(),
            f: analysis.f,
            frobenius_orbits: analysis.frobenius_count(),
            orbits: analysis
                .orbits
                .iter()
                .map(|o| OrbitReport { t: o.t, h: o.h, k: o.k, s: o.s, d: o.d, r_mat: o.r_mat, case: primary_case(o, m) })
                .collect(),
            members: analysis.orbits.iter().map(|o| o.members.iter().map(|fo| fo.exponents().to_vec()).collect()).collect(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "f = ord_{}({}) = {}", self.p, self.ell, self.f);
        let _ = writeln!(out, "K = F_{}(zeta_{}) = {}, degree {}", self.ell, self.p, field_name(self.ell, self.f), self.f);
        let _ = writeln!(out, "Frobenius orbits on (Z/{})^x: {}", self.p, self.frobenius_orbits);
        let _ = writeln!(out, "C_{}-orbits (x -> {} x): {}", self.m, self.r, self.orbits.len());
        for (i, (o, members)) in self.orbits.iter().zip(&self.members).enumerate() {
            let reps: Vec<String> = members.iter().map(|fo| format!("{{{}}}", join(fo))).collect();
            let _ = writeln!(
                out,
                "  orbit {}: t={} h={} k={} s={} d={} r_mat={} case={}  {}",
                i + 1,
                o.t,
                o.h,
                o.k,
                o.s,
                o.d,
                o.r_mat,
                o.case,
                reps.join(" ")
            );
        }
        out
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H2Report {
    pub ell: u64,
    pub m: u64,
    pub order: u64,
    pub generator: u64,
    pub representatives: Vec<u64>,
}

impl H2Report {
    pub fn new(h2: &H2Structure) -> Self {
        Self {
            ell: h2.ell,
            m: h2.m,
            order: h2.order,
            generator: h2.generator,
            representatives: h2.representatives.iter().map(|r| r.residue()).collect(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "H^2 = F_{0}^x / (F_{0}^x)^{1}, order gcd({1}, {2}) = {3}", self.ell, self.m, self.ell - 1, self.order);
        for (i, rep) in self.representatives.iter().enumerate() {
            let _ = writeln!(out, "  class {i}: lambda = {rep} = {}^{i}", self.generator);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{h2_structure, validate_spec};
    use crate::decomposition::wedderburn;
    use crate::orbits::analyze;
    use proptest::prelude::*;

    fn report(p: u64, m: u64, r: u64, ell: u64, lambda: i64, verified: Option<bool>) -> DecompositionReport {
        let spec = validate_spec(p, m, r).unwrap();
        let cls = CocycleClass::from_integer(ell, m, lambda).unwrap();
        DecompositionReport::new(&wedderburn(&spec, &cls).unwrap(), &cls, verified)
    }

    #[test]
    fn json_field_order() {
        let json = report(7, 3, 2, 2, 1, None).to_json();
        assert_eq!(
            json,
            r#"{"p":7,"m":3,"ell":2,"r":2,"lambda":1,"class_index":0,"f":3,"orbits":[{"t":1,"h":3,"k":1,"s":3,"d":1,"r_mat":3,"case":"fixed"},{"t":1,"h":3,"k":1,"s":3,"d":1,"r_mat":3,"case":"fixed"}],"commutative":[1,2],"blocks":[{"n":3,"d":1},{"n":3,"d":1}],"dimension":21,"verified":null}"#
        );
    }

    #[test]
    fn text_rendering() {
        let text = report(7, 3, 2, 2, 1, Some(true)).render_text();
        assert!(text.contains("F_2 (+) F_4 (+) M3(F_2) (+) M3(F_2)\n"));
        assert!(text.contains("dimension: 1 + 2 + 9 + 9 = 21\n"));
        assert!(text.ends_with("oracle: MATCH\n"));
        let text = report(7, 3, 2, 13, 2, None).render_text();
        assert!(text.contains("F_2197 (+) M3(F_169)\n"));
        assert!(text.contains("3 + 18 = 21"));
        let text = report(13, 3, 3, 2, 1, Some(false)).render_text();
        assert!(text.contains("F_2 (+) F_4 (+) M3(F_16)\n"));
        assert!(text.contains("MISMATCH"));
    }

    #[test]
    fn huge_fields_use_exponent_notation() {
        assert_eq!(field_name(13, 20), "F_{13^20}");
        assert_eq!(field_name(2, 10), "F_1024");
        assert_eq!(block_name(3, SimpleBlock::new(5, 1)), "M5(F_3)");
    }

    #[test]
    fn orbit_text() {
        let spec = validate_spec(11, 5, 4).unwrap();
        let a = analyze(&spec, 2).unwrap();
        let rep = OrbitAnalysisReport::new(&spec, 2, &a);
        let text = rep.render_text();
        assert!(text.contains("t=1 h=5 k=2 s=5 d=2 r_mat=5 case=fixed"));
        assert!(text.contains("F_1024, degree 10"));
    }

    #[test]
    fn h2_text() {
        let rep = H2Report::new(&h2_structure(13, 3).unwrap());
        assert_eq!(rep.order, 3);
        assert_eq!(rep.representatives, vec![1, 2, 4]);
        assert!(rep.render_text().contains("order gcd(3, 12) = 3"));
    }

    proptest! {
        #[test]
        fn json_round_trips(idx in 0usize..64, verified in prop::option::of(any::<bool>())) {
            let cases = [(7, 3, 2), (11, 5, 4), (13, 3, 3), (13, 4, 5), (31, 5, 2), (7, 6, 3), (13, 6, 4), (5, 4, 2)];
            let ells = [2u64, 3, 5, 7, 13, 17, 19, 23];
            let (p, m, r) = cases[idx % 8];
            let ell = ells[idx / 8];
            let spec = validate_spec(p, m, r).unwrap();
            prop_assume!(spec.check_coefficients(ell).is_ok());
            for cls in CocycleClass::all(ell, m).unwrap() {
                let rep = DecompositionReport::new(&wedderburn(&spec, &cls).unwrap(), &cls, verified);
                let json = rep.to_json();
                let back = DecompositionReport::from_json(&json).unwrap();
                prop_assert_eq!(&back, &rep);
                prop_assert_eq!(back.to_json(), json);
                prop_assert_eq!(back.render_text(), rep.render_text());
            }
        }
    }
}
