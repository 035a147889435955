//! Frobenius orbits of the nontrivial characters of `C_p`, the action of
//! `C_m` on them, and the per-orbit parameters that fix the shape of each
//! noncommutative simple component.
//!
//! A character `a -> zeta^x` is identified with its exponent `x` in
//! `(Z/pZ)^x`. Frobenius acts by `x -> ell x` and the generator `b` acts by
//! `x -> r x`, so every statement here is arithmetic modulo `p`.

use serde::{Deserialize, Serialize};

use crate::arith::{discrete_log_in_subgroup, exact_integer_sqrt, gcd, mul_mod, mul_order, pow_mod};
use crate::cohomology::GroupSpec;
use crate::error::{Error, Result};

/// One `<ell>`-coset in `(Z/pZ)^x`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrobeniusOrbit {
    exponents: Vec<u64>,
}

impl FrobeniusOrbit {
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Least exponent in the orbit.
    pub fn key(&self) -> u64 {
        self.exponents[0]
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.exponents.binary_search(&x).is_ok()
    }
}

/// Partition of `{1, ..., p-1}` under `x -> ell x mod p`, sorted by least element.
pub fn frobenius_orbits(p: u64, ell: u64) -> Result<Vec<FrobeniusOrbit>> {
    if ell.is_multiple_of(p) {
        return Err(Error::EllEqualsP { ell });
    }
    mul_order(ell, p)?;
    let mut seen = vec![false; p as usize];
    let mut orbits = Vec::new();
    for start in 1..p {
        if seen[start as usize] {
            continue;
        }
        let mut exponents = Vec::new();
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            exponents.push(x);
            x = mul_mod(x, ell, p);
        }
        exponents.sort_unstable();
        orbits.push(FrobeniusOrbit { exponents });
    }
    Ok(orbits)
}

/// Groups Frobenius orbits into orbits of `C_m = <b>` acting by `x -> r x`.
/// Groups are sorted by their least key, members by key.
pub fn cm_orbits(frob: &[FrobeniusOrbit], spec: &GroupSpec) -> Vec<Vec<FrobeniusOrbit>> {
    let p = spec.p();
    let mut owner = vec![usize::MAX; p as usize];
    for (idx, orbit) in frob.iter().enumerate() {
        for &x in orbit.exponents() {
            owner[x as usize] = idx;
        }
    }
    let image: Vec<usize> = frob.iter().map(|o| owner[mul_mod(o.key(), spec.r(), p) as usize]).collect();
    let mut seen = vec![false; frob.len()];
    let mut groups = Vec::new();
    for start in 0..frob.len() {
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            members.push(frob[cur].clone());
            cur = image[cur];
        }
        members.sort();
        groups.push(members);
    }
    groups.sort_by_key(|g| g[0].key());
    groups
}

/// Parameters of one `C_m`-orbit of Frobenius orbits.
///
/// `t` orbits are permuted, each with stabilizer of size `h = m / t`. The
/// stabilizer generator `b^t` acts on `K = F_{ell^f}` as `Frob^k`, an
/// automorphism of order `s`; the fixed field has degree `d = f / s` and the
/// component is `M_{t r_mat}(F_{ell^d})` with `r_mat = sqrt(h s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CmOrbitData {
    pub members: Vec<FrobeniusOrbit>,
    pub f: u64,
    pub t: u64,
    pub h: u64,
    pub k: u64,
    pub s: u64,
    pub d: u64,
    pub r_mat: u64,
}

impl CmOrbitData {
    /// Matrix size of the simple component.
    pub fn matrix_size(&self) -> u64 {
        self.t * self.r_mat
    }

    /// `F_ell`-dimension of the simple component.
    pub fn dimension(&self) -> u64 {
        self.matrix_size().pow(2) * self.d
    }
}

pub fn stabilizer_params(cm_orbit: &[FrobeniusOrbit], spec: &GroupSpec, ell: u64) -> Result<CmOrbitData> {
    let (p, m) = (spec.p(), spec.m());
    let f = mul_order(ell, p)?;
    let t = cm_orbit.len() as u64;
    if t == 0 || m % t != 0 {
        return Err(Error::Internal(format!("orbit size {t} does not divide m = {m}")));
    }
    let h = m / t;
    let target = pow_mod(spec.r(), t, p);
    let k = discrete_log_in_subgroup(ell, target, p, f).ok_or_else(|| {
        Error::Internal(format!("r^t = {target} is not a power of ell = {ell} modulo {p}"))
    })?;
    let s = if k == 0 { 1 } else { f / gcd(f, k) };
    let d = f / s;
    if !gcd(h, f).is_multiple_of(s) {
        return Err(Error::Internal(format!("s = {s} does not divide gcd(h, f) = gcd({h}, {f})")));
    }
    let r_mat = exact_integer_sqrt(h * s)
        .ok_or_else(|| Error::Internal(format!("h * s = {} is not a perfect square", h * s)))?;
    Ok(CmOrbitData { members: cm_orbit.to_vec(), f, t, h, k, s, d, r_mat })
}

/// Which special shape an orbit has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseLabel {
    General,
    /// `h = 1`: `C_m` permutes the orbits freely.
    Transitive,
    /// `t = 1`: every orbit is fixed by all of `C_m`.
    Fixed,
    /// `s = 1`: the stabilizer acts trivially on `K`.
    TrivialGalois,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::General => "general",
            CaseLabel::Transitive => "transitive",
            CaseLabel::Fixed => "fixed",
            CaseLabel::TrivialGalois => "trivial-galois",
        }
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// All special cases that apply, most specific first; `[General]` if none.
pub fn classify_case(data: &CmOrbitData, m: u64) -> Vec<CaseLabel> {
    let mut labels = Vec::new();
    if data.h == 1 && data.t == m {
        labels.push(CaseLabel::Transitive);
    }
    if data.t == 1 && data.h == m {
        labels.push(CaseLabel::Fixed);
    }
    if data.s == 1 {
        labels.push(CaseLabel::TrivialGalois);
    }
    if labels.is_empty() {
        labels.push(CaseLabel::General);
    }
    labels
}

/// The label shown in reports: the first entry of [`classify_case`].
pub fn primary_case(data: &CmOrbitData, m: u64) -> CaseLabel {
    classify_case(data, m)[0]
}

/// Full orbit analysis for one `(spec, ell)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitAnalysis {
    pub f: u64,
    pub frobenius: Vec<FrobeniusOrbit>,
    pub orbits: Vec<CmOrbitData>,
}

impl OrbitAnalysis {
    /// Number of Frobenius orbits of nontrivial characters, `(p - 1) / f`.
    pub fn frobenius_count(&self) -> usize {
        self.frobenius.len()
    }
}

pub fn analyze(spec: &GroupSpec, ell: u64) -> Result<OrbitAnalysis> {
    let frobenius = frobenius_orbits(spec.p(), ell)?;
    let f = mul_order(ell, spec.p())?;
    let orbits = cm_orbits(&frobenius, spec)
        .iter()
        .map(|group| stabilizer_params(group, spec, ell))
        .collect::<Result<Vec<_>>>()?;
    Ok(OrbitAnalysis { f, frobenius, orbits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{elements_of_order, is_prime};
    use crate::cohomology::validate_spec;

    fn exps(orbits: &[FrobeniusOrbit]) -> Vec<Vec<u64>> {
        orbits.iter().map(|o| o.exponents().to_vec()).collect()
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(exps(&frobenius_orbits(7, 2).unwrap()), vec![vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(
            exps(&frobenius_orbits(11, 3).unwrap()),
            vec![vec![1, 3, 4, 5, 9], vec![2, 6, 7, 8, 10]]
        );
        assert_eq!(exps(&frobenius_orbits(11, 2).unwrap()), vec![(1..=10).collect::<Vec<u64>>()]);
        assert_eq!(frobenius_orbits(7, 7), Err(Error::EllEqualsP { ell: 7 }));
        assert_eq!(frobenius_orbits(7, 14), Err(Error::EllEqualsP { ell: 14 }));
    }

    #[test]
    fn cm_orbit_examples() {
        let g = validate_spec(7, 3, 2).unwrap();
        let groups = cm_orbits(&frobenius_orbits(7, 2).unwrap(), &g);
        assert_eq!(groups.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1]);

        let groups = cm_orbits(&frobenius_orbits(7, 13).unwrap(), &g);
        assert_eq!(groups.len(), 1);
        assert_eq!(exps(&groups[0]), vec![vec![1, 6], vec![2, 5], vec![3, 4]]);

        let g = validate_spec(11, 5, 4).unwrap();
        let groups = cm_orbits(&frobenius_orbits(11, 3).unwrap(), &g);
        assert_eq!(groups.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1]);
    }

    fn params(p: u64, m: u64, r: u64, ell: u64) -> Vec<(u64, u64, u64, u64, u64, u64)> {
        let g = validate_spec(p, m, r).unwrap();
        analyze(&g, ell).unwrap().orbits.iter().map(|o| (o.t, o.h, o.k, o.s, o.d, o.r_mat)).collect()
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(params(11, 5, 4, 2), vec![(1, 5, 2, 5, 2, 5)]);
        assert_eq!(params(13, 3, 3, 2), vec![(1, 3, 4, 3, 4, 3)]);
        assert_eq!(params(7, 3, 2, 13), vec![(3, 1, 0, 1, 2, 1)]);
        assert_eq!(params(7, 3, 2, 2), vec![(1, 3, 1, 3, 1, 3), (1, 3, 1, 3, 1, 3)]);
        assert_eq!(params(11, 5, 4, 3), vec![(1, 5, 4, 5, 1, 5), (1, 5, 4, 5, 1, 5)]);
    }

    #[test]
    fn cases() {
        let g = validate_spec(7, 3, 2).unwrap();
        let a = analyze(&g, 13).unwrap();
        assert_eq!(classify_case(&a.orbits[0], 3), vec![CaseLabel::Transitive, CaseLabel::TrivialGalois]);
        assert_eq!(primary_case(&a.orbits[0], 3), CaseLabel::Transitive);

        let g = validate_spec(11, 5, 4).unwrap();
        let a = analyze(&g, 2).unwrap();
        assert_eq!(classify_case(&a.orbits[0], 5), vec![CaseLabel::Fixed]);

        let synthetic = CmOrbitData { members: vec![], f: 4, t: 2, h: 2, k: 0, s: 1, d: 4, r_mat: 1 };
        assert_eq!(classify_case(&synthetic, 4), vec![CaseLabel::TrivialGalois]);
        let synthetic = CmOrbitData { s: 2, ..synthetic };
        assert_eq!(classify_case(&synthetic, 4), vec![CaseLabel::General]);
    }

    fn grid() -> Vec<(GroupSpec, u64)> {
        let mut out = Vec::new();
        for p in (3..=100u64).filter(|&p| is_prime(p)) {
            for m in (2..p).filter(|m| (p - 1) % m == 0) {
                for r in elements_of_order(m, p) {
                    let spec = validate_spec(p, m, r).unwrap();
                    for ell in [2u64, 3, 5, 7, 11, 13] {
                        if spec.check_coefficients(ell).is_ok() {
                            out.push((spec.clone(), ell));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn structural_identities_on_grid() {
        for (spec, ell) in grid() {
            let a = analyze(&spec, ell).unwrap();
            let total_t: u64 = a.orbits.iter().map(|o| o.t).sum();
            assert_eq!(total_t as usize, a.frobenius_count());
            assert_eq!(a.frobenius_count() as u64 * a.f, spec.p() - 1);
            for o in &a.orbits {
                assert_eq!(o.t * o.h, spec.m());
                assert_eq!(o.d * o.s, o.f);
                assert_eq!(o.r_mat * o.r_mat, o.h * o.s);
                assert_eq!(gcd(o.h, o.f) % o.s, 0);
                assert_eq!(pow_mod(spec.r(), o.t, spec.p()), pow_mod(ell, o.k, spec.p()));
                // A faithful action makes the stabilizer embed into Gal(K/F_ell).
                assert_eq!(o.s, o.h);
            }
        }
    }

    #[test]
    fn frobenius_and_cm_actions_commute_on_orbits() {
        for (spec, ell) in grid().into_iter().filter(|(s, _)| s.p() <= 43) {
            let p = spec.p();
            let frob = frobenius_orbits(p, ell).unwrap();
            for o in &frob {
                let via_r_then_ell: Vec<u64> = o.exponents().iter().map(|&x| mul_mod(mul_mod(x, spec.r(), p), ell, p)).collect();
                let via_ell_then_r: Vec<u64> = o.exponents().iter().map(|&x| mul_mod(mul_mod(x, ell, p), spec.r(), p)).collect();
                let target = frob.iter().find(|q| q.contains(via_r_then_ell[0])).unwrap();
                assert!(via_r_then_ell.iter().all(|&x| target.contains(x)));
                assert!(via_ell_then_r.iter().all(|&x| target.contains(x)));
            }
        }
    }

    #[test]
    fn dihedral_patterns_follow_parity_of_f() {
        // For m = 2 (r = -1): if f is odd, -1 is not a power of ell, so the
        // orbits x<ell> and -x<ell> are swapped; if f is even, -1 = ell^(f/2)
        // fixes every orbit and acts on K with order 2.
        for (spec, ell) in grid().into_iter().filter(|(s, _)| s.m() == 2) {
            for o in analyze(&spec, ell).unwrap().orbits {
                if o.f % 2 == 1 {
                    assert_eq!((o.t, o.h, o.s), (2, 1, 1));
                } else {
                    assert_eq!((o.t, o.h, o.s), (1, 2, 2));
                }
            }
        }
    }
}
