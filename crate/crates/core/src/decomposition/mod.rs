//! Closed-form Wedderburn decomposition of `F_ell^alpha G`.
//!
//! The trivial character of `C_p` contributes the commutative algebra
//! `F_ell^{alpha_lambda} C_m = F_ell[X]/(X^m - lambda)`, read off from the
//! factorization of `X^m - lambda`. Each `C_m`-orbit of Frobenius orbits
//! contributes one matrix algebra `M_{t r_mat}(F_{ell^d})`.

mod tables;

pub use tables::{reference_rows, table_report, FCondition, ObservedRow, ReferenceRow, TableKind, TableReport};

use serde::{Deserialize, Serialize};

use crate::arith::{divisors, euler_totient, gcd, mul_order};
use crate::cohomology::{CocycleClass, GroupSpec};
use crate::error::{Error, Result};
use crate::ff::{factor_squarefree_seeded, Poly, PrimeField, DEFAULT_SEED};
use crate::orbits::{analyze, CmOrbitData};

/// `M_n(F_{ell^d})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleBlock {
    pub n: u64,
    pub d: u64,
}

impl SimpleBlock {
    pub fn new(n: u64, d: u64) -> Self {
        Self { n, d }
    }

    /// `F_ell`-dimension `n^2 d`.
    pub fn dimension(self) -> u64 {
        self.n * self.n * self.d
    }
}

impl PartialOrd for SimpleBlock {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical display order: by field degree, then matrix size.
impl Ord for SimpleBlock {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.d, self.n).cmp(&(other.d, other.n))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecompositionParams {
    pub p: u64,
    pub m: u64,
    pub ell: u64,
    pub r: u64,
    pub class_index: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub params: DecompositionParams,
    pub f: u64,
    /// One entry per `C_m`-orbit, in canonical orbit order.
    pub orbits: Vec<CmOrbitData>,
    /// Field degrees of the commutative component, sorted.
    pub commutative: Vec<u64>,
    /// Matrix blocks, sorted by `(d, n)`.
    pub matrix_blocks: Vec<SimpleBlock>,
}

impl Decomposition {
    /// Every simple block, commutative ones as `(1, d)`, sorted.
    pub fn all_blocks(&self) -> Vec<SimpleBlock> {
        let mut blocks: Vec<SimpleBlock> = self.commutative.iter().map(|&d| SimpleBlock::new(1, d)).collect();
        blocks.extend_from_slice(&self.matrix_blocks);
        blocks.sort();
        blocks
    }

    pub fn dimension(&self) -> u64 {
        self.commutative.iter().sum::<u64>() + self.matrix_blocks.iter().map(|b| b.dimension()).sum::<u64>()
    }
}

/// Degrees of the simple components of `F_ell^{alpha_lambda} C_m`, i.e. of the
/// irreducible factors of `X^m - lambda` for the canonical `lambda` of `cls`.
pub fn commutative_component(ell: u64, m: u64, cls: &CocycleClass) -> Result<Vec<u64>> {
    commutative_component_seeded(ell, m, cls, DEFAULT_SEED)
}

pub fn commutative_component_seeded(ell: u64, m: u64, cls: &CocycleClass, seed: u64) -> Result<Vec<u64>> {
    if gcd(ell, m) != 1 {
        return Err(Error::NotSemisimple { ell, pm: m });
    }
    if cls.ell() != ell || cls.m() != m {
        return Err(Error::Internal(format!(
            "class belongs to (ell, m) = ({}, {}), not ({ell}, {m})",
            cls.ell(),
            cls.m()
        )));
    }
    let field = PrimeField::new(ell)?;
    let lambda = cls.canonical_lambda().residue();
    let factors = factor_squarefree_seeded(&Poly::binomial(field, m as usize, lambda), seed)?;
    let mut degrees: Vec<u64> = factors.iter().map(|g| g.degree().expect("nonzero") as u64).collect();
    degrees.sort_unstable();
    Ok(degrees)
}

/// Degrees of `F_ell C_m = F_ell[X]/(X^m - 1)` from cyclotomic data: each
/// `e | m` contributes `phi(e) / ord_e(ell)` fields of degree `ord_e(ell)`.
pub fn cyclic_group_algebra_degrees(ell: u64, m: u64) -> Result<Vec<u64>> {
    if gcd(ell, m) != 1 {
        return Err(Error::NotSemisimple { ell, pm: m });
    }
    let mut out = Vec::new();
    for e in divisors(m) {
        let deg = if e == 1 { 1 } else { mul_order(ell, e)? };
        out.extend(std::iter::repeat_n(deg, (euler_totient(e) / deg) as usize));
    }
    out.sort_unstable();
    Ok(out)
}

pub fn wedderburn(spec: &GroupSpec, cls: &CocycleClass) -> Result<Decomposition> {
    wedderburn_seeded(spec, cls, DEFAULT_SEED)
}

pub fn wedderburn_seeded(spec: &GroupSpec, cls: &CocycleClass, seed: u64) -> Result<Decomposition> {
    let ell = cls.ell();
    spec.check_coefficients(ell)?;
    let commutative = commutative_component_seeded(ell, spec.m(), cls, seed)?;
    let analysis = analyze(spec, ell)?;
    let mut matrix_blocks: Vec<SimpleBlock> =
        analysis.orbits.iter().map(|o| SimpleBlock::new(o.matrix_size(), o.d)).collect();
    matrix_blocks.sort();
    let dec = Decomposition {
        params: DecompositionParams { p: spec.p(), m: spec.m(), ell, r: spec.r(), class_index: cls.class_index() },
        f: analysis.f,
        orbits: analysis.orbits,
        commutative,
        matrix_blocks,
    };
    if !dimension_check(&dec) {
        return Err(Error::Internal(format!("dimension mismatch: {} != {}", dec.dimension(), spec.order())));
    }
    Ok(dec)
}

/// `sum n^2 d = p m`, commutative degrees sum to `m`, and each orbit block
/// has dimension `t m f`.
pub fn dimension_check(dec: &Decomposition) -> bool {
    let DecompositionParams { p, m, .. } = dec.params;
    if dec.commutative.iter().sum::<u64>() != m || dec.dimension() != p * m {
        return false;
    }
    if dec.orbits.len() != dec.matrix_blocks.len() {
        return false;
    }
    dec.orbits.iter().all(|o| o.dimension() == o.t * m * dec.f)
}

/// `(F_ell-dimension n d, field degree d)` of the unique simple module of each block.
pub fn irreducible_projective_degrees(dec: &Decomposition) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = dec.all_blocks().into_iter().map(|b| (b.n * b.d, b.d)).collect();
    out.sort_unstable();
    out
}
