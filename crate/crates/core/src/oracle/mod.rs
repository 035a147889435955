//! Brute-force decomposition of an explicitly tabulated algebra, independent
//! of the orbit formulas.
//!
//! From the multiplication table alone: check associativity, compute the
//! center, split it into primitive idempotents `e`, and read each block
//! `A e = M_n(F_{ell^d})` off `d = dim(e Z)` and `n^2 d = dim(A e)`.

mod algebra;
mod blocks;
mod center;
mod idempotents;

pub use algebra::{build_algebra, verify_associativity, verify_associativity_generators, AlgebraElement, ExplicitAlgebra};
pub use blocks::{block_dim_dense, ModuleStructure};
pub use center::{center, center_dense, Center, CenterAlgebra};
pub use idempotents::{berlekamp_subalgebra, field_degree, minimal_polynomial, primitive_idempotents};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::exact_integer_sqrt;
use crate::decomposition::{Decomposition, SimpleBlock};
use crate::error::{Error, Result};
use crate::ff::DEFAULT_SEED;
use crate::par::Execution;

/// One block found by the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub block: SimpleBlock,
    /// `dim_F(A e)`.
    pub dimension: usize,
    /// `dim_F(e Z)`.
    pub center_dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleDecomposition {
    /// Sorted by `(d, n)`.
    pub blocks: Vec<SimpleBlock>,
    pub reports: Vec<BlockReport>,
    pub center_dimension: usize,
}

pub fn block_report(alg: &ExplicitAlgebra, za: &CenterAlgebra, module: Option<&ModuleStructure>, e: &[u64]) -> Result<BlockReport> {
    let d = field_degree(za, e);
    let ea = za.to_algebra(e, alg.dim());
    let dimension = match module {
        Some(m) => m.block_dim(alg, &ea)?,
        None => block_dim_dense(alg, &ea),
    };
    let n = if d > 0 && dimension % d == 0 { exact_integer_sqrt((dimension / d) as u64) } else { None };
    let n = n.ok_or_else(|| Error::Internal(format!("block of dimension {dimension} over a degree-{d} center is not a matrix algebra")))?;
    Ok(BlockReport { block: SimpleBlock::new(n, d as u64), dimension, center_dimension: d })
}

pub fn oracle_decomposition(alg: &ExplicitAlgebra) -> Result<OracleDecomposition> {
    oracle_decomposition_seeded(alg, DEFAULT_SEED, Execution::default())
}

pub fn oracle_decomposition_seeded(alg: &ExplicitAlgebra, seed: u64, exec: Execution) -> Result<OracleDecomposition> {
    verify_associativity_generators(alg, exec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let za = CenterAlgebra::new(alg, center(alg)?)?;
    let module = ModuleStructure::new(alg, &mut rng)?;
    let idempotents = primitive_idempotents(&za, &mut rng)?;
    let mut reports = idempotents.iter().map(|e| block_report(alg, &za, module.as_ref(), e)).collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| r.block);
    let total: usize = reports.iter().map(|r| r.dimension).sum();
    if total != alg.dim() {
        return Err(Error::Internal(format!("blocks cover {total} of {} dimensions", alg.dim())));
    }
    Ok(OracleDecomposition { blocks: reports.iter().map(|r| r.block).collect(), reports, center_dimension: za.dim() })
}

/// Engine and oracle block lists side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub engine: Vec<SimpleBlock>,
    pub oracle: Vec<SimpleBlock>,
}

impl Verification {
    pub fn matches(&self) -> bool {
        self.engine == self.oracle
    }
}

pub fn compare(dec: &Decomposition, oracle: &OracleDecomposition) -> Verification {
    Verification { engine: dec.all_blocks(), oracle: oracle.blocks.clone() }
}
