//! `dim_F(A e)` for a central idempotent `e`.
//!
//! Left multiplication by `e` commutes with right multiplication by the
//! commutative subalgebra `S = F[u_g]` generated by the first generator.
//! When `A` is a free right `S`-module on the powers of the second generator,
//! `L_e` becomes a `q x q` matrix over `S = F[X]/(X^o - c)`. `S` splits as a
//! product of fields `F[X]/(g_i)`, and the `F`-rank of `L_e` is
//! `sum_i deg(g_i) rank_{F[X]/(g_i)}(L_e mod g_i)`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::ff::{factor_squarefree, ExtensionField, Poly, PrimeField};
use crate::linalg;

use super::algebra::ExplicitAlgebra;

#[derive(Debug, Clone)]
pub struct ModuleStructure {
    field: PrimeField,
    /// Order `o` of the first generator; `u_g^o = c`.
    order: usize,
    /// Module basis `v_j = u_h^j` as `(scalar, index)`.
    basis: Vec<(u64, usize)>,
    /// For each index `y`: `(j, k, w)` with `u_y = w v_j X^k`.
    location: Vec<(usize, usize, u64)>,
    factors: Vec<Poly>,
}

impl ModuleStructure {
    /// `None` when the algebra is not free over `F[u_g]` on the powers of
    /// `u_h` (or has fewer than two generators).
    pub fn new<R: Rng + ?Sized>(alg: &ExplicitAlgebra, rng: &mut R) -> Result<Option<Self>> {
        let &[g, h, ..] = alg.generators() else { return Ok(None) };
        let n = alg.dim();
        let f = alg.field();
        let Some(order) = alg.basis_order(g) else { return Ok(None) };
        if !n.is_multiple_of(order) || order < 2 {
            return Ok(None);
        }
        let q = n / order;
        let (c, top) = alg.basis_power(g, order);
        debug_assert_eq!(top, alg.identity());
        let g_powers: Vec<(u64, usize)> = (0..order).map(|k| alg.basis_power(g, k)).collect();
        let basis: Vec<(u64, usize)> = (0..q).map(|j| alg.basis_power(h, j)).collect();
        let mut location = vec![(usize::MAX, 0, 0); n];
        for (j, &(bj, vj)) in basis.iter().enumerate() {
            for (k, &(gk, xk)) in g_powers.iter().enumerate() {
                let (c2, y) = alg.product(vj, xk);
                if location[y].0 != usize::MAX {
                    return Ok(None);
                }
                let w = f.mul(f.mul(bj, gk), c2);
                location[y] = (j, k, f.inv(w).expect("nonzero scalar"));
            }
        }
        let binomial = Poly::binomial(f, order, c);
        let factors = match factor_squarefree(&binomial, rng) {
            Ok(fs) => fs,
            Err(Error::NotSquarefree) => return Ok(None),
            Err(e) => return Err(e),
        };
        Ok(Some(Self { field: f, order, basis, location, factors }))
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `dim_F(e A)` for `e` given in algebra coordinates; equals `dim_F(A e)`
    /// for central `e`.
    pub fn block_dim(&self, alg: &ExplicitAlgebra, e: &[u64]) -> Result<usize> {
        let f = self.field;
        let q = self.rank();
        // matrix[row][col] holds the coefficients of an element of S.
        let mut matrix = vec![vec![vec![0u64; self.order]; q]; q];
        let support: Vec<(usize, u64)> = e.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
        for (col, &(bj, vj)) in self.basis.iter().enumerate() {
            for &(x, ex) in &support {
                let (c, y) = alg.product(x, vj);
                let (row, k, w) = self.location[y];
                let entry = &mut matrix[row][col][k];
                *entry = f.add(*entry, f.mul(f.mul(ex, bj), f.mul(c, w)));
            }
        }
        let mut total = 0usize;
        for g in &self.factors {
            let ext = ExtensionField::new(g.clone())?;
            let reduced: Vec<Vec<Poly>> = matrix
                .iter()
                .map(|row| row.iter().map(|coeffs| ext.reduce(&Poly::new(f, coeffs.clone()))).collect())
                .collect();
            total += linalg::rank(&ext, reduced, q) * ext.degree();
        }
        Ok(total)
    }
}

/// `dim_F(A e)` as the rank of the `N x N` matrix of right multiplication.
pub fn block_dim_dense(alg: &ExplicitAlgebra, e: &[u64]) -> usize {
    let n = alg.dim();
    let f = alg.field();
    let support: Vec<(usize, u64)> = e.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|x| {
            let mut row = vec![0u64; n];
            alg.mul_sparse(&[(x, 1)], &support, &mut row);
            row
        })
        .collect();
    linalg::rank(&f, rows, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{validate_spec, CocycleClass};
    use crate::oracle::algebra::build_algebra;
    use crate::oracle::center::{center, CenterAlgebra};
    use crate::oracle::idempotents::primitive_idempotents;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn module_rank_matches_dense_rank() {
        for (p, m, r, ell, lambda) in [(7, 3, 2, 2, 1), (7, 3, 2, 13, 2), (11, 5, 4, 2, 1), (7, 2, 6, 3, 2), (13, 4, 5, 3, 2), (5, 4, 2, 13, 2)] {
            let spec = validate_spec(p, m, r).unwrap();
            let alg = build_algebra(&spec, &CocycleClass::from_integer(ell, m, lambda).unwrap()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            let za = CenterAlgebra::new(&alg, center(&alg).unwrap()).unwrap();
            let module = ModuleStructure::new(&alg, &mut rng).unwrap().expect("free module");
            assert_eq!(module.rank(), m as usize);
            let mut total = 0;
            for e in primitive_idempotents(&za, &mut rng).unwrap() {
                let ea = za.to_algebra(&e, alg.dim());
                let fast = module.block_dim(&alg, &ea).unwrap();
                assert_eq!(fast, block_dim_dense(&alg, &ea), "{:?}", (p, m, r, ell, lambda));
                total += fast;
            }
            assert_eq!(total, alg.dim());
            let one = alg.one();
            assert_eq!(module.block_dim(&alg, one.coeffs()).unwrap(), alg.dim());
        }
    }

    #[test]
    fn zero_has_zero_block() {
        let spec = validate_spec(7, 3, 2).unwrap();
        let alg = build_algebra(&spec, &CocycleClass::trivial(2, 3).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let module = ModuleStructure::new(&alg, &mut rng).unwrap().unwrap();
        assert_eq!(module.block_dim(&alg, &[0; 21]).unwrap(), 0);
        assert_eq!(block_dim_dense(&alg, &[0; 21]), 0);
    }
}
