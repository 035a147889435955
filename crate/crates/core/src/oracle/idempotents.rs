//! Primitive idempotents of a commutative semisimple algebra over `F_ell`,
//! here the center of the algebra.
//!
//! `Z = F_{ell^{d_1}} x ... x F_{ell^{d_b}}`, and its fixed points under
//! `z -> z^ell` form `B = F_ell^b`. Every element of `B` has a minimal
//! polynomial that splits into distinct linear factors, so the idempotents
//! of `B` are found by repeatedly splitting along the eigenvalues of a basis
//! of `B`. The primitive idempotents of `B` are those of `Z`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::ff::{factor_squarefree, Poly};
use crate::linalg;

use super::center::CenterAlgebra;

/// Basis of `{z in Z : z^ell = z}` in `Z`-coordinates.
pub fn berlekamp_subalgebra(za: &CenterAlgebra) -> Vec<Vec<u64>> {
    let f = za.field;
    let k = za.dim();
    let ell = f.characteristic();
    // Column i of (Frob - I) is z_i^ell - z_i.
    let mut rows = vec![vec![0u64; k]; k];
    for i in 0..k {
        let mut zi = vec![0; k];
        zi[i] = 1;
        let image = za.pow(&zi, ell);
        for (t, row) in rows.iter_mut().enumerate() {
            row[i] = if t == i { f.sub(image[t], 1) } else { image[t] };
        }
    }
    linalg::nullspace(&f, rows, k)
}

/// Minimal polynomial of `y` inside `e Z`, where `e` is an idempotent with
/// `y e = y`.
pub fn minimal_polynomial(za: &CenterAlgebra, y: &[u64], e: &[u64]) -> Poly {
    let f = za.field;
    let mut powers = vec![e.to_vec()];
    loop {
        let next = za.mul(powers.last().expect("nonempty"), y);
        if let Some(c) = linalg::solve_combination(&f, &powers, &next) {
            // y^t = sum c_i y^i.
            let mut coeffs: Vec<u64> = c.iter().map(|&ci| f.neg(ci)).collect();
            coeffs.push(1);
            return Poly::new(f, coeffs);
        }
        powers.push(next);
    }
}

/// The complete set of primitive idempotents of `Z`, in `Z`-coordinates.
pub fn primitive_idempotents<R: Rng + ?Sized>(za: &CenterAlgebra, rng: &mut R) -> Result<Vec<Vec<u64>>> {
    let f = za.field;
    let basis = berlekamp_subalgebra(za);
    let mut idempotents = vec![za.unit()];
    for beta in &basis {
        let mut refined = Vec::with_capacity(idempotents.len());
        for e in idempotents {
            let y = za.mul(beta, &e);
            let mu = minimal_polynomial(za, &y, &e);
            if mu.degree() == Some(1) {
                refined.push(e);
                continue;
            }
            let factors = factor_squarefree(&mu, rng)?;
            if factors.iter().any(|g| g.degree() != Some(1)) {
                return Err(Error::Internal(format!("fixed point with non-split minimal polynomial {mu}")));
            }
            let roots: Vec<u64> = factors.iter().map(|g| f.neg(g.coeff(0))).collect();
            for (i, &ri) in roots.iter().enumerate() {
                // Lagrange basis polynomial at ri, evaluated at y inside eZ.
                let mut acc = e.clone();
                for (j, &rj) in roots.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let denom = f.inv(f.sub(ri, rj)).expect("distinct roots");
                    let shifted: Vec<u64> = y.iter().zip(&e).map(|(&a, &b)| f.mul(f.sub(a, f.mul(rj, b)), denom)).collect();
                    acc = za.mul(&acc, &shifted);
                }
                refined.push(acc);
            }
        }
        idempotents = refined;
    }
    if idempotents.len() != basis.len() {
        return Err(Error::Internal(format!(
            "splitting stalled at {} idempotents for a {}-dimensional fixed algebra",
            idempotents.len(),
            basis.len()
        )));
    }
    for (i, e) in idempotents.iter().enumerate() {
        if za.mul(e, e) != *e || e.iter().all(|&c| c == 0) {
            return Err(Error::Internal(format!("idempotent {i} is not idempotent")));
        }
    }
    Ok(idempotents)
}

/// `dim_F(e Z)`, the degree of the residue field of the block at `e`.
pub fn field_degree(za: &CenterAlgebra, e: &[u64]) -> usize {
    let k = za.dim();
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut zi = vec![0; k];
            zi[i] = 1;
            za.mul(e, &zi)
        })
        .collect();
    linalg::rank(&za.field, rows, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{validate_spec, CocycleClass};
    use crate::ff::DEFAULT_SEED;
    use crate::oracle::algebra::build_algebra;
    use crate::oracle::center::center;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn center_algebra(p: u64, m: u64, r: u64, ell: u64, lambda: i64) -> CenterAlgebra {
        let spec = validate_spec(p, m, r).unwrap();
        let alg = build_algebra(&spec, &CocycleClass::from_integer(ell, m, lambda).unwrap()).unwrap();
        CenterAlgebra::new(&alg, center(&alg).unwrap()).unwrap()
    }

    fn degrees(za: &CenterAlgebra) -> Vec<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        let es = primitive_idempotents(za, &mut rng).unwrap();
        let mut d: Vec<usize> = es.iter().map(|e| field_degree(za, e)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn idempotents_are_orthogonal_and_complete() {
        let za = center_algebra(7, 3, 2, 2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let es = primitive_idempotents(&za, &mut rng).unwrap();
        let f = za.field;
        let mut sum = vec![0; za.dim()];
        for (i, a) in es.iter().enumerate() {
            for (j, b) in es.iter().enumerate() {
                let ab = za.mul(a, b);
                if i == j {
                    assert_eq!(&ab, a);
                } else {
                    assert!(ab.iter().all(|&c| c == 0));
                }
            }
            sum = sum.iter().zip(a).map(|(&x, &y)| f.add(x, y)).collect();
        }
        assert_eq!(sum, za.unit());
    }

    #[test]
    fn residue_field_degrees() {
        // F_2 (C_7 x| C_3) = F_2 (+) F_4 (+) M_3(F_2) (+) M_3(F_2).
        assert_eq!(degrees(&center_algebra(7, 3, 2, 2, 1)), vec![1, 1, 1, 2]);
        // F_13^alpha (C_7 x| C_3) = F_{13^3} (+) M_3(F_{13^2}).
        assert_eq!(degrees(&center_algebra(7, 3, 2, 13, 2)), vec![2, 3]);
        assert_eq!(degrees(&center_algebra(7, 3, 2, 13, 1)), vec![1, 1, 1, 2]);
    }

    #[test]
    fn berlekamp_dimension_counts_blocks() {
        assert_eq!(berlekamp_subalgebra(&center_algebra(7, 3, 2, 2, 1)).len(), 4);
        assert_eq!(berlekamp_subalgebra(&center_algebra(11, 5, 4, 2, 1)).len(), 3);
    }

    #[test]
    fn minimal_polynomial_of_unit() {
        let za = center_algebra(7, 3, 2, 2, 1);
        let one = za.unit();
        assert_eq!(minimal_polynomial(&za, &one, &one).degree(), Some(1));
    }
}
