//! Distinct-degree and equal-degree factorization of squarefree polynomials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{poly_gcd, poly_powmod, Poly};
use crate::arith::prime_factors;
use crate::error::{Error, Result};

/// Seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

/// Factors a squarefree nonconstant polynomial into distinct monic
/// irreducibles, sorted by degree then coefficients.
///
/// The random stream only drives equal-degree splitting; the returned
/// factorization is the same for every seed.
pub fn factor_squarefree<R: Rng + ?Sized>(poly: &Poly, rng: &mut R) -> Result<Vec<Poly>> {
    if poly.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !is_squarefree(poly)? {
        return Err(Error::NotSquarefree);
    }
    let mut factors = Vec::new();
    for (block, degree) in distinct_degree(&poly.monic())? {
        equal_degree(&block, degree, rng, &mut factors)?;
    }
    factors.sort();
    Ok(factors)
}

pub fn factor_squarefree_seeded(poly: &Poly, seed: u64) -> Result<Vec<Poly>> {
    factor_squarefree(poly, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn is_squarefree(poly: &Poly) -> Result<bool> {
    let d = poly.derivative();
    if d.is_zero() {
        return Ok(false);
    }
    Ok(poly_gcd(poly, &d)?.is_constant())
}

/// Splits a monic squarefree polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let field = f.field();
    let ell = field.characteristic();
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        // h = X^(ell^d) mod rest
        h = poly_powmod(&h, ell, &rest)?;
        let g = poly_gcd(&h.sub(&x)?, &rest)?;
        if !g.is_constant() {
            rest = rest.div_rem(&g)?.0;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

fn equal_degree<R: Rng + ?Sized>(g: &Poly, d: usize, rng: &mut R, out: &mut Vec<Poly>) -> Result<()> {
    let n = g.degree().expect("nonzero");
    if n == d {
        out.push(g.clone());
        return Ok(());
    }
    let field = g.field();
    let ell = field.characteristic();
    loop {
        let a = Poly::new(field, (0..n).map(|_| rng.gen_range(0..ell)).collect());
        if a.is_constant() {
            continue;
        }
        let candidate = if ell == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut term = a.clone();
            let mut trace = a.clone();
            for _ in 1..d {
                term = poly_powmod(&term, 2, g)?;
                trace = trace.add(&term)?;
            }
            poly_gcd(&trace, g)?
        } else {
            // a^((ell^d - 1) / 2) = (a^(1 + ell + ... + ell^(d-1)))^((ell - 1) / 2)
            let mut norm = a.rem(g)?;
            for _ in 1..d {
                norm = poly_powmod(&norm, ell, g)?.mul(&a)?.rem(g)?;
            }
            let half = poly_powmod(&norm, (ell - 1) / 2, g)?;
            poly_gcd(&half.sub(&Poly::one(field))?, g)?
        };
        let cd = candidate.degree().unwrap_or(0);
        if cd > 0 && cd < n {
            let other = g.div_rem(&candidate)?.0;
            equal_degree(&candidate, d, rng, out)?;
            equal_degree(&other, d, rng, out)?;
            return Ok(());
        }
    }
}

/// Rabin's irreducibility test.
pub fn is_irreducible(g: &Poly) -> Result<bool> {
    let n = match g.degree() {
        None | Some(0) => return Ok(false),
        Some(n) => n,
    };
    let field = g.field();
    let ell = field.characteristic();
    let x = Poly::x(field);
    let frob_iter = |k: usize| -> Result<Poly> {
        let mut h = x.rem(g)?;
        for _ in 0..k {
            h = poly_powmod(&h, ell, g)?;
        }
        Ok(h)
    };
    if frob_iter(n)? != x.rem(g)? {
        return Ok(false);
    }
    for q in prime_factors(n as u64) {
        let h = frob_iter(n / q as usize)?;
        if !poly_gcd(&h.sub(&x)?, g)?.is_constant() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::mul_order;
    use crate::ff::PrimeField;
    use proptest::prelude::*;

    fn fp(ell: u64) -> PrimeField {
        PrimeField::new(ell).unwrap()
    }

    fn degrees(factors: &[Poly]) -> Vec<usize> {
        let mut d: Vec<usize> = factors.iter().map(|f| f.degree().unwrap()).collect();
        d.sort();
        d
    }

    fn product(field: PrimeField, factors: &[Poly]) -> Poly {
        factors.iter().fold(Poly::one(field), |acc, f| acc.mul(f).unwrap())
    }

    #[test]
    fn cyclotomic_examples() {
        let f2 = fp(2);
        let x3 = factor_squarefree_seeded(&Poly::binomial(f2, 3, 1), 1).unwrap();
        assert_eq!(x3, vec![Poly::from_signed(f2, &[1, 1]), Poly::from_signed(f2, &[1, 1, 1])]);
        assert_eq!(degrees(&factor_squarefree_seeded(&Poly::binomial(f2, 5, 1), 1).unwrap()), vec![1, 4]);
        assert_eq!(degrees(&factor_squarefree_seeded(&Poly::binomial(f2, 7, 1), 1).unwrap()), vec![1, 3, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        let f3 = fp(3);
        let sq = Poly::from_signed(f3, &[1, 2, 1]); // (X + 1)^2
        assert_eq!(factor_squarefree_seeded(&sq, 0), Err(Error::NotSquarefree));
        assert_eq!(factor_squarefree_seeded(&Poly::constant(f3, 2), 0), Err(Error::ConstantPolynomial));
        // X^3 - 1 = (X - 1)^3 in characteristic 3.
        assert_eq!(factor_squarefree_seeded(&Poly::binomial(f3, 3, 1), 0), Err(Error::NotSquarefree));
    }

    #[test]
    fn x_to_the_p_minus_one_matches_orbit_count() {
        for &ell in &[2u64, 3, 5, 7, 13] {
            for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
                if p == ell {
                    continue;
                }
                let f = mul_order(ell, p).unwrap() as usize;
                let factors = factor_squarefree_seeded(&Poly::binomial(fp(ell), p as usize, 1), 7).unwrap();
                let mut expected = vec![1];
                expected.extend(std::iter::repeat_n(f, (p as usize - 1) / f));
                expected.sort();
                assert_eq!(degrees(&factors), expected, "ell={ell} p={p}");
            }
        }
    }

    #[test]
    fn result_is_seed_independent() {
        let f13 = fp(13);
        let poly = Poly::binomial(f13, 12, 1);
        let a = factor_squarefree_seeded(&poly, 1).unwrap();
        let b = factor_squarefree_seeded(&poly, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 12);
    }

    #[test]
    fn rabin_test() {
        let f2 = fp(2);
        assert!(is_irreducible(&Poly::from_signed(f2, &[1, 1, 0, 1])).unwrap());
        assert!(!is_irreducible(&Poly::from_signed(f2, &[1, 0, 1])).unwrap());
        assert!(!is_irreducible(&Poly::one(f2)).unwrap());
    }

    fn arb_squarefree() -> impl Strategy<Value = Poly> {
        (prop::sample::select(vec![2u64, 3, 5, 7, 13]), prop::collection::vec(0u64..13, 2..=21))
            .prop_map(|(ell, coeffs)| Poly::new(fp(ell), coeffs))
            .prop_filter("squarefree nonconstant", |p| !p.is_constant() && is_squarefree(p).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn factors_multiply_back_and_are_irreducible(poly in arb_squarefree(), seed in any::<u64>()) {
            let factors = factor_squarefree_seeded(&poly, seed).unwrap();
            prop_assert_eq!(product(poly.field(), &factors), poly.monic());
            let ell = poly.field().characteristic();
            for g in &factors {
                prop_assert!(g.is_monic());
                let n = g.degree().unwrap();
                // X^(ell^n) = X mod g, with n minimal.
                let x = Poly::x(g.field()).rem(g).unwrap();
                let mut h = x.clone();
                for k in 1..=n {
                    h = poly_powmod(&h, ell, g).unwrap();
                    prop_assert_eq!(h == x, k == n);
                }
            }
        }
    }
}
