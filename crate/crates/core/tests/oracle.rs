use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wedderburn_core::arith::elements_of_order;
use wedderburn_core::oracle::{
    block_dim_dense, block_report, build_algebra, center, center_dense, oracle_decomposition, oracle_decomposition_seeded,
    primitive_idempotents, CenterAlgebra, ExplicitAlgebra, ModuleStructure,
};
use wedderburn_core::{validate_spec, wedderburn, CocycleClass, Execution, SimpleBlock};

fn algebra(p: u64, m: u64, r: u64, ell: u64, lambda: i64) -> ExplicitAlgebra {
    let spec = validate_spec(p, m, r).unwrap();
    build_algebra(&spec, &CocycleClass::from_integer(ell, m, lambda).unwrap()).unwrap()
}

/// `(block_dim, d, n)` for every block, sorted.
fn reports(alg: &ExplicitAlgebra) -> Vec<(usize, usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let za = CenterAlgebra::new(alg, center(alg).unwrap()).unwrap();
    let module = ModuleStructure::new(alg, &mut rng).unwrap();
    let mut out: Vec<_> = primitive_idempotents(&za, &mut rng)
        .unwrap()
        .iter()
        .map(|e| {
            let r = block_report(alg, &za, module.as_ref(), e).unwrap();
            (r.dimension, r.center_dimension, r.block.n)
        })
        .collect();
    out.sort_unstable();
    out
}

#[test]
fn product_table_examples() {
    // Index j p + i for a^i b^j.
    let alg = algebra(7, 3, 2, 2, 1);
    assert_eq!(alg.product(1, 7), (1, 8));
    assert_eq!(alg.product(7, 1), (1, 9));
    let alg = algebra(7, 3, 2, 13, 2);
    assert_eq!(alg.product(14, 7), (2, 0));
    for i in 0..7 {
        for k in 0..7 {
            assert_eq!(alg.product(i, k), (1, (i + k) % 7));
        }
    }
}

#[test]
fn block_reports() {
    // F_2 (+) F_4 (+) M_3(F_16): 1 + 2 + 36.
    assert_eq!(reports(&algebra(13, 3, 3, 2, 1)), vec![(1, 1, 1), (2, 2, 1), (36, 4, 3)]);
    // F_2197 (+) M_3(F_169): 3 + 18.
    assert_eq!(reports(&algebra(7, 3, 2, 13, 2)), vec![(3, 3, 1), (18, 2, 3)]);
}

#[test]
fn center_dimensions_and_idempotent_counts() {
    for ((p, m, r, ell, lambda), dim, count) in [((7, 3, 2, 2, 1), 5, 4), ((7, 3, 2, 13, 2), 5, 2)] {
        let alg = algebra(p, m, r, ell, lambda);
        let za = CenterAlgebra::new(&alg, center(&alg).unwrap()).unwrap();
        assert_eq!(za.dim(), dim);
        let es = primitive_idempotents(&za, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(es.len(), count);
        let unit = za.unit();
        let sum = es.iter().fold(vec![0; za.dim()], |acc, e| acc.iter().zip(e).map(|(&a, &b)| (a + b) % ell).collect());
        assert_eq!(sum, unit);
    }
}

#[test]
fn oracle_examples() {
    let b = |v: &[(u64, u64)]| {
        let mut x: Vec<SimpleBlock> = v.iter().map(|&(n, d)| SimpleBlock::new(n, d)).collect();
        x.sort();
        x
    };
    assert_eq!(oracle_decomposition(&algebra(7, 3, 2, 2, 1)).unwrap().blocks, b(&[(1, 1), (1, 2), (3, 1), (3, 1)]));
    assert_eq!(oracle_decomposition(&algebra(11, 5, 4, 3, 1)).unwrap().blocks, b(&[(1, 1), (1, 4), (5, 1), (5, 1)]));
    assert_eq!(oracle_decomposition(&algebra(7, 3, 2, 13, 2)).unwrap().blocks, b(&[(1, 3), (3, 2)]));
}

/// A valid `(p, m, r, ell, lambda)` with `p m <= 120`, chosen by index.
fn small_tuple() -> impl Strategy<Value = (u64, u64, u64, u64, i64)> {
    let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29];
    let ells = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43];
    (0usize..primes.len(), 0usize..64, 0usize..64, 0usize..ells.len(), 1i64..200).prop_filter_map(
        "invalid tuple",
        move |(pi, mi, ri, li, lambda)| {
            let p = primes[pi];
            let ms: Vec<u64> = (2..p).filter(|m| (p - 1).is_multiple_of(*m) && p * m <= 120).collect();
            let m = *ms.get(mi % ms.len().max(1))?;
            let rs = elements_of_order(m, p);
            let r = rs[ri % rs.len()];
            let ell = ells[li];
            if ell == p || (p * m).is_multiple_of(ell) || lambda % ell as i64 == 0 {
                return None;
            }
            Some((p, m, r, ell, lambda))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_matches_engine_for_any_seed((p, m, r, ell, lambda) in small_tuple(), seed in any::<u64>()) {
        let spec = validate_spec(p, m, r).unwrap();
        let cls = CocycleClass::from_integer(ell, m, lambda).unwrap();
        let alg = build_algebra(&spec, &cls).unwrap();
        let oracle = oracle_decomposition_seeded(&alg, seed, Execution::Sequential).unwrap();
        prop_assert_eq!(&oracle.blocks, &wedderburn(&spec, &cls).unwrap().all_blocks());
        let d_sum: usize = oracle.reports.iter().map(|r| r.center_dimension).sum();
        prop_assert_eq!(d_sum, oracle.center_dimension);
    }

    #[test]
    fn fast_paths_match_dense_linear_algebra((p, m, r, ell, lambda) in small_tuple()) {
        let alg = algebra(p, m, r, ell, lambda);
        let c = center(&alg).unwrap();
        prop_assert_eq!(c.dense(alg.dim()), center_dense(&alg));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let module = ModuleStructure::new(&alg, &mut rng).unwrap().expect("free module");
        let za = CenterAlgebra::new(&alg, c).unwrap();
        for e in primitive_idempotents(&za, &mut rng).unwrap() {
            let ea = za.to_algebra(&e, alg.dim());
            prop_assert_eq!(module.block_dim(&alg, &ea).unwrap(), block_dim_dense(&alg, &ea));
        }
    }
}
