//! Explicit monomial algebras: `u_x u_y = c(x, y) u_{x y}` stored as a full
//! `N x N` table of `(scalar, index)` pairs.

use std::collections::VecDeque;

use crate::cohomology::{build_cocycle, CocycleClass, GroupSpec};
use crate::error::{Error, Result};
use crate::ff::PrimeField;
use crate::par::{self, Execution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitAlgebra {
    field: PrimeField,
    dim: usize,
    identity: usize,
    generators: Vec<usize>,
    table: Vec<(u64, u32)>,
}

impl ExplicitAlgebra {
    /// `table[x * dim + y] = (c, z)` means `u_x u_y = c u_z`. Scalars must be
    /// nonzero and `u_identity` must be a two-sided unit.
    pub fn new(field: PrimeField, dim: usize, identity: usize, generators: Vec<usize>, table: Vec<(u64, u32)>) -> Result<Self> {
        if dim == 0 || table.len() != dim * dim || identity >= dim {
            return Err(Error::Internal(format!("table of length {} does not describe a {dim}-dimensional algebra", table.len())));
        }
        if generators.iter().any(|&g| g >= dim) {
            return Err(Error::Internal("generator index out of range".into()));
        }
        if let Some(&(c, z)) = table.iter().find(|&&(c, z)| c == 0 || c >= field.characteristic() || z as usize >= dim) {
            return Err(Error::Internal(format!("invalid table entry ({c}, {z})")));
        }
        let alg = Self { field, dim, identity, generators, table };
        for x in 0..dim {
            if alg.product(identity, x) != (1, x) || alg.product(x, identity) != (1, x) {
                return Err(Error::Internal(format!("u_{identity} is not a unit at u_{x}")));
            }
        }
        Ok(alg)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn product(&self, x: usize, y: usize) -> (u64, usize) {
        let (c, z) = self.table[x * self.dim + y];
        (c, z as usize)
    }

    /// Replaces the scalar of `u_x u_y`.
    pub fn perturb_scalar(&mut self, x: usize, y: usize, scalar: u64) {
        let slot = &mut self.table[x * self.dim + y];
        slot.0 = self.field.reduce(scalar).max(1);
    }

    /// Redirects `u_x u_y` to a different basis element.
    pub fn perturb_index(&mut self, x: usize, y: usize, z: usize) {
        self.table[x * self.dim + y].1 = z as u32;
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::basis(self.dim, self.identity)
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let f = self.field;
        let mut out = vec![0u64; self.dim];
        let bs: Vec<(usize, u64)> = b.support().collect();
        for (x, ax) in a.support() {
            for &(y, by) in &bs {
                let (c, z) = self.product(x, y);
                out[z] = f.add(out[z], f.mul(f.mul(ax, by), c));
            }
        }
        AlgebraElement { coeffs: out }
    }

    /// Accumulates `a b` into `out` for `a` and `b` given as sparse supports.
    pub(crate) fn mul_sparse(&self, a: &[(usize, u64)], b: &[(usize, u64)], out: &mut [u64]) {
        let f = self.field;
        for &(x, ax) in a {
            for &(y, by) in b {
                let (c, z) = self.product(x, y);
                out[z] = f.add(out[z], f.mul(f.mul(ax, by), c));
            }
        }
    }

    /// Index `z` and scalar with `u_x^k = c u_z`.
    pub fn basis_power(&self, x: usize, k: usize) -> (u64, usize) {
        let f = self.field;
        let (mut c, mut z) = (1u64, self.identity);
        for _ in 0..k {
            let (c2, z2) = self.product(z, x);
            c = f.mul(c, c2);
            z = z2;
        }
        (c, z)
    }

    /// Multiplicative order of the index `x` in the basis monoid.
    pub fn basis_order(&self, x: usize) -> Option<usize> {
        let mut z = x;
        for k in 1..=self.dim {
            if z == self.identity {
                return Some(k);
            }
            z = self.product(z, x).1;
        }
        None
    }
}

/// Dense coordinate vector in the basis `u_0, ..., u_{N-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: Vec<u64>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        Self { coeffs: vec![0; dim] }
    }

    pub fn basis(dim: usize, x: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[x] = 1;
        Self { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().copied().enumerate().filter(|&(_, c)| c != 0)
    }

    pub fn add(&self, other: &Self, field: PrimeField) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| field.add(a, b)).collect() }
    }

    pub fn scale(&self, c: u64, field: PrimeField) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect() }
    }
}

/// The twisted group algebra `F_ell^alpha G` for the inflated cocycle of
/// `cls`, with basis index `j p + i` for `a^i b^j` and generators `a`, `b`.
pub fn build_algebra(spec: &GroupSpec, cls: &CocycleClass) -> Result<ExplicitAlgebra> {
    let alpha = build_cocycle(spec, cls);
    let n = spec.order();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push((alpha.get(x, y), spec.mul(x, y) as u32));
        }
    }
    ExplicitAlgebra::new(alpha.field(), n, spec.index(0, 0), vec![spec.index(1, 0), spec.index(0, 1)], table)
}

fn triple_ok(alg: &ExplicitAlgebra, x: usize, y: usize, z: usize) -> bool {
    let f = alg.field;
    let (c1, xy) = alg.product(x, y);
    let (c2, l) = alg.product(xy, z);
    let (c3, yz) = alg.product(y, z);
    let (c4, r) = alg.product(x, yz);
    l == r && f.mul(c1, c2) == f.mul(c3, c4)
}

/// Exhaustive check of `(u_x u_y) u_z = u_x (u_y u_z)` over all `N^3` triples.
/// Returns the first failing triple in lexicographic order.
pub fn verify_associativity(alg: &ExplicitAlgebra, exec: Execution) -> Result<()> {
    let n = alg.dim;
    match par::find_failure(exec, n, |x| (0..n).all(|y| (0..n).all(|z| triple_ok(alg, x, y, z)))) {
        None => Ok(()),
        Some(x) => {
            let (y, z) = (0..n)
                .flat_map(|y| (0..n).map(move |z| (y, z)))
                .find(|&(y, z)| !triple_ok(alg, x, y, z))
                .expect("failing row has a failing triple");
            Err(Error::NotAssociative { x, y, z })
        }
    }
}

/// Light's test: the set of `g` with `(u_x u_g) u_y = u_x (u_g u_y)` for all
/// `x, y` is closed under products, so checking the generators suffices once
/// they are shown to reach every basis element. Costs `2 N^2` per generator.
pub fn verify_associativity_generators(alg: &ExplicitAlgebra, exec: Execution) -> Result<()> {
    let n = alg.dim;
    for &g in &alg.generators {
        if let Some(x) = par::find_failure(exec, n, |x| (0..n).all(|z| triple_ok(alg, x, g, z))) {
            let z = (0..n).find(|&z| !triple_ok(alg, x, g, z)).expect("failing row");
            return Err(Error::NotAssociative { x, y: g, z });
        }
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([alg.identity]);
    seen[alg.identity] = true;
    while let Some(x) = queue.pop_front() {
        for &g in &alg.generators {
            let z = alg.product(x, g).1;
            if !seen[z] {
                seen[z] = true;
                queue.push_back(z);
            }
        }
    }
    match seen.iter().position(|&s| !s) {
        None => Ok(()),
        Some(x) => Err(Error::Internal(format!("generators do not reach u_{x}"))),
    }
}
