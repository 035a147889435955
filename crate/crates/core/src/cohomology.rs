//! Group presentation, second cohomology with coefficients in `F_ell^x`, and
//! the normalized inflated 2-cocycle.
//!
//! Elements of `G = C_p x|_r C_m` are written in the normal form `a^i b^j`
//! and stored as the basis index `j * p + i`. With `b a b^-1 = a^r` the
//! product is `(i, j)(k, l) = (i + k r^j mod p, j + l mod m)`.
//!
//! `H^2(G, F_ell^x)` is cyclic of order `gcd(m, ell - 1)`. A class is named
//! by its index relative to the least primitive root `g` of `F_ell`: `lambda`
//! lies in the class `dlog_g(lambda) mod gcd(m, ell - 1)`. The representative
//! cocycle is inflated from `C_m`:
//! `alpha(a^i b^j, a^k b^l) = lambda` if `j + l >= m`, and `1` otherwise.

use crate::arith::{discrete_log_in_subgroup, gcd, is_prime, least_primitive_root, mul_order, pow_mod};
use crate::error::{Error, Result};
use crate::ff::{PrimeField, PrimeFieldElement};
use crate::par::{self, Execution};

/// Validated presentation data of `C_p x|_r C_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    p: u64,
    m: u64,
    r: u64,
    r_powers: Vec<u64>,
}

/// Checks the presentation: `p` an odd prime, `m >= 2`, `m | p - 1`, and
/// `r` of multiplicative order exactly `m` modulo `p`.
pub fn validate_spec(p: u64, m: u64, r: u64) -> Result<GroupSpec> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if m < 2 {
        return Err(Error::DegenerateM(m));
    }
    if !(p - 1).is_multiple_of(m) {
        return Err(Error::MDoesNotDividePMinusOne { m, p });
    }
    let r = r % p;
    if r == 0 {
        return Err(Error::WrongOrder { r, p, expected: m, actual: 0 });
    }
    let actual = mul_order(r, p)?;
    if actual != m {
        return Err(Error::WrongOrder { r, p, expected: m, actual });
    }
    let r_powers = (0..m).map(|j| pow_mod(r, j, p)).collect();
    Ok(GroupSpec { p, m, r, r_powers })
}

impl GroupSpec {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// `|G| = p m`.
    pub fn order(&self) -> usize {
        (self.p * self.m) as usize
    }

    /// `r^j mod p` for `j` in `[0, m)`.
    pub fn r_pow(&self, j: u64) -> u64 {
        self.r_powers[(j % self.m) as usize]
    }

    #[inline]
    pub fn index(&self, i: u64, j: u64) -> usize {
        ((j % self.m) * self.p + i % self.p) as usize
    }

    /// Inverse of [`GroupSpec::index`]: `(i, j)` with `x = a^i b^j`.
    #[inline]
    pub fn coords(&self, x: usize) -> (u64, u64) {
        let x = x as u64;
        (x % self.p, x / self.p)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (i, j) = self.coords(x);
        let (k, l) = self.coords(y);
        self.index((i + k * self.r_powers[j as usize]) % self.p, j + l)
    }

    /// Checks that `F_ell^alpha G` is semisimple: `ell` prime with `gcd(ell, pm) = 1`.
    pub fn check_coefficients(&self, ell: u64) -> Result<()> {
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        if ell == self.p {
            return Err(Error::EllEqualsP { ell });
        }
        let pm = self.p * self.m;
        if gcd(ell, pm) != 1 {
            return Err(Error::NotSemisimple { ell, pm });
        }
        Ok(())
    }
}

/// `F_ell^x / (F_ell^x)^m` with one representative `g^i` per coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Structure {
    pub ell: u64,
    pub m: u64,
    pub order: u64,
    pub generator: u64,
    pub representatives: Vec<PrimeFieldElement>,
}

pub fn h2_structure(ell: u64, m: u64) -> Result<H2Structure> {
    let field = PrimeField::new(ell)?;
    if m < 2 {
        return Err(Error::DegenerateM(m));
    }
    let generator = least_primitive_root(ell)?;
    let order = gcd(m, ell - 1);
    let representatives = (0..order).map(|i| field.element(field.pow(generator, i))).collect();
    Ok(H2Structure { ell, m, order, generator, representatives })
}

/// A cohomology class in `H^2(G, F_ell^x)`, remembered together with the
/// unit `lambda` the caller supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CocycleClass {
    ell: u64,
    m: u64,
    lambda: PrimeFieldElement,
    class_index: u64,
    class_count: u64,
    generator: u64,
}

impl CocycleClass {
    /// Reduces an integer literal into `F_ell` and classifies it.
    pub fn from_integer(ell: u64, m: u64, lambda: i64) -> Result<Self> {
        classify_lambda(ell, m, PrimeFieldElement::new(lambda, ell)?)
    }

    /// The trivial class, represented by `lambda = 1`.
    pub fn trivial(ell: u64, m: u64) -> Result<Self> {
        Self::from_integer(ell, m, 1)
    }

    /// Every class, each represented by its canonical `g^i`.
    pub fn all(ell: u64, m: u64) -> Result<Vec<Self>> {
        let h2 = h2_structure(ell, m)?;
        h2.representatives.into_iter().map(|rep| classify_lambda(ell, m, rep)).collect()
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn lambda(&self) -> PrimeFieldElement {
        self.lambda
    }

    pub fn class_index(&self) -> u64 {
        self.class_index
    }

    /// `|H^2| = gcd(m, ell - 1)`.
    pub fn class_count(&self) -> u64 {
        self.class_count
    }

    pub fn is_trivial(&self) -> bool {
        self.class_index == 0
    }

    /// The canonical representative `g^class_index` of this class.
    pub fn canonical_lambda(&self) -> PrimeFieldElement {
        let field = self.lambda.field();
        field.element(field.pow(self.generator, self.class_index))
    }

    /// Same class, with `lambda` replaced by its canonical representative.
    pub fn canonical(&self) -> Self {
        Self { lambda: self.canonical_lambda(), ..*self }
    }
}

pub fn classify_lambda(ell: u64, m: u64, lambda: PrimeFieldElement) -> Result<CocycleClass> {
    if lambda.characteristic() != ell {
        return Err(Error::CharacteristicMismatch(lambda.characteristic(), ell));
    }
    if lambda.is_zero() {
        return Err(Error::ZeroLambda { ell });
    }
    let h2 = h2_structure(ell, m)?;
    let dlog = discrete_log_in_subgroup(h2.generator, lambda.residue(), ell, ell - 1)
        .ok_or_else(|| Error::Internal(format!("{} is not a power of the primitive root {}", lambda, h2.generator)))?;
    Ok(CocycleClass {
        ell,
        m,
        lambda,
        class_index: dlog % h2.order,
        class_count: h2.order,
        generator: h2.generator,
    })
}

/// A normalized 2-cocycle `G x G -> F_ell^x`, tabulated over basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    order: usize,
    field: PrimeField,
    values: Vec<u64>,
}

impl Cocycle {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u64 {
        self.values[x * self.order + y]
    }

    /// Overwrites one value; used to build deliberately broken cocycles.
    pub fn set(&mut self, x: usize, y: usize, value: u64) {
        self.values[x * self.order + y] = self.field.reduce(value);
    }

    pub fn is_identically_one(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }
}

/// Inflation of `alpha_lambda` along `G -> C_m`, using the raw `lambda` of `cls`.
pub fn build_cocycle(spec: &GroupSpec, cls: &CocycleClass) -> Cocycle {
    let n = spec.order();
    let field = cls.lambda.field();
    let lambda = cls.lambda.residue();
    let mut values = vec![1u64; n * n];
    for x in 0..n {
        let (_, j) = spec.coords(x);
        for y in 0..n {
            let (_, l) = spec.coords(y);
            if j + l >= spec.m {
                values[x * n + y] = lambda;
            }
        }
    }
    Cocycle { order: n, field, values }
}

/// Exhaustive check of normalization and the cocycle identity
/// `alpha(x,y) alpha(xy,z) = alpha(y,z) alpha(x,yz)` over all `|G|^3` triples.
pub fn is_cocycle(alpha: &Cocycle, spec: &GroupSpec) -> bool {
    is_cocycle_with(alpha, spec, Execution::default())
}

pub fn is_cocycle_with(alpha: &Cocycle, spec: &GroupSpec, exec: Execution) -> bool {
    let n = spec.order();
    if alpha.order != n {
        return false;
    }
    let identity = spec.index(0, 0);
    if (0..n).any(|x| alpha.get(x, identity) != 1 || alpha.get(identity, x) != 1 || alpha.get(x, x) == 0) {
        return false;
    }
    let f = alpha.field;
    par::all_indices(exec, n, |x| {
        (0..n).all(|y| {
            let xy = spec.mul(x, y);
            let a_xy = alpha.get(x, y);
            (0..n).all(|z| {
                let lhs = f.mul(a_xy, alpha.get(xy, z));
                let rhs = f.mul(alpha.get(y, z), alpha.get(x, spec.mul(y, z)));
                lhs == rhs
            })
        })
    })
}

/// `alpha` is trivial on `C_p x C_p` and on pairs `(a^i, b^j)`.
pub fn has_normal_form(alpha: &Cocycle, spec: &GroupSpec) -> bool {
    let (p, m) = (spec.p(), spec.m());
    (0..p).all(|i| (0..p).all(|k| alpha.get(spec.index(i, 0), spec.index(k, 0)) == 1))
        && (0..p).all(|i| (0..m).all(|j| alpha.get(spec.index(i, 0), spec.index(0, j)) == 1))
}
