//! Prime fields `F_ell`, dense polynomials over them, squarefree
//! factorization, and residue fields `F_ell[X]/(g)`.

mod ext;
mod factor;
mod poly;

pub use ext::ExtensionField;
pub use factor::{factor_squarefree, factor_squarefree_seeded, is_irreducible, DEFAULT_SEED};
pub use poly::{poly_gcd, poly_mul, poly_powmod, Poly};

use crate::arith::{inv_mod, is_prime, pow_mod};
use crate::error::{Error, Result};

/// The arithmetic every coefficient field used by the dense linear algebra
/// has to provide.
pub trait FieldOps {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// Context object for arithmetic in `F_ell` on raw residues in `[0, ell)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    ell: u64,
}

impl PrimeField {
    pub fn new(ell: u64) -> Result<Self> {
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        Ok(Self { ell })
    }

    #[inline]
    pub fn characteristic(self) -> u64 {
        self.ell
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.ell
    }

    /// Reduces a signed integer into `[0, ell)`.
    pub fn reduce_signed(self, x: i64) -> u64 {
        x.rem_euclid(self.ell as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.ell {
            s - self.ell
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.ell - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.ell - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.ell
    }

    pub fn pow(self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.ell)
    }

    pub fn inv(self, a: u64) -> Option<u64> {
        inv_mod(a, self.ell).ok()
    }

    pub fn element(self, residue: u64) -> PrimeFieldElement {
        PrimeFieldElement { residue: residue % self.ell, characteristic: self.ell }
    }
}

impl FieldOps for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::add(*self, *a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::sub(*self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::mul(*self, *a, *b)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        PrimeField::inv(*self, *a)
    }
}

/// A self-describing element of `F_ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElement {
    residue: u64,
    characteristic: u64,
}

impl PrimeFieldElement {
    /// Reduces `value` into `F_ell`; `ell` must be prime.
    pub fn new(value: i64, ell: u64) -> Result<Self> {
        let field = PrimeField::new(ell)?;
        Ok(field.element(field.reduce_signed(value)))
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn characteristic(self) -> u64 {
        self.characteristic
    }

    pub fn field(self) -> PrimeField {
        PrimeField { ell: self.characteristic }
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }
}

impl std::fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.residue)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.neg(3), 4);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.inv(0), None);
        assert_eq!(f.reduce_signed(-1), 6);
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn elements() {
        let e = PrimeFieldElement::new(-12, 13).unwrap();
        assert_eq!(e.residue(), 1);
        assert_eq!(e.characteristic(), 13);
        assert!(PrimeFieldElement::new(26, 13).unwrap().is_zero());
        assert!(PrimeFieldElement::new(1, 4).is_err());
    }
}
