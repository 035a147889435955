use super::{FieldOps, Poly, PrimeField};
use crate::error::{Error, Result};

/// The residue field `F_ell[X]/(g)` for an irreducible `g`.
///
/// Only used as a coefficient field for rank computations; elements are
/// polynomials reduced modulo `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionField {
    modulus: Poly,
}

impl ExtensionField {
    /// `modulus` must be irreducible; this is not rechecked.
    pub fn new(modulus: Poly) -> Result<Self> {
        if modulus.is_constant() {
            return Err(Error::ConstantModulus);
        }
        Ok(Self { modulus: modulus.monic() })
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonconstant modulus")
    }

    pub fn base(&self) -> PrimeField {
        self.modulus.field()
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn reduce(&self, a: &Poly) -> Poly {
        a.rem(&self.modulus).expect("same characteristic")
    }
}

impl FieldOps for ExtensionField {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero(self.base())
    }

    fn one(&self) -> Poly {
        Poly::one(self.base())
    }

    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b).expect("same characteristic")
    }

    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b).expect("same characteristic")
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.mul(b).expect("same characteristic"))
    }

    fn inv(&self, a: &Poly) -> Option<Poly> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.ext_gcd(&self.modulus).ok()?;
        g.is_constant().then(|| self.reduce(&s))
    }
}
