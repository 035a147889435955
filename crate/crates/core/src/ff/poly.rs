use std::fmt;

use super::PrimeField;
use crate::error::{Error, Result};

/// Dense univariate polynomial over `F_ell`, lowest degree first, with no
/// trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        trim(&mut coeffs);
        Self { field, coeffs }
    }

    /// Builds a polynomial from signed coefficients, lowest degree first.
    pub fn from_signed(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.reduce_signed(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Self::new(field, vec![c])
    }

    pub fn x(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn monomial(field: PrimeField, c: u64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::new(field, coeffs)
    }

    /// `X^n - c`.
    pub fn binomial(field: PrimeField, n: usize, c: u64) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(field.reduce(c));
        coeffs[n] = 1;
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::CharacteristicMismatch(
                self.field.characteristic(),
                other.field.characteristic(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let f = self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::new(f, out))
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let f = self.field;
        let dd = divisor.degree().ok_or(Error::ConstantModulus)?;
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = f.sub(rem[k], f.mul(c, b));
            }
        }
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        Self::new(
            f,
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.reduce(i as u64), c)).collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&q.mul(&s1)?)?;
            let t2 = t0.sub(&q.mul(&t1)?)?;
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        let inv = f.inv(r0.leading()).expect("nonzero gcd");
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }
}

fn trim(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
            .then_with(|| self.field.characteristic().cmp(&other.field.characteristic()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "X")?,
                (1, c) => write!(f, "{c}X")?,
                (i, 1) => write!(f, "X^{i}")?,
                (i, c) => write!(f, "{c}X^{i}")?,
            }
        }
        Ok(())
    }
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Result<Poly> {
    a.mul(b)
}

/// Monic gcd; errors when both inputs are zero.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    a.check(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroGcd);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.rem(&y)?;
        x = y;
        y = r;
    }
    Ok(x.monic())
}

/// `base^exponent mod modulus` by square-and-multiply.
pub fn poly_powmod(base: &Poly, mut exponent: u64, modulus: &Poly) -> Result<Poly> {
    base.check(modulus)?;
    if modulus.is_constant() {
        return Err(Error::ConstantModulus);
    }
    let mut result = Poly::one(base.field);
    let mut b = base.rem(modulus)?;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = result.mul(&b)?.rem(modulus)?;
        }
        exponent >>= 1;
        if exponent > 0 {
            b = b.mul(&b)?.rem(modulus)?;
        }
    }
    result.rem(modulus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(ell: u64) -> PrimeField {
        PrimeField::new(ell).unwrap()
    }

    #[test]
    fn multiplication() {
        let f2 = fp(2);
        let x1 = Poly::from_signed(f2, &[1, 1]);
        assert_eq!(poly_mul(&x1, &x1).unwrap(), Poly::from_signed(f2, &[1, 0, 1]));

        let f5 = fp(5);
        let p = Poly::from_signed(f5, &[3, 0, 2, 4]);
        assert_eq!(poly_mul(&p, &Poly::one(f5)).unwrap(), p);
        let a = Poly::from_signed(f5, &[-1, 1]);
        let b = Poly::from_signed(f5, &[1, 1, 1]);
        assert_eq!(poly_mul(&a, &b).unwrap(), Poly::binomial(f5, 3, 1));

        assert!(poly_mul(&a, &x1).is_err());
    }

    #[test]
    fn gcds() {
        let f7 = fp(7);
        let a = Poly::binomial(f7, 2, 1);
        let b = Poly::from_signed(f7, &[-1, 1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), b);

        let p = Poly::from_signed(f7, &[2, 0, 3]);
        assert_eq!(poly_gcd(&p, &Poly::zero(f7)).unwrap(), p.monic());
        assert_eq!(poly_gcd(&Poly::zero(f7), &Poly::zero(f7)), Err(Error::ZeroGcd));

        // X^3 - 1 = (X - 1)(X^2 + X + 1) and X^2 - 1 = (X - 1)(X + 1) over F_5;
        // X^2 + X + 1 has no root in F_5 and X + 1 does not divide it.
        let f5 = fp(5);
        let g = poly_gcd(&Poly::binomial(f5, 3, 1), &Poly::binomial(f5, 2, 1)).unwrap();
        assert_eq!(g, Poly::from_signed(f5, &[-1, 1]));
    }

    #[test]
    fn powmod() {
        let f2 = fp(2);
        let modulus = Poly::from_signed(f2, &[-1, -1, 0, 1]); // X^3 - X - 1 = X^3 + X + 1
        let x = Poly::x(f2);
        // Hand computation in F_2[X]/(X^3 + X + 1): X^3 = X + 1, X^4 = X^2 + X,
        // X^8 = (X^4)^2 = X^4 + X^2 = X.
        assert_eq!(poly_powmod(&x, 4, &modulus).unwrap(), Poly::from_signed(f2, &[0, 1, 1]));
        assert_eq!(poly_powmod(&x, 8, &modulus).unwrap(), x);
        assert_eq!(poly_powmod(&x, 2, &modulus).unwrap(), x.mul(&x).unwrap());
        assert_eq!(poly_powmod(&x, 0, &modulus).unwrap(), Poly::one(f2));
        assert_eq!(poly_powmod(&x, 3, &Poly::one(f2)), Err(Error::ConstantModulus));
    }

    #[test]
    fn powmod_with_ell_exponent_is_frobenius_on_x() {
        let f3 = fp(3);
        let m = Poly::from_signed(f3, &[1, 2, 0, 0, 1]);
        let direct = Poly::monomial(f3, 1, 3).rem(&m).unwrap();
        assert_eq!(poly_powmod(&Poly::x(f3), 3, &m).unwrap(), direct);
    }

    #[test]
    fn division_and_ext_gcd() {
        let f7 = fp(7);
        let a = Poly::from_signed(f7, &[3, 1, 4, 1, 5]);
        let b = Poly::from_signed(f7, &[2, 6, 5]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        assert!(r.degree().unwrap_or(0) < 2);
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert_eq!(s.mul(&a).unwrap().add(&t.mul(&b).unwrap()).unwrap(), g);
        assert_eq!(g, poly_gcd(&a, &b).unwrap());
    }

    #[test]
    fn display_and_derivative() {
        let f5 = fp(5);
        let p = Poly::from_signed(f5, &[1, 0, 2, 1]);
        assert_eq!(p.to_string(), "X^3 + 2X^2 + 1");
        assert_eq!(p.derivative(), Poly::from_signed(f5, &[0, 4, 3]));
        assert_eq!(p.eval(1), 4);
    }
}
