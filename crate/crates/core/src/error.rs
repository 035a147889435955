use thiserror::Error;

/// Errors produced by the engine, the oracle and the supporting arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("m = {0} must be at least 2 (the group would be abelian)")]
    DegenerateM(u64),

    #[error("m = {m} does not divide p - 1 = {}", .p - 1)]
    MDoesNotDividePMinusOne { m: u64, p: u64 },

    #[error("r = {r} has multiplicative order {actual} modulo {p}, expected {expected}")]
    WrongOrder { r: u64, p: u64, expected: u64, actual: u64 },

    #[error("ell = {0} is not prime")]
    NotPrime(u64),

    #[error("ell = {ell} equals p")]
    EllEqualsP { ell: u64 },

    #[error("gcd(ell, p*m) = gcd({ell}, {pm}) != 1, the algebra is not semisimple")]
    NotSemisimple { ell: u64, pm: u64 },

    #[error("lambda must be a unit of F_{ell}")]
    ZeroLambda { ell: u64 },

    #[error("{x} is not invertible modulo {n}")]
    NotInvertible { x: u64, n: u64 },

    #[error("polynomials over F_{0} and F_{1} cannot be combined")]
    CharacteristicMismatch(u64, u64),

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("modulus polynomial must be nonconstant")]
    ConstantModulus,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,

    #[error("algebra is not associative: ({x} * {y}) * {z} != {x} * ({y} * {z})")]
    NotAssociative { x: usize, y: usize, z: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
