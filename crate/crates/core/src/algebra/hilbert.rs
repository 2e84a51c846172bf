//! Truncated Hilbert series with the field strategy used throughout: exact
//! rational elimination through degree [`RATIONAL_MAX_DEGREE`], two
//! independent primes above it.

use serde::Serialize;

use super::graded::GradedAlgebra;
use super::presentation::QuadraticPresentation;
use crate::error::{Error, Result};
use crate::field::{PrimeField, Rationals};

pub const RATIONAL_MAX_DEGREE: usize = 4;
pub const DEFAULT_HILBERT_DEGREE: usize = 5;
pub const MAX_SUPPORTED_DEGREE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateField {
    Rational,
    DualPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub field: CertificateField,
    /// Primes used above the rational range; empty for a purely rational run.
    pub primes: Vec<u64>,
    /// Highest degree computed over Q.
    pub rational_through: usize,
}

impl Certificate {
    fn rational(dmax: usize) -> Self {
        Certificate { field: CertificateField::Rational, primes: Vec::new(), rational_through: dmax }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub actual: Vec<usize>,
    pub predicted: Vec<i64>,
    pub matches: Vec<bool>,
    pub first_mismatch: Option<usize>,
    pub certificate: Certificate,
}

impl HilbertReport {
    /// Largest `d` with every coefficient through `d` matching.
    pub fn match_depth(&self) -> usize {
        self.first_mismatch.map_or(self.actual.len() - 1, |d| d - 1)
    }
}

/// Coefficients of `1/(1 − nt + nt² − t³)` through `t^dmax`.
pub fn predicted_series(n: usize, dmax: usize) -> Vec<i64> {
    let n = n as i64;
    let mut h: Vec<i64> = Vec::with_capacity(dmax + 1);
    for d in 0..=dmax {
        let at = |k: usize| if d >= k { h[d - k] } else { 0 };
        let v = if d == 0 { 1 } else { n * at(1) - n * at(2) + at(3) };
        h.push(v);
    }
    h
}

pub(crate) fn prime_pair(primes: [u64; 2]) -> Result<(PrimeField, PrimeField)> {
    if primes[0] == primes[1] {
        return Err(Error::RepeatedPrime);
    }
    Ok((PrimeField::new(primes[0])?, PrimeField::new(primes[1])?))
}

pub(crate) fn check_degree(dmax: usize) -> Result<()> {
    if dmax < 2 {
        return Err(Error::DegreeTooSmall(dmax));
    }
    if dmax > MAX_SUPPORTED_DEGREE {
        return Err(Error::DegreeTooLarge(dmax));
    }
    Ok(())
}

/// `dim A_0, …, dim A_dmax` with the certificate describing how they were
/// obtained.
pub fn graded_dimensions(
    pres: &QuadraticPresentation,
    dmax: usize,
    primes: [u64; 2],
) -> Result<(Vec<usize>, Certificate)> {
    let rational_top = dmax.min(RATIONAL_MAX_DEGREE);
    if dmax <= RATIONAL_MAX_DEGREE {
        let dims = GradedAlgebra::build(Rationals, pres, dmax).dimensions();
        return Ok((dims, Certificate::rational(dmax)));
    }
    let (f1, f2) = prime_pair(primes)?;
    let (low, (first, second)) = rayon::join(
        || GradedAlgebra::build(Rationals, pres, rational_top).dimensions(),
        || {
            rayon::join(
                || GradedAlgebra::build(f1, pres, dmax).dimensions(),
                || GradedAlgebra::build(f2, pres, dmax).dimensions(),
            )
        },
    );
    let mut dims = low;
    for d in rational_top + 1..=dmax {
        if first[d] != second[d] {
            return Err(Error::CertificateMismatch { degree: d, first: first[d], second: second[d] });
        }
        dims.push(first[d]);
    }
    let certificate =
        Certificate { field: CertificateField::DualPrime, primes: primes.to_vec(), rational_through: rational_top };
    Ok((dims, certificate))
}

pub fn graded_dimension(pres: &QuadraticPresentation, d: usize, primes: [u64; 2]) -> Result<usize> {
    if d < 2 {
        return Ok(if d == 0 { 1 } else { pres.n() });
    }
    Ok(graded_dimensions(pres, d, primes)?.0[d])
}

pub fn hilbert_series(pres: &QuadraticPresentation, dmax: usize, primes: [u64; 2]) -> Result<HilbertReport> {
    check_degree(dmax)?;
    let (actual, certificate) = graded_dimensions(pres, dmax, primes)?;
    let predicted = predicted_series(pres.n(), dmax);
    let matches: Vec<bool> = actual.iter().zip(&predicted).map(|(&a, &p)| a as i64 == p).collect();
    let first_mismatch = matches.iter().position(|m| !m);
    Ok(HilbertReport { actual, predicted, matches, first_mismatch, certificate })
}
