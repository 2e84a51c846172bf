//! Exterior 3-forms on `K^n` with exact rational coefficients.
//!
//! A form is stored by its coefficients on the wedge monomials
//! `θ^i∧θ^j∧θ^k` with `i < j < k` (1-based). The full component tensor is
//! recovered by antisymmetry, so `α(e_j, e_i, e_k) = −α_{ijk}`.

mod catalog;
mod io;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{format_rational, Rational, Rationals};
use crate::linalg;
use crate::matrix::Matrix;

pub use catalog::{fixed_catalog, CatalogEntry, CatalogName};
pub use io::{FormFile, FormSource, LoadedForm};

/// Sorts a triple, returning the sign of the sorting permutation; `None` when
/// two indices coincide.
pub fn canonical_triple(t: [usize; 3]) -> Option<([usize; 3], i32)> {
    let [a, b, c] = t;
    if a == b || b == c || a == c {
        return None;
    }
    let mut s = [a, b, c];
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if s[j] > s[j + 1] {
                s.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    Some((s, sign))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExteriorThreeForm {
    dim: usize,
    terms: BTreeMap<[usize; 3], Rational>,
}

impl ExteriorThreeForm {
    pub fn zero(dim: usize) -> Result<Self> {
        if dim < 3 {
            return Err(Error::DimensionTooSmall(dim));
        }
        Ok(ExteriorThreeForm { dim, terms: BTreeMap::new() })
    }

    /// `Σ c·θ^i∧θ^j∧θ^k` over the given entries, in any index order.
    pub fn from_components<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ([usize; 3], Rational)>,
    {
        let mut form = ExteriorThreeForm::zero(dim)?;
        for (t, c) in entries {
            for &i in &t {
                if i == 0 || i > dim {
                    return Err(Error::IndexOutOfRange { index: i, dim });
                }
            }
            if let Some((key, sign)) = canonical_triple(t) {
                let v = if sign < 0 { -c } else { c };
                *form.terms.entry(key).or_insert_with(Rational::zero) += v;
            }
        }
        form.terms.retain(|_, v| !v.is_zero());
        Ok(form)
    }

    /// Sum of wedge monomials with unit coefficients, e.g. `[[1,2,3],[2,4,6]]`.
    pub fn from_monomials(dim: usize, monomials: &[[usize; 3]]) -> Result<Self> {
        Self::from_components(dim, monomials.iter().map(|t| (*t, Rational::one())))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Stored coefficients, keyed by strictly increasing 1-based triples.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize; 3], &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Full component `α_{ijk}` for 1-based indices in any order.
    pub fn component(&self, i: usize, j: usize, k: usize) -> Rational {
        match canonical_triple([i, j, k]) {
            None => Rational::zero(),
            Some((key, sign)) => match self.terms.get(&key) {
                None => Rational::zero(),
                Some(v) if sign < 0 => -v,
                Some(v) => v.clone(),
            },
        }
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::LengthMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    /// `α(X, Y, Z)`.
    pub fn evaluate(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Rational> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.check_len(z)?;
        let mut total = Rational::zero();
        for ([i, j, k], c) in &self.terms {
            let (i, j, k) = (i - 1, j - 1, k - 1);
            // Antisymmetrizing one monomial gives the 3×3 determinant.
            let det = &x[i] * (&y[j] * &z[k] - &y[k] * &z[j]) - &x[j] * (&y[i] * &z[k] - &y[k] * &z[i])
                + &x[k] * (&y[i] * &z[j] - &y[j] * &z[i]);
            total += c * det;
        }
        Ok(total)
    }

    /// The 2-form `i_X(α)` as the antisymmetric matrix `M[j][k] = α(X, e_j, e_k)`.
    pub fn interior_product(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for ([i, j, k], c) in &self.terms {
            let (i, j, k) = (i - 1, j - 1, k - 1);
            // c·(θ^i∧θ^j∧θ^k)(X, ·, ·) = c·(X^i θ^j∧θ^k − X^j θ^i∧θ^k + X^k θ^i∧θ^j)
            for (a, b, xv) in [(j, k, &x[i]), (k, i, &x[j]), (i, j, &x[k])] {
                if xv.is_zero() {
                    continue;
                }
                let v = c * xv;
                m[(a, b)] += &v;
                m[(b, a)] -= &v;
            }
        }
        Ok(m)
    }

    pub fn add(&self, other: &ExteriorThreeForm) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            *terms.entry(*k).or_insert_with(Rational::zero) += v;
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(ExteriorThreeForm { dim: self.dim, terms })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(k, v)| (*k, v * c)).collect()
        };
        ExteriorThreeForm { dim: self.dim, terms }
    }

    /// Same coefficients, viewed in a larger ambient dimension.
    pub fn embed(&self, dim: usize) -> Result<Self> {
        if dim < self.dim {
            return Err(Error::DimensionMismatch(self.dim, dim));
        }
        Ok(ExteriorThreeForm { dim, terms: self.terms.clone() })
    }

    /// Pullback `α'(X, Y, Z) = α(QX, QY, QZ)` by an invertible matrix `Q`.
    pub fn gl_transform(&self, q: &Matrix) -> Result<Self> {
        let n = self.dim;
        if q.nrows() != n || q.ncols() != n {
            return Err(Error::DimensionMismatch(n, q.nrows()));
        }
        if linalg::rank(&Rationals, &q.to_sparse()) < n {
            return Err(Error::SingularTransform);
        }
        // Column a of Q is Q·e_a.
        let cols: Vec<Vec<Rational>> = (0..n).map(|a| (0..n).map(|i| q[(i, a)].clone()).collect()).collect();
        let mut entries = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let v = self.evaluate(&cols[a], &cols[b], &cols[c])?;
                    if !v.is_zero() {
                        entries.push(([a + 1, b + 1, c + 1], v));
                    }
                }
            }
        }
        Self::from_components(n, entries)
    }
}

impl fmt::Display for ExteriorThreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ([i, j, k], c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{}·", format_rational(&mag))?;
            }
            write!(f, "θ{i}∧θ{j}∧θ{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        (0..n).map(|k| if k + 1 == i { rational(1) } else { rational(0) }).collect()
    }

    #[test]
    fn ingest_antisymmetrizes() {
        let a = ExteriorThreeForm::from_components(3, [([1, 2, 3], rational(1))]).unwrap();
        assert_eq!(a.component(1, 2, 3), rational(1));
        let b = ExteriorThreeForm::from_components(3, [([2, 1, 3], rational(1))]).unwrap();
        assert_eq!(b.terms().next().unwrap(), (&[1, 2, 3], &rational(-1)));
        let z = ExteriorThreeForm::from_components(4, [([1, 1, 2], rational(5))]).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn ingest_errors() {
        assert!(matches!(ExteriorThreeForm::zero(2), Err(Error::DimensionTooSmall(2))));
        assert!(matches!(
            ExteriorThreeForm::from_components(3, [([1, 2, 4], rational(1))]),
            Err(Error::IndexOutOfRange { index: 4, dim: 3 })
        ));
    }

    #[test]
    fn evaluate_volume() {
        let a = ExteriorThreeForm::from_monomials(3, &[[1, 2, 3]]).unwrap();
        assert_eq!(a.evaluate(&e(3, 1), &e(3, 2), &e(3, 3)).unwrap(), rational(1));
        assert_eq!(a.evaluate(&e(3, 2), &e(3, 1), &e(3, 3)).unwrap(), rational(-1));
        assert_eq!(a.evaluate(&e(3, 1), &e(3, 1), &e(3, 3)).unwrap(), rational(0));
        assert!(a.evaluate(&e(4, 1), &e(3, 1), &e(3, 3)).is_err());
    }

    #[test]
    fn interior_product_of_volume() {
        let a = ExteriorThreeForm::from_monomials(3, &[[1, 2, 3]]).unwrap();
        let m = a.interior_product(&e(3, 1)).unwrap();
        let mut want = Matrix::zeros(3, 3);
        want[(1, 2)] = rational(1);
        want[(2, 1)] = rational(-1);
        assert_eq!(m, want);
    }

    #[test]
    fn interior_product_in_dimension_four_has_kernel() {
        // α = i_X(vol₄) for X = (1, 2, 0, -1).
        let x = [rational(1), rational(2), rational(0), rational(-1)];
        let mut entries = Vec::new();
        for (m, xm) in x.iter().enumerate() {
            let rest: Vec<usize> = (1..=4).filter(|&k| k != m + 1).collect();
            let sign = if m % 2 == 0 { 1 } else { -1 };
            entries.push(([rest[0], rest[1], rest[2]], xm * rational(sign)));
        }
        let alpha = ExteriorThreeForm::from_components(4, entries).unwrap();
        assert!(!alpha.is_zero());
        assert!(alpha.interior_product(&x).unwrap().is_zero());
    }

    #[test]
    fn add_and_scale() {
        let a = ExteriorThreeForm::from_monomials(4, &[[1, 2, 3], [2, 3, 4]]).unwrap();
        assert!(a.add(&a.scale(&rational(-1))).unwrap().is_zero());
        let b = ExteriorThreeForm::zero(5).unwrap();
        assert!(matches!(a.add(&b), Err(Error::DimensionMismatch(4, 5))));
    }

    #[test]
    fn transposition_flips_sign() {
        let a = ExteriorThreeForm::from_monomials(3, &[[1, 2, 3]]).unwrap();
        assert_eq!(a.gl_transform(&Matrix::identity(3)).unwrap(), a);
        let mut p = Matrix::zeros(3, 3);
        p[(0, 1)] = rational(1);
        p[(1, 0)] = rational(1);
        p[(2, 2)] = rational(1);
        assert_eq!(a.gl_transform(&p).unwrap(), a.scale(&rational(-1)));
        assert!(matches!(a.gl_transform(&Matrix::zeros(3, 3)), Err(Error::SingularTransform)));
    }

    #[test]
    fn display() {
        let a = ExteriorThreeForm::from_components(4, [([1, 2, 3], rational(1)), ([2, 3, 4], rational(-2))]).unwrap();
        assert_eq!(a.to_string(), "θ1∧θ2∧θ3 - 2·θ2∧θ3∧θ4");
    }
}
