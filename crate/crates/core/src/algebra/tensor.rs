//! Homogeneous elements of the tensor algebra `T(V)`, `V = K^n`.
//!
//! A word `x^{i_1}⊗…⊗x^{i_d}` with 0-based letters `l_1, …, l_d` is stored at
//! index `Σ l_t n^{d−t}`, so index order is lexicographic word order with the
//! first letter most significant.

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::field::{format_rational, Rational, Rationals};
use crate::sparse::SparseVec;

pub fn word_index(n: usize, letters: &[usize]) -> usize {
    letters.iter().fold(0, |acc, &l| acc * n + l)
}

pub fn word_letters(n: usize, degree: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; degree];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

/// Number of words of length `degree`.
pub fn word_count(n: usize, degree: usize) -> usize {
    n.checked_pow(degree as u32).expect("word count fits in usize")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    n: usize,
    degree: usize,
    coeffs: SparseVec<Rational>,
}

impl Tensor {
    pub fn zero(n: usize, degree: usize) -> Self {
        Tensor { n, degree, coeffs: SparseVec::new() }
    }

    pub fn unit(n: usize) -> Self {
        Tensor { n, degree: 0, coeffs: SparseVec::from_sorted_unchecked(vec![(0, Rational::one())]) }
    }

    /// `Σ c·x^{w_1}⊗…⊗x^{w_d}` over `(word, c)` with 1-based letters.
    pub fn from_terms<'a, I>(n: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [usize], Rational)>,
    {
        let mut pairs = Vec::new();
        for (word, c) in terms {
            if word.len() != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: word.len() });
            }
            let mut letters = Vec::with_capacity(degree);
            for &g in word {
                if g == 0 || g > n {
                    return Err(Error::GeneratorOutOfRange { index: g, count: n });
                }
                letters.push(g - 1);
            }
            pairs.push((word_index(n, &letters), c));
        }
        Ok(Tensor { n, degree, coeffs: SparseVec::from_pairs(&Rationals, pairs) })
    }

    /// The word with 1-based letters `word`, coefficient one.
    pub fn word(n: usize, word: &[usize]) -> Result<Self> {
        Tensor::from_terms(n, word.len(), [(word, Rational::one())])
    }

    pub fn generator(n: usize, g: usize) -> Result<Self> {
        Tensor::word(n, &[g])
    }

    /// `x^a⊗x^b − x^b⊗x^a`.
    pub fn commutator(n: usize, a: usize, b: usize) -> Result<Self> {
        Tensor::from_terms(n, 2, [(&[a, b][..], Rational::one()), (&[b, a][..], -Rational::one())])
    }

    pub(crate) fn from_coeffs(n: usize, degree: usize, coeffs: SparseVec<Rational>) -> Self {
        debug_assert!(coeffs.leading().is_none_or(|c| c < word_count(n, degree)));
        Tensor { n, degree, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &SparseVec<Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(word, coefficient)` pairs with 1-based letters, in word order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> + '_ {
        self.coeffs
            .entries()
            .iter()
            .map(|(idx, c)| (word_letters(self.n, self.degree, *idx).into_iter().map(|l| l + 1).collect(), c))
    }

    fn check_compatible(&self, other: &Tensor) {
        assert_eq!(self.n, other.n, "tensors over different generator counts");
        assert_eq!(self.degree, other.degree, "tensors of different degrees");
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        self.check_compatible(other);
        let one = Rational::one();
        Tensor { coeffs: self.coeffs.combine(&Rationals, &one, &one, &other.coeffs), ..self.clone() }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.check_compatible(other);
        let one = Rational::one();
        Tensor { coeffs: self.coeffs.combine(&Rationals, &one, &-&one, &other.coeffs), ..self.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        Tensor { coeffs: self.coeffs.scale(&Rationals, c), ..self.clone() }
    }

    /// Concatenation product `self ⊗ other`.
    pub fn tensor(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.n, other.n, "tensors over different generator counts");
        let shift = word_count(self.n, other.degree);
        let mut entries = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for (a, ca) in self.coeffs.entries() {
            for (b, cb) in other.coeffs.entries() {
                entries.push((a * shift + b, ca * cb));
            }
        }
        // Lexicographic order of (a, b) is index order, so entries stay sorted.
        Tensor {
            n: self.n,
            degree: self.degree + other.degree,
            coeffs: SparseVec::from_sorted_unchecked(entries),
        }
    }

    /// `self ⊗ other − other ⊗ self`.
    pub fn bracket(&self, other: &Tensor) -> Tensor {
        self.tensor(other).sub(&other.tensor(self))
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (word, c)) in self.terms().enumerate() {
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let body = if word.is_empty() {
                "1".to_string()
            } else {
                word.iter().map(|g| format!("x{g}")).collect::<Vec<_>>().join("⊗")
            };
            if mag.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{}·{body}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    #[test]
    fn index_roundtrip() {
        for idx in 0..343 {
            assert_eq!(word_index(7, &word_letters(7, 3, idx)), idx);
        }
        assert_eq!(word_letters(3, 2, 5), vec![1, 2]);
    }

    #[test]
    fn commutator_display_and_product() {
        let c = Tensor::commutator(3, 2, 3).unwrap();
        assert_eq!(c.to_string(), "x2⊗x3 - x3⊗x2");
        let x1 = Tensor::generator(3, 1).unwrap();
        let t = x1.tensor(&c);
        assert_eq!(t.to_string(), "x1⊗x2⊗x3 - x1⊗x3⊗x2");
        assert_eq!(x1.bracket(&x1).to_string(), "0");
        assert_eq!(c.scale(&rational(-2)).to_string(), "-2·x2⊗x3 + 2·x3⊗x2");
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(matches!(Tensor::word(3, &[1, 4]), Err(Error::GeneratorOutOfRange { index: 4, count: 3 })));
        assert!(Tensor::from_terms(3, 2, [(&[1][..], rational(1))]).is_err());
    }
}
