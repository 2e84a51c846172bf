//! Quadratic presentations `K⟨x¹,…,xⁿ⟩/(r_1, …, r_m)`.

use num_traits::Zero;

use super::tensor::Tensor;
use crate::error::{Error, Result};
use crate::field::{Rational, Rationals};
use crate::forms::ExteriorThreeForm;
use crate::sparse::SparseVec;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticPresentation {
    n: usize,
    relations: Vec<Tensor>,
}

impl QuadraticPresentation {
    /// Relations `∂_iα = α_{ijk} x^j⊗x^k`, one per generator, zeros kept.
    pub fn from_form(alpha: &ExteriorThreeForm) -> Self {
        let n = alpha.dim();
        let relations = (1..=n)
            .map(|i| {
                let mut pairs = Vec::new();
                for j in 1..=n {
                    for k in 1..=n {
                        let c = alpha.component(i, j, k);
                        if !c.is_zero() {
                            pairs.push(((j - 1) * n + (k - 1), c));
                        }
                    }
                }
                Tensor::from_coeffs(n, 2, SparseVec::from_pairs(&Rationals, pairs))
            })
            .collect();
        QuadraticPresentation { n, relations }
    }

    pub fn from_relations(n: usize, relations: Vec<Tensor>) -> Result<Self> {
        for r in &relations {
            if r.degree() != 2 {
                return Err(Error::NotQuadratic(r.degree()));
            }
            if r.n() != n {
                return Err(Error::DimensionMismatch(n, r.n()));
            }
        }
        Ok(QuadraticPresentation { n, relations })
    }

    /// `K⟨x¹,…,x^{2p}⟩` modulo the single relation `Σ_r [x^r, x^{r+p}]`.
    pub fn symplectic(p: usize) -> Result<Self> {
        let n = 2 * p;
        let mut rel = Tensor::zero(n, 2);
        for r in 1..=p {
            rel = rel.add(&Tensor::commutator(n, r, r + p)?);
        }
        QuadraticPresentation::from_relations(n, vec![rel])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[Tensor] {
        &self.relations
    }

    /// Relation `i`, 1-based.
    pub fn relation(&self, i: usize) -> Result<&Tensor> {
        i.checked_sub(1)
            .and_then(|k| self.relations.get(k))
            .ok_or(Error::GeneratorOutOfRange { index: i, count: self.relations.len() })
    }

    pub fn nonzero_relations(&self) -> impl Iterator<Item = &Tensor> {
        self.relations.iter().filter(|r| !r.is_zero())
    }

    /// 1-based indices of relations that vanish identically.
    pub fn zero_relations(&self) -> Vec<usize> {
        (1..=self.relations.len()).filter(|&i| self.relations[i - 1].is_zero()).collect()
    }

    /// Whether `r` is antisymmetric as a 2-tensor.
    pub fn is_antisymmetric(r: &Tensor) -> bool {
        let n = r.n();
        r.coeffs().entries().iter().all(|(idx, c)| {
            let swapped = (idx % n) * n + idx / n;
            r.coeffs().get(swapped).is_some_and(|d| d == &-c)
        })
    }

    /// Relation coefficients as integer-primitive rows, so that their image
    /// modulo any prime is nonzero.
    pub(crate) fn primitive_relations(&self) -> Vec<SparseVec<Rational>> {
        use crate::field::Field;
        self.nonzero_relations()
            .map(|r| {
                let mut entries = r.coeffs().clone().into_entries();
                Rationals.make_primitive(&mut entries);
                SparseVec::from_sorted_unchecked(entries)
            })
            .collect()
    }
}
