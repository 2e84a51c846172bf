//! Degreewise realization of a quadratic algebra `A = T(V)/I`.
//!
//! `I_d` is kept as an [`Echelon`] over the `n^d` words of length `d`. Since
//! every row pivots on its lexicographically largest word, the words that
//! carry no pivot (the standard words) form a basis of `A_d`, and reducing a
//! tensor against `I_d` expresses it in that basis.

use log::warn;

use super::presentation::QuadraticPresentation;
use super::tensor::{word_count, word_letters, Tensor};
use crate::field::Field;
use crate::linalg::Echelon;
use crate::sparse::SparseVec;

const NOT_STANDARD: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct GradedComponentBasis<F: Field> {
    degree: usize,
    n: usize,
    ideal: Echelon<F>,
    standard: Vec<usize>,
    rep_index: Vec<u32>,
}

impl<F: Field> GradedComponentBasis<F> {
    fn from_ideal(degree: usize, n: usize, ideal: Echelon<F>) -> Self {
        let standard = ideal.free_columns();
        let mut rep_index = vec![NOT_STANDARD; ideal.ncols()];
        for (i, &w) in standard.iter().enumerate() {
            rep_index[w] = i as u32;
        }
        GradedComponentBasis { degree, n, ideal, standard, rep_index }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.standard.len()
    }

    /// `dim I_d`.
    pub fn ideal_rank(&self) -> usize {
        self.ideal.rank()
    }

    pub fn ideal(&self) -> &Echelon<F> {
        &self.ideal
    }

    /// Word indices of the basis of `A_d`, ascending.
    pub fn standard_words(&self) -> &[usize] {
        &self.standard
    }

    /// Basis element `i` as a word with 1-based letters.
    pub fn standard_word(&self, i: usize) -> Vec<usize> {
        word_letters(self.n, self.degree, self.standard[i]).into_iter().map(|l| l + 1).collect()
    }

    /// Position of word `w` in the basis, if it is standard.
    pub fn basis_position(&self, w: usize) -> Option<usize> {
        match self.rep_index[w] {
            NOT_STANDARD => None,
            i => Some(i as usize),
        }
    }

    /// Remainder of `row` modulo `I_d`, supported on standard words.
    pub fn reduce(&self, row: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        self.ideal.reduce(row)
    }

    /// Coordinates of the class of `row` in the basis of `A_d`.
    pub fn coordinates(&self, row: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let rem = self.reduce(row);
        let entries = rem
            .into_entries()
            .into_iter()
            .map(|(w, v)| (self.basis_position(w).expect("remainder is standard"), v))
            .collect();
        SparseVec::from_sorted_unchecked(entries)
    }

    pub fn contains(&self, row: &SparseVec<F::Elem>) -> bool {
        self.ideal.contains(row)
    }
}

/// `A_0, …, A_d` for a quadratic presentation over a chosen field.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<F: Field> {
    field: F,
    n: usize,
    relations: Vec<SparseVec<F::Elem>>,
    dropped: Vec<usize>,
    components: Vec<GradedComponentBasis<F>>,
}

impl<F: Field> GradedAlgebra<F> {
    /// Starts with `A_0` and `A_1`. Relations that vanish identically are
    /// dropped with a warning.
    pub fn new(field: F, pres: &QuadraticPresentation) -> Self {
        let n = pres.n();
        let dropped = pres.zero_relations();
        if !dropped.is_empty() {
            warn!("dropping {} zero relation(s): {:?}", dropped.len(), dropped);
        }
        let relations = pres
            .primitive_relations()
            .into_iter()
            .map(|r| {
                let pairs = r
                    .entries()
                    .iter()
                    .map(|(c, q)| (*c, field.from_rational(q).expect("integer coefficients map to any field")))
                    .collect();
                SparseVec::from_pairs(&field, pairs)
            })
            .collect();
        let components = (0..2)
            .map(|d| GradedComponentBasis::from_ideal(d, n, Echelon::new(field.clone(), word_count(n, d))))
            .collect();
        GradedAlgebra { field, n, relations, dropped, components }
    }

    pub fn build(field: F, pres: &QuadraticPresentation, max_degree: usize) -> Self {
        let mut alg = GradedAlgebra::new(field, pres);
        alg.extend_to(max_degree);
        alg
    }

    /// `I_d = I_{d−1}⊗V + V^{⊗(d−2)}⊗R`. Rows of the first summand keep
    /// pairwise distinct leading words, so they enter without reduction.
    pub fn extend_to(&mut self, max_degree: usize) {
        let n = self.n;
        while self.components.len() <= max_degree {
            let d = self.components.len();
            let mut ech = Echelon::new(self.field.clone(), word_count(n, d));
            for row in self.components[d - 1].ideal.rows() {
                for k in 0..n {
                    let entries = row.entries().iter().map(|(c, v)| (c * n + k, v.clone())).collect();
                    ech.insert_unreduced(SparseVec::from_sorted_unchecked(entries));
                }
            }
            let n2 = n * n;
            for prefix in 0..word_count(n, d - 2) {
                for r in &self.relations {
                    let entries = r.entries().iter().map(|(c, v)| (prefix * n2 + c, v.clone())).collect();
                    ech.insert(SparseVec::from_sorted_unchecked(entries));
                }
            }
            self.components.push(GradedComponentBasis::from_ideal(d, n, ech));
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    /// 1-based indices of relations dropped for vanishing.
    pub fn dropped_relations(&self) -> &[usize] {
        &self.dropped
    }

    pub fn relation_rows(&self) -> &[SparseVec<F::Elem>] {
        &self.relations
    }

    pub fn component(&self, d: usize) -> &GradedComponentBasis<F> {
        &self.components[d]
    }

    pub fn dimension(&self, d: usize) -> usize {
        self.components[d].dimension()
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.components.iter().map(GradedComponentBasis::dimension).collect()
    }

    /// Coordinates in `A_{d+1}` of basis element `i` of `A_d` times `x^{k+1}`.
    pub fn right_multiply(&self, d: usize, i: usize, k: usize) -> SparseVec<F::Elem> {
        let w = self.components[d].standard[i] * self.n + k;
        let unit = SparseVec::from_sorted_unchecked(vec![(w, self.field.one())]);
        self.components[d + 1].coordinates(unit)
    }

    /// Image of a rational tensor in this field, `None` when a denominator
    /// vanishes.
    pub fn lift(&self, t: &Tensor) -> Option<SparseVec<F::Elem>> {
        let pairs = t
            .coeffs()
            .entries()
            .iter()
            .map(|(c, q)| self.field.from_rational(q).map(|v| (*c, v)))
            .collect::<Option<Vec<_>>>()?;
        Some(SparseVec::from_pairs(&self.field, pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, DEFAULT_PRIMES};
    use crate::forms::CatalogName;

    fn pres(name: CatalogName) -> QuadraticPresentation {
        QuadraticPresentation::from_form(&name.build().unwrap().form)
    }

    #[test]
    fn polynomial_ring_dimensions() {
        let alg = GradedAlgebra::build(Rationals, &pres(CatalogName::Alpha1), 5);
        assert_eq!(alg.dimensions(), vec![1, 3, 6, 10, 15, 21]);
        // Standard words of K[x1,x2,x3] are the non-increasing ones.
        let words: Vec<_> = (0..6).map(|i| alg.component(2).standard_word(i)).collect();
        assert!(words.iter().all(|w| w[0] <= w[1]));
    }

    #[test]
    fn reduction_kills_ideal() {
        let alg = GradedAlgebra::build(Rationals, &pres(CatalogName::Rho7), 3);
        let c3 = alg.component(3);
        for row in c3.ideal().rows() {
            assert!(c3.reduce(row.clone()).is_empty());
        }
        assert_eq!(alg.dimension(2), 42);
    }

    #[test]
    fn prime_and_rational_agree() {
        let p = pres(CatalogName::Beta7);
        let q = GradedAlgebra::build(Rationals, &p, 3).dimensions();
        let fp = GradedAlgebra::build(PrimeField::new(DEFAULT_PRIMES[1]).unwrap(), &p, 3).dimensions();
        assert_eq!(q, fp);
    }

    #[test]
    fn zero_relations_are_dropped() {
        let a = crate::forms::ExteriorThreeForm::from_monomials(5, &[[1, 2, 3]]).unwrap();
        let alg = GradedAlgebra::build(Rationals, &QuadraticPresentation::from_form(&a), 2);
        assert_eq!(alg.dropped_relations(), &[4, 5]);
        assert_eq!(alg.dimension(2), 22);
    }
}
