//! Membership-based checks on a quadratic algebra: ideal membership, a matrix
//! identity over the `β` algebra, centrality, descent of derivations, a
//! bigrading refinement and the tensor factorization of the `α^(p)` algebras.

use serde::Serialize;

use super::graded::GradedAlgebra;
use super::hilbert;
use super::presentation::QuadraticPresentation;
use super::tensor::{word_count, word_letters, Tensor};
use crate::error::{Error, Result};
use crate::field::{rational, Rational, Rationals, DEFAULT_PRIMES};
use crate::forms::CatalogName;
use crate::linalg;
use crate::sparse::{SparseMatrix, SparseVec};

fn rational_algebra(pres: &QuadraticPresentation, degree: usize) -> GradedAlgebra<Rationals> {
    GradedAlgebra::build(Rationals, pres, degree)
}

fn member(alg: &GradedAlgebra<Rationals>, t: &Tensor) -> bool {
    alg.component(t.degree()).contains(t.coeffs())
}

/// Whether `t ∈ I_d`, `d = deg t ≥ 2`.
pub fn ideal_membership(pres: &QuadraticPresentation, t: &Tensor) -> Result<bool> {
    if t.degree() < 2 {
        return Err(Error::DegreeTooSmall(t.degree()));
    }
    if t.n() != pres.n() {
        return Err(Error::DimensionMismatch(pres.n(), t.n()));
    }
    Ok(member(&rational_algebra(pres, t.degree()), t))
}

/// A matrix whose entries are linear forms, entry `(i, j)` stored as
/// `(generator, coefficient)` pairs.
type LinearMatrix = Vec<Vec<Vec<(usize, i64)>>>;

fn linear(n: usize, terms: &[(usize, i64)]) -> Tensor {
    let words: Vec<([usize; 1], Rational)> = terms.iter().map(|&(g, c)| ([g], rational(c))).collect();
    Tensor::from_terms(n, 1, words.iter().map(|(w, c)| (&w[..], c.clone()))).expect("valid generators")
}

/// The `3×4` left factor.
fn left_factor() -> LinearMatrix {
    vec![
        vec![vec![(3, -1)], vec![(4, -1)], vec![(1, 1)], vec![(2, 1)]],
        vec![vec![], vec![], vec![(4, 1)], vec![(3, -1)]],
        vec![vec![(2, 1)], vec![(1, -1)], vec![], vec![]],
    ]
}

/// The `4×3` right factor.
fn right_factor() -> LinearMatrix {
    vec![
        vec![vec![(1, -1)], vec![], vec![(4, 2)]],
        vec![vec![(2, -1)], vec![], vec![(3, -2)]],
        vec![vec![(3, 1)], vec![(2, 2)], vec![]],
        vec![vec![(4, 1)], vec![(1, -2)], vec![]],
    ]
}

/// Outcome of checking `B(x)·C(x) ≡ u·1₃` modulo `I_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixIdentityReport {
    pub holds: bool,
    /// `entry_ok[i][j]`: entry `(i, j)` minus its target reduces to zero.
    pub entry_ok: Vec<Vec<bool>>,
}

/// Checks the identity for the `β` algebra; `flip` negates one entry of the
/// right factor first (0-based row, column) to exercise a failing case.
pub fn matrix_identity_report(pres: &QuadraticPresentation, flip: Option<(usize, usize)>) -> Result<MatrixIdentityReport> {
    let n = pres.n();
    if n < 4 {
        return Err(Error::DimensionMismatch(7, n));
    }
    let b = left_factor();
    let mut c = right_factor();
    if let Some((i, j)) = flip {
        let entry = c
            .get_mut(i)
            .and_then(|r| r.get_mut(j))
            .ok_or(Error::IndexOutOfRange { index: i.max(j), dim: 4 })?;
        if entry.is_empty() {
            entry.push((1, 1));
        } else {
            entry[0].1 = -entry[0].1;
        }
    }
    let u = Tensor::from_terms(n, 2, [(&[1, 3][..], rational(2)), (&[2, 4][..], rational(2))])?;
    let alg = rational_algebra(pres, 2);
    let mut entry_ok = vec![vec![false; 3]; 3];
    for (i, row) in entry_ok.iter_mut().enumerate() {
        for (j, ok) in row.iter_mut().enumerate() {
            let mut prod = Tensor::zero(n, 2);
            for k in 0..4 {
                prod = prod.add(&linear(n, &b[i][k]).tensor(&linear(n, &c[k][j])));
            }
            if i == j {
                prod = prod.sub(&u);
            }
            *ok = member(&alg, &prod);
        }
    }
    let holds = entry_ok.iter().flatten().all(|&b| b);
    Ok(MatrixIdentityReport { holds, entry_ok })
}

pub fn verify_matrix_identity_lemma(pres: &QuadraticPresentation) -> Result<bool> {
    Ok(matrix_identity_report(pres, None)?.holds)
}

/// Whether `[x^g, x^j] ∈ I_2` for every `j`.
pub fn centrality_check(pres: &QuadraticPresentation, g: usize) -> Result<bool> {
    let n = pres.n();
    if g == 0 || g > n {
        return Err(Error::GeneratorOutOfRange { index: g, count: n });
    }
    let alg = rational_algebra(pres, 2);
    for j in 1..=n {
        if !member(&alg, &Tensor::commutator(n, g, j)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// 1-based indices of generators that are central.
pub fn central_generators(pres: &QuadraticPresentation) -> Vec<usize> {
    let n = pres.n();
    let alg = rational_algebra(pres, 2);
    (1..=n)
        .filter(|&g| (1..=n).all(|j| member(&alg, &Tensor::commutator(n, g, j).expect("in range"))))
        .collect()
}

/// A derivation of `T(V)` given by the images of the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivation {
    images: Vec<Tensor>,
}

impl Derivation {
    pub fn new(images: Vec<Tensor>) -> Result<Self> {
        if let Some(first) = images.first() {
            let (n, deg) = (first.n(), first.degree());
            for t in &images {
                if t.degree() != deg {
                    return Err(Error::DegreeMismatch { expected: deg, got: t.degree() });
                }
                if t.n() != n {
                    return Err(Error::DimensionMismatch(n, t.n()));
                }
            }
        }
        Ok(Derivation { images })
    }

    /// Generator `g ↦ [x^a, x^b]` for each `(g, a, b)`; all other generators
    /// map to zero.
    pub fn from_brackets(n: usize, brackets: &[(usize, usize, usize)]) -> Result<Self> {
        let mut images = vec![Tensor::zero(n, 2); n];
        for &(g, a, b) in brackets {
            if g == 0 || g > n {
                return Err(Error::GeneratorOutOfRange { index: g, count: n });
            }
            images[g - 1] = Tensor::commutator(n, a, b)?;
        }
        Ok(Derivation { images })
    }

    pub fn zero(n: usize, degree: usize) -> Self {
        Derivation { images: vec![Tensor::zero(n, degree); n] }
    }

    pub fn images(&self) -> &[Tensor] {
        &self.images
    }

    /// Leibniz extension to a homogeneous tensor.
    pub fn apply(&self, t: &Tensor) -> Tensor {
        let n = t.n();
        let img_deg = self.images.first().map_or(1, Tensor::degree);
        let mut out = Tensor::zero(n, t.degree() + img_deg - 1);
        for (word, c) in t.terms() {
            for pos in 0..word.len() {
                let left = Tensor::word(n, &word[..pos]).expect("valid word");
                let right = Tensor::word(n, &word[pos + 1..]).expect("valid word");
                let term = left.tensor(&self.images[word[pos] - 1]).tensor(&right);
                out = out.add(&term.scale(c));
            }
        }
        out
    }
}

/// Whether `δ(r) ∈ I` for every relation `r`.
pub fn derivation_descends(pres: &QuadraticPresentation, delta: &Derivation) -> Result<bool> {
    let n = pres.n();
    if delta.images.len() != n {
        return Err(Error::IncompleteDerivation(delta.images.len() + 1));
    }
    if delta.images.first().is_some_and(|t| t.n() != n) {
        return Err(Error::DimensionMismatch(n, delta.images[0].n()));
    }
    let img_deg = delta.images.first().map_or(1, Tensor::degree);
    let alg = rational_algebra(pres, img_deg + 1);
    Ok(pres.relations().iter().all(|r| {
        let image = delta.apply(r);
        image.is_zero() || member(&alg, &image)
    }))
}

/// Degree-one derivations of `K⟨x¹,…,x⁶⟩/[Σ_r [x^r, x^{r+3}]]` built from
/// brackets inside the two triples `(x¹,x²,x³)` and `(x⁴,x⁵,x⁶)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TripleDerivation {
    /// `x^{3+a} ↦ [x^b, x^c]` for cyclic `(a, b, c)` of `(1, 2, 3)`; the
    /// first triple maps to zero.
    SecondTriple,
    /// As [`Self::SecondTriple`], plus `x^a ↦ [x^{3+c}, x^{3+b}]`.
    BothTriples,
    /// `x^a ↦ [x^b, x^c]`, second triple to zero.
    FirstTriple,
    /// `x^a ↦ [x^b, x^c]` and `x^{3+a} ↦ [x^{3+b}, x^{3+c}]`.
    BothTriplesSameOrientation,
}

impl TripleDerivation {
    pub const ALL: [TripleDerivation; 4] = [
        TripleDerivation::SecondTriple,
        TripleDerivation::BothTriples,
        TripleDerivation::FirstTriple,
        TripleDerivation::BothTriplesSameOrientation,
    ];

    pub fn brackets(self) -> Vec<(usize, usize, usize)> {
        let cyc = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];
        let first: Vec<_> = cyc.iter().map(|&(a, b, c)| (a, b, c)).collect();
        let second: Vec<_> = cyc.iter().map(|&(a, b, c)| (a + 3, b + 3, c + 3)).collect();
        let second_to_first: Vec<_> = cyc.iter().map(|&(a, b, c)| (a + 3, b, c)).collect();
        let first_to_second: Vec<_> = cyc.iter().map(|&(a, b, c)| (a, c + 3, b + 3)).collect();
        match self {
            TripleDerivation::SecondTriple => second_to_first,
            TripleDerivation::BothTriples => [second_to_first, first_to_second].concat(),
            TripleDerivation::FirstTriple => first,
            TripleDerivation::BothTriplesSameOrientation => [first, second].concat(),
        }
    }

    pub fn derivation(self) -> Derivation {
        Derivation::from_brackets(6, &self.brackets()).expect("indices in range")
    }
}

/// Outcome of the bigrading refinement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigradingReport {
    /// Bidegree of each relation, `None` when it mixes bidegrees.
    pub relation_bidegrees: Vec<Option<(usize, usize)>>,
    pub bihomogeneous: bool,
    /// `bigraded[d][a]`: dimension in bidegree `(a, d − a)`.
    pub bigraded: Vec<Vec<usize>>,
    pub total: Vec<usize>,
    pub refines: bool,
    pub passed: bool,
}

fn bidegree(word: &[usize], first_part: usize) -> (usize, usize) {
    let a = word.iter().filter(|&&g| g <= first_part).count();
    (a, word.len() - a)
}

/// Gives generators `1..=first_part` bidegree `(1,0)` and the rest `(0,1)`,
/// checks that every relation is bihomogeneous and that the dimension of each
/// bidegree, computed separately by rank, sums to `dim A_d` for `d ≤ dmax`.
pub fn bigrading_check(pres: &QuadraticPresentation, first_part: usize, dmax: usize) -> BigradingReport {
    let n = pres.n();
    let relation_bidegrees: Vec<Option<(usize, usize)>> = pres
        .relations()
        .iter()
        .map(|r| {
            let degs: Vec<_> = r.terms().map(|(w, _)| bidegree(&w, first_part)).collect();
            match degs.first() {
                Some(&d0) if degs.iter().all(|&d| d == d0) => Some(d0),
                _ => None,
            }
        })
        .collect();
    let bihomogeneous = relation_bidegrees.iter().zip(pres.relations()).all(|(b, r)| b.is_some() || r.is_zero());
    if !bihomogeneous {
        return BigradingReport {
            relation_bidegrees,
            bihomogeneous,
            bigraded: Vec::new(),
            total: Vec::new(),
            refines: false,
            passed: false,
        };
    }
    let total = rational_algebra(pres, dmax).dimensions();
    let relations: Vec<&Tensor> = pres.nonzero_relations().collect();
    let mut bigraded = Vec::with_capacity(dmax + 1);
    for d in 0..=dmax {
        let words = word_count(n, d);
        // Column index within each bidegree block.
        let mut block_of = vec![(0usize, 0usize); words];
        let mut block_sizes = vec![0usize; d + 1];
        for (w, slot) in block_of.iter_mut().enumerate() {
            let letters: Vec<usize> = word_letters(n, d, w).into_iter().map(|l| l + 1).collect();
            let a = bidegree(&letters, first_part).0;
            *slot = (a, block_sizes[a]);
            block_sizes[a] += 1;
        }
        let mut blocks: Vec<SparseMatrix<Rational>> = block_sizes.iter().map(|&s| SparseMatrix::new(s)).collect();
        for a_len in 0..=d.saturating_sub(2) {
            if d < 2 {
                break;
            }
            let b_len = d - 2 - a_len;
            let shift = word_count(n, b_len);
            for left in 0..word_count(n, a_len) {
                for right in 0..shift {
                    for r in &relations {
                        let mut block = 0;
                        let pairs = r
                            .coeffs()
                            .entries()
                            .iter()
                            .map(|(c, v)| {
                                let (a, pos) = block_of[(left * n * n + c) * shift + right];
                                block = a;
                                (pos, v.clone())
                            })
                            .collect();
                        blocks[block].push_row(SparseVec::from_pairs(&Rationals, pairs));
                    }
                }
            }
        }
        let dims: Vec<usize> =
            blocks.iter().zip(&block_sizes).map(|(m, &s)| s - linalg::rank(&Rationals, m)).collect();
        bigraded.push(dims);
    }
    let refines = bigraded.iter().zip(&total).all(|(b, &t)| b.iter().sum::<usize>() == t);
    BigradingReport { relation_bidegrees, bihomogeneous, bigraded, total, refines, passed: refines }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub p: usize,
    /// `dim A_d` for the `α^(p)` algebra.
    pub dimensions: Vec<usize>,
    /// `dim B_d` for the symplectic algebra on `2p` generators.
    pub symplectic_dimensions: Vec<usize>,
    /// Coefficients of `h_A(t)·(1 − 2pt + t²)(1 − t)` through `t^dmax`.
    pub product: Vec<i64>,
    pub passed: bool,
}

/// Checks `A ≅ B ⊗ K[x^{2p+1}]` on Hilbert series through `t^dmax`:
/// `dim A_d = Σ_{k≤d} dim B_k`, and `h_A(t)·(1 − 2pt + t²)(1 − t) = 1`.
pub fn tensor_factorization_check(p: usize, dmax: usize) -> Result<FactorizationReport> {
    let form = CatalogName::AlphaP(p).build()?.form;
    let pres = QuadraticPresentation::from_form(&form);
    hilbert::check_degree(dmax)?;
    let (dims, _) = hilbert::graded_dimensions(&pres, dmax, DEFAULT_PRIMES)?;
    let (sym, _) = hilbert::graded_dimensions(&QuadraticPresentation::symplectic(p)?, dmax, DEFAULT_PRIMES)?;
    let q = 2 * p as i64 + 1;
    let factor = [1, -q, q, -1];
    let product: Vec<i64> = (0..=dmax)
        .map(|d| (0..=d.min(3)).map(|k| factor[k] * dims[d - k] as i64).sum())
        .collect();
    let unit = product.iter().enumerate().all(|(d, &c)| c == i64::from(d == 0));
    let split = (0..=dmax).all(|d| dims[d] == sym[..=d].iter().sum::<usize>());
    Ok(FactorizationReport { p, dimensions: dims, symplectic_dimensions: sym, product, passed: unit && split })
}

/// Whether two tensors agree modulo the ideal.
pub fn congruent(pres: &QuadraticPresentation, a: &Tensor, b: &Tensor) -> Result<bool> {
    let diff = a.sub(b);
    if diff.is_zero() {
        return Ok(true);
    }
    ideal_membership(pres, &diff)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(name: CatalogName) -> QuadraticPresentation {
        QuadraticPresentation::from_form(&name.build().unwrap().form)
    }

    #[test]
    fn membership_needs_degree_two() {
        let p = pres(CatalogName::Rho7);
        assert!(matches!(ideal_membership(&p, &Tensor::generator(7, 1).unwrap()), Err(Error::DegreeTooSmall(1))));
        assert!(ideal_membership(&p, &Tensor::zero(7, 2)).unwrap());
        assert!(ideal_membership(&p, &Tensor::zero(5, 2)).is_err());
    }

    #[test]
    fn matrix_identity_localizes_the_flipped_entry() {
        let p = pres(CatalogName::Beta7);
        let clean = matrix_identity_report(&p, None).unwrap();
        assert!(clean.holds);
        let flipped = matrix_identity_report(&p, Some((0, 0))).unwrap();
        assert!(!flipped.holds);
        assert!(!flipped.entry_ok[0][0]);
        assert!(flipped.entry_ok[1][1] && flipped.entry_ok[2][2]);
        assert!(matrix_identity_report(&p, Some((4, 0))).is_err());
    }

    #[test]
    fn matrix_identity_fails_for_rho() {
        assert!(!verify_matrix_identity_lemma(&pres(CatalogName::Rho7)).unwrap());
    }

    #[test]
    fn polynomial_ring_is_commutative() {
        let p = pres(CatalogName::Alpha1);
        assert_eq!(central_generators(&p), vec![1, 2, 3]);
        assert!(centrality_check(&p, 0).is_err());
    }

    #[test]
    fn top_generator_of_alpha_p_is_the_only_central_one() {
        for p in 2..=3 {
            assert_eq!(central_generators(&pres(CatalogName::AlphaP(p))), vec![2 * p + 1]);
        }
        assert!(central_generators(&pres(CatalogName::Rho7)).is_empty());
    }

    #[test]
    fn derivation_applies_leibniz_rule() {
        let d = Derivation::from_brackets(3, &[(1, 2, 3)]).unwrap();
        let x1x1 = Tensor::word(3, &[1, 1]).unwrap();
        let c23 = Tensor::commutator(3, 2, 3).unwrap();
        let x1 = Tensor::generator(3, 1).unwrap();
        let want = c23.tensor(&x1).add(&x1.tensor(&c23));
        assert_eq!(d.apply(&x1x1), want);
        assert!(d.apply(&Tensor::generator(3, 2).unwrap()).is_zero());
    }

    #[test]
    fn zero_derivation_descends() {
        let p = QuadraticPresentation::symplectic(3).unwrap();
        assert!(derivation_descends(&p, &Derivation::zero(6, 2)).unwrap());
    }

    #[test]
    fn triple_derivations() {
        let p = QuadraticPresentation::symplectic(3).unwrap();
        let got: Vec<bool> =
            TripleDerivation::ALL.iter().map(|d| derivation_descends(&p, &d.derivation()).unwrap()).collect();
        assert_eq!(got, [true, true, false, false]);
    }

    #[test]
    fn beta_bigrading_refines_the_grading() {
        let r = bigrading_check(&pres(CatalogName::Beta7), 4, 4);
        assert!(r.passed);
        assert_eq!(r.total, vec![1, 7, 42, 246, 1435]);
        assert_eq!(r.bigraded[1], vec![3, 4]);
        let mut degs: Vec<_> = r.relation_bidegrees.iter().map(|b| b.unwrap()).collect();
        degs.sort();
        assert_eq!(degs, [(1, 1), (1, 1), (1, 1), (1, 1), (2, 0), (2, 0), (2, 0)]);
    }

    #[test]
    fn rho_is_not_bihomogeneous_for_the_same_split() {
        let r = bigrading_check(&pres(CatalogName::Rho7), 4, 3);
        assert!(!r.bihomogeneous);
        assert!(!r.passed);
    }

    #[test]
    fn factorization_through_degree_four() {
        for p in 1..=3 {
            let r = tensor_factorization_check(p, 4).unwrap();
            assert!(r.passed, "p = {p}: {r:?}");
            assert_eq!(r.product, vec![1, 0, 0, 0, 0]);
        }
        let r = tensor_factorization_check(2, 4).unwrap();
        assert_eq!(r.symplectic_dimensions, vec![1, 4, 15, 56, 209]);
    }

    #[test]
    fn congruence_modulo_relations() {
        let p = pres(CatalogName::Alpha1);
        let a = Tensor::word(3, &[1, 2]).unwrap();
        let b = Tensor::word(3, &[2, 1]).unwrap();
        assert!(congruent(&p, &a, &b).unwrap());
        assert!(!congruent(&p, &a, &Tensor::word(3, &[1, 1]).unwrap()).unwrap());
    }
}
