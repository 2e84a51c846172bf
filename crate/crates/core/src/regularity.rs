//! Nondegeneracy, 3-regularity, Lie closure and infinitesimal stabilizer of a
//! 3-form, all by exact linear algebra on the slot matrices `A_k`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::field::{Rational, Rationals};
use crate::forms::ExteriorThreeForm;
use crate::linalg::{self, Echelon};
use crate::matrix::Matrix;
use crate::random;
use crate::sparse::{SparseMatrix, SparseVec};

/// The matrices `A_1, …, A_n` with `(A_k)^i_j = α_{ikj}`.
///
/// Together they encode `A(x) = A_k x^k`, whose entry `(i, j)` is the linear
/// form `Σ_k (A_k)^i_j x^k`, and the relations read `∂x = A(x)·x`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlotMatrixFamily {
    dim: usize,
    matrices: Vec<Matrix>,
}

impl SlotMatrixFamily {
    pub fn from_form(alpha: &ExteriorThreeForm) -> Self {
        let n = alpha.dim();
        let matrices = (1..=n)
            .map(|k| {
                let mut m = Matrix::zeros(n, n);
                for i in 1..=n {
                    for j in 1..=n {
                        m[(i - 1, j - 1)] = alpha.component(i, k, j);
                    }
                }
                m
            })
            .collect();
        SlotMatrixFamily { dim: n, matrices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `A_1, …, A_n` (index 0 holds `A_1`).
    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `A(u) = Σ_k u^k A_k`.
    pub fn at(&self, u: &[Rational]) -> Matrix {
        assert_eq!(u.len(), self.dim);
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (a, uk) in self.matrices.iter().zip(u) {
            if !uk.is_zero() {
                out = out.add(&a.scale(uk));
            }
        }
        out
    }

    /// Entry `(i, j)` of `A(x)` (0-based) as `(k, coefficient)` pairs with
    /// 1-based variable index `k`.
    pub fn symbolic_entry(&self, i: usize, j: usize) -> Vec<(usize, Rational)> {
        self.matrices
            .iter()
            .enumerate()
            .filter(|(_, a)| !a[(i, j)].is_zero())
            .map(|(k, a)| (k + 1, a[(i, j)].clone()))
            .collect()
    }

    /// `A(x)` rendered entrywise, e.g. `"0"`, `"-x3"`, `"x2 - x5"`.
    pub fn symbolic_strings(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| format_linear(&self.symbolic_entry(i, j))).collect())
            .collect()
    }
}

pub fn format_linear(terms: &[(usize, Rational)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (idx, (k, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (idx, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let mag = c.abs();
        if !mag.is_one() {
            s.push_str(&crate::field::format_rational(&mag));
        }
        s.push_str(&format!("x{k}"));
    }
    s
}

pub fn slot_matrices(alpha: &ExteriorThreeForm) -> SlotMatrixFamily {
    SlotMatrixFamily::from_form(alpha)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Nondegeneracy {
    pub nondegenerate: bool,
    /// Nonzero `X` with `A_k X = 0` for all `k` when degenerate.
    pub witness: Option<Vec<Rational>>,
}

/// Kernel of the stacked `n²×n` matrix `(A_1; …; A_n)`.
pub fn is_nondegenerate(alpha: &ExteriorThreeForm) -> Nondegeneracy {
    let family = SlotMatrixFamily::from_form(alpha);
    let stacked = family
        .matrices
        .iter()
        .map(Matrix::to_sparse)
        .reduce(SparseMatrix::vstack)
        .expect("n >= 3");
    let kernel = linalg::kernel_basis(&Rationals, &stacked);
    Nondegeneracy { nondegenerate: kernel.is_empty(), witness: kernel.into_iter().next() }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntertwinerSpace {
    pub dimension: usize,
    /// Basis pairs `(M, N)` with `M A_k = A_k N` for every `k`.
    pub basis: Vec<(Matrix, Matrix)>,
}

/// The linear system `M A_k − A_k N = 0` in the `2n²` unknowns `(M, N)`,
/// flattened row-major with `M` first.
pub fn intertwiner_system(family: &SlotMatrixFamily) -> SparseMatrix<Rational> {
    let n = family.dim;
    let mut sys = SparseMatrix::new(2 * n * n);
    for a in &family.matrices {
        for i in 0..n {
            for j in 0..n {
                let mut pairs = Vec::new();
                for l in 0..n {
                    if !a[(l, j)].is_zero() {
                        pairs.push((i * n + l, a[(l, j)].clone()));
                    }
                    if !a[(i, l)].is_zero() {
                        pairs.push((n * n + l * n + j, -&a[(i, l)]));
                    }
                }
                sys.push_row(SparseVec::from_pairs(&Rationals, pairs));
            }
        }
    }
    sys
}

pub fn intertwiner_space(alpha: &ExteriorThreeForm) -> IntertwinerSpace {
    let family = SlotMatrixFamily::from_form(alpha);
    let n = family.dim;
    let kernel = linalg::kernel_basis(&Rationals, &intertwiner_system(&family));
    let basis: Vec<(Matrix, Matrix)> = kernel
        .into_iter()
        .map(|v| {
            let (m, nn) = v.split_at(n * n);
            (Matrix::from_flat(n, n, m.to_vec()), Matrix::from_flat(n, n, nn.to_vec()))
        })
        .collect();
    IntertwinerSpace { dimension: basis.len(), basis }
}

/// Whether `(M, N)` satisfies `M A_k = A_k N` for all `k`.
pub fn is_intertwiner(family: &SlotMatrixFamily, m: &Matrix, n: &Matrix) -> bool {
    family.matrices.iter().all(|a| (m * a) == (a * n))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityVerdict {
    pub nondegenerate: bool,
    pub witness: Option<Vec<Rational>>,
    pub intertwiner_dimension: usize,
    pub intertwiner_basis: Vec<(Matrix, Matrix)>,
    pub three_regular: bool,
}

impl RegularityVerdict {
    /// Human-readable reason when the form is not 3-regular.
    pub fn reason(&self) -> Option<String> {
        if self.three_regular {
            None
        } else if !self.nondegenerate {
            Some("degenerate: A_k X = 0 for all k with X != 0".into())
        } else if self.intertwiner_dimension >= 2 {
            Some(format!("intertwiner space has dimension {}", self.intertwiner_dimension))
        } else {
            Some("intertwiner space is not spanned by (1, 1)".into())
        }
    }
}

pub fn is_three_regular(alpha: &ExteriorThreeForm) -> RegularityVerdict {
    let nd = is_nondegenerate(alpha);
    let space = intertwiner_space(alpha);
    let scalar_pair = match space.basis.as_slice() {
        [(m, n)] => match (m.scalar_multiple_of_identity(), n.scalar_multiple_of_identity()) {
            (Some(a), Some(b)) => a == b && !a.is_zero(),
            _ => false,
        },
        _ => false,
    };
    RegularityVerdict {
        nondegenerate: nd.nondegenerate,
        witness: nd.witness,
        intertwiner_dimension: space.dimension,
        three_regular: nd.nondegenerate && scalar_pair,
        intertwiner_basis: space.basis,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LieClosureReport {
    pub dimension: usize,
    /// `n(n−1)/2`.
    pub so_dimension: usize,
    pub equals_so: bool,
    /// Bracket rounds run before the dimension settled.
    pub rounds: usize,
    /// Every bracket of two basis elements lies back in the span.
    pub closed: bool,
    /// Dimension of the infinitesimal stabilizer of the form, when computed
    /// alongside the closure.
    pub stabilizer_dimension: Option<usize>,
    #[serde(skip)]
    pub basis: Vec<Matrix>,
}

fn flat_row(m: &Matrix) -> SparseVec<Rational> {
    SparseVec::from_dense(&Rationals, m.as_flat())
}

/// Smallest bracket-closed subspace of `so(n)` containing the `A_k`. Each
/// round brackets the current basis against the generators; iteration stops
/// once two consecutive rounds add nothing.
pub fn lie_closure(family: &SlotMatrixFamily) -> LieClosureReport {
    let n = family.dim;
    let mut span = Echelon::new(Rationals, n * n);
    let mut basis: Vec<Matrix> = Vec::new();
    for a in &family.matrices {
        if span.insert(flat_row(a)).is_some() {
            basis.push(a.clone());
        }
    }
    let mut rounds = 0;
    let mut quiet = 0;
    while quiet < 2 {
        rounds += 1;
        let before = basis.len();
        let snapshot = basis.clone();
        for b in &snapshot {
            for a in &family.matrices {
                let c = b.commutator(a);
                if span.insert(flat_row(&c)).is_some() {
                    basis.push(c);
                }
            }
        }
        quiet = if basis.len() == before { quiet + 1 } else { 0 };
    }
    let closed = basis
        .iter()
        .enumerate()
        .all(|(i, x)| basis[i + 1..].iter().all(|y| span.contains(&flat_row(&x.commutator(y)))));
    debug_assert!(basis.iter().all(Matrix::is_antisymmetric));
    let so_dimension = n * (n - 1) / 2;
    LieClosureReport {
        dimension: basis.len(),
        so_dimension,
        equals_so: basis.len() == so_dimension,
        rounds,
        closed,
        stabilizer_dimension: None,
        basis,
    }
}

/// [`lie_closure`] of the slot matrices together with the stabilizer dimension.
pub fn lie_closure_of_form(alpha: &ExteriorThreeForm) -> LieClosureReport {
    let mut report = lie_closure(&SlotMatrixFamily::from_form(alpha));
    report.stabilizer_dimension = Some(stabilizer_dimension(alpha));
    report
}

#[derive(Clone, Debug, PartialEq)]
pub struct Stabilizer {
    pub dimension: usize,
    pub basis: Vec<Matrix>,
}

/// The `n³×n²` system `α(LX,Y,Z) + α(X,LY,Z) + α(X,Y,LZ) = 0` evaluated on
/// basis vectors; unknown `L_{ij}` sits at column `i·n + j`.
pub fn stabilizer_system(alpha: &ExteriorThreeForm) -> SparseMatrix<Rational> {
    let n = alpha.dim();
    let mut sys = SparseMatrix::new(n * n);
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                let mut pairs = Vec::new();
                for j in 1..=n {
                    // L e_a = Σ_j L_{ja} e_j
                    for (slot, coeff) in [
                        (a, alpha.component(j, b, c)),
                        (b, alpha.component(a, j, c)),
                        (c, alpha.component(a, b, j)),
                    ] {
                        if !coeff.is_zero() {
                            pairs.push(((j - 1) * n + (slot - 1), coeff));
                        }
                    }
                }
                sys.push_row(SparseVec::from_pairs(&Rationals, pairs));
            }
        }
    }
    sys
}

pub fn stabilizer(alpha: &ExteriorThreeForm) -> Stabilizer {
    let n = alpha.dim();
    let basis: Vec<Matrix> = linalg::kernel_basis(&Rationals, &stabilizer_system(alpha))
        .into_iter()
        .map(|v| Matrix::from_flat(n, n, v))
        .collect();
    Stabilizer { dimension: basis.len(), basis }
}

pub fn stabilizer_dimension(alpha: &ExteriorThreeForm) -> usize {
    stabilizer(alpha).dimension
}

/// `((k, l), (i, j), sign)` as described on [`WedgeCheck::correspondence`].
pub type PairMatch = ((usize, usize), (usize, usize), i32);

/// Outcome of comparing `[A(u), A(v)]` against `u∧v`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WedgeCheck {
    pub passed: bool,
    pub trials: usize,
    pub seed: u64,
    /// `(k, l) ← sign · (i, j)`: upper entry `(k, l)` of the commutator equals
    /// `sign · (u^i v^j − u^j v^i)`; all indices 1-based.
    pub correspondence: Vec<PairMatch>,
}

fn upper_entries(m: &Matrix) -> Vec<Rational> {
    let n = m.nrows();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for k in 0..n {
        for l in k + 1..n {
            out.push(m[(k, l)].clone());
        }
    }
    out
}

fn wedge(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let n = u.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(&u[i] * &v[j] - &u[j] * &v[i]);
        }
    }
    out
}

fn sorted_abs(v: &[Rational]) -> Vec<Rational> {
    let mut a: Vec<Rational> = v.iter().filter(|x| !x.is_zero()).map(Signed::abs).collect();
    a.sort();
    a
}

/// For the family of `α^(p)`: the commutator `[A(u), A(v)]` has the components
/// of `u∧v` as its entries, up to a fixed signed permutation.
///
/// The permutation is read off from basis pairs `(e_i, e_j)` and must be a
/// genuine signed permutation; `trials` seeded random integer pairs are then
/// checked against it, along with the multiset of absolute values.
pub fn commutator_wedge_check(p: usize, trials: usize, seed: u64) -> WedgeCheck {
    let form = crate::forms::CatalogName::AlphaP(p).build().expect("p >= 1").form;
    let family = SlotMatrixFamily::from_form(&form);
    let n = family.dim;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let unit = |i: usize| -> Vec<Rational> {
        (0..n).map(|k| if k == i { Rational::one() } else { Rational::zero() }).collect()
    };

    // coeff[row][col]: coefficient of wedge component `col` in upper entry `row`.
    let mut coeff = vec![vec![Rational::zero(); pairs.len()]; pairs.len()];
    for (col, &(i, j)) in pairs.iter().enumerate() {
        let c = family.at(&unit(i)).commutator(&family.at(&unit(j)));
        for (row, v) in upper_entries(&c).into_iter().enumerate() {
            coeff[row][col] = v;
        }
    }
    let mut correspondence = Vec::new();
    let mut col_used = vec![false; pairs.len()];
    let mut is_signed_perm = true;
    for (row, r) in coeff.iter().enumerate() {
        let nz: Vec<usize> = (0..r.len()).filter(|&c| !r[c].is_zero()).collect();
        match nz.as_slice() {
            [c] if r[*c].abs().is_one() && !col_used[*c] => {
                col_used[*c] = true;
                let sign = if r[*c].is_negative() { -1 } else { 1 };
                let (k, l) = pairs[row];
                let (i, j) = pairs[*c];
                correspondence.push(((k + 1, l + 1), (i + 1, j + 1), sign));
            }
            _ => is_signed_perm = false,
        }
    }

    let mut rng = random::seeded(seed);
    let mut passed = is_signed_perm;
    for _ in 0..trials {
        if !passed {
            break;
        }
        let u = random::integer_vector(&mut rng, n, 5);
        let v = random::integer_vector(&mut rng, n, 5);
        let c = upper_entries(&family.at(&u).commutator(&family.at(&v)));
        let w = wedge(&u, &v);
        let mapped_ok = correspondence.iter().enumerate().all(|(row, (_, (i, j), sign))| {
            let col = pairs.iter().position(|&pq| pq == (i - 1, j - 1)).expect("pair exists");
            let expected = if *sign < 0 { -&w[col] } else { w[col].clone() };
            c[row] == expected
        });
        passed = mapped_ok && sorted_abs(&c) == sorted_abs(&w);
    }
    WedgeCheck { passed, trials, seed, correspondence }
}
