//! Degreewise exactness of `0 → A → Aⁿ → Aⁿ → A → K → 0`, with maps given by
//! right multiplication by the row `xᵗ`, the matrix `A(x)` and the column `x`.
//!
//! Slice `D` of the complex is
//! `0 → A_{D−3} → A_{D−2}ⁿ → A_{D−1}ⁿ → A_D`, and each map is realized on the
//! standard-word bases by lift, multiply, reduce.

use std::collections::BTreeMap;

use log::warn;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::graded::GradedAlgebra;
use super::hilbert::{self, Certificate, CertificateField, RATIONAL_MAX_DEGREE};
use super::presentation::QuadraticPresentation;
use crate::error::{Error, Result};
use crate::field::{Field, Rational, Rationals};
use crate::forms::ExteriorThreeForm;
use crate::linalg;
use crate::regularity::{self, SlotMatrixFamily};
use crate::sparse::{SparseMatrix, SparseVec};

pub const DEFAULT_KOSZUL_DEGREE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulSlice {
    /// `rank(xᵗ: A_{D−3} → A_{D−2}ⁿ)`.
    pub rank_row: usize,
    /// `rank(A(x): A_{D−2}ⁿ → A_{D−1}ⁿ)`.
    pub rank_matrix: usize,
    /// `rank(x: A_{D−1}ⁿ → A_D)`.
    pub rank_column: usize,
    pub injective: bool,
    pub exact_first_inner: bool,
    pub exact_second_inner: bool,
    pub surjective: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulExactnessReport {
    pub max_degree: usize,
    pub degrees: BTreeMap<usize, KoszulSlice>,
    /// Largest `D` such that slices `1..=D` are all exact.
    pub exact_up_to: usize,
    pub exact: bool,
    /// First slice that fails, if any.
    pub first_failure: Option<usize>,
    pub certificate: Certificate,
}

/// `A_k` scaled by a common factor so that every entry is an integer.
fn integral_slots(family: &SlotMatrixFamily) -> Vec<Vec<Vec<Rational>>> {
    let mut den = num_bigint::BigInt::one();
    for a in family.matrices() {
        for v in a.as_flat() {
            den = den.lcm(v.denom());
        }
    }
    let scale = Rational::from_integer(den);
    family.matrices().iter().map(|a| a.scale(&scale).to_rows()).collect()
}

struct Tables<F: Field> {
    /// `mult[d][i][k]`: basis element `i` of `A_d` times `x^{k+1}`.
    mult: Vec<Vec<Vec<SparseVec<F::Elem>>>>,
}

impl<F: Field> Tables<F> {
    fn new(alg: &GradedAlgebra<F>, top: usize) -> Self {
        let n = alg.n();
        let mult = (0..top)
            .map(|d| (0..alg.dimension(d)).map(|i| (0..n).map(|k| alg.right_multiply(d, i, k)).collect()).collect())
            .collect();
        Tables { mult }
    }
}

fn shifted<E: Clone>(v: &SparseVec<E>, offset: usize) -> impl Iterator<Item = (usize, E)> + '_ {
    v.entries().iter().map(move |(c, x)| (c + offset, x.clone()))
}

fn slice<F: Field>(alg: &GradedAlgebra<F>, slots: &[Vec<Vec<F::Elem>>], tables: &Tables<F>, top: usize) -> KoszulSlice {
    let f = alg.field();
    let n = alg.n();
    let h = |d: isize| if d < 0 { 0 } else { alg.dimension(d as usize) };
    let top_i = top as isize;

    let rank_row = if top >= 3 {
        let d = top - 3;
        let mut m = SparseMatrix::new(n * h(top_i - 2));
        for row in &tables.mult[d] {
            let pairs = (0..n).flat_map(|i| shifted(&row[i], i * h(top_i - 2))).collect();
            m.push_row(SparseVec::from_pairs(f, pairs));
        }
        linalg::rank(f, &m)
    } else {
        0
    };

    let rank_matrix = if top >= 2 {
        let d = top - 2;
        let width = h(top_i - 1);
        let mut m = SparseMatrix::new(n * width);
        for i in 0..n {
            for row in &tables.mult[d] {
                let mut pairs = Vec::new();
                for j in 0..n {
                    for (k, slot) in slots.iter().enumerate() {
                        let c = &slot[i][j];
                        if !f.is_zero(c) {
                            pairs.extend(row[k].entries().iter().map(|(col, x)| (col + j * width, f.mul(c, x))));
                        }
                    }
                }
                m.push_row(SparseVec::from_pairs(f, pairs));
            }
        }
        linalg::rank(f, &m)
    } else {
        0
    };

    let rank_column = {
        let d = top - 1;
        let mut m = SparseMatrix::new(h(top_i));
        for i in 0..n {
            for row in &tables.mult[d] {
                m.push_row(row[i].clone());
            }
        }
        linalg::rank(f, &m)
    };

    let injective = rank_row == h(top_i - 3);
    let exact_first_inner = n * h(top_i - 2) - rank_matrix == rank_row;
    let exact_second_inner = n * h(top_i - 1) - rank_column == rank_matrix;
    let surjective = rank_column == h(top_i);
    KoszulSlice {
        rank_row,
        rank_matrix,
        rank_column,
        injective,
        exact_first_inner,
        exact_second_inner,
        surjective,
        exact: injective && exact_first_inner && exact_second_inner && surjective,
    }
}

/// Slices `1..=dmax` over a single field.
pub fn koszul_slices<F: Field>(
    field: F,
    pres: &QuadraticPresentation,
    family: &SlotMatrixFamily,
    dmax: usize,
) -> BTreeMap<usize, KoszulSlice> {
    let alg = GradedAlgebra::build(field, pres, dmax);
    let f = alg.field();
    let slots: Vec<Vec<Vec<F::Elem>>> = integral_slots(family)
        .iter()
        .map(|a| {
            a.iter()
                .map(|r| r.iter().map(|q| f.from_rational(q).expect("integer entries")).collect())
                .collect()
        })
        .collect();
    let tables = Tables::new(&alg, dmax);
    (1..=dmax).map(|top| (top, slice(&alg, &slots, &tables, top))).collect()
}

fn summarize(dmax: usize, degrees: BTreeMap<usize, KoszulSlice>, certificate: Certificate) -> KoszulExactnessReport {
    let first_failure = degrees.iter().find(|(_, s)| !s.exact).map(|(d, _)| *d);
    KoszulExactnessReport {
        max_degree: dmax,
        exact_up_to: first_failure.map_or(dmax, |d| d - 1),
        exact: first_failure.is_none(),
        first_failure,
        degrees,
        certificate,
    }
}

pub fn koszul_complex_check(alpha: &ExteriorThreeForm, dmax: usize, primes: [u64; 2]) -> Result<KoszulExactnessReport> {
    hilbert::check_degree(dmax)?;
    if !regularity::is_three_regular(alpha).three_regular {
        warn!("Koszul complex checked for a form that is not 3-regular");
    }
    let pres = QuadraticPresentation::from_form(alpha);
    let family = SlotMatrixFamily::from_form(alpha);
    if dmax <= RATIONAL_MAX_DEGREE {
        let degrees = koszul_slices(Rationals, &pres, &family, dmax);
        let certificate =
            Certificate { field: CertificateField::Rational, primes: Vec::new(), rational_through: dmax };
        return Ok(summarize(dmax, degrees, certificate));
    }
    let (f1, f2) = hilbert::prime_pair(primes)?;
    let (low, (first, second)) = rayon::join(
        || koszul_slices(Rationals, &pres, &family, RATIONAL_MAX_DEGREE),
        || {
            rayon::join(
                || koszul_slices(f1, &pres, &family, dmax),
                || koszul_slices(f2, &pres, &family, dmax),
            )
        },
    );
    let mut degrees = low;
    for d in RATIONAL_MAX_DEGREE + 1..=dmax {
        let (a, b) = (&first[&d], &second[&d]);
        if a != b {
            let (x, y) = [(a.rank_row, b.rank_row), (a.rank_matrix, b.rank_matrix), (a.rank_column, b.rank_column)]
                .into_iter()
                .find(|(x, y)| x != y)
                .unwrap_or((0, 0));
            return Err(Error::CertificateMismatch { degree: d, first: x, second: y });
        }
        degrees.insert(d, a.clone());
    }
    let certificate = Certificate {
        field: CertificateField::DualPrime,
        primes: primes.to_vec(),
        rational_through: RATIONAL_MAX_DEGREE,
    };
    Ok(summarize(dmax, degrees, certificate))
}

/// Whether the composite of consecutive maps vanishes in slice `top`; a
/// consistency check on the conventions above.
pub fn composites_vanish(alpha: &ExteriorThreeForm, top: usize) -> bool {
    let pres = QuadraticPresentation::from_form(alpha);
    let family = SlotMatrixFamily::from_form(alpha);
    let alg = GradedAlgebra::build(Rationals, &pres, top);
    let f = &Rationals;
    let n = alg.n();
    let slots = integral_slots(&family);
    // (a x^i)_i followed by A(x): Σ_i a·x^i·A(x)_{ij} must vanish in A_{top−1}.
    let matrix_image = |d: usize, coeffs_per_i: &dyn Fn(usize) -> SparseVec<Rational>| -> Vec<SparseVec<Rational>> {
        (0..n)
            .map(|j| {
                let mut acc = SparseVec::new();
                for i in 0..n {
                    let a = coeffs_per_i(i);
                    for (k, slot) in slots.iter().enumerate() {
                        let c = &slot[i][j];
                        if c.is_zero() {
                            continue;
                        }
                        for (b, x) in a.entries() {
                            let prod = alg.right_multiply(d, *b, k).scale(f, &(c * x));
                            acc = acc.combine(f, &Rational::one(), &Rational::one(), &prod);
                        }
                    }
                }
                acc
            })
            .collect()
    };
    let first_ok = top < 3
        || (0..alg.dimension(top - 3)).all(|w| {
            let image = matrix_image(top - 2, &|i| alg.right_multiply(top - 3, w, i));
            image.iter().all(SparseVec::is_empty)
        });
    let second_ok = top < 2
        || (0..n).all(|i0| {
            (0..alg.dimension(top - 2)).all(|w| {
                let unit = |i: usize| {
                    if i == i0 {
                        SparseVec::from_sorted_unchecked(vec![(w, Rational::one())])
                    } else {
                        SparseVec::new()
                    }
                };
                let image = matrix_image(top - 2, &unit);
                let mut acc = SparseVec::new();
                for (j, v) in image.iter().enumerate() {
                    for (b, x) in v.entries() {
                        acc = acc.combine(f, &Rational::one(), x, &alg.right_multiply(top - 1, *b, j));
                    }
                }
                acc.is_empty()
            })
        });
    first_ok && second_ok
}
