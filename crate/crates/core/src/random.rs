//! Seeded generators for the randomized checks. All randomness in the crate
//! flows through [`seeded`] so that reports are reproducible from the seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{rational, Rational};
use crate::forms::ExteriorThreeForm;
use crate::matrix::Matrix;

pub const DEFAULT_SEED: u64 = 20_240_917;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in `[-9, 9]` and denominator in `[1, 4]`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.random_range(-9i64..=9).into(), rng.random_range(1i64..=4).into())
}

pub fn small_integer<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    rational(rng.random_range(-bound..=bound))
}

pub fn vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}

pub fn integer_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Rational> {
    (0..n).map(|_| small_integer(rng, bound)).collect()
}

/// Integer matrix of determinant ±1: a random permutation followed by
/// elementary row additions.
pub fn unimodular<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut m = Matrix::zeros(n, n);
    for (i, &p) in perm.iter().enumerate() {
        m[(i, p)] = rational(1);
    }
    for _ in 0..3 * n {
        let src = rng.random_range(0..n);
        let dst = rng.random_range(0..n);
        if src == dst {
            continue;
        }
        let c = rational(rng.random_range(-2i64..=2));
        for j in 0..n {
            let v = &m[(src, j)] * &c;
            m[(dst, j)] += v;
        }
    }
    m
}

/// Form with every coefficient drawn by [`small_rational`] (zeros allowed).
pub fn form<R: Rng>(rng: &mut R, n: usize) -> ExteriorThreeForm {
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                entries.push(([i, j, k], small_rational(rng)));
            }
        }
    }
    ExteriorThreeForm::from_components(n, entries).expect("valid dimension")
}
