use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;
use x3form_core::algebra::koszul::composites_vanish;
use x3form_core::algebra::{GradedAlgebra, QuadraticPresentation, Tensor};
use x3form_core::field::rational;
use x3form_core::regularity::{intertwiner_space, is_intertwiner, is_nondegenerate, is_three_regular, SlotMatrixFamily};
use x3form_core::{linalg, random, ExteriorThreeForm, Matrix, PrimeField, Rational, Rationals, DEFAULT_PRIMES};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

/// Form with coefficients in `[-2, 2]`, which keeps exact arithmetic cheap.
fn integer_form(seed: u64, n: usize) -> ExteriorThreeForm {
    let mut rng = random::seeded(seed);
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                entries.push(([i, j, k], random::small_integer(&mut rng, 2)));
            }
        }
    }
    ExteriorThreeForm::from_components(n, entries).unwrap()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn evaluate_is_alternating(seed in any::<u64>(), n in 3usize..8) {
        let mut rng = random::seeded(seed);
        let alpha = random::form(&mut rng, n);
        let x = random::vector(&mut rng, n);
        let y = random::vector(&mut rng, n);
        let z = random::vector(&mut rng, n);
        let base = alpha.evaluate(&x, &y, &z).unwrap();
        prop_assert_eq!(alpha.evaluate(&y, &x, &z).unwrap(), -&base);
        prop_assert_eq!(alpha.evaluate(&x, &z, &y).unwrap(), -&base);
        prop_assert_eq!(alpha.evaluate(&y, &z, &x).unwrap(), base.clone());
        prop_assert!(alpha.evaluate(&x, &x, &z).unwrap().is_zero());
    }

    #[test]
    fn slot_matrices_are_antisymmetric_and_kill_their_argument(seed in any::<u64>(), n in 3usize..8) {
        let mut rng = random::seeded(seed);
        let alpha = random::form(&mut rng, n);
        let family = SlotMatrixFamily::from_form(&alpha);
        prop_assert!(family.matrices().iter().all(Matrix::is_antisymmetric));
        let u = random::vector(&mut rng, n);
        prop_assert!(family.at(&u).mul_vec(&u).iter().all(Zero::is_zero));
    }

    #[test]
    fn witnesses_lie_in_the_common_kernel(seed in any::<u64>(), n in 3usize..7) {
        let mut rng = random::seeded(seed);
        let alpha = random::form(&mut rng, n);
        let verdict = is_nondegenerate(&alpha);
        match verdict.witness {
            Some(x) => {
                prop_assert!(!verdict.nondegenerate);
                prop_assert!(x.iter().any(|c| !c.is_zero()));
                let family = SlotMatrixFamily::from_form(&alpha);
                prop_assert!(family.matrices().iter().all(|a| a.mul_vec(&x).iter().all(Zero::is_zero)));
            }
            None => prop_assert!(verdict.nondegenerate),
        }
    }

    #[test]
    fn dimension_four_is_always_degenerate(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        prop_assert!(!is_nondegenerate(&random::form(&mut rng, 4)).nondegenerate);
    }

    #[test]
    fn intertwiner_basis_solves_the_system(seed in any::<u64>(), n in 3usize..7) {
        let alpha = integer_form(seed, n);
        let family = SlotMatrixFamily::from_form(&alpha);
        let space = intertwiner_space(&alpha);
        prop_assert!(space.dimension >= 1);
        prop_assert!(space.basis.iter().all(|(m, nn)| is_intertwiner(&family, m, nn)));
        let id = Matrix::identity(n);
        prop_assert!(is_intertwiner(&family, &id, &id));
    }

    #[test]
    fn prime_and_rational_dimensions_agree(seed in any::<u64>(), n in 3usize..6) {
        let mut rng = random::seeded(seed);
        let pres = QuadraticPresentation::from_form(&random::form(&mut rng, n));
        let q = GradedAlgebra::build(Rationals, &pres, 3).dimensions();
        for p in DEFAULT_PRIMES {
            let fp = GradedAlgebra::build(PrimeField::new(p).unwrap(), &pres, 3).dimensions();
            prop_assert_eq!(&fp, &q);
        }
    }

    #[test]
    fn degree_two_counts_independent_relations(seed in any::<u64>(), n in 3usize..7) {
        let mut rng = random::seeded(seed);
        let alpha = random::form(&mut rng, n);
        let pres = QuadraticPresentation::from_form(&alpha);
        let rows = x3form_core::SparseMatrix::from_dense(
            &Rationals,
            n * n,
            &pres.relations().iter().map(|r| r.coeffs().to_dense(&Rationals, n * n)).collect::<Vec<_>>(),
        );
        let dims = GradedAlgebra::build(Rationals, &pres, 2).dimensions();
        prop_assert_eq!(dims[2], n * n - linalg::rank(&Rationals, &rows));
    }

    #[test]
    fn relations_are_commutator_combinations(seed in any::<u64>(), n in 3usize..7) {
        let mut rng = random::seeded(seed);
        let pres = QuadraticPresentation::from_form(&random::form(&mut rng, n));
        prop_assert!(pres.relations().iter().all(QuadraticPresentation::is_antisymmetric));
    }

    #[test]
    fn bracket_is_antisymmetric(a in 1usize..6, b in 1usize..6, c in 1usize..6) {
        let x = Tensor::word(5, &[a, b]).unwrap();
        let y = Tensor::generator(5, c).unwrap();
        prop_assert!(x.bracket(&y).add(&y.bracket(&x)).is_zero());
    }

    #[test]
    fn rank_of_transpose_agrees(seed in any::<u64>(), rows in 1usize..7, cols in 1usize..7) {
        let mut rng = random::seeded(seed);
        let dense: Vec<Vec<Rational>> = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.random_bool(0.4) { random::small_rational(&mut rng) } else { rational(0) }).collect())
            .collect();
        let m = x3form_core::SparseMatrix::from_dense(&Rationals, cols, &dense);
        prop_assert_eq!(linalg::rank(&Rationals, &m), linalg::rank(&Rationals, &m.transpose()));
    }

    #[test]
    fn koszul_composites_vanish(seed in any::<u64>(), n in 3usize..6) {
        prop_assert!(composites_vanish(&integer_form(seed, n), 3));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]
    #[test]
    fn verdict_is_invariant_under_unimodular_change_of_basis(seed in any::<u64>(), n in 5usize..7) {
        let alpha = integer_form(seed, n);
        let mut rng = random::seeded(seed.wrapping_add(1));
        let q = random::unimodular(&mut rng, n);
        let moved = alpha.gl_transform(&q).unwrap();
        let (a, b) = (is_three_regular(&alpha), is_three_regular(&moved));
        prop_assert_eq!(a.nondegenerate, b.nondegenerate);
        prop_assert_eq!(a.intertwiner_dimension, b.intertwiner_dimension);
        prop_assert_eq!(a.three_regular, b.three_regular);
    }
}
