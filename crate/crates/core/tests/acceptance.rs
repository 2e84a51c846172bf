//! Acceptance suite: one PASS/FAIL line per criterion, with its runtime
//! against the allowed budget. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::Rng;
use x3form_core::algebra::{
    centrality_check, derivation_descends, graded_dimensions, hilbert_series, koszul_complex_check,
    matrix_identity_report, tensor_factorization_check, verify_matrix_identity_lemma, QuadraticPresentation,
    TripleDerivation,
};
use x3form_core::field::rational;
use x3form_core::regularity::{
    self, commutator_wedge_check, is_intertwiner, is_nondegenerate, is_three_regular, lie_closure_of_form,
    SlotMatrixFamily,
};
use x3form_core::{random, CatalogName, ExteriorThreeForm, Matrix, Rational, DEFAULT_PRIMES};

const SEED: u64 = random::DEFAULT_SEED;

type Outcome = Result<Vec<String>, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn form(name: CatalogName) -> ExteriorThreeForm {
    name.build().expect("catalog entry builds").form
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn degenerate_in_dimension_four() -> Outcome {
    let mut rng = random::seeded(SEED);
    for trial in 0..100 {
        let alpha = random::form(&mut rng, 4);
        let verdict = is_nondegenerate(&alpha);
        ensure(!verdict.nondegenerate, format!("trial {trial}: reported nondegenerate"))?;
        let x = verdict.witness.ok_or(format!("trial {trial}: no witness"))?;
        ensure(x.iter().any(|c| !c.is_zero()), format!("trial {trial}: zero witness"))?;
        let family = SlotMatrixFamily::from_form(&alpha);
        let kills = family.matrices().iter().all(|a| a.mul_vec(&x).iter().all(Zero::is_zero));
        ensure(kills, format!("trial {trial}: witness not in the common kernel"))?;
    }
    Ok(vec!["100 forms degenerate, every witness re-checked".into()])
}

fn block_diagonal(n: usize, blocks: &[(usize, usize, Rational)]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for (row0, col0, c) in blocks {
        for t in 0..3 {
            m[(row0 + t, col0 + t)] = c.clone();
        }
    }
    m
}

fn regularity_verdicts() -> Outcome {
    let regular = [
        CatalogName::Alpha1,
        CatalogName::Alpha2,
        CatalogName::Rho7,
        CatalogName::Beta7,
        CatalogName::Alpha3,
        CatalogName::Alpha3Prime,
        CatalogName::Alpha3DoublePrime,
    ];
    for name in &regular {
        let v = is_three_regular(&form(name.clone()));
        ensure(v.three_regular, format!("{name} not 3-regular"))?;
    }
    let mut rng = random::seeded(SEED);
    let mut points = Vec::new();
    for _ in 0..5 {
        let t0 = random::small_rational(&mut rng);
        let t1 = random::small_rational(&mut rng);
        let t2 = Rational::one() - &t0 - &t1;
        let name = CatalogName::AlphaPlane(t0, t1, t2);
        let v = is_three_regular(&form(name.clone()));
        ensure(v.three_regular, format!("{name} not 3-regular"))?;
        points.push(name.to_string());
    }

    let (lambda, mu) = (rational(2), rational(-3));
    let gamma = form(CatalogName::Gamma6);
    let gv = is_three_regular(&gamma);
    ensure(!gv.three_regular && gv.intertwiner_dimension >= 2, "gamma verdict")?;
    let m = block_diagonal(6, &[(0, 0, lambda.clone()), (3, 3, mu.clone())]);
    ensure(is_intertwiner(&SlotMatrixFamily::from_form(&gamma), &m, &m), "gamma block pair not an intertwiner")?;

    let omega = form(CatalogName::Omega6);
    let ov = is_three_regular(&omega);
    ensure(!ov.three_regular && ov.intertwiner_dimension >= 2, "omega verdict")?;
    let m = block_diagonal(6, &[(0, 3, mu.clone())]);
    let n = block_diagonal(6, &[(3, 0, mu.clone())]);
    ensure(is_intertwiner(&SlotMatrixFamily::from_form(&omega), &m, &n), "omega nilpotent pair not an intertwiner")?;

    Ok(vec![
        format!("plane points {}", points.join("; ")),
        format!("gamma intertwiner dim {}, omega intertwiner dim {}", gv.intertwiner_dimension, ov.intertwiner_dimension),
    ])
}

fn lie_closures() -> Outcome {
    let mut dims = Vec::new();
    for p in 1..=3 {
        let report = lie_closure_of_form(&form(CatalogName::AlphaP(p)));
        let want = p * (2 * p + 1);
        ensure(report.closed && report.dimension == want, format!("p={p}: got {} want {want}", report.dimension))?;
        dims.push(report.dimension.to_string());
    }
    Ok(vec![format!("dimensions {}", dims.join(", "))])
}

fn stabilizer_of_double_prime() -> Outcome {
    let d = regularity::stabilizer_dimension(&form(CatalogName::Alpha3DoublePrime));
    ensure(d == 14, format!("got {d}"))?;
    Ok(vec![format!("dimension {d}")])
}

fn hilbert_series_values() -> Outcome {
    let seven = [1usize, 7, 42, 246, 1435, 8365];
    let cases: Vec<(CatalogName, usize, Vec<usize>)> = vec![
        (CatalogName::Rho7, 5, seven.to_vec()),
        (CatalogName::Beta7, 5, seven.to_vec()),
        (CatalogName::Alpha3, 5, seven.to_vec()),
        (CatalogName::Alpha3Prime, 5, seven.to_vec()),
        (CatalogName::Alpha3DoublePrime, 5, seven.to_vec()),
        (CatalogName::Alpha2, 4, vec![1, 5, 20, 76, 285]),
        (CatalogName::Alpha1, 5, vec![1, 3, 6, 10, 15, 21]),
    ];
    let mut notes = Vec::new();
    for (name, dmax, want) in cases {
        let pres = QuadraticPresentation::from_form(&form(name.clone()));
        let h = hilbert_series(&pres, dmax, DEFAULT_PRIMES).map_err(|e| format!("{name}: {e}"))?;
        ensure(h.actual == want, format!("{name}: got {:?}", h.actual))?;
        notes.push(format!("{name} {:?} via {:?}", h.actual, h.certificate.field));
    }
    Ok(notes)
}

fn gamma_negative_control() -> Outcome {
    let pres = QuadraticPresentation::from_form(&form(CatalogName::Gamma6));
    let h = hilbert_series(&pres, 3, DEFAULT_PRIMES).map_err(|e| e.to_string())?;
    ensure(h.actual[3] == 146 && h.predicted[3] == 145, format!("got {} vs {}", h.actual[3], h.predicted[3]))?;
    ensure(h.first_mismatch == Some(3), format!("first mismatch {:?}", h.first_mismatch))?;
    Ok(vec!["degree 3: 146 computed, 145 predicted".into()])
}

fn koszul_exactness() -> Outcome {
    let mut notes = Vec::new();
    for name in [CatalogName::Rho7, CatalogName::Beta7] {
        let r = koszul_complex_check(&form(name.clone()), 4, DEFAULT_PRIMES).map_err(|e| e.to_string())?;
        ensure(r.exact && r.exact_up_to == 4, format!("{name}: exact up to {}", r.exact_up_to))?;
        notes.push(format!("{name} exact through slice 4"));
    }
    let r = koszul_complex_check(&form(CatalogName::Gamma6), 4, DEFAULT_PRIMES).map_err(|e| e.to_string())?;
    ensure(r.first_failure == Some(3), format!("gamma first failure {:?}", r.first_failure))?;
    notes.push("gamma6 fails at slice 3".into());
    Ok(notes)
}

fn matrix_identity() -> Outcome {
    let pres = QuadraticPresentation::from_form(&form(CatalogName::Beta7));
    let holds = verify_matrix_identity_lemma(&pres).map_err(|e| e.to_string())?;
    let perturbed = matrix_identity_report(&pres, Some((0, 0))).map_err(|e| e.to_string())?;
    ensure(holds, "identity fails")?;
    ensure(!perturbed.holds, "perturbed identity still holds")?;
    Ok(vec!["identity holds, sign flip breaks it".into()])
}

fn centrality() -> Outcome {
    for p in 1..=3 {
        let pres = QuadraticPresentation::from_form(&form(CatalogName::AlphaP(p)));
        let central = centrality_check(&pres, 2 * p + 1).map_err(|e| e.to_string())?;
        ensure(central, format!("p={p}: top generator not central"))?;
    }
    let rho = QuadraticPresentation::from_form(&form(CatalogName::Rho7));
    ensure(!centrality_check(&rho, 1).map_err(|e| e.to_string())?, "rho7: generator 1 central")?;
    Ok(vec!["top generator central for p=1..3, rho7 generator 1 not central".into()])
}

fn derivations_and_factorization() -> Outcome {
    let pres = QuadraticPresentation::symplectic(3).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for d in TripleDerivation::ALL {
        let descends = derivation_descends(&pres, &d.derivation()).map_err(|e| e.to_string())?;
        notes.push(format!("{d:?} descends: {descends}"));
        let expected = matches!(d, TripleDerivation::SecondTriple | TripleDerivation::BothTriples);
        ensure(descends == expected, format!("{d:?}: descends = {descends}"))?;
    }
    for p in 1..=3 {
        let r = tensor_factorization_check(p, 4).map_err(|e| e.to_string())?;
        ensure(r.passed, format!("p={p}: product {:?}", r.product))?;
    }
    notes.push("factorization holds for p=1..3 through degree 4".into());
    Ok(notes)
}

fn property_suites() -> Outcome {
    let mut rng = random::seeded(SEED);
    for _ in 0..20 {
        let alpha = random::form(&mut rng, 7);
        let v: Vec<Vec<Rational>> = (0..3).map(|_| random::vector(&mut rng, 7)).collect();
        let base = alpha.evaluate(&v[0], &v[1], &v[2]).unwrap();
        let perms = [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1)];
        for (p, sign) in perms {
            let got = alpha.evaluate(&v[p[0]], &v[p[1]], &v[p[2]]).unwrap();
            ensure(got == &base * rational(sign), format!("evaluate not antisymmetric under {p:?}"))?;
        }
    }

    let rho = form(CatalogName::Rho7);
    let signature = |alpha: &ExteriorThreeForm| -> Result<(bool, usize, Vec<usize>), String> {
        let v = is_three_regular(alpha);
        let pres = QuadraticPresentation::from_form(alpha);
        let (dims, _) = graded_dimensions(&pres, 3, DEFAULT_PRIMES).map_err(|e| e.to_string())?;
        Ok((v.nondegenerate, v.intertwiner_dimension, dims))
    };
    let base = signature(&rho)?;
    for t in 0..10 {
        let q = random::unimodular(&mut rng, 7);
        let moved = rho.gl_transform(&q).map_err(|e| e.to_string())?;
        let sig = signature(&moved)?;
        ensure(sig == base, format!("transform {t}: {sig:?} vs {base:?}"))?;
    }

    let seed: u64 = rng.random();
    for p in 1..=3 {
        let w = commutator_wedge_check(p, 10, seed);
        ensure(w.passed && w.trials == 10, format!("p={p}: commutator/wedge mismatch"))?;
    }
    Ok(vec![format!("invariant tuple {base:?} under 10 transforms")])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("dimension-4 degeneracy", Duration::from_secs(1), degenerate_in_dimension_four),
        ("3-regularity verdicts", Duration::from_secs(5), regularity_verdicts),
        ("Lie closure dimensions", Duration::from_secs(10), lie_closures),
        ("stabilizer of alpha3_double_prime", Duration::from_secs(1), stabilizer_of_double_prime),
        ("Hilbert series", Duration::from_secs(600), hilbert_series_values),
        ("gamma6 negative control", Duration::from_secs(30), gamma_negative_control),
        ("Koszul exactness", Duration::from_secs(600), koszul_exactness),
        ("matrix identity", Duration::from_secs(5), matrix_identity),
        ("centrality", Duration::from_secs(1), centrality),
        ("derivations and factorization", Duration::from_secs(30), derivations_and_factorization),
        ("property suites", Duration::from_secs(60), property_suites),
    ];
    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= budget) {
            (Ok(_), true) => "PASS",
            _ => "FAIL",
        };
        if verdict == "FAIL" {
            failures += 1;
        }
        println!("{verdict} [{:>2}] {name} ({:.3}s of {}s)", i + 1, elapsed.as_secs_f64(), budget.as_secs());
        match outcome {
            Ok(notes) => notes.iter().for_each(|n| println!("        {n}")),
            Err(e) => println!("        {e}"),
        }
    }
    println!("{} of 11 criteria passed", 11 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
