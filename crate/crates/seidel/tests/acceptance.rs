//! Acceptance suite: one test per criterion, each printing a pass line
//! with its runtime (visible under `cargo test -- --nocapture`).

use num_bigint::BigInt;
use seidel::algebraic::Eigenvalue;
use seidel::enumerate::{burnside_class_count, enumerate_classes};
use seidel::feasibility::{
    extremal_table, parse_spectrum, run_battery, survey_table, ExistsColumn, ExtremalRule, Facts,
    Overall, RegularColumn, RuleKind, Verdict,
};
use seidel::fixtures;
use seidel::poly::Poly;
use seidel::regular::{
    find_regular_graphs, regular_graph_spectrum_from_seidel, three_walk_condition,
    ThreeEigenvalueData,
};
use seidel::seidel::{euler_switch, graph_from_seidel, switch, SeidelMatrix, SwitchingVector};
use seidel::spectra::{
    is_psd, mod2_charpoly_class, mod2_power_check, mod4_square_check, parse_spectrum_text,
    seidel_char_poly, spectrum,
};
use seidel::structure::{build_m, integer_product_pairs};
use seidel::BigMatrix;
use std::time::{Duration, Instant};

fn finish(criterion: &str, description: &str, start: Instant, limit: Duration) {
    let elapsed = start.elapsed();
    println!("[acceptance] {criterion} ({description}): PASS in {elapsed:?}");
    assert!(
        elapsed < limit,
        "{criterion} exceeded its {limit:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_fixture_spectrum() {
    let start = Instant::now();
    let spec = spectrum(&fixtures::s10());
    assert_eq!(
        spec.entries(),
        &[
            (Eigenvalue::integer(-3), 4),
            (Eigenvalue::pair(-4, -1), 3)
        ]
    );
    assert!(spec.residual().is_none());
    // the characteristic polynomial equals (x+3)^4 (x^2-4x-1)^3 exactly
    let product = Poly::linear(BigInt::from(-3))
        .pow(4)
        .mul(&Poly::quadratic(BigInt::from(-4), BigInt::from(-1)).pow(3));
    assert_eq!(seidel_char_poly(&fixtures::s10()), product);
    finish(
        "criterion 01",
        "order-10 fixture spectrum {-3^4, (2±√5)^3}",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_no_regular_graph_certificate() {
    let start = Instant::now();
    let witnesses = find_regular_graphs(&fixtures::s10()).unwrap();
    assert!(witnesses.is_empty());
    finish(
        "criterion 02",
        "exhaustive 2^9 search certifies no regular graph at order 10",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_03_tensor_family() {
    let start = Instant::now();
    // computed spectra match the closed form for k = 1, 2, 3
    for k in 1..=3 {
        let s = fixtures::sk_family(k).unwrap();
        assert_eq!(spectrum(&s), fixtures::sk_spectrum(k), "k = {k}");
    }
    // the closed-3-walk condition fails for every admissible θ, k = 1..5
    for k in 1..=5 {
        let spec = fixtures::sk_spectrum(k);
        let n = 6 * (2 * k + 1);
        let data = ThreeEigenvalueData::from_spectrum(&spec).unwrap();
        let verdicts = three_walk_condition(n, &data);
        assert!(!verdicts.is_empty(), "k = {k} admits θ = 1");
        assert!(
            verdicts.iter().all(|v| !v.feasible),
            "k = {k} should fail the walk count"
        );
    }
    finish(
        "criterion 03",
        "tensor family spectra (k ≤ 3) and walk-count refutations (k ≤ 5)",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_04_order40_battery() {
    let start = Instant::now();
    let candidate = parse_spectrum("-5^24,5^6,9^10").unwrap();
    let report = run_battery(&candidate, &Facts::builtin());
    assert_eq!(report.overall, Overall::Infeasible);
    // both refutations present: walk counts and the diag-6 multiplicity
    let walk_failed = report
        .records
        .iter()
        .any(|r| r.id == "closed-3-walks" && r.verdict == Verdict::Fail);
    assert!(walk_failed);
    let six = report
        .infeasible_rules
        .iter()
        .find(|r| r.kind == RuleKind::DiagSixMultiplicity)
        .expect("diag-6 refutation");
    assert!(six.detail.contains("16"), "q = 16 must not divide 40: {}", six.detail);
    finish(
        "criterion 04",
        "order-40 candidate fails both walk-count and diag-6 conditions",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_05_dimension18_pipeline() {
    let start = Instant::now();
    use seidel::bounds::{forced_spectrum_even_mu, trace_cube_test, EvenMuOutcome};
    let outcome = forced_spectrum_even_mu(18, &BigInt::from(-5)).unwrap();
    let EvenMuOutcome::Forced(forced) = outcome else {
        panic!("dimension 18 must force a spectrum at n = 61");
    };
    assert_eq!(
        forced.spectrum,
        parse_spectrum_text("-5^43,11^9,12^1,13^8").unwrap()
    );
    let report = trace_cube_test(&forced.spectrum).unwrap();
    assert_eq!(report.lhs, BigInt::from(-1728));
    assert_eq!(report.rhs, BigInt::from(-1684));
    assert!(!report.holds);
    finish(
        "criterion 05",
        "61 lines in dimension 18 ruled out: forced spectrum fails the cube bound",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_06_extremal_table() {
    let start = Instant::now();
    let rows = extremal_table(14..=23, &BigInt::from(-5), &Facts::builtin()).unwrap();
    let expected: Vec<(usize, i64, &str)> = vec![
        (14, 30, "-5^16,5^9,7^5"),
        (15, 36, "-5^21,7^15"),
        (16, 42, "-5^26,7^7,9^9"),
        (17, 51, "-5^34,10^17"),
        (18, 61, "-5^43,11^9,12^1,13^8"),
        (19, 76, "-5^57,15^19"),
        (20, 96, "-5^76,19^20"),
        (21, 126, "-5^105,25^21"),
        (22, 176, "-5^154,35^22"),
        (23, 276, "-5^253,55^23"),
    ];
    assert_eq!(rows.len(), expected.len());
    for (row, (d, n, spec)) in rows.iter().zip(&expected) {
        assert_eq!(row.d, *d);
        assert_eq!(row.floor_bound, BigInt::from(*n), "bound for d = {d}");
        assert_eq!(
            row.spectrum.as_ref().expect("spectrum per row").render(),
            *spec,
            "spectrum for d = {d}"
        );
    }
    let rules: Vec<&ExtremalRule> = rows.iter().map(|r| &r.rule).collect();
    assert!(matches!(rules[0], ExtremalRule::SixDiagMultiplicity)); // d=14
    assert!(matches!(rules[1], ExtremalRule::KnownConstruction)); // d=15
    assert!(matches!(rules[2], ExtremalRule::SixDiagMultiplicity)); // d=16
    assert!(matches!(rules[3], ExtremalRule::EvenMultiplicityBound)); // d=17
    assert!(matches!(rules[4], ExtremalRule::TraceCubeBound)); // d=18
    assert!(matches!(rules[5], ExtremalRule::NonexistenceFact(_))); // d=19
    assert!(matches!(rules[6], ExtremalRule::NonexistenceFact(_))); // d=20
    for rule in &rules[7..] {
        assert!(matches!(rule, ExtremalRule::KnownConstruction)); // d=21..23
    }
    finish(
        "criterion 06",
        "extremal table d = 14..23 at λ₀ = -5 reproduced",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_07_survey_table() {
    let start = Instant::now();
    let rows = survey_table(&Facts::builtin());
    // (n, spectrum, Regular, Exists): Exists is "N" where an in-scope
    // condition certifies nonexistence and "?" elsewhere (existence claims
    // always come from external constructions)
    let expected: Vec<(usize, &str, RegularColumn, ExistsColumn)> = vec![
        (28, "-5^14,3^7,7^7", RegularColumn::Unknown, ExistsColumn::Unknown),
        (30, "-5^16,5^9,7^5", RegularColumn::Yes, ExistsColumn::No),
        (40, "-5^24,5^6,9^10", RegularColumn::No, ExistsColumn::No),
        (40, "-5^24,7^15,15^1", RegularColumn::Yes, ExistsColumn::Unknown),
        (42, "-5^26,7^7,9^9", RegularColumn::Yes, ExistsColumn::No),
        (48, "-5^31,7^8,11^9", RegularColumn::Unknown, ExistsColumn::Unknown),
        (49, "-5^32,9^16,16^1", RegularColumn::Yes, ExistsColumn::No),
        (48, "-5^30,3^6,11^12", RegularColumn::Unknown, ExistsColumn::Unknown),
        (48, "-5^30,7^16,19^2", RegularColumn::Yes, ExistsColumn::Unknown),
        (54, "-5^36,7^9,13^9", RegularColumn::Unknown, ExistsColumn::Unknown),
        (60, "-5^42,11^15,15^3", RegularColumn::Yes, ExistsColumn::Unknown),
        (72, "-5^53,13^16,19^3", RegularColumn::Yes, ExistsColumn::Unknown),
        (75, "-5^56,10^1,15^18", RegularColumn::Yes, ExistsColumn::No),
        (90, "-5^70,13^5,19^15", RegularColumn::Yes, ExistsColumn::Unknown),
        (95, "-5^75,14^1,19^19", RegularColumn::Yes, ExistsColumn::No),
    ];
    assert_eq!(rows.len(), expected.len());
    for ((row, report), (n, spec, regular, exists)) in rows.iter().zip(&expected) {
        assert_eq!(row.n, *n, "order for {spec}");
        assert_eq!(row.spectrum.render(), *spec);
        assert_eq!(row.regular, *regular, "Regular column for {spec}");
        assert_eq!(row.exists, *exists, "Exists column for {spec}");
        // the certifying rule matches the survey's published reason
        match *spec {
            "-5^16,5^9,7^5" | "-5^26,7^7,9^9" => assert!(report
                .infeasible_rules
                .iter()
                .any(|r| r.kind == RuleKind::DiagSixMultiplicity)),
            "-5^24,5^6,9^10" => {
                assert!(report
                    .infeasible_rules
                    .iter()
                    .any(|r| r.kind == RuleKind::DiagSixMultiplicity));
                assert!(report
                    .records
                    .iter()
                    .any(|r| r.id == "closed-3-walks" && r.verdict == Verdict::Fail));
            }
            "-5^32,9^16,16^1" | "-5^56,10^1,15^18" | "-5^75,14^1,19^19" => assert!(report
                .infeasible_rules
                .iter()
                .any(|r| r.kind == RuleKind::GraphFact)),
            "-5^30,3^6,11^12" => assert_eq!(report.overall, Overall::Open),
            _ => {}
        }
    }
    finish(
        "criterion 07",
        "three-eigenvalue survey Regular/Exists columns reproduced",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_08_forced_graph_spectra() {
    let start = Instant::now();
    let cases = [
        ("-5^30,7^16,19^2", 19, "-10^1,-4^16,2^30,14^1"),
        ("-5^42,11^15,15^3", 15, "-8^2,-6^15,2^42,22^1"),
        ("-5^53,13^16,19^3", 19, "-10^2,-7^16,2^53,26^1"),
        ("-5^70,13^5,19^15", 13, "-10^15,-7^4,2^70,38^1"),
    ];
    for (seidel_spec, theta0, graph_spec) in cases {
        let spec = parse_spectrum_text(seidel_spec).unwrap();
        let mapped = regular_graph_spectrum_from_seidel(&spec, &BigInt::from(theta0)).unwrap();
        assert_eq!(mapped.render(), graph_spec, "map of {seidel_spec}");
    }
    finish(
        "criterion 08",
        "regular-eigenspace graph spectra at orders 48, 60, 72, 90",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_09_enumeration() {
    let start = Instant::now();
    let expected = [(3usize, 2u64), (4, 3), (5, 7), (6, 16)];
    for (n, count) in expected {
        let classes = enumerate_classes(n).unwrap();
        assert_eq!(classes.len() as u64, count, "class count at n = {n}");
        assert_eq!(burnside_class_count(n), count, "Burnside count at n = {n}");
        // every three-eigenvalue class has a regular witness
        if n >= 4 {
            for class in &classes {
                if seidel::spectra::distinct_eigenvalue_count(&class.representative) == 3 {
                    assert!(
                        !find_regular_graphs(&class.representative).unwrap().is_empty(),
        "three-eigenvalue class without a regular graph at n = {n}"
                    );
                }
            }
        }
    }
    finish(
        "criterion 09",
        "switching-class counts {2,3,7,16} with Burnside cross-check",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_10_congruence_suite() {
    let start = Instant::now();
    let mut corpus: Vec<SeidelMatrix> = vec![
        fixtures::s10(),
        fixtures::s6(),
        fixtures::sk_family(1).unwrap(),
        fixtures::k4_seidel(),
        fixtures::petersen_seidel(),
        fixtures::pentagon_seidel(),
    ];
    for n in 3..=6 {
        corpus.extend(
            enumerate_classes(n)
                .unwrap()
                .into_iter()
                .map(|c| c.representative),
        );
    }
    for s in &corpus {
        let n = s.order();
        // trace identities via the exact square
        let big = s.to_big();
        assert_eq!(big.trace(), BigInt::from(0));
        assert_eq!(
            big.pow(2).trace(),
            BigInt::from(n) * BigInt::from(n - 1),
            "n = {n}"
        );
        // power congruences mod 2
        for k in 1..=5 {
            assert!(mod2_power_check(s, k), "mod-2 power k = {k}, n = {n}");
        }
        // characteristic polynomial class mod 2
        assert!(mod2_charpoly_class(s).matches, "mod-2 class at n = {n}");
        // mod-4 square on the Euler representative, when one exists
        if let Some(v) = euler_switch(s) {
            let rep = switch(s, &v).unwrap();
            assert_eq!(mod4_square_check(&rep), Ok(true), "mod-4 square at n = {n}");
        }
        // M-pair invariants for every integer-product pair
        let distinct = seidel::spectra::distinct_eigenvalue_count(s);
        if (2..=3).contains(&distinct) {
            let spec = spectrum(s);
            if spec.residual().is_none() {
                for pair in integer_product_pairs(&spec) {
                    let m = build_m(s, &pair).expect("M-pair invariants hold on the corpus");
                    // PSD, constant diagonal and the bound are checked by
                    // the constructor; re-check PSD and rank explicitly
                    assert!(is_psd(&m.matrix).unwrap());
                    assert_eq!(m.matrix.rank(), m.rank, "rank = mult(ν) at n = {n}");
                }
            }
        }
    }
    finish(
        "criterion 10",
        "congruence and M-pair invariants hold over the corpus",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_11_psd_oracle_equivalence() {
    let start = Instant::now();
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    while checked < 1000 {
        let n = rng.gen_range(2..=8usize);
        // mix indefinite and PSD instances: half raw symmetric, half Gram
        let m: BigMatrix = if checked % 2 == 0 {
            let entries: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect())
                .collect();
            BigMatrix::from_fn(n, |i, j| {
                BigInt::from(entries[i.min(j)][i.max(j)])
            })
        } else {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            BigMatrix::from_fn(n, |i, j| {
                let dot: i64 = (0..n).map(|k| rows[i][k] * rows[j][k]).sum();
                BigInt::from(dot)
            })
        };
        let exact = is_psd(&m).unwrap();
        // floating-point cross-check (oracle only, never authoritative)
        let f = nalgebra::DMatrix::from_fn(n, n, |i, j| {
            use num_traits::ToPrimitive;
            m[(i, j)].to_f64().unwrap()
        });
        let min_eig = f
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        if exact {
            assert!(min_eig >= -1e-9, "exact PSD but float λ_min = {min_eig}");
        } else {
            assert!(min_eig <= 1e-9, "exact non-PSD but float λ_min = {min_eig}");
        }
        checked += 1;
    }
    finish(
        "criterion 11",
        "exact PSD verdicts agree with the floating-point oracle on 1000 matrices",
        start,
        Duration::from_secs(10),
    );
}

/// Supporting check for criterion 02's exhaustiveness claim: the search
/// space truly is the 512 switchings with the first sign fixed.
#[test]
fn brute_force_cross_check_order_10() {
    let s = fixtures::s10();
    let mut regular_found = false;
    for mask in 0..(1u64 << 9) {
        let v = SwitchingVector::from_mask(10, mask);
        if graph_from_seidel(&s, &v).unwrap().is_regular().is_some() {
            regular_found = true;
        }
    }
    assert!(!regular_found);
    // and the Euler switching found by the solver leaves all degrees even
    let v = euler_switch(&s).unwrap();
    let g = graph_from_seidel(&s, &v).unwrap();
    assert!(g.degrees().iter().all(|d| d % 2 == 0));
}
