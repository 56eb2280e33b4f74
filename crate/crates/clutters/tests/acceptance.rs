//! Acceptance suite: one test per criterion, printing a pass line with the
//! measured runtime (visible under `--nocapture`). Every equality is exact;
//! the timing bounds are asserted where the criterion states one.
//!
//! Criterion 10's extended half (the dunce-hat linear-quotients "no") is
//! opt-in: `cargo test -p clutters --test acceptance -- --ignored`.

mod common;

use std::time::{Duration, Instant};

use clutters::atlas::atlas;
use clutters::betti::{
    betti_table_hochster, betti_table_hochster_ideal, betti_table_taylor, LinearIndex,
};
use clutters::clutter::Clutter;
use clutters::elimination::{
    chordality_check, complete_clutter_order, is_simplicial, replay_simplicial_prefix,
    verify_certificate, Strategy,
};
use clutters::fixtures;
use clutters::linalg::FieldSpec;
use clutters::monomial::{
    check_nice_conditions, circuit_ideal, has_linear_quotients, validate_linear_quotients_order,
    Monomial, MonomialIdeal, QuotientsOutcome,
};
use clutters::set::VertexSet;
use clutters::stability::{check_stability, corpus_rng, fuzz_instance, splitmix64};
use clutters::variants::{generate_e_chordal, is_e_chordal, BuildStep, Recognition};
use rand_core::RngCore;
use rayon::prelude::*;
use serde::Deserialize;

fn vs(members: &[u32]) -> VertexSet {
    VertexSet::from_members(members.iter().copied())
}

fn report(name: &str, started: Instant, budget: Option<Duration>) {
    let elapsed = started.elapsed();
    println!("criterion {name}: pass ({elapsed:.2?})");
    if let Some(budget) = budget {
        assert!(
            elapsed < budget,
            "criterion {name} exceeded its {budget:?} budget: {elapsed:?}"
        );
    }
}

#[test]
fn criterion_01_figure_one_simplicial_classification() {
    let started = Instant::now();
    let c = fixtures::figure_one();
    let mut non_simplicial = Vec::new();
    for e in c.submaximal_circuits() {
        if !is_simplicial(&c, e).unwrap() {
            non_simplicial.push(e);
        }
    }
    assert_eq!(non_simplicial, vec![vs(&[2, 3]), vs(&[2, 6])]);
    report(
        "1 (figure-1 classification)",
        started,
        Some(Duration::from_millis(100)),
    );
}

#[test]
fn criterion_02_figure_two_verdicts() {
    let started = Instant::now();
    let c = fixtures::figure_two_c();
    let verdict = chordality_check(&c, Strategy::Backtracking).unwrap();
    let cert = verdict.certificate().expect("chordal");
    assert!(verify_certificate(&c, &cert.steps));
    let d = fixtures::figure_two_d();
    assert!(!chordality_check(&d, Strategy::Backtracking)
        .unwrap()
        .is_chordal());
    report(
        "2 (figure-2 verdicts)",
        started,
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_03_complete_clutters() {
    let started = Instant::now();
    for n in 2..=7u32 {
        for d in 2..=n {
            let c = Clutter::complete(n, d);
            assert!(
                chordality_check(&c, Strategy::Backtracking)
                    .unwrap()
                    .is_chordal(),
                "complete ({n},{d})"
            );
            let order = complete_clutter_order(n, d, 1).unwrap();
            let end = replay_simplicial_prefix(&c, &order)
                .unwrap_or_else(|| panic!("order replay failed for ({n},{d})"));
            // after deleting every submaximal circuit through vertex 1,
            // no remaining circuit touches it
            assert!(end.circuits().iter().all(|f| !f.contains(1)));
        }
    }
    report(
        "3 (complete clutters)",
        started,
        Some(Duration::from_secs(30)),
    );
}

#[derive(Deserialize)]
struct Manifest {
    base_seed: u64,
    count: usize,
    n_min: u32,
    n_max: u32,
    d: u32,
    densities: Vec<f64>,
}

#[test]
fn criterion_04_stability_of_nonlinear_strands() {
    let started = Instant::now();
    let manifest: Manifest =
        serde_json::from_str(include_str!("data/stability_manifest.json")).unwrap();
    let fields = [FieldSpec::Prime(2), FieldSpec::Prime(3)];
    let outcomes: Vec<Result<bool, String>> = (0..manifest.count)
        .into_par_iter()
        .map(|k| {
            let mut state = manifest.base_seed.wrapping_add(k as u64);
            let seed = splitmix64(&mut state);
            let n = manifest.n_min + (k as u32 % (manifest.n_max - manifest.n_min + 1));
            let density = manifest.densities[k % manifest.densities.len()];
            let (c, e, removed, full_star) = fuzz_instance(n, manifest.d, density, seed);
            let report = check_stability(&c, e, &removed, &fields).unwrap();
            if !report.all_hold() {
                return Err(format!(
                    "instance {k}: {}",
                    serde_json::to_string(&report).unwrap()
                ));
            }
            if full_star {
                // removing the whole star of a submaximal simplicial element
                // pins the projective dimension at n - d
                for per_field in &report.per_field {
                    if per_field.reduced.projdim() != n - manifest.d {
                        return Err(format!(
                            "instance {k}: projdim {} != {}",
                            per_field.reduced.projdim(),
                            n - manifest.d
                        ));
                    }
                }
            }
            Ok(full_star)
        })
        .collect();
    let failures: Vec<&String> = outcomes.iter().filter_map(|o| o.as_ref().err()).collect();
    assert!(failures.is_empty(), "{failures:#?}");
    let full_stars = outcomes.iter().filter(|o| matches!(o, Ok(true))).count();
    assert!(full_stars >= 10, "only {full_stars} full-star instances");
    report(
        "4 (stability, 100 instances)",
        started,
        Some(Duration::from_secs(600)),
    );
}

#[test]
fn criterion_05_froeberg_cross_check() {
    let started = Instant::now();
    // every graph on six labeled vertices
    let violations: Vec<u64> = (0u64..(1 << 15))
        .into_par_iter()
        .filter(|&mask| {
            let c = common::graph_from_mask(6, mask);
            if c.is_complete() {
                // zero circuit ideal: nothing to compare
                return false;
            }
            let chordal = chordality_check(&c, Strategy::Backtracking)
                .unwrap()
                .is_chordal();
            let linear = betti_table_hochster(&c, FieldSpec::Prime(2))
                .unwrap()
                .has_linear_resolution(2);
            chordal != linear
        })
        .collect();
    assert!(violations.is_empty(), "masks {violations:?}");
    report(
        "5 (degree-2 linearity equivalence, 32768 graphs)",
        started,
        None,
    );
}

#[test]
fn criterion_06_dunce_hat() {
    let started = Instant::now();
    let c = fixtures::dunce_hat_clutter();
    assert_eq!(c.num_circuits(), 39);
    for p in [2u32, 3] {
        let table = betti_table_hochster(&c, FieldSpec::Prime(p)).unwrap();
        assert_eq!(table.regularity(), 5, "GF({p})");
        assert_eq!(table.index(), LinearIndex::Infinite, "GF({p})");
    }
    // the clutter is chordal with a certificate of our own
    let own = chordality_check(&c, Strategy::Backtracking).unwrap();
    let own_cert = own.certificate().expect("dunce-hat clutter is chordal");
    assert!(verify_certificate(&c, &own_cert.steps));

    // KNOWN RED. The recorded 33-step order empties the clutter and 31 of
    // its steps are simplicial in sequence, but steps 5 and 6 ({1,4,6,7},
    // {1,4,6,8}) are not: their closed neighborhoods are not cliques until
    // {1,2,4,6} and {1,3,4,6} have been deleted. Exhaustive search shows no
    // 17-triangle pseudo-surface admits this order under the closed-
    // neighborhood definition, while the order does pass the weaker
    // extension-vertices-only check. The assertion is kept as stated rather
    // than weakened to that variant.
    let order = fixtures::dunce_hat_elimination_order();
    assert_eq!(order.len(), 33);
    assert!(
        verify_certificate(&c, &order),
        "the recorded 33-step order is not a strict elimination certificate \
         (steps 5 and 6 are premature); see the doc comment on \
         fixtures::dunce_hat_elimination_order"
    );
    report("6 (dunce hat)", started, Some(Duration::from_secs(300)));
}

#[test]
fn criterion_07_class_separations() {
    let started = Instant::now();
    // chordal but not W-chordal
    let w = fixtures::no_w_simplicial_example();
    assert!(chordality_check(&w, Strategy::Backtracking)
        .unwrap()
        .is_chordal());
    assert!(!clutters::variants::is_w_chordal(&w));
    // chordal but not E-chordal
    let e = fixtures::not_e_chordal_example();
    assert!(chordality_check(&e, Strategy::Backtracking)
        .unwrap()
        .is_chordal());
    assert_eq!(is_e_chordal(&e, 200_000).unwrap(), Recognition::No);

    // containments on the full enumeration over four vertices
    let (records, violations) = atlas(4, 3, 1 << 14, 7).unwrap();
    assert_eq!(records.len(), 16);
    assert!(violations.is_empty(), "{violations:?}");

    // 100 generated build scripts: E-chordal by construction, recognized,
    // and chordal in the elimination sense
    let scripts: Vec<Vec<BuildStep>> = (0..100u64).map(random_build_script).collect();
    scripts.par_iter().for_each(|script| {
        let c = generate_e_chordal(script).unwrap();
        assert_eq!(
            is_e_chordal(&c, 500_000).unwrap(),
            Recognition::Yes,
            "script {script:?}"
        );
        assert!(
            chordality_check(&c, Strategy::Backtracking)
                .unwrap()
                .is_chordal(),
            "script {script:?}"
        );
    });
    report("7 (class separations)", started, None);
}

/// Seeded valid build script: a start step then a few glue/add steps whose
/// preconditions are made to hold by construction.
fn random_build_script(seed: u64) -> Vec<BuildStep> {
    let mut rng = corpus_rng(0xe5_0000_u64.wrapping_add(seed));
    let d = 3u32;
    let n0 = d + rng.next_u32() % 2;
    let mut steps = vec![BuildStep::Start { n: n0, d }];
    let mut state = Clutter::complete(n0, d);
    for _ in 0..(1 + rng.next_u32() % 4) {
        let ground: Vec<u32> = state.ground().to_vec();
        if rng.next_u32().is_multiple_of(2) && state.num_vertices() < 7 {
            // glue onto a clique: a subset of an existing circuit, a single
            // vertex, or the empty set
            let base = match rng.next_u32() % 3 {
                0 => VertexSet::EMPTY,
                1 => VertexSet::singleton(ground[(rng.next_u32() as usize) % ground.len()]),
                _ => {
                    if state.is_empty() {
                        VertexSet::EMPTY
                    } else {
                        let f = state.circuits()[(rng.next_u32() as usize) % state.num_circuits()];
                        f.without(f.min().unwrap())
                    }
                }
            };
            let added = 1 + rng.next_u32() % 2;
            steps.push(BuildStep::Glue { base, added });
            state = generate_e_chordal(&steps).unwrap();
        } else {
            // add a circuit whose witness is fresh, searching deterministically
            let d_minus = d - 1;
            let mut found = None;
            'outer: for witness in state.ground().subsets_of_size(d_minus) {
                if state.is_submaximal_circuit(witness) {
                    continue;
                }
                for c in state.ground().difference(witness).iter() {
                    let circuit = witness.with(c);
                    if !state.contains_circuit(circuit) {
                        found = Some((circuit, witness));
                        break 'outer;
                    }
                }
            }
            if let Some((circuit, witness)) = found {
                steps.push(BuildStep::AddCircuit { circuit, witness });
                state = generate_e_chordal(&steps).unwrap();
            }
        }
    }
    steps
}

#[test]
fn criterion_08_oracle_equivalence() {
    let started = Instant::now();
    let fields = [
        FieldSpec::Prime(2),
        FieldSpec::Prime(3),
        FieldSpec::Rational,
    ];
    let discrepancies: Vec<u64> = (0..200u64)
        .into_par_iter()
        .filter(|&k| {
            let mut rng = corpus_rng(0x8a_c0de_u64.wrapping_add(k));
            let n = 4 + (rng.next_u32() % 3) as usize;
            let count = 1 + (rng.next_u32() % 5) as usize;
            let gens: Vec<Monomial> = (0..count)
                .map(|_| {
                    let size = 1 + rng.next_u32() % 4;
                    let mut support = VertexSet::EMPTY;
                    while support.len() < size.min(n as u32) {
                        support = support.with(1 + rng.next_u32() % n as u32);
                    }
                    Monomial::from_support(support, n)
                })
                .collect();
            let ideal = MonomialIdeal::new(n, gens);
            fields.iter().any(|&field| {
                betti_table_hochster_ideal(&ideal, field).unwrap()
                    != betti_table_taylor(&ideal, field).unwrap()
            })
        })
        .collect();
    assert!(discrepancies.is_empty(), "seeds {discrepancies:?}");
    report("8 (Hochster = Taylor on 200 ideals)", started, None);
}

#[test]
fn criterion_09_intersection_conditions_agree() {
    let started = Instant::now();
    let mut checked = 0u32;
    let mut contained_cases = 0u32;
    let mut seed = 0u64;
    while checked < 100 {
        seed += 1;
        let mut rng = corpus_rng(0x91ce_u64.wrapping_add(seed));
        let n = 3 + (rng.next_u32() % 2) as usize;
        let d = 2 + rng.next_u32() % 2;
        let random_monomial = |rng: &mut rand_chacha::ChaCha8Rng, degree: u32| {
            let mut exps = vec![0u32; n];
            for _ in 0..degree {
                exps[(rng.next_u32() as usize) % n] += 1;
            }
            Monomial::from_exponents(exps)
        };
        let u = random_monomial(&mut rng, d - 1);
        let l_vars = {
            let mut s = VertexSet::EMPTY;
            while s.is_empty() {
                for v in 1..=n as u32 {
                    if rng.next_u32().is_multiple_of(2) {
                        s = s.with(v);
                    }
                }
            }
            s
        };
        let mut gens: Vec<Monomial> = (0..1 + rng.next_u32() % 3)
            .map(|_| random_monomial(&mut rng, d))
            .collect();
        if seed.is_multiple_of(3) {
            // force L ⊆ I
            gens.extend(l_vars.iter().map(|v| u.times_var(v)));
        }
        let ideal = MonomialIdeal::new(n, gens);
        if ideal.equigenerated_degree() != Some(d) {
            continue;
        }
        match check_nice_conditions(&ideal, &u, l_vars, FieldSpec::Prime(2)) {
            Ok(report) => {
                assert!(
                    report.all_agree(),
                    "conditions diverge at seed {seed}: {report:?}"
                );
                checked += 1;
                if report.l_contained_in_i {
                    contained_cases += 1;
                }
            }
            Err(clutters::Error::TooManyGenerators { .. }) => continue,
            Err(other) => panic!("unexpected error at seed {seed}: {other}"),
        }
    }
    assert!(
        contained_cases >= 10,
        "too few L ⊆ I cases: {contained_cases}"
    );
    report("9 (intersection conditions, 100 instances)", started, None);
}

#[test]
fn criterion_10_linear_quotients_for_chordal_graph_complements() {
    let started = Instant::now();
    let mut produced = 0;
    let mut seed = 0u64;
    while produced < 20 {
        seed += 1;
        let n = 4 + (seed % 3) as u32;
        let g = common::random_chordal_graph(n, 0x10ad_u64.wrapping_add(seed));
        assert!(
            common::mcs_is_chordal(n, &common::graph_edges(&g)),
            "generator must produce chordal graphs"
        );
        assert!(chordality_check(&g, Strategy::Backtracking)
            .unwrap()
            .is_chordal());
        let ideal = circuit_ideal(&g).unwrap();
        if ideal.is_zero() {
            continue;
        }
        match has_linear_quotients(&ideal, 2_000_000).unwrap() {
            QuotientsOutcome::Yes(order) => {
                assert!(
                    validate_linear_quotients_order(&ideal, &order),
                    "returned ordering failed direct colon validation (seed {seed})"
                );
            }
            other => {
                panic!("expected linear quotients for a chordal graph complement, got {other:?}")
            }
        }
        produced += 1;
    }
    report(
        "10 (linear quotients, 20 chordal complements)",
        started,
        None,
    );
}

/// Extended, opt-in: the dunce-hat circuit ideal has no linear quotients.
/// The subset-memoized search decides this exactly; if the budget were to
/// run out the outcome would be Unknown and this test would fail rather
/// than silently pass.
#[test]
#[ignore = "extended criterion with a one-hour budget; run with -- --ignored"]
fn criterion_10_extended_dunce_hat_has_no_linear_quotients() {
    let started = Instant::now();
    let ideal = circuit_ideal(&fixtures::dunce_hat_clutter()).unwrap();
    assert_eq!(ideal.num_gens(), 17);
    let outcome = has_linear_quotients(&ideal, 1 << 26).unwrap();
    assert_eq!(outcome, QuotientsOutcome::No);
    report(
        "10-extended (dunce hat has no linear quotients)",
        started,
        Some(Duration::from_secs(3600)),
    );
}
