//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test -p forcelab --test acceptance -- --nocapture`
//! to see the lines.

use forcelab::constructions::{
    peony_construction, web_construction_large_m, web_construction_mid_m,
    web_construction_small_m, web_formula, WebRegime,
};
use forcelab::generators::{make_peony, make_web, PeonyParams, WebParams};
use forcelab::solver::{path_cover_number, solve_exhaustive, solve_fortbb};
use forcelab::verify::{
    duality_exhaustive_case, fort_family_sweep, oracle_equivalence_case, peony_formula_case,
    prism_case, restriction_trials, sandwich_trials, terminus_trials, web_formula_case,
    CaseResult,
};

const SEED: u64 = 7;

fn report(criterion: &str, passed: bool, details: &str) {
    println!(
        "criterion {criterion}: {} -- {details}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {details}");
}

fn report_cases(criterion: &str, cases: &[CaseResult]) {
    let failed: Vec<&CaseResult> = cases.iter().filter(|c| !c.passed).collect();
    let details = if failed.is_empty() {
        format!("{} cases", cases.len())
    } else {
        failed
            .iter()
            .map(|c| format!("{}: {}", c.name, c.details))
            .collect::<Vec<_>>()
            .join("; ")
    };
    report(criterion, failed.is_empty(), &details);
}

/// Criterion 1: Z(Py(m,r,s)) = m(r-1)+3 over {3,4}x{2,3}x{1,2} with
/// |V| <= 30, fortbb cross-checked exhaustively where |V| <= 16.
#[test]
fn criterion_1_peony_formula() {
    let mut cases = Vec::new();
    for m in [3, 4] {
        for r in [2, 3] {
            for s in [1, 2] {
                let p = PeonyParams::new(m, r, s).unwrap();
                if p.vertex_count() <= 30 {
                    cases.push(peony_formula_case(m, r, s, 16));
                }
            }
        }
    }
    assert!(cases.len() >= 7, "sweep must cover the parameter grid");
    report_cases("1 (peony formula)", &cases);
}

/// Criterion 2: Z(Wb(m,r)) = max(ceil(m/2), min(m,2r)) for 3 <= m <= 10,
/// 1 <= r <= 3, |V| <= 40, covering all three regimes.
#[test]
fn criterion_2_web_formula() {
    let mut cases = Vec::new();
    let mut regimes_seen = [false; 3];
    for m in 3..=10 {
        for r in 1..=3 {
            let p = WebParams::new(m, r).unwrap();
            if p.vertex_count() <= 40 {
                regimes_seen[match WebRegime::of(m, r) {
                    WebRegime::SmallM => 0,
                    WebRegime::MidM => 1,
                    WebRegime::LargeM => 2,
                }] = true;
                cases.push(web_formula_case(m, r, 16));
            }
        }
    }
    assert!(regimes_seen.iter().all(|&b| b), "all three regimes covered");
    report_cases("2 (web formula)", &cases);
}

/// Criterion 3: Z(C_m x P_r) = min(m, 2r) for 3 <= m <= 8, 1 <= r <= 3.
#[test]
fn criterion_3_prism_baseline() {
    let mut cases = Vec::new();
    for m in 3..=8 {
        for r in 1..=3 {
            cases.push(prism_case(m, r, 16));
        }
    }
    report_cases("3 (prism baseline)", &cases);
}

/// Criterion 4: all four fort families pass the fort check over
/// m in {3,4,5}, r in {2,3}, s in {1,2,3}; choice spaces up to 10^4 are
/// exhausted, larger ones sampled 100 times.
#[test]
fn criterion_4_fort_families() {
    let case = fort_family_sweep(SEED, 10_000, 100);
    report("4 (fort families)", case.passed, &case.details);
}

/// Criterion 5: forcing-ness equals hitting-all-minimal-forts for every
/// subset of P_4, C_5, K_4, Wb(3,1).
#[test]
fn criterion_5_duality() {
    let case = duality_exhaustive_case();
    report("5 (duality)", case.passed, &case.details);
}

/// Criterion 6: 500 random (graph <= 12 vertices, random zero forcing set,
/// random chronology) trials; the terminus always forces.
#[test]
fn criterion_6_terminus() {
    let case = terminus_trials(SEED, 500, 12);
    report("6 (terminus)", case.passed, &case.details);
}

/// Criterion 7: 200 random (graph, zero forcing set, induced subgraph)
/// trials; the restricted chronology validates and its initial set forces.
#[test]
fn criterion_7_restriction() {
    let case = restriction_trials(SEED, 200, 10);
    report("7 (restriction)", case.passed, &case.details);
}

/// Criterion 8: p(G) <= Z(G) on 50 random graphs (n <= 10) plus Wb(3,1),
/// Wb(4,1), Py(3,2,1).
#[test]
fn criterion_8_path_cover_sandwich() {
    let case = sandwich_trials(SEED, 50, 10);
    report("8 (path cover sandwich)", case.passed, &case.details);
}

/// Criterion 9: every construction in the sweeps forces with exactly the
/// predicted set size, including Wb(16,3) and Py(6,3,4).
#[test]
fn criterion_9_constructions() {
    let mut failures = Vec::new();
    let mut count = 0;
    for m in 3..=6 {
        for r in 2..=3 {
            for s in 1..=3 {
                let p = PeonyParams::new(m, r, s).unwrap();
                let rep = peony_construction(p);
                count += 1;
                if !rep.passed() {
                    failures.push(format!("Py({m},{r},{s})"));
                }
            }
        }
    }
    for m in 3..=16 {
        for r in 1..=3 {
            let p = WebParams::new(m, r).unwrap();
            let rep = match WebRegime::of(m, r) {
                WebRegime::SmallM => web_construction_small_m(p),
                WebRegime::MidM => web_construction_mid_m(p),
                WebRegime::LargeM => web_construction_large_m(p),
            }
            .unwrap();
            count += 1;
            if !rep.passed() {
                failures.push(format!("Wb({m},{r})"));
            }
        }
    }
    // The two named figure cases, pinned explicitly.
    let py = peony_construction(PeonyParams::new(6, 3, 4).unwrap());
    count += 1;
    if !(py.passed() && py.set.len() == 15) {
        failures.push("Py(6,3,4) |B|=15".into());
    }
    let wb = web_construction_large_m(WebParams::new(16, 3).unwrap()).unwrap();
    count += 1;
    if !(wb.passed() && wb.set.len() == 8) {
        failures.push("Wb(16,3) |B|=8".into());
    }
    report(
        "9 (constructions)",
        failures.is_empty(),
        &if failures.is_empty() {
            format!("{count} constructions")
        } else {
            failures.join("; ")
        },
    );
}

/// Criterion 10: solve_fortbb agrees with solve_exhaustive on the whole
/// corpus of named and random graphs with n <= 14 (at least 120 graphs).
#[test]
fn criterion_10_oracle_equivalence() {
    let case = oracle_equivalence_case(SEED, 14, 100);
    report("10 (oracle equivalence)", case.passed, &case.details);
}

/// Supporting check for the formula criteria: the spec's named spot values
/// hold exactly.
#[test]
fn named_spot_values() {
    let py321 = make_peony(PeonyParams::new(3, 2, 1).unwrap());
    assert_eq!(solve_exhaustive(&py321).unwrap().z, 6);
    assert_eq!(solve_fortbb(&py321).unwrap().z, 6);

    let wb31 = make_web(WebParams::new(3, 1).unwrap());
    assert_eq!(solve_fortbb(&wb31).unwrap().z, 2);
    assert_eq!(path_cover_number(&wb31).unwrap().count, 2);

    let wb93 = make_web(WebParams::new(9, 3).unwrap());
    assert_eq!(solve_fortbb(&wb93).unwrap().z, 6);
    assert_eq!(web_formula(9, 3), 6);
    assert_eq!(web_formula(16, 3), 8);
}
