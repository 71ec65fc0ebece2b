//! Verification sweeps: the closed-form checks for the graph families and
//! the randomized property suites over the forcing engine. Shared by the
//! CLI `verify` subcommand and the acceptance test suite.
//!
//! The seeded random-graph helper here is a test utility, not part of the
//! library's graph-generation API.

use crate::constructions::{
    peony_construction, peony_formula, web_construction_large_m, web_construction_mid_m,
    web_construction_small_m, web_formula, ConstructionReport, WebRegime,
};
use crate::forcing::{
    closure, is_zero_forcing_set, run_random_chronology, terminus, validate_chronology,
    restrict_chronology,
};
use crate::forts::{
    enumerate_minimal_forts, fort_type1, fort_type2, fort_type3, fort_type4, is_fort,
    verify_duality_with,
};
use crate::generators::{
    make_cycle, make_cycle_path_product, make_path, make_peony, make_web, PeonyParams, WebParams,
};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::solver::{path_cover_number, solve_exhaustive, solve_fortbb};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::ops::RangeInclusive;

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CaseResult {
    fn new(name: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        CaseResult {
            name: name.into(),
            passed,
            details: details.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, cases: Vec<CaseResult>) -> Self {
        let passed = cases.iter().all(|c| c.passed);
        SuiteReport {
            suite: suite.into(),
            cases,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite report serializes")
    }

    /// Aligned two-column text table with a trailing summary line.
    pub fn to_table(&self) -> String {
        let width = self
            .cases
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0)
            .max(4);
        let mut out = String::new();
        for c in &self.cases {
            let status = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{:width$}  {}  {}\n", c.name, status, c.details));
        }
        let failed = self.cases.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{}: {}/{} cases passed{}\n",
            self.suite,
            self.cases.len() - failed,
            self.cases.len(),
            if failed == 0 { "" } else { " -- FAILURES" }
        ));
        out
    }
}

/// Seeded Erdos-Renyi-style random graph (test utility).
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(format!("G({n},{p:.2})"), n, &edges).expect("random edges are simple")
}

/// A random zero forcing set: a sparse random seed completed by inserting
/// random still-white vertices until the closure covers the graph.
pub fn random_zfs<R: Rng>(g: &Graph, rng: &mut R) -> VertexSet {
    let n = g.n();
    let mut b = VertexSet::empty(n);
    for v in 0..n {
        if rng.gen_bool(0.3) {
            b.insert(v);
        }
    }
    loop {
        let reached = closure(g, &b).expect("ambient matches");
        if reached.len() == n {
            return b;
        }
        let white = reached.complement().to_vec();
        b.insert(white[rng.gen_range(0..white.len())]);
    }
}

/// One peony formula case: fortbb must return `m(r-1)+3`, cross-checked
/// against the exhaustive solver when the graph is small enough.
pub fn peony_formula_case(m: usize, r: usize, s: usize, crosscheck_below: usize) -> CaseResult {
    let name = format!("Py({m},{r},{s})");
    let p = match PeonyParams::new(m, r, s) {
        Ok(p) => p,
        Err(e) => return CaseResult::new(name, false, e.to_string()),
    };
    let g = make_peony(p);
    let expected = peony_formula(m, r);
    let bb = match solve_fortbb(&g) {
        Ok(rep) => rep,
        Err(e) => return CaseResult::new(name, false, e.to_string()),
    };
    let mut details = format!("z={} expected={expected} (n={})", bb.z, g.n());
    let mut passed = bb.z == expected;
    if passed && g.n() <= crosscheck_below {
        match solve_exhaustive(&g) {
            Ok(ex) => {
                passed = ex.z == expected;
                details.push_str(" exhaustive-checked");
            }
            Err(e) => return CaseResult::new(name, false, e.to_string()),
        }
    }
    CaseResult::new(name, passed, details)
}

/// One web formula case against `max(ceil(m/2), min(m, 2r))`.
pub fn web_formula_case(m: usize, r: usize, crosscheck_below: usize) -> CaseResult {
    let name = format!("Wb({m},{r})");
    let p = match WebParams::new(m, r) {
        Ok(p) => p,
        Err(e) => return CaseResult::new(name, false, e.to_string()),
    };
    let g = make_web(p);
    let expected = web_formula(m, r);
    let regime = match WebRegime::of(m, r) {
        WebRegime::SmallM => "m",
        WebRegime::MidM => "2r",
        WebRegime::LargeM => "ceil(m/2)",
    };
    match solve_fortbb(&g) {
        Ok(rep) => {
            let mut passed = rep.z == expected;
            let mut details = format!("z={} expected={expected} regime={regime}", rep.z);
            if passed && g.n() <= crosscheck_below {
                match solve_exhaustive(&g) {
                    Ok(ex) => {
                        passed = ex.z == expected;
                        details.push_str(" exhaustive-checked");
                    }
                    Err(e) => return CaseResult::new(name, false, e.to_string()),
                }
            }
            CaseResult::new(name, passed, details)
        }
        Err(e) => CaseResult::new(name, false, e.to_string()),
    }
}

/// One cycle-path product case against `min(m, 2r)`.
pub fn prism_case(m: usize, r: usize, crosscheck_below: usize) -> CaseResult {
    let name = format!("C{m}xP{r}");
    let g = match make_cycle_path_product(m, r) {
        Ok(g) => g,
        Err(e) => return CaseResult::new(name, false, e.to_string()),
    };
    let expected = m.min(2 * r);
    match solve_fortbb(&g) {
        Ok(rep) => {
            let mut passed = rep.z == expected;
            let mut details = format!("z={} expected={expected}", rep.z);
            if passed && g.n() <= crosscheck_below {
                match solve_exhaustive(&g) {
                    Ok(ex) => {
                        passed = ex.z == expected;
                        details.push_str(" exhaustive-checked");
                    }
                    Err(e) => return CaseResult::new(name, false, e.to_string()),
                }
            }
            CaseResult::new(name, passed, details)
        }
        Err(e) => CaseResult::new(name, false, e.to_string()),
    }
}

fn construction_case(name: String, report: ConstructionReport) -> CaseResult {
    let details = format!(
        "|B|={} expected={} forces={} milestones={}",
        report.set.len(),
        report.expected_size,
        report.forces,
        report.step_assertions.iter().filter(|a| a.passed).count(),
    );
    CaseResult::new(name, report.passed(), details)
}

/// Runs the construction matching the regime of `(m, r)`.
pub fn web_construction_case(m: usize, r: usize) -> CaseResult {
    let name = format!("Wb({m},{r}) construction");
    let p = match WebParams::new(m, r) {
        Ok(p) => p,
        Err(e) => return CaseResult::new(name, false, e.to_string()),
    };
    let result = match WebRegime::of(m, r) {
        WebRegime::SmallM => web_construction_small_m(p),
        WebRegime::MidM => web_construction_mid_m(p),
        WebRegime::LargeM => web_construction_large_m(p),
    };
    match result {
        Ok(report) => construction_case(name, report),
        Err(e) => CaseResult::new(name, false, e.to_string()),
    }
}

pub fn peony_construction_case(m: usize, r: usize, s: usize) -> CaseResult {
    let name = format!("Py({m},{r},{s}) construction");
    match PeonyParams::new(m, r, s) {
        Ok(p) => construction_case(name, peony_construction(p)),
        Err(e) => CaseResult::new(name, false, e.to_string()),
    }
}

/// Randomized terminus trials: random graph, random zero forcing set,
/// random relaxed chronology — the terminus must force every time.
pub fn terminus_trials(seed: u64, trials: usize, max_n: usize) -> CaseResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let n = rng.gen_range(1..=max_n);
        let density = rng.gen_range(0.15..0.6);
        let g = random_graph(&mut rng, n, density);
        let b = random_zfs(&g, &mut rng);
        let c = run_random_chronology(&g, &b, &mut rng).expect("ambient matches");
        let term = terminus(&c).expect("zfs chronology is complete");
        if term.len() != b.len() || !is_zero_forcing_set(&g, &term).unwrap() {
            failures += 1;
        }
    }
    CaseResult::new(
        "terminus forces",
        failures == 0,
        format!("{trials} trials, {failures} failures (seed {seed})"),
    )
}

/// Randomized restriction trials: a complete chronology restricted to a
/// random induced subgraph must validate there, and its initial set must
/// force the subgraph.
pub fn restriction_trials(seed: u64, trials: usize, max_n: usize) -> CaseResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let n = rng.gen_range(2..=max_n);
        let density = rng.gen_range(0.2..0.7);
        let g = random_graph(&mut rng, n, density);
        let b = random_zfs(&g, &mut rng);
        let c = run_random_chronology(&g, &b, &mut rng).expect("ambient matches");
        let mut h = VertexSet::empty(n);
        for v in 0..n {
            if rng.gen_bool(0.5) {
                h.insert(v);
            }
        }
        if h.is_empty() {
            h.insert(rng.gen_range(0..n));
        }
        let restriction = restrict_chronology(&g, &h, &c).expect("complete chronology");
        let sub = &restriction.subgraph.graph;
        let ok = validate_chronology(sub, &restriction.chronology).is_ok()
            && restriction.chronology.is_complete()
            && is_zero_forcing_set(sub, restriction.chronology.initial()).unwrap();
        if !ok {
            failures += 1;
        }
    }
    CaseResult::new(
        "restriction to induced subgraphs",
        failures == 0,
        format!("{trials} trials, {failures} failures (seed {seed})"),
    )
}

/// Exhaustive fort/forcing duality over every subset of a few fixed small
/// graphs: P_4, C_5, K_4, Wb(3,1).
pub fn duality_exhaustive_case() -> CaseResult {
    let k4 = Graph::from_edges("K4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("K4 is simple");
    let graphs = [
        make_path(4).unwrap(),
        make_cycle(5).unwrap(),
        k4,
        make_web(WebParams::new(3, 1).unwrap()),
    ];
    let mut checked = 0u64;
    let mut disagreements = 0u64;
    for g in &graphs {
        let forts = enumerate_minimal_forts(g, g.n()).expect("small graphs");
        for bits in 0..(1u32 << g.n()) {
            let b = VertexSet::from_ids(g.n(), (0..g.n()).filter(|i| bits >> i & 1 == 1));
            checked += 1;
            if !verify_duality_with(g, &forts, &b).unwrap() {
                disagreements += 1;
            }
        }
    }
    CaseResult::new(
        "fort/forcing duality",
        disagreements == 0,
        format!("{checked} subsets over 4 graphs, {disagreements} disagreements"),
    )
}

/// Path cover vs zero forcing sandwich on random graphs plus three named
/// ones: p(G) <= Z(G) throughout.
pub fn sandwich_trials(seed: u64, random_graphs: usize, max_n: usize) -> CaseResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs: Vec<Graph> = (0..random_graphs)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let density = rng.gen_range(0.15..0.6);
            random_graph(&mut rng, n, density)
        })
        .collect();
    graphs.push(make_web(WebParams::new(3, 1).unwrap()));
    graphs.push(make_web(WebParams::new(4, 1).unwrap()));
    graphs.push(make_peony(PeonyParams::new(3, 2, 1).unwrap()));
    let total = graphs.len();
    let mut violations = 0;
    for g in graphs {
        let p = path_cover_number(&g).unwrap().count;
        let z = solve_exhaustive(&g).unwrap().z;
        if p > z {
            violations += 1;
        }
    }
    CaseResult::new(
        "path cover sandwich",
        violations == 0,
        format!("{total} graphs, {violations} violations (seed {seed})"),
    )
}

/// Sweeps the four peony fort families over m in {3,4,5}, r in {2,3},
/// s in {1,2,3}: exhausts choice spaces up to `exhaust_limit` and samples
/// `sample_size` seeded choices beyond that. Every output must be a fort.
pub fn fort_family_sweep(seed: u64, exhaust_limit: u64, sample_size: usize) -> CaseResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0u64;
    let mut failures = 0u64;
    for m in [3usize, 4, 5] {
        for r in [2usize, 3] {
            for s in [1usize, 2, 3] {
                let p = PeonyParams::new(m, r, s).unwrap();
                let g = make_peony(p);
                let mut check = |fort: crate::forts::Fort| {
                    checked += 1;
                    if !is_fort(&g, &fort.vertices).unwrap() {
                        failures += 1;
                    }
                };

                for i in 1..=m {
                    for j1 in 1..=r {
                        for j2 in j1 + 1..=r {
                            check(fort_type1(p, i, j1, j2).unwrap());
                        }
                    }
                }

                for_each_choice(m, r, exhaust_limit, sample_size, &mut rng, |choice| {
                    check(fort_type2(p, choice).unwrap())
                });

                for i0 in 1..=m {
                    for_each_choice(m - 1, r, exhaust_limit, sample_size, &mut rng, |choice| {
                        check(fort_type3(p, i0, choice).unwrap())
                    });
                }

                for_each_choice(m * r, s, exhaust_limit, sample_size, &mut rng, |flat| {
                    let rows: Vec<Vec<usize>> = flat.chunks(r).map(|c| c.to_vec()).collect();
                    check(fort_type4(p, &rows).unwrap())
                });
            }
        }
    }
    CaseResult::new(
        "peony fort families",
        failures == 0,
        format!("{checked} forts checked, {failures} failures (seed {seed})"),
    )
}

/// Visits vectors in `{1..=radix}^len`: all of them when there are at most
/// `exhaust_limit`, otherwise `sample_size` seeded random ones.
fn for_each_choice<R: Rng>(
    len: usize,
    radix: usize,
    exhaust_limit: u64,
    sample_size: usize,
    rng: &mut R,
    mut f: impl FnMut(&[usize]),
) {
    let total = (radix as u64).checked_pow(len as u32);
    match total {
        Some(t) if t <= exhaust_limit => {
            let mut choice = vec![1usize; len];
            loop {
                f(&choice);
                let mut pos = 0;
                loop {
                    if pos == len {
                        return;
                    }
                    if choice[pos] < radix {
                        choice[pos] += 1;
                        break;
                    }
                    choice[pos] = 1;
                    pos += 1;
                }
            }
        }
        _ => {
            for _ in 0..sample_size {
                let choice: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=radix)).collect();
                f(&choice);
            }
        }
    }
}

/// The named-plus-random graph corpus used for solver oracle equivalence:
/// paths, cycles, prisms, webs, and peonies up to `max_n` vertices plus
/// `random_count` seeded random graphs.
pub fn small_corpus(seed: u64, max_n: usize, random_count: usize) -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.push(make_path(n).unwrap());
    }
    for n in 3..=max_n {
        graphs.push(make_cycle(n).unwrap());
    }
    for m in 3..=max_n {
        for r in 1..=4 {
            if m * r <= max_n {
                graphs.push(make_cycle_path_product(m, r).unwrap());
            }
        }
    }
    for m in 3..=max_n {
        for r in 1..=3 {
            if m * (r + 1) <= max_n {
                graphs.push(make_web(WebParams::new(m, r).unwrap()));
            }
        }
    }
    for (m, r, s) in [(3, 2, 1), (3, 3, 1), (4, 2, 1)] {
        let p = PeonyParams::new(m, r, s).unwrap();
        if p.vertex_count() <= max_n {
            graphs.push(make_peony(p));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_count {
        let n = rng.gen_range(4..=max_n);
        let p = rng.gen_range(0.15..0.7);
        graphs.push(random_graph(&mut rng, n, p));
    }
    graphs
}

/// Oracle equivalence: the fort-based solver must agree with the exhaustive
/// solver on every corpus graph.
pub fn oracle_equivalence_case(seed: u64, max_n: usize, random_count: usize) -> CaseResult {
    let corpus = small_corpus(seed, max_n, random_count);
    let total = corpus.len();
    let mut disagreements = Vec::new();
    for g in corpus {
        let a = solve_fortbb(&g).unwrap().z;
        let b = solve_exhaustive(&g).unwrap().z;
        if a != b {
            disagreements.push(format!("{}: fortbb={a} exhaustive={b}", g.name()));
        }
    }
    CaseResult::new(
        "solver oracle equivalence",
        disagreements.is_empty(),
        if disagreements.is_empty() {
            format!("{total} graphs agree (seed {seed})")
        } else {
            disagreements.join("; ")
        },
    )
}

/// The `verify peony` suite: formula sweep plus constructions.
pub fn verify_peony(
    m: RangeInclusive<usize>,
    r: RangeInclusive<usize>,
    s: RangeInclusive<usize>,
    max_vertices: usize,
) -> SuiteReport {
    let mut cases = Vec::new();
    for mv in m.clone() {
        for rv in r.clone() {
            for sv in s.clone() {
                let Ok(p) = PeonyParams::new(mv, rv, sv) else {
                    continue;
                };
                if p.vertex_count() <= max_vertices {
                    cases.push(peony_formula_case(mv, rv, sv, 16));
                }
                cases.push(peony_construction_case(mv, rv, sv));
            }
        }
    }
    SuiteReport::new("peony", cases)
}

/// The `verify web` suite: formula sweep plus the regime constructions.
pub fn verify_web(
    m: RangeInclusive<usize>,
    r: RangeInclusive<usize>,
    max_vertices: usize,
) -> SuiteReport {
    let mut cases = Vec::new();
    for mv in m.clone() {
        for rv in r.clone() {
            let Ok(p) = WebParams::new(mv, rv) else {
                continue;
            };
            if p.vertex_count() <= max_vertices {
                cases.push(web_formula_case(mv, rv, 16));
            }
            cases.push(web_construction_case(mv, rv));
        }
    }
    SuiteReport::new("web", cases)
}

/// The `verify prism` suite.
pub fn verify_prism(m: RangeInclusive<usize>, r: RangeInclusive<usize>) -> SuiteReport {
    let mut cases = Vec::new();
    for mv in m.clone() {
        for rv in r.clone() {
            if mv >= 3 && rv >= 1 {
                cases.push(prism_case(mv, rv, 16));
            }
        }
    }
    SuiteReport::new("prism", cases)
}

/// The `verify core` suite: terminus, restriction, duality, sandwich, fort
/// families, and solver oracle equivalence.
pub fn verify_core(seed: u64) -> SuiteReport {
    SuiteReport::new(
        "core",
        vec![
            terminus_trials(seed, 500, 12),
            restriction_trials(seed.wrapping_add(1), 200, 10),
            duality_exhaustive_case(),
            sandwich_trials(seed.wrapping_add(2), 50, 10),
            fort_family_sweep(seed.wrapping_add(3), 10_000, 100),
            oracle_equivalence_case(seed.wrapping_add(4), 14, 100),
        ],
    )
}
