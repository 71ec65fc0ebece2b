//! The zero forcing process: closure, chronologies, chain sets, terminus,
//! and restriction to induced subgraphs.
//!
//! The color change rule: a blue vertex with exactly one white neighbor
//! forces that neighbor blue. The closure of an initial blue set is the
//! unique fixed point of applying the rule.

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, Subgraph, Vertex};
use crate::set::VertexSet;
use rand::Rng;

/// How a recorded chronology schedules its forces. Under either policy a
/// time-step performs one force for every white vertex that is currently
/// forceable, with the lowest-id eligible forcer; `AllEager` is the default
/// trace policy and `MaxConcurrent` names the per-step-maximal schedule that
/// step-count arguments are stated against. The two currently coincide: the
/// set of forceable targets in a step never depends on which eligible forcer
/// is recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ForcePolicy {
    #[default]
    AllEager,
    MaxConcurrent,
}

/// A single force `from -> to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Force {
    pub from: Vertex,
    pub to: Vertex,
}

/// A time-step-indexed record of forces: the initial blue set plus, for each
/// step, the set of forces performed simultaneously in that step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chronology {
    initial: VertexSet,
    steps: Vec<Vec<Force>>,
    graph_size: usize,
}

impl Chronology {
    pub fn new(initial: VertexSet, steps: Vec<Vec<Force>>) -> Self {
        let graph_size = initial.ambient();
        Chronology {
            initial,
            steps,
            graph_size,
        }
    }

    pub fn initial(&self) -> &VertexSet {
        &self.initial
    }

    pub fn steps(&self) -> &[Vec<Force>] {
        &self.steps
    }

    pub fn graph_size(&self) -> usize {
        self.graph_size
    }

    /// All vertices forced at some step.
    pub fn forced(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.graph_size);
        for step in &self.steps {
            for f in step {
                s.insert(f.to);
            }
        }
        s
    }

    /// The expansion after time-step `k`; `k = 0` is the initial set.
    pub fn expansion(&self, k: usize) -> VertexSet {
        let mut s = self.initial.clone();
        for step in self.steps.iter().take(k) {
            for f in step {
                s.insert(f.to);
            }
        }
        s
    }

    /// The final blue set.
    pub fn final_set(&self) -> VertexSet {
        self.expansion(self.steps.len())
    }

    /// Whether every vertex of the graph ends up blue.
    pub fn is_complete(&self) -> bool {
        self.initial.len() + self.forced().len() == self.graph_size
            && self.final_set().len() == self.graph_size
    }
}

/// A partition of the vertices into forcing chains: each chain starts at an
/// initial blue vertex and follows the forces it triggered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSet {
    pub chains: Vec<Vec<Vertex>>,
}

/// The closure of `blue` under the color change rule. Order-independent:
/// the result is the unique maximal set reachable by valid forces.
///
/// Runs in O(V + E) amortized via a worklist of blue vertices whose white
/// neighbor count has dropped to one.
pub fn closure(g: &Graph, blue: &VertexSet) -> Result<VertexSet> {
    g.check_ambient(blue)?;
    let n = g.n();
    let mut is_blue = vec![false; n];
    for v in blue.iter() {
        is_blue[v] = true;
    }
    let mut white_count: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&u| !is_blue[u]).count())
        .collect();
    let mut stack: Vec<Vertex> = blue.iter().filter(|&v| white_count[v] == 1).collect();
    while let Some(u) = stack.pop() {
        if white_count[u] != 1 {
            continue; // stale entry
        }
        let v = *g
            .neighbors(u)
            .iter()
            .find(|&&w| !is_blue[w])
            .expect("white_count said one white neighbor exists");
        is_blue[v] = true;
        for &w in g.neighbors(v) {
            white_count[w] -= 1;
            if is_blue[w] && white_count[w] == 1 {
                stack.push(w);
            }
        }
        if white_count[v] == 1 {
            stack.push(v);
        }
    }
    Ok(VertexSet::from_ids(
        n,
        (0..n).filter(|&v| is_blue[v]),
    ))
}

/// Whether `closure(g, b) = V(g)`.
pub fn is_zero_forcing_set(g: &Graph, b: &VertexSet) -> Result<bool> {
    Ok(closure(g, b)?.len() == g.n())
}

/// Runs the forcing process from `blue`, recording a chronology. The union
/// of forced vertices always equals `closure(g, blue) \ blue`; if `blue` is
/// not a zero forcing set the chronology simply stalls early.
pub fn run_chronology(g: &Graph, blue: &VertexSet, _policy: ForcePolicy) -> Result<Chronology> {
    g.check_ambient(blue)?;
    let n = g.n();
    let mut is_blue = vec![false; n];
    for v in blue.iter() {
        is_blue[v] = true;
    }
    let mut steps = Vec::new();
    loop {
        let mut forces = collect_valid_forces(g, &is_blue);
        if forces.is_empty() {
            break;
        }
        // One force per white target, lowest-id forcer.
        forces.sort_by_key(|f| (f.to, f.from));
        forces.dedup_by_key(|f| f.to);
        for f in &forces {
            is_blue[f.to] = true;
        }
        steps.push(forces);
    }
    Ok(Chronology::new(blue.clone(), steps))
}

/// Like [`run_chronology`] but performs, at every step, a random nonempty
/// subset of the available forces with random eligible forcers. Useful for
/// exploring the space of relaxed chronologies; the final blue set is always
/// the closure regardless of the choices made.
pub fn run_random_chronology<R: Rng>(g: &Graph, blue: &VertexSet, rng: &mut R) -> Result<Chronology> {
    g.check_ambient(blue)?;
    let n = g.n();
    let mut is_blue = vec![false; n];
    for v in blue.iter() {
        is_blue[v] = true;
    }
    let mut steps = Vec::new();
    loop {
        let valid = collect_valid_forces(g, &is_blue);
        if valid.is_empty() {
            break;
        }
        // Group eligible forcers by target.
        let mut targets: Vec<Vertex> = valid.iter().map(|f| f.to).collect();
        targets.sort_unstable();
        targets.dedup();
        let mut chosen: Vec<Force> = Vec::new();
        for &t in &targets {
            if rng.gen_bool(0.5) {
                chosen.push(pick_random_forcer(&valid, t, rng));
            }
        }
        if chosen.is_empty() {
            let t = targets[rng.gen_range(0..targets.len())];
            chosen.push(pick_random_forcer(&valid, t, rng));
        }
        chosen.sort_by_key(|f| f.to);
        for f in &chosen {
            is_blue[f.to] = true;
        }
        steps.push(chosen);
    }
    Ok(Chronology::new(blue.clone(), steps))
}

fn pick_random_forcer<R: Rng>(valid: &[Force], target: Vertex, rng: &mut R) -> Force {
    let eligible: Vec<&Force> = valid.iter().filter(|f| f.to == target).collect();
    *eligible[rng.gen_range(0..eligible.len())]
}

fn collect_valid_forces(g: &Graph, is_blue: &[bool]) -> Vec<Force> {
    let mut forces = Vec::new();
    for u in 0..g.n() {
        if !is_blue[u] {
            continue;
        }
        let mut whites = g.neighbors(u).iter().filter(|&&w| !is_blue[w]);
        if let (Some(&w), None) = (whites.next(), whites.next()) {
            forces.push(Force { from: u, to: w });
        }
    }
    forces
}

/// Checks every structural invariant of a chronology against `g` and reports
/// the earliest violation: each force must have a blue forcer whose unique
/// white neighbor at that moment is the (still white) target, and no vertex
/// may be forced twice. Violations are data, not panics.
pub fn validate_chronology(g: &Graph, c: &Chronology) -> Result<()> {
    if c.graph_size() != g.n() {
        return Err(Error::AmbientMismatch {
            left: c.graph_size(),
            right: g.n(),
        });
    }
    let n = g.n();
    let mut is_blue = vec![false; n];
    for v in c.initial().iter() {
        is_blue[v] = true;
    }
    let violation = |step: usize, message: String| Error::InvalidChronology { step, message };
    for (idx, step) in c.steps().iter().enumerate() {
        let step_no = idx + 1;
        // Validity is judged against the expansion after the previous step.
        for f in step {
            if f.from >= n || f.to >= n {
                return Err(violation(step_no, format!("force {}->{} out of range", f.from, f.to)));
            }
            if !is_blue[f.from] {
                return Err(violation(
                    step_no,
                    format!("forcer {} is white at its own force", f.from),
                ));
            }
            if is_blue[f.to] {
                return Err(violation(
                    step_no,
                    format!("vertex {} is already blue when forced by {}", f.to, f.from),
                ));
            }
            let whites: Vec<Vertex> = g
                .neighbors(f.from)
                .iter()
                .copied()
                .filter(|&w| !is_blue[w])
                .collect();
            if whites != [f.to] {
                return Err(violation(
                    step_no,
                    format!(
                        "vertex {} has white neighbors {:?}, so it cannot force {}",
                        f.from, whites, f.to
                    ),
                ));
            }
        }
        // Apply simultaneously; a target hit twice inside one step shows up
        // here as already blue on the second application.
        for f in step {
            if is_blue[f.to] {
                return Err(violation(
                    step_no,
                    format!("vertex {} forced twice in one step", f.to),
                ));
            }
            is_blue[f.to] = true;
        }
    }
    Ok(())
}

/// Convenience wrapper over [`validate_chronology`].
pub fn is_valid_chronology(g: &Graph, c: &Chronology) -> bool {
    validate_chronology(g, c).is_ok()
}

/// Reconstructs the forcing chains of a complete chronology. Chains start
/// at the initial blue vertices (in ascending order) and partition `V(g)`.
pub fn chain_set(c: &Chronology) -> Result<ChainSet> {
    if !c.is_complete() {
        return Err(Error::IncompleteChronology);
    }
    let n = c.graph_size();
    let mut next = vec![None; n];
    for step in c.steps() {
        for f in step {
            if next[f.from].is_some() {
                return Err(Error::InvalidChronology {
                    step: 0,
                    message: format!("vertex {} performs two forces", f.from),
                });
            }
            next[f.from] = Some(f.to);
        }
    }
    let mut chains = Vec::with_capacity(c.initial().len());
    for start in c.initial().iter() {
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(nxt) = next[cur] {
            chain.push(nxt);
            cur = nxt;
        }
        chains.push(chain);
    }
    Ok(ChainSet { chains })
}

/// The vertices that perform no force during a complete chronology. Always
/// has the same cardinality as the initial set.
pub fn terminus(c: &Chronology) -> Result<VertexSet> {
    if !c.is_complete() {
        return Err(Error::IncompleteChronology);
    }
    let mut t = VertexSet::full(c.graph_size());
    for step in c.steps() {
        for f in step {
            t.remove(f.from);
        }
    }
    Ok(t)
}

/// A chronology restricted to an induced subgraph, together with the
/// subgraph and its id maps.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub subgraph: Subgraph,
    /// Chronology over the subgraph's new vertex ids.
    pub chronology: Chronology,
    /// The restricted initial set, in the parent graph's ids.
    pub initial_in_parent: VertexSet,
}

/// Restricts a complete chronology of a zero forcing set to the subgraph
/// induced by `h_vertices`: keeps only forces with both endpoints inside,
/// and starts from the initial vertices of the forcing subpaths (members of
/// the original set plus vertices forced from outside). Step indices are
/// preserved, so steps that lose all their forces stay as empty steps.
pub fn restrict_chronology(g: &Graph, h_vertices: &VertexSet, c: &Chronology) -> Result<Restriction> {
    validate_chronology(g, c)?;
    if !c.is_complete() {
        return Err(Error::Precondition(
            "restriction requires a chronology that forces the whole graph".into(),
        ));
    }
    g.check_ambient(h_vertices)?;
    let sub = induced_subgraph(g, h_vertices)?;
    let mut initial_in_parent: VertexSet = c.initial().intersection(h_vertices);
    let mut steps = Vec::with_capacity(c.steps().len());
    for step in c.steps() {
        let mut kept = Vec::new();
        for f in step {
            match (h_vertices.contains(f.from), h_vertices.contains(f.to)) {
                (true, true) => kept.push(Force {
                    from: sub.to_sub[f.from].expect("member of h"),
                    to: sub.to_sub[f.to].expect("member of h"),
                }),
                (false, true) => initial_in_parent.insert(f.to),
                _ => {}
            }
        }
        steps.push(kept);
    }
    let initial_sub = VertexSet::from_ids(
        sub.graph.n(),
        initial_in_parent.iter().map(|v| sub.to_sub[v].unwrap()),
    );
    Ok(Restriction {
        chronology: Chronology::new(initial_sub, steps),
        subgraph: sub,
        initial_in_parent,
    })
}
