//! Forts: vertex sets no outside vertex sees exactly once.
//!
//! A fort is an obstacle to forcing — the process can never enter it from
//! outside — and a set is a zero forcing set exactly when it meets every
//! fort. This module verifies forts, builds the four parametric fort
//! families of peony graphs, extracts a fort from any stalled closure, and
//! enumerates inclusion-minimal forts at desk scale.

use crate::combi::for_each_combination;
use crate::error::{Error, Result};
use crate::forcing::{closure, is_zero_forcing_set};
use crate::generators::{layer, PeonyParams};
use crate::graph::Graph;
use crate::set::VertexSet;
use std::ops::ControlFlow;

/// Default vertex cap for exhaustive fort enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// How a fort came to be.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FortKind {
    /// Two layers of one station: `S_{i,j1} ∪ S_{i,j2}`.
    TwoLayers {
        station: usize,
        layers: (usize, usize),
    },
    /// One layer from every station.
    LayerPerStation { layer_choice: Vec<usize> },
    /// The center plus one layer from every station but one.
    CenterAndLayers {
        skipped_station: usize,
        layer_choice: Vec<usize>,
    },
    /// Complement of the center plus one chosen vertex per layer.
    SpokeComplement { position_choice: Vec<Vec<usize>> },
    /// Extracted from a stalled closure.
    Extracted,
    /// Found by exhaustive enumeration.
    Enumerated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fort {
    pub vertices: VertexSet,
    pub kind: FortKind,
}

/// Whether `s` is a fort of `g`: nonempty, and no vertex outside `s` has
/// exactly one neighbor in `s`. The empty set is rejected.
pub fn is_fort(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_ambient(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    for u in 0..g.n() {
        if s.contains(u) {
            continue;
        }
        let mut inside = g.neighbors(u).iter().filter(|&&w| s.contains(w));
        if let (Some(_), None) = (inside.next(), inside.next()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The union of two distinct layers of station `i`: size `2s`, and a fort
/// because only `u_i` and `u_{i+1}` see it, twice each.
pub fn fort_type1(p: PeonyParams, i: usize, j1: usize, j2: usize) -> Result<Fort> {
    if j1 == j2 {
        return Err(Error::Precondition(format!(
            "layer indices must differ, got j1 = j2 = {j1}"
        )));
    }
    let vertices = layer(p, i, j1)?.union(&layer(p, i, j2)?);
    Ok(Fort {
        vertices,
        kind: FortKind::TwoLayers {
            station: i,
            layers: (j1, j2),
        },
    })
}

/// One layer from every station, size `m*s`: every hub sees exactly two
/// members (the chosen layer starting at it and the one ending at it).
pub fn fort_type2(p: PeonyParams, layer_choice: &[usize]) -> Result<Fort> {
    if layer_choice.len() != p.m {
        return Err(Error::Precondition(format!(
            "layer choice must have {} entries, got {}",
            p.m,
            layer_choice.len()
        )));
    }
    let mut vertices = VertexSet::empty(p.vertex_count());
    for (i, &j) in layer_choice.iter().enumerate() {
        vertices.union_with(&layer(p, i + 1, j)?);
    }
    Ok(Fort {
        vertices,
        kind: FortKind::LayerPerStation {
            layer_choice: layer_choice.to_vec(),
        },
    })
}

/// The center plus one layer from every station except `skipped_station`,
/// size `(m-1)s + 1`. `layer_choice[t]` is the pick for the `t`-th remaining
/// station in ascending order.
pub fn fort_type3(p: PeonyParams, skipped_station: usize, layer_choice: &[usize]) -> Result<Fort> {
    if !(1..=p.m).contains(&skipped_station) {
        return Err(Error::IndexOutOfRange {
            name: "skipped_station",
            value: skipped_station,
            max: p.m,
        });
    }
    if layer_choice.len() != p.m - 1 {
        return Err(Error::Precondition(format!(
            "layer choice must have {} entries, got {}",
            p.m - 1,
            layer_choice.len()
        )));
    }
    let mut vertices = VertexSet::empty(p.vertex_count());
    vertices.insert(p.center());
    for (t, i) in (1..=p.m).filter(|&i| i != skipped_station).enumerate() {
        vertices.union_with(&layer(p, i, layer_choice[t])?);
    }
    Ok(Fort {
        vertices,
        kind: FortKind::CenterAndLayers {
            skipped_station,
            layer_choice: layer_choice.to_vec(),
        },
    })
}

/// The complement of `{c} ∪ {one chosen vertex per layer}`, where
/// `position_choice[i-1][j-1]` picks `k` for layer `(i, j)`.
pub fn fort_type4(p: PeonyParams, position_choice: &[Vec<usize>]) -> Result<Fort> {
    if position_choice.len() != p.m || position_choice.iter().any(|row| row.len() != p.r) {
        return Err(Error::Precondition(format!(
            "position choice must be {}x{}",
            p.m, p.r
        )));
    }
    let mut removed = VertexSet::empty(p.vertex_count());
    removed.insert(p.center());
    for (i, row) in position_choice.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            if !(1..=p.s).contains(&k) {
                return Err(Error::IndexOutOfRange {
                    name: "k",
                    value: k,
                    max: p.s,
                });
            }
            removed.insert(p.spoke(i + 1, j + 1, k));
        }
    }
    Ok(Fort {
        vertices: removed.complement(),
        kind: FortKind::SpokeComplement {
            position_choice: position_choice.to_vec(),
        },
    })
}

/// The white remainder of a stalled closure, `V \ closure(g, b)`. Always a
/// fort (a blue vertex seeing exactly one white vertex would still be able
/// to force) and always disjoint from `b`.
pub fn extract_fort_from_failure(g: &Graph, b: &VertexSet) -> Result<Fort> {
    let reached = closure(g, b)?;
    if reached.len() == g.n() {
        return Err(Error::Precondition(
            "the given set forces the whole graph; no fort to extract".into(),
        ));
    }
    Ok(Fort {
        vertices: reached.complement(),
        kind: FortKind::Extracted,
    })
}

/// Greedily shrinks a fort to an inclusion-minimal fort contained in it, by
/// trying to drop members in ascending id order. Smaller forts are stronger
/// hitting constraints for the solver.
pub fn shrink_to_minimal_fort(g: &Graph, fort: &VertexSet) -> Result<VertexSet> {
    if !is_fort(g, fort)? {
        return Err(Error::Precondition(
            "shrink_to_minimal_fort needs a fort as input".into(),
        ));
    }
    let mut current = fort.clone();
    loop {
        let mut shrunk = false;
        for v in current.to_vec() {
            let mut candidate = current.clone();
            candidate.remove(v);
            if !candidate.is_empty() && is_fort(g, &candidate)? {
                current = candidate;
                shrunk = true;
            }
        }
        if !shrunk {
            return Ok(current);
        }
    }
}

/// All inclusion-minimal forts of cardinality at most `max_size`, in
/// ascending (size, lexicographic) order. Exhaustive subset search guarded
/// by `cap` (default [`DEFAULT_ENUMERATION_CAP`]).
pub fn enumerate_minimal_forts(g: &Graph, max_size: usize) -> Result<Vec<Fort>> {
    enumerate_minimal_forts_capped(g, max_size, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_minimal_forts_capped(
    g: &Graph,
    max_size: usize,
    cap: usize,
) -> Result<Vec<Fort>> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded {
            operation: "minimal fort enumeration",
            n,
            cap,
        });
    }
    let mut minimal: Vec<Fort> = Vec::new();
    for size in 1..=max_size.min(n) {
        for_each_combination::<()>(n, size, |ids| {
            let candidate = VertexSet::from_ids(n, ids.iter().copied());
            // Any fort strictly inside the candidate is smaller and has
            // already been found, so a subset test doubles as the
            // minimality test.
            let has_smaller = minimal.iter().any(|f| f.vertices.is_subset(&candidate));
            if !has_smaller && is_fort(g, &candidate).unwrap_or(false) {
                minimal.push(Fort {
                    vertices: candidate,
                    kind: FortKind::Enumerated,
                });
            }
            ControlFlow::Continue(())
        });
    }
    Ok(minimal)
}

/// Checks the fort/forcing duality on one candidate set: `b` forces the
/// whole graph if and only if it intersects every minimal fort. Returns
/// whether the two sides agree (they must, for every graph and subset).
pub fn verify_duality(g: &Graph, b: &VertexSet) -> Result<bool> {
    let forts = enumerate_minimal_forts(g, g.n())?;
    verify_duality_with(g, &forts, b)
}

/// [`verify_duality`] against a precomputed complete minimal fort list.
pub fn verify_duality_with(g: &Graph, minimal_forts: &[Fort], b: &VertexSet) -> Result<bool> {
    let forcing = is_zero_forcing_set(g, b)?;
    let hits_all = minimal_forts.iter().all(|f| !f.vertices.is_disjoint(b));
    Ok(forcing == hits_all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_cycle, make_path, make_peony};

    #[test]
    fn antipodal_pair_is_fort() {
        let c4 = make_cycle(4).unwrap();
        assert!(is_fort(&c4, &VertexSet::from_ids(4, [0, 2])).unwrap());
        assert!(!is_fort(&c4, &VertexSet::from_ids(4, [0, 1])).unwrap());
    }

    #[test]
    fn path_endpoint_is_not_a_fort() {
        let p3 = make_path(3).unwrap();
        assert!(!is_fort(&p3, &VertexSet::from_ids(3, [0])).unwrap());
        assert!(matches!(
            is_fort(&p3, &VertexSet::empty(3)),
            Err(Error::EmptySet)
        ));
    }

    #[test]
    fn two_layer_fort_on_small_peony() {
        let p = PeonyParams::new(3, 2, 1).unwrap();
        let g = make_peony(p);
        let f = fort_type1(p, 1, 1, 2).unwrap();
        assert_eq!(f.vertices.len(), 2 * p.s);
        assert!(is_fort(&g, &f.vertices).unwrap());
        // u_1 sees both layer members.
        assert_eq!(g.neighbors_in(p.hub(1), &f.vertices).unwrap(), 2);
        assert!(fort_type1(p, 1, 2, 2).is_err());
    }

    #[test]
    fn layer_per_station_fort() {
        let p = PeonyParams::new(3, 2, 1).unwrap();
        let g = make_peony(p);
        // Exhaust all r^m = 8 choice vectors.
        for bits in 0..8u32 {
            let choice: Vec<usize> = (0..3).map(|i| 1 + (bits >> i & 1) as usize).collect();
            let f = fort_type2(p, &choice).unwrap();
            assert_eq!(f.vertices.len(), p.m * p.s);
            assert!(is_fort(&g, &f.vertices).unwrap(), "choice {choice:?}");
            for i in 1..=p.m {
                assert_eq!(g.neighbors_in(p.hub(i), &f.vertices).unwrap(), 2);
            }
        }
        assert!(fort_type2(p, &[1, 2]).is_err());
    }

    #[test]
    fn center_and_layers_fort() {
        let p = PeonyParams::new(3, 2, 2).unwrap();
        let g = make_peony(p);
        for skipped in 1..=3 {
            for bits in 0..4u32 {
                let choice: Vec<usize> = (0..2).map(|t| 1 + (bits >> t & 1) as usize).collect();
                let f = fort_type3(p, skipped, &choice).unwrap();
                assert_eq!(f.vertices.len(), (p.m - 1) * p.s + 1);
                assert!(is_fort(&g, &f.vertices).unwrap());
                // The two hubs flanking the skipped station see 2 members,
                // all other hubs see 3.
                for i in 1..=p.m {
                    let expected = if i == skipped || i == skipped % p.m + 1 { 2 } else { 3 };
                    assert_eq!(
                        g.neighbors_in(p.hub(i), &f.vertices).unwrap(),
                        expected,
                        "skipped={skipped} hub={i}"
                    );
                }
            }
        }
        assert!(fort_type3(p, 4, &[1, 1]).is_err());
        assert!(fort_type3(p, 1, &[1]).is_err());
    }

    #[test]
    fn spoke_complement_fort() {
        for s in 1..=3 {
            let p = PeonyParams::new(3, 2, s).unwrap();
            let g = make_peony(p);
            let mut stack = vec![vec![]];
            // All s^(m*r) position choices for this small sweep.
            while let Some(flat) = stack.pop() {
                if flat.len() == p.m * p.r {
                    let rows: Vec<Vec<usize>> =
                        flat.chunks(p.r).map(|c: &[usize]| c.to_vec()).collect();
                    let f = fort_type4(p, &rows).unwrap();
                    assert_eq!(f.vertices.len(), g.n() - (p.m * p.r + 1));
                    assert!(is_fort(&g, &f.vertices).unwrap(), "s={s} choice {rows:?}");
                } else {
                    for k in 1..=p.s {
                        let mut next = flat.clone();
                        next.push(k);
                        stack.push(next);
                    }
                }
            }
        }
        let p = PeonyParams::new(3, 2, 2).unwrap();
        assert!(fort_type4(p, &[vec![1, 1]]).is_err());
        assert!(fort_type4(p, &[vec![1, 3], vec![1, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn puncturing_two_layer_forts() {
        // Removing a layer endpoint always breaks the fort: the removed
        // vertex ends up outside with its single remaining path neighbor as
        // a unique fort neighbor. At s = 2 every vertex is an endpoint; for
        // s >= 3 an interior hole leaves both of its path neighbors in the
        // set, so the punctured set is still a fort.
        for s in 2..=3 {
            let p = PeonyParams::new(3, 2, s).unwrap();
            let g = make_peony(p);
            let f = fort_type1(p, 2, 1, 2).unwrap();
            for j in 1..=2 {
                for k in 1..=s {
                    let mut punctured = f.vertices.clone();
                    punctured.remove(p.spoke(2, j, k));
                    let expect_fort = k != 1 && k != s;
                    assert_eq!(
                        is_fort(&g, &punctured).unwrap(),
                        expect_fort,
                        "s={s} hole at v_2_{j}_{k}"
                    );
                }
            }
        }
    }

    #[test]
    fn extraction_from_stalled_closures() {
        let c5 = make_cycle(5).unwrap();
        let f = extract_fort_from_failure(&c5, &VertexSet::from_ids(5, [0])).unwrap();
        assert_eq!(f.vertices, VertexSet::from_ids(5, [1, 2, 3, 4]));
        assert!(is_fort(&c5, &f.vertices).unwrap());

        let p3 = make_path(3).unwrap();
        let b = VertexSet::from_ids(3, [1]);
        let f = extract_fort_from_failure(&p3, &b).unwrap();
        assert_eq!(f.vertices, VertexSet::from_ids(3, [0, 2]));
        assert!(f.vertices.is_disjoint(&b));

        let p5 = make_path(5).unwrap();
        assert!(matches!(
            extract_fort_from_failure(&p5, &VertexSet::from_ids(5, [0])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn minimal_forts_of_p2_and_c4() {
        let p2 = make_path(2).unwrap();
        let forts = enumerate_minimal_forts(&p2, 2).unwrap();
        assert_eq!(forts.len(), 1);
        assert_eq!(forts[0].vertices, VertexSet::full(2));

        let c4 = make_cycle(4).unwrap();
        let forts = enumerate_minimal_forts(&c4, 4).unwrap();
        let sets: Vec<Vec<usize>> = forts.iter().map(|f| f.vertices.to_vec()).collect();
        assert_eq!(sets, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn enumerated_forts_are_minimal() {
        let g = make_cycle(5).unwrap();
        let forts = enumerate_minimal_forts(&g, 5).unwrap();
        assert!(!forts.is_empty());
        for f in &forts {
            assert!(is_fort(&g, &f.vertices).unwrap());
            for v in f.vertices.iter() {
                let mut smaller = f.vertices.clone();
                smaller.remove(v);
                if !smaller.is_empty() {
                    assert!(
                        !is_fort(&g, &smaller).unwrap()
                            || forts
                                .iter()
                                .all(|other| !other.vertices.is_subset(&smaller)),
                    );
                }
            }
        }
        // No enumerated fort contains another.
        for (i, a) in forts.iter().enumerate() {
            for (j, b) in forts.iter().enumerate() {
                if i != j {
                    assert!(!a.vertices.is_subset(&b.vertices));
                }
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let g = make_path(21).unwrap();
        assert!(matches!(
            enumerate_minimal_forts(&g, 3),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_minimal_forts_capped(&g, 2, 21).is_ok());
    }

    #[test]
    fn duality_exhaustive_on_p4() {
        let p4 = make_path(4).unwrap();
        let forts = enumerate_minimal_forts(&p4, 4).unwrap();
        for bits in 0..16u32 {
            let b = VertexSet::from_ids(4, (0..4).filter(|i| bits >> i & 1 == 1));
            assert!(verify_duality_with(&p4, &forts, &b).unwrap(), "bits {bits:b}");
        }
    }
}
