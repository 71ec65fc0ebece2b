use forcelab::generators::{make_cycle_path_product, make_peony, make_web, PeonyParams, WebParams};
use forcelab::solver::solve_fortbb;
use std::time::Instant;

fn main() {
    let arg: Option<String> = std::env::args().nth(1);
    if arg.as_deref() == Some("big") {
        let g = make_web(WebParams::new(16, 3).unwrap());
        let t = Instant::now();
        let rep = solve_fortbb(&g).unwrap();
        eprintln!(
            "Wb(16,3) n={} z={} nodes={} closures={} cert={} in {:?}",
            g.n(), rep.z, rep.stats.nodes, rep.stats.closures,
            rep.lower_bound_forts.len(), t.elapsed()
        );
        return;
    }
    for (m, r, s) in [(3, 3, 2), (4, 3, 1), (4, 3, 2)] {
        let g = make_peony(PeonyParams::new(m, r, s).unwrap());
        let t = Instant::now();
        let rep = solve_fortbb(&g).unwrap();
        eprintln!(
            "Py({m},{r},{s}) n={} z={} nodes={} closures={} cert={} in {:?}",
            g.n(), rep.z, rep.stats.nodes, rep.stats.closures,
            rep.lower_bound_forts.len(), t.elapsed()
        );
    }
    for (m, r) in [(7, 3), (8, 3)] {
        let g = make_cycle_path_product(m, r).unwrap();
        let t = Instant::now();
        let rep = solve_fortbb(&g).unwrap();
        eprintln!(
            "C{m}xP{r} n={} z={} nodes={} in {:?}",
            g.n(), rep.z, rep.stats.nodes, t.elapsed()
        );
    }
}
