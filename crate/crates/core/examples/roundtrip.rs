//! Realizes a graph and checks that the configuration graph of the result
//! is isomorphic to the input.

use zorro::config_graph::{BipartiteMultigraph, Bounds};
use zorro::zorro::verify_roundtrip;

fn main() -> zorro::Result<()> {
    let g = BipartiteMultigraph::from_multiplicities(&[vec![1, 1, 0], vec![0, 2, 1]]);
    let report = verify_roundtrip(&g, &Bounds::default())?;
    for check in &report.checks {
        let status = if check.passed { "ok" } else { "FAILED" };
        println!("{}", format!("{status} {} {}", check.name, check.detail).trim_end());
    }
    print!("{}", report.substitution.to_text());
    if let (Some(cg), Some(iso)) = (&report.configuration, &report.isomorphism) {
        for (v, &w) in iso.mapping.iter().enumerate() {
            println!("{} {} => wing {}", g.vertex(v).side, g.vertex(v).id, cg.substitution.render(cg.label(w)));
        }
    }
    assert!(report.passed());
    Ok(())
}
