//! Builds a substitution whose configuration graph is a given undecided
//! bipartite multigraph, printing the construction trace.

use zorro::config_graph::BipartiteMultigraph;
use zorro::zorro::{detect_case, realize};

const GRAPH: &str = "\
left lower
left upper
right top
right middle
right bottom
edge upper top
edge upper top
edge upper middle
edge lower middle
edge lower bottom
edge lower bottom
";

fn main() -> zorro::Result<()> {
    let g = BipartiteMultigraph::parse(GRAPH)?;
    let (case, _) = detect_case(&g)?;
    println!("embedded case {case}");
    let (sub, trace) = realize(&g)?;
    for line in trace.lines() {
        println!("# {line}");
    }
    print!("{}", sub.to_text());
    assert_eq!(trace.replay(), sub);
    Ok(())
}
