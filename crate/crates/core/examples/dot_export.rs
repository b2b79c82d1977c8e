//! Graphviz output for letter graphs and configuration graphs.
//!
//! Pipe into `dot -Tsvg` to render.

use zorro::config_graph::{configuration_graph, Bounds};
use zorro::format::{bipartite_dot, endpoint_map_dot, letter_label, pair_label};
use zorro::letter_graphs::LetterGraphs;
use zorro::words::parse_substitution;

fn main() -> zorro::Result<()> {
    let sub = parse_substitution("1 -> 121\n2 -> 2112\n")?;
    let graphs = LetterGraphs::compute(&sub, 8)?;
    println!("{}", endpoint_map_dot("ll", &graphs.ll, |l| letter_label(&sub, l)));
    if let Some(rs) = &graphs.rs {
        println!("{}", endpoint_map_dot("rs", rs, |p| pair_label(&sub, p)));
    }
    let cg = configuration_graph(&sub, &Bounds::default())?;
    println!("{}", bipartite_dot("config", &cg.graph));
    Ok(())
}
