//! The configuration graph of an aperiodic substitution, and the
//! periodicity verdict it yields.

use zorro::config_graph::{classify, configuration_graph, Bounds, PeriodicityVerdict};
use zorro::words::parse_substitution;

fn main() -> zorro::Result<()> {
    let bounds = Bounds::default();
    let sub = parse_substitution("1 -> 121\n2 -> 2112\n")?;
    let cg = configuration_graph(&sub, &bounds)?;
    println!("power {}", cg.power);
    print!("{}", cg.graph.to_text());
    for g in &cg.edge_generators {
        println!("# edge from special basic {}", g.render(&cg.substitution));
    }

    for text in ["1 -> 121\n2 -> 2112\n", "a -> aba\nb -> bab\n", "a -> ab\nb -> ab\n"] {
        let sub = parse_substitution(text)?;
        match classify(&sub, &bounds) {
            PeriodicityVerdict::Periodic => println!("{}: periodic", sub.to_text().trim().replace('\n', ", ")),
            PeriodicityVerdict::Aperiodic { power, .. } => {
                println!("{}: aperiodic at power {power}", sub.to_text().trim().replace('\n', ", "))
            }
            PeriodicityVerdict::Unsupported(e) => println!("{}: unsupported ({e})", sub.to_text().trim().replace('\n', ", ")),
        }
    }
    Ok(())
}
