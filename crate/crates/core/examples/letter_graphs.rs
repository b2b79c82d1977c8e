//! The four endpoint graphs of a substitution and the least power at which
//! they are all subfixed.

use zorro::letter_graphs::{subfixing_power, LetterGraphs};
use zorro::words::parse_substitution;

fn main() -> zorro::Result<()> {
    let sub = parse_substitution("0 -> 10\n1 -> 0\n")?;
    let graphs = LetterGraphs::compute(&sub, 8)?;

    println!("least segregating: left {:?}, right {:?}", graphs.left.least, graphs.right.least);
    let show = |name: &str, edges: Vec<String>, subfixed: bool| {
        println!("{name} ({}): {}", if subfixed { "subfixed" } else { "not subfixed" }, edges.join(", "));
    };
    show("ll", graphs.ll.edges().map(|(a, b)| format!("{} -> {}", sub.render(&[*a]), sub.render(&[*b]))).collect(), graphs.ll.is_subfixed());
    show("rl", graphs.rl.edges().map(|(a, b)| format!("{} -> {}", sub.render(&[*a]), sub.render(&[*b]))).collect(), graphs.rl.is_subfixed());
    for (name, map) in [("ls", &graphs.ls), ("rs", &graphs.rs)] {
        if let Some(map) = map {
            let edges = map
                .edges()
                .map(|((u, v), (x, y))| format!("({},{}) -> ({},{})", sub.render(u), sub.render(v), sub.render(x), sub.render(y)))
                .collect();
            show(name, edges, map.is_subfixed());
        }
    }

    println!("subfixing power: {}", subfixing_power(&sub, 64, 8)?);
    Ok(())
}
