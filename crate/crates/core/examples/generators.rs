//! Basic generators, their extensions and the two-sided words they
//! complete to.

use zorro::generators::{completion_window, enumerate_basic, extend_left, extend_right, reduce_to_basic, right_tail_equivalent};
use zorro::words::parse_substitution;

fn main() -> zorro::Result<()> {
    let sub = parse_substitution("0 -> 042\n1 -> 142\n2 -> 042\n3 -> 043\n4 -> 01432\n")?;
    let basics = enumerate_basic(&sub)?;
    for g in &basics {
        println!("basic {}", g.render(&sub));
    }

    let first = &basics[0];
    let grown = extend_left(&sub, &extend_right(&sub, first));
    println!("extended {} reduces to {}", grown.render(&sub), reduce_to_basic(&sub, &grown).render(&sub));

    let window = completion_window(&sub, first, -12, 12)?;
    let left = sub.render(window.slice(-12, 0).unwrap());
    let right = sub.render(window.slice(0, 12).unwrap());
    println!("completion around {}: ...{left}.{right}...", first.render(&sub));

    for other in &basics[1..] {
        let verdict = right_tail_equivalent(&sub, first, other, 32)?;
        println!("right tails of {} and {}: {verdict:?}", first.render(&sub), other.render(&sub));
    }
    Ok(())
}
