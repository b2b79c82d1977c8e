//! Basic properties of a substitution: primitivity, prefix and postfix
//! freeness, and small slices of its language.

use zorro::words::parse_substitution;

fn main() -> zorro::Result<()> {
    let sub = parse_substitution("0 -> 10\n1 -> 0\n")?;
    println!("{}", sub.to_text());
    println!("primitivity: {:?}", sub.primitivity());
    println!("prefix free: {}", sub.is_prefix_free());
    println!("postfix free: {}", sub.is_postfix_free());

    for n in 1..=4 {
        let slice = sub.language_n(n)?;
        let words: Vec<String> = slice.iter().map(|w| sub.render(w)).collect();
        println!("L{n} ({} words): {}", slice.len(), words.join(" "));
    }

    let square = sub.power(2)?;
    println!("square:\n{}", square.to_text());
    Ok(())
}
