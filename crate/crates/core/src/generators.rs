//! Generators `(v, u, w)` with `τ(u) = v·u·w`, their extensions, the basic
//! representative of each G class, and finite windows of completions.
//!
//! Orbit and tail questions about completions are answered through the
//! generator calculus (basic representatives and wing comparison), never by
//! comparing finite windows.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::letter_graphs::{l2_fast, ll_graph, rl_graph};
use crate::words::{LanguageSlice, Letter, Substitution, Word};

/// A generator: left wing, center and right wing, all nonempty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub left: Word,
    pub center: Word,
    pub right: Word,
}

impl Generator {
    /// Unchecked constructor; see [`validate_generator`].
    pub fn new(left: Word, center: Word, right: Word) -> Self {
        Generator { left, center, right }
    }

    /// Parses `(v,u,w)` (parentheses optional) over the substitution's
    /// alphabet, without validating the generator equation.
    pub fn parse(sub: &Substitution, text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Malformed {
                line: 0,
                message: format!("expected (v,u,w), got `{text}`"),
            });
        }
        Ok(Generator {
            left: sub.word(parts[0])?,
            center: sub.word(parts[1])?,
            right: sub.word(parts[2])?,
        })
    }

    pub fn len(&self) -> usize {
        self.center.len()
    }

    pub fn is_empty(&self) -> bool {
        self.center.is_empty()
    }

    /// `(v,u,w)` with canonical letter tokens.
    pub fn render(&self, sub: &Substitution) -> String {
        format!(
            "({},{},{})",
            sub.render(&self.left),
            sub.render(&self.center),
            sub.render(&self.right)
        )
    }

    /// The corresponding generator of the mirrored substitution.
    pub fn mirrored(&self) -> Generator {
        Generator {
            left: self.right.reversed(),
            center: self.center.reversed(),
            right: self.left.reversed(),
        }
    }

    fn sort_key(&self) -> (usize, &Word, &Word, &Word) {
        (self.center.len(), &self.center, &self.left, &self.right)
    }

    /// Whether `τ(u) = v·u·w` holds for `sub`.
    pub fn satisfies_equation(&self, sub: &Substitution) -> bool {
        let words_ok = [&self.left, &self.center, &self.right]
            .iter()
            .all(|w| !w.is_empty() && w.iter().all(|&l| sub.alphabet().contains(l)));
        if !words_ok {
            return false;
        }
        let image = sub.expand(&self.center);
        image.len() == self.left.len() + self.center.len() + self.right.len()
            && image.starts_with(&self.left)
            && image[self.left.len()..].starts_with(&self.center)
            && image.ends_with(&self.right)
    }
}

/// Checks that `(v, u, w)` is a generator of `sub`.
pub fn validate_generator(sub: &Substitution, left: Word, center: Word, right: Word) -> Result<Generator> {
    for (word, name) in [(&left, "left wing"), (&center, "center"), (&right, "right wing")] {
        if word.is_empty() {
            return Err(Error::EmptyWord(name));
        }
        if let Some(bad) = word.iter().find(|&&l| !sub.alphabet().contains(l)) {
            return Err(Error::LetterOutsideAlphabet(bad.id()));
        }
    }
    let g = Generator::new(left, center, right);
    if !g.satisfies_equation(sub) {
        return Err(Error::EquationFails);
    }
    if !sub.language_n(g.center.len())?.contains(&g.center) {
        return Err(Error::CenterNotInLanguage(sub.render(&g.center)));
    }
    Ok(g)
}

/// `(v, a·w′, …) ↦ (v, u·a, w′·τ(a))`.
pub fn extend_right(sub: &Substitution, g: &Generator) -> Generator {
    let a = g.right[0];
    let mut center = g.center.clone();
    center.push(a);
    let right = Word::concat(&[&g.right[1..], sub.image(a)]);
    Generator::new(g.left.clone(), center, right)
}

/// `(v′·a, u, w) ↦ (τ(a)·v′, a·u, w)`.
pub fn extend_left(sub: &Substitution, g: &Generator) -> Generator {
    let a = g.left[g.left.len() - 1];
    let left = Word::concat(&[sub.image(a), &g.left[..g.left.len() - 1]]);
    let center = Word::concat(&[&[a], &g.center]);
    Generator::new(left, center, g.right.clone())
}

/// One-letter generators are basic; longer ones are basic exactly when the
/// first letter's image is longer than the left wing and the last letter's
/// image is longer than the right wing.
pub fn is_basic(sub: &Substitution, g: &Generator) -> bool {
    if g.center.len() < 2 {
        return true;
    }
    let first = g.center[0];
    let last = g.center[g.center.len() - 1];
    sub.image(first).len() > g.left.len() && sub.image(last).len() > g.right.len()
}

/// Undoes extensions until the generator is basic.
pub fn reduce_to_basic(sub: &Substitution, g: &Generator) -> Generator {
    let mut g = g.clone();
    while g.center.len() >= 2 {
        let first = g.center[0];
        let last = g.center[g.center.len() - 1];
        let first_image = sub.image(first);
        let last_image = sub.image(last);
        if first_image.len() <= g.left.len() {
            debug_assert!(g.left.starts_with(first_image));
            let left = Word::concat(&[&g.left[first_image.len()..], &[first]]);
            g = Generator::new(left, Word::from(&g.center[1..]), g.right);
        } else if last_image.len() <= g.right.len() {
            debug_assert!(g.right.ends_with(last_image));
            let keep = g.right.len() - last_image.len();
            let right = Word::concat(&[&[last], &g.right[..keep]]);
            let center = Word::from(&g.center[..g.center.len() - 1]);
            g = Generator::new(g.left, center, right);
        } else {
            break;
        }
    }
    g
}

fn ensure_generator(sub: &Substitution, g: &Generator) -> Result<()> {
    if g.satisfies_equation(sub) {
        Ok(())
    } else {
        Err(Error::SubstitutionMismatch)
    }
}

/// G relation: equal basic representatives.
pub fn g_related(sub: &Substitution, g1: &Generator, g2: &Generator) -> Result<bool> {
    ensure_generator(sub, g1)?;
    ensure_generator(sub, g2)?;
    Ok(reduce_to_basic(sub, g1) == reduce_to_basic(sub, g2))
}

fn two_letter_language(sub: &Substitution) -> Result<LanguageSlice> {
    if ll_graph(sub).is_subfixed() && rl_graph(sub).is_subfixed() {
        l2_fast(sub)
    } else {
        sub.language_n(2)
    }
}

/// All basic generators of a primitive substitution, one-letter ones first,
/// then sorted by center.
///
/// One-letter generators come from each interior occurrence of `a` in
/// `τ(a)`; two-letter ones pair a letter whose image ends with itself with a
/// letter whose image starts with itself, when the pair is in the language.
pub fn enumerate_basic(sub: &Substitution) -> Result<Vec<Generator>> {
    if !sub.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let mut out = Vec::new();
    for a in sub.letters() {
        let image = sub.image(a);
        for i in 1..image.len().saturating_sub(1) {
            if image[i] == a {
                out.push(Generator::new(
                    Word::from(&image[..i]),
                    Word::from(vec![a]),
                    Word::from(&image[i + 1..]),
                ));
            }
        }
    }
    let l2 = two_letter_language(sub)?;
    let ends_with_self: Vec<Letter> = sub
        .letters()
        .filter(|&a| {
            let img = sub.image(a);
            img.len() >= 2 && img[img.len() - 1] == a
        })
        .collect();
    let starts_with_self: Vec<Letter> = sub
        .letters()
        .filter(|&b| {
            let img = sub.image(b);
            img.len() >= 2 && img[0] == b
        })
        .collect();
    for &a in &ends_with_self {
        for &b in &starts_with_self {
            if l2.contains(&[a, b]) {
                let ia = sub.image(a);
                let ib = sub.image(b);
                out.push(Generator::new(
                    Word::from(&ia[..ia.len() - 1]),
                    Word::from(vec![a, b]),
                    Word::from(&ib[1..]),
                ));
            }
        }
    }
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    Ok(out)
}

/// The slice `[lo, hi)` of a completion `…τ²(v)τ(v)v u.w τ(w)τ²(w)…`,
/// indexed so that 0 holds the first letter of the right wing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompletionWindow {
    pub lo: i64,
    pub hi: i64,
    pub letters: Word,
}

impl CompletionWindow {
    pub fn at(&self, i: i64) -> Option<Letter> {
        if i < self.lo || i >= self.hi {
            return None;
        }
        Some(self.letters[(i - self.lo) as usize])
    }

    /// Sub-window `[lo, hi)`, if contained in this one.
    pub fn slice(&self, lo: i64, hi: i64) -> Option<&[Letter]> {
        if lo < self.lo || hi > self.hi || lo > hi {
            return None;
        }
        Some(&self.letters[(lo - self.lo) as usize..(hi - self.lo) as usize])
    }
}

pub fn completion_window(sub: &Substitution, g: &Generator, lo: i64, hi: i64) -> Result<CompletionWindow> {
    if lo >= hi {
        return Err(Error::EmptyWindow { lo, hi });
    }
    ensure_generator(sub, g)?;

    // Right of the anchor: w τ(w) τ²(w) … ; every block is nonempty so this
    // terminates.
    let need_right = hi.max(0) as usize;
    let mut right: Vec<Letter> = g.right.to_vec();
    let mut block = g.right.clone();
    while right.len() < need_right {
        block = sub.expand(&block);
        right.extend_from_slice(&block);
    }

    // Left of the anchor, stored reversed: u, v, τ(v), τ²(v), …
    let need_left = (-lo).max(0) as usize;
    let mut left_rev: Vec<Letter> = g.center.iter().rev().copied().collect();
    left_rev.extend(g.left.iter().rev());
    let mut block = g.left.clone();
    while left_rev.len() < need_left {
        block = sub.expand(&block);
        left_rev.extend(block.iter().rev());
    }

    let letters = (lo..hi)
        .map(|i| {
            if i >= 0 {
                right[i as usize]
            } else {
                left_rev[(-i - 1) as usize]
            }
        })
        .collect();
    Ok(CompletionWindow { lo, hi, letters })
}

/// Witness for a positive tail-equivalence verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TailEvidence {
    /// Both generators reduce to the same basic generator.
    SameOrbit(Generator),
    /// G-related generators with identical wings on the relevant side.
    SharedWing(Generator, Generator),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TailVerdict {
    Equivalent(TailEvidence),
    NotEquivalent,
    /// The extension search hit its bound without a decision.
    Indeterminate,
}

/// Right tail equivalence of the completions of two generators.
///
/// For postfix-free substitutions this is decided exactly by comparing the
/// right wings of the basic representatives. Otherwise chains of right
/// extensions of length `≤ max_ext` are searched for a shared right wing,
/// and `Indeterminate` is returned when none is found.
pub fn right_tail_equivalent(
    sub: &Substitution,
    g1: &Generator,
    g2: &Generator,
    max_ext: usize,
) -> Result<TailVerdict> {
    if !sub.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    ensure_generator(sub, g1)?;
    ensure_generator(sub, g2)?;
    let b1 = reduce_to_basic(sub, g1);
    let b2 = reduce_to_basic(sub, g2);
    if b1 == b2 {
        return Ok(TailVerdict::Equivalent(TailEvidence::SameOrbit(b1)));
    }
    if sub.is_postfix_free() {
        return Ok(if b1.right == b2.right {
            TailVerdict::Equivalent(TailEvidence::SharedWing(b1, b2))
        } else {
            TailVerdict::NotEquivalent
        });
    }
    let chain = |b: Generator| {
        let mut chain = vec![b];
        for _ in 0..max_ext {
            let next = extend_right(sub, chain.last().unwrap());
            chain.push(next);
        }
        chain
    };
    let c1 = chain(b1);
    let c2 = chain(b2);
    let wings: BTreeSet<(&Word, usize)> = c2.iter().enumerate().map(|(j, g)| (&g.right, j)).collect();
    for x in &c1 {
        if let Some(&(_, j)) = wings.range((&x.right, 0)..=(&x.right, usize::MAX)).next() {
            return Ok(TailVerdict::Equivalent(TailEvidence::SharedWing(
                x.clone(),
                c2[j].clone(),
            )));
        }
    }
    Ok(TailVerdict::Indeterminate)
}

/// Mirror image of [`right_tail_equivalent`]; decided exactly for prefix-free
/// substitutions.
pub fn left_tail_equivalent(
    sub: &Substitution,
    g1: &Generator,
    g2: &Generator,
    max_ext: usize,
) -> Result<TailVerdict> {
    let mirror = sub.mirror();
    let verdict = right_tail_equivalent(&mirror, &g1.mirrored(), &g2.mirrored(), max_ext)?;
    Ok(match verdict {
        TailVerdict::Equivalent(TailEvidence::SameOrbit(b)) => {
            TailVerdict::Equivalent(TailEvidence::SameOrbit(b.mirrored()))
        }
        TailVerdict::Equivalent(TailEvidence::SharedWing(x, y)) => {
            TailVerdict::Equivalent(TailEvidence::SharedWing(x.mirrored(), y.mirrored()))
        }
        other => other,
    })
}
