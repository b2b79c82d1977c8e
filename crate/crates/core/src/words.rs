//! Alphabets, words and substitutions.
//!
//! A [`Substitution`] maps every letter of its [`Alphabet`] to a nonempty
//! [`Word`] and acts on words by concatenation. The factor language of a
//! substitution is only ever materialized one length at a time, as a
//! [`LanguageSlice`].

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter, stored as its zero-based position in the owning alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter(u32);

impl Letter {
    pub fn from_index(index: usize) -> Self {
        Letter(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Positive id, `index + 1`.
    pub fn id(self) -> u32 {
        self.0 + 1
    }
}

/// Canonical token for the letter with the given positive id: "1".."9",
/// then "0" for the tenth letter, then plain decimal.
pub fn canonical_token(id: u32) -> String {
    match id {
        10 => "0".to_string(),
        _ => id.to_string(),
    }
}

/// An ordered set of letter tokens.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    tokens: Vec<String>,
    lookup: HashMap<String, Letter>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.tokens == other.tokens
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The alphabet with ids `1..=size` and canonical tokens.
    pub fn canonical(size: usize) -> Self {
        let mut alphabet = Self::new();
        for _ in 0..size {
            alphabet.push_canonical();
        }
        alphabet
    }

    pub fn from_tokens<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Self::new();
        for token in tokens {
            alphabet.push(token)?;
        }
        Ok(alphabet)
    }

    pub fn push(&mut self, token: impl Into<String>) -> Result<Letter> {
        let token = token.into();
        if token.is_empty() || token.chars().any(char::is_whitespace) {
            return Err(Error::Malformed {
                line: 0,
                message: format!("invalid letter token `{token}`"),
            });
        }
        if self.lookup.contains_key(&token) {
            return Err(Error::DuplicateToken(token));
        }
        let letter = Letter::from_index(self.tokens.len());
        self.lookup.insert(token.clone(), letter);
        self.tokens.push(token);
        Ok(letter)
    }

    /// Appends the next letter using its canonical token.
    ///
    /// Panics if that token is already taken by a non-canonical letter.
    pub fn push_canonical(&mut self) -> Letter {
        let id = self.tokens.len() as u32 + 1;
        self.push(canonical_token(id))
            .expect("canonical token collides with an existing letter")
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.tokens.len()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator {
        (0..self.tokens.len()).map(Letter::from_index)
    }

    pub fn token(&self, letter: Letter) -> &str {
        &self.tokens[letter.index()]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn letter(&self, token: &str) -> Option<Letter> {
        self.lookup.get(token).copied()
    }

    /// True when every token is a single character, so words can be
    /// written without separators.
    pub fn is_compact(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    pub fn render(&self, word: &[Letter]) -> String {
        let sep = if self.is_compact() { "" } else { " " };
        word.iter()
            .map(|&l| self.token(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses a word: character by character for compact alphabets (spaces
    /// ignored), whitespace-separated tokens otherwise.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if self.is_compact() {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| self.lookup_token(&c.to_string()))
                .collect()
        } else {
            text.split_whitespace().map(|t| self.lookup_token(t)).collect()
        }
    }

    fn lookup_token(&self, token: &str) -> Result<Letter> {
        self.letter(token).ok_or_else(|| Error::UnknownLetter {
            line: 0,
            token: token.to_string(),
        })
    }
}

/// A finite word, possibly empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &[Letter]) {
        self.0.extend_from_slice(other);
    }

    pub fn concat(parts: &[&[Letter]]) -> Word {
        Word(parts.concat())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// All distinct factors with length in `1..=max_len`.
    pub fn factors_up_to(&self, max_len: usize) -> impl Iterator<Item = &[Letter]> {
        let n = self.0.len();
        (0..n).flat_map(move |i| (1..=max_len.min(n - i)).map(move |m| &self.0[i..i + m]))
    }

    pub fn is_factor_of(&self, other: &[Letter]) -> bool {
        self.0.is_empty() || other.windows(self.0.len()).any(|w| w == self.0.as_slice())
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl std::borrow::Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub fn common_prefix_len(a: &[Letter], b: &[Letter]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

pub fn common_suffix_len(a: &[Letter], b: &[Letter]) -> usize {
    a.iter()
        .rev()
        .zip(b.iter().rev())
        .take_while(|(x, y)| x == y)
        .count()
}

/// The set of length-`n` words of a substitution's language.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LanguageSlice {
    pub n: usize,
    pub words: BTreeSet<Word>,
}

impl LanguageSlice {
    pub fn contains(&self, word: &[Letter]) -> bool {
        word.len() == self.n && self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NotPrimitiveReason {
    /// No power of the incidence matrix up to the Wielandt bound is positive.
    NoPositivePower { bound: usize },
    /// One-letter alphabet whose letter maps to itself.
    NoGrowth,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Primitivity {
    Primitive { exponent: usize },
    NotPrimitive(NotPrimitiveReason),
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        matches!(self, Primitivity::Primitive { .. })
    }
}

/// Wielandt's bound `(n - 1)^2 + 1` on the primitivity exponent.
pub fn wielandt_bound(size: usize) -> usize {
    let m = size.saturating_sub(1);
    m * m + 1
}

/// A substitution: a total map from letters to nonempty words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Substitution {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::Malformed {
                line: 0,
                message: format!(
                    "{} images for an alphabet of {} letters",
                    images.len(),
                    alphabet.len()
                ),
            });
        }
        for (i, image) in images.iter().enumerate() {
            if image.is_empty() {
                return Err(Error::EmptyImage {
                    line: 0,
                    token: alphabet.token(Letter::from_index(i)).to_string(),
                });
            }
            if let Some(bad) = image.iter().find(|l| !alphabet.contains(**l)) {
                return Err(Error::LetterOutsideAlphabet(bad.id()));
            }
        }
        Ok(Substitution { alphabet, images })
    }

    /// Builds a substitution over canonical letters from compact rules such
    /// as `[("1", "121"), ("2", "2112")]`. Handy for fixtures.
    pub fn from_rules(rules: &[(&str, &str)]) -> Result<Self> {
        let text: String = rules
            .iter()
            .map(|(l, r)| format!("{l} -> {r}\n"))
            .collect();
        text.parse()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator {
        self.alphabet.letters()
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter.index()]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn render(&self, word: &[Letter]) -> String {
        self.alphabet.render(word)
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }

    /// Image of a word under the substitution.
    pub fn apply(&self, word: &[Letter]) -> Result<Word> {
        if let Some(bad) = word.iter().find(|l| !self.alphabet.contains(**l)) {
            return Err(Error::LetterOutsideAlphabet(bad.id()));
        }
        Ok(self.expand(word))
    }

    /// Same as [`apply`](Self::apply) for words already known to be over
    /// the alphabet.
    pub(crate) fn expand(&self, word: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(word.len() * 2);
        for &l in word {
            out.extend_from_slice(&self.images[l.index()]);
        }
        Word(out)
    }

    /// Composition `self ∘ other`: `a ↦ self(other(a))`. Both must share an
    /// alphabet.
    pub fn compose(&self, other: &Substitution) -> Result<Substitution> {
        if self.alphabet != other.alphabet {
            return Err(Error::Precondition(
                "composition requires identical alphabets".into(),
            ));
        }
        let images = other.images.iter().map(|w| self.expand(w)).collect();
        Ok(Substitution {
            alphabet: self.alphabet.clone(),
            images,
        })
    }

    /// The `k`-th iterate `a ↦ τ^k(a)`.
    pub fn power(&self, k: usize) -> Result<Substitution> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut images = self.images.clone();
        for _ in 1..k {
            images = images.iter().map(|w| self.expand(w)).collect();
        }
        Ok(Substitution {
            alphabet: self.alphabet.clone(),
            images,
        })
    }

    /// Total image length of `τ^k` without building it, saturating.
    pub fn power_size(&self, k: usize) -> usize {
        // lengths[a] = |τ^j(a)|, advanced via |τ^{j+1}(a)| = Σ_{b in τ(a)} |τ^j(b)|
        let mut lengths = vec![1usize; self.len()];
        for _ in 0..k {
            lengths = self
                .images
                .iter()
                .map(|w| {
                    w.iter()
                        .fold(0usize, |acc, l| acc.saturating_add(lengths[l.index()]))
                })
                .collect();
        }
        lengths.iter().fold(0usize, |a, &b| a.saturating_add(b))
    }

    /// The substitution with every image reversed. Left/right statements
    /// about `self` are right/left statements about the mirror.
    pub fn mirror(&self) -> Substitution {
        Substitution {
            alphabet: self.alphabet.clone(),
            images: self.images.iter().map(Word::reversed).collect(),
        }
    }

    /// Length-`n` factors of the language, by closure under `τ` of the
    /// length-`≤ n` factors of the images.
    pub fn language_n(&self, n: usize) -> Result<LanguageSlice> {
        if n == 0 {
            return Err(Error::ZeroBound);
        }
        let mut seen: HashSet<Word> = HashSet::new();
        let mut pending: Vec<Word> = Vec::new();
        for image in &self.images {
            for f in image.factors_up_to(n) {
                let f = Word::from(f);
                if seen.insert(f.clone()) {
                    pending.push(f);
                }
            }
        }
        while let Some(w) = pending.pop() {
            let image = self.expand(&w);
            for f in image.factors_up_to(n) {
                if !seen.contains(f) {
                    let f = Word::from(f);
                    seen.insert(f.clone());
                    pending.push(f);
                }
            }
        }
        let words = seen.into_iter().filter(|w| w.len() == n).collect();
        Ok(LanguageSlice { n, words })
    }

    /// Letter-incidence matrix: `m[a][b]` when `b` occurs in `τ(a)`.
    pub fn incidence(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        self.images
            .iter()
            .map(|w| {
                let mut row = vec![false; n];
                for l in w.iter() {
                    row[l.index()] = true;
                }
                row
            })
            .collect()
    }

    pub fn primitivity(&self) -> Primitivity {
        let n = self.len();
        if n == 1 {
            return if self.images[0].len() >= 2 {
                Primitivity::Primitive { exponent: 1 }
            } else {
                Primitivity::NotPrimitive(NotPrimitiveReason::NoGrowth)
            };
        }
        let bound = wielandt_bound(n);
        let m = self.incidence();
        let mut power = m.clone();
        for k in 1..=bound {
            if power.iter().all(|row| row.iter().all(|&x| x)) {
                return Primitivity::Primitive { exponent: k };
            }
            power = bool_product(&power, &m);
        }
        Primitivity::NotPrimitive(NotPrimitiveReason::NoPositivePower { bound })
    }

    pub fn is_primitive(&self) -> bool {
        self.primitivity().is_primitive()
    }

    /// First pair `(a, b)`, `a ≠ b`, with `τ(a)` a prefix of `τ(b)`.
    pub fn prefix_conflict(&self) -> Option<(Letter, Letter)> {
        self.affix_conflict(|a, b| b.starts_with(a))
    }

    /// First pair `(a, b)`, `a ≠ b`, with `τ(a)` a suffix of `τ(b)`.
    pub fn postfix_conflict(&self) -> Option<(Letter, Letter)> {
        self.affix_conflict(|a, b| b.ends_with(a))
    }

    pub fn is_prefix_free(&self) -> bool {
        self.prefix_conflict().is_none()
    }

    pub fn is_postfix_free(&self) -> bool {
        self.postfix_conflict().is_none()
    }

    fn affix_conflict(&self, covers: impl Fn(&[Letter], &[Letter]) -> bool) -> Option<(Letter, Letter)> {
        for a in self.letters() {
            for b in self.letters() {
                if a != b && covers(self.image(a), self.image(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub(crate) fn conflict_error(&self, prefix: bool) -> Option<Error> {
        let tok = |l: Letter| self.alphabet.token(l).to_string();
        if prefix {
            self.prefix_conflict()
                .map(|(a, b)| Error::NotPrefixFree(tok(a), tok(b)))
        } else {
            self.postfix_conflict()
                .map(|(a, b)| Error::NotPostfixFree(tok(a), tok(b)))
        }
    }

    /// Renders in the substitution file format. Compact when every token is
    /// a single character.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let compact = self.alphabet.is_compact();
        if !compact {
            out.push_str("format: tokens\n");
        }
        for a in self.letters() {
            out.push_str(self.alphabet.token(a));
            out.push_str(" -> ");
            out.push_str(&self.render(self.image(a)));
            out.push('\n');
        }
        out
    }
}

pub(crate) fn bool_product(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    let mut out = vec![vec![false; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] {
                for j in 0..n {
                    out[i][j] |= b[k][j];
                }
            }
        }
    }
    out
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum RhsFormat {
    Compact,
    Tokens,
}

/// Parses the substitution file format.
///
/// ```text
/// # optional header, default compact
/// format: compact
/// 0 -> 10
/// 1 -> 0
/// ```
pub fn parse_substitution(text: &str) -> Result<Substitution> {
    let mut format = RhsFormat::Compact;
    let mut rules: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("format:") {
            if !rules.is_empty() {
                return Err(Error::Malformed {
                    line: line_no,
                    message: "format header must precede all rules".into(),
                });
            }
            format = match rest.trim() {
                "compact" => RhsFormat::Compact,
                "tokens" => RhsFormat::Tokens,
                other => {
                    return Err(Error::Malformed {
                        line: line_no,
                        message: format!("unknown format `{other}`"),
                    })
                }
            };
            continue;
        }
        let Some((lhs, rhs)) = line.split_once("->") else {
            return Err(Error::Malformed {
                line: line_no,
                message: "expected `LETTER -> IMAGE`".into(),
            });
        };
        let lhs = lhs.trim();
        if lhs.is_empty() || lhs.chars().any(char::is_whitespace) {
            return Err(Error::Malformed {
                line: line_no,
                message: format!("invalid left-hand side `{lhs}`"),
            });
        }
        if format == RhsFormat::Compact && lhs.chars().count() != 1 {
            return Err(Error::Malformed {
                line: line_no,
                message: format!("compact letters are single characters, got `{lhs}`"),
            });
        }
        rules.push((line_no, lhs.to_string(), rhs.trim().to_string()));
    }

    let mut alphabet = Alphabet::new();
    for (line, lhs, _) in &rules {
        if alphabet.letter(lhs).is_some() {
            return Err(Error::DuplicateRule {
                line: *line,
                token: lhs.clone(),
            });
        }
        alphabet.push(lhs.as_str()).map_err(|_| Error::Malformed {
            line: *line,
            message: format!("invalid letter `{lhs}`"),
        })?;
    }
    if alphabet.is_empty() {
        return Err(Error::Malformed {
            line: 0,
            message: "no rules".into(),
        });
    }

    let mut images = Vec::with_capacity(rules.len());
    for (line, lhs, rhs) in &rules {
        let tokens: Vec<String> = match format {
            RhsFormat::Compact => rhs
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(String::from)
                .collect(),
            RhsFormat::Tokens => rhs.split_whitespace().map(String::from).collect(),
        };
        if tokens.is_empty() {
            return Err(Error::EmptyImage {
                line: *line,
                token: lhs.clone(),
            });
        }
        let image = tokens
            .iter()
            .map(|t| {
                alphabet.letter(t).ok_or_else(|| Error::UnknownLetter {
                    line: *line,
                    token: t.clone(),
                })
            })
            .collect::<Result<Word>>()?;
        images.push(image);
    }
    Substitution::new(alphabet, images)
}

impl FromStr for Substitution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_substitution(s)
    }
}
