//! Leftmost/rightmost letter graphs, segregating numbers and the
//! segregating graphs built from them.
//!
//! Every graph here is functional (exactly one edge leaves each vertex) and
//! is represented by an [`EndpointMap`].

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{common_prefix_len, common_suffix_len, LanguageSlice, Letter, Substitution, Word};
use crate::Side;

/// Outcome of a bounded search.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bounded<T> {
    Found(T),
    NotFoundUpTo(usize),
}

impl<T> Bounded<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Bounded::Found(t) => Some(t),
            Bounded::NotFoundUpTo(_) => None,
        }
    }
}

/// A total self-map on a finite, ordered vertex set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EndpointMap<V> {
    vertices: Vec<V>,
    next: Vec<usize>,
}

impl<V: Clone + Ord> EndpointMap<V> {
    /// Builds the map `v ↦ f(v)`. Fails if some image is not a vertex.
    pub fn from_fn(vertices: Vec<V>, mut f: impl FnMut(&V) -> Result<V>) -> Result<Self> {
        let index: BTreeMap<&V, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut next = Vec::with_capacity(vertices.len());
        for v in &vertices {
            let target = f(v)?;
            let j = *index.get(&target).ok_or_else(|| {
                Error::Precondition("endpoint map image is not a vertex".into())
            })?;
            next.push(j);
        }
        Ok(EndpointMap { vertices, next })
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn next_index(&self, i: usize) -> usize {
        self.next[i]
    }

    pub fn next_of(&self, v: &V) -> Option<&V> {
        let i = self.vertices.iter().position(|x| x == v)?;
        Some(&self.vertices[self.next[i]])
    }

    pub fn edges(&self) -> impl Iterator<Item = (&V, &V)> {
        self.vertices
            .iter()
            .zip(&self.next)
            .map(move |(v, &j)| (v, &self.vertices[j]))
    }

    /// Every vertex loops to itself or points at a vertex that does, i.e.
    /// the successor function is idempotent.
    pub fn is_subfixed(&self) -> bool {
        (0..self.next.len()).all(|i| self.next[self.next[i]] == self.next[i])
    }

    /// The `k`-fold iterate of the successor function.
    pub fn iterate(&self, k: usize) -> Self {
        let next = (0..self.next.len())
            .map(|mut i| {
                for _ in 0..k {
                    i = self.next[i];
                }
                i
            })
            .collect();
        EndpointMap {
            vertices: self.vertices.clone(),
            next,
        }
    }
}

/// Vertex of a segregating graph: an ordered pair of equal-length words.
pub type WordPair = (Word, Word);

pub fn ll_graph(sub: &Substitution) -> EndpointMap<Letter> {
    endpoint_letter_graph(sub, Side::Left)
}

pub fn rl_graph(sub: &Substitution) -> EndpointMap<Letter> {
    endpoint_letter_graph(sub, Side::Right)
}

fn endpoint_letter_graph(sub: &Substitution, side: Side) -> EndpointMap<Letter> {
    EndpointMap::from_fn(sub.letters().collect(), |&a| {
        let image = sub.image(a);
        Ok(match side {
            Side::Left => image[0],
            Side::Right => image[image.len() - 1],
        })
    })
    .expect("images are nonempty words over the alphabet")
}

/// The advisory segregating bound `s·(P − |A| + Q − 1)`. It is only proven
/// for regular substitutions, which are not characterized here, so it is
/// reported but never relied upon.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct AdvisoryBound {
    pub s: usize,
    pub total_image_length: usize,
    pub max_image_length: usize,
    pub value: usize,
    pub requires_regularity: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SegregationReport {
    pub side: Side,
    pub least: Bounded<usize>,
    pub advisory: Option<AdvisoryBound>,
}

/// Least segregating number on `side`, searched up to `bound`.
pub fn least_segregating(sub: &Substitution, side: Side, bound: usize) -> Result<SegregationReport> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    let mut least = Bounded::NotFoundUpTo(bound);
    for n in 1..=bound {
        let lang = sub.language_n(n)?;
        if segregates(sub, side, &lang) {
            least = Bounded::Found(n);
            break;
        }
    }
    Ok(SegregationReport {
        side,
        least,
        advisory: advisory_bound(sub, bound)?,
    })
}

fn segregates(sub: &Substitution, side: Side, lang: &LanguageSlice) -> bool {
    let n = lang.n;
    let images: Vec<(&Word, Word)> = lang.iter().map(|u| (u, sub.expand(u))).collect();
    for (u, tu) in &images {
        for (v, tv) in &images {
            if boundary(side, u) == boundary(side, v) {
                continue;
            }
            let shared = match side {
                Side::Left => common_prefix_len(tu, tv),
                Side::Right => common_suffix_len(tu, tv),
            };
            if shared + n > tu.len().min(tv.len()) {
                return false;
            }
        }
    }
    true
}

fn boundary(side: Side, w: &[Letter]) -> Letter {
    match side {
        Side::Left => w[0],
        Side::Right => w[w.len() - 1],
    }
}

fn advisory_bound(sub: &Substitution, bound: usize) -> Result<Option<AdvisoryBound>> {
    let growing: BTreeSet<Letter> = sub.letters().filter(|&a| sub.image(a).len() >= 2).collect();
    if growing.is_empty() {
        return Ok(None);
    }
    for s in 1..=bound {
        let lang = sub.language_n(s)?;
        if lang.iter().all(|w| w.iter().any(|l| growing.contains(l))) {
            let total: usize = sub.images().iter().map(|w| w.len()).sum();
            let max = sub.images().iter().map(|w| w.len()).max().unwrap_or(0);
            // P ≥ |A| always, since every image is nonempty
            let value = s * (total - sub.len() + max - 1);
            return Ok(Some(AdvisoryBound {
                s,
                total_image_length: total,
                max_image_length: max,
                value,
                requires_regularity: true,
            }));
        }
    }
    Ok(None)
}

/// The left segregating graph at the report's least left segregating number.
pub fn ls_graph(sub: &Substitution, report: &SegregationReport) -> Result<EndpointMap<WordPair>> {
    segregating_graph(sub, Side::Left, report)
}

/// The right segregating graph at the report's least right segregating number.
pub fn rs_graph(sub: &Substitution, report: &SegregationReport) -> Result<EndpointMap<WordPair>> {
    segregating_graph(sub, Side::Right, report)
}

fn segregating_graph(
    sub: &Substitution,
    side: Side,
    report: &SegregationReport,
) -> Result<EndpointMap<WordPair>> {
    if report.side != side {
        return Err(Error::Precondition(format!(
            "expected a {side} segregation report"
        )));
    }
    let Bounded::Found(n) = report.least else {
        return Err(Error::NotSegregating {
            side: side.name(),
            bound: match report.least {
                Bounded::NotFoundUpTo(b) => b,
                Bounded::Found(_) => unreachable!(),
            },
        });
    };
    let lang = sub.language_n(n)?;
    let mut vertices = Vec::new();
    for u in lang.iter() {
        for v in lang.iter() {
            if boundary(side, u) != boundary(side, v) {
                vertices.push((u.clone(), v.clone()));
            }
        }
    }
    EndpointMap::from_fn(vertices, |(u, v)| {
        let tu = sub.expand(u);
        let tv = sub.expand(v);
        let (ru, rv): (&[Letter], &[Letter]) = match side {
            Side::Left => {
                let k = common_prefix_len(&tu, &tv);
                (&tu[k..], &tv[k..])
            }
            Side::Right => {
                let k = common_suffix_len(&tu, &tv);
                (&tu[..tu.len() - k], &tv[..tv.len() - k])
            }
        };
        if ru.len() < n || rv.len() < n {
            return Err(Error::SegregationViolated(sub.render(u), sub.render(v)));
        }
        Ok(match side {
            Side::Left => (Word::from(&ru[..n]), Word::from(&rv[..n])),
            Side::Right => (
                Word::from(&ru[ru.len() - n..]),
                Word::from(&rv[rv.len() - n..]),
            ),
        })
    })
}

/// All four letter graphs of one substitution, with the segregation reports
/// the segregating graphs were built from.
#[derive(Clone, Debug)]
pub struct LetterGraphs {
    pub ll: EndpointMap<Letter>,
    pub rl: EndpointMap<Letter>,
    pub left: SegregationReport,
    pub right: SegregationReport,
    pub ls: Option<EndpointMap<WordPair>>,
    pub rs: Option<EndpointMap<WordPair>>,
}

impl LetterGraphs {
    pub fn compute(sub: &Substitution, seg_bound: usize) -> Result<Self> {
        let left = least_segregating(sub, Side::Left, seg_bound)?;
        let right = least_segregating(sub, Side::Right, seg_bound)?;
        let ls = match left.least {
            Bounded::Found(_) => Some(ls_graph(sub, &left)?),
            Bounded::NotFoundUpTo(_) => None,
        };
        let rs = match right.least {
            Bounded::Found(_) => Some(rs_graph(sub, &right)?),
            Bounded::NotFoundUpTo(_) => None,
        };
        Ok(LetterGraphs {
            ll: ll_graph(sub),
            rl: rl_graph(sub),
            left,
            right,
            ls,
            rs,
        })
    }

    /// All four graphs exist and are subfixed.
    pub fn all_subfixed(&self) -> bool {
        self.ll.is_subfixed()
            && self.rl.is_subfixed()
            && self.ls.as_ref().is_some_and(EndpointMap::is_subfixed)
            && self.rs.as_ref().is_some_and(EndpointMap::is_subfixed)
    }
}

/// Cap on the total image length of a power examined by
/// [`subfixing_power`].
pub const POWER_SIZE_LIMIT: usize = 4_000_000;

/// Least `p ≤ max_power` such that all four letter graphs of `τ^p` are
/// subfixed, each power using its own least segregating numbers.
pub fn subfixing_power(sub: &Substitution, max_power: usize, seg_bound: usize) -> Result<usize> {
    if max_power == 0 || seg_bound == 0 {
        return Err(Error::ZeroBound);
    }
    if !sub.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    for p in 1..=max_power {
        if sub.power_size(p) > POWER_SIZE_LIMIT {
            return Err(Error::PowerTooLarge {
                power: p,
                limit: POWER_SIZE_LIMIT,
            });
        }
        let q = sub.power(p)?;
        let graphs = LetterGraphs::compute(&q, seg_bound)?;
        for report in [&graphs.left, &graphs.right] {
            if let Bounded::NotFoundUpTo(bound) = report.least {
                return Err(Error::NotSegregating {
                    side: report.side.name(),
                    bound,
                });
            }
        }
        if graphs.all_subfixed() {
            return Ok(p);
        }
    }
    Err(Error::NoSubfixingPower(max_power))
}

/// Two-letter slice of the language from one boundary pass over the
/// two-letter factors of the images. Requires subfixed ll and rl graphs.
pub fn l2_fast(sub: &Substitution) -> Result<LanguageSlice> {
    let ll = ll_graph(sub);
    let rl = rl_graph(sub);
    if !ll.is_subfixed() || !rl.is_subfixed() {
        return Err(Error::Precondition("ll and rl graphs must be subfixed".into()));
    }
    let inner: BTreeSet<Word> = sub
        .images()
        .iter()
        .flat_map(|img| img.windows(2).map(Word::from))
        .collect();
    let mut words = inner.clone();
    for ab in &inner {
        let ta = sub.image(ab[0]);
        let tb = sub.image(ab[1]);
        words.insert(Word::from(vec![ta[ta.len() - 1], tb[0]]));
    }
    Ok(LanguageSlice { n: 2, words })
}
