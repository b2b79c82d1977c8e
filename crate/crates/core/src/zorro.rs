//! Realizing undecided bipartite multigraphs as configuration graphs.
//!
//! [`realize`] picks one of three small seed graphs inside the input (Z, W
//! or E), starts from a substitution realizing that seed, then grows it:
//! every remaining vertex gets a fresh letter whose image follows the seed's
//! left or right pattern, every missing adjacency is written into the image
//! of the seed's insertion letter, and every missing parallel edge gets a
//! fresh letter gluing the two endpoint images together.
//!
//! [`verify_roundtrip`] checks the result end to end.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::config_graph::{
    classify, configuration_graph, isomorphic, BipartiteMultigraph, Bounds, ConfigurationGraph,
    Isomorphism, PeriodicityVerdict,
};
use crate::error::{Error, Result};
use crate::letter_graphs::{l2_fast, LetterGraphs};
use crate::words::{canonical_token, Alphabet, Letter, Substitution, Word};
use crate::Side;

/// The seed graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum CaseKind {
    Z,
    W,
    E,
}

/// A pattern word `head · repeated^k · tail`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Pattern {
    pub head: &'static str,
    pub repeated: char,
    pub tail: &'static str,
}

impl Pattern {
    pub fn word(&self, count: usize) -> Vec<u32> {
        let mut s = String::from(self.head);
        s.extend(std::iter::repeat_n(self.repeated, count));
        s.push_str(self.tail);
        digits(&s)
    }
}

/// Frozen data of a seed case.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CaseData {
    pub kind: CaseKind,
    /// Images of letters `1..`, with `|` marking the insertion point.
    pub images: &'static [&'static str],
    pub insertion_letter: u32,
    pub insertion_offset: usize,
    pub left_pattern: Pattern,
    pub right_pattern: Pattern,
    /// Repetition count used for the first new vertex on either side.
    pub base_count: usize,
    /// Letter written after every insertion, if any.
    pub bridge: Option<u32>,
    pub left_roles: &'static [u32],
    pub right_roles: &'static [u32],
    /// Edges the seed substitution already realizes, with multiplicity.
    pub edges: &'static [(u32, u32)],
}

const Z_CASE: CaseData = CaseData {
    kind: CaseKind::Z,
    images: &["22451", "245133", "2224513", "451333", "222245|13333"],
    insertion_letter: 5,
    insertion_offset: 6,
    left_pattern: Pattern { head: "", repeated: '2', tail: "45" },
    right_pattern: Pattern { head: "51", repeated: '3', tail: "" },
    base_count: 5,
    bridge: None,
    left_roles: &[1, 3],
    right_roles: &[2, 4],
    edges: &[(1, 2), (3, 2), (3, 4)],
};

const W_CASE: CaseData = CaseData {
    kind: CaseKind::W,
    images: &[
        "423761",
        "237651",
        "376551",
        "43765551",
        "4223765",
        "4222376",
        "223747|17655",
    ],
    insertion_letter: 7,
    insertion_offset: 6,
    left_pattern: Pattern { head: "4", repeated: '2', tail: "37" },
    right_pattern: Pattern { head: "76", repeated: '5', tail: "1" },
    base_count: 4,
    bridge: Some(7),
    left_roles: &[1, 5, 6],
    right_roles: &[2, 3, 4],
    edges: &[(1, 2), (1, 3), (5, 4), (6, 4)],
};

const E_CASE: CaseData = CaseData {
    kind: CaseKind::E,
    images: &["2534251", "2513451", "2534253", "4513451", "251134|342251"],
    insertion_letter: 5,
    insertion_offset: 6,
    left_pattern: Pattern { head: "25", repeated: '1', tail: "34" },
    right_pattern: Pattern { head: "34", repeated: '2', tail: "51" },
    base_count: 3,
    bridge: None,
    left_roles: &[1],
    right_roles: &[2],
    edges: &[(1, 2), (1, 2)],
};

impl CaseKind {
    pub fn data(self) -> &'static CaseData {
        match self {
            CaseKind::Z => &Z_CASE,
            CaseKind::W => &W_CASE,
            CaseKind::E => &E_CASE,
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CaseKind::Z => "Z",
            CaseKind::W => "W",
            CaseKind::E => "E",
        };
        f.write_str(name)
    }
}

impl CaseData {
    pub fn letter_count(&self) -> u32 {
        self.images.len() as u32
    }

    /// Images as letter-id lists, insertion marker removed.
    pub fn image_ids(&self) -> Vec<Vec<u32>> {
        self.images.iter().map(|s| digits(&s.replace('|', ""))).collect()
    }

    /// The seed substitution.
    pub fn initial_substitution(&self) -> Substitution {
        build(&self.image_ids())
    }

    pub fn pattern(&self, side: Side) -> &Pattern {
        match side {
            Side::Left => &self.left_pattern,
            Side::Right => &self.right_pattern,
        }
    }

    /// The seed as a graph with vertices named after the role letters.
    pub fn graph(&self) -> BipartiteMultigraph {
        let mut g = BipartiteMultigraph::new();
        for &l in self.left_roles {
            g.add_vertex(Side::Left, canonical_token(l)).unwrap();
        }
        for &r in self.right_roles {
            g.add_vertex(Side::Right, canonical_token(r)).unwrap();
        }
        for &(l, r) in self.edges {
            g.add_edge_by_id(&canonical_token(l), &canonical_token(r)).unwrap();
        }
        g
    }
}

fn digits(s: &str) -> Vec<u32> {
    s.chars()
        .map(|c| match c.to_digit(10).expect("case data uses digit letters") {
            0 => 10,
            d => d,
        })
        .collect()
}

fn to_word(ids: &[u32]) -> Word {
    ids.iter().map(|&id| Letter::from_index(id as usize - 1)).collect()
}

fn build(images: &[Vec<u32>]) -> Substitution {
    let alphabet = Alphabet::canonical(images.len());
    Substitution::new(alphabet, images.iter().map(|w| to_word(w)).collect())
        .expect("realized images stay inside the alphabet")
}

fn render_ids(ids: &[u32]) -> String {
    let tokens: Vec<String> = ids.iter().map(|&id| canonical_token(id)).collect();
    if tokens.iter().all(|t| t.chars().count() == 1) {
        tokens.concat()
    } else {
        tokens.join(" ")
    }
}

/// A case letter bound to an input vertex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RoleAssignment {
    pub letter: u32,
    pub side: Side,
    pub vertex: String,
}

/// Where the seed graph sits inside the input.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Embedding {
    pub roles: Vec<RoleAssignment>,
}

impl Embedding {
    pub fn vertex_of(&self, letter: u32) -> Option<&str> {
        self.roles
            .iter()
            .find(|r| r.letter == letter)
            .map(|r| r.vertex.as_str())
    }
}

/// Finds a seed inside an undecided graph, trying Z, then E, then W.
pub fn detect_case(g: &BipartiteMultigraph) -> Result<(CaseKind, Embedding)> {
    if let Some(v) = g.undecided_violation() {
        return Err(Error::NotUndecided(v));
    }
    let role = |letter: u32, v: usize| RoleAssignment {
        letter,
        side: g.vertex(v).side,
        vertex: g.vertex(v).id.clone(),
    };

    for r2 in g.side(Side::Right) {
        let lefts = g.neighbors(r2);
        if lefts.len() < 2 {
            continue;
        }
        let found = lefts.iter().find_map(|&l3| {
            let r4 = g.neighbors(l3).into_iter().find(|&r| r != r2)?;
            Some((l3, r4))
        });
        if let Some((l3, r4)) = found {
            let l1 = *lefts.iter().find(|&&l| l != l3).unwrap();
            let roles = vec![role(1, l1), role(2, r2), role(3, l3), role(4, r4)];
            return Ok((CaseKind::Z, Embedding { roles }));
        }
    }

    if let Some(&(l, r)) = g.edges().iter().find(|&&(l, r)| g.multiplicity(l, r) >= 2) {
        let roles = vec![role(1, l), role(2, r)];
        return Ok((CaseKind::E, Embedding { roles }));
    }

    let hub_left = g.side(Side::Left).into_iter().find(|&l| g.neighbors(l).len() >= 2);
    let hub_right = g.side(Side::Right).into_iter().find(|&r| g.neighbors(r).len() >= 2);
    if let (Some(l1), Some(r4)) = (hub_left, hub_right) {
        let rights = g.neighbors(l1);
        let lefts = g.neighbors(r4);
        let roles = vec![
            role(1, l1),
            role(2, rights[0]),
            role(3, rights[1]),
            role(4, r4),
            role(5, lefts[0]),
            role(6, lefts[1]),
        ];
        return Ok((CaseKind::W, Embedding { roles }));
    }
    Err(Error::Precondition("no Z, E or W subgraph found".into()))
}

/// A leftover vertex and the letter created for it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VertexLetter {
    pub vertex: String,
    pub side: Side,
    pub letter: u32,
    pub count: usize,
}

/// An adjacency written at the insertion point.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Connection {
    pub left: u32,
    pub right: u32,
    pub inserted: Vec<u32>,
}

/// A fresh letter adding one more parallel edge.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ParallelLetter {
    pub left: u32,
    pub right: u32,
    pub letter: u32,
    pub image: Vec<u32>,
    pub inserted: Vec<u32>,
}

/// Everything [`realize`] decided, in order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ZorroTrace {
    pub case: CaseKind,
    pub embedding: Embedding,
    pub new_vertices: Vec<VertexLetter>,
    pub connections: Vec<Connection>,
    pub parallels: Vec<ParallelLetter>,
}

impl ZorroTrace {
    /// Rebuilds the output substitution from the recorded actions.
    pub fn replay(&self) -> Substitution {
        let data = self.case.data();
        let mut images = data.image_ids();
        for nv in &self.new_vertices {
            debug_assert_eq!(nv.letter as usize, images.len() + 1);
            let pattern = data.pattern(nv.side).word(nv.count);
            let image = match nv.side {
                Side::Left => [pattern, vec![nv.letter]].concat(),
                Side::Right => [vec![nv.letter], pattern].concat(),
            };
            images.push(image);
        }
        let mut inserted: Vec<u32> = Vec::new();
        for c in &self.connections {
            inserted.extend(&c.inserted);
        }
        for p in &self.parallels {
            debug_assert_eq!(p.letter as usize, images.len() + 1);
            images.push(p.image.clone());
            inserted.extend(&p.inserted);
        }
        let target = &mut images[data.insertion_letter as usize - 1];
        let at = data.insertion_offset;
        target.splice(at..at, inserted);
        build(&images)
    }

    /// One line per action.
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!("case {}", self.case)];
        for r in &self.embedding.roles {
            out.push(format!("role {} = {} {}", canonical_token(r.letter), r.side, r.vertex));
        }
        let data = self.case.data();
        for nv in &self.new_vertices {
            let pattern = render_ids(&data.pattern(nv.side).word(nv.count));
            let token = canonical_token(nv.letter);
            let image = match nv.side {
                Side::Left => format!("{pattern}{token}"),
                Side::Right => format!("{token}{pattern}"),
            };
            out.push(format!(
                "vertex {} {} = {token} (count {}): {token} -> {image}",
                nv.side, nv.vertex, nv.count
            ));
        }
        for c in &self.connections {
            out.push(format!(
                "connect {} {}: insert {}",
                canonical_token(c.left),
                canonical_token(c.right),
                render_ids(&c.inserted)
            ));
        }
        for p in &self.parallels {
            out.push(format!(
                "parallel {} {}: {} -> {}, insert {}",
                canonical_token(p.left),
                canonical_token(p.right),
                canonical_token(p.letter),
                render_ids(&p.image),
                render_ids(&p.inserted)
            ));
        }
        out
    }
}

impl fmt::Display for ZorroTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Builds a substitution whose configuration graph is `g`.
pub fn realize(g: &BipartiteMultigraph) -> Result<(Substitution, ZorroTrace)> {
    let (case, embedding) = detect_case(g)?;
    let data = case.data();

    let mut letter_of = vec![0u32; g.vertices().len()];
    for r in &embedding.roles {
        letter_of[g.find(r.side, &r.vertex).unwrap()] = r.letter;
    }
    let mut images = data.image_ids();
    let mut next = data.letter_count() + 1;
    let mut counts = BTreeMap::from([(Side::Left, data.base_count), (Side::Right, data.base_count)]);
    let mut new_vertices = Vec::new();
    for (v, vertex) in g.vertices().iter().enumerate() {
        if letter_of[v] != 0 {
            continue;
        }
        let count = counts[&vertex.side];
        *counts.get_mut(&vertex.side).unwrap() += 1;
        letter_of[v] = next;
        let pattern = data.pattern(vertex.side).word(count);
        images.push(match vertex.side {
            Side::Left => [pattern, vec![next]].concat(),
            Side::Right => [vec![next], pattern].concat(),
        });
        new_vertices.push(VertexLetter {
            vertex: vertex.id.clone(),
            side: vertex.side,
            letter: next,
            count,
        });
        next += 1;
    }

    let mut current: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for &pair in data.edges {
        *current.entry(pair).or_default() += 1;
    }
    let mut wanted: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for &(l, r) in g.edges() {
        *wanted.entry((letter_of[l], letter_of[r])).or_default() += 1;
    }
    let with_bridge = |mut w: Vec<u32>| {
        w.extend(data.bridge);
        w
    };

    let mut connections = Vec::new();
    for &(a, b) in wanted.keys() {
        if let std::collections::btree_map::Entry::Vacant(slot) = current.entry((a, b)) {
            connections.push(Connection {
                left: a,
                right: b,
                inserted: with_bridge(vec![a, b]),
            });
            slot.insert(1);
        }
    }

    let mut parallels = Vec::new();
    for (&(a, b), &m) in &wanted {
        let have = current[&(a, b)];
        for _ in have..m {
            let left_image = &images[a as usize - 1];
            let right_image = &images[b as usize - 1];
            let image = [
                &left_image[..left_image.len() - 1],
                &[next][..],
                &right_image[1..],
            ]
            .concat();
            parallels.push(ParallelLetter {
                left: a,
                right: b,
                letter: next,
                image,
                inserted: with_bridge(vec![next]),
            });
            next += 1;
        }
    }

    let trace = ZorroTrace {
        case,
        embedding,
        new_vertices,
        connections,
        parallels,
    };
    Ok((trace.replay(), trace))
}

/// One named check of [`verify_roundtrip`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Evidence gathered by [`verify_roundtrip`].
#[derive(Clone, Debug)]
pub struct RoundTripReport {
    pub substitution: Substitution,
    pub trace: ZorroTrace,
    pub configuration: Option<ConfigurationGraph>,
    pub isomorphism: Option<Isomorphism>,
    pub checks: Vec<Check>,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Realizes `g` and checks that the output is primitive, prefix and
/// postfix free, has all four letter graphs subfixed, is aperiodic, has a
/// configuration graph isomorphic to `g`, and that its two-letter words
/// join exactly the adjacent vertex letters.
pub fn verify_roundtrip(g: &BipartiteMultigraph, bounds: &Bounds) -> Result<RoundTripReport> {
    let (sub, trace) = realize(g)?;
    let mut checks = Vec::new();
    let mut check = |name: &'static str, passed: bool, detail: String| {
        checks.push(Check { name, passed, detail });
    };

    check("primitive", sub.is_primitive(), String::new());
    for prefix in [true, false] {
        let name = if prefix { "prefix_free" } else { "postfix_free" };
        let conflict = sub.conflict_error(prefix);
        check(name, conflict.is_none(), conflict.map(|e| e.to_string()).unwrap_or_default());
    }

    match LetterGraphs::compute(&sub, bounds.segregating) {
        Ok(graphs) => check("subfixed", graphs.all_subfixed(), String::new()),
        Err(e) => check("subfixed", false, e.to_string()),
    }

    match classify(&sub, bounds) {
        PeriodicityVerdict::Aperiodic { .. } => check("aperiodic", true, String::new()),
        other => check("aperiodic", false, format!("{other:?}")),
    }

    let (configuration, isomorphism) = match configuration_graph(&sub, bounds) {
        Ok(cg) => {
            let iso = isomorphic(&cg.graph, g);
            check(
                "isomorphic",
                iso.is_some(),
                format!("{} edges vs {}", cg.graph.edges().len(), g.edges().len()),
            );
            (Some(cg), iso)
        }
        Err(e) => {
            check("isomorphic", false, e.to_string());
            (None, None)
        }
    };

    let (passed, detail) = l2_audit(&sub, g, &trace)?;
    check("l2_audit", passed, detail);

    Ok(RoundTripReport {
        substitution: sub,
        trace,
        configuration,
        isomorphism,
        checks,
    })
}

/// The fast two-letter language must match the closure, and a vertex-letter
/// pair `ab` (a left, b right) must occur exactly when `g` joins them.
fn l2_audit(sub: &Substitution, g: &BipartiteMultigraph, trace: &ZorroTrace) -> Result<(bool, String)> {
    let l2 = sub.language_n(2)?;
    if l2_fast(sub)? != l2 {
        return Ok((false, "fast two-letter language differs from closure".into()));
    }
    let data = trace.case.data();
    let mut side_letters: Vec<(Side, u32, String)> = trace
        .embedding
        .roles
        .iter()
        .map(|r| (r.side, r.letter, r.vertex.clone()))
        .collect();
    side_letters.extend(trace.new_vertices.iter().map(|v| (v.side, v.letter, v.vertex.clone())));
    debug_assert!(side_letters.len() == g.vertices().len() && data.letter_count() > 0);

    for (ls, a, lid) in &side_letters {
        for (rs, b, rid) in &side_letters {
            if *ls != Side::Left || *rs != Side::Right {
                continue;
            }
            let present = l2.contains(&to_word(&[*a, *b]));
            let adjacent = g.multiplicity(g.find(Side::Left, lid).unwrap(), g.find(Side::Right, rid).unwrap()) > 0;
            if present != adjacent {
                return Ok((
                    false,
                    format!(
                        "word {}{} {} but {lid}-{rid} {}",
                        canonical_token(*a),
                        canonical_token(*b),
                        if present { "occurs" } else { "is missing" },
                        if adjacent { "is an edge" } else { "is not an edge" },
                    ),
                ));
            }
        }
    }
    Ok((true, String::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(text: &str) -> BipartiteMultigraph {
        BipartiteMultigraph::parse(text).unwrap()
    }

    const DIDACTIC: &str = "left lower\nleft upper\nright top\nright middle\nright bottom\n\
        edge upper top\nedge upper top\nedge upper middle\nedge lower middle\nedge lower bottom\nedge lower bottom\n";
    const W_GRAPH: &str = "left A\nleft C\nleft D\nright P\nright Q\nright S\nright R\nleft B\n\
        edge A P\nedge A Q\nedge A R\nedge B S\nedge C S\nedge D S\n";
    const E_GRAPH: &str = "left X\nright Y\nedge X Y\nedge X Y\nedge X Y\nleft U\nright V\nedge U V\nedge U V\nedge U V\n";

    #[test]
    fn frozen_case_data() {
        for kind in [CaseKind::Z, CaseKind::W, CaseKind::E] {
            let data = kind.data();
            let marked = data.images[data.insertion_letter as usize - 1];
            assert_eq!(marked.find('|'), Some(data.insertion_offset));
            assert_eq!(data.images.iter().filter(|s| s.contains('|')).count(), 1);
        }
        assert_eq!(
            CaseKind::Z.data().initial_substitution().to_text(),
            "1 -> 22451\n2 -> 245133\n3 -> 2224513\n4 -> 451333\n5 -> 22224513333\n"
        );
        assert_eq!(
            CaseKind::W.data().initial_substitution().to_text(),
            "1 -> 423761\n2 -> 237651\n3 -> 376551\n4 -> 43765551\n5 -> 4223765\n6 -> 4222376\n7 -> 22374717655\n"
        );
        assert_eq!(
            CaseKind::E.data().initial_substitution().to_text(),
            "1 -> 2534251\n2 -> 2513451\n3 -> 2534253\n4 -> 4513451\n5 -> 251134342251\n"
        );
        assert_eq!(render_ids(&CaseKind::Z.data().left_pattern.word(5)), "2222245");
        assert_eq!(render_ids(&CaseKind::W.data().right_pattern.word(4)), "7655551");
        assert_eq!(render_ids(&CaseKind::E.data().left_pattern.word(3)), "2511134");
    }

    #[test]
    fn seeds_realize_themselves() {
        for kind in [CaseKind::Z, CaseKind::W, CaseKind::E] {
            let data = kind.data();
            let cg = configuration_graph(&data.initial_substitution(), &Bounds::default()).unwrap();
            assert!(isomorphic(&cg.graph, &data.graph()).is_some(), "{kind}");
            let (sub, trace) = realize(&data.graph()).unwrap();
            assert_eq!(trace.case, kind);
            assert_eq!(sub, data.initial_substitution());
        }
    }

    #[test]
    fn didactic_walkthrough() {
        let g = graph(DIDACTIC);
        let (kind, emb) = detect_case(&g).unwrap();
        assert_eq!(kind, CaseKind::Z);
        let ids: Vec<_> = (1..=4).map(|l| emb.vertex_of(l).unwrap()).collect();
        assert_eq!(ids, ["upper", "middle", "lower", "bottom"]);
        let (sub, trace) = realize(&g).unwrap();
        assert_eq!(
            sub.to_text(),
            "1 -> 22451\n2 -> 245133\n3 -> 2224513\n4 -> 451333\n5 -> 222245167813333\n\
             6 -> 65133333\n7 -> 224575133333\n8 -> 222451851333\n"
        );
        assert_eq!(trace.replay(), sub);
        assert!(trace.lines().contains(&"connect 1 6: insert 16".to_string()));
    }

    #[test]
    fn w_example() {
        let g = graph(W_GRAPH);
        let (sub, trace) = realize(&g).unwrap();
        assert_eq!(trace.case, CaseKind::W);
        let text = sub.to_text();
        assert!(text.contains("7 -> 22374718794717655\n"), "{text}");
        assert!(text.contains("8 -> 87655551\n"));
        assert!(text.contains("9 -> 42222379\n"));
        let inserted: Vec<String> = trace.connections.iter().map(|c| render_ids(&c.inserted)).collect();
        assert_eq!(inserted, ["187", "947"]);
    }

    #[test]
    fn e_example() {
        let g = graph(E_GRAPH);
        let (sub, trace) = realize(&g).unwrap();
        assert_eq!(trace.case, CaseKind::E);
        assert_eq!(emb_ids(&trace.embedding), ["X", "Y"]);
        let text = sub.to_text();
        for line in [
            "5 -> 25113467890342251",
            "6 -> 25111346",
            "7 -> 73422251",
            "8 -> 2534258513451",
            "9 -> 251113493422251",
            "0 -> 251113403422251",
        ] {
            assert!(text.contains(&format!("{line}\n")), "{line} missing in\n{text}");
        }
    }

    fn emb_ids(e: &Embedding) -> Vec<&str> {
        e.roles.iter().map(|r| r.vertex.as_str()).collect()
    }

    #[test]
    fn roundtrips_on_examples() {
        for text in [DIDACTIC, W_GRAPH, E_GRAPH] {
            let report = verify_roundtrip(&graph(text), &Bounds::default()).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
        }
    }

    #[test]
    fn refuses_decided_graphs() {
        let single = graph("left a\nright b\nedge a b\n");
        assert!(matches!(realize(&single), Err(Error::NotUndecided(_))));
        assert!(matches!(verify_roundtrip(&single, &Bounds::default()), Err(Error::NotUndecided(_))));
    }
}
