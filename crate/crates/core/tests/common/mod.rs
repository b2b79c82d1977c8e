#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use zorro::config_graph::BipartiteMultigraph;
use zorro::words::{parse_substitution, Alphabet, Letter, Substitution, Word};
use zorro::Side;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn sub_fixture(name: &str) -> Substitution {
    parse_substitution(&fixture_text(name)).unwrap()
}

pub fn graph_fixture(name: &str) -> BipartiteMultigraph {
    BipartiteMultigraph::parse(&fixture_text(name)).unwrap()
}

pub const SUB_FIXTURES: &[&str] = &[
    "fibonacci.sub",
    "aperiodic_121.sub",
    "collapsing.sub",
    "eventually_constant.sub",
    "z_initial.sub",
    "periodic.sub",
    "basics_042.sub",
];

pub const GRAPH_FIXTURES: &[&str] = &[
    "didactic.graph",
    "w_example.graph",
    "e_example.graph",
    "e_seed.graph",
    "z_seed.graph",
];

/// Every multiplicity matrix with `lefts × rights` cells summing to at most
/// `max_edges`.
pub fn all_graphs(lefts: usize, rights: usize, max_edges: usize) -> Vec<BipartiteMultigraph> {
    fn fill(cells: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == cells {
            out.push(cur.clone());
            return;
        }
        for m in 0..=budget {
            cur.push(m);
            fill(cells, budget - m, cur, out);
            cur.pop();
        }
    }
    let mut flat = Vec::new();
    fill(lefts * rights, max_edges, &mut Vec::new(), &mut flat);
    flat.into_iter()
        .map(|cells| {
            let rows: Vec<Vec<usize>> = cells.chunks(rights).map(<[usize]>::to_vec).collect();
            BipartiteMultigraph::from_multiplicities(&rows)
        })
        .collect()
}

/// All undecided graphs with at most `max_side` vertices per side and at
/// most `max_edges` edges.
pub fn small_undecided(max_side: usize, max_edges: usize) -> Vec<BipartiteMultigraph> {
    let mut out = Vec::new();
    for l in 1..=max_side {
        for r in 1..=max_side {
            out.extend(all_graphs(l, r, max_edges).into_iter().filter(|g| g.is_undecided()));
        }
    }
    out
}

/// A random graph without isolated vertices, vertices declared in a
/// shuffled interleaving of the two sides.
pub fn random_covered_graph(rng: &mut impl Rng, max_side: usize, max_edges: usize) -> BipartiteMultigraph {
    let lefts = rng.gen_range(1..=max_side);
    let rights = rng.gen_range(1..=max_side);
    let mut decl: Vec<(Side, usize)> = (0..lefts)
        .map(|i| (Side::Left, i))
        .chain((0..rights).map(|j| (Side::Right, j)))
        .collect();
    decl.shuffle(rng);
    let mut g = BipartiteMultigraph::new();
    for &(side, i) in &decl {
        let prefix = if side == Side::Left { "l" } else { "r" };
        g.add_vertex(side, format!("{prefix}{i}")).unwrap();
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..lefts {
        edges.push((i, rng.gen_range(0..rights)));
    }
    for j in 0..rights {
        if !edges.iter().any(|&(_, r)| r == j) {
            edges.push((rng.gen_range(0..lefts), j));
        }
    }
    let target = rng.gen_range(edges.len()..=max_edges.max(edges.len()));
    while edges.len() < target {
        edges.push((rng.gen_range(0..lefts), rng.gen_range(0..rights)));
    }
    edges.shuffle(rng);
    for (i, j) in edges {
        g.add_edge_by_id(&format!("l{i}"), &format!("r{j}")).unwrap();
    }
    g
}

pub fn random_undecided(rng: &mut impl Rng, max_side: usize, max_edges: usize) -> BipartiteMultigraph {
    loop {
        let g = random_covered_graph(rng, max_side, max_edges);
        if g.is_undecided() {
            return g;
        }
    }
}

/// Isomorphism by trying every pair of side permutations.
pub fn brute_force_isomorphic(g1: &BipartiteMultigraph, g2: &BipartiteMultigraph) -> bool {
    let (l1, r1) = (g1.side(Side::Left), g1.side(Side::Right));
    let (l2, r2) = (g2.side(Side::Left), g2.side(Side::Right));
    if l1.len() != l2.len() || r1.len() != r2.len() || g1.edges().len() != g2.edges().len() {
        return false;
    }
    let matrix = |g: &BipartiteMultigraph, ls: &[usize], rs: &[usize]| -> Vec<Vec<usize>> {
        ls.iter()
            .map(|&l| rs.iter().map(|&r| g.multiplicity(l, r)).collect())
            .collect()
    };
    let a = matrix(g1, &l1, &r1);
    let b = matrix(g2, &l2, &r2);
    let lp = permutations(&(0..l2.len()).collect::<Vec<_>>());
    let rp = permutations(&(0..r2.len()).collect::<Vec<_>>());
    lp.iter().any(|pl| {
        rp.iter().any(|pr| {
            (0..pl.len()).all(|i| (0..pr.len()).all(|j| a[i][j] == b[pl[i]][pr[j]]))
        })
    })
}

/// A random graph with exactly the given shape; isolated vertices allowed.
pub fn random_shape(rng: &mut impl Rng, lefts: usize, rights: usize, edges: usize) -> BipartiteMultigraph {
    let mut g = BipartiteMultigraph::new();
    for i in 0..lefts {
        g.add_vertex(Side::Left, format!("l{i}")).unwrap();
    }
    for j in 0..rights {
        g.add_vertex(Side::Right, format!("r{j}")).unwrap();
    }
    for _ in 0..edges {
        let (i, j) = (rng.gen_range(0..lefts), rng.gen_range(0..rights));
        g.add_edge(i, lefts + j).unwrap();
    }
    g
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Applies a random relabeling and reordering that preserves the graph up
/// to isomorphism.
pub fn shuffled_copy(rng: &mut impl Rng, g: &BipartiteMultigraph) -> BipartiteMultigraph {
    let mut order: Vec<usize> = (0..g.vertices().len()).collect();
    order.shuffle(rng);
    let mut h = BipartiteMultigraph::new();
    for &v in &order {
        let vx = g.vertex(v);
        h.add_vertex(vx.side, format!("x{}", vx.id)).unwrap();
    }
    let mut edges = g.edges().to_vec();
    edges.shuffle(rng);
    for (l, r) in edges {
        h.add_edge_by_id(&format!("x{}", g.vertex(l).id), &format!("x{}", g.vertex(r).id))
            .unwrap();
    }
    h
}

pub fn random_substitution(rng: &mut impl Rng, max_letters: usize, max_len: usize) -> Substitution {
    let n = rng.gen_range(1..=max_letters);
    let images: Vec<Word> = (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len).map(|_| Letter::from_index(rng.gen_range(0..n))).collect()
        })
        .collect();
    Substitution::new(Alphabet::canonical(n), images).unwrap()
}

pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Letter::from_index(rng.gen_range(0..n))).collect()
}

/// Primitivity by raw boolean matrix powering: some power up to
/// `n² + 1` is strictly positive, and for a single letter its image is
/// longer than one letter.
pub fn brute_force_primitive(sub: &Substitution) -> bool {
    let n = sub.len();
    let mut m = vec![vec![false; n]; n];
    for (a, row) in m.iter_mut().enumerate() {
        for &b in sub.image(Letter::from_index(a)).iter() {
            row[b.index()] = true;
        }
    }
    if n == 1 {
        return sub.image(Letter::from_index(0)).len() > 1;
    }
    let mut p = m.clone();
    for _ in 0..n * n + 1 {
        if p.iter().all(|row| row.iter().all(|&x| x)) {
            return true;
        }
        let mut next = vec![vec![false; n]; n];
        for i in 0..n {
            for k in 0..n {
                if p[i][k] {
                    for j in 0..n {
                        next[i][j] |= m[k][j];
                    }
                }
            }
        }
        p = next;
    }
    false
}
