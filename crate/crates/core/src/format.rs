//! Text, DOT and JSON renderings.

use serde_json::{json, Value};

use crate::config_graph::{BipartiteMultigraph, ConfigurationGraph};
use crate::generators::Generator;
use crate::letter_graphs::{EndpointMap, WordPair};
use crate::words::{Letter, Substitution};
use crate::Side;

/// The substitution file text; `tokens` forces the whitespace-separated
/// token format even when every token is a single character.
pub fn substitution_text(sub: &Substitution, tokens: bool) -> String {
    if !tokens || !sub.alphabet().is_compact() {
        return sub.to_text();
    }
    let mut out = String::from("format: tokens\n");
    for a in sub.letters() {
        let rhs: Vec<&str> = sub.image(a).iter().map(|&l| sub.alphabet().token(l)).collect();
        out.push_str(&format!("{} -> {}\n", sub.alphabet().token(a), rhs.join(" ")));
    }
    out
}

pub fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn letter_label(sub: &Substitution, l: &Letter) -> String {
    sub.alphabet().token(*l).to_string()
}

pub fn pair_label(sub: &Substitution, (u, v): &WordPair) -> String {
    format!("({},{})", sub.render(u), sub.render(v))
}

/// A functional graph as a DOT digraph.
pub fn endpoint_map_dot<V: Clone + Ord>(
    name: &str,
    map: &EndpointMap<V>,
    label: impl Fn(&V) -> String,
) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    for v in map.vertices() {
        out.push_str(&format!("  {};\n", quote(&label(v))));
    }
    for (a, b) in map.edges() {
        out.push_str(&format!("  {} -> {};\n", quote(&label(a)), quote(&label(b))));
    }
    out.push_str("}\n");
    out
}

pub fn endpoint_map_json<V: Clone + Ord>(map: &EndpointMap<V>, label: impl Fn(&V) -> String) -> Value {
    json!({
        "vertices": map.vertices().iter().map(&label).collect::<Vec<_>>(),
        "edges": map.edges().map(|(a, b)| [label(a), label(b)]).collect::<Vec<_>>(),
        "subfixed": map.is_subfixed(),
    })
}

fn node_name(g: &BipartiteMultigraph, v: usize) -> String {
    let vertex = g.vertex(v);
    let prefix = match vertex.side {
        Side::Left => "L",
        Side::Right => "R",
    };
    quote(&format!("{prefix}:{}", vertex.id))
}

/// A bipartite multigraph as an undirected DOT graph with the two sides
/// ranked apart; parallel edges are repeated.
pub fn bipartite_dot(name: &str, g: &BipartiteMultigraph) -> String {
    let mut out = format!("graph {} {{\n  rankdir=LR;\n", quote(name));
    for side in [Side::Left, Side::Right] {
        out.push_str(&format!("  subgraph {} {{\n    rank=same;\n", quote(&format!("cluster_{side}"))));
        for v in g.side(side) {
            out.push_str(&format!(
                "    {} [label={}];\n",
                node_name(g, v),
                quote(&g.vertex(v).id)
            ));
        }
        out.push_str("  }\n");
    }
    for &(l, r) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", node_name(g, l), node_name(g, r)));
    }
    out.push_str("}\n");
    out
}

pub fn bipartite_json(g: &BipartiteMultigraph) -> Value {
    let ids = |side| g.side(side).into_iter().map(|v| g.vertex(v).id.clone()).collect::<Vec<_>>();
    json!({
        "left": ids(Side::Left),
        "right": ids(Side::Right),
        "edges": g.edges().iter().map(|&(l, r)| [&g.vertex(l).id, &g.vertex(r).id]).collect::<Vec<_>>(),
    })
}

pub fn generator_json(sub: &Substitution, g: &Generator) -> Value {
    json!({
        "left": sub.render(&g.left),
        "center": sub.render(&g.center),
        "right": sub.render(&g.right),
        "text": g.render(sub),
    })
}

pub fn configuration_json(cg: &ConfigurationGraph) -> Value {
    let sub = &cg.substitution;
    json!({
        "power": cg.power,
        "graph": bipartite_json(&cg.graph),
        "left_labels": cg.left_labels.iter().map(|w| sub.render(w)).collect::<Vec<_>>(),
        "right_labels": cg.right_labels.iter().map(|w| sub.render(w)).collect::<Vec<_>>(),
        "edge_generators": cg.edge_generators.iter().map(|g| g.render(sub)).collect::<Vec<_>>(),
    })
}
