//! Acceptance suite. Runs without the test harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zorro::cli;
use zorro::config_graph::{
    classify, configuration_graph, isomorphic, BipartiteMultigraph, Bounds, PeriodicityVerdict,
};
use zorro::error::Error;
use zorro::format::pair_label;
use zorro::generators::{
    completion_window, enumerate_basic, extend_left, extend_right, reduce_to_basic, validate_generator, Generator,
};
use zorro::letter_graphs::{
    l2_fast, least_segregating, ll_graph, ls_graph, rl_graph, rs_graph, subfixing_power, Bounded, EndpointMap,
};
use zorro::words::Substitution;
use zorro::zorro::{realize, verify_roundtrip, CaseKind};
use zorro::Side;

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rendered(sub: &Substitution, gs: &[Generator]) -> BTreeSet<String> {
    gs.iter().map(|g| g.render(sub)).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn basic_generators_golden() -> Outcome {
    let s = sub_fixture("basics_042.sub");
    let got = rendered(&s, &enumerate_basic(&s).map_err(|e| e.to_string())?);
    let want = set(&["(01,4,32)", "(04,20,42)", "(04,21,42)", "(04,30,42)"]);
    ensure(got == want, format!("basics {got:?}"))?;
    let w = |t: &str| s.word(t).unwrap();
    let rejected = validate_generator(&s, w("04"), w("31"), w("42"));
    ensure(rejected.is_err(), "(04,31,42) accepted")?;
    Ok(format!("4 basics, (04,31,42) rejected: {}", rejected.unwrap_err()))
}

fn z_analysis_golden() -> Outcome {
    let z = sub_fixture("z_initial.sub");
    ensure(z == CaseKind::Z.data().initial_substitution(), "fixture differs from frozen Z data")?;
    let got = rendered(&z, &enumerate_basic(&z).map_err(|e| e.to_string())?);
    let want = set(&["(22224,5,13333)", "(2245,12,45133)", "(222451,32,45133)", "(222451,34,51333)"]);
    ensure(got == want, format!("basics {got:?}"))?;
    let cg = configuration_graph(&z, &Bounds::default()).map_err(|e| e.to_string())?;
    let target = BipartiteMultigraph::from_multiplicities(&[vec![1, 0], vec![1, 1]]);
    ensure(cg.graph.edges().len() == 3, "edge count")?;
    ensure(cg.left_labels.len() == 2 && cg.right_labels.len() == 2, "vertex count")?;
    ensure(isomorphic(&cg.graph, &target).is_some(), "not isomorphic to Z")?;
    Ok("4 basics, configuration graph is Z".into())
}

fn aperiodic_121_graph() -> Outcome {
    let s = sub_fixture("aperiodic_121.sub");
    let cg = configuration_graph(&s, &Bounds::default()).map_err(|e| e.to_string())?;
    let lefts: BTreeSet<String> = cg.left_labels.iter().map(|w| s.render(w)).collect();
    let rights: BTreeSet<String> = cg.right_labels.iter().map(|w| s.render(w)).collect();
    ensure(lefts == set(&["12", "211"]), format!("left wings {lefts:?}"))?;
    ensure(rights == set(&["21", "112"]), format!("right wings {rights:?}"))?;
    let edges: BTreeSet<String> = cg
        .graph
        .edges()
        .iter()
        .map(|&(l, r)| format!("{}-{}", cg.graph.vertex(l).id, cg.graph.vertex(r).id))
        .collect();
    ensure(edges == set(&["12-21", "12-112", "211-21"]), format!("edges {edges:?}"))?;
    ensure(cg.graph.edges().len() == 3, "edge count")?;
    let verdict = classify(&s, &Bounds::default());
    ensure(matches!(verdict, PeriodicityVerdict::Aperiodic { .. }), format!("{verdict:?}"))?;
    Ok("wings {12,211}/{21,112}, 3 edges, aperiodic".into())
}

fn edge_set<V: Clone + Ord>(map: &EndpointMap<V>, label: impl Fn(&V) -> String) -> BTreeSet<String> {
    map.edges().map(|(a, b)| format!("{}>{}", label(a), label(b))).collect()
}

fn fibonacci_letter_graphs() -> Outcome {
    let t = sub_fixture("fibonacci.sub");
    let letter = |l: &zorro::Letter| t.alphabet().token(*l).to_string();
    let pair = |p: &(zorro::Word, zorro::Word)| pair_label(&t, p);
    let left = least_segregating(&t, Side::Left, 8).map_err(|e| e.to_string())?;
    let right = least_segregating(&t, Side::Right, 8).map_err(|e| e.to_string())?;
    ensure(left.least == Bounded::Found(1), format!("left {:?}", left.least))?;
    ensure(right.least == Bounded::Found(2), format!("right {:?}", right.least))?;
    let ll = ll_graph(&t);
    let rl = rl_graph(&t);
    let ls = ls_graph(&t, &left).map_err(|e| e.to_string())?;
    let rs = rs_graph(&t, &right).map_err(|e| e.to_string())?;
    ensure(edge_set(&ll, letter) == set(&["0>1", "1>0"]), "ll")?;
    ensure(edge_set(&rl, letter) == set(&["0>0", "1>0"]), "rl")?;
    ensure(edge_set(&ls, pair) == set(&["(0,1)>(1,0)", "(1,0)>(0,1)"]), "ls")?;
    let want_rs = set(&["(00,01)>(01,10)", "(01,00)>(10,01)", "(10,01)>(01,10)", "(01,10)>(10,01)"]);
    ensure(edge_set(&rs, pair) == want_rs, format!("rs {:?}", edge_set(&rs, pair)))?;
    let subfixed = [ll.is_subfixed(), rl.is_subfixed(), ls.is_subfixed(), rs.is_subfixed()];
    ensure(subfixed == [false, true, false, false], format!("subfixed flags {subfixed:?}"))?;
    let p = subfixing_power(&t, 64, 8).map_err(|e| e.to_string())?;
    ensure(p == 2, format!("subfixing power {p}"))?;
    Ok("segregating 1/2, four graphs match, only rl subfixed, power 2".into())
}

fn negative_fixtures() -> Outcome {
    let d = sub_fixture("eventually_constant.sub");
    ensure(!d.is_primitive(), "eventually_constant primitive")?;
    let one = |s: &Substitution| -> BTreeSet<String> {
        s.language_n(1).unwrap().iter().map(|w| s.render(w)).collect()
    };
    ensure(one(&d) == set(&["2", "3"]), format!("L1 {:?}", one(&d)))?;
    let d2 = d.power(2).unwrap();
    ensure(one(&d2) == set(&["3"]), format!("L1 of square {:?}", one(&d2)))?;

    let e = sub_fixture("collapsing.sub");
    let left = least_segregating(&e, Side::Left, 8).map_err(|x| x.to_string())?;
    ensure(left.least == Bounded::NotFoundUpTo(8), format!("collapsing left {:?}", left.least))?;
    ensure(
        matches!(subfixing_power(&e, 64, 8), Err(Error::NotSegregating { .. })),
        "collapsing subfixing power",
    )?;
    let verdict = classify(&e, &Bounds::default());
    ensure(matches!(verdict, PeriodicityVerdict::Unsupported(_)), format!("{verdict:?}"))?;
    ensure(configuration_graph(&e, &Bounds::default()).is_err(), "collapsing pipeline ran")?;

    let e2 = e.power(2).unwrap();
    let g = Generator::parse(&e2, "(d,bca,cdb)").map_err(|x| x.to_string())?;
    let g = validate_generator(&e2, g.left, g.center, g.right).map_err(|x| x.to_string())?;
    let b = reduce_to_basic(&e2, &g);
    ensure(b.render(&e2) == "(d,bc,ac)", format!("reduced to {}", b.render(&e2)))?;
    Ok("eventually_constant not primitive, L1 {2,3} vs {3}; collapsing unsupported; (d,bca,cdb) -> (d,bc,ac)".into())
}

const DIDACTIC_OUT: &str = "1 -> 22451\n2 -> 245133\n3 -> 2224513\n4 -> 451333\n5 -> 222245167813333\n\
6 -> 65133333\n7 -> 224575133333\n8 -> 222451851333\n";
const W_OUT: &str = "1 -> 423761\n2 -> 237651\n3 -> 376551\n4 -> 43765551\n5 -> 4223765\n6 -> 4222376\n\
7 -> 22374718794717655\n8 -> 87655551\n9 -> 42222379\n";
const E_OUT: &str = "1 -> 2534251\n2 -> 2513451\n3 -> 2534253\n4 -> 4513451\n5 -> 25113467890342251\n\
6 -> 25111346\n7 -> 73422251\n8 -> 2534258513451\n9 -> 251113493422251\n0 -> 251113403422251\n";

fn zorro_golden() -> Outcome {
    for (file, want) in [
        ("didactic.graph", DIDACTIC_OUT),
        ("w_example.graph", W_OUT),
        ("e_example.graph", E_OUT),
    ] {
        let path = fixture_path(file);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(["zorro".as_ref(), "realize".as_ref(), path.as_os_str()], &mut out, &mut err);
        ensure(code == 0, format!("{file}: exit {code}: {}", String::from_utf8_lossy(&err)))?;
        let got = String::from_utf8(out).unwrap();
        ensure(got == want, format!("{file}: got\n{got}"))?;
    }
    let w = realize(&graph_fixture("w_example.graph")).unwrap().1;
    let inserted: Vec<String> = w
        .connections
        .iter()
        .map(|c| c.inserted.iter().map(|x| x.to_string()).collect())
        .collect();
    ensure(inserted == ["187", "947"], format!("W insertions {inserted:?}"))?;
    Ok("three outputs byte-identical".into())
}

fn roundtrip_sweep() -> Outcome {
    let start = Instant::now();
    let bounds = Bounds::default();
    let check = |g: &BipartiteMultigraph| -> Result<(), String> {
        let report = verify_roundtrip(g, &bounds).map_err(|e| e.to_string())?;
        match report.first_failure() {
            None => Ok(()),
            Some(c) => Err(format!("{} failed ({}) on\n{}", c.name, c.detail, g.to_text())),
        }
    };
    let small = small_undecided(3, 6);
    for g in &small {
        check(g)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2a11);
    let mut largest = 0;
    for _ in 0..100 {
        let g = random_undecided(&mut rng, 8, 16);
        largest = largest.max(g.edges().len());
        check(&g)?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, format!("took {secs:.1}s"))?;
    Ok(format!(
        "{} exhaustive + 100 random (up to {largest} edges) in {secs:.1}s",
        small.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);

    // Fast two-letter language against the closure.
    let mut subs: Vec<Substitution> = SUB_FIXTURES.iter().map(|f| sub_fixture(f)).collect();
    for k in [2, 3] {
        for f in SUB_FIXTURES {
            let s = sub_fixture(f);
            if s.power_size(k) < 10_000 {
                subs.push(s.power(k).unwrap());
            }
        }
    }
    for kind in [CaseKind::Z, CaseKind::W, CaseKind::E] {
        subs.push(kind.data().initial_substitution());
    }
    for f in GRAPH_FIXTURES {
        subs.push(realize(&graph_fixture(f)).unwrap().0);
    }
    for _ in 0..30 {
        subs.push(realize(&random_undecided(&mut rng, 5, 10)).unwrap().0);
    }
    let mut l2_checked = 0;
    for s in &subs {
        if let Ok(fast) = l2_fast(s) {
            ensure(fast == s.language_n(2).unwrap(), format!("l2 mismatch on\n{}", s.to_text()))?;
            l2_checked += 1;
        }
    }
    ensure(l2_checked >= 30, format!("only {l2_checked} substitutions met the l2 precondition"))?;

    // Primitivity against raw matrix powering.
    for _ in 0..2000 {
        let s = random_substitution(&mut rng, 6, 4);
        ensure(
            s.is_primitive() == brute_force_primitive(&s),
            format!("primitivity disagrees on\n{}", s.to_text()),
        )?;
    }

    // Isomorphism against exhaustive bijection search.
    let mut iso_pairs = 0;
    for _ in 0..300 {
        let (l, r) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let e = rng.gen_range(0..=10);
        let g1 = random_shape(&mut rng, l, r, e);
        let g2 = if rng.gen_bool(0.5) {
            shuffled_copy(&mut rng, &g1)
        } else {
            random_shape(&mut rng, l, r, e)
        };
        let fast = isomorphic(&g1, &g2).is_some();
        ensure(fast == brute_force_isomorphic(&g1, &g2), format!("isomorphism disagrees on\n{}\nvs\n{}", g1.to_text(), g2.to_text()))?;
        iso_pairs += usize::from(fast);
    }

    // Completion-window shift laws.
    let mut cases = 0;
    while cases < 1000 {
        let s = random_substitution(&mut rng, 4, 5);
        if !s.is_primitive() {
            continue;
        }
        let Ok(basics) = enumerate_basic(&s) else { continue };
        if basics.is_empty() {
            continue;
        }
        let mut g = basics[rng.gen_range(0..basics.len())].clone();
        for _ in 0..rng.gen_range(0..3) {
            g = if rng.gen_bool(0.5) { extend_left(&s, &g) } else { extend_right(&s, &g) };
        }
        let lo = rng.gen_range(-20..0);
        let hi = rng.gen_range(1..20);
        let base = completion_window(&s, &g, lo - 1, hi + 1).map_err(|e| e.to_string())?;
        let left = completion_window(&s, &extend_left(&s, &g), lo, hi).map_err(|e| e.to_string())?;
        ensure(left.slice(lo, hi) == base.slice(lo, hi), "extend_left moved the window")?;
        let right = completion_window(&s, &extend_right(&s, &g), lo, hi).map_err(|e| e.to_string())?;
        ensure(right.slice(lo, hi) == base.slice(lo + 1, hi + 1), "extend_right did not shift by one")?;

        // Applying the substitution shifts the completion by the right wing length.
        let shift = g.right.len() as i64;
        let n = rng.gen_range(1..6);
        let wide = completion_window(&s, &g, -200, 400).map_err(|e| e.to_string())?;
        let image_right = s.apply(wide.slice(0, n).unwrap()).unwrap();
        let m = image_right.len() as i64;
        ensure(wide.slice(shift, shift + m) == Some(&image_right[..]), "right half of image")?;
        let image_left = s.apply(wide.slice(-n, 0).unwrap()).unwrap();
        let m = image_left.len() as i64;
        ensure(wide.slice(shift - m, shift) == Some(&image_left[..]), "left half of image")?;
        cases += 1;
    }
    Ok(format!(
        "l2 on {l2_checked} substitutions, 2000 primitivity cases, 300 isomorphism pairs ({iso_pairs} isomorphic), {cases} window cases"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("basic generators of 0->042 ... 4->01432", basic_generators_golden),
        ("Z seed basics and configuration graph", z_analysis_golden),
        ("configuration graph of 1->121, 2->2112", aperiodic_121_graph),
        ("letter graphs of 0->10, 1->0", fibonacci_letter_graphs),
        ("negative fixtures", negative_fixtures),
        ("Zorro golden outputs", zorro_golden),
        ("round trip on small and random undecided graphs", roundtrip_sweep),
        ("oracle equivalences", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
