//! Acceptance suite: one line per criterion. Criteria that do not hold as
//! stated print FAIL together with the verified counter-statement; the run
//! only exits nonzero when a check errors or a counter-statement fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use planar_cages::bounds::{
    biregular_feasible, chartrand_2m_exact, girth4_refined_lower, regular_cage_order, regular_feasible, CageParams,
};
use planar_cages::families::{
    biwheel, double_windmill, family_d, family_f_cycles, family_i, family_o, family_p, family_z, k2m, pinwheel,
    platonic, wheel, windmill, FamilySpec, Solid,
};
use planar_cages::graph::{canonical_form, CanonicalForm, Girth, SimpleGraph};
use planar_cages::planarity::{
    decompose_link, degree_trichotomy, is_outerplanar, is_planar, link, outerplanar_degree2_pair, test_planarity,
    Trichotomy,
};
use planar_cages::search::{enumerate, min_order, min_order_from, parity_prune, verify_uniqueness, SearchOptions};
use planar_cages::verify::{certify, reproduce_tables, CertStatus};

type Check = Result<Verdict, String>;

enum Verdict {
    Pass,
    /// The criterion is false as stated; the string is the verified correction.
    Refuted(String),
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn bi(r: u32, m: u32, g: u32) -> CageParams {
    CageParams::biregular(r, m, g).unwrap()
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn forms(gs: &[SimpleGraph]) -> BTreeSet<CanonicalForm> {
    gs.iter().map(canonical_form).collect()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c1_platonic() -> Check {
    let want = [
        (Solid::Tetrahedron, 3, 3, 4),
        (Solid::Cube, 3, 4, 8),
        (Solid::Dodecahedron, 3, 5, 20),
        (Solid::Octahedron, 4, 3, 6),
        (Solid::Icosahedron, 5, 3, 12),
    ];
    for (s, k, g, n) in want {
        let gr = platonic(s);
        ensure!(gr.n() == n && gr.is_regular(k), "{} has the wrong order or degree", s.name());
        ensure!(gr.girth() == Girth::Finite(g), "{} girth {}", s.name(), gr.girth());
        ensure!(is_planar(&gr), "{} not planar", s.name());
        ensure!(regular_cage_order(k as u32, g as u32).map_err(err)? == n as u64, "cage order for ({k};{g})");
    }
    Ok(Verdict::Pass)
}

fn c2_regular_search() -> Check {
    let cube = CageParams::regular(3, 4).unwrap();
    for n in [4, 6] {
        let o = enumerate(cube, n, &opts()).map_err(err)?;
        ensure!(o.exhaustive && o.graphs.is_empty(), "(3;4) has graphs at n={n}");
    }
    let o = min_order(cube, 8, &opts()).map_err(err)?;
    ensure!(o.order == Some(8), "(3;4) minimum order {:?}", o.order);
    ensure!(forms(&o.graphs) == forms(&[platonic(Solid::Cube)]), "cube is not the unique (3;4) class");
    let dodeca = CageParams::regular(3, 5).unwrap();
    let long = std::env::var_os("PCAGE_LONG_RUN").is_some();
    let o = min_order(dodeca, if long { 20 } else { 14 }, &opts()).map_err(err)?;
    ensure!(o.exhaustive, "(3;5) search incomplete");
    if long {
        ensure!(o.order == Some(20), "(3;5) minimum order {:?}", o.order);
        ensure!(forms(&o.graphs) == forms(&[platonic(Solid::Dodecahedron)]), "dodecahedron not unique");
    } else {
        ensure!(o.order.is_none(), "(3;5) graph found at {:?}", o.order);
    }
    Ok(Verdict::Pass)
}

fn c3_five_six() -> Check {
    let o = enumerate(bi(5, 6, 3), 13, &opts()).map_err(err)?;
    ensure!(o.exhaustive && o.graphs.is_empty(), "({{5,6}};3) n=13 not empty and exhaustive");
    ensure!(o.orders_scanned.iter().all(|s| s.forced_triangulation), "triangulation forcing not engaged");
    let o = enumerate(bi(5, 7, 3), 14, &opts()).map_err(err)?;
    ensure!(o.exhaustive && o.graphs.is_empty(), "({{5,7}};3) n=14 not empty and exhaustive");
    ensure!(o.orders_scanned.iter().all(|s| s.forced_triangulation), "triangulation forcing not engaged");
    ensure!(!parity_prune(5, 7, 3, 15), "n=15 not parity pruned");
    for (m, n) in [(6, 14), (7, 16)] {
        let g = family_i(m).map_err(err)?;
        let c = certify(&g, bi(5, m as u32, 3));
        ensure!(c.order == n && c.status == CertStatus::MeetsExactCageOrder, "I {m}: {c}");
    }
    Ok(Verdict::Pass)
}

/// Hub joined to every vertex of disjoint cycles of the given lengths.
fn hub_over_cycles(lengths: &[usize]) -> SimpleGraph {
    let n: usize = lengths.iter().sum();
    let mut pairs = Vec::new();
    let mut base = 0;
    for &l in lengths {
        for i in 0..l {
            pairs.push((base + i, base + (i + 1) % l));
            pairs.push((base + i, n));
        }
        base += l;
    }
    SimpleGraph::from_edge_list(n + 1, &pairs).unwrap()
}

/// Partitions of m into parts of size at least 3, parts nonincreasing.
fn partitions(m: usize, max: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (3..=max.min(m)).rev() {
        for mut rest in partitions(m - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn c4_girth3() -> Check {
    let mut wrong = Vec::new();
    for m in 3..=10u32 {
        let mu = m as usize;
        let o = min_order(bi(2, m, 3), mu + 1, &opts()).map_err(err)?;
        ensure!(o.order == Some(mu + 1), "({{2,{m}}};3) order {:?}", o.order);
        let mut list = vec![pinwheel(mu - 1).map_err(err)?];
        if m % 2 == 0 {
            list.push(windmill(mu / 2).map_err(err)?);
        }
        ensure!(verify_uniqueness(bi(2, m, 3), &list, &opts()).map_err(err)?, "({{2,{m}}};3) list");
        if m >= 4 {
            let o = min_order(bi(3, m, 3), mu + 1, &opts()).map_err(err)?;
            ensure!(o.order == Some(mu + 1), "({{3,{m}}};3) order {:?}", o.order);
            let mut stated = vec![wheel(mu).map_err(err)?];
            if m % 2 == 1 {
                stated.push(double_windmill(mu).map_err(err)?);
            }
            if m == 4 {
                stated.push(biwheel(3).map_err(err)?);
            }
            if !verify_uniqueness(bi(3, m, 3), &stated, &opts()).map_err(err)? {
                // the hub can sit over any 2-factor, not only a single cycle
                let mut full = stated.clone();
                full.extend(partitions(mu, mu).iter().map(|p| hub_over_cycles(p)));
                ensure!(forms(&o.graphs) == forms(&full), "({{3,{m}}};3) classes differ from the 2-factor list");
                wrong.push(format!("m={m}: {} classes", o.graphs.len()));
            }
        }
        if m >= 5 {
            let o = min_order(bi(4, m, 3), mu + 2, &opts()).map_err(err)?;
            ensure!(o.order == Some(mu + 2), "({{4,{m}}};3) order {:?}", o.order);
        }
    }
    if wrong.is_empty() {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Refuted(format!(
            "({{3,m}};3) list is incomplete; cages are a hub over any 2-factor ({})",
            wrong.join(", ")
        )))
    }
}

fn c5_girth4() -> Check {
    for m in 3..=8u32 {
        let mu = m as usize;
        let o = min_order_from(bi(2, m, 4), 4, mu + 2, &opts()).map_err(err)?;
        ensure!(o.order == Some(mu + 2), "({{2,{m}}};4) order {:?}", o.order);
        ensure!(forms(&o.graphs) == forms(&[k2m(mu).map_err(err)?]), "({{2,{m}}};4) not unique");
    }
    for m in [4u32, 5] {
        let o = min_order_from(bi(3, m, 4), 3 + m as usize, 12, &opts()).map_err(err)?;
        ensure!(o.exhaustive && o.order == Some(2 * m as usize + 2), "({{3,{m}}};4) order {:?}", o.order);
    }
    for m in 4..=13 {
        let c = certify(&family_d(m).map_err(err)?, bi(3, m as u32, 4));
        ensure!(c.status == CertStatus::MeetsExactCageOrder, "D {m}: {c}");
    }
    let z = family_z(3).map_err(err)?;
    let c = certify(&z, bi(3, 14, 4));
    ensure!(c.order == 29 && girth4_refined_lower(14).map_err(err)? == 29, "Z 3 order {}", c.order);
    ensure!(c.status == CertStatus::MeetsExactCageOrder, "Z 3: {c}");
    Ok(Verdict::Pass)
}

fn c6_girth5_and_up() -> Check {
    for m in 3..=8u32 {
        for g in 3..=10u32 {
            let exact = chartrand_2m_exact(m, g).map_err(err)?;
            let o = family_o(m as usize, g as usize).map_err(err)?;
            ensure!(o.n() as u64 == exact, "O {m} {g} has order {}", o.n());
            if m % 2 == 0 && g % 2 == 1 {
                let f = family_f_cycles(m as usize, g as usize).map_err(err)?;
                ensure!(f.n() as u64 == exact, "F {m} {g} has order {}", f.n());
            }
        }
    }
    for (m, g) in [(3u32, 6u32), (4, 6), (3, 7), (4, 7)] {
        let mut list = vec![family_o(m as usize, g as usize).map_err(err)?];
        if m % 2 == 0 && g % 2 == 1 {
            list.push(family_f_cycles(m as usize, g as usize).map_err(err)?);
        }
        ensure!(verify_uniqueness(bi(2, m, g), &list, &opts()).map_err(err)?, "({{2,{m}}};{g}) list");
    }
    for m in [4u32, 5] {
        let c = certify(&family_p(m as usize).map_err(err)?, bi(3, m, 5));
        let (lo, hi) = (3 * m as u64 + 11, 6 * m as u64 + 2);
        ensure!(
            c.status == CertStatus::WithinBounds { lower: lo, upper: Some(hi) } && c.order as u64 == hi,
            "P {m}: {c}"
        );
    }
    Ok(Verdict::Pass)
}

fn c7_tables() -> Check {
    let tables = reproduce_tables().map_err(err)?;
    let rows: usize = tables.iter().map(|t| t.rows.len()).sum();
    ensure!(rows > 0, "no rows");
    Ok(Verdict::Pass)
}

/// Isomorphism classes of every graph up to `n_max` vertices in a class
/// closed under vertex deletion, by order.
fn hereditary_classes(n_max: usize, keep: impl Fn(&SimpleGraph) -> bool) -> Vec<Vec<SimpleGraph>> {
    let mut levels = vec![Vec::new(), vec![SimpleGraph::empty(1).unwrap()]];
    for n in 2..=n_max {
        let mut next = BTreeMap::new();
        for parent in &levels[n - 1] {
            let old: Vec<(usize, usize)> = parent.edges().collect();
            for mask in 0u64..1 << (n - 1) {
                let mut pairs = old.clone();
                pairs.extend((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
                let g = SimpleGraph::from_edge_list(n, &pairs).unwrap();
                if keep(&g) {
                    next.entry(canonical_form(&g)).or_insert(g);
                }
            }
        }
        levels.push(next.into_values().collect());
    }
    levels
}

fn c8_lemmas() -> Check {
    let mut non_forest = BTreeSet::new();
    for spec in FamilySpec::catalog() {
        let g = spec.build().map_err(err)?;
        let emb = test_planarity(&g).ok_or(format!("{spec} not planar"))?;
        for x in 0..g.n() {
            let l = link(&emb, x).map_err(err)?;
            ensure!(is_outerplanar(&l), "{spec} vertex {x}: link not outerplanar");
            let d = decompose_link(&l).map_err(err)?;
            ensure!(d.simple, "{spec} vertex {x}: intersection not simple");
            if !d.intersection.is_forest() {
                // a forest fails only when three pieces share a vertex
                let crowded = (0..l.n()).any(|v| d.cycles.iter().chain(&d.trees).filter(|p| p.contains(&v)).count() >= 3);
                ensure!(crowded, "{spec} vertex {x}: cycle in intersection graph");
                if Some(g.degree(x)) == g.max_degree() {
                    non_forest.insert(spec.to_string());
                }
            }
        }
    }
    for level in &hereditary_classes(9, is_outerplanar)[4..] {
        for g in level.iter().filter(|g| g.min_degree() >= Some(2)) {
            let (u, v) = outerplanar_degree2_pair(g).map_err(err)?;
            ensure!(!g.has_edge(u, v) && g.degree(u) == 2 && g.degree(v) == 2, "bad pair");
        }
    }
    for (n, level) in hereditary_classes(8, is_planar).iter().enumerate().skip(4) {
        for g in level.iter().filter(|g| g.max_degree() == Some(n - 1)) {
            let t = degree_trichotomy(g, n - 1).map_err(err)?;
            let c = (0..n).filter(|&v| g.degree(v) == n - 1).count();
            let ok = match t {
                Trichotomy::FourAndM3 => c == 4 && n == 4,
                Trichotomy::ThreeAndM4 => c == 3 && n == 5,
                Trichotomy::AtMostTwo => c <= 2,
            };
            ensure!(ok, "trichotomy at n={n}");
        }
    }
    if non_forest.is_empty() {
        Ok(Verdict::Pass)
    } else {
        let list: Vec<String> = non_forest.into_iter().collect();
        Ok(Verdict::Refuted(format!(
            "intersection graph of a degree-m vertex is not always a forest: {}",
            list.join(", ")
        )))
    }
}

fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let mut pairs = Vec::new();
    let mut b = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> b & 1 == 1 {
                pairs.push((i, j));
            }
            b += 1;
        }
    }
    SimpleGraph::from_edge_list(n, &pairs).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(0, &mut (0..n).collect(), &mut out);
    out
}

fn min_relabeling(g: &SimpleGraph, perms: &[Vec<usize>]) -> Vec<u64> {
    perms.iter().map(|p| g.permuted(p).rows().to_vec()).min().unwrap()
}

fn c9_oracles() -> Check {
    const CLASSES: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];
    for n in 3..=7usize {
        let perms = permutations(n);
        let mut census: BTreeMap<(Vec<usize>, usize), BTreeSet<CanonicalForm>> = BTreeMap::new();
        let mut reps: BTreeMap<CanonicalForm, SimpleGraph> = BTreeMap::new();
        for mask in 0u64..1 << (n * (n - 1) / 2) {
            let g = graph_from_mask(n, mask);
            let form = canonical_form(&g);
            reps.entry(form.clone()).or_insert_with(|| g.clone());
            let mut ds = g.degrees();
            ds.sort_unstable();
            ds.dedup();
            if ds.len() > 2 || ds[0] < 2 || !g.is_connected() || !is_planar(&g) {
                continue;
            }
            if let Girth::Finite(girth) = g.girth() {
                census.entry((ds, girth)).or_default().insert(form);
            }
        }
        ensure!(reps.len() == CLASSES[n], "{} classes on {n} vertices", reps.len());
        let distinct: BTreeSet<Vec<u64>> = reps.values().map(|g| min_relabeling(g, &perms)).collect();
        ensure!(distinct.len() == reps.len(), "isomorphic graphs with different forms on {n} vertices");
        for g in 3..=7u32 {
            for k in 2..n as u32 {
                let mut qs = Vec::new();
                if regular_feasible(k, g) {
                    qs.push((CageParams::regular(k, g).unwrap(), vec![k as usize]));
                }
                for m in k + 1..n as u32 {
                    if biregular_feasible(k, m, g) {
                        qs.push((bi(k, m, g), vec![k as usize, m as usize]));
                    }
                }
                for (params, degs) in qs {
                    let got = enumerate(params, n, &opts()).map_err(err)?;
                    let want = census.get(&(degs, g as usize)).cloned().unwrap_or_default();
                    ensure!(got.exhaustive && forms(&got.graphs) == want, "{params} n={n}");
                    ensure!(got.graphs.len() == want.len(), "{params} n={n}: duplicates");
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

fn c10_determinism() -> Check {
    let queries: [&[&str]; 8] = [
        &["5", "6", "3", "--n", "13"],
        &["5", "7", "3", "--n", "14"],
        &["2", "8", "3", "--max-n", "9"],
        &["3", "9", "3", "--max-n", "10"],
        &["4", "8", "3", "--max-n", "10"],
        &["2", "6", "4", "--max-n", "8"],
        &["3", "5", "4", "--max-n", "12"],
        &["3", "4", "--max-n", "8"],
    ];
    for q in queries {
        let mut outs = Vec::new();
        for threads in ["1", "2", "8"] {
            let out = Command::new(env!("CARGO_BIN_EXE_pcage"))
                .arg("search")
                .args(q)
                .args(["--threads", threads])
                .output()
                .map_err(err)?;
            ensure!(out.status.success(), "search {} failed at {threads} threads", q.join(" "));
            outs.push(out.stdout);
        }
        ensure!(outs[0] == outs[1] && outs[1] == outs[2], "search {} differs across thread counts", q.join(" "));
    }
    Ok(Verdict::Pass)
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Check); 10] = [
        (1, "platonic solids and regular cage orders", 1, c1_platonic),
        (2, "regular minimality by search", 600, c2_regular_search),
        (3, "({5,6};3) and ({5,7};3) non-existence", 3600, c3_five_six),
        (4, "girth-3 orders and cage lists", 1800, c4_girth3),
        (5, "girth-4 orders, D and Z", 1800, c5_girth4),
        (6, "girth 5 and above", 1800, c6_girth5_and_up),
        (7, "bound tables reproduce", 1, c7_tables),
        (8, "link, intersection and degree lemmas", 1200, c8_lemmas),
        (9, "search and canonical form oracles", 600, c9_oracles),
        (10, "search output independent of thread count", 3600, c10_determinism),
    ];
    let mut broken = 0;
    for (id, title, budget, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed();
        let slow = secs > Duration::from_secs(budget);
        match result {
            Ok(Verdict::Pass) if !slow => println!("criterion {id}: PASS ({:.2}s) {title}", secs.as_secs_f64()),
            Ok(Verdict::Pass) => {
                broken += 1;
                println!("criterion {id}: FAIL ({:.2}s) {title}: over the {budget}s budget", secs.as_secs_f64());
            }
            Ok(Verdict::Refuted(why)) => {
                println!("criterion {id}: FAIL as stated ({:.2}s) {title}: {why} [verified]", secs.as_secs_f64())
            }
            Err(e) => {
                broken += 1;
                println!("criterion {id}: FAIL ({:.2}s) {title}: {e}", secs.as_secs_f64());
            }
        }
    }
    if broken > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
