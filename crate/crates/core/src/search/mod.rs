//! Isomorph-free exhaustive search for planar graphs with prescribed degrees
//! and girth.
//!
//! Only connected graphs are reported unless
//! [`SearchOptions::connected_only`] is cleared.

mod checkpoint;
mod engine;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bounds::{inequality_eq3, planar_lower_bound, CageParams};
use crate::error::SearchError;
use crate::graph::encode_graph6;
use crate::graph::{canonical_labeling, CanonicalForm, SimpleGraph};

pub use engine::SearchStats;

use checkpoint::Checkpoint;
use engine::{explore, Limits, Node, Plan};

/// Largest order the engine accepts (graph6 output limit).
pub const MAX_SEARCH_ORDER: usize = crate::graph::GRAPH6_MAX_VERTICES;

/// Subtrees are split off once a level holds this many nodes.
const SPLIT_TARGET: usize = 192;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
    pub checkpoint: Option<PathBuf>,
    pub connected_only: bool,
    /// Stop after visiting this many nodes; the outcome is then marked
    /// non-exhaustive.
    pub node_limit: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { threads: 0, checkpoint: None, connected_only: true, node_limit: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    EnumerateAt(usize),
    MinOrderUpTo(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchQuery {
    pub params: CageParams,
    pub mode: SearchMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanStatus {
    /// No admissible edge count exists at this order.
    ParityPruned,
    Searched { found: usize },
}

#[derive(Clone, Debug)]
pub struct OrderScan {
    pub n: usize,
    pub status: ScanStatus,
    pub forced_triangulation: bool,
    pub stats: SearchStats,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub query: SearchQuery,
    pub exhaustive: bool,
    /// Order of the reported graphs; `None` when nothing was found.
    pub order: Option<usize>,
    /// Canonical representatives sorted by canonical form.
    pub graphs: Vec<SimpleGraph>,
    pub orders_scanned: Vec<OrderScan>,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn graph6_lines(&self) -> Vec<String> {
        self.graphs.iter().map(|g| encode_graph6(g).expect("search orders fit graph6")).collect()
    }

    pub fn stats(&self) -> SearchStats {
        let mut total = SearchStats::default();
        for scan in &self.orders_scanned {
            total.merge(&scan.stats);
        }
        total
    }
}

/// Deterministic report: no timings, so outputs compare byte for byte.
impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.query.mode {
            SearchMode::EnumerateAt(n) => writeln!(f, "query: {} n={n}", self.query.params)?,
            SearchMode::MinOrderUpTo(n) => writeln!(f, "query: {} max-n={n}", self.query.params)?,
        }
        for scan in &self.orders_scanned {
            match scan.status {
                ScanStatus::ParityPruned => writeln!(f, "order {}: pruned by degree sum and face count", scan.n)?,
                ScanStatus::Searched { found } => {
                    let tri = if scan.forced_triangulation { ", triangulation forced" } else { "" };
                    writeln!(f, "order {}: {found} graphs, {} nodes{tri}", scan.n, scan.stats.total_nodes())?
                }
            }
        }
        let status = if self.exhaustive { "exhaustive" } else { "incomplete" };
        match self.order {
            Some(n) => writeln!(f, "result: n={n}, {} graphs, {status}", self.graphs.len())?,
            None => writeln!(f, "result: 0 graphs, {status}")?,
        }
        for line in self.graph6_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

struct Shape {
    r: usize,
    m: usize,
    g: usize,
    regular: bool,
}

fn shape(params: &CageParams) -> Result<Shape, SearchError> {
    if !params.is_feasible() {
        return Err(crate::error::BoundsError::Domain(format!("{params} admits no planar graph")).into());
    }
    Ok(match *params {
        CageParams::Regular { k, g } => Shape { r: k as usize, m: k as usize, g: g as usize, regular: true },
        CageParams::Biregular { r, m, g } => Shape { r: r as usize, m: m as usize, g: g as usize, regular: false },
    })
}

/// Admissible edge counts at order `n`: handshake parity with both degree
/// classes present, the face-count inequality, and simple-graph capacity.
fn edge_range(sh: &Shape, n: usize) -> Option<(usize, usize)> {
    let cap = n * n.saturating_sub(1) / 2;
    let splits: Vec<(usize, usize)> = if sh.regular { vec![(0, n)] } else { (1..n).map(|x| (n - x, x)).collect() };
    let es: Vec<usize> = splits
        .into_iter()
        .filter(|&(y, x)| {
            let sum = y * sh.r + x * sh.m;
            sum % 2 == 0
                && sum / 2 <= cap
                && inequality_eq3(y as u64, x as u64, sh.r as u64, sh.m as u64, sh.g as u64)
        })
        .map(|(y, x)| (y * sh.r + x * sh.m) / 2)
        .collect();
    Some((*es.iter().min()?, *es.iter().max()?))
}

/// False when no split of `n` vertices into `y >= 1` of degree `r` and
/// `x >= 1` of degree `m` has an even degree sum and satisfies the face-count
/// inequality.
pub fn parity_prune(r: u32, m: u32, g: u32, n: usize) -> bool {
    if g < 3 || n == 0 {
        return false;
    }
    let sh = Shape { r: r as usize, m: m as usize, g: g as usize, regular: r == m };
    edge_range(&sh, n).is_some()
}

/// All isomorphism classes of connected planar graphs on `n` vertices with
/// girth exactly g and the prescribed degrees.
pub fn enumerate(params: CageParams, n: usize, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let scan = scan_order(&params, n, opts)?;
    Ok(finish(SearchQuery { params, mode: SearchMode::EnumerateAt(n) }, vec![scan], start))
}

/// Smallest order up to `n_max` with a nonempty enumeration, starting at the
/// planar lower bound (or at `k + 1` for regular queries).
pub fn min_order(params: CageParams, n_max: usize, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    let from = match params {
        CageParams::Regular { k, .. } => k as usize + 1,
        CageParams::Biregular { r, m, g } => planar_lower_bound(r, m, g)?.lower as usize,
    };
    min_order_from(params, from, n_max, opts)
}

/// [`min_order`] with an explicit starting order.
pub fn min_order_from(params: CageParams, from: usize, n_max: usize, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let mut scans = Vec::new();
    for n in from..=n_max {
        let scan = scan_order(&params, n, opts)?;
        let hit = matches!(scan.status, ScanStatus::Searched { found } if found > 0);
        let complete = scan.exhaustive;
        scans.push(scan);
        if hit || !complete {
            break;
        }
    }
    Ok(finish(SearchQuery { params, mode: SearchMode::MinOrderUpTo(n_max) }, scans, start))
}

/// Whether the cages at the order of `expected` are exactly the classes in
/// `expected`, with nothing smaller.
pub fn verify_uniqueness(params: CageParams, expected: &[SimpleGraph], opts: &SearchOptions) -> Result<bool, SearchError> {
    let Some(first) = expected.first() else {
        return Err(crate::error::BoundsError::Domain("expected list is empty".into()).into());
    };
    let n = first.n();
    if expected.iter().any(|g| g.n() != n) {
        return Ok(false);
    }
    let outcome = min_order(params, n, opts)?;
    if !outcome.exhaustive {
        return Err(SearchError::NotExhaustive);
    }
    let mut want: Vec<CanonicalForm> = expected.iter().map(crate::graph::canonical_form).collect();
    want.sort();
    want.dedup();
    let got: Vec<CanonicalForm> = outcome.graphs.iter().map(crate::graph::canonical_form).collect();
    Ok(outcome.order == Some(n) && got == want && want.len() == expected.len())
}

struct Scan {
    n: usize,
    status: ScanStatus,
    forced_triangulation: bool,
    stats: SearchStats,
    graphs: Vec<SimpleGraph>,
    exhaustive: bool,
}

fn finish(query: SearchQuery, scans: Vec<Scan>, start: Instant) -> SearchOutcome {
    let exhaustive = scans.iter().all(|s| s.exhaustive);
    let mut order = None;
    let mut graphs = Vec::new();
    let mut orders_scanned = Vec::new();
    for s in scans {
        if !s.graphs.is_empty() {
            order = Some(s.n);
            graphs = s.graphs;
        }
        orders_scanned.push(OrderScan { n: s.n, status: s.status, forced_triangulation: s.forced_triangulation, stats: s.stats });
    }
    SearchOutcome { query, exhaustive, order, graphs, orders_scanned, elapsed: start.elapsed() }
}

fn scan_order(params: &CageParams, n: usize, opts: &SearchOptions) -> Result<Scan, SearchError> {
    if n > MAX_SEARCH_ORDER {
        return Err(SearchError::SizeCap(n));
    }
    let sh = shape(params)?;
    let Some((e_lo, e_hi)) = edge_range(&sh, n) else {
        return Ok(Scan {
            n,
            status: ScanStatus::ParityPruned,
            forced_triangulation: false,
            stats: SearchStats::with_levels(n),
            graphs: Vec::new(),
            exhaustive: true,
        });
    };
    let plan = Plan::new(n, sh.r, sh.m, sh.g, sh.regular, e_lo, e_hi, opts.connected_only);
    let forced_triangulation = sh.g == 3 && n >= 3 && e_lo == 3 * n - 6;

    let spent = AtomicU64::new(0);
    let exhausted = AtomicBool::new(false);
    let limits = Limits { budget: opts.node_limit, spent: &spent, exhausted: &exhausted };

    // breadth-first down to a level wide enough to share out
    let mut stats = SearchStats::with_levels(n);
    let mut frontier = vec![Node::root()];
    let mut leaves: Vec<SimpleGraph> = Vec::new();
    while frontier.len() < SPLIT_TARGET && frontier.first().is_some_and(|f| f.graph.n() < n) {
        let mut next = Vec::new();
        for node in &frontier {
            stats.nodes[node.graph.n()] += 1;
            next.extend(engine::children(&plan, node, &mut stats));
        }
        frontier = next;
    }
    if frontier.first().is_some_and(|f| f.graph.n() == n) {
        for node in frontier.drain(..) {
            let mut local = Vec::new();
            explore(&plan, node, &limits, &mut stats, &mut local);
            leaves.extend(local);
        }
    }

    // subtrees keyed by canonical graph6 so checkpoints survive relabeling
    let mut prefixes: Vec<(String, Node)> = frontier
        .into_iter()
        .map(|node| {
            let key = encode_graph6(&canonical_labeling(&node.graph).canonical_graph(&node.graph)).expect("small prefix");
            (key, node)
        })
        .collect();
    prefixes.sort_by(|a, b| a.0.cmp(&b.0));

    let ck = match &opts.checkpoint {
        Some(path) => Some(Checkpoint::open(path, &params.to_string(), n)?),
        None => None,
    };
    let done = ck.as_ref().map(|c| c.completed().clone()).unwrap_or_default();

    let work: Vec<&(String, Node)> = prefixes.iter().filter(|(k, _)| !done.contains_key(k)).collect();
    let run = || -> Vec<Result<(SearchStats, Vec<SimpleGraph>), SearchError>> {
        work.par_iter()
            .map(|(key, node)| {
                let mut st = SearchStats::with_levels(n);
                let mut found = Vec::new();
                explore(&plan, node.clone(), &limits, &mut st, &mut found);
                if let Some(c) = &ck {
                    if !exhausted.load(std::sync::atomic::Ordering::Relaxed) {
                        c.record(key, &found, &st)?;
                    }
                }
                Ok((st, found))
            })
            .collect()
    };
    let results = if opts.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| SearchError::Checkpoint(format!("thread pool: {e}")))?
            .install(run)
    } else {
        run()
    };
    for res in results {
        let (st, found) = res?;
        stats.merge(&st);
        leaves.extend(found);
    }
    for (graphs, st) in done.values() {
        stats.merge(st);
        leaves.extend(graphs.iter().cloned());
    }

    let mut unique: BTreeMap<CanonicalForm, SimpleGraph> = BTreeMap::new();
    for g in leaves {
        let lab = canonical_labeling(&g);
        let canon = lab.canonical_graph(&g);
        unique.entry(lab.form).or_insert(canon);
    }
    let graphs: Vec<SimpleGraph> = unique.into_values().collect();
    Ok(Scan {
        n,
        status: ScanStatus::Searched { found: graphs.len() },
        forced_triangulation,
        stats,
        graphs,
        exhaustive: !exhausted.into_inner(),
    })
}
