//! Straight-line drawings of planar graphs by barycentric relaxation.

use std::f64::consts::PI;
use std::fmt::Write;

use anyhow::{bail, Result};
use planar_cages::graph::SimpleGraph;
use planar_cages::planarity::test_planarity;

const MAX_SWEEPS: usize = 200;
const MOVE_TOL: f64 = 1e-7;
pub const CROSS_TOL: f64 = 1e-9;

pub type Point = (f64, f64);

/// Vertex positions on the unit disk. The longest facial walk becomes the
/// outer polygon and every other vertex sits at the mean of its neighbors.
pub fn layout(g: &SimpleGraph) -> Result<Vec<Point>> {
    let n = g.n();
    if n == 0 {
        bail!("cannot draw the empty graph");
    }
    if !g.is_connected() {
        bail!("input is disconnected");
    }
    let Some(emb) = test_planarity(g) else { bail!("input is not planar") };
    if n == 1 {
        return Ok(vec![(0.0, 0.0)]);
    }
    let faces = emb.faces()?;
    let mut outer: &Vec<usize> = &faces[0];
    for f in &faces {
        if f.len() > outer.len() {
            outer = f;
        }
    }
    let mut ring = Vec::new();
    let mut fixed = vec![false; n];
    for &v in outer {
        if !fixed[v] {
            fixed[v] = true;
            ring.push(v);
        }
    }
    let mut pos = vec![(0.0, 0.0); n];
    let k = ring.len() as f64;
    for (i, &v) in ring.iter().enumerate() {
        let a = 2.0 * PI * i as f64 / k - PI / 2.0;
        pos[v] = (a.cos(), a.sin());
    }
    relax(g, &fixed, &mut pos);
    if crossings(g, &pos) > 0 {
        solve(g, &fixed, &mut pos);
    }
    Ok(pos)
}

fn relax(g: &SimpleGraph, fixed: &[bool], pos: &mut [Point]) {
    for _ in 0..MAX_SWEEPS {
        let mut moved: f64 = 0.0;
        for v in 0..g.n() {
            if fixed[v] {
                continue;
            }
            let d = g.degree(v) as f64;
            let (sx, sy) = g.neighbors(v).fold((0.0, 0.0), |(x, y), w| (x + pos[w].0, y + pos[w].1));
            let next = (sx / d, sy / d);
            moved = moved.max((next.0 - pos[v].0).abs()).max((next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if moved < MOVE_TOL {
            break;
        }
    }
}

/// Exact barycentric positions by Gaussian elimination on the free vertices.
fn solve(g: &SimpleGraph, fixed: &[bool], pos: &mut [Point]) {
    let free: Vec<usize> = (0..g.n()).filter(|&v| !fixed[v]).collect();
    let idx = |v: usize| free.iter().position(|&w| w == v);
    let k = free.len();
    // columns: k coefficients, then x and y right-hand sides
    let mut a = vec![vec![0.0; k + 2]; k];
    for (i, &v) in free.iter().enumerate() {
        a[i][i] = g.degree(v) as f64;
        for w in g.neighbors(v) {
            match idx(w) {
                Some(j) => a[i][j] -= 1.0,
                None => {
                    a[i][k] += pos[w].0;
                    a[i][k + 1] += pos[w].1;
                }
            }
        }
    }
    for c in 0..k {
        let p = (c..k).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())).unwrap();
        a.swap(c, p);
        for r in 0..k {
            if r != c {
                let f = a[r][c] / a[c][c];
                for j in c..k + 2 {
                    a[r][j] -= f * a[c][j];
                }
            }
        }
    }
    for (i, &v) in free.iter().enumerate() {
        pos[v] = (a[i][k] / a[i][i], a[i][k + 1] / a[i][i]);
    }
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn proper_cross(p: Point, q: Point, r: Point, s: Point) -> bool {
    let (d1, d2) = (orient(p, q, r), orient(p, q, s));
    let (d3, d4) = (orient(r, s, p), orient(r, s, q));
    let strict = |x: f64, y: f64| (x > CROSS_TOL && y < -CROSS_TOL) || (x < -CROSS_TOL && y > CROSS_TOL);
    strict(d1, d2) && strict(d3, d4)
}

/// Pairs of vertex-disjoint edges whose segments cross in their interiors.
pub fn crossings(g: &SimpleGraph, pos: &[Point]) -> usize {
    count_crossings(&g.edges().map(|(u, v)| (pos[u], pos[v])).collect::<Vec<_>>())
}

pub fn count_crossings(segs: &[(Point, Point)]) -> usize {
    let mut count = 0;
    for (i, &(p, q)) in segs.iter().enumerate() {
        for &(r, s) in &segs[i + 1..] {
            if [r, s].iter().any(|x| *x == p || *x == q) {
                continue;
            }
            if proper_cross(p, q, r, s) {
                count += 1;
            }
        }
    }
    count
}

/// SVG 1.1 document with unit-scale coordinates.
pub fn render_svg(g: &SimpleGraph) -> Result<String> {
    let pos = layout(g)?;
    let c = crossings(g, &pos);
    if c > 0 {
        bail!("drawing has {c} crossing pairs");
    }
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\"480\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n",
    );
    out.push_str("<g stroke=\"black\" stroke-width=\"0.006\">\n");
    for (u, v) in g.edges() {
        let _ = writeln!(out, "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", pos[u].0, pos[u].1, pos[v].0, pos[v].1);
    }
    out.push_str("</g>\n<g fill=\"white\" stroke=\"black\" stroke-width=\"0.006\">\n");
    for (v, p) in pos.iter().enumerate() {
        let _ = writeln!(out, "<circle id=\"v{v}\" cx=\"{}\" cy=\"{}\" r=\"0.02\"/>", p.0, p.1);
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
