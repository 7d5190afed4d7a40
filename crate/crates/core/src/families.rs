//! Explicit constructions of regular and biregular planar graphs.
//!
//! Every constructor documents its vertex labeling so that outputs are
//! reproducible and individual vertices can be addressed in tests.

use std::fmt;

use crate::error::{FamilyError, GraphError};
use crate::graph::SimpleGraph;

fn domain(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Domain { family, reason: reason.into() }
}

struct Builder {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, pairs: Vec::new() }
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.pairs.push((u, v));
    }

    fn path(&mut self, vs: &[usize]) {
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    fn cycle(&mut self, vs: &[usize]) {
        self.path(vs);
        if vs.len() > 2 {
            self.edge(vs[vs.len() - 1], vs[0]);
        }
    }

    fn build(self) -> Result<SimpleGraph, FamilyError> {
        Ok(SimpleGraph::from_edge_list(self.n, &self.pairs)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] = [Solid::Tetrahedron, Solid::Cube, Solid::Octahedron, Solid::Dodecahedron, Solid::Icosahedron];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Cube => "cube",
            Solid::Octahedron => "octahedron",
            Solid::Dodecahedron => "dodecahedron",
            Solid::Icosahedron => "icosahedron",
        }
    }

    pub fn parse(name: &str) -> Result<Solid, FamilyError> {
        Solid::ALL
            .into_iter()
            .find(|s| s.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| FamilyError::Unknown(name.to_string()))
    }
}

pub fn platonic(solid: Solid) -> SimpleGraph {
    let g = match solid {
        Solid::Tetrahedron => {
            let mut b = Builder::new(4);
            for v in 0..4 {
                for w in v + 1..4 {
                    b.edge(v, w);
                }
            }
            b.build()
        }
        // vertices are 3-bit strings, adjacent when they differ in one bit
        Solid::Cube => {
            let mut b = Builder::new(8);
            for v in 0..8usize {
                for bit in 0..3 {
                    let w = v ^ (1 << bit);
                    if v < w {
                        b.edge(v, w);
                    }
                }
            }
            b.build()
        }
        // K_{2,2,2}: everything except the pairs (0,1), (2,3), (4,5)
        Solid::Octahedron => {
            let mut b = Builder::new(6);
            for v in 0..6 {
                for w in v + 1..6 {
                    if w != v + 1 || v % 2 == 1 {
                        b.edge(v, w);
                    }
                }
            }
            b.build()
        }
        // outer 5-cycle 0..4, spokes to 5..9, middle zigzag to 10..14,
        // spokes to the inner 5-cycle 15..19
        Solid::Dodecahedron => {
            let mut b = Builder::new(20);
            b.cycle(&[0, 1, 2, 3, 4]);
            for i in 0..5 {
                b.edge(i, i + 5);
            }
            for (u, v) in [(5, 13), (5, 12), (6, 14), (6, 13), (7, 10), (7, 14), (8, 11), (8, 10), (9, 12), (9, 11)] {
                b.edge(u, v);
            }
            for i in 0..5 {
                b.edge(10 + i, 15 + i);
            }
            b.cycle(&[15, 16, 17, 18, 19]);
            b.build()
        }
        Solid::Icosahedron => i_graph(5),
    };
    g.expect("platonic solids are small and loop-free")
}

/// `l` triangles sharing vertex 0; triangle `t` is `{0, 2t+1, 2t+2}`.
pub fn windmill(l: usize) -> Result<SimpleGraph, FamilyError> {
    if l < 2 {
        return Err(domain("windmill", "needs at least 2 triangles"));
    }
    let mut b = Builder::new(2 * l + 1);
    for t in 0..l {
        b.cycle(&[0, 2 * t + 1, 2 * t + 2]);
    }
    b.build()
}

/// `a` triangles sharing the edge 0-1; apexes are 2..a+2.
pub fn pinwheel(a: usize) -> Result<SimpleGraph, FamilyError> {
    if a < 2 {
        return Err(domain("pinwheel", "needs at least 2 apexes"));
    }
    let mut b = Builder::new(a + 2);
    b.edge(0, 1);
    for v in 2..a + 2 {
        b.edge(0, v);
        b.edge(1, v);
    }
    b.build()
}

/// Rim cycle 0..m, hub m.
pub fn wheel(m: usize) -> Result<SimpleGraph, FamilyError> {
    if m < 3 {
        return Err(domain("wheel", "rim needs at least 3 vertices"));
    }
    let mut b = Builder::new(m + 1);
    b.cycle(&(0..m).collect::<Vec<_>>());
    for v in 0..m {
        b.edge(v, m);
    }
    b.build()
}

/// Rim cycle 0..rim and two non-adjacent hubs rim, rim+1.
pub fn biwheel(rim: usize) -> Result<SimpleGraph, FamilyError> {
    if rim < 3 {
        return Err(domain("biwheel", "rim needs at least 3 vertices"));
    }
    let mut b = Builder::new(rim + 2);
    b.cycle(&(0..rim).collect::<Vec<_>>());
    for v in 0..rim {
        b.edge(v, rim);
        b.edge(v, rim + 1);
    }
    b.build()
}

/// Adjacent hubs 0 and 1; pairs `{2i+2, 2i+3}` are matched and joined to
/// both hubs.
pub fn double_windmill(m: usize) -> Result<SimpleGraph, FamilyError> {
    if m < 5 || m % 2 == 0 {
        return Err(domain("double_windmill", "m must be odd and at least 5"));
    }
    let mut b = Builder::new(m + 1);
    b.edge(0, 1);
    for i in 0..(m - 1) / 2 {
        let (p, q) = (2 * i + 2, 2 * i + 3);
        b.edge(p, q);
        for h in [0, 1] {
            b.edge(h, p);
            b.edge(h, q);
        }
    }
    b.build()
}

fn i_graph(m: usize) -> Result<SimpleGraph, FamilyError> {
    let x = 0;
    let xi = |i: usize| 1 + i % m;
    let xp = m + 1;
    let xpi = |i: usize| m + 2 + i % m;
    let mut b = Builder::new(2 * m + 2);
    for i in 0..m {
        b.edge(x, xi(i));
        b.edge(xi(i), xi(i + 1));
        b.edge(xp, xpi(i));
        b.edge(xpi(i), xpi(i + 1));
        b.edge(xi(i), xpi(i));
        b.edge(xi(i), xpi(i + 1));
    }
    b.build()
}

/// Hub `x = 0` over the cycle `x_i = 1 + i`, hub `x' = m + 1` over the cycle
/// `x'_i = m + 2 + i`, joined by `x_i x'_i` and `x_i x'_{i+1}`.
pub fn family_i(m: usize) -> Result<SimpleGraph, FamilyError> {
    if m < 6 {
        return Err(domain("I", "m must be at least 6"));
    }
    i_graph(m)
}

/// Cycle `x_0..x_{2m-1}` on 0..2m; `y_0 = 2m` joins the even `x`, `y_1 = 2m+1`
/// the odd ones.
pub fn family_d(m: usize) -> Result<SimpleGraph, FamilyError> {
    if m < 4 {
        return Err(domain("D", "m must be at least 4"));
    }
    let mut b = Builder::new(2 * m + 2);
    b.cycle(&(0..2 * m).collect::<Vec<_>>());
    for j in 0..m {
        b.edge(2 * m, 2 * j);
        b.edge(2 * m + 1, 2 * j + 1);
    }
    b.build()
}

/// 8-cycle `x_i = i` plus `x = 8` joined to `x_0, x_2, x_4`.
pub fn gadget_f() -> SimpleGraph {
    let mut b = Builder::new(9);
    b.cycle(&[0, 1, 2, 3, 4, 5, 6, 7]);
    for i in [0, 2, 4] {
        b.edge(8, i);
    }
    b.build().expect("fixed gadget")
}

/// 8-cycle `x_i = i` with the chord `x_0 x_4`.
pub fn gadget_e4() -> SimpleGraph {
    let mut b = Builder::new(8);
    b.cycle(&[0, 1, 2, 3, 4, 5, 6, 7]);
    b.edge(0, 4);
    b.build().expect("fixed gadget")
}

/// The chain F, E4, ..., E4, F with consecutive gadgets linked by a path of
/// length two from `x_6` of one gadget to `x_2` of the next E4, or to `x_6`
/// of the closing F. Returns the
/// graph and, for every E4 copy, the vertex offset of its `x_0`.
fn z_prime(k: usize) -> Result<(SimpleGraph, Vec<usize>), FamilyError> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut n = 0;
    let mut e4_offsets = Vec::new();
    let mut prev_x6: Option<usize> = None;
    for idx in 0..k {
        let piece = if idx == 0 || idx == k - 1 { gadget_f() } else { gadget_e4() };
        let off = n;
        n += piece.n();
        pairs.extend(piece.edges().map(|(u, v)| (u + off, v + off)));
        if idx != 0 && idx != k - 1 {
            e4_offsets.push(off);
        }
        if let Some(x6) = prev_x6 {
            let mid = n;
            n += 1;
            pairs.push((x6, mid));
            let entry = if idx == k - 1 { off + 6 } else { off + 2 };
            pairs.push((mid, entry));
        }
        prev_x6 = Some(off + 6);
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    Ok((SimpleGraph::from_edge_list(n, &pairs)?, e4_offsets))
}

fn add_apex_on_degree_two(g: &SimpleGraph) -> Result<SimpleGraph, FamilyError> {
    let twos: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
    let mut pairs: Vec<(usize, usize)> = g.edges().collect();
    let apex = g.n();
    pairs.extend(twos.iter().map(|&v| (v, apex)));
    Ok(SimpleGraph::from_edge_list(g.n() + 1, &pairs)?)
}

/// Suppresses degree-2 vertex `v`: removes it and joins its two neighbors.
fn suppress(g: &SimpleGraph, v: usize) -> SimpleGraph {
    let nb: Vec<usize> = g.neighbors(v).collect();
    debug_assert_eq!(nb.len(), 2);
    let mut h = g.clone();
    h.remove_edge(v, nb[0]);
    h.remove_edge(v, nb[1]);
    h.add_edge(nb[0], nb[1]);
    h.delete_vertex(v)
}

/// Z'_k plus an apex (the last vertex) joined to every degree-2 vertex.
/// Gadget vertices come in chain order, each linking path vertex right
/// after the gadget it leads into.
pub fn family_z(k: usize) -> Result<SimpleGraph, FamilyError> {
    if k < 3 {
        return Err(domain("Z", "k must be at least 3"));
    }
    let (zp, _) = z_prime(k)?;
    add_apex_on_degree_two(&zp)
}

/// Z_{k*} for k* = ceil((m+1)/5) with m* - m degree-2 vertices suppressed
/// before the apex is added. Suppression takes `x_1` then `x_5` of E4
/// copies, starting at the last copy and moving backward.
pub fn family_z_general(m: usize) -> Result<SimpleGraph, FamilyError> {
    if m <= 14 {
        return Err(domain("Z_general", "m must exceed 14"));
    }
    let k = (m + 1).div_ceil(5);
    let deletions = 5 * k - 1 - m;
    let (mut zp, e4) = z_prime(k)?;
    let mut targets = Vec::new();
    for &off in e4.iter().rev() {
        targets.push(off + 1);
        targets.push(off + 5);
    }
    targets.truncate(deletions);
    // suppress from the highest label down so earlier labels stay valid
    targets.sort_unstable_by(|a, b| b.cmp(a));
    for v in targets {
        zp = suppress(&zp, v);
    }
    add_apex_on_degree_two(&zp)
}

/// Decoded from the drawing: hub `c = 0`; `v_i = i` for 1..=m;
/// `w_j = m + j` and `x_j = 3m + j` for 1..=2m; `y_i = 5m + i` for 1..=m;
/// apex `z = 6m + 1`.
pub fn family_p(m: usize) -> Result<SimpleGraph, FamilyError> {
    if m < 4 {
        return Err(domain("P", "m must be at least 4"));
    }
    let c = 0;
    let v = |i: usize| i;
    let w = |j: usize| m + (j - 1) % (2 * m) + 1;
    let x = |j: usize| 3 * m + (j - 1) % (2 * m) + 1;
    let y = |i: usize| 5 * m + i;
    let z = 6 * m + 1;
    let mut b = Builder::new(6 * m + 2);
    for i in 1..=m {
        b.edge(c, v(i));
        b.edge(v(i), w(2 * i - 1));
        b.edge(v(i), w(2 * i));
        b.edge(w(2 * i), w(2 * i + 1));
        b.edge(x(2 * i - 1), x(2 * i));
        b.edge(y(i), x(2 * i));
        b.edge(y(i), x(2 * i + 1));
        b.edge(z, y(i));
    }
    for j in 1..=2 * m {
        b.edge(w(j), x(j));
    }
    b.build()
}

/// Poles 0 and 1 joined by m-1 paths of length ceil(g/2) and one of length
/// floor(g/2); internal path vertices are numbered path by path.
pub fn family_o(m: usize, g: usize) -> Result<SimpleGraph, FamilyError> {
    if m < 3 || g < 3 {
        return Err(domain("O", "needs m >= 3 and g >= 3"));
    }
    let long = g.div_ceil(2);
    let short = g / 2;
    let n = (m - 1) * (long - 1) + (short - 1) + 2;
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut b = Builder::new(n);
    let mut next = 2;
    for p in 0..m {
        let len = if p < m - 1 { long } else { short };
        let mut vs = vec![0];
        for _ in 0..len - 1 {
            vs.push(next);
            next += 1;
        }
        vs.push(1);
        b.path(&vs);
    }
    b.build()
}

/// m/2 cycles of length g through vertex 0.
pub fn family_f_cycles(m: usize, g: usize) -> Result<SimpleGraph, FamilyError> {
    if m < 4 || m % 2 == 1 || g < 3 {
        return Err(domain("F_cycles", "needs even m >= 4 and g >= 3"));
    }
    let n = (m / 2) * (g - 1) + 1;
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut b = Builder::new(n);
    for c in 0..m / 2 {
        let mut vs = vec![0];
        vs.extend((0..g - 1).map(|i| 1 + c * (g - 1) + i));
        b.cycle(&vs);
    }
    b.build()
}

/// Poles 0 and 1, leaves 2..m+2.
pub fn k2m(m: usize) -> Result<SimpleGraph, FamilyError> {
    if m < 3 {
        return Err(domain("K2m", "m must be at least 3"));
    }
    let mut b = Builder::new(m + 2);
    for v in 2..m + 2 {
        b.edge(0, v);
        b.edge(1, v);
    }
    b.build()
}

/// A family name with its integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Platonic(Solid),
    Windmill(usize),
    Pinwheel(usize),
    Wheel(usize),
    Biwheel(usize),
    DoubleWindmill(usize),
    I(usize),
    D(usize),
    GadgetF,
    GadgetE4,
    Z(usize),
    ZGeneral(usize),
    P(usize),
    O(usize, usize),
    FCycles(usize, usize),
    K2m(usize),
}

impl FamilySpec {
    /// Parses a family tag and its parameters, e.g. `("O", ["4", "6"])` or
    /// `("platonic", ["cube"])`.
    pub fn parse(tag: &str, args: &[&str]) -> Result<FamilySpec, FamilyError> {
        let ints = || -> Result<Vec<usize>, FamilyError> {
            args.iter()
                .map(|a| a.parse::<usize>().map_err(|_| FamilyError::Unknown(format!("bad parameter {a:?}"))))
                .collect()
        };
        let want = |k: usize| -> Result<Vec<usize>, FamilyError> {
            let v = ints()?;
            if v.len() != k {
                return Err(FamilyError::Unknown(format!("{tag} takes {k} parameter(s), got {}", v.len())));
            }
            Ok(v)
        };
        let spec = match tag.to_ascii_lowercase().as_str() {
            "platonic" => match args {
                [name] => FamilySpec::Platonic(Solid::parse(name)?),
                _ => return Err(FamilyError::Unknown("platonic takes a solid name".into())),
            },
            "tetrahedron" | "cube" | "octahedron" | "dodecahedron" | "icosahedron" => {
                want(0)?;
                FamilySpec::Platonic(Solid::parse(tag)?)
            }
            "windmill" => FamilySpec::Windmill(want(1)?[0]),
            "pinwheel" => FamilySpec::Pinwheel(want(1)?[0]),
            "wheel" => FamilySpec::Wheel(want(1)?[0]),
            "biwheel" => FamilySpec::Biwheel(want(1)?[0]),
            "double_windmill" => FamilySpec::DoubleWindmill(want(1)?[0]),
            "i" => FamilySpec::I(want(1)?[0]),
            "d" => FamilySpec::D(want(1)?[0]),
            "gadget_f" => {
                want(0)?;
                FamilySpec::GadgetF
            }
            "gadget_e4" => {
                want(0)?;
                FamilySpec::GadgetE4
            }
            "z" => FamilySpec::Z(want(1)?[0]),
            "z_general" => FamilySpec::ZGeneral(want(1)?[0]),
            "p" => FamilySpec::P(want(1)?[0]),
            "o" => {
                let v = want(2)?;
                FamilySpec::O(v[0], v[1])
            }
            "f_cycles" => {
                let v = want(2)?;
                FamilySpec::FCycles(v[0], v[1])
            }
            "k2m" => FamilySpec::K2m(want(1)?[0]),
            _ => return Err(FamilyError::Unknown(tag.to_string())),
        };
        Ok(spec)
    }

    pub fn build(&self) -> Result<SimpleGraph, FamilyError> {
        match *self {
            FamilySpec::Platonic(s) => Ok(platonic(s)),
            FamilySpec::Windmill(l) => windmill(l),
            FamilySpec::Pinwheel(a) => pinwheel(a),
            FamilySpec::Wheel(m) => wheel(m),
            FamilySpec::Biwheel(r) => biwheel(r),
            FamilySpec::DoubleWindmill(m) => double_windmill(m),
            FamilySpec::I(m) => family_i(m),
            FamilySpec::D(m) => family_d(m),
            FamilySpec::GadgetF => Ok(gadget_f()),
            FamilySpec::GadgetE4 => Ok(gadget_e4()),
            FamilySpec::Z(k) => family_z(k),
            FamilySpec::ZGeneral(m) => family_z_general(m),
            FamilySpec::P(m) => family_p(m),
            FamilySpec::O(m, g) => family_o(m, g),
            FamilySpec::FCycles(m, g) => family_f_cycles(m, g),
            FamilySpec::K2m(m) => k2m(m),
        }
    }

    /// Every family instance in the parameter ranges covered by the test
    /// suites.
    pub fn catalog() -> Vec<FamilySpec> {
        let mut out: Vec<FamilySpec> = Solid::ALL.into_iter().map(FamilySpec::Platonic).collect();
        for l in 2..=10 {
            out.push(FamilySpec::Windmill(l));
            out.push(FamilySpec::Pinwheel(l));
        }
        for m in 3..=12 {
            out.push(FamilySpec::Wheel(m));
            out.push(FamilySpec::Biwheel(m));
            if m >= 5 && m % 2 == 1 {
                out.push(FamilySpec::DoubleWindmill(m));
            }
            if m >= 4 {
                out.push(FamilySpec::D(m));
                out.push(FamilySpec::K2m(m));
            }
            if (6..=10).contains(&m) {
                out.push(FamilySpec::I(m));
            }
        }
        out.push(FamilySpec::K2m(3));
        out.push(FamilySpec::D(13));
        out.push(FamilySpec::GadgetF);
        out.push(FamilySpec::GadgetE4);
        for k in 3..=5 {
            out.push(FamilySpec::Z(k));
        }
        for m in 15..=25 {
            out.push(FamilySpec::ZGeneral(m));
        }
        for m in 4..=8 {
            out.push(FamilySpec::P(m));
        }
        for m in 3..=8 {
            for g in 3..=10 {
                out.push(FamilySpec::O(m, g));
                if m % 2 == 0 && m >= 4 {
                    out.push(FamilySpec::FCycles(m, g));
                }
            }
        }
        out
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Platonic(s) => write!(f, "platonic {}", s.name()),
            FamilySpec::Windmill(l) => write!(f, "windmill {l}"),
            FamilySpec::Pinwheel(a) => write!(f, "pinwheel {a}"),
            FamilySpec::Wheel(m) => write!(f, "wheel {m}"),
            FamilySpec::Biwheel(r) => write!(f, "biwheel {r}"),
            FamilySpec::DoubleWindmill(m) => write!(f, "double_windmill {m}"),
            FamilySpec::I(m) => write!(f, "I {m}"),
            FamilySpec::D(m) => write!(f, "D {m}"),
            FamilySpec::GadgetF => write!(f, "gadget_F"),
            FamilySpec::GadgetE4 => write!(f, "gadget_E4"),
            FamilySpec::Z(k) => write!(f, "Z {k}"),
            FamilySpec::ZGeneral(m) => write!(f, "Z_general {m}"),
            FamilySpec::P(m) => write!(f, "P {m}"),
            FamilySpec::O(m, g) => write!(f, "O {m} {g}"),
            FamilySpec::FCycles(m, g) => write!(f, "F_cycles {m} {g}"),
            FamilySpec::K2m(m) => write!(f, "K2m {m}"),
        }
    }
}
