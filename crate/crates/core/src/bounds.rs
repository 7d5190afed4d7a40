//! Order bounds for regular and biregular planar graphs of given girth.
//!
//! All calculators are exact integer arithmetic; rational bounds are rounded
//! up since orders are integers.

use std::fmt;

use crate::error::BoundsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CageParams {
    Regular { k: u32, g: u32 },
    Biregular { r: u32, m: u32, g: u32 },
}

impl CageParams {
    pub fn regular(k: u32, g: u32) -> Result<Self, BoundsError> {
        if k < 2 || g < 3 {
            return Err(BoundsError::Domain(format!("regular pair needs k >= 2 and g >= 3, got ({k}, {g})")));
        }
        Ok(CageParams::Regular { k, g })
    }

    pub fn biregular(r: u32, m: u32, g: u32) -> Result<Self, BoundsError> {
        check_triplet(r, m, g)?;
        Ok(CageParams::Biregular { r, m, g })
    }

    pub fn girth(&self) -> u32 {
        match *self {
            CageParams::Regular { g, .. } | CageParams::Biregular { g, .. } => g,
        }
    }

    /// Largest allowed degree.
    pub fn max_degree(&self) -> u32 {
        match *self {
            CageParams::Regular { k, .. } => k,
            CageParams::Biregular { m, .. } => m,
        }
    }

    /// Smallest allowed degree.
    pub fn min_degree(&self) -> u32 {
        match *self {
            CageParams::Regular { k, .. } => k,
            CageParams::Biregular { r, .. } => r,
        }
    }

    pub fn is_feasible(&self) -> bool {
        match *self {
            CageParams::Regular { k, g } => regular_feasible(k, g),
            CageParams::Biregular { r, m, g } => biregular_feasible(r, m, g),
        }
    }
}

impl fmt::Display for CageParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CageParams::Regular { k, g } => write!(f, "({k};{g})"),
            CageParams::Biregular { r, m, g } => write!(f, "({{{r},{m}}};{g})"),
        }
    }
}

/// Where a bound comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    /// Breadth-first tree counting around a vertex.
    MooreTree,
    /// Euler's formula with every face of length at least g.
    FaceCount,
    /// Exact order of (not necessarily planar) cages with degrees {2, m}.
    TwoDegreeCage,
    /// Exact order r + m of (not necessarily planar) girth-4 cages.
    GirthFourCage,
    /// Counting link pieces around the degree-m vertex at girth 4.
    LinkDecomposition,
    /// Exact planar value established by structural classification.
    Classification,
    /// Exact planar value established by exhaustive computer search.
    ExhaustiveSearch,
    /// Order of an explicit planar construction.
    Construction(&'static str),
    /// Order of a construction whose adjacency is not reproduced here.
    ExternalConstruction(&'static str),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::MooreTree => write!(f, "moore-tree"),
            Source::FaceCount => write!(f, "face-count"),
            Source::TwoDegreeCage => write!(f, "two-degree-cage"),
            Source::GirthFourCage => write!(f, "girth-four-cage"),
            Source::LinkDecomposition => write!(f, "link-decomposition"),
            Source::Classification => write!(f, "classification"),
            Source::ExhaustiveSearch => write!(f, "exhaustive-search"),
            Source::Construction(name) => write!(f, "construction:{name}"),
            Source::ExternalConstruction(name) => write!(f, "external-construction:{name}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub kind: BoundKind,
    pub value: u64,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub params: CageParams,
    pub feasible: bool,
    pub lower: u64,
    pub upper: Option<u64>,
    pub exact: bool,
    pub provenance: Vec<Provenance>,
}

impl BoundReport {
    fn from_parts(params: CageParams, provenance: Vec<Provenance>) -> Self {
        let lower = provenance.iter().filter(|p| p.kind == BoundKind::Lower).map(|p| p.value).max().unwrap_or(0);
        let upper = provenance.iter().filter(|p| p.kind == BoundKind::Upper).map(|p| p.value).min();
        BoundReport { params, feasible: true, lower, upper, exact: upper == Some(lower), provenance }
    }

    /// Sources that attain the reported lower bound.
    pub fn lower_sources(&self) -> Vec<Source> {
        self.sources(BoundKind::Lower, self.lower)
    }

    /// Sources that attain the reported upper bound.
    pub fn upper_sources(&self) -> Vec<Source> {
        match self.upper {
            Some(u) => self.sources(BoundKind::Upper, u),
            None => Vec::new(),
        }
    }

    fn sources(&self, kind: BoundKind, value: u64) -> Vec<Source> {
        self.provenance.iter().filter(|p| p.kind == kind && p.value == value).map(|p| p.source).collect()
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<Source>| v.iter().map(Source::to_string).collect::<Vec<_>>().join(", ");
        writeln!(f, "params: {}", self.params)?;
        writeln!(f, "feasible: {}", self.feasible)?;
        writeln!(f, "lower: {} [{}]", self.lower, join(self.lower_sources()))?;
        match self.upper {
            Some(u) => writeln!(f, "upper: {u} [{}]", join(self.upper_sources()))?,
            None => writeln!(f, "upper: unknown")?,
        }
        write!(f, "exact: {}", self.exact)
    }
}

fn check_triplet(r: u32, m: u32, g: u32) -> Result<(), BoundsError> {
    if r < 2 || r >= m || g < 3 {
        return Err(BoundsError::Domain(format!("need 2 <= r < m and g >= 3, got ({{{r},{m}}};{g})")));
    }
    Ok(())
}

fn check_feasible(r: u32, m: u32, g: u32) -> Result<(), BoundsError> {
    check_triplet(r, m, g)?;
    if !biregular_feasible(r, m, g) {
        return Err(BoundsError::Infeasible { r, m, g });
    }
    Ok(())
}

fn overflow() -> BoundsError {
    BoundsError::Domain("bound does not fit in 64 bits".into())
}

/// Moore-type lower bound for ({r,m};g)-graphs, summing from i = 0.
pub fn moore_biregular(r: u32, m: u32, g: u32) -> Result<u64, BoundsError> {
    check_triplet(r, m, g)?;
    let (r1, m) = (r as u64 - 1, m as u64);
    let t = g / 2;
    let terms = if g % 2 == 1 { t } else { t - 1 };
    let mut total: u64 = 1;
    let mut power: u64 = 1;
    for _ in 0..terms {
        total = total.checked_add(m.checked_mul(power).ok_or_else(overflow)?).ok_or_else(overflow)?;
        power = power.checked_mul(r1).ok_or_else(overflow)?;
    }
    if g % 2 == 0 {
        // power is now (r-1)^(t-1)
        total = total.checked_add(power).ok_or_else(overflow)?;
    }
    Ok(total)
}

/// Exact order of ({2,m};g)-cages.
pub fn chartrand_2m_exact(m: u32, g: u32) -> Result<u64, BoundsError> {
    if m <= 2 || g < 3 {
        return Err(BoundsError::Domain(format!("need m > 2 and g >= 3, got m={m}, g={g}")));
    }
    let (m, g) = (m as u64, g as u64);
    let num = if g % 2 == 0 { m * (g - 2) + 4 } else { m * (g - 1) + 2 };
    assert_eq!(num % 2, 0, "numerator is even for every girth parity");
    Ok(num / 2)
}

/// Exact order r + m of ({r,m};4)-cages.
pub fn chartrand_girth4(r: u32, m: u32) -> Result<u64, BoundsError> {
    if r < 2 || r >= m {
        return Err(BoundsError::Domain(format!("need 2 <= r < m, got r={r}, m={m}")));
    }
    Ok(r as u64 + m as u64)
}

/// Whether a planar k-regular graph of girth g can exist. Cycles (k = 2)
/// always exist.
pub fn regular_feasible(k: u32, g: u32) -> bool {
    if k < 2 || g < 3 {
        return false;
    }
    let (k, g) = (k as i64, g as i64);
    k == 2 || 2 * k - g * (k - 2) > 0
}

/// Order of the planar (k, g)-cage.
pub fn regular_cage_order(k: u32, g: u32) -> Result<u64, BoundsError> {
    if k < 2 || g < 3 {
        return Err(BoundsError::Domain(format!("need k >= 2 and g >= 3, got ({k}, {g})")));
    }
    if k == 2 {
        return Ok(g as u64);
    }
    if !regular_feasible(k, g) {
        return Err(BoundsError::Domain(format!("no planar {k}-regular graph has girth {g}")));
    }
    let (k, g) = (k as u64, g as u64);
    let d = 2 * k - g * (k - 2);
    Ok((4 * g).div_ceil(d))
}

/// Whether a planar ({r,m};g)-graph can exist: r(g-2) < 2g, which caps r
/// at 5, 3, 3 for girths 3, 4, 5 and forces r = 2 from girth 6 on.
pub fn biregular_feasible(r: u32, m: u32, g: u32) -> bool {
    if r < 2 || r >= m || g < 3 {
        return false;
    }
    (r as u64) * (g as u64 - 2) < 2 * g as u64
}

/// Euler's formula with girth g for y vertices of degree r and x of degree m:
/// y[r(2-g)+2g] + x[m(2-g)+2g] - 4g >= 0.
pub fn inequality_eq3(y: u64, x: u64, r: u64, m: u64, g: u64) -> bool {
    let (y, x, r, m, g) = (y as i128, x as i128, r as i128, m as i128, g as i128);
    y * (r * (2 - g) + 2 * g) + x * (m * (2 - g) + 2 * g) - 4 * g >= 0
}

/// ceil(1 + (m(g-2)+2g) / (r(2-g)+2g)), the bound with a single degree-m vertex.
pub fn general_lower_bound(r: u32, m: u32, g: u32) -> Result<u64, BoundsError> {
    check_feasible(r, m, g)?;
    let (r, m, g) = (r as u64, m as u64, g as u64);
    let num = m * (g - 2) + 2 * g;
    let den = 2 * g - r * (g - 2);
    Ok(1 + num.div_ceil(den))
}

/// Lower bound on planar girth-4 graphs with degrees {3, m}.
pub fn girth4_refined_lower(m: u32) -> Result<u64, BoundsError> {
    if m < 4 {
        return Err(BoundsError::Domain(format!("need m >= 4, got {m}")));
    }
    let m = m as u64;
    Ok(if m <= 13 { 2 * m + 2 } else { (9 * m + 19).div_ceil(5) })
}

/// 2m - k + c + ends + 1, in signed arithmetic since k may exceed 2m.
pub fn link_lower_bound(m: u64, k: u64, c: u64, ends: u64) -> i64 {
    2 * m as i64 - k as i64 + c as i64 + ends as i64 + 1
}

fn lower_bound_sources(r: u32, m: u32, g: u32) -> Result<Vec<Provenance>, BoundsError> {
    check_feasible(r, m, g)?;
    let lo = |value, source| Provenance { kind: BoundKind::Lower, value, source };
    let mut out = vec![lo(moore_biregular(r, m, g)?, Source::MooreTree), lo(general_lower_bound(r, m, g)?, Source::FaceCount)];
    if r == 2 {
        out.push(lo(chartrand_2m_exact(m, g)?, Source::TwoDegreeCage));
    }
    if g == 4 {
        out.push(lo(chartrand_girth4(r, m)?, Source::GirthFourCage));
    }
    Ok(out)
}

/// Best of the elementary lower bounds (tree counting, face counting and
/// the non-planar cage orders).
pub fn corollary_lower_bound(r: u32, m: u32, g: u32) -> Result<u64, BoundsError> {
    Ok(lower_bound_sources(r, m, g)?.iter().map(|p| p.value).max().unwrap_or(0))
}

/// All lower bounds for planar ({r,m};g)-graphs, including the link
/// refinement at girth 4. The report carries no upper bound.
pub fn planar_lower_bound(r: u32, m: u32, g: u32) -> Result<BoundReport, BoundsError> {
    let mut prov = lower_bound_sources(r, m, g)?;
    if r == 3 && g == 4 {
        prov.push(Provenance { kind: BoundKind::Lower, value: girth4_refined_lower(m)?, source: Source::LinkDecomposition });
    }
    let mut rep = BoundReport::from_parts(CageParams::Biregular { r, m, g }, prov);
    rep.exact = false;
    Ok(rep)
}

/// Lower and upper bounds, with exactness, from the classification results
/// for each girth.
pub fn known_bounds_table(r: u32, m: u32, g: u32) -> Result<BoundReport, BoundsError> {
    let mut prov = planar_lower_bound(r, m, g)?.provenance;
    let (m64, lo, up) = (m as u64, BoundKind::Lower, BoundKind::Upper);
    let mut add = |kind, value, source| prov.push(Provenance { kind, value, source });
    match (g, r) {
        (3, 2) => {
            add(up, m64 + 1, Source::Construction("pinwheel"));
            if m % 2 == 0 {
                add(up, m64 + 1, Source::Construction("windmill"));
            }
        }
        (3, 3) => {
            add(up, m64 + 1, Source::Construction("wheel"));
            if m % 2 == 1 && m >= 5 {
                add(up, m64 + 1, Source::Construction("double_windmill"));
            }
            if m == 4 {
                add(up, 5, Source::Construction("biwheel"));
            }
        }
        (3, 4) => {
            add(lo, m64 + 2, Source::Classification);
            add(up, m64 + 2, Source::Construction("biwheel"));
        }
        (3, 5) => {
            if m <= 7 {
                add(lo, 2 * m64 + 2, Source::ExhaustiveSearch);
            }
            add(up, 2 * m64 + 2, Source::Construction("I"));
            if m >= 13 {
                add(up, m64 + 15, Source::ExternalConstruction("A"));
            }
        }
        (4, 2) => add(up, m64 + 2, Source::Construction("K2m")),
        (4, 3) => {
            if m <= 13 {
                add(up, 2 * m64 + 2, Source::Construction("D"));
            } else {
                add(up, m64 + 4 * (m64 + 1).div_ceil(5) + 3, Source::Construction("Z_general"));
            }
        }
        (5, 2) => {
            add(up, 2 * m64 + 1, Source::Construction("O"));
            if m % 2 == 0 {
                add(up, 2 * m64 + 1, Source::Construction("F_cycles"));
            }
        }
        (5, 3) => {
            add(up, 6 * m64 + 2, Source::Construction("P"));
            if m >= 6 {
                let b = if m % 2 == 0 { 3 * m64 + 2 * ((m64 - 6) / 4) + 21 } else { 3 * m64 + 2 * ((m64 - 5) / 4) + 22 };
                add(up, b, Source::ExternalConstruction("B"));
            }
        }
        (_, 2) => {
            let v = chartrand_2m_exact(m, g)?;
            add(up, v, Source::Construction("O"));
            if g % 2 == 1 && m % 2 == 0 {
                add(up, v, Source::Construction("F_cycles"));
            }
        }
        _ => unreachable!("feasibility was checked"),
    }
    Ok(BoundReport::from_parts(CageParams::Biregular { r, m, g }, prov))
}

/// Bounds for the regular planar (k, g)-cage: exact whenever feasible.
pub fn regular_report(k: u32, g: u32) -> Result<BoundReport, BoundsError> {
    let params = CageParams::regular(k, g)?;
    let v = regular_cage_order(k, g)?;
    let name = match (k, g) {
        (2, _) => "cycle",
        (3, 3) => "tetrahedron",
        (3, 4) => "cube",
        (3, 5) => "dodecahedron",
        (4, 3) => "octahedron",
        (5, 3) => "icosahedron",
        _ => unreachable!("feasible regular pairs are cycles or platonic"),
    };
    let prov = vec![
        Provenance { kind: BoundKind::Lower, value: v, source: Source::FaceCount },
        Provenance { kind: BoundKind::Upper, value: v, source: Source::Construction(name) },
    ];
    Ok(BoundReport::from_parts(params, prov))
}
