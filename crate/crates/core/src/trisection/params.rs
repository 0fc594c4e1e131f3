use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{violation, Error, Result, Sector, ValidationReport};

/// Invariants `(g; k₁, k₂, k₃)` of a trisection of a closed 4-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrisectionParams {
    pub genus: u32,
    pub k: [u32; 3],
}

/// Invariants `(g, k₁, k₂, k₃; p, b)` of a relative trisection, where `p` is
/// the page genus and `b` the number of boundary components of the central
/// surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelTrisectionParams {
    pub genus: u32,
    pub k: [u32; 3],
    pub page_genus: u32,
    pub boundary_components: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Params {
    Relative(RelTrisectionParams),
    Closed(TrisectionParams),
}

impl TrisectionParams {
    pub const fn new(genus: u32, k: [u32; 3]) -> Self {
        TrisectionParams { genus, k }
    }

    /// The genus-0 trisection of `S⁴`.
    pub const fn sphere() -> Self {
        TrisectionParams::new(0, [0, 0, 0])
    }

    /// The unbalanced genus-1 trisection `T_λ` of `S⁴`.
    pub fn unbalanced_sphere(sector: Sector) -> Self {
        let mut k = [0; 3];
        k[sector.idx()] = 1;
        TrisectionParams::new(1, k)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        for s in Sector::ALL {
            let k = self.k[s.idx()];
            if k > self.genus {
                out.push(violation(
                    format!("k{s} > g"),
                    format!("k{s} = {k} exceeds genus {}", self.genus),
                ));
            }
        }
        ValidationReport::from_violations(out)
    }

    pub fn stabilize(&self, sector: Sector) -> Self {
        let mut k = self.k;
        k[sector.idx()] += 1;
        TrisectionParams::new(self.genus + 1, k)
    }
}

impl RelTrisectionParams {
    pub const fn new(genus: u32, k: [u32; 3], page_genus: u32, boundary_components: u32) -> Self {
        RelTrisectionParams {
            genus,
            k,
            page_genus,
            boundary_components,
        }
    }

    /// The `(0, 0; 0, 1)` relative trisection of `B⁴`.
    pub const fn standard_ball() -> Self {
        RelTrisectionParams::new(0, [0, 0, 0], 0, 1)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        if self.genus < self.page_genus {
            out.push(violation(
                "g < p",
                format!("genus {} below page genus {}", self.genus, self.page_genus),
            ));
        }
        if self.boundary_components < 1 {
            out.push(violation("b < 1", "relative trisections need boundary"));
        }
        let bound = u64::from(self.genus) + u64::from(self.boundary_components);
        for s in Sector::ALL {
            let k = self.k[s.idx()];
            if bound == 0 || u64::from(k) > bound - 1 {
                out.push(violation(
                    format!("k{s} > g + b - 1"),
                    format!("k{s} = {k} exceeds g + b - 1 = {}", bound as i64 - 1),
                ));
            }
        }
        ValidationReport::from_violations(out)
    }

    /// Interior connected sum with a closed trisection.
    pub fn interior_sum(&self, closed: &TrisectionParams) -> Self {
        RelTrisectionParams::new(
            self.genus + closed.genus,
            add3(self.k, closed.k),
            self.page_genus,
            self.boundary_components,
        )
    }

    pub fn stabilize(&self, sector: Sector) -> Self {
        self.interior_sum(&TrisectionParams::unbalanced_sphere(sector))
    }
}

impl Params {
    pub fn genus(&self) -> u32 {
        match self {
            Params::Closed(p) => p.genus,
            Params::Relative(p) => p.genus,
        }
    }

    pub fn k(&self) -> [u32; 3] {
        match self {
            Params::Closed(p) => p.k,
            Params::Relative(p) => p.k,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Params::Closed(_) => "closed",
            Params::Relative(_) => "relative",
        }
    }
}

impl From<TrisectionParams> for Params {
    fn from(p: TrisectionParams) -> Self {
        Params::Closed(p)
    }
}

impl From<RelTrisectionParams> for Params {
    fn from(p: RelTrisectionParams) -> Self {
        Params::Relative(p)
    }
}

impl fmt::Display for TrisectionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.k;
        write!(f, "({};{a},{b},{c})", self.genus)
    }
}

impl fmt::Display for RelTrisectionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.k;
        write!(
            f,
            "({},({a},{b},{c});{},{})",
            self.genus, self.page_genus, self.boundary_components
        )
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Closed(p) => p.fmt(f),
            Params::Relative(p) => p.fmt(f),
        }
    }
}

fn add3(a: [u32; 3], b: [u32; 3]) -> [u32; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn validate_params(p: &Params) -> ValidationReport {
    match p {
        Params::Closed(p) => p.validate(),
        Params::Relative(p) => p.validate(),
    }
}

/// `χ(X) = 2 + g − (k₁ + k₂ + k₃)`, from inclusion–exclusion over the
/// sectors, the three genus-`g` handlebodies and the central surface.
pub fn euler_char_closed(p: &TrisectionParams) -> Result<i64> {
    p.validate().into_result("trisection parameters")?;
    let k: i64 = p.k.iter().map(|&k| i64::from(k)).sum();
    Ok(2 + i64::from(p.genus) - k)
}

/// `χ(X) = g + 3p + 2b − 1 − (k₁ + k₂ + k₃)`.
///
/// Sectors contribute `1 − k_λ`, each compression body `H_{g,p,b}` contributes
/// `2 − g − p − b` and the central surface `Σ_{g,b}` contributes `2 − 2g − b`.
pub fn euler_char_relative(p: &RelTrisectionParams) -> Result<i64> {
    p.validate().into_result("relative trisection parameters")?;
    let k: i64 = p.k.iter().map(|&k| i64::from(k)).sum();
    Ok(i64::from(p.genus) + 3 * i64::from(p.page_genus) + 2 * i64::from(p.boundary_components)
        - 1
        - k)
}

pub fn connected_sum(a: &TrisectionParams, b: &TrisectionParams) -> Result<TrisectionParams> {
    a.validate().into_result("left summand")?;
    b.validate().into_result("right summand")?;
    Ok(TrisectionParams::new(a.genus + b.genus, add3(a.k, b.k)))
}

/// Sector-`λ` stabilization; interior stabilization for relative input.
pub fn stabilize(p: &Params, sector: Sector) -> Params {
    match p {
        Params::Closed(p) => Params::Closed(p.stabilize(sector)),
        Params::Relative(p) => Params::Relative(p.stabilize(sector)),
    }
}

/// Numbers `(n₁, n₂, n₃)` of sector stabilizations taking `base` to `target`,
/// or `None` when `target` is not reachable from `base` by stabilizing.
pub fn stabilization_delta(target: &Params, base: &Params) -> Result<Option<[u32; 3]>> {
    match (target, base) {
        (Params::Closed(_), Params::Closed(_)) => {}
        (Params::Relative(t), Params::Relative(b)) => {
            if (t.page_genus, t.boundary_components) != (b.page_genus, b.boundary_components) {
                return Ok(None);
            }
        }
        _ => {
            return Err(Error::Mismatch(format!(
                "cannot compare {} target with {} base",
                target.kind(),
                base.kind()
            )))
        }
    }
    validate_params(target).into_result("target")?;
    validate_params(base).into_result("base")?;
    let (tk, bk) = (target.k(), base.k());
    if tk.iter().zip(&bk).any(|(t, b)| t < b) || target.genus() < base.genus() {
        return Ok(None);
    }
    let delta = [tk[0] - bk[0], tk[1] - bk[1], tk[2] - bk[2]];
    let total: u32 = delta.iter().sum();
    Ok((total == target.genus() - base.genus()).then_some(delta))
}
