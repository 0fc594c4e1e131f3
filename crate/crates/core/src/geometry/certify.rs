use serde::{Deserialize, Serialize};

use super::graph::GraphSurface;
use super::point::{PointC2, PolyhedronQM};
use super::sectors::{in_open_sector, phi};
use crate::bridge::BridgeSurfaceData;
use crate::par::Exec;
use crate::{Error, Result, Sector};

pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-9;
pub const DEFAULT_GRID: usize = 193;
pub const DEFAULT_SEEDS: usize = 32;
/// Duplicate roots closer than this fraction of the domain diameter are merged.
pub const DEDUP_FRACTION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BridgePoint {
    pub point: PointC2,
    /// Parameter `(x, y)` of the point on its graph.
    pub param: [f64; 2],
    pub residual: f64,
    /// `|det J|` of `(x, y) ↦ (Re z₁, Re z₂)` at the point.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BridgeSearch {
    pub points: Vec<BridgePoint>,
    pub seeds: usize,
    /// Seeds whose Newton iteration did not converge inside the domain.
    pub newton_failures: usize,
}

/// Zeros of `(Re z₁, Re z₂)` on the graph, seeded from a uniform grid.
pub fn bridge_points(g: &GraphSurface, q: &PolyhedronQM, tol: f64) -> Result<BridgeSearch> {
    bridge_points_with(g, q, tol, DEFAULT_SEEDS)
}

pub fn bridge_points_with(
    g: &GraphSurface,
    q: &PolyhedronQM,
    tol: f64,
    seeds: usize,
) -> Result<BridgeSearch> {
    g.validate()?;
    let [x0, x1, y0, y1] = g.domain;
    let diam = g.diameter();
    let mut found: Vec<BridgePoint> = Vec::new();
    let mut failures = 0;
    for j in 0..seeds {
        for i in 0..seeds {
            let sx = x0 + (x1 - x0) * (i as f64 + 0.5) / seeds as f64;
            let sy = y0 + (y1 - y0) * (j as f64 + 0.5) / seeds as f64;
            let Some(bp) = newton(g, sx, sy, tol) else {
                failures += 1;
                continue;
            };
            if g.clipped() && !q.contains(&bp.point) {
                continue;
            }
            let dup = found.iter().any(|f| {
                (f.param[0] - bp.param[0]).hypot(f.param[1] - bp.param[1]) < DEDUP_FRACTION * diam
            });
            if !dup {
                found.push(bp);
            }
        }
    }
    found.sort_by(|a, b| {
        (a.param[1], a.param[0])
            .partial_cmp(&(b.param[1], b.param[0]))
            .expect("finite parameters")
    });
    Ok(BridgeSearch {
        points: found,
        seeds: seeds * seeds,
        newton_failures: failures,
    })
}

fn newton(g: &GraphSurface, mut x: f64, mut y: f64, tol: f64) -> Option<BridgePoint> {
    let diam = g.diameter();
    for _ in 0..80 {
        let (f, j) = g.real_parts(x, y);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let dx = (j[1][1] * f[0] - j[0][1] * f[1]) / det;
        let dy = (-j[1][0] * f[0] + j[0][0] * f[1]) / det;
        x -= dx;
        y -= dy;
        if !x.is_finite() || !y.is_finite() || !g.in_domain(x, y) && dx.hypot(dy) > diam {
            return None;
        }
        if dx.hypot(dy) <= 1e-15 * diam.max(x.abs().max(y.abs())) {
            break;
        }
    }
    if !g.in_domain(x, y) {
        return None;
    }
    let (f, j) = g.real_parts(x, y);
    let residual = f[0].hypot(f[1]);
    if residual >= tol {
        return None;
    }
    Some(BridgePoint {
        point: g.eval(x, y),
        param: [x, y],
        residual,
        margin: (j[0][0] * j[1][1] - j[0][1] * j[1][0]).abs(),
    })
}

/// Real parts `(x₁, x₂)` and `Q_M` membership sampled on a vertex grid.
struct Grid {
    n: usize,
    xs: Vec<f64>,
    ys: Vec<f64>,
    re: Vec<[f64; 2]>,
    inside: Vec<bool>,
}

impl Grid {
    fn sample(g: &GraphSurface, q: &PolyhedronQM, n: usize, exec: Exec) -> Grid {
        let [x0, x1, y0, y1] = g.domain;
        let xs: Vec<f64> = (0..=n).map(|i| x0 + (x1 - x0) * i as f64 / n as f64).collect();
        let ys: Vec<f64> = (0..=n).map(|j| y0 + (y1 - y0) * j as f64 / n as f64).collect();
        let rows = exec.map(n + 1, |j| {
            xs.iter()
                .map(|&x| {
                    let p = g.eval(x, ys[j]);
                    ([p.x1, p.x2], !g.clipped() || q.contains(&p))
                })
                .collect::<Vec<_>>()
        });
        let (re, inside) = rows.into_iter().flatten().unzip();
        Grid { n, xs, ys, re, inside }
    }

    fn at(&self, i: usize, j: usize) -> usize {
        j * (self.n + 1) + i
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TangleTrace {
    pub components: u32,
    /// One polyline of parameter points `(x, y)` per component.
    pub polylines: Vec<Vec<[f64; 2]>>,
    /// Saddle cells whose center value was too small to resolve.
    pub ambiguous_cells: u32,
}

/// Traces `{φ_λ ∘ G = 0, φ_{λ−1} ∘ G ≥ 0}`, the part of the graph in
/// `Z_λ ∩ Z_{λ+1}`, by marching squares.
pub fn tangle_trace(g: &GraphSurface, s: Sector, q: &PolyhedronQM, grid_n: usize) -> Result<TangleTrace> {
    if grid_n < 64 {
        return Err(Error::Invalid(format!("grid of {grid_n} cells is below the minimum of 64")));
    }
    g.validate()?;
    let grid = Grid::sample(g, q, grid_n, Exec::default());
    Ok(trace_on(g, q, &grid, s))
}

fn trace_on(g: &GraphSurface, q: &PolyhedronQM, grid: &Grid, s: Sector) -> TangleTrace {
    let n = grid.n;
    let f: Vec<f64> = grid.re.iter().map(|r| phi(s, r[0], r[1])).collect();
    let pos = |v: usize| f[v] >= 0.0;
    let horizontal = |i: usize, j: usize| j * n + i;
    let vertical = |i: usize, j: usize| n * (n + 1) + j * (n + 1) + i;
    let edges = 2 * n * (n + 1);

    // Crossing point on each sign-changing edge, kept when it lies in the
    // right half of the level line (and in Q_M for clipped graphs).
    let mut crossing: Vec<Option<[f64; 2]>> = vec![None; edges];
    let mut consider = |id: usize, a: usize, b: usize, pa: [f64; 2], pb: [f64; 2]| {
        if pos(a) == pos(b) {
            return;
        }
        let t = f[a] / (f[a] - f[b]);
        let x = pa[0] + t * (pb[0] - pa[0]);
        let y = pa[1] + t * (pb[1] - pa[1]);
        let p = g.eval(x, y);
        if phi(s.prev(), p.x1, p.x2) >= 0.0 && (!g.clipped() || q.contains(&p)) {
            crossing[id] = Some([x, y]);
        }
    };
    for j in 0..=n {
        for i in 0..=n {
            let here = [grid.xs[i], grid.ys[j]];
            if i < n {
                consider(horizontal(i, j), grid.at(i, j), grid.at(i + 1, j), here, [grid.xs[i + 1], grid.ys[j]]);
            }
            if j < n {
                consider(vertical(i, j), grid.at(i, j), grid.at(i, j + 1), here, [grid.xs[i], grid.ys[j + 1]]);
            }
        }
    }

    let mut uf = UnionFind::new(edges);
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); edges];
    let mut ambiguous = 0;
    let mut link = |a: usize, b: usize, uf: &mut UnionFind| {
        if crossing[a].is_some() && crossing[b].is_some() {
            uf.union(a, b);
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
    };
    for j in 0..n {
        for i in 0..n {
            let corners = [grid.at(i, j), grid.at(i + 1, j), grid.at(i + 1, j + 1), grid.at(i, j + 1)];
            // bottom, right, top, left
            let sides = [horizontal(i, j), vertical(i + 1, j), horizontal(i, j + 1), vertical(i, j)];
            let changes: Vec<usize> = (0..4)
                .filter(|&k| pos(corners[k]) != pos(corners[(k + 1) % 4]))
                .map(|k| sides[k])
                .collect();
            match changes.len() {
                2 => link(changes[0], changes[1], &mut uf),
                4 => {
                    let cx = 0.5 * (grid.xs[i] + grid.xs[i + 1]);
                    let cy = 0.5 * (grid.ys[j] + grid.ys[j + 1]);
                    let c = g.eval(cx, cy);
                    let fc = phi(s, c.x1, c.x2);
                    let scale = corners.iter().map(|&v| f[v].abs()).fold(0.0, f64::max);
                    if fc.abs() <= 1e-12 * scale {
                        ambiguous += 1;
                    }
                    if (fc >= 0.0) == pos(corners[0]) {
                        link(sides[0], sides[1], &mut uf);
                        link(sides[2], sides[3], &mut uf);
                    } else {
                        link(sides[0], sides[3], &mut uf);
                        link(sides[1], sides[2], &mut uf);
                    }
                }
                _ => {}
            }
        }
    }

    let kept: Vec<usize> = (0..edges).filter(|&e| crossing[e].is_some()).collect();
    let mut roots: Vec<usize> = kept.iter().map(|&e| uf.find(e)).collect();
    roots.sort_unstable();
    roots.dedup();

    let mut visited = vec![false; edges];
    let mut polylines = Vec::new();
    let walk = |start: usize, visited: &mut Vec<bool>| {
        let mut line = Vec::new();
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            visited[cur] = true;
            line.push(crossing[cur].expect("kept crossing"));
            let next = adjacency[cur].iter().copied().find(|&e| e != prev && !visited[e]);
            match next {
                Some(e) => {
                    prev = cur;
                    cur = e;
                }
                None => break,
            }
        }
        line
    };
    for &e in kept.iter().filter(|&&e| adjacency[e].len() < 2) {
        if !visited[e] {
            polylines.push(walk(e, &mut visited));
        }
    }
    for &e in &kept {
        if !visited[e] {
            polylines.push(walk(e, &mut visited));
        }
    }

    TangleTrace {
        components: roots.len() as u32,
        polylines,
        ambiguous_cells: ambiguous,
    }
}

/// Connected components of the open sector `Z_λ` on the sampled graph.
fn patches_on(grid: &Grid, s: Sector) -> u32 {
    let n = grid.n;
    let member: Vec<bool> = grid
        .re
        .iter()
        .zip(&grid.inside)
        .map(|(r, &inside)| inside && in_open_sector(s, r[0], r[1]))
        .collect();
    let mut uf = UnionFind::new(member.len());
    for j in 0..=n {
        for i in 0..=n {
            let v = grid.at(i, j);
            if !member[v] {
                continue;
            }
            if i < n && member[v + 1] {
                uf.union(v, v + 1);
            }
            if j < n && member[grid.at(i, j + 1)] {
                uf.union(v, grid.at(i, j + 1));
            }
        }
    }
    let mut roots: Vec<usize> = (0..member.len()).filter(|&v| member[v]).map(|v| uf.find(v)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertifyOptions {
    pub residual_tol: f64,
    pub grid: usize,
    pub seeds: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            residual_tol: DEFAULT_RESIDUAL_TOL,
            grid: DEFAULT_GRID,
            seeds: DEFAULT_SEEDS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub residual: f64,
    pub transversality: f64,
    pub separation: f64,
    pub dedup_fraction: f64,
    pub grid: usize,
    pub seeds: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCounts {
    pub points: u32,
    pub arcs: [u32; 3],
    pub patches: [u32; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BridgeCertificate {
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub bridge_points: Vec<BridgePoint>,
    /// Tangle components in `H₁, H₂, H₃` with `H_λ = Z_λ ∩ Z_{λ−1}`.
    pub arcs_per_handlebody: [u32; 3],
    pub patches_per_sector: [u32; 3],
    pub transversality_margins: Vec<f64>,
    pub per_graph: Vec<GraphCounts>,
    /// Smallest distance in `C²` between two bridge points.
    pub min_separation: Option<f64>,
    pub newton_failures: usize,
    pub ambiguous_cells: u32,
    pub tolerances: Tolerances,
    pub valid: bool,
    pub failures: Vec<String>,
}

impl BridgeCertificate {
    pub fn counts(&self) -> GraphCounts {
        GraphCounts {
            points: self.bridge_points.len() as u32,
            arcs: self.arcs_per_handlebody,
            patches: self.patches_per_sector,
        }
    }

    /// Whether the certified counts are those of `declared`.
    pub fn matches(&self, declared: &BridgeSurfaceData) -> bool {
        let c = self.counts();
        c.points == declared.bridge_points && c.arcs == declared.arcs && c.patches == declared.patches
    }
}

pub fn certify_bridge_position(
    family: &[GraphSurface],
    q: &PolyhedronQM,
    r: f64,
    tol: f64,
) -> Result<BridgeCertificate> {
    let opts = CertifyOptions {
        residual_tol: tol,
        ..CertifyOptions::default()
    };
    certify_with(family, q, r, &opts, Exec::default())
}

pub fn certify_with(
    family: &[GraphSurface],
    q: &PolyhedronQM,
    r: f64,
    opts: &CertifyOptions,
    exec: Exec,
) -> Result<BridgeCertificate> {
    if opts.grid < 64 {
        return Err(Error::Invalid(format!("grid of {} cells is below the minimum of 64", opts.grid)));
    }
    let tol = opts.residual_tol;
    let mut points = Vec::new();
    let mut per_graph = Vec::new();
    let mut newton_failures = 0;
    let mut ambiguous_cells = 0;
    let mut arcs = [0; 3];
    let mut patches = [0; 3];
    for g in family {
        g.validate()?;
        let search = bridge_points_with(g, q, tol, opts.seeds)?;
        newton_failures += search.newton_failures;
        let grid = Grid::sample(g, q, opts.grid, exec);
        let mut counts = GraphCounts {
            points: search.points.len() as u32,
            arcs: [0; 3],
            patches: [0; 3],
        };
        for h in Sector::ALL {
            let t = trace_on(g, q, &grid, h.prev());
            ambiguous_cells += t.ambiguous_cells;
            counts.arcs[h.idx()] = t.components;
            counts.patches[h.idx()] = patches_on(&grid, h);
        }
        for i in 0..3 {
            arcs[i] += counts.arcs[i];
            patches[i] += counts.patches[i];
        }
        per_graph.push(counts);
        points.extend(search.points);
    }

    let mut min_separation: Option<f64> = None;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let d = a.point.distance(&b.point);
            min_separation = Some(min_separation.map_or(d, |m| m.min(d)));
        }
    }
    let tolerances = Tolerances {
        residual: tol,
        transversality: tol,
        separation: tol * 1e3,
        dedup_fraction: DEDUP_FRACTION,
        grid: opts.grid,
        seeds: opts.seeds,
    };
    let mut failures = Vec::new();
    if let Some(d) = min_separation.filter(|&d| d <= tolerances.separation) {
        failures.push(format!("bridge points only {d:e} apart"));
    }
    for bp in &points {
        if bp.residual >= tol {
            failures.push(format!("residual {:e} at {:?}", bp.residual, bp.param));
        }
        if bp.margin < tolerances.transversality {
            failures.push(format!("transversality margin {:e} at {:?}", bp.margin, bp.param));
        }
    }
    if ambiguous_cells > 0 {
        failures.push(format!("{ambiguous_cells} unresolved saddle cells; refine the grid"));
    }
    Ok(BridgeCertificate {
        m: q.m(),
        r,
        transversality_margins: points.iter().map(|p| p.margin).collect(),
        bridge_points: points,
        arcs_per_handlebody: arcs,
        patches_per_sector: patches,
        per_graph,
        min_separation,
        newton_failures,
        ambiguous_cells,
        tolerances,
        valid: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::graph::{GraphKind, Scene};

    fn q() -> PolyhedronQM {
        PolyhedronQM::new(100.0).unwrap()
    }

    #[test]
    fn linear_member_point() {
        for k in 1..=3 {
            let g = GraphSurface::linear_member(k, 100.0, 10.0, 0.0);
            let s = bridge_points(&g, &q(), 1e-9).unwrap();
            assert_eq!(s.points.len(), 1);
            let p = s.points[0];
            let expect = PointC2::new(0.0, 10.0 * f64::from(k), 0.0, 10.0 * f64::from(k));
            assert!(p.point.distance(&expect) < 1e-12);
            assert!((p.margin - 0.01).abs() < 1e-12);
        }
    }

    #[test]
    fn rotated_line_through_origin() {
        let g = GraphSurface {
            theta: 2.0 * std::f64::consts::PI / 3.0,
            translation: [0.0; 4],
            domain: [-1.0, 1.0, -1.0, 1.0],
            ..GraphSurface::linear_member(1, 10.0, 1.0, 0.0)
        };
        let s = bridge_points(&g, &PolyhedronQM::new(10.0).unwrap(), 1e-9).unwrap();
        assert_eq!(s.points.len(), 1);
        assert!(s.points[0].point.distance(&PointC2::ORIGIN) < 1e-12);
    }

    #[test]
    fn pleat_points() {
        let a: f64 = 1.01;
        let g = GraphSurface {
            kind: GraphKind::Cubic,
            epsilon: 0.01,
            theta: 0.0,
            translation: [0.0, 0.0, a, 0.0],
            domain: [-a - 0.1, -a + 0.1, -2.5, 2.5],
            pleated: true,
        };
        let s = bridge_points(&g, &q(), 1e-9).unwrap();
        let ys: Vec<f64> = s.points.iter().map(|p| p.param[1]).collect();
        let h = (3.0 * a * a - 1.0).sqrt();
        assert_eq!(ys.len(), 3);
        for (got, want) in ys.iter().zip([-h, 0.0, h]) {
            assert!((got - want).abs() < 1e-10);
        }
        assert!(s.points.iter().all(|p| (p.param[0] + a).abs() < 1e-10));
    }

    #[test]
    fn linear_traces() {
        let g = GraphSurface::linear_member(1, 100.0, 10.0, 0.0);
        for s in Sector::ALL {
            let t = tangle_trace(&g, s, &q(), 128).unwrap();
            assert_eq!(t.components, 1, "sector {s}");
            assert_eq!(t.polylines.len(), 1);
        }
        // φ₁ ∘ G_k = x: the arc sits on x = 0.
        let t = tangle_trace(&g, Sector::ONE, &q(), 129).unwrap();
        assert!(t.polylines[0].iter().all(|p| p[0].abs() < 1e-15));
        assert!(tangle_trace(&g, Sector::ONE, &q(), 32).is_err());
    }

    #[test]
    fn family_counts() {
        for n in 1..=3usize {
            let scene = Scene::family(100.0, 10.0, &vec![None; n]);
            let c = certify_bridge_position(&scene.graphs, &q(), 10.0, 1e-9).unwrap();
            assert!(c.valid, "{:?}", c.failures);
            let n = n as u32;
            assert_eq!(c.counts(), GraphCounts { points: n, arcs: [n; 3], patches: [n; 3] });
            assert!(c.matches(&BridgeSurfaceData::trivial_disks(n)));
        }
    }

    #[test]
    fn pleats_double_one_patch() {
        for target in Sector::ALL {
            let scene = Scene::family(100.0, 10.0, &[None, Some(target)]);
            let c = certify_bridge_position(&scene.graphs, &q(), 10.0, 1e-9).unwrap();
            assert!(c.valid, "{:?}", c.failures);
            let mut patches = [2; 3];
            patches[target.idx()] += 1;
            assert_eq!(c.counts(), GraphCounts { points: 4, arcs: [3; 3], patches }, "target {target}");
        }
    }
}
