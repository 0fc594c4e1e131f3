//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use trisect::bridge::BridgeSurfaceData;

/// Euler characteristic from the handle decomposition of a `(g; k₁, k₂, k₃)`
/// trisection: one 0-handle, `k₁` 1-handles, `g − k₂` 2-handles, `k₃`
/// 3-handles and one 4-handle.
pub fn handle_euler(g: i64, k: [i64; 3]) -> i64 {
    1 - k[0] + (g - k[1]) - k[2] + 1
}

/// Euler characteristic of a relative trisection glued from its pieces:
/// three sectors `♮^k S¹×B³`, three compression bodies (handlebodies of
/// genus `g + p + b − 1`) and the central surface.
pub fn pieces_euler(g: i64, k: [i64; 3], p: i64, b: i64) -> i64 {
    let sectors: i64 = k.iter().map(|k| 1 - k).sum();
    let handlebodies = 3 * (1 - (g + p + b - 1));
    let central = 2 - 2 * g - b;
    sectors - handlebodies + central
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors (including zeros, up to `min(rows, cols)`) from
/// determinantal divisors: `d_k` is the gcd of all `k × k` minors and the
/// `k`-th factor is `d_k / d_{k−1}`.
pub fn invariant_factors(rows: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let r = rows.len();
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=r.min(cols) {
        let mut d = 0i128;
        for rs in subsets(r, k) {
            for cs in subsets(cols, k) {
                let minor = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| i128::from(rows[i][j])).collect())
                    .collect();
                d = gcd(d, det(minor));
            }
        }
        if d == 0 {
            out.extend(std::iter::repeat_n(0, r.min(cols) + 1 - k));
            break;
        }
        out.push((d / prev) as i64);
        prev = d;
    }
    out
}

/// Rank and torsion of the cokernel of an integer matrix, read off the
/// invariant factors.
pub fn cokernel_oracle(rows: &[Vec<i64>], cols: usize) -> (usize, Vec<i64>) {
    let f = invariant_factors(rows, cols);
    let nonzero = f.iter().filter(|&&x| x != 0).count();
    let torsion = f.iter().copied().filter(|&x| x > 1).collect();
    (rows.len() - nonzero, torsion)
}

/// A branched cover of the disk read off a cell structure: a star of slits
/// from a central vertex to the branch points plus one boundary vertex,
/// boundary loop and the complementary 2-cell. `branch` lists each branch
/// point's monodromy as 0-based image vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiskCover {
    pub euler: i64,
    pub components: usize,
    pub boundary: usize,
}

fn cycles(images: &[usize]) -> usize {
    let mut seen = vec![false; images.len()];
    let mut count = 0;
    for s in 0..images.len() {
        if !seen[s] {
            count += 1;
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                t = images[t];
            }
        }
    }
    count
}

pub fn slit_star_cover(d: usize, branch: &[Vec<usize>]) -> DiskCover {
    let n = branch.len() as i64;
    let d64 = d as i64;
    // Cells downstairs: vertices {centre, boundary vertex, branch points},
    // edges {slits, centre-to-boundary edge, boundary loop}, one 2-cell.
    let vertices = 2 * d64 + branch.iter().map(|b| cycles(b) as i64).sum::<i64>();
    let edges = d64 * (n + 2);
    let faces = d64;
    // Sheets of the 2-cell are glued across slit i by its monodromy.
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for b in branch {
        for (s, &t) in b.iter().enumerate() {
            let (a, c) = (find(&mut parent, s), find(&mut parent, t));
            parent[a] = c;
        }
    }
    let components = (0..d).filter(|&s| find(&mut parent, s) == s).count();
    let mut product: Vec<usize> = (0..d).collect();
    for b in branch {
        product = product.iter().map(|&s| b[s]).collect();
    }
    DiskCover {
        euler: vertices - edges + faces,
        components,
        boundary: cycles(&product),
    }
}

/// Transposition of sheets `0` and `j` in degree `d`, the standard meridian
/// of the `j`-th disk.
pub fn standard_meridian(d: usize, j: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..d).collect();
    v.swap(0, j);
    v
}

/// Upstairs relative parameters `(g, k; p, b)` of the pullback of the
/// standard trisection of `B⁴` along disks in bridge position, each disk
/// `j` carrying the meridian `(1, j+1)` of a cover of degree `n + 1`.
pub fn pullback_oracle(components: &[BridgeSurfaceData]) -> (i64, [i64; 3], i64, i64) {
    let d = components.len() + 1;
    let meridian = |j: usize| standard_meridian(d, j + 1);
    let repeat = |count: &dyn Fn(&BridgeSurfaceData) -> u32| -> Vec<Vec<usize>> {
        components
            .iter()
            .enumerate()
            .flat_map(|(j, c)| std::iter::repeat_n(meridian(j), count(c) as usize))
            .collect()
    };
    let central = slit_star_cover(d, &repeat(&|c| c.bridge_points));
    let page = slit_star_cover(d, &repeat(&|c| c.braid_index));
    let genus = (2 * central.components as i64 - central.boundary as i64 - central.euler) / 2;
    let page_genus = (2 * page.components as i64 - page.boundary as i64 - page.euler) / 2;
    let mut k = [0; 3];
    for (s, k) in k.iter_mut().enumerate() {
        let sector = slit_star_cover(d, &repeat(&|c| c.patches[s]));
        *k = 1 - sector.euler;
    }
    (genus, k, page_genus, central.boundary as i64)
}
