use std::fmt;

use serde::{Deserialize, Serialize};

use super::smith::{cokernel, IntMatrix};
use crate::{violation, Error, Result, Sector, ValidationReport};

/// Homology classes in `H₁(Σ_g) ≅ Z^{2g}` of the curves of one cut system.
pub type CutSystem = Vec<Vec<i64>>;

/// The standard symplectic pairing on `Z^{2g}`: with coordinates
/// `(a₁..a_g, b₁..b_g)`, `⟨a_i, b_i⟩ = 1 = −⟨b_i, a_i⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionForm {
    pub genus: u32,
}

impl IntersectionForm {
    pub fn new(genus: u32) -> Self {
        IntersectionForm { genus }
    }

    pub fn dim(&self) -> usize {
        2 * self.genus as usize
    }

    pub fn pair(&self, u: &[i64], v: &[i64]) -> i64 {
        let g = self.genus as usize;
        debug_assert_eq!(u.len(), 2 * g);
        debug_assert_eq!(v.len(), 2 * g);
        (0..g).map(|i| u[i] * v[g + i] - u[g + i] * v[i]).sum()
    }

    /// `M_ij = ⟨a_i, b_j⟩`.
    pub fn pairing_matrix(&self, a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
        let rows: Vec<Vec<i64>> = a
            .iter()
            .map(|u| b.iter().map(|v| self.pair(u, v)).collect())
            .collect();
        if rows.is_empty() {
            IntMatrix::zeros(0, b.len())
        } else {
            IntMatrix::from_rows(&rows)
        }
    }
}

/// Homological shadow of a trisection diagram: three cut systems on the
/// central surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrisectionDiagram {
    pub genus: u32,
    pub boundary_components: u32,
    pub cut_systems: [CutSystem; 3],
}

impl TrisectionDiagram {
    pub fn form(&self) -> IntersectionForm {
        IntersectionForm::new(self.genus)
    }

    pub fn cut_system(&self, s: Sector) -> &CutSystem {
        &self.cut_systems[s.idx()]
    }

    pub fn validate(&self) -> ValidationReport {
        let form = self.form();
        let dim = form.dim();
        let mut out = Vec::new();
        for s in Sector::ALL {
            let sys = self.cut_system(s);
            let closed = self.boundary_components == 0;
            if closed && sys.len() != self.genus as usize {
                out.push(violation(
                    format!("cut system {s} size"),
                    format!("{} curves, genus {}", sys.len(), self.genus),
                ));
            } else if !closed && sys.len() > self.genus as usize {
                out.push(violation(
                    format!("cut system {s} size"),
                    format!("{} curves exceed genus {}", sys.len(), self.genus),
                ));
            }
            if let Some(v) = sys.iter().find(|v| v.len() != dim) {
                out.push(violation(
                    format!("cut system {s} dimension"),
                    format!("class of length {} in Z^{dim}", v.len()),
                ));
                continue;
            }
            for (i, v) in sys.iter().enumerate() {
                if gcd_all(v) != 1 {
                    out.push(violation(
                        format!("cut system {s} primitive"),
                        format!("curve {} has class {v:?}", i + 1),
                    ));
                }
            }
            for i in 0..sys.len() {
                for j in i + 1..sys.len() {
                    let p = form.pair(&sys[i], &sys[j]);
                    if p != 0 {
                        out.push(violation(
                            format!("cut system {s} isotropic"),
                            format!("curves {} and {} pair to {p}", i + 1, j + 1),
                        ));
                    }
                }
            }
            if !sys.is_empty() && independent_rank(sys, dim) < sys.len() {
                out.push(violation(
                    format!("cut system {s} independent"),
                    "classes are linearly dependent".to_string(),
                ));
            }
        }
        ValidationReport::from_violations(out)
    }

    /// Sign-normalize every class (first non-zero entry positive) and sort
    /// each cut system lexicographically.
    pub fn normalized(&self) -> TrisectionDiagram {
        let mut cut_systems = self.cut_systems.clone();
        for sys in &mut cut_systems {
            for v in sys.iter_mut() {
                if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
            }
            sys.sort();
        }
        TrisectionDiagram {
            genus: self.genus,
            boundary_components: self.boundary_components,
            cut_systems,
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

fn independent_rank(sys: &[Vec<i64>], dim: usize) -> usize {
    super::smith::smith_normal_form(&IntMatrix::from_columns(sys, dim)).rank()
}

/// A diagram paired with its canonical form, used to compare spines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpineEncoding {
    pub diagram: TrisectionDiagram,
    pub canonical_form: TrisectionDiagram,
}

impl SpineEncoding {
    pub fn new(diagram: TrisectionDiagram) -> Self {
        let canonical_form = diagram.normalized();
        SpineEncoding {
            diagram,
            canonical_form,
        }
    }

    /// Syntactic equality of canonical forms. `true` certifies that the
    /// trisected manifolds are diffeomorphic; `false` certifies nothing.
    pub fn spine_equal(&self, other: &SpineEncoding) -> bool {
        self.canonical_form == other.canonical_form
    }
}

/// Finitely generated abelian group `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// First homology of the 3-manifold `H_A ∪_Σ H_B`, the cokernel of the
/// pairing matrix `M_ij = ⟨A_i, B_j⟩`.
pub fn heegaard_h1(form: &IntersectionForm, a: &[Vec<i64>], b: &[Vec<i64>]) -> Result<AbelianGroup> {
    let dim = form.dim();
    if let Some(v) = a.iter().chain(b).find(|v| v.len() != dim) {
        return Err(Error::Mismatch(format!(
            "class of length {} for genus {}",
            v.len(),
            form.genus
        )));
    }
    if a.len() != b.len() {
        return Err(Error::Mismatch(format!(
            "cut systems of sizes {} and {}",
            a.len(),
            b.len()
        )));
    }
    let m = form.pairing_matrix(a, b);
    let (rank, torsion) = cokernel(&m);
    Ok(AbelianGroup { rank, torsion })
}

/// Genus-1 diagram of the unbalanced trisection `T_λ` of `S⁴`: the curves
/// bounding in `H_λ` and `H_{λ+1}` are parallel, the remaining one is dual.
pub fn unbalanced_s4_diagram(sector: Sector) -> TrisectionDiagram {
    let mut cut_systems: [CutSystem; 3] = [vec![vec![1, 0]], vec![vec![1, 0]], vec![vec![1, 0]]];
    cut_systems[sector.prev().idx()] = vec![vec![0, 1]];
    TrisectionDiagram {
        genus: 1,
        boundary_components: 0,
        cut_systems,
    }
}
