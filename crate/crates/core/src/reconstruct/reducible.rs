use serde::{Deserialize, Serialize};

use crate::trisection::smith::{solve_integer, IntMatrix};
use crate::trisection::{connected_sum, RelTrisectionParams, SpineEncoding, TrisectionDiagram, TrisectionParams};
use crate::{Error, Result, Sector};

/// A trisection together with a reducing curve `δ` and the summands it splits off.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleTrisection {
    pub params: TrisectionParams,
    /// Class of `δ` in `Z^{2g}`; zero for separating curves.
    pub delta: Vec<i64>,
    pub summands: [TrisectionParams; 2],
}

impl ReducibleTrisection {
    pub fn validate(&self) -> Result<()> {
        let sum = connected_sum(&self.summands[0], &self.summands[1])?;
        if sum != self.params {
            return Err(Error::Invalid(format!(
                "summands sum to ({};{:?}), not ({};{:?})",
                sum.genus, sum.k, self.params.genus, self.params.k
            )));
        }
        if self.delta.len() != 2 * self.params.genus as usize {
            return Err(Error::Mismatch(format!(
                "δ has {} coordinates for genus {}",
                self.delta.len(),
                self.params.genus
            )));
        }
        Ok(())
    }
}

/// The connected sum `a # b`, reducible along the separating curve of the sum.
/// The reducing `S³` meets each sector in a ball, so it is trisected in the
/// standard way.
pub fn make_reducible(a: &TrisectionParams, b: &TrisectionParams) -> Result<ReducibleTrisection> {
    let params = connected_sum(a, b)?;
    Ok(ReducibleTrisection {
        delta: vec![0; 2 * params.genus as usize],
        params,
        summands: [*a, *b],
    })
}

/// Whether `delta` lies in the integer span of every cut system.
///
/// Bounding a disk in `H_λ` forces this; it is not sufficient.
pub fn reducibility_necessary(d: &TrisectionDiagram, delta: &[i64]) -> Result<bool> {
    let dim = 2 * d.genus as usize;
    if delta.len() != dim {
        return Err(Error::Mismatch(format!("δ has {} coordinates, diagram genus {}", delta.len(), d.genus)));
    }
    d.validate().into_result("diagram")?;
    Ok(Sector::ALL.into_iter().all(|s| {
        let sys = d.cut_system(s);
        if delta.iter().all(|&x| x == 0) {
            return true;
        }
        !sys.is_empty() && solve_integer(&IntMatrix::from_columns(sys, dim), delta).is_some()
    }))
}

/// Handle counts `k_λ = j_{1,λ} + j_{2,λ}` split between the two sides of a
/// reducing sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplittingData {
    pub j1: [u32; 3],
    pub j2: [u32; 3],
}

impl SplittingData {
    pub fn trivial(k: [u32; 3]) -> Self {
        SplittingData { j1: k, j2: [0; 3] }
    }

    pub fn totals(&self) -> [u32; 3] {
        [0, 1, 2].map(|i| self.j1[i] + self.j2[i])
    }

    pub fn complement(&self) -> Self {
        SplittingData { j1: self.j2, j2: self.j1 }
    }

    pub fn validate_for(&self, p: &TrisectionParams) -> Result<()> {
        if self.totals() != p.k {
            return Err(Error::Invalid(format!(
                "splitting {:?} + {:?} does not sum to k = {:?}",
                self.j1, self.j2, p.k
            )));
        }
        Ok(())
    }

    /// Every splitting of `k`, in lexicographic order of `j2`.
    pub fn enumerate(k: [u32; 3]) -> Vec<SplittingData> {
        let mut out = Vec::new();
        for a in 0..=k[0] {
            for b in 0..=k[1] {
                for c in 0..=k[2] {
                    out.push(SplittingData {
                        j1: [k[0] - a, k[1] - b, k[2] - c],
                        j2: [a, b, c],
                    });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "diffeomorphic-by-spine")]
    DiffeomorphicBySpine,
    #[serde(rename = "indeterminate")]
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructionResult {
    pub z_params: RelTrisectionParams,
    pub z_sector_ranks: [u32; 3],
    pub spine: SpineEncoding,
    pub verdict: Verdict,
}

/// Relative trisection of the piece `Z` cut off by the reducing sphere:
/// boundary data from `rel_base`, sector ranks `j₂`. The verdict compares
/// the spine of `Z` with the spine on the other side.
pub fn reconstruct_z(
    r: &ReducibleTrisection,
    s: &SplittingData,
    rel_base: &RelTrisectionParams,
    z_spine: &TrisectionDiagram,
    b_spine: &TrisectionDiagram,
) -> Result<ReconstructionResult> {
    r.validate()?;
    s.validate_for(&r.params)?;
    rel_base.validate().into_result("relative base")?;
    let z_params = RelTrisectionParams::new(rel_base.genus, s.j2, rel_base.page_genus, rel_base.boundary_components);
    z_params.validate().into_result("reconstructed piece")?;
    for (what, d) in [("Z", z_spine), ("B", b_spine)] {
        d.validate().into_result(&format!("{what} spine"))?;
        if d.genus != rel_base.genus || d.boundary_components != rel_base.boundary_components {
            return Err(Error::Mismatch(format!(
                "{what} spine has genus {} with {} boundary components, base has {} and {}",
                d.genus, d.boundary_components, rel_base.genus, rel_base.boundary_components
            )));
        }
    }
    let spine = SpineEncoding::new(z_spine.clone());
    let verdict = if spine.spine_equal(&SpineEncoding::new(b_spine.clone())) {
        Verdict::DiffeomorphicBySpine
    } else {
        Verdict::Indeterminate
    };
    Ok(ReconstructionResult {
        z_params,
        z_sector_ranks: s.j2,
        spine,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trisection::unbalanced_s4_diagram;

    fn tp(g: u32, k: [u32; 3]) -> TrisectionParams {
        TrisectionParams::new(g, k)
    }

    fn empty_spine(genus: u32, b: u32) -> TrisectionDiagram {
        TrisectionDiagram {
            genus,
            boundary_components: b,
            cut_systems: [vec![], vec![], vec![]],
        }
    }

    #[test]
    fn reducible_examples() {
        let s4 = make_reducible(&tp(0, [0; 3]), &tp(0, [0; 3])).unwrap();
        assert_eq!(s4.params, tp(0, [0; 3]));
        assert!(s4.delta.is_empty());
        let r = make_reducible(&tp(1, [1, 0, 0]), &tp(1, [0, 1, 0])).unwrap();
        assert_eq!(r.params, tp(2, [1, 1, 0]));
        assert_eq!(r.delta, vec![0; 4]);
        assert_eq!(r.summands, [tp(1, [1, 0, 0]), tp(1, [0, 1, 0])]);
        assert!(make_reducible(&tp(0, [1, 0, 0]), &tp(0, [0; 3])).is_err());
    }

    #[test]
    fn necessary_condition() {
        let d = unbalanced_s4_diagram(Sector::ONE);
        assert!(reducibility_necessary(&d, &[0, 0]).unwrap());
        assert!(!reducibility_necessary(&d, &d.cut_systems[2][0]).unwrap());
        assert!(!reducibility_necessary(&d, &d.cut_systems[0][0]).unwrap());
        assert!(reducibility_necessary(&d, &[0, 0, 0, 0]).is_err());
    }

    #[test]
    fn splittings() {
        let all = SplittingData::enumerate([2, 1, 0]);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|s| s.totals() == [2, 1, 0]));
        let s = SplittingData { j1: [1, 0, 0], j2: [1, 1, 0] };
        assert!(s.validate_for(&tp(2, [2, 1, 0])).is_ok());
        assert!(s.validate_for(&tp(2, [1, 1, 0])).is_err());
    }

    #[test]
    fn reconstruction() {
        let r = make_reducible(&tp(0, [0; 3]), &tp(0, [0; 3])).unwrap();
        let base = RelTrisectionParams::standard_ball();
        let spine = empty_spine(0, 1);
        let out = reconstruct_z(&r, &SplittingData::trivial([0; 3]), &base, &spine, &spine).unwrap();
        assert_eq!(out.z_params, base);
        assert_eq!(out.verdict, Verdict::DiffeomorphicBySpine);

        let r = make_reducible(&tp(1, [1, 1, 0]), &tp(1, [1, 0, 0])).unwrap();
        let base = RelTrisectionParams::new(1, [0; 3], 0, 1);
        let s = SplittingData { j1: [1, 0, 0], j2: [1, 1, 0] };
        let z = TrisectionDiagram {
            genus: 1,
            boundary_components: 1,
            cut_systems: [vec![vec![1, 0]], vec![], vec![vec![0, 1]]],
        };
        let out = reconstruct_z(&r, &s, &base, &z, &z).unwrap();
        assert_eq!(out.z_sector_ranks, [1, 1, 0]);
        assert_eq!(out.z_params, RelTrisectionParams::new(1, [1, 1, 0], 0, 1));
        assert_eq!(out.verdict, Verdict::DiffeomorphicBySpine);
        let other = TrisectionDiagram {
            cut_systems: [vec![vec![0, 1]], vec![], vec![vec![0, 1]]],
            ..z.clone()
        };
        assert_eq!(reconstruct_z(&r, &s, &base, &z, &other).unwrap().verdict, Verdict::Indeterminate);
        let bad = SplittingData { j1: [0; 3], j2: [0; 3] };
        assert!(reconstruct_z(&r, &bad, &base, &z, &z).is_err());
        assert!(reconstruct_z(&r, &s, &base, &empty_spine(0, 1), &z).is_err());
    }
}
