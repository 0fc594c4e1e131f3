use serde::{Deserialize, Serialize};

use super::perm::{orbits, Permutation};
use crate::{violation, Error, Result, ValidationReport};

/// Degree and meridian images of a branched cover, one image per component
/// of the branch locus, in the declared order `k = 1, …, n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyRep {
    pub degree: usize,
    pub meridian_images: Vec<Permutation>,
}

/// JSON form: `{"degree": d, "meridians": [[i, j], …]}` with 1-based sheets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyWire {
    pub degree: usize,
    pub meridians: Vec<[usize; 2]>,
}

impl MonodromyRep {
    /// The unbranched degree-`d` cover.
    pub fn unbranched(degree: usize) -> Self {
        MonodromyRep {
            degree,
            meridian_images: Vec::new(),
        }
    }

    pub fn components(&self) -> usize {
        self.meridian_images.len()
    }

    pub fn is_simple(&self) -> bool {
        self.meridian_images.iter().all(Permutation::is_transposition)
    }

    pub fn is_transitive(&self) -> bool {
        orbits(self.degree, &self.meridian_images).len() == 1
    }

    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        if self.degree == 0 {
            out.push(violation("degree", "degree must be positive"));
        }
        for (k, p) in self.meridian_images.iter().enumerate() {
            if p.degree() != self.degree {
                out.push(violation(
                    "degree",
                    format!("meridian {} has degree {}", k + 1, p.degree()),
                ));
            } else if !p.is_transposition() {
                out.push(violation(
                    "simple",
                    format!("meridian {} maps to {p}", k + 1),
                ));
            }
        }
        if out.is_empty() && !self.is_transitive() {
            out.push(violation("transitive", "monodromy group is not transitive"));
        }
        ValidationReport::from_violations(out)
    }

    /// Product of the meridian images in order: the monodromy around the
    /// boundary of a disk meeting each component once.
    pub fn boundary_monodromy(&self) -> Permutation {
        self.meridian_images
            .iter()
            .fold(Permutation::identity(self.degree), |acc, p| acc.then(p))
    }

    pub fn to_wire(&self) -> Result<MonodromyWire> {
        let meridians = self
            .meridian_images
            .iter()
            .map(|p| {
                p.as_transposition()
                    .map(|(i, j)| [i, j])
                    .ok_or_else(|| Error::NotSimple(format!("{p} is not a transposition")))
            })
            .collect::<Result<_>>()?;
        Ok(MonodromyWire {
            degree: self.degree,
            meridians,
        })
    }

    pub fn from_wire(w: &MonodromyWire) -> Result<Self> {
        let meridian_images = w
            .meridians
            .iter()
            .map(|&[i, j]| Permutation::transposition(w.degree, i, j))
            .collect::<Result<_>>()?;
        Ok(MonodromyRep {
            degree: w.degree,
            meridian_images,
        })
    }
}

/// Degree `n + 1` monodromy sending the `k`-th meridian to `(k k+1)`.
pub fn standard_rho(n: usize) -> Result<MonodromyRep> {
    if n == 0 {
        return Err(Error::Invalid("standard monodromy needs n ≥ 1".into()));
    }
    let meridian_images = (1..=n)
        .map(|k| Permutation::transposition(n + 1, k, k + 1))
        .collect::<Result<_>>()?;
    Ok(MonodromyRep {
        degree: n + 1,
        meridian_images,
    })
}
