use serde::{Deserialize, Serialize};

use super::perm::{orbits, Permutation};
use crate::{Error, Result};

/// Euler characteristic and connected components of the preimage of a
/// stratum under a simple branched cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumLift {
    pub euler_char: i64,
    pub components: usize,
    pub per_component_euler: Vec<i64>,
}

/// Riemann–Hurwitz for a stratum of Euler characteristic `chi` with simple
/// branch points whose local monodromies are `branch`.
///
/// Sheets are grouped into orbits of the group generated by `ambient`
/// together with the branch transpositions (the latter are loops in the
/// complement, so in a consistent input they already lie in the ambient
/// group). Each branch point costs exactly one unit of Euler characteristic,
/// charged to the orbit its transposition moves.
pub fn lift_stratum(
    chi: i64,
    branch: &[Permutation],
    ambient: &[Permutation],
    degree: usize,
) -> Result<StratumLift> {
    if degree == 0 {
        return Err(Error::Invalid("degree must be positive".into()));
    }
    if let Some(p) = branch.iter().chain(ambient).find(|p| p.degree() != degree) {
        return Err(Error::Mismatch(format!(
            "permutation {p} has degree {}, expected {degree}",
            p.degree()
        )));
    }
    if let Some(p) = branch.iter().find(|p| !p.is_transposition()) {
        return Err(Error::NotSimple(format!("branch image {p}")));
    }
    let gens: Vec<Permutation> = ambient.iter().chain(branch).cloned().collect();
    let parts = orbits(degree, &gens);
    let mut owner = vec![0; degree];
    for (o, part) in parts.iter().enumerate() {
        for &s in part {
            owner[s] = o;
        }
    }
    let mut per_component_euler: Vec<i64> = parts.iter().map(|p| p.len() as i64 * chi).collect();
    for p in branch {
        per_component_euler[owner[p.moved()[0]]] -= 1;
    }
    Ok(StratumLift {
        euler_char: per_component_euler.iter().sum(),
        components: parts.len(),
        per_component_euler,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::standard_rho;

    #[test]
    fn disk_over_standard_monodromy() {
        for n in 1..7 {
            let rho = standard_rho(n).unwrap();
            let l = lift_stratum(1, &rho.meridian_images, &rho.meridian_images, n + 1).unwrap();
            assert_eq!((l.euler_char, l.components), (1, 1), "n = {n}");
        }
    }

    #[test]
    fn unbranched_double_sphere() {
        let l = lift_stratum(2, &[], &[], 2).unwrap();
        assert_eq!(l.euler_char, 4);
        assert_eq!(l.components, 2);
        assert_eq!(l.per_component_euler, vec![2, 2]);
    }

    #[test]
    fn three_sheets_two_points() {
        let t12 = Permutation::transposition(3, 1, 2).unwrap();
        let t23 = Permutation::transposition(3, 2, 3).unwrap();
        let l = lift_stratum(1, &[t12.clone(), t23.clone()], &[t12, t23], 3).unwrap();
        assert_eq!((l.euler_char, l.components), (1, 1));
    }

    #[test]
    fn intransitive_charges_orbits() {
        let t12 = Permutation::transposition(4, 1, 2).unwrap();
        let l = lift_stratum(1, &[t12.clone(), t12.clone()], &[t12], 4).unwrap();
        assert_eq!(l.components, 3);
        assert_eq!(l.per_component_euler, vec![0, 1, 1]);
        assert_eq!(l.euler_char, 2);
    }

    #[test]
    fn rejects_non_simple() {
        let c = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(matches!(lift_stratum(1, &[c], &[], 3), Err(Error::NotSimple(_))));
        let t = Permutation::transposition(2, 1, 2).unwrap();
        assert!(lift_stratum(1, &[t], &[], 3).is_err());
    }
}
