use serde::{Deserialize, Serialize};

use super::lift::{lift_stratum, StratumLift};
use super::monodromy::MonodromyRep;
use super::perm::Permutation;
use crate::bridge::{perturb, surface_euler, BridgeSurfaceData, PerturbationMove};
use crate::trisection::{euler_char_relative, RelTrisectionParams};
use crate::{Error, Result, Sector};

/// Stratum-by-stratum record of a pullback computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackDetail {
    pub params: RelTrisectionParams,
    pub degree: usize,
    pub central: StratumLift,
    pub page: StratumLift,
    pub sectors: [StratumLift; 3],
    pub handlebodies: [StratumLift; 3],
    pub boundary_components: usize,
    /// `Σχ(Z̃) − Σχ(H̃) + χ(Σ̃)`.
    pub euler_inclusion_exclusion: i64,
    /// `d·χ(B⁴) − χ(K)`.
    pub euler_riemann_hurwitz: i64,
}

/// Splits an aggregate relative locus of `n` disks into per-disk data,
/// placing every bridge and every extra patch on the first disk.
pub fn split_locus(locus: &BridgeSurfaceData) -> Result<Vec<BridgeSurfaceData>> {
    locus.validate().into_result("bridge surface")?;
    if locus.closed_ambient {
        return Err(Error::Unsupported(
            "pullback needs a locus properly embedded in the 4-ball".into(),
        ));
    }
    let n = locus.braid_index;
    if n == 0 {
        if locus.bridge_points > 0 {
            return Err(Error::Unsupported("closed components in the branch locus".into()));
        }
        return Ok(Vec::new());
    }
    if let Some(s) = Sector::ALL.into_iter().find(|s| locus.patches[s.idx()] < n) {
        return Err(Error::Invalid(format!(
            "sector {s} has {} patches for {n} disks",
            locus.patches[s.idx()]
        )));
    }
    let mut first = BridgeSurfaceData::trivial_disks(1);
    first.bridge_index = locus.bridge_index;
    first.bridge_points = 1 + 2 * locus.bridge_index;
    first.arcs = [1 + locus.bridge_index; 3];
    first.patches = locus.patches.map(|c| c - n + 1);
    let mut out = vec![first];
    out.extend((1..n).map(|_| BridgeSurfaceData::trivial_disks(1)));
    Ok(out)
}

/// Pulls the standard trisection of `B⁴` back along the branched cover
/// determined by `rho`, one meridian per disk of `locus`.
pub fn pullback_trisection(
    base: &RelTrisectionParams,
    locus: &BridgeSurfaceData,
    rho: &MonodromyRep,
) -> Result<RelTrisectionParams> {
    Ok(pullback_detail(base, &split_locus(locus)?, rho)?.params)
}

/// As [`pullback_trisection`], with the locus given disk by disk so that
/// bridges can sit on any component.
pub fn pullback_components(
    base: &RelTrisectionParams,
    components: &[BridgeSurfaceData],
    rho: &MonodromyRep,
) -> Result<RelTrisectionParams> {
    Ok(pullback_detail(base, components, rho)?.params)
}

pub fn pullback_detail(
    base: &RelTrisectionParams,
    components: &[BridgeSurfaceData],
    rho: &MonodromyRep,
) -> Result<PullbackDetail> {
    if *base != RelTrisectionParams::standard_ball() {
        return Err(Error::Unsupported(format!(
            "pullback over {} (only the standard trisection of the 4-ball is supported)",
            crate::trisection::Params::from(*base)
        )));
    }
    if components.len() != rho.components() {
        return Err(Error::Mismatch(format!(
            "{} locus components but {} meridian images",
            components.len(),
            rho.components()
        )));
    }
    rho.validate().into_result("monodromy")?;
    for (j, c) in components.iter().enumerate() {
        c.validate().into_result("bridge surface")?;
        if c.closed_ambient || c.braid_index != 1 {
            return Err(Error::Invalid(format!(
                "component {} is not a single properly embedded disk",
                j + 1
            )));
        }
    }
    let d = rho.degree;
    let ambient = &rho.meridian_images;
    let repeat = |count: fn(&BridgeSurfaceData) -> u32| -> Vec<Permutation> {
        components
            .iter()
            .zip(ambient)
            .flat_map(|(c, s)| std::iter::repeat_n(s.clone(), count(c) as usize))
            .collect()
    };
    let connected = |what: &str, l: StratumLift| -> Result<StratumLift> {
        if l.components == 1 {
            Ok(l)
        } else {
            Err(Error::Invalid(format!("lifted {what} has {} components", l.components)))
        }
    };

    let points = repeat(|c| c.bridge_points);
    let central = connected("central surface", lift_stratum(1, &points, ambient, d)?)?;
    let boundary = points
        .iter()
        .fold(Permutation::identity(d), |acc, p| acc.then(p))
        .cycle_count();
    let page = connected("page", lift_stratum(1, ambient, ambient, d)?)?;

    let half = |chi: i64, what: &str| -> Result<u32> {
        let twice = 2 - boundary as i64 - chi;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::Invalid(format!("{what} has no orientable genus")));
        }
        Ok((twice / 2) as u32)
    };
    let genus = half(central.euler_char, "lifted central surface")?;
    let page_genus = half(page.euler_char, "lifted page")?;

    let lift_each = |count: fn(&BridgeSurfaceData, usize) -> u32, what: &str| {
        let mut out = Vec::with_capacity(3);
        for s in Sector::ALL {
            let branch: Vec<Permutation> = components
                .iter()
                .zip(ambient)
                .flat_map(|(c, p)| std::iter::repeat_n(p.clone(), count(c, s.idx()) as usize))
                .collect();
            out.push(connected(&format!("{what} {s}"), lift_stratum(1, &branch, ambient, d)?)?);
        }
        Ok::<[StratumLift; 3], Error>(out.try_into().expect("three sectors"))
    };
    let sectors = lift_each(|c, i| c.patches[i], "sector")?;
    let handlebodies = lift_each(|c, i| c.arcs[i], "handlebody")?;

    let mut k = [0u32; 3];
    for (i, l) in sectors.iter().enumerate() {
        k[i] = u32::try_from(1 - l.euler_char)
            .map_err(|_| Error::Invalid(format!("lifted sector {} has χ > 1", i + 1)))?;
    }
    let expected_h = 2 - i64::from(genus) - i64::from(page_genus) - boundary as i64;
    if let Some(i) = handlebodies.iter().position(|h| h.euler_char != expected_h) {
        return Err(Error::Invalid(format!(
            "lifted handlebody {} has χ = {}, compression body needs {expected_h}",
            i + 1,
            handlebodies[i].euler_char
        )));
    }
    let params = RelTrisectionParams::new(genus, k, page_genus, boundary as u32);
    params.validate().into_result("pullback")?;

    let euler_inclusion_exclusion = sectors.iter().map(|l| l.euler_char).sum::<i64>()
        - handlebodies.iter().map(|l| l.euler_char).sum::<i64>()
        + central.euler_char;
    let chi_k: i64 = components.iter().map(surface_euler).sum::<Result<i64>>()?;
    let euler_riemann_hurwitz = d as i64 - chi_k;
    let from_params = euler_char_relative(&params)?;
    if euler_inclusion_exclusion != euler_riemann_hurwitz || from_params != euler_riemann_hurwitz {
        return Err(Error::Invalid(format!(
            "Euler characteristics disagree: strata {euler_inclusion_exclusion}, \
             Riemann–Hurwitz {euler_riemann_hurwitz}, parameters {from_params}"
        )));
    }
    Ok(PullbackDetail {
        params,
        degree: d,
        central,
        page,
        sectors,
        handlebodies,
        boundary_components: boundary,
        euler_inclusion_exclusion,
        euler_riemann_hurwitz,
    })
}

/// Perturbing the locus in sector `λ` stabilizes the pullback in sector `λ + 1`.
pub fn perturbation_stabilization_check(
    locus: &BridgeSurfaceData,
    rho: &MonodromyRep,
    sector: Sector,
) -> Result<bool> {
    let base = RelTrisectionParams::standard_ball();
    let before = pullback_trisection(&base, locus, rho)?;
    let after = pullback_trisection(&base, &perturb(locus, PerturbationMove::new(sector))?, rho)?;
    Ok(after == before.stabilize(sector.next()))
}

/// As [`perturbation_stabilization_check`], perturbing only the disk at
/// index `placement`.
pub fn perturbation_stabilization_check_at(
    components: &[BridgeSurfaceData],
    rho: &MonodromyRep,
    sector: Sector,
    placement: usize,
) -> Result<bool> {
    let Some(target) = components.get(placement) else {
        return Err(Error::Invalid(format!(
            "placement {placement} out of range for {} disks",
            components.len()
        )));
    };
    let base = RelTrisectionParams::standard_ball();
    let before = pullback_components(&base, components, rho)?;
    let mut moved = components.to_vec();
    moved[placement] = perturb(target, PerturbationMove::new(sector))?;
    let after = pullback_components(&base, &moved, rho)?;
    Ok(after == before.stabilize(sector.next()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::standard_rho;

    fn ball() -> RelTrisectionParams {
        RelTrisectionParams::standard_ball()
    }

    #[test]
    fn unperturbed_disks_give_the_ball() {
        for n in 1..=6 {
            let out = pullback_trisection(
                &ball(),
                &BridgeSurfaceData::trivial_disks(n),
                &standard_rho(n as usize).unwrap(),
            )
            .unwrap();
            assert_eq!(out, ball(), "n = {n}");
        }
    }

    #[test]
    fn one_sector_three_perturbation() {
        let locus = perturb(
            &BridgeSurfaceData::trivial_disks(1),
            PerturbationMove::new(Sector::THREE),
        )
        .unwrap();
        let out = pullback_trisection(&ball(), &locus, &standard_rho(1).unwrap()).unwrap();
        assert_eq!(out, RelTrisectionParams::new(1, [1, 0, 0], 0, 1));
    }

    #[test]
    fn repeated_perturbations_match_riemann_hurwitz() {
        for n in 1..=4usize {
            let rho = standard_rho(n).unwrap();
            let mut locus = BridgeSurfaceData::trivial_disks(n as u32);
            for m in 1..=4u32 {
                locus = perturb(&locus, PerturbationMove::new(Sector::THREE)).unwrap();
                let d = split_locus(&locus).unwrap();
                let detail = pullback_detail(&ball(), &d, &rho).unwrap();
                assert_eq!(detail.params, RelTrisectionParams::new(m, [m, 0, 0], 0, 1));
                assert_eq!(
                    detail.central.euler_char,
                    (n as i64 + 1) - (n as i64 + 2 * i64::from(m))
                );
            }
        }
    }

    #[test]
    fn errors() {
        let rho = standard_rho(2).unwrap();
        let one = BridgeSurfaceData::trivial_disks(1);
        assert!(matches!(
            pullback_trisection(&ball(), &one, &rho),
            Err(Error::Mismatch(_))
        ));
        let other = RelTrisectionParams::new(1, [0, 0, 0], 1, 1);
        assert!(matches!(
            pullback_trisection(&other, &BridgeSurfaceData::trivial_disks(2), &rho),
            Err(Error::Unsupported(_))
        ));
        let bad = BridgeSurfaceData {
            bridge_points: 4,
            ..BridgeSurfaceData::trivial_disks(2)
        };
        assert!(pullback_trisection(&ball(), &bad, &rho).is_err());
    }

    #[test]
    fn trivial_cover_of_nothing() {
        let out = pullback_trisection(
            &ball(),
            &BridgeSurfaceData::trivial_disks(0),
            &MonodromyRep::unbranched(1),
        )
        .unwrap();
        assert_eq!(out, ball());
        assert!(pullback_trisection(
            &ball(),
            &BridgeSurfaceData::trivial_disks(0),
            &MonodromyRep::unbranched(2)
        )
        .is_err());
    }

    #[test]
    fn stabilization_examples() {
        let one = BridgeSurfaceData::trivial_disks(1);
        assert!(perturbation_stabilization_check(&one, &standard_rho(1).unwrap(), Sector::THREE).unwrap());
        let two = BridgeSurfaceData::trivial_disks(2);
        assert!(perturbation_stabilization_check(&two, &standard_rho(2).unwrap(), Sector::ONE).unwrap());
        let parts = vec![one; 3];
        for placement in 0..3 {
            assert!(perturbation_stabilization_check_at(
                &parts,
                &standard_rho(3).unwrap(),
                Sector::TWO,
                placement
            )
            .unwrap());
        }
        assert!(perturbation_stabilization_check_at(&parts, &standard_rho(3).unwrap(), Sector::TWO, 3).is_err());
    }
}
