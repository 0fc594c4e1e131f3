use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::point::{ComplexLine, PointC2};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubharmonicReport {
    pub center_value: f64,
    pub average: f64,
    /// `average − center_value`; nonnegative up to `tol` when subharmonic.
    pub excess: f64,
    pub tol: f64,
    pub passed: bool,
}

/// Mean of `ψ` over `m` equally spaced points of the circle of `radius`
/// about `center` on `line`.
pub fn circle_average(psi: impl Fn(&PointC2) -> f64, line: &ComplexLine, center: Complex64, radius: f64, m: usize) -> f64 {
    (0..m)
        .map(|j| psi(&line.at(center + Complex64::from_polar(radius, 2.0 * PI * j as f64 / m as f64))))
        .sum::<f64>()
        / m as f64
}

/// Sub-mean-value test for `ψ` restricted to a complex line.
pub fn subharmonicity_check(
    psi: impl Fn(&PointC2) -> f64,
    line: &ComplexLine,
    center: Complex64,
    radius: f64,
    m_samples: usize,
    tol: f64,
) -> Result<SubharmonicReport> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::Invalid(format!("circle radius must be positive, got {radius}")));
    }
    if m_samples < 64 {
        return Err(Error::Invalid(format!("{m_samples} circle samples is below the minimum of 64")));
    }
    let center_value = psi(&line.at(center));
    let average = circle_average(&psi, line, center, radius, m_samples);
    Ok(SubharmonicReport {
        center_value,
        average,
        excess: average - center_value,
        tol,
        passed: average >= center_value - tol,
    })
}
