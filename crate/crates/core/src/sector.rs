use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Index `λ ∈ {1, 2, 3}` of a trisection sector, read cyclically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Sector(u8);

impl Sector {
    pub const ONE: Sector = Sector(1);
    pub const TWO: Sector = Sector(2);
    pub const THREE: Sector = Sector(3);
    pub const ALL: [Sector; 3] = [Sector::ONE, Sector::TWO, Sector::THREE];

    pub fn new(index: u8) -> Result<Self> {
        match index {
            1..=3 => Ok(Sector(index)),
            _ => Err(Error::Invalid(format!("sector index {index} not in 1..=3"))),
        }
    }

    /// The 1-based index.
    pub fn get(self) -> u8 {
        self.0
    }

    /// Zero-based position, for indexing triples.
    pub fn idx(self) -> usize {
        usize::from(self.0 - 1)
    }

    pub fn from_idx(idx: usize) -> Self {
        Sector((idx % 3) as u8 + 1)
    }

    pub fn next(self) -> Self {
        Sector::from_idx(self.idx() + 1)
    }

    pub fn prev(self) -> Self {
        Sector::from_idx(self.idx() + 2)
    }
}

impl TryFrom<u8> for Sector {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Sector::new(value)
    }
}

impl From<Sector> for u8 {
    fn from(s: Sector) -> u8 {
        s.0
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
