use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An even degree `m = 2k` together with its genus and Harnack number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    degree: u32,
}

impl CurveClass {
    pub fn new(degree: u32) -> Result<Self> {
        if degree % 2 == 1 {
            return Err(Error::OddDegree(degree));
        }
        if degree < 4 {
            return Err(Error::DegreeTooSmall(degree));
        }
        Ok(CurveClass { degree })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `k = m / 2`.
    pub fn semi_degree(&self) -> u32 {
        self.degree / 2
    }

    pub fn k_squared(&self) -> i64 {
        let k = i64::from(self.semi_degree());
        k * k
    }

    /// `g = (m - 1)(m - 2) / 2`.
    pub fn genus(&self) -> u64 {
        let m = u64::from(self.degree);
        (m - 1) * (m - 2) / 2
    }

    /// Harnack's maximal oval count `M = g + 1`.
    pub fn harnack(&self) -> usize {
        (self.genus() + 1) as usize
    }

    /// Bézout's count `m(m - 2)` of intersections with a curve of degree `m - 2`.
    pub fn pencil_intersections(&self) -> u64 {
        let m = u64::from(self.degree);
        m * (m - 2)
    }
}
