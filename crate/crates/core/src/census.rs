//! Run the filters over every scheme with a given number of ovals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::curve::CurveClass;
use crate::enumerate::enumerate_schemes_capped;
use crate::error::Result;
use crate::filters::{analyze, AnalyzeOptions, FilterId};
use crate::scheme::RealScheme;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusResult {
    pub degree: u32,
    pub ovals: usize,
    pub total_enumerated: usize,
    /// Schemes no sound filter prohibits, in canonical order.
    pub survivors: Vec<RealScheme>,
    /// Number of schemes each filter prohibits. A scheme may be counted
    /// under several filters.
    pub prohibited: BTreeMap<FilterId, usize>,
    /// Survivors flagged by heuristic filters.
    pub heuristic_only: Vec<RealScheme>,
}

impl CensusResult {
    pub fn prohibited_schemes(&self) -> usize {
        self.total_enumerated - self.survivors.len()
    }
}

/// Census of all schemes with `ovals` ovals against degree `curve`.
pub fn census(
    curve: &CurveClass,
    ovals: usize,
    options: &AnalyzeOptions,
    cap: usize,
) -> Result<CensusResult> {
    let mut total_enumerated = 0;
    let mut survivors = Vec::new();
    let mut heuristic_only = Vec::new();
    let mut prohibited: BTreeMap<FilterId, usize> = BTreeMap::new();
    for scheme in enumerate_schemes_capped(ovals, cap)? {
        total_enumerated += 1;
        let report = analyze(&scheme, curve, options);
        for id in report.prohibiting() {
            *prohibited.entry(id).or_default() += 1;
        }
        if !report.is_prohibited() {
            if !report.heuristic_flags.is_empty() {
                heuristic_only.push(scheme.clone());
            }
            survivors.push(scheme);
        }
    }
    survivors.sort();
    heuristic_only.sort();
    Ok(CensusResult {
        degree: curve.degree(),
        ovals,
        total_enumerated,
        survivors,
        prohibited,
        heuristic_only,
    })
}
