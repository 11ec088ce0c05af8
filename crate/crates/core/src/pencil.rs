//! Basepoint budgets for pencils of curves of degree `m - 2` and the
//! punching-card distributions that make such a pencil totally real.
//!
//! A curve of degree `m - 2` meets an oval in an even number of points. If
//! `a` basepoints of the pencil sit on an oval, every member of the pencil
//! meets that oval in at least `a` real points, and in at least `a + 1` when
//! `a` is odd. Summing over the ovals gives the guaranteed count, which
//! reaches the Bézout number `m(m - 2)` exactly when every oval carries an
//! odd number of basepoints.

use serde::{Deserialize, Serialize};

use crate::curve::CurveClass;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasepointBudget {
    pub pencil_degree: u32,
    /// Basepoints that can be assigned while still moving in a pencil.
    #[serde(rename = "B")]
    pub assigned: u64,
    #[serde(rename = "M")]
    pub harnack: u64,
    /// `B - M`, always `m - 4`.
    pub excess: u64,
    /// `(m - 2)^2 - B` further basepoints forced by Bézout.
    pub unassigned: u64,
}

pub fn basepoint_budget(degree: u32) -> Result<BasepointBudget> {
    let curve = CurveClass::new(degree)?;
    Ok(BasepointBudget::for_curve(&curve))
}

impl BasepointBudget {
    pub fn for_curve(curve: &CurveClass) -> Self {
        let m = u64::from(curve.degree());
        let pencil_degree = m - 2;
        // C(m, 2) - 2
        let assigned = m * (m - 1) / 2 - 2;
        let harnack = curve.harnack() as u64;
        BasepointBudget {
            pencil_degree: curve.degree() - 2,
            assigned,
            harnack,
            excess: assigned - harnack,
            unassigned: pencil_degree * pencil_degree - assigned,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// The `m - 4` extra basepoints in `(m - 4) / 2` groups of two.
    Paired,
    /// All `m - 4` extra basepoints on a single oval.
    Concentrated,
    Custom,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strategy::Paired => "paired",
            Strategy::Concentrated => "concentrated",
            Strategy::Custom => "custom",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilPlan {
    pub curve: CurveClass,
    pub budget: BasepointBudget,
    pub strategy: Strategy,
    /// Basepoints per oval, in canonical oval order.
    pub assignment: Vec<u64>,
}

/// Distributes the `B` basepoints over the `M` ovals of an M-curve.
///
/// Extras go to the first ovals in canonical order.
pub fn plan_punching_card(degree: u32, oval_count: usize, strategy: Strategy) -> Result<PencilPlan> {
    let curve = CurveClass::new(degree)?;
    let budget = BasepointBudget::for_curve(&curve);
    if oval_count != curve.harnack() {
        return Err(Error::NotMaximal { expected: curve.harnack(), got: oval_count });
    }
    let mut assignment = vec![1u64; oval_count];
    match strategy {
        Strategy::Paired => {
            let groups = (budget.excess / 2) as usize;
            for a in &mut assignment[..groups] {
                *a = 3;
            }
        }
        Strategy::Concentrated => assignment[0] = u64::from(degree) - 3,
        Strategy::Custom => return Err(Error::CustomWithoutAssignment),
    }
    Ok(PencilPlan { curve, budget, strategy, assignment })
}

impl PencilPlan {
    /// A user-supplied distribution; must have one entry per oval of an
    /// M-curve and sum to `B`. Entries may be even or zero.
    pub fn custom(degree: u32, assignment: Vec<u64>) -> Result<Self> {
        let curve = CurveClass::new(degree)?;
        let budget = BasepointBudget::for_curve(&curve);
        if assignment.len() != curve.harnack() {
            return Err(Error::NotMaximal { expected: curve.harnack(), got: assignment.len() });
        }
        let sum: u64 = assignment.iter().sum();
        if sum != budget.assigned {
            return Err(Error::AssignmentSum { expected: budget.assigned, got: sum });
        }
        Ok(PencilPlan { curve, budget, strategy: Strategy::Custom, assignment })
    }

    pub fn verdict(&self) -> TotalRealityVerdict {
        guaranteed_real_intersections(self)
    }

    pub fn report(&self) -> PlanReport {
        let verdict = self.verdict();
        PlanReport {
            m: self.curve.degree(),
            pencil_degree: self.budget.pencil_degree,
            assigned: self.budget.assigned,
            harnack: self.budget.harnack,
            excess: self.budget.excess,
            unassigned: self.budget.unassigned,
            strategy: self.strategy,
            assignment: self.assignment.clone(),
            guaranteed: verdict.guaranteed,
            required: verdict.required,
            totally_real: verdict.totally_real,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalRealityVerdict {
    pub guaranteed: u64,
    pub required: u64,
    pub totally_real: bool,
    /// Ovals carrying an odd number of basepoints, each of which gains
    /// exactly one mobile intersection point.
    pub per_oval_bonus: Vec<bool>,
}

pub fn guaranteed_real_intersections(plan: &PencilPlan) -> TotalRealityVerdict {
    let per_oval_bonus: Vec<bool> = plan.assignment.iter().map(|a| a % 2 == 1).collect();
    let bonus = per_oval_bonus.iter().filter(|&&b| b).count() as u64;
    let guaranteed = plan.assignment.iter().sum::<u64>() + bonus;
    let required = plan.curve.pencil_intersections();
    TotalRealityVerdict { guaranteed, required, totally_real: guaranteed == required, per_oval_bonus }
}

pub fn total_reality_theorem_check(degree: u32, assignment: &[u64]) -> Result<TotalRealityVerdict> {
    Ok(PencilPlan::custom(degree, assignment.to_vec())?.verdict())
}

/// Flat JSON view of a plan and its verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanReport {
    pub m: u32,
    pub pencil_degree: u32,
    #[serde(rename = "B")]
    pub assigned: u64,
    #[serde(rename = "M")]
    pub harnack: u64,
    pub excess: u64,
    pub unassigned: u64,
    pub strategy: Strategy,
    pub assignment: Vec<u64>,
    pub guaranteed: u64,
    pub required: u64,
    pub totally_real: bool,
}
