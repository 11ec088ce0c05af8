//! Prohibition filters for schemes of even degree.
//!
//! Each filter is a necessary condition for a scheme to be realized by a
//! curve of the given degree. A `Prohibited` verdict always carries a
//! witness with the numbers that violate the relation. Two checks are only
//! heuristic and never decide the overall verdict: the Ragsdale conjecture
//! (still open) and the index budget of the total pencil, whose argument
//! ignores possible center singularities of the foliation.
//!
//! Half-integer bounds are exact rationals; nothing here uses floating point.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::CurveClass;
use crate::pencil::BasepointBudget;
use crate::ratio::{self, Rational};
use crate::scheme::{RealScheme, SchemeStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterId {
    Harnack,
    BezoutLine,
    Petrovskii,
    Arnold,
    Rohlin,
    GudkovMod8,
    FiedlerMod16,
    Ragsdale,
    IndexBound,
}

impl FilterId {
    pub fn as_str(&self) -> &'static str {
        match self {
            FilterId::Harnack => "harnack",
            FilterId::BezoutLine => "bezout_line",
            FilterId::Petrovskii => "petrovskii",
            FilterId::Arnold => "arnold",
            FilterId::Rohlin => "rohlin",
            FilterId::GudkovMod8 => "gudkov_mod8",
            FilterId::FiedlerMod16 => "fiedler_mod16",
            FilterId::Ragsdale => "ragsdale",
            FilterId::IndexBound => "index_bound",
        }
    }

    /// Heuristic filters report `HeuristicProhibited` instead of `Prohibited`.
    pub fn is_heuristic(&self) -> bool {
        matches!(self, FilterId::Ragsdale | FilterId::IndexBound)
    }
}

impl fmt::Display for FilterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FilterStatus {
    Pass,
    Prohibited,
    Inapplicable,
    HeuristicProhibited,
}

impl fmt::Display for FilterStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FilterStatus::Pass => "pass",
            FilterStatus::Prohibited => "prohibited",
            FilterStatus::Inapplicable => "inapplicable",
            FilterStatus::HeuristicProhibited => "heuristic-prohibited",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RohlinFailure {
    /// `r - k^2` is odd.
    Oddness,
    /// `|d| > P`: not enough nested pairs.
    Capacity,
    /// `P` and `d` have different parity.
    Parity,
}

/// Solution of `pi + eta = P`, `pi - eta = d` in nonnegative integers, or
/// the reason none exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RohlinWitness {
    pub r_minus_k2: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(rename = "P")]
    pub nested_pairs: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<RohlinFailure>,
}

impl RohlinWitness {
    pub fn solve(r: usize, k_squared: i64, nested_pairs: u64) -> Self {
        let r_minus_k2 = r as i64 - k_squared;
        let mut witness =
            RohlinWitness { r_minus_k2, d: None, nested_pairs, pi: None, eta: None, reason: None };
        if r_minus_k2 % 2 != 0 {
            witness.reason = Some(RohlinFailure::Oddness);
            return witness;
        }
        let d = r_minus_k2 / 2;
        witness.d = Some(d);
        let pairs = nested_pairs as i64;
        if d.abs() > pairs {
            witness.reason = Some(RohlinFailure::Capacity);
        } else if (pairs - d) % 2 != 0 {
            witness.reason = Some(RohlinFailure::Parity);
        } else {
            witness.pi = Some(((pairs + d) / 2) as u64);
            witness.eta = Some(((pairs - d) / 2) as u64);
        }
        witness
    }

    pub fn is_feasible(&self) -> bool {
        self.reason.is_none()
    }
}

/// Index budget of the total pencil of degree `m - 2` against the doubled
/// membranes `2R` and `2N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexBudget {
    #[serde(rename = "B")]
    pub assigned: u64,
    #[serde(rename = "U")]
    pub unassigned: u64,
    /// `B + 2U = 2(m - 2)^2 - B`.
    pub budget: i64,
    #[serde(rename = "chi2_R")]
    pub chi2_r: i64,
    #[serde(rename = "chi2_N")]
    pub chi2_n: i64,
    /// Membranes whose doubled Euler characteristic exceeds the budget.
    pub exceeded_by: Vec<Membrane>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membrane {
    R,
    N,
}

impl IndexBudget {
    pub fn new(curve: &CurveClass, stats: &SchemeStats) -> Self {
        let pencil = BasepointBudget::for_curve(curve);
        let budget = pencil.assigned as i64 + 2 * pencil.unassigned as i64;
        let chi2_r = 2 * stats.chi_r;
        let chi2_n = 2 * stats.chi_n;
        let mut exceeded_by = Vec::new();
        if chi2_r > budget {
            exceeded_by.push(Membrane::R);
        }
        if chi2_n > budget {
            exceeded_by.push(Membrane::N);
        }
        IndexBudget {
            assigned: pencil.assigned,
            unassigned: pencil.unassigned,
            budget,
            chi2_r,
            chi2_n,
            exceeded_by,
        }
    }
}

/// Numbers behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `value <= bound`, the bound possibly a half-integer.
    UpperBound {
        value: i64,
        #[serde(with = "ratio::as_string")]
        bound: Rational,
    },
    /// `value ≡ target (mod modulus)`, residues in `0..modulus`.
    Congruence {
        value: i64,
        target: i64,
        modulus: i64,
        value_residue: i64,
        target_residue: i64,
    },
    Rohlin(RohlinWitness),
    IndexBudget(IndexBudget),
    /// A line through the innermost oval of the deepest nest.
    Bezout {
        nest_depth: u64,
        line_intersections: u64,
        degree: u32,
    },
    Inapplicable {
        reason: String,
    },
}

impl Witness {
    fn congruence(value: i64, target: i64, modulus: i64) -> Self {
        Witness::Congruence {
            value,
            target,
            modulus,
            value_residue: value.rem_euclid(modulus),
            target_residue: target.rem_euclid(modulus),
        }
    }

    /// Recomputes the relation from the recorded numbers. `true` means the
    /// relation holds, i.e. the witness does not prohibit.
    pub fn relation_holds(&self) -> bool {
        match self {
            Witness::UpperBound { value, bound } => Rational::from_integer(*value) <= *bound,
            Witness::Congruence { value, target, modulus, .. } => (value - target).rem_euclid(*modulus) == 0,
            Witness::Rohlin(w) => match (w.pi, w.eta, w.d) {
                (Some(pi), Some(eta), Some(d)) => {
                    pi + eta == w.nested_pairs && pi as i64 - eta as i64 == d && 2 * d == w.r_minus_k2
                }
                _ => false,
            },
            Witness::IndexBudget(b) => b.chi2_r <= b.budget && b.chi2_n <= b.budget,
            Witness::Bezout { line_intersections, degree, .. } => *line_intersections <= u64::from(*degree),
            Witness::Inapplicable { .. } => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterVerdict {
    pub filter: FilterId,
    pub status: FilterStatus,
    pub witness: Witness,
}

impl FilterVerdict {
    fn decide(filter: FilterId, witness: Witness) -> Self {
        let status = match (witness.relation_holds(), filter.is_heuristic()) {
            (true, _) => FilterStatus::Pass,
            (false, false) => FilterStatus::Prohibited,
            (false, true) => FilterStatus::HeuristicProhibited,
        };
        FilterVerdict { filter, status, witness }
    }

    fn inapplicable(filter: FilterId, reason: impl Into<String>) -> Self {
        FilterVerdict {
            filter,
            status: FilterStatus::Inapplicable,
            witness: Witness::Inapplicable { reason: reason.into() },
        }
    }
}

fn is_maximal(stats: &SchemeStats, curve: &CurveClass) -> bool {
    stats.r == curve.harnack()
}

pub fn harnack_filter(stats: &SchemeStats, curve: &CurveClass) -> FilterVerdict {
    FilterVerdict::decide(
        FilterId::Harnack,
        Witness::UpperBound { value: stats.r as i64, bound: Rational::from_integer(curve.harnack() as i64) },
    )
}

/// Line through the innermost oval of a nest of depth `d + 1` meets the
/// curve in at least `2(d + 1)` points, at most `m` by Bézout.
pub fn bezout_line_filter(stats: &SchemeStats, curve: &CurveClass) -> FilterVerdict {
    if stats.r == 0 {
        return FilterVerdict::inapplicable(FilterId::BezoutLine, "scheme has no ovals");
    }
    let nest_depth = stats.depth_max as u64 + 1;
    FilterVerdict::decide(
        FilterId::BezoutLine,
        Witness::Bezout { nest_depth, line_intersections: 2 * nest_depth, degree: curve.degree() },
    )
}

pub fn petrovskii_bound(curve: &CurveClass) -> Rational {
    let k = i64::from(curve.semi_degree());
    Rational::new(3 * k * (k - 1) + 2, 2)
}

/// Upper half of Petrovskii's inequality, `chi <= 3/2 k(k-1) + 1`.
pub fn petrovskii_filter(stats: &SchemeStats, curve: &CurveClass) -> FilterVerdict {
    FilterVerdict::decide(
        FilterId::Petrovskii,
        Witness::UpperBound { value: stats.chi_r, bound: petrovskii_bound(curve) },
    )
}

/// Arnold's congruence `chi ≡ k^2 (mod 4)` for dividing curves.
pub fn arnold_congruence_filter(stats: &SchemeStats, curve: &CurveClass) -> FilterVerdict {
    arnold_filter_with(stats, curve, false)
}

fn arnold_filter_with(stats: &SchemeStats, curve: &CurveClass, dividing: bool) -> FilterVerdict {
    if !(dividing || is_maximal(stats, curve)) {
        return FilterVerdict::inapplicable(FilterId::Arnold, "not an M-scheme and not declared dividing");
    }
    FilterVerdict::decide(FilterId::Arnold, Witness::congruence(stats.chi_r, curve.k_squared(), 4))
}

/// Rohlin's formula `2(pi - eta) = r - k^2` with `pi + eta = P`.
pub fn rohlin_feasibility_filter(stats: &SchemeStats, curve: &CurveClass) -> FilterVerdict {
    rohlin_filter_with(stats, curve, false)
}

fn rohlin_filter_with(stats: &SchemeStats, curve: &CurveClass, dividing: bool) -> FilterVerdict {
    if !(dividing || is_maximal(stats, curve)) {
        return FilterVerdict::inapplicable(FilterId::Rohlin, "not an M-scheme and not declared dividing");
    }
    let witness = RohlinWitness::solve(stats.r, curve.k_squared(), stats.nested_pairs);
    FilterVerdict::decide(FilterId::Rohlin, Witness::Rohlin(witness))
}

/// Gudkov–Rohlin congruence `chi ≡ k^2 (mod 8)` for M-curves.
pub fn gudkov_mod8_filter(stats: &SchemeStats, curve: &CurveClass) -> FilterVerdict {
    if !is_maximal(stats, curve) {
        return FilterVerdict::inapplicable(FilterId::GudkovMod8, "not an M-scheme");
    }
    FilterVerdict::decide(FilterId::GudkovMod8, Witness::congruence(stats.chi_r, curve.k_squared(), 8))
}

/// `p - n ≡ k^2 (mod 16)` for symmetric M-curves.
pub fn fiedler_mod16_filter(stats: &SchemeStats, curve: &CurveClass, symmetric: bool) -> FilterVerdict {
    if !symmetric {
        return FilterVerdict::inapplicable(FilterId::FiedlerMod16, "curve not declared symmetric");
    }
    if !is_maximal(stats, curve) {
        return FilterVerdict::inapplicable(FilterId::FiedlerMod16, "not an M-scheme");
    }
    let p_minus_n = stats.p as i64 - stats.n as i64;
    FilterVerdict::decide(FilterId::FiedlerMod16, Witness::congruence(p_minus_n, curve.k_squared(), 16))
}

/// Ragsdale's conjecture `|chi| <= k^2`. Open, so only ever heuristic.
pub fn ragsdale_evaluate(stats: &SchemeStats, curve: &CurveClass) -> FilterVerdict {
    FilterVerdict::decide(
        FilterId::Ragsdale,
        Witness::UpperBound { value: stats.chi_r.abs(), bound: Rational::from_integer(curve.k_squared()) },
    )
}

/// Poincaré index count over `2R` and `2N` for the total pencil of an
/// M-curve. Heuristic: the count neglects center singularities.
pub fn index_bound_filter(stats: &SchemeStats, curve: &CurveClass) -> FilterVerdict {
    if !is_maximal(stats, curve) {
        return FilterVerdict::inapplicable(FilterId::IndexBound, "not an M-scheme");
    }
    FilterVerdict::decide(FilterId::IndexBound, Witness::IndexBudget(IndexBudget::new(curve, stats)))
}

/// The bound `chi <= 3/2 (k-1)(2k-3) + 1/2` obtained from the index budget,
/// next to Harnack's and Petrovskii's bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralBound {
    #[serde(with = "ratio::as_string")]
    pub bound: Rational,
    pub harnack: u64,
    #[serde(with = "ratio::as_string")]
    pub petrovskii: Rational,
    pub exceeds_harnack: bool,
    pub exceeds_petrovskii: bool,
}

pub fn general_chi_bound(curve: &CurveClass) -> GeneralBound {
    let k = i64::from(curve.semi_degree());
    let bound = Rational::new(3 * (k - 1) * (2 * k - 3) + 1, 2);
    let harnack = curve.harnack() as u64;
    let petrovskii = petrovskii_bound(curve);
    GeneralBound {
        bound,
        harnack,
        petrovskii,
        exceeds_harnack: bound > Rational::from_integer(harnack as i64),
        exceeds_petrovskii: bound > petrovskii,
    }
}

/// All bounds on `chi` for one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsTable {
    pub degree: u32,
    pub k: u32,
    pub genus: u64,
    pub harnack: u64,
    #[serde(with = "ratio::as_string")]
    pub petrovskii: Rational,
    #[serde(with = "ratio::as_string")]
    pub general: Rational,
    pub ragsdale: i64,
    pub index_budget: i64,
}

impl BoundsTable {
    pub fn new(curve: &CurveClass) -> Self {
        let pencil = BasepointBudget::for_curve(curve);
        let general = general_chi_bound(curve);
        BoundsTable {
            degree: curve.degree(),
            k: curve.semi_degree(),
            genus: curve.genus(),
            harnack: general.harnack,
            petrovskii: general.petrovskii,
            general: general.bound,
            ragsdale: curve.k_squared(),
            index_budget: pencil.assigned as i64 + 2 * pencil.unassigned as i64,
        }
    }
}

/// Optional filters and assertions about the curve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Curve is known to be dividing (type I) even when `r < M`.
    pub dividing: bool,
    pub mod8: bool,
    /// Curve is symmetric; enables the mod 16 congruence.
    pub symmetric: bool,
    pub index_heuristic: bool,
}

impl AnalyzeOptions {
    pub fn enabled_filters(&self) -> Vec<FilterId> {
        let mut ids = vec![
            FilterId::Harnack,
            FilterId::BezoutLine,
            FilterId::Petrovskii,
            FilterId::Arnold,
            FilterId::Rohlin,
        ];
        if self.mod8 {
            ids.push(FilterId::GudkovMod8);
        }
        if self.symmetric {
            ids.push(FilterId::FiedlerMod16);
        }
        ids.push(FilterId::Ragsdale);
        if self.index_heuristic {
            ids.push(FilterId::IndexBound);
        }
        ids
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Prohibited,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProhibitionReport {
    pub scheme: RealScheme,
    pub degree: u32,
    pub stats: SchemeStats,
    pub verdicts: Vec<FilterVerdict>,
    pub overall: Overall,
    pub heuristic_flags: Vec<FilterId>,
}

impl ProhibitionReport {
    pub fn is_prohibited(&self) -> bool {
        self.overall == Overall::Prohibited
    }

    pub fn verdict(&self, id: FilterId) -> Option<&FilterVerdict> {
        self.verdicts.iter().find(|v| v.filter == id)
    }

    /// Non-heuristic filters that prohibit.
    pub fn prohibiting(&self) -> impl Iterator<Item = FilterId> + '_ {
        self.verdicts.iter().filter(|v| v.status == FilterStatus::Prohibited).map(|v| v.filter)
    }
}

pub fn run_filter(
    id: FilterId,
    stats: &SchemeStats,
    curve: &CurveClass,
    options: &AnalyzeOptions,
) -> FilterVerdict {
    match id {
        FilterId::Harnack => harnack_filter(stats, curve),
        FilterId::BezoutLine => bezout_line_filter(stats, curve),
        FilterId::Petrovskii => petrovskii_filter(stats, curve),
        FilterId::Arnold => arnold_filter_with(stats, curve, options.dividing),
        FilterId::Rohlin => rohlin_filter_with(stats, curve, options.dividing),
        FilterId::GudkovMod8 => gudkov_mod8_filter(stats, curve),
        FilterId::FiedlerMod16 => fiedler_mod16_filter(stats, curve, options.symmetric),
        FilterId::Ragsdale => ragsdale_evaluate(stats, curve),
        FilterId::IndexBound => index_bound_filter(stats, curve),
    }
}

pub fn analyze(scheme: &RealScheme, curve: &CurveClass, options: &AnalyzeOptions) -> ProhibitionReport {
    let stats = scheme.stats();
    let verdicts: Vec<FilterVerdict> =
        options.enabled_filters().into_iter().map(|id| run_filter(id, &stats, curve, options)).collect();
    let overall = if verdicts.iter().any(|v| v.status == FilterStatus::Prohibited) {
        Overall::Prohibited
    } else {
        Overall::Pass
    };
    let heuristic_flags =
        verdicts.iter().filter(|v| v.status == FilterStatus::HeuristicProhibited).map(|v| v.filter).collect();
    ProhibitionReport {
        scheme: scheme.clone(),
        degree: curve.degree(),
        stats,
        verdicts,
        overall,
        heuristic_flags,
    }
}
