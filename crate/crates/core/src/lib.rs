//! Topological schemes of real plane curves of even degree.
//!
//! A scheme is the nesting forest of the ovals of a curve. This crate
//! parses and enumerates schemes, evaluates the classical prohibition
//! filters (Harnack, Arnold, Rohlin, Petrovskii, Gudkov, Fiedler) against a
//! degree, and plans basepoint distributions for totally real pencils of
//! curves of degree `m - 2`.

pub mod census;
pub mod curve;
pub mod enumerate;
pub mod error;
pub mod filters;
pub mod pencil;
pub mod ratio;
pub mod scheme;

pub use census::{census, CensusResult};
pub use curve::CurveClass;
pub use enumerate::{enumerate_schemes, enumerate_schemes_capped, SchemeIter, DEFAULT_ENUMERATION_CAP};
pub use error::{Error, Result};
pub use filters::{analyze, AnalyzeOptions, FilterId, FilterStatus, FilterVerdict, ProhibitionReport};
pub use pencil::{basepoint_budget, plan_punching_card, PencilPlan, Strategy, TotalRealityVerdict};
pub use scheme::{format_scheme, parse_scheme, OvalNode, RealScheme, SchemeStats};
