//! Plain-text tables.

use std::fmt::Write;

use ovals_core::filters::{BoundsTable, Membrane, RohlinFailure, Witness};
use ovals_core::pencil::PlanReport;
use ovals_core::{CensusResult, CurveClass, ProhibitionReport};

pub fn witness(w: &Witness) -> String {
    match w {
        Witness::UpperBound { value, bound } => {
            let rel = if ovals_core::ratio::Rational::from_integer(*value) <= *bound { "<=" } else { ">" };
            format!("{value} {rel} {bound}")
        }
        Witness::Congruence { value, target, modulus, value_residue, target_residue } => {
            let rel = if value_residue == target_residue { "==" } else { "!=" };
            format!("{value} = {value_residue}, {target} = {target_residue} (mod {modulus}): {value_residue} {rel} {target_residue}")
        }
        Witness::Rohlin(r) => match (r.d, r.pi, r.eta, r.reason) {
            (Some(d), Some(pi), Some(eta), _) => format!("d={d} P={} pi={pi} eta={eta}", r.nested_pairs),
            (Some(d), _, _, reason) => format!("d={d} P={} infeasible: {}", r.nested_pairs, failure(reason)),
            (None, _, _, reason) => format!("r-k^2={} infeasible: {}", r.r_minus_k2, failure(reason)),
        },
        Witness::IndexBudget(b) => {
            let mut s = format!(
                "budget {}+2*{}={}; 2chi(R)={} 2chi(N)={}",
                b.assigned, b.unassigned, b.budget, b.chi2_r, b.chi2_n
            );
            for m in &b.exceeded_by {
                let (name, v) = match m {
                    Membrane::R => ("R", b.chi2_r),
                    Membrane::N => ("N", b.chi2_n),
                };
                let _ = write!(s, "; 2chi({name})={v} > {}", b.budget);
            }
            s
        }
        Witness::Bezout { nest_depth, line_intersections, degree } => {
            let rel = if line_intersections <= &u64::from(*degree) { "<=" } else { ">" };
            format!("nest of {nest_depth}: line meets {line_intersections} {rel} {degree}")
        }
        Witness::Inapplicable { reason } => reason.clone(),
    }
}

fn failure(reason: Option<RohlinFailure>) -> &'static str {
    match reason {
        Some(RohlinFailure::Oddness) => "r-k^2 odd",
        Some(RohlinFailure::Capacity) => "capacity, |d| > P",
        Some(RohlinFailure::Parity) => "parity, P+d odd",
        None => "",
    }
}

pub fn report(r: &ProhibitionReport, curve: &CurveClass) -> String {
    let s = &r.stats;
    let mut out = String::new();
    let _ = writeln!(out, "scheme    {}", r.scheme);
    let _ = writeln!(
        out,
        "degree    {} (k={}, g={}, M={})",
        curve.degree(),
        curve.semi_degree(),
        curve.genus(),
        curve.harnack()
    );
    let _ = writeln!(
        out,
        "stats     r={} p={} n={} chi_R={} chi_N={} P={} depth_max={}",
        s.r, s.p, s.n, s.chi_r, s.chi_n, s.nested_pairs, s.depth_max
    );
    out.push('\n');
    let _ = writeln!(out, "{:<14} {:<21} witness", "filter", "status");
    for v in &r.verdicts {
        let _ =
            writeln!(out, "{:<14} {:<21} {}", v.filter.as_str(), v.status.to_string(), witness(&v.witness));
    }
    out.push('\n');
    let overall = if r.is_prohibited() { "prohibited" } else { "pass" };
    let _ = writeln!(out, "overall   {overall}");
    if !r.heuristic_flags.is_empty() {
        let flags: Vec<_> = r.heuristic_flags.iter().map(|f| f.as_str()).collect();
        let _ = writeln!(out, "heuristic {}", flags.join(", "));
    }
    out
}

pub fn census(c: &CensusResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "degree {}, {} ovals", c.degree, c.ovals);
    let _ = writeln!(out, "enumerated  {}", c.total_enumerated);
    let _ = writeln!(out, "prohibited  {}", c.prohibited_schemes());
    let _ = writeln!(out, "survivors   {}", c.survivors.len());
    out.push('\n');
    let _ = writeln!(out, "{:<14} prohibits", "filter");
    for (id, count) in &c.prohibited {
        let _ = writeln!(out, "{:<14} {count}", id.as_str());
    }
    out.push('\n');
    let _ = writeln!(out, "survivors:");
    for s in &c.survivors {
        let flag = if c.heuristic_only.contains(s) { "  (heuristic flag)" } else { "" };
        let _ = writeln!(out, "  {s}{flag}");
    }
    out
}

pub fn plan(p: &PlanReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "degree          {}", p.m);
    let _ = writeln!(out, "pencil degree   {}", p.pencil_degree);
    let _ = writeln!(out, "basepoints B    {}", p.assigned);
    let _ = writeln!(out, "Harnack M       {}", p.harnack);
    let _ = writeln!(out, "excess B-M      {}", p.excess);
    let _ = writeln!(out, "unassigned      {}", p.unassigned);
    let _ = writeln!(out, "strategy        {}", p.strategy);
    let _ = writeln!(out, "assignment      {}", compress(&p.assignment));
    let _ = writeln!(out, "guaranteed      {} / {}", p.guaranteed, p.required);
    let _ = writeln!(out, "totally real    {}", if p.totally_real { "yes" } else { "no" });
    out
}

/// `[3, 1x10]` style run-length listing.
fn compress(values: &[u64]) -> String {
    let parts: Vec<String> = values
        .chunk_by(|a, b| a == b)
        .map(|run| if run.len() == 1 { run[0].to_string() } else { format!("{}x{}", run[0], run.len()) })
        .collect();
    format!("[{}]", parts.join(", "))
}

pub fn bounds(b: &BoundsTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "degree {} (k={}, g={})", b.degree, b.k, b.genus);
    let _ = writeln!(out, "{:<22} {}", "Harnack M", b.harnack);
    let _ = writeln!(out, "{:<22} {}", "Petrovskii", b.petrovskii);
    let _ = writeln!(out, "{:<22} {}", "index-derived bound", b.general);
    let _ = writeln!(out, "{:<22} {}", "Ragsdale k^2", b.ragsdale);
    let _ = writeln!(out, "{:<22} {}", "index budget", b.index_budget);
    out
}
