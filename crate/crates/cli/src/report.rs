//! Report documents emitted by the CLI and their text rendering.

use std::collections::BTreeMap;
use std::fmt::Write;

use homdim::complex::HomologyRecord;
use homdim::dimensions::{DimensionVerdict, HierarchyReport, VerdictKind};
use homdim::invariants::{ComplexityVerdict, PoincareData};
use homdim::io::{ComplexFile, RingFile};
use homdim::resolution::BettiTable;
use homdim::verify::{CriterionReport, Item};
use homdim::{Caps, Certainty, ExtInt};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub caps: Caps,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub ring: RingFile,
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Body {
    RingInfo(RingInfo),
    Objects(Vec<ObjectReport>),
    Verify(VerifyReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingInfo {
    pub artinian: bool,
    pub top_degree: Option<i32>,
    /// `dim_k R_e` for `e = 0..` the top degree (or the degree cap).
    pub hilbert_function: Vec<usize>,
    pub complete_intersection: bool,
    pub depth: ExtInt,
    pub depth_certainty: Certainty,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObjectReport {
    pub object: String,
    pub result: Outcome,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Outcome {
    Homology(HomologyRecord),
    Resolution { betti: BettiTable, complex: ComplexFile },
    Betti(BettiTable),
    Poincare { series: PoincareData, complexity: Option<ComplexityVerdict>, note: Option<String> },
    Depth { depth: ExtInt, ring_depth: ExtInt, certainty: Certainty },
    Verdict(DimensionVerdict),
    Hierarchy(HierarchyReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

impl Outcome {
    /// Violated invariants: failed consistency checks and hierarchy violations.
    pub fn violations(&self) -> Vec<String> {
        let from_checks = |v: &DimensionVerdict| -> Vec<String> {
            v.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {} is {}", v.dimension, c.name, c.detail)).collect()
        };
        match self {
            Outcome::Verdict(v) => from_checks(v),
            Outcome::Hierarchy(h) => {
                let mut out: Vec<String> = h.chain().iter().flat_map(|v| from_checks(v)).collect();
                out.extend(h.violations.iter().cloned());
                out
            }
            _ => Vec::new(),
        }
    }
}

impl Report {
    pub fn violations(&self) -> Vec<String> {
        match &self.body {
            Body::Objects(objs) => objs
                .iter()
                .flat_map(|o| o.result.violations().into_iter().map(move |v| format!("{}: {v}", o.object)))
                .collect(),
            Body::Verify(v) => v
                .criteria
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("criterion {} failed", c.id))
                .collect(),
            Body::RingInfo(_) => Vec::new(),
        }
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let rels = if self.ring.relations.is_empty() { String::new() } else { format!("/({})", self.ring.relations.join(", ")) };
        let _ = writeln!(s, "ring: GF({})[{}]{rels}", self.ring.characteristic, self.ring.variables.join(", "));
        let _ = writeln!(s, "caps: cutoff {}, degree cap {}, window {}", self.caps.cutoff, self.caps.degree_cap, self.caps.window);
        match &self.body {
            Body::RingInfo(info) => ring_info(&mut s, info),
            Body::Objects(objs) => {
                for o in objs {
                    let _ = writeln!(s, "\n== {} ==", o.object);
                    outcome(&mut s, &o.result);
                }
            }
            Body::Verify(v) => {
                let _ = writeln!(s, "suite: {}", v.suite);
                for c in &v.criteria {
                    let _ = writeln!(s, "{}", c.summary());
                    for Item { name, detail, .. } in c.failures() {
                        let _ = writeln!(s, "    {name}: {detail}");
                    }
                }
                let _ = writeln!(s, "{}", if v.passed { "all criteria passed" } else { "some criteria FAILED" });
            }
        }
        s
    }
}

fn ring_info(s: &mut String, info: &RingInfo) {
    let _ = writeln!(s, "artinian: {}", info.artinian);
    if let Some(t) = info.top_degree {
        let _ = writeln!(s, "top degree: {t}");
    }
    let h: Vec<String> = info.hilbert_function.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(s, "hilbert function: {}", h.join(" "));
    let _ = writeln!(s, "complete intersection: {}", info.complete_intersection);
    let _ = writeln!(s, "depth: {} ({})", info.depth, info.depth_certainty);
}

fn outcome(s: &mut String, o: &Outcome) {
    match o {
        Outcome::Homology(h) => homology(s, h),
        Outcome::Resolution { betti: b, .. } | Outcome::Betti(b) => betti(s, b),
        Outcome::Poincare { series, complexity, note } => {
            let terms: Vec<String> = series
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, c)| format!("{c} t^{}", series.start + i as i32))
                .collect();
            let tail = if series.terminated { "" } else { " + ..." };
            let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            let _ = writeln!(s, "P(t) = {body}{tail}");
            let _ = writeln!(s, "known through t^{} ({})", series.cutoff, series.certainty);
            if let Some(c) = complexity {
                let _ = writeln!(s, "complexity: {} (window {}..{})", c.verdict, c.window.0, c.window.1);
                for d in &c.diagnostics {
                    let _ = writeln!(s, "  {d}");
                }
            }
            if let Some(n) = note {
                let _ = writeln!(s, "complexity: {n}");
            }
        }
        Outcome::Depth { depth, ring_depth, certainty } => {
            let _ = writeln!(s, "depth X = {depth}, depth R = {ring_depth} ({certainty})");
        }
        Outcome::Verdict(v) => verdict(s, v),
        Outcome::Hierarchy(h) => {
            for v in h.chain() {
                verdict(s, v);
            }
            let chain: Vec<String> = h.chain().iter().map(|v| format!("{}", v.value)).collect();
            let _ = writeln!(s, "chain gdim, CI*-dim, CI-dim, pd: {}", chain.join(" | "));
            for g in &h.gaps {
                let _ = writeln!(s, "  not comparable: {g}");
            }
            for v in &h.violations {
                let _ = writeln!(s, "  VIOLATION: {v}");
            }
            let _ = writeln!(s, "hierarchy {}", if h.holds() { "holds" } else { "VIOLATED" });
        }
    }
}

fn verdict(s: &mut String, v: &DimensionVerdict) {
    let kind = match v.kind {
        VerdictKind::Exact => "",
        VerdictKind::UpperBound => " (upper bound)",
    };
    let _ = writeln!(s, "{} = {}{kind}", v.dimension, v.value);
    if !v.certificate.is_empty() {
        let _ = writeln!(s, "  certificate: {}", v.certificate);
    }
    let _ = writeln!(s, "  {}", v.certainty);
    for c in &v.checks {
        let mark = if c.passed { "ok" } else { "FAILED" };
        let _ = writeln!(s, "  check {}: {} [{mark}]", c.name, c.detail);
    }
}

fn homology(s: &mut String, h: &HomologyRecord) {
    let mut any = false;
    for e in &h.entries {
        if e.is_zero() {
            continue;
        }
        any = true;
        let dims: Vec<String> = e
            .dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, d)| format!("{d} in degree {}", e.first_degree + k as i32))
            .collect();
        let _ = writeln!(s, "H_{}: {}", e.index, dims.join(", "));
    }
    if !any {
        let _ = writeln!(s, "exact");
    }
    let _ = writeln!(s, "({})", h.certainty);
}

/// Betti table with one row per `internal degree − homological index`.
fn betti(s: &mut String, b: &BettiTable) {
    let mut grid: BTreeMap<i32, BTreeMap<i32, usize>> = BTreeMap::new();
    for row in &b.rows {
        for (&d, &c) in &row.counts {
            grid.entry(d - row.index).or_default().insert(row.index, c);
        }
    }
    let idx: Vec<i32> = b.rows.iter().map(|r| r.index).collect();
    let w = b.rows.iter().map(|r| r.total().to_string().len()).max().unwrap_or(1).max(3);
    let _ = write!(s, "{:>7}", "");
    for i in &idx {
        let _ = write!(s, " {i:>w$}");
    }
    let _ = write!(s, "\n{:>7}", "total:");
    for r in &b.rows {
        let _ = write!(s, " {:>w$}", r.total());
    }
    let _ = writeln!(s);
    for (shift, row) in &grid {
        let _ = write!(s, "{:>7}", format!("{shift}:"));
        for i in &idx {
            match row.get(i) {
                Some(c) => {
                    let _ = write!(s, " {c:>w$}");
                }
                None => {
                    let _ = write!(s, " {:>w$}", ".");
                }
            }
        }
        let _ = writeln!(s);
    }
    let status = if b.terminated { "resolution terminates".to_string() } else { format!("computed through index {}", b.cutoff) };
    let _ = writeln!(s, "{status} ({})", b.certainty);
}

#[cfg(test)]
mod tests {
    use super::*;
    use homdim::dimensions::Check;
    use homdim::value::DimValue;

    fn verdict(name: &str, value: DimValue, passed: bool) -> DimensionVerdict {
        DimensionVerdict {
            dimension: name.into(),
            value,
            kind: VerdictKind::Exact,
            certificate: String::new(),
            certainty: Certainty::Certified,
            caps: Caps::default(),
            checks: vec![Check { name: "depth R - depth X".into(), passed, detail: "0".into() }],
        }
    }

    fn report(result: Outcome) -> Report {
        Report {
            command: "test".into(),
            caps: Caps::default(),
            seed: None,
            ring: RingFile { characteristic: 101, variables: vec!["x".into()], relations: vec![] },
            body: Body::Objects(vec![ObjectReport { object: "X".into(), result }]),
        }
    }

    #[test]
    fn failed_checks_and_hierarchy_violations_are_reported() {
        assert!(report(Outcome::Verdict(verdict("pd", DimValue::Finite(1), true))).violations().is_empty());
        let bad = report(Outcome::Verdict(verdict("pd", DimValue::Finite(1), false)));
        assert_eq!(bad.violations().len(), 1);
        let h = HierarchyReport {
            gdim: verdict("gdim", DimValue::Finite(2), true),
            pci: verdict("CI*-dim", DimValue::Finite(1), true),
            ci: verdict("CI-dim", DimValue::Finite(1), true),
            pd: verdict("pd", DimValue::Finite(1), true),
            violations: vec!["gdim vs CI*-dim: 2 and 1".into()],
            gaps: vec![],
        };
        let r = report(Outcome::Hierarchy(h));
        assert_eq!(r.violations(), vec!["X: gdim vs CI*-dim: 2 and 1".to_string()]);
        assert!(r.to_table().contains("VIOLATION"));
        let back: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
