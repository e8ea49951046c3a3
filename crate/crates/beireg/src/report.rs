//! The analysis report: everything the `analyze` command knows about one
//! tree, in a serializable shape.

use crate::bounds::{estimate, matsuda_murai_bounds, thm_lower, thm_upper, RegularityEstimate};
use crate::jewel::{jewel_profile, JewelProfile};
use crate::tree::Tree;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// The five scalar bounds reported for a tree. `mm_*` are the longest
/// induced path and vertex-count bounds, `iv_lower` the internal-vertex
/// lower bound (`iv + 1`, or 0 for the one-vertex tree), `thm_*` the
/// profile bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSummary {
    pub mm_lower: usize,
    pub mm_upper: usize,
    pub iv_lower: usize,
    pub thm_lower: usize,
    pub thm_upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub n: usize,
    pub spine: Vec<usize>,
    pub spine_length: usize,
    pub profile: JewelProfile,
    pub bounds: BoundsSummary,
    pub estimate: RegularityEstimate,
}

pub fn analyze(t: &Tree) -> AnalyzeReport {
    let spine = t.spine();
    let profile = jewel_profile(t);
    let (mm_lower, mm_upper) = matsuda_murai_bounds(t);
    let iv_lower = if t.n() == 1 { 0 } else { profile.iv + 1 };
    AnalyzeReport {
        n: t.n(),
        spine: spine.vertices,
        spine_length: spine.length,
        profile,
        bounds: BoundsSummary {
            mm_lower,
            mm_upper,
            iv_lower,
            thm_lower: thm_lower(t),
            thm_upper: thm_upper(t),
        },
        estimate: estimate(t),
    }
}

impl AnalyzeReport {
    /// Plain-text rendering for terminal output.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices            {}", self.n);
        let _ = writeln!(
            out,
            "spine               {} (length {})",
            self.spine
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("-"),
            self.spine_length
        );
        let p = &self.profile;
        let _ = writeln!(out, "internal vertices   {}", p.iv);
        if p.centers.is_empty() {
            let _ = writeln!(out, "jewel centers       none");
        } else {
            let centers = p
                .centers
                .iter()
                .map(|(c, d)| format!("{c} (D={d})"))
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(out, "jewel centers       {centers}");
            let _ = writeln!(
                out,
                "center components   {:?} (p={}, two-vertex={})",
                p.component_sizes, p.p, p.e_g
            );
        }
        if !p.c_g.is_empty() {
            let _ = writeln!(out, "linking vertices    {:?} (mu={})", p.c_g, p.mu);
        }
        let b = &self.bounds;
        let _ = writeln!(
            out,
            "path/vertex bounds  {} <= reg <= {}",
            b.mm_lower, b.mm_upper
        );
        let _ = writeln!(
            out,
            "profile bounds      {} <= reg <= {}",
            b.thm_lower, b.thm_upper
        );
        match self.estimate.exact {
            Some(v) => {
                let _ = writeln!(out, "estimate            exact {v}");
            }
            None => {
                let _ = writeln!(
                    out,
                    "estimate            {} <= reg <= {}",
                    self.estimate.lower, self.estimate.upper
                );
            }
        }
        for step in &self.estimate.trace {
            let piece = if step.piece.len() > 12 {
                format!("{} vertices", step.piece.len())
            } else {
                format!("{:?}", step.piece)
            };
            let contribution = if step.lower == step.upper {
                format!("{}", step.lower)
            } else {
                format!("{}..{}", step.lower, step.upper)
            };
            let _ = writeln!(out, "  {:<22} {piece} -> {contribution}", step.rule);
        }
        out
    }
}
