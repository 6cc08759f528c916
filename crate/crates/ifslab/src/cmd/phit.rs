use phit::{
    collapse_levels, detect_overlap, dichotomy_report, ConvergentSide, OverlapVerdict, PhiTSystem,
};
use serde_json::json;

use crate::args::{PhitArgs, PhitReport};
use crate::error::Result;
use crate::output::{emit, json_bigint, json_bytes};

pub fn run(args: &PhitArgs) -> Result<()> {
    let sys = PhiTSystem::parse(&args.t)?;
    let report_name = match args.report {
        PhitReport::Overlap => "overlap",
        PhitReport::Dichotomy => "dichotomy",
        PhitReport::Collapse => "collapse",
    };
    let config = json!({
        "t": sys.spec().to_string(),
        "levels": args.levels,
        "report": report_name,
        "kmax": args.kmax,
    });

    let (payload, summary) = match args.report {
        PhitReport::Overlap => {
            let verdict = detect_overlap(&sys, args.levels)?;
            let (body, line) = match verdict {
                OverlapVerdict::Overlap { level, p, q } => (
                    json!({
                        "verdict": "overlap",
                        "overlap_level": level,
                        "p": json_bigint(&p),
                        "q": json_bigint(&q),
                    }),
                    format!("overlap at level {level}"),
                ),
                OverlapVerdict::NoneUpTo { n_max, eventual_level } => (
                    json!({
                        "verdict": "none-up-to",
                        "n_max": n_max,
                        "eventual_level": eventual_level,
                    }),
                    format!("no overlap up to level {n_max}, eventual at {eventual_level}"),
                ),
                OverlapVerdict::NoneIrrational => (
                    json!({ "verdict": "none-irrational" }),
                    "no overlap at any level".to_string(),
                ),
            };
            (body, line)
        }
        PhitReport::Dichotomy => {
            let report = dichotomy_report(&sys, args.levels)?;
            let verdict = if report.overlap_level.is_some() {
                "overlap"
            } else if report.optimal_exists {
                "optimal-separation"
            } else {
                "undecided"
            };
            let per_level: Vec<_> = report
                .levels
                .iter()
                .map(|l| {
                    json!({
                        "n": l.n,
                        "gap": l.gap,
                        "optimal": l.optimal,
                        "predicted_good": l.predicted_good,
                        "provisional": l.provisional,
                        "discrepancy": l.discrepancy,
                    })
                })
                .collect();
            let line = format!(
                "verdict={verdict} optimal_exists={} window_covered={}",
                report.optimal_exists, report.window_covered
            );
            (
                json!({
                    "verdict": verdict,
                    "overlap_level": report.overlap_level,
                    "window_covered": report.window_covered,
                    "optimal_exists": report.optimal_exists,
                    "discrepancies": report.discrepancies,
                    "per_level": per_level,
                }),
                line,
            )
        }
        PhitReport::Collapse => {
            let levels = collapse_levels(&sys, args.kmax)?;
            let rows: Vec<_> = levels
                .iter()
                .map(|l| {
                    json!({
                        "k": l.k,
                        "m_k": l.m_k,
                        "n_k": l.n_k,
                        "q_mk": json_bigint(&l.q_mk),
                        "side": match l.side {
                            ConvergentSide::Above => "above",
                            ConvergentSide::Below => "below",
                        },
                    })
                })
                .collect();
            let line = format!("collapse levels built for k <= {}", args.kmax);
            (json!({ "collapse_levels": rows }), line)
        }
    };

    let mut artifact = json!({
        "schema": 1,
        "command": "phit",
        "config": config,
        "t": sys.spec().to_string(),
    });
    merge(&mut artifact, payload);
    let bytes = json_bytes(&artifact)?;
    let summary = format!("phit: t={} report={report_name} {summary}", sys.spec());
    emit(&bytes, args.out.as_deref(), &summary)
}

/// Moves every top-level key of `extra` into `base`.
fn merge(base: &mut serde_json::Value, extra: serde_json::Value) {
    if let (Some(base_map), serde_json::Value::Object(extra_map)) = (base.as_object_mut(), extra) {
        for (key, value) in extra_map {
            base_map.insert(key, value);
        }
    }
}
