use limsup_lab::{coverage_report, tail_union_measures, volume_sum};
use serde_json::json;
use symbolic::SumVerdict;

use crate::args::CoverageArgs;
use crate::error::{CliError, Result};
use crate::output::{emit, json_bytes, write_atomic};
use crate::specs::{parse_ifs, parse_levels, parse_measure, parse_rate, parse_resolution};

pub fn run(args: &CoverageArgs) -> Result<()> {
    let ifs = parse_ifs(&args.ifs)?;
    let measure = parse_measure(&args.measure, ifs.alphabet_size())?;
    let rate = parse_rate(&args.h)?;
    let levels = parse_levels(&args.levels)?;
    let resolution = args.grid.as_deref().map(parse_resolution).transpose()?;
    if args.hits_csv.is_some() && resolution.is_none() {
        return Err(CliError::usage("--hits-csv needs --grid"));
    }
    let report = coverage_report(
        &ifs,
        &measure,
        args.z,
        &rate,
        levels,
        resolution,
        args.kmax,
        args.clamp,
    )?;

    let mut volume_sums = Vec::new();
    for &sigma in &args.sigma {
        let sum = volume_sum(&measure, &rate, sigma, args.vol_horizon)?;
        volume_sums.push(json!({
            "sigma": sum.sigma,
            "branching": sum.branching,
            "horizon": args.vol_horizon,
            "total": sum.total,
            "verdict": verdict_name(sum.verdict),
        }));
    }

    let level_rows: Vec<_> = report
        .levels
        .iter()
        .map(|level| {
            json!({
                "n": level.n,
                "measure": level.measure,
                "intervals": level.intervals.len(),
            })
        })
        .collect();
    let tails = tail_union_measures(&report.levels);
    let artifact = json!({
        "schema": 1,
        "command": "coverage",
        "config": {
            "ifs": args.ifs,
            "measure": args.measure,
            "h": args.h,
            "z": args.z,
            "levels": args.levels,
            "grid": args.grid,
            "kmax": args.kmax,
            "clamp": args.clamp,
            "sigma": args.sigma,
            "vol_horizon": args.vol_horizon,
        },
        "ambient": [report.ambient.0, report.ambient.1],
        "ambient_measure": report.ambient_measure(),
        "levels": level_rows,
        "partial_sums": report.measure_partial_sums,
        "tails": tails,
        "kfold": report.kfold,
        "ks_bound": report.ks_bound,
        "ks_levels": report.ks_levels,
        "grid_resolution": report.grid_resolution,
        "volume_sums": volume_sums,
    });
    let bytes = json_bytes(&artifact)?;

    if let Some(path) = &args.hits_csv {
        let hits = report
            .hit_counts
            .as_ref()
            .expect("hit counts exist whenever a grid resolution is given");
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(["cell", "count"])?;
        for (cell, count) in hits.iter().enumerate() {
            writer.write_record(&[cell.to_string(), count.to_string()])?;
        }
        let csv_bytes = writer
            .into_inner()
            .map_err(|e| CliError::usage(format!("csv failure: {e}")))?;
        write_atomic(path, &csv_bytes)?;
    }

    let summary = format!(
        "coverage: levels={} ks_bound={} kfold1={}",
        args.levels,
        report.ks_bound,
        report.kfold.first().copied().unwrap_or(0.0)
    );
    emit(&bytes, args.out.as_deref(), &summary)
}

fn verdict_name(verdict: SumVerdict) -> &'static str {
    match verdict {
        SumVerdict::Divergent => "divergent",
        SumVerdict::Convergent => "convergent",
        SumVerdict::DivergentLooking => "divergent-looking",
        SumVerdict::ConvergentLooking => "convergent-looking",
    }
}
