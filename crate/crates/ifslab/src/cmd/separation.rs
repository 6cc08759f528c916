use separation::{cs_probe, separation_profile};
use serde_json::json;

use crate::args::SeparationArgs;
use crate::error::{CliError, Result};
use crate::output::{emit, json_bytes, write_atomic};
use crate::specs::{parse_ifs, parse_levels, parse_measure};

pub fn run(args: &SeparationArgs) -> Result<()> {
    let ifs = parse_ifs(&args.ifs)?;
    let measure = parse_measure(&args.measure, ifs.alphabet_size())?;
    let levels = parse_levels(&args.levels)?;
    let profile = separation_profile(&ifs, &measure, args.z, args.s, levels)?;
    let probe = cs_probe(&profile, args.threshold)?;

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record([
        "n",
        "cardinality",
        "separated",
        "ratio",
        "min_gap",
        "near_pairs",
        "radius",
    ])?;
    for record in &profile.records {
        writer.write_record(&[
            record.n.to_string(),
            record.cardinality.to_string(),
            record.separated.to_string(),
            record.ratio.to_string(),
            record.min_gap.to_string(),
            record.near_pairs.to_string(),
            record.radius.to_string(),
        ])?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::usage(format!("csv failure: {e}")))?;

    if let Some(json_path) = &args.json {
        let artifact = json!({
            "schema": 1,
            "command": "separation",
            "config": {
                "ifs": args.ifs,
                "measure": args.measure,
                "z": args.z,
                "s": args.s,
                "levels": args.levels,
                "threshold": args.threshold,
            },
            "min_ratio": probe.min_ratio,
            "verdict": probe.verdict.to_string(),
            "witness_levels": probe.witness_levels,
        });
        write_atomic(json_path, &json_bytes(&artifact)?)?;
    }

    let summary = format!(
        "separation: levels={} min_ratio={} verdict={}",
        args.levels, probe.min_ratio, probe.verdict
    );
    emit(&bytes, args.out.as_deref(), &summary)
}
