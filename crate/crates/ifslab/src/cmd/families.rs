use families::{
    alpha_bound_for_digits, difference_ratio, eight_map_cover_constants, garsia_separation_scan,
    similarity_dimension, ScanLambda,
};
use serde_json::json;

use crate::args::{FamiliesAction, FamiliesArgs};
use crate::error::{CliError, Result};
use crate::output::{emit, json_bytes};
use crate::specs::parse_f64_list;

pub fn run(args: &FamiliesArgs) -> Result<()> {
    match &args.action {
        FamiliesAction::Scan { lambda, n_max, out } => {
            let scan_lambda = match lambda.as_str() {
                "inv-sqrt2" => ScanLambda::ReciprocalSqrtTwo,
                "inv-golden" => ScanLambda::ReciprocalGolden,
                text => {
                    let value: f64 = text.parse().map_err(|_| {
                        CliError::usage(format!(
                            "bad lambda {text:?}: expected inv-sqrt2, inv-golden, or a number"
                        ))
                    })?;
                    ScanLambda::Numeric(value)
                }
            };
            let scan = garsia_separation_scan(scan_lambda, *n_max)?;
            let records: Vec<_> = scan
                .records
                .iter()
                .map(|r| json!({"n": r.n, "min_gap": r.min_gap, "scaled_min": r.scaled_min}))
                .collect();
            let artifact = json!({
                "schema": 1,
                "command": "families-scan",
                "config": {"lambda": lambda, "n_max": n_max},
                "lambda": scan.lambda,
                "records": records,
                "empirical_s": scan.empirical_s,
            });
            let summary = format!(
                "families scan: lambda={} levels={} empirical_s={}",
                scan.lambda,
                scan.records.len(),
                scan.empirical_s
            );
            emit(&json_bytes(&artifact)?, out.as_deref(), &summary)
        }
        FamiliesAction::Alpha { digits, out } => {
            let digit_values = parse_f64_list(digits)?;
            let ratio = difference_ratio(&digit_values)?;
            let bound = alpha_bound_for_digits(&digit_values)?;
            let artifact = json!({
                "schema": 1,
                "command": "families-alpha",
                "config": {"digits": digits},
                "digits": digit_values,
                "difference_ratio": ratio,
                "alpha": {"value": bound.value, "rule": bound.rule.to_string()},
            });
            let summary = format!(
                "families alpha: ratio={} alpha={} ({})",
                ratio, bound.value, bound.rule
            );
            emit(&json_bytes(&artifact)?, out.as_deref(), &summary)
        }
        FamiliesAction::Dimension { ratios, out } => {
            let ratio_values = parse_f64_list(ratios)?;
            let dimension = similarity_dimension(&ratio_values)?;
            let residual: f64 = ratio_values
                .iter()
                .map(|r| r.powf(dimension))
                .sum::<f64>()
                - 1.0;
            let artifact = json!({
                "schema": 1,
                "command": "families-dimension",
                "config": {"ratios": ratios},
                "ratios": ratio_values,
                "dimension": dimension,
                "residual": residual,
            });
            let summary = format!("families dimension: d={dimension}");
            emit(&json_bytes(&artifact)?, out.as_deref(), &summary)
        }
        FamiliesAction::EightMap { out } => {
            let constants = eight_map_cover_constants();
            let artifact = json!({
                "schema": 1,
                "command": "families-eight-map",
                "config": {},
                "gamma": constants.gamma,
                "attractor_dimension": constants.attractor_dimension,
                "cover_exponent": constants.cover_exponent,
            });
            let summary = format!(
                "families eight-map: gamma={} dim={} cover={}",
                constants.gamma, constants.attractor_dimension, constants.cover_exponent
            );
            emit(&json_bytes(&artifact)?, out.as_deref(), &summary)
        }
    }
}
