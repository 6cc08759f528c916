use families::{lambda_sweep, FamilySpec, SweepConfig};
use serde_json::json;

use crate::args::SweepArgs;
use crate::error::{CliError, Result};
use crate::output::{emit, json_bytes, write_atomic};
use crate::specs::{parse_f64_list, parse_lambda_grid, parse_measure, parse_word};

pub fn run(args: &SweepArgs, seed: u64) -> Result<()> {
    let (lo, hi, steps) = parse_lambda_grid(&args.lambda)?;
    let family = match args.family.as_str() {
        "bc" | "013" if args.digits.is_some() => {
            return Err(CliError::usage(
                "--digits only applies to the custom family",
            ));
        }
        "bc" => FamilySpec::bernoulli_convolution(),
        "013" => FamilySpec::zero_one_three(),
        "custom" => {
            let digits = args
                .digits
                .as_deref()
                .ok_or_else(|| CliError::usage("the custom family needs --digits"))?;
            FamilySpec::custom(parse_f64_list(digits)?, (lo, hi))?
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown family {other:?}: expected bc, 013, or custom"
            )));
        }
    };
    let measure = parse_measure(&args.measure, family.digits().len())?;
    let z_word = parse_word(&args.z_word, family.digits().len() as u8)?;
    let c_grid = parse_f64_list(&args.c_grid)?;
    let config = SweepConfig {
        lo,
        hi,
        steps,
        s: args.s,
        n: args.n,
        margin: args.margin,
        c_grid: c_grid.clone(),
    };
    let result = lambda_sweep(&family, &measure, &z_word, &config)?;

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["lambda", "ratio", "delta"])?;
    for i in 0..result.lambdas.len() {
        writer.write_record(&[
            result.lambdas[i].to_string(),
            result.ratios[i].to_string(),
            result.min_gaps[i].to_string(),
        ])?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::usage(format!("csv failure: {e}")))?;

    if let Some(path) = &args.json {
        let fractions: Vec<_> = result
            .c_grid
            .iter()
            .zip(&result.fractions)
            .map(|(c, fraction)| json!({"c": c, "fraction": fraction}))
            .collect();
        let artifact = json!({
            "schema": 1,
            "command": "sweep",
            "config": {
                "family": args.family,
                "digits": family.digits(),
                "lambda": args.lambda,
                "s": args.s,
                "n": args.n,
                "margin": args.margin,
                "c_grid": args.c_grid,
                "measure": args.measure,
                "z_word": args.z_word,
                "seed": seed,
            },
            "fractions": fractions,
        });
        write_atomic(path, &json_bytes(&artifact)?)?;
    }

    let summary = format!(
        "sweep: family={} lambdas={} min_ratio={}",
        args.family,
        result.lambdas.len(),
        result
            .ratios
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    );
    emit(&bytes, args.out.as_deref(), &summary)
}
