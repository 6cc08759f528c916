use contfrac::{ContinuedFraction, TSpec};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::args::CfArgs;
use crate::error::{CliError, Result};
use crate::output::emit;

pub fn run(args: &CfArgs) -> Result<()> {
    if args.depth == 0 {
        return Err(CliError::usage("depth must be >= 1"));
    }
    let spec = TSpec::parse(&args.t)?;
    let cf = ContinuedFraction::expand(&spec, args.depth)?;

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["m", "quotient", "p", "q", "value"])?;
    let mut last: Option<(BigInt, BigInt)> = None;
    let mut rows = 0usize;
    for conv in cf.convergent_stream().skip(1).take(args.depth) {
        let value = Ratio::new(conv.p.clone(), conv.q.clone())
            .to_f64()
            .unwrap_or(f64::NAN);
        let quotient = cf
            .quotient(conv.m)
            .map(|z| z.to_string())
            .unwrap_or_default();
        writer.write_record(&[
            conv.m.to_string(),
            quotient,
            conv.p.to_string(),
            conv.q.to_string(),
            value.to_string(),
        ])?;
        rows += 1;
        last = Some((conv.p, conv.q));
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::usage(format!("csv failure: {e}")))?;

    let tail = match &last {
        Some((p, q)) => format!("{p}/{q}"),
        None => "none".to_string(),
    };
    let summary = format!("cf: t={spec} convergents={rows} last={tail}");
    emit(&bytes, args.out.as_deref(), &summary)
}
