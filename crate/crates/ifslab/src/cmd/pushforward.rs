use ifs_engine::empirical_pushforward;

use crate::args::PushforwardArgs;
use crate::error::{CliError, Result};
use crate::output::emit;
use crate::specs::{parse_ifs, parse_measure};

pub fn run(args: &PushforwardArgs) -> Result<()> {
    let ifs = parse_ifs(&args.ifs)?;
    let measure = parse_measure(&args.measure, ifs.alphabet_size())?;
    let masses = empirical_pushforward(&ifs, &measure, args.n, args.z, args.bins)?;
    let (lo, hi) = ifs.attractor_bounds();
    let width = (hi - lo) / args.bins as f64;

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["bin", "lo", "hi", "mass"])?;
    for (bin, mass) in masses.iter().enumerate() {
        let bin_lo = lo + bin as f64 * width;
        let bin_hi = if bin + 1 == masses.len() {
            hi
        } else {
            lo + (bin + 1) as f64 * width
        };
        writer.write_record(&[
            bin.to_string(),
            bin_lo.to_string(),
            bin_hi.to_string(),
            mass.to_string(),
        ])?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::usage(format!("csv failure: {e}")))?;

    let total: f64 = masses.iter().sum();
    let summary = format!(
        "pushforward: n={} bins={} total_mass={}",
        args.n, args.bins, total
    );
    emit(&bytes, args.out.as_deref(), &summary)
}
