//! Parsers for the small spec grammars used by the flags: IFS specs,
//! measures, rate functions, level ranges, and grids.

use ifs_engine::Similarity1D;
use symbolic::{RateFunction, SymbolicMeasure, Word};

use crate::error::{CliError, Result};

/// Inclusive level range written `a..b`.
pub fn parse_levels(text: &str) -> Result<std::ops::RangeInclusive<u32>> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| CliError::usage(format!("level range {text:?} must be written a..b")))?;
    let lo: u32 = a
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad level {a:?}")))?;
    let hi: u32 = b
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad level {b:?}")))?;
    Ok(lo..=hi)
}

/// Grid resolution written `2^-k` or as a positive float.
pub fn parse_resolution(text: &str) -> Result<f64> {
    let text = text.trim();
    if let Some(exp) = text.strip_prefix("2^") {
        let k: i32 = exp
            .parse()
            .map_err(|_| CliError::usage(format!("bad dyadic exponent {exp:?}")))?;
        return Ok((k as f64).exp2());
    }
    let value: f64 = text
        .parse()
        .map_err(|_| CliError::usage(format!("bad resolution {text:?}")))?;
    if !(value > 0.0 && value.is_finite()) {
        return Err(CliError::usage(format!(
            "resolution {value} must be positive and finite"
        )));
    }
    Ok(value)
}

/// Contraction-ratio grid written `lo:hi:steps`.
pub fn parse_lambda_grid(text: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!(
            "lambda grid {text:?} must be written lo:hi:steps"
        )));
    }
    let lo: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad grid endpoint {:?}", parts[0])))?;
    let hi: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad grid endpoint {:?}", parts[1])))?;
    let steps: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad step count {:?}", parts[2])))?;
    Ok((lo, hi, steps))
}

/// Comma list of floats.
pub fn parse_f64_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| CliError::usage(format!("bad number {:?}", part.trim())))
        })
        .collect()
}

/// Splits on commas at bracket depth zero, so digit lists survive.
fn split_top_level(body: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in body.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&body[start..]);
    parts
}

/// IFS spec: `similarity1d(lambda=0.5, digits=[-1,1])` or `phit(t=...)`.
pub fn parse_ifs(text: &str) -> Result<Similarity1D> {
    let text = text.trim();
    if let Some(body) = text
        .strip_prefix("similarity1d(")
        .and_then(|s| s.strip_suffix(')'))
    {
        let mut lambda: Option<f64> = None;
        let mut digits: Option<Vec<f64>> = None;
        for part in split_top_level(body) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("expected key=value, got {part:?}")))?;
            match key.trim() {
                "lambda" => {
                    lambda = Some(value.trim().parse::<f64>().map_err(|_| {
                        CliError::usage(format!("bad lambda {:?}", value.trim()))
                    })?);
                }
                "digits" => {
                    let list = value
                        .trim()
                        .strip_prefix('[')
                        .and_then(|s| s.strip_suffix(']'))
                        .ok_or_else(|| {
                            CliError::usage(format!("digits {value:?} must be [a,b,...]"))
                        })?;
                    digits = Some(parse_f64_list(list)?);
                }
                other => {
                    return Err(CliError::usage(format!("unknown similarity1d key {other:?}")));
                }
            }
        }
        let lambda = lambda.ok_or_else(|| CliError::usage("similarity1d needs lambda="))?;
        let digits = digits.ok_or_else(|| CliError::usage("similarity1d needs digits="))?;
        return Ok(Similarity1D::new(lambda, digits)?);
    }
    if let Some(body) = text.strip_prefix("phit(").and_then(|s| s.strip_suffix(')')) {
        let t = body
            .trim()
            .strip_prefix("t=")
            .ok_or_else(|| CliError::usage("phit spec must be phit(t=...)"))?;
        let sys = phit::PhiTSystem::parse(t.trim())?;
        return Ok(sys.similarity()?);
    }
    Err(CliError::usage(format!(
        "ifs spec {text:?} must start with similarity1d( or phit("
    )))
}

/// Measure spec: `uniform` over the IFS alphabet or a probability list.
pub fn parse_measure(text: &str, alphabet: usize) -> Result<SymbolicMeasure> {
    let text = text.trim();
    if text == "uniform" {
        if alphabet == 0 || alphabet > u8::MAX as usize {
            return Err(CliError::usage(format!(
                "alphabet size {alphabet} outside 1..=255"
            )));
        }
        return Ok(SymbolicMeasure::uniform(alphabet as u8));
    }
    let probs = parse_f64_list(text)?;
    if probs.len() != alphabet {
        return Err(CliError::usage(format!(
            "measure has {} entries but the IFS has {alphabet} maps",
            probs.len()
        )));
    }
    Ok(SymbolicMeasure::bernoulli(&probs)?)
}

/// Rate-function spec: `constant(c)`, `reciprocal`, `reciprocal-square`,
/// `geometric(rho)`, or `table(path)` with one value per line.
pub fn parse_rate(text: &str) -> Result<RateFunction> {
    let text = text.trim();
    match text {
        "reciprocal" => return Ok(RateFunction::Reciprocal),
        "reciprocal-square" => return Ok(RateFunction::ReciprocalSquare),
        _ => {}
    }
    if let Some(body) = text.strip_prefix("constant(").and_then(|s| s.strip_suffix(')')) {
        let c: f64 = body
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad constant {body:?}")))?;
        return Ok(RateFunction::Constant(c));
    }
    if let Some(body) = text.strip_prefix("geometric(").and_then(|s| s.strip_suffix(')')) {
        let rho: f64 = body
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad ratio {body:?}")))?;
        return Ok(RateFunction::Geometric { rho });
    }
    if let Some(body) = text.strip_prefix("table(").and_then(|s| s.strip_suffix(')')) {
        let content = std::fs::read_to_string(body.trim())
            .map_err(|e| CliError::usage(format!("cannot read table {body:?}: {e}")))?;
        let values: Vec<f64> = content
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(|line| {
                line.parse::<f64>()
                    .map_err(|_| CliError::usage(format!("bad table value {line:?}")))
            })
            .collect::<Result<_>>()?;
        return Ok(RateFunction::Tabulated { values });
    }
    Err(CliError::usage(format!(
        "rate spec {text:?} not recognized; try reciprocal, reciprocal-square, constant(c), geometric(rho), table(path)"
    )))
}

/// Anchor word written as a digit string over symbols 1..=alphabet.
pub fn parse_word(text: &str, alphabet: u8) -> Result<Word> {
    let digits: Vec<u8> = text
        .trim()
        .chars()
        .map(|ch| {
            ch.to_digit(10)
                .map(|d| d as u8)
                .ok_or_else(|| CliError::usage(format!("bad word digit {ch:?}")))
        })
        .collect::<Result<_>>()?;
    Ok(Word::new(digits, alphabet)?)
}
