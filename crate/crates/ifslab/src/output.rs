use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

use crate::error::Result;

/// Writes `bytes` to `path` through a temporary file in the same
/// directory, so a crash never leaves a half-written artifact.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Sends the artifact to `--out` (then prints the one-line summary) or,
/// with no path, prints the artifact itself on stdout.
pub fn emit(bytes: &[u8], out: Option<&Path>, summary: &str) -> Result<()> {
    match out {
        Some(path) => {
            write_atomic(path, bytes)?;
            println!("{summary} -> {}", path.display());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
        }
    }
    Ok(())
}

/// Pretty JSON with a trailing newline. `serde_json` keeps object keys
/// sorted, so the bytes are reproducible.
pub fn json_bytes(value: &Value) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// JSON encoding of an exact integer: a number while it fits 64 bits,
/// otherwise a decimal string.
pub fn json_bigint(value: &BigInt) -> Value {
    match value.to_i64() {
        Some(small) => Value::from(small),
        None => Value::from(value.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_write_replaces_content() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("artifact.txt");
        write_atomic(&path, b"first").unwrap();
        write_atomic(&path, b"second").unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), b"second");
    }

    #[test]
    fn big_integers_become_strings_past_64_bits() {
        let small = BigInt::from(42);
        assert_eq!(json_bigint(&small), Value::from(42));
        let big: BigInt = BigInt::from(1) << 100;
        assert_eq!(
            json_bigint(&big),
            Value::from("1267650600228229401496703205376")
        );
    }
}
