//! Small-depth separation scans over signed-digit sums.
//!
//! For a contraction ratio `lambda` the scan compares all level-`n` sums
//! `sum a_j lambda^(j-1)` with signs `a_j` in {-1, 1} and records the
//! smallest gap between distinct sums, scaled by `2^n`. At quadratic
//! parameters the sums live in an integer lattice of a real quadratic
//! field, so the scan sorts exact coordinates and reports gaps that are
//! either exactly zero or provably positive.

use crate::{FamiliesError, Result};

/// Largest admissible scan depth; the level-`n` pass sorts `2^n` sums.
pub const SCAN_DEPTH_CAP: u32 = 16;

/// Contraction ratio for a separation scan.
///
/// The two named variants run on exact integer coordinates; `Numeric`
/// evaluates sums in floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScanLambda {
    /// Ratio `1/sqrt(2)`, coordinates in the lattice `Z + Z sqrt(2)`.
    ReciprocalSqrtTwo,
    /// Ratio `1/phi` for the golden ratio `phi`, coordinates in `Z + Z phi`.
    ReciprocalGolden,
    /// Arbitrary ratio in (1/2, 1).
    Numeric(f64),
}

impl ScanLambda {
    /// Numeric value of the ratio.
    pub fn value(self) -> f64 {
        match self {
            ScanLambda::ReciprocalSqrtTwo => std::f64::consts::FRAC_1_SQRT_2,
            ScanLambda::ReciprocalGolden => (5.0f64.sqrt() - 1.0) / 2.0,
            ScanLambda::Numeric(x) => x,
        }
    }
}

/// Smallest gap between distinct level-`n` sums, raw and scaled by `2^n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GarsiaRecord {
    pub n: u32,
    pub min_gap: f64,
    pub scaled_min: f64,
}

/// Full scan output: one record per level plus the running infimum of the
/// scaled gaps, the empirical separation constant of the parameter.
#[derive(Debug, Clone)]
pub struct GarsiaScan {
    pub lambda: f64,
    pub records: Vec<GarsiaRecord>,
    pub empirical_s: f64,
}

/// Quadratic lattices with an exact sign test for `x + y * irr`.
#[derive(Clone, Copy)]
enum Lattice {
    /// `irr = sqrt(2)`; the sums are pre-multiplied by `sqrt(2)^(n-1)`.
    SqrtTwo,
    /// `irr = phi`; no pre-multiplication is needed.
    Golden,
}

impl Lattice {
    /// Exact ordering of `x1 + y1 * irr` against `x2 + y2 * irr`.
    fn cmp(self, a: (i64, i64), b: (i64, i64)) -> std::cmp::Ordering {
        let (dx, dy) = (a.0 - b.0, a.1 - b.1);
        let (u, v) = match self {
            Lattice::SqrtTwo => (dx, dy),
            Lattice::Golden => (2 * dx + dy, dy),
        };
        let disc = match self {
            Lattice::SqrtTwo => 2,
            Lattice::Golden => 5,
        };
        use std::cmp::Ordering;
        if u >= 0 && v >= 0 {
            if u == 0 && v == 0 {
                Ordering::Equal
            } else {
                Ordering::Greater
            }
        } else if u <= 0 && v <= 0 {
            Ordering::Less
        } else if u > 0 {
            (u * u).cmp(&(disc * v * v))
        } else {
            (disc * v * v).cmp(&(u * u))
        }
    }

    /// Numeric value of the lattice point `x + y * irr`.
    fn to_f64(self, p: (i64, i64)) -> f64 {
        let irr = match self {
            Lattice::SqrtTwo => std::f64::consts::SQRT_2,
            Lattice::Golden => (1.0 + 5.0f64.sqrt()) / 2.0,
        };
        p.0 as f64 + p.1 as f64 * irr
    }

    /// Lattice coordinates of the factor multiplying the `j`-th sign at
    /// level `n`, after the level's pre-multiplication.
    fn coordinate(self, n: u32, j: u32) -> (i64, i64) {
        match self {
            // sqrt(2)^(n-1) / sqrt(2)^(j-1) = sqrt(2)^(n-j).
            Lattice::SqrtTwo => {
                let k = n - j;
                if k % 2 == 0 {
                    (1i64 << (k / 2), 0)
                } else {
                    (0, 1i64 << (k / 2))
                }
            }
            // (1/phi)^k = (-1)^k (F_{k+1} - F_k phi) with F the Fibonacci
            // numbers, F_0 = 0 and F_1 = 1.
            Lattice::Golden => {
                let k = (j - 1) as usize;
                let mut fib = [0i64; SCAN_DEPTH_CAP as usize + 2];
                fib[1] = 1;
                for i in 2..fib.len() {
                    fib[i] = fib[i - 1] + fib[i - 2];
                }
                if k % 2 == 0 {
                    (fib[k + 1], -fib[k])
                } else {
                    (-fib[k + 1], fib[k])
                }
            }
        }
    }
}

/// All `2^n` signed sums of the level-`n` lattice coordinates.
fn lattice_sums(lattice: Lattice, n: u32) -> Vec<(i64, i64)> {
    let mut sums = vec![(0i64, 0i64)];
    for j in 1..=n {
        let (cx, cy) = lattice.coordinate(n, j);
        let mut next = Vec::with_capacity(sums.len() * 2);
        for &(x, y) in &sums {
            next.push((x + cx, y + cy));
            next.push((x - cx, y - cy));
        }
        sums = next;
    }
    sums
}

/// Smallest gap between distinct level-`n` sums on an exact lattice,
/// already divided back by the level's pre-multiplication factor.
fn exact_min_gap(lattice: Lattice, n: u32) -> f64 {
    let mut sums = lattice_sums(lattice, n);
    sums.sort_unstable_by(|a, b| lattice.cmp(*a, *b));
    let mut min_gap = f64::INFINITY;
    for pair in sums.windows(2) {
        let (dx, dy) = (pair[1].0 - pair[0].0, pair[1].1 - pair[0].1);
        if dx == 0 && dy == 0 {
            return 0.0;
        }
        let gap = lattice.to_f64((dx, dy));
        if gap < min_gap {
            min_gap = gap;
        }
    }
    match lattice {
        Lattice::SqrtTwo => min_gap / std::f64::consts::SQRT_2.powi(n as i32 - 1),
        Lattice::Golden => min_gap,
    }
}

/// All `2^n` signed sums `sum a_j lambda^(j-1)` in ascending order.
fn numeric_sorted_sums(lambda: f64, n: u32) -> Vec<f64> {
    let mut sums = vec![0.0f64];
    let mut power = 1.0f64;
    for _ in 1..=n {
        let mut next = Vec::with_capacity(sums.len() * 2);
        for &s in &sums {
            next.push(s + power);
            next.push(s - power);
        }
        sums = next;
        power *= lambda;
    }
    sums.sort_unstable_by(f64::total_cmp);
    sums
}

/// Smallest gap between consecutive sorted level-`n` sums at a numeric
/// parameter.
fn numeric_min_gap(lambda: f64, n: u32) -> f64 {
    let sums = numeric_sorted_sums(lambda, n);
    sums.windows(2)
        .map(|pair| pair[1] - pair[0])
        .fold(f64::INFINITY, f64::min)
}

/// Scans levels `1..=n_max` and records the smallest gap between distinct
/// signed sums at each level, scaled by `2^n`.
pub fn garsia_separation_scan(lambda: ScanLambda, n_max: u32) -> Result<GarsiaScan> {
    if n_max == 0 {
        return Err(FamiliesError::ZeroLevel);
    }
    if n_max > SCAN_DEPTH_CAP {
        return Err(FamiliesError::ScanDepthCap {
            n_max,
            cap: SCAN_DEPTH_CAP,
        });
    }
    if let ScanLambda::Numeric(x) = lambda {
        if !x.is_finite() || x <= 0.5 || x >= 1.0 {
            return Err(FamiliesError::BadScanLambda { lambda: x });
        }
    }
    let records: Vec<GarsiaRecord> = (1..=n_max)
        .map(|n| {
            let min_gap = match lambda {
                ScanLambda::ReciprocalSqrtTwo => exact_min_gap(Lattice::SqrtTwo, n),
                ScanLambda::ReciprocalGolden => exact_min_gap(Lattice::Golden, n),
                ScanLambda::Numeric(x) => numeric_min_gap(x, n),
            };
            GarsiaRecord {
                n,
                min_gap,
                scaled_min: (1u64 << n) as f64 * min_gap,
            }
        })
        .collect();
    let empirical_s = records
        .iter()
        .map(|r| r.scaled_min)
        .fold(f64::INFINITY, f64::min);
    Ok(GarsiaScan {
        lambda: lambda.value(),
        records,
        empirical_s,
    })
}
