//! Positive integer solutions of 1/z = 1/x + 1/y.
//!
//! Every solution is `x = k·m·(m+n)`, `y = k·n·(m+n)`, `z = k·m·n` for a
//! unique positive `k` and coprime `(m, n)`. [`enumerate`] walks that
//! parametrization; [`brute_force`] scans x directly and serves as the
//! referee.

use num_integer::Integer;
use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct UnitFractionSolution {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub k: u64,
    pub m: u64,
    pub n: u64,
}

impl UnitFractionSolution {
    /// z·(x + y) = x·y.
    pub fn holds(&self) -> bool {
        satisfies(self.x, self.y, self.z)
    }
}

fn satisfies(x: u64, y: u64, z: u64) -> bool {
    z as u128 * (x as u128 + y as u128) == x as u128 * y as u128
}

pub fn from_params(k: u64, m: u64, n: u64) -> Result<UnitFractionSolution> {
    if k == 0 || m == 0 || n == 0 {
        return Err(Error::Domain(format!("k, m, n must be positive, got ({k}, {m}, {n})")));
    }
    let g = m.gcd(&n);
    if g != 1 {
        return Err(Error::NotCoprime { m, n, gcd: g });
    }
    Ok(UnitFractionSolution {
        x: k * m * (m + n),
        y: k * n * (m + n),
        z: k * m * n,
        k,
        m,
        n,
    })
}

/// Recovers `(k, m, n)` from a solution, or `None` when `(x, y, z)` is not one.
///
/// With `g = gcd(x, y)`, `m = x/g`, `n = y/g`: z(m+n) = g·m·n and
/// gcd(m+n, mn) = 1 force mn | z.
pub fn decompose(x: u64, y: u64, z: u64) -> Option<(u64, u64, u64)> {
    if x == 0 || y == 0 || z == 0 || !satisfies(x, y, z) {
        return None;
    }
    let g = x.gcd(&y);
    let (m, n) = (x / g, y / g);
    let mn = m * n;
    debug_assert_eq!(z % mn, 0);
    Some((z / mn, m, n))
}

/// All solutions with `z <= z_max`, oriented `x <= y`, sorted by `(z, x)`.
pub fn enumerate(z_max: u64) -> Result<Vec<UnitFractionSolution>> {
    if z_max == 0 {
        return Err(Error::Domain("z_max must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut m = 1u64;
    while m * m <= z_max {
        let mut n = m;
        while m * n <= z_max {
            if m.gcd(&n) == 1 {
                for k in 1..=z_max / (m * n) {
                    out.push(from_params(k, m, n).expect("coprime by construction"));
                }
            }
            n += 1;
        }
        m += 1;
    }
    out.sort_by_key(|s| (s.z, s.x));
    Ok(out)
}

/// Oracle: every `(x, y)` with `x <= y` and 1/x + 1/y = 1/z.
///
/// x ranges over (z, 2z]; y = zx/(x − z) must come out integral.
pub fn brute_force(z: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for x in z + 1..=2 * z {
        let num = z * x;
        let den = x - z;
        if num.is_multiple_of(den) {
            out.push((x, num / den));
        }
    }
    out
}
