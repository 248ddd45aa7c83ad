//! 120° triangles whose 120° bisector also has integral length.
//!
//! The bisector of the 120° angle satisfies 1/z = 1/a + 1/b, so an integral
//! bisector triple is a 120° triple whose `(a, b, z)` solves the unit-fraction
//! equation: `a = k·m·(m+n)`, `b = k·n·(m+n)`, `z = k·m·n`. The 120° identity
//! then reads `c² = k²(m+n)²(m² + mn + n²)`, so `m² + mn + n²` must be a
//! square `s²` and `(m, n, s)` is itself a 120° triple.
//!
//! [`section8`] audits the closed-form `d`/`z` characterisation in terms of
//! the family parameters against this exact description.

pub mod section8;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::exactnum::Rational;
use crate::numth::{isqrt, lowest_terms, squarefree_decompose};
use crate::tri120::{self, is_120_triple, Family, Triple120};
use crate::unitfrac;
use crate::{Error, Result};

pub use section8::{audit_section8, eval_section8, AuditBounds, AuditReport, Case, Section8Evaluation, Variant};

/// A canonical 120° triple (`a <= b`) together with its integral bisector `z`.
///
/// Ordered by `(c, a)` like [`Triple120`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BisectorTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub z: u64,
}

impl BisectorTriple {
    pub fn new(a: u64, b: u64, c: u64, z: u64) -> Result<Self> {
        let t = Triple120::new(a, b, c)?;
        let bt = BisectorTriple { a: t.a, b: t.b, c: t.c, z };
        if !bt.bisector_identity_holds() {
            return Err(Error::Domain(format!("{z} is not the bisector of {t}")));
        }
        Ok(bt)
    }

    /// z·(a + b) = a·b.
    pub fn bisector_identity_holds(&self) -> bool {
        self.z as u128 * (self.a as u128 + self.b as u128) == self.a as u128 * self.b as u128
    }

    pub fn is_valid(&self) -> bool {
        self.a <= self.b && is_120_triple(self.a, self.b, self.c) && self.bisector_identity_holds()
    }

    pub fn triple(&self) -> Triple120 {
        Triple120 { a: self.a, b: self.b, c: self.c }
    }

    /// `(k, m, n)` of the unit-fraction parametrization of `(a, b, z)`.
    pub fn unit_fraction_params(&self) -> (u64, u64, u64) {
        unitfrac::decompose(self.a, self.b, self.z).expect("bisector identity holds")
    }

    /// Divides out `gcd(a, b, c, z)`.
    pub fn primitive(&self) -> (BisectorTriple, u64) {
        let g = self.a.gcd(&self.b).gcd(&self.c).gcd(&self.z);
        (BisectorTriple { a: self.a / g, b: self.b / g, c: self.c / g, z: self.z / g }, g)
    }

    pub fn scale(&self, k: u64) -> Self {
        BisectorTriple { a: self.a * k, b: self.b * k, c: self.c * k, z: self.z * k }
    }
}

impl Ord for BisectorTriple {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.c, self.a, self.b, self.z).cmp(&(other.c, other.a, other.b, other.z))
    }
}

impl PartialOrd for BisectorTriple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BisectorTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, z={})", self.a, self.b, self.c, self.z)
    }
}

/// `ab/(a+b)`, the length of the 120° bisector.
pub fn bisector_length(a: u64, b: u64) -> Rational {
    Rational::new(a as u128 * b as u128, a as u128 + b as u128).expect("a + b > 0")
}

pub fn has_integral_bisector(a: u64, b: u64) -> Option<u64> {
    let (p, s) = (a as u128 * b as u128, a as u128 + b as u128);
    (s > 0 && p % s == 0).then(|| (p / s) as u64)
}

/// Square-root and squarefree parts of `m² + mn + n²`.
pub fn norm_class(m: u64, n: u64) -> Result<(u64, u64)> {
    squarefree_decompose(m * m + m * n + n * n)
}

/// All bisector triples with `c <= c_max`, from the `(k, m, n)` parametrization.
///
/// For coprime `m <= n` with `m² + mn + n² = s²` the base triple has
/// `c = (m+n)·s > (m+n)·n`, which bounds both loops.
pub fn generate_complete(c_max: u64) -> BTreeSet<BisectorTriple> {
    let mut out = BTreeSet::new();
    let mut n = 1u64;
    while (n + 1) * n <= c_max {
        for m in 1..=n {
            if (m + n) * n > c_max {
                break;
            }
            if m.gcd(&n) != 1 {
                continue;
            }
            let (s, square) = isqrt(m * m + m * n + n * n);
            if !square {
                continue;
            }
            let base_c = (m + n) * s;
            for k in 1..=c_max / base_c {
                out.insert(BisectorTriple {
                    a: k * m * (m + n),
                    b: k * n * (m + n),
                    c: k * base_c,
                    z: k * m * n,
                });
            }
        }
        n += 1;
    }
    out
}

/// Oracle: every 120° triple up to `c_max` that happens to have an integral bisector.
pub fn brute_force(c_max: u64) -> BTreeSet<BisectorTriple> {
    tri120::brute_force(c_max)
        .into_iter()
        .filter_map(|t| {
            has_integral_bisector(t.a, t.b).map(|z| BisectorTriple { a: t.a, b: t.b, c: t.c, z })
        })
        .collect()
}

/// `a/b` for a family in lowest terms, `m/n`, with the gcd `g` that was removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RatioReduction {
    pub m: u64,
    pub n: u64,
    pub g: u64,
}

/// Reduces the family's side ratio `a/b = P/(4rt)` (or `Q/(4rt)`) to lowest terms.
pub fn reduce_ratio(family: Family, r: u64, t: u64) -> Result<RatioReduction> {
    family.check_rt(r, t)?;
    let numer = family.a_numerator(r, t);
    if numer <= 0 {
        return Err(Error::NonPositiveRatio { family: family.to_string(), r, t });
    }
    let lt = lowest_terms(numer as u64, 4 * r * t)?;
    Ok(RatioReduction { m: lt.a, n: lt.b, g: lt.scale })
}

/// What [`recover_d_z`] found for one `(family, k, r, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recovery {
    pub family: Family,
    pub k: u64,
    pub r: u64,
    pub t: u64,
    pub ratio: RatioReduction,
    /// `b/(rt)`; only an admissible family parameter when it is an integer
    /// meeting the family's `d` conditions.
    pub d: Rational,
    pub z: u64,
    pub triple: BisectorTriple,
}

impl Recovery {
    /// `d` as a family parameter, when it is one.
    pub fn admissible_d(&self) -> Option<u64> {
        let d = self.d.to_u64().filter(|&d| d > 0)?;
        (!self.family.requires_d_multiple_of_4() || d % 4 == 0).then_some(d)
    }
}

/// Builds the bisector triple for `(k, m, n)` with `m/n` the reduced family
/// ratio, and the family parameter `d` that would produce it.
///
/// `b = d·r·t = k·n·(m+n)` gives `d = k·n·(m+n)/(r·t)` exactly; it is
/// reported as a rational because it need not be integral.
pub fn recover_d_z(family: Family, k: u64, r: u64, t: u64) -> Result<Recovery> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    let ratio = reduce_ratio(family, r, t)?;
    let RatioReduction { m, n, .. } = ratio;
    let (s, square) = isqrt(m * m + m * n + n * n);
    // the reduced ratio of a 120° triple always has a square norm
    debug_assert!(square);
    if !square {
        return Err(Error::FamilyArithmetic(format!("{family} r={r} t={t}: m²+mn+n² not square")));
    }
    let (a, b, c, z) = (k * m * (m + n), k * n * (m + n), k * (m + n) * s, k * m * n);
    let d = Rational::new(b, r * t).expect("rt > 0");
    Ok(Recovery {
        family,
        k,
        r,
        t,
        ratio,
        d,
        z,
        triple: BisectorTriple { a: a.min(b), b: a.max(b), c, z },
    })
}
