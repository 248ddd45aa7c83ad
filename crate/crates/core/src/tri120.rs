//! Integral triangles with a 120° angle.
//!
//! A triple `(a, b, c)` has the 120° angle between sides `a` and `b` exactly
//! when `c² = a² + ab + b²`. Four parametric families (`F1`..`F4`) generate
//! these triples; they overlap, so every triple is tagged with every family
//! that produces it. [`brute_force`] is the exhaustive referee.
//!
//! With `P = r² − 2rt − 3t²`, `Q = 3t² − 2rt − r²` and `S = r² + 3t²`:
//!
//! | family | a      | b   | c      | conditions                           |
//! |--------|--------|-----|--------|--------------------------------------|
//! | F1     | d·P/4  | drt | d·S/4  | 4 \| d, r + t odd, r > 3t           |
//! | F2     | d·Q/4  | drt | d·S/4  | 4 \| d, r + t odd, r < t            |
//! | F3     | d·P/4  | drt | d·S/4  | r, t odd, r > 3t                     |
//! | F4     | d·Q/4  | drt | d·S/4  | r, t odd, r < t                      |
//!
//! and gcd(r, t) = 1 throughout.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::numth::isqrt;
use crate::{Error, Result};

/// Sides `a <= b` around the 120° angle and the opposite side `c`.
///
/// Ordered by `(c, a)`, which is the output order of every enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Triple120 {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Triple120 {
    /// Validates the 120° identity and puts the sides in canonical order.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::Domain(format!("sides must be positive, got ({a}, {b}, {c})")));
        }
        if !is_120_triple(a, b, c) {
            return Err(Error::Domain(format!("({a}, {b}, {c}) is not a 120-degree triple")));
        }
        Ok(Self::canonical(a, b, c))
    }

    fn canonical(a: u64, b: u64, c: u64) -> Self {
        Triple120 { a: a.min(b), b: a.max(b), c }
    }

    pub fn scale(&self, k: u64) -> Self {
        Triple120 { a: self.a * k, b: self.b * k, c: self.c * k }
    }
}

impl Ord for Triple120 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.c, self.a, self.b).cmp(&(other.c, other.a, other.b))
    }
}

impl PartialOrd for Triple120 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Triple120 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

pub fn is_120_triple(a: u64, b: u64, c: u64) -> bool {
    let (a, b, c) = (a as u128, b as u128, c as u128);
    c * c == a * a + a * b + b * b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::F1, Family::F2, Family::F3, Family::F4];

    /// F1 and F2 require `4 | d` and `r + t` odd; F3 and F4 take any `d` with `r`, `t` odd.
    pub fn requires_d_multiple_of_4(self) -> bool {
        matches!(self, Family::F1 | Family::F2)
    }

    /// F1 and F3 use `r > 3t`; F2 and F4 use `r < t`.
    pub fn is_large_r(self) -> bool {
        matches!(self, Family::F1 | Family::F3)
    }

    /// Checks every side condition that involves only `r` and `t`.
    pub fn check_rt(self, r: u64, t: u64) -> Result<()> {
        let fail = |why: &str| Err(Error::FamilyConstraint(format!("{self} with r={r}, t={t}: {why}")));
        if r == 0 || t == 0 {
            return fail("r and t must be positive");
        }
        if r.gcd(&t) != 1 {
            return fail("r and t must be coprime");
        }
        if self.requires_d_multiple_of_4() {
            if (r + t).is_multiple_of(2) {
                return fail("r + t must be odd");
            }
        } else if r.is_multiple_of(2) || t.is_multiple_of(2) {
            return fail("r and t must both be odd");
        }
        if self.is_large_r() {
            if r <= 3 * t {
                return fail("r > 3t required");
            }
        } else if r >= t {
            return fail("r < t required");
        }
        Ok(())
    }

    /// The family, if any, whose `r`/`t` conditions `(r, t)` meets.
    pub fn for_rt(large_r: bool, r: u64, t: u64) -> Option<Family> {
        Family::ALL
            .into_iter()
            .filter(|f| f.is_large_r() == large_r)
            .find(|f| f.check_rt(r, t).is_ok())
    }

    /// Signed numerator of `a/d`, times 4: `P` for F1/F3, `Q` for F2/F4.
    pub fn a_numerator(self, r: u64, t: u64) -> i128 {
        let (r, t) = (r as i128, t as i128);
        if self.is_large_r() {
            r * r - 2 * r * t - 3 * t * t
        } else {
            3 * t * t - 2 * r * t - r * r
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::F1 => "F1",
            Family::F2 => "F2",
            Family::F3 => "F3",
            Family::F4 => "F4",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub family: Family,
    pub d: u64,
    pub r: u64,
    pub t: u64,
}

impl FamilyParams {
    pub fn new(family: Family, d: u64, r: u64, t: u64) -> Self {
        FamilyParams { family, d, r, t }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::FamilyConstraint(format!("{}: d must be positive", self.family)));
        }
        if self.family.requires_d_multiple_of_4() && !self.d.is_multiple_of(4) {
            return Err(Error::FamilyConstraint(format!(
                "{}: d = {} is not a multiple of 4",
                self.family, self.d
            )));
        }
        self.family.check_rt(self.r, self.t)
    }

    /// Sides `(a, b, c)` in the family's own orientation (`b = drt`), not canonicalised.
    pub fn sides(&self) -> Result<(u64, u64, u64)> {
        self.validate()?;
        let FamilyParams { family, d, r, t } = *self;
        let d_wide = d as i128;
        let a4 = d_wide * family.a_numerator(r, t);
        let c4 = d_wide * (r as i128 * r as i128 + 3 * t as i128 * t as i128);
        if a4 <= 0 {
            return Err(Error::FamilyConstraint(format!("{self:?} gives a non-positive side")));
        }
        if a4 % 4 != 0 || c4 % 4 != 0 {
            return Err(Error::FamilyArithmetic(format!("{self:?}: division by 4 is not exact")));
        }
        let narrow = |v: i128| {
            u64::try_from(v).map_err(|_| Error::FamilyArithmetic(format!("{self:?} overflows u64")))
        };
        Ok((narrow(a4 / 4)?, narrow(d_wide * r as i128 * t as i128)?, narrow(c4 / 4)?))
    }
}

pub fn from_family(params: FamilyParams) -> Result<Triple120> {
    let (a, b, c) = params.sides()?;
    debug_assert!(is_120_triple(a, b, c));
    Ok(Triple120::canonical(a, b, c))
}

/// Every triple with `c <= c_max` produced by some family, with the families that produce it.
///
/// Since `c = d·(r² + 3t²)/4` and `d >= 1`, the sweep only needs
/// `r² + 3t² <= 4·c_max`, and for each `(r, t)` only `d <= 4·c_max/(r² + 3t²)`.
pub fn enumerate_families(c_max: u64) -> BTreeMap<Triple120, BTreeSet<Family>> {
    let mut out: BTreeMap<Triple120, BTreeSet<Family>> = BTreeMap::new();
    let limit = 4 * c_max;
    let mut t = 1u64;
    while 3 * t * t < limit {
        let mut r = 1u64;
        while r * r + 3 * t * t <= limit {
            let s = r * r + 3 * t * t;
            for family in Family::ALL {
                if family.check_rt(r, t).is_err() {
                    continue;
                }
                let step = if family.requires_d_multiple_of_4() { 4 } else { 1 };
                let mut d = step;
                while d * s <= limit {
                    let triple = from_family(FamilyParams::new(family, d, r, t))
                        .expect("parameters satisfy the family constraints");
                    out.entry(triple).or_default().insert(family);
                    d += step;
                }
            }
            r += 1;
        }
        t += 1;
    }
    out
}

/// Oracle: scan `a <= b` and test `a² + ab + b²` for a square `<= c_max²`.
pub fn brute_force(c_max: u64) -> BTreeSet<Triple120> {
    let mut out = BTreeSet::new();
    let c_sq_max = c_max * c_max;
    for a in 1..c_max {
        for b in a..c_max {
            let norm = a * a + a * b + b * b;
            if norm > c_sq_max {
                break;
            }
            let (c, exact) = isqrt(norm);
            if exact {
                out.insert(Triple120 { a, b, c });
            }
        }
    }
    out
}

/// Divides out `gcd(a, b, c)`; returns the primitive triple and the factor.
pub fn primitive_reduce(t: Triple120) -> (Triple120, u64) {
    let g = t.a.gcd(&t.b).gcd(&t.c);
    (Triple120 { a: t.a / g, b: t.b / g, c: t.c / g }, g)
}
