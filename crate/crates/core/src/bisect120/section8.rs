//! Audit of the closed-form characterisation of integral bisectors in terms
//! of the family parameters `(d, r, t)`.
//!
//! Case A covers F1/F3 and case B covers F2/F4; within a case the parity of
//! `(r, t)` picks the family. The printed closed forms are
//!
//! ```text
//! A, 3 ∤ r:  d = 4k(r² − rt − 3t²),     z = 4krt(r² − 2rt − 3t²)
//! A, 3 | r:  d = 4k(r² − rt − 3t²)/3,   z = 36krt(r² − 2rt − 3t²)
//! B, 3 ∤ r:  d = 4k(3t² − rt − r²),     z = 4krt(3t² − 2rt − r²)
//! B, 3 | r:  d = 4k(3t² − rt − r²)/3,   z = 36rt(3t² − 2rt − r²)
//! ```
//!
//! Each [`Variant`] is evaluated and then refereed: `d` must be an admissible
//! family parameter and the bisector `ab/(a+b)` of the triple it induces must
//! equal the claimed `z` exactly.
//!
//! The corrected variant indexes admissible `d` directly. With `m/n` the
//! reduced side ratio, the bisector is integral iff `d = k'·n(m+n)/(rt)` for
//! an integer `k'`; integrality of `d` (and `4 | d` for F1/F2) then restricts
//! `d` to the multiples of a unit `d₀`, and the `k`-th corrected evaluation
//! is `d = k·d₀`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use num_integer::Integer;
use serde::Serialize;

use super::{bisector_length, brute_force, recover_d_z, reduce_ratio, BisectorTriple};
use crate::exactnum::Rational;
use crate::tri120::{FamilyParams, Family, Triple120};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Case {
    A,
    B,
}

impl Case {
    pub fn of(family: Family) -> Case {
        if family.is_large_r() {
            Case::A
        } else {
            Case::B
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::A => "A",
            Case::B => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Variant {
    /// The closed forms exactly as written.
    #[serde(rename = "as_printed")]
    AsPrinted,
    /// As printed, but with the factor `k` present in case B's `z` when `3 | r`.
    #[serde(rename = "printed_k_restored")]
    PrintedKRestored,
    /// As printed, but with `−rt` read as `+2rt` in `d`.
    #[serde(rename = "printed_plus_2rt")]
    PrintedPlus2rt,
    /// `d` and `z` recovered from the reduced side ratio with its actual gcd.
    #[serde(rename = "corrected")]
    Corrected,
}

impl Variant {
    pub const ALL: [Variant; 4] =
        [Variant::AsPrinted, Variant::PrintedKRestored, Variant::PrintedPlus2rt, Variant::Corrected];

    pub fn name(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as_printed",
            Variant::PrintedKRestored => "printed_k_restored",
            Variant::PrintedPlus2rt => "printed_plus_2rt",
            Variant::Corrected => "corrected",
        }
    }

    /// Whether the variant says anything different from `as_printed` here.
    fn distinct_at(self, case: Case, r: u64) -> bool {
        match self {
            Variant::PrintedKRestored => case == Case::B && r.is_multiple_of(3),
            _ => true,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section8Evaluation {
    pub case: Case,
    pub variant: Variant,
    pub family: Family,
    pub k: u64,
    pub r: u64,
    pub t: u64,
    pub d: Rational,
    pub z: Rational,
    /// The family triple for `d`, when `d` is an admissible parameter.
    pub triple: Option<Triple120>,
    /// `ab/(a+b)` of that triple.
    pub induced_bisector: Option<Rational>,
    pub oracle_consistent: bool,
}

impl Section8Evaluation {
    fn sort_key(&self) -> (Case, Variant, u64, u64, u64) {
        (self.case, self.variant, self.r, self.t, self.k)
    }
}

fn printed_d_and_z(case: Case, variant: Variant, k: u64, r: u64, t: u64) -> (Rational, Rational) {
    let (k, r, t) = (k as i128, r as i128, t as i128);
    let three_divides_r = r % 3 == 0;
    let d_core = match (case, variant) {
        (Case::A, Variant::PrintedPlus2rt) => r * r + 2 * r * t - 3 * t * t,
        (Case::B, Variant::PrintedPlus2rt) => 3 * t * t + 2 * r * t - r * r,
        (Case::A, _) => -r * t + r * r - 3 * t * t,
        (Case::B, _) => -r * t + 3 * t * t - r * r,
    };
    let z_core = match case {
        Case::A => -2 * r * t + r * r - 3 * t * t,
        Case::B => -2 * r * t + 3 * t * t - r * r,
    };
    let d = Rational::new(4 * k * d_core, if three_divides_r { 3 } else { 1 }).expect("nonzero");
    let z = if !three_divides_r {
        4 * k * r * t * z_core
    } else if case == Case::B && variant != Variant::PrintedKRestored {
        36 * r * t * z_core
    } else {
        36 * k * r * t * z_core
    };
    (d, Rational::from_integer(z))
}

/// Smallest admissible `d` for which the bisector is integral, and the
/// matching unit-fraction scale `k'`.
fn corrected_unit(family: Family, r: u64, t: u64) -> Result<(u64, u64)> {
    let unit = recover_d_z(family, 1, r, t)?;
    // d(k') = k'·p/q in lowest terms; integral exactly when q | k'
    let p = u64::try_from(unit.d.numer().clone()).map_err(|_| Error::Domain("d overflows u64".into()))?;
    let q = u64::try_from(unit.d.denom().clone()).map_err(|_| Error::Domain("d overflows u64".into()))?;
    let d0 = if family.requires_d_multiple_of_4() { p.lcm(&4) } else { p };
    // k' = d0·q/p
    Ok((d0, d0 / p * q))
}

/// Evaluates one variant of the closed forms at `(case, k, r, t)` and referees it.
pub fn eval_section8(case: Case, variant: Variant, k: u64, r: u64, t: u64) -> Result<Section8Evaluation> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    let family = Family::for_rt(case == Case::A, r, t).ok_or_else(|| {
        Error::FamilyConstraint(format!("case {case}: no family admits r={r}, t={t}"))
    })?;
    let (d, z) = match variant {
        Variant::Corrected => {
            let (_, k_unit) = corrected_unit(family, r, t)?;
            let rec = recover_d_z(family, k * k_unit, r, t)?;
            (rec.d, Rational::from(rec.z))
        }
        _ => printed_d_and_z(case, variant, k, r, t),
    };
    let admissible = d
        .to_u64()
        .filter(|&d| d > 0 && (!family.requires_d_multiple_of_4() || d % 4 == 0));
    let sides = admissible.and_then(|d| FamilyParams::new(family, d, r, t).sides().ok());
    let triple = sides.map(|(a, b, c)| Triple120::new(a, b, c).expect("family output is a 120° triple"));
    let induced_bisector = sides.map(|(a, b, _)| bisector_length(a, b));
    let oracle_consistent = induced_bisector.as_ref() == Some(&z);
    Ok(Section8Evaluation {
        case,
        variant,
        family,
        k,
        r,
        t,
        d,
        z,
        triple,
        induced_bisector,
        oracle_consistent,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditBounds {
    pub r_max: u64,
    pub t_max: u64,
    pub k_max: u64,
}

/// A family `(r, t)` in range whose side-ratio gcd is neither 1 nor 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GcdObservation {
    pub family: Family,
    pub r: u64,
    pub t: u64,
    pub g: u64,
}

/// One machine-readable audit row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub case: Case,
    pub variant: Variant,
    pub k: u64,
    pub r: u64,
    pub t: u64,
    pub d_num: String,
    pub d_den: String,
    pub z: Rational,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub bounds: AuditBounds,
    /// Sorted by `(case, variant, r, t, k)`.
    pub evaluations: Vec<Section8Evaluation>,
    pub unusual_gcds: Vec<GcdObservation>,
    /// Every oracle triple with `c` up to this bound must be reached by a
    /// corrected evaluation within the bounds.
    pub induced_c_bound: u64,
    pub oracle_triples_checked: usize,
    pub unreached: Vec<BisectorTriple>,
}

impl AuditReport {
    pub fn summary(&self, case: Case, variant: Variant) -> (usize, usize) {
        self.evaluations
            .iter()
            .filter(|e| e.case == case && e.variant == variant)
            .fold((0, 0), |(ok, bad), e| if e.oracle_consistent { (ok + 1, bad) } else { (ok, bad + 1) })
    }

    pub fn inconsistent(&self, variant: Variant) -> impl Iterator<Item = &Section8Evaluation> {
        self.evaluations.iter().filter(move |e| e.variant == variant && !e.oracle_consistent)
    }

    pub fn corrected_fully_consistent(&self) -> bool {
        self.inconsistent(Variant::Corrected).next().is_none()
    }

    pub fn only_if_holds(&self) -> bool {
        self.unreached.is_empty()
    }

    pub fn rows(&self) -> Vec<AuditRow> {
        self.evaluations
            .iter()
            .map(|e| AuditRow {
                case: e.case,
                variant: e.variant,
                k: e.k,
                r: e.r,
                t: e.t,
                d_num: e.d.numer().to_string(),
                d_den: e.d.denom().to_string(),
                z: e.z.clone(),
                consistent: e.oracle_consistent,
            })
            .collect()
    }

    pub fn render_text(&self) -> String {
        let AuditBounds { r_max, t_max, k_max } = self.bounds;
        let mut out = String::new();
        let _ = writeln!(out, "audit r<={r_max} t<={t_max} k<={k_max} evaluations={}", self.evaluations.len());
        for case in [Case::A, Case::B] {
            for variant in Variant::ALL {
                let (ok, bad) = self.summary(case, variant);
                let _ = writeln!(out, "case={case} variant={variant} consistent={ok} inconsistent={bad}");
            }
        }
        let _ = writeln!(out, "gcd outside {{1, 3}}: {}", self.unusual_gcds.len());
        for o in &self.unusual_gcds {
            let _ = writeln!(out, "  {} r={} t={} g={}", o.family, o.r, o.t, o.g);
        }
        let _ = writeln!(
            out,
            "only-if: c<={} oracle={} unreached={}",
            self.induced_c_bound,
            self.oracle_triples_checked,
            self.unreached.len()
        );
        for t in &self.unreached {
            let _ = writeln!(out, "  unreached {t}");
        }
        let _ = writeln!(out, "inconsistent evaluations:");
        for e in self.evaluations.iter().filter(|e| !e.oracle_consistent) {
            let _ = write!(
                out,
                "  case={} variant={} family={} k={} r={} t={} d={} z={}",
                e.case, e.variant, e.family, e.k, e.r, e.t, e.d, e.z
            );
            match (&e.triple, &e.induced_bisector) {
                (Some(t), Some(bis)) => {
                    let _ = writeln!(out, " triple={t} bisector={bis}");
                }
                _ => {
                    let _ = writeln!(out, " d not admissible");
                }
            }
        }
        out
    }
}

/// Runs every variant over all valid `(case, r, t)` with `r <= r_max`,
/// `t <= t_max` and `k <= k_max`, then checks the converse: every oracle
/// bisector triple up to the induced bound is reached by a corrected evaluation.
///
/// The induced bound `C` is chosen so that reachability is guaranteed if the
/// corrected description is right. A family representation of a triple with
/// `c <= C` has `r² <= 4c` and `3t² <= 4c`, which keeps `(r, t)` in range,
/// and its index `k = c/c₁` where `c₁ >= c_min`, the least `c` among the
/// `k = 1` corrected evaluations; so `C <= k_max·c_min` keeps `k` in range.
pub fn audit_section8(bounds: AuditBounds) -> AuditReport {
    let AuditBounds { r_max, t_max, k_max } = bounds;
    let mut evaluations = Vec::new();
    let mut unusual_gcds = Vec::new();
    for r in 1..=r_max {
        for t in 1..=t_max {
            for family in Family::ALL {
                if let Ok(red) = reduce_ratio(family, r, t) {
                    if red.g != 1 && red.g != 3 {
                        unusual_gcds.push(GcdObservation { family, r, t, g: red.g });
                    }
                }
            }
            for case in [Case::A, Case::B] {
                for variant in Variant::ALL {
                    if !variant.distinct_at(case, r) {
                        continue;
                    }
                    for k in 1..=k_max {
                        if let Ok(e) = eval_section8(case, variant, k, r, t) {
                            evaluations.push(e);
                        }
                    }
                }
            }
        }
    }
    evaluations.sort_by_key(Section8Evaluation::sort_key);

    let corrected: Vec<_> = evaluations.iter().filter(|e| e.variant == Variant::Corrected).collect();
    let c_min = corrected.iter().filter(|e| e.k == 1).filter_map(|e| e.triple.map(|t| t.c)).min();
    let induced_c_bound = match c_min {
        Some(c_min) => (((r_max + 1).pow(2) - 1) / 4)
            .min((3 * (t_max + 1).pow(2) - 1) / 4)
            .min(k_max * c_min),
        None => 0,
    };
    let reached: BTreeSet<Triple120> = corrected.iter().filter_map(|e| e.triple).collect();
    let oracle = if induced_c_bound > 0 { brute_force(induced_c_bound) } else { BTreeSet::new() };
    let unreached = oracle.iter().filter(|bt| !reached.contains(&bt.triple())).copied().collect();

    AuditReport {
        bounds,
        evaluations,
        unusual_gcds,
        induced_c_bound,
        oracle_triples_checked: oracle.len(),
        unreached,
    }
}
