//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Every check is exact (set equality or exact field arithmetic); there are
//! no numeric tolerances. Runtimes are reported next to their budgets.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bisect120::bisect120::{
    audit_section8, brute_force as bisector_brute, eval_section8, generate_complete, reduce_ratio, AuditBounds,
    BisectorTriple, Case, Variant,
};
use bisect120::exactnum::Rational;
use bisect120::geomkernel::{build_triangle, verify_prop1, verify_ptolemy, Figure};
use bisect120::tri120::{self, Family, Triple120};
use bisect120::{unitfrac, Error};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn tri(a: u64, b: u64, c: u64) -> Triple120 {
    Triple120::new(a, b, c).expect("valid triple")
}

fn bt(a: u64, b: u64, c: u64, z: u64) -> BisectorTriple {
    BisectorTriple::new(a, b, c, z).expect("valid bisector triple")
}

/// The `p/q` grid with `p, q <= 20`: 400 rationals, 160 000 pairs.
fn grid() -> Vec<Rational> {
    (1..=20i64)
        .flat_map(|p| (1..=20i64).map(move |q| Rational::new(p, q).unwrap()))
        .collect()
}

fn ac1_unit_fraction_completeness() -> Outcome {
    let all = unitfrac::enumerate(500).map_err(|e| e.to_string())?;
    let mut solutions = 0;
    for z in 1..=500u64 {
        let para: BTreeSet<_> = all.iter().filter(|s| s.z == z).map(|s| (s.x, s.y)).collect();
        let brute: BTreeSet<_> = unitfrac::brute_force(z).into_iter().collect();
        check(para == brute, format!("z={z}: parametric {para:?} vs brute {brute:?}"))?;
        solutions += brute.len();
    }
    check(all.len() == solutions, "enumerate produced solutions outside z <= 500 or duplicates")?;
    Ok(format!("z<=500, {solutions} solutions, sets equal"))
}

fn ac2_family_coverage() -> Outcome {
    let families: BTreeSet<_> = tri120::enumerate_families(2000).into_keys().collect();
    let oracle = tri120::brute_force(2000);
    let only_fam = families.difference(&oracle).count();
    let only_brute = oracle.difference(&families).count();
    check(only_fam == 0 && only_brute == 0, format!("only-families={only_fam} only-brute={only_brute}"))?;
    let smallest: Vec<_> = oracle.iter().take(3).copied().collect();
    check(
        smallest == vec![tri(3, 5, 7), tri(7, 8, 13), tri(6, 10, 14)],
        format!("three smallest oracle members {smallest:?}"),
    )?;
    Ok(format!("c<=2000, {} triples, sets equal", oracle.len()))
}

fn ac3_bisector_characterization() -> Outcome {
    let para = generate_complete(10_000);
    let oracle = bisector_brute(10_000);
    check(para == oracle, format!(
        "only-parametric={} only-brute={}",
        para.difference(&oracle).count(),
        oracle.difference(&para).count()
    ))?;
    let smallest: Vec<_> = oracle.iter().take(2).copied().collect();
    check(smallest == vec![bt(24, 40, 56, 15), bt(48, 80, 112, 30)], format!("two smallest {smallest:?}"))?;
    let first_78 = oracle.iter().find(|t| {
        let (_, m, n) = t.unit_fraction_params();
        (m, n) == (7, 8)
    });
    check(first_78 == Some(&bt(105, 120, 195, 56)), format!("smallest with generator (7, 8): {first_78:?}"))?;
    check(oracle.iter().all(BisectorTriple::is_valid), "identity check failed")?;
    Ok(format!("c<=10000, {} triples, sets equal", oracle.len()))
}

fn ac4_prop1_grid() -> Outcome {
    let g = grid();
    let mut cases = 0usize;
    for a in &g {
        for b in &g {
            let ok = verify_prop1(a.clone(), b.clone()).map_err(|e| e.to_string())?;
            check(ok, format!("verify_prop1 failed at a={a} b={b}"))?;
            cases += 1;
        }
    }
    check(cases == 160_000, format!("{cases} cases"))?;
    Ok(format!("{cases} cases, 0 failures"))
}

fn ac5_ptolemy_grid() -> Outcome {
    let g = grid();
    let mut cases = 0usize;
    for a in &g {
        for b in &g {
            let fig = Figure::new(build_triangle(a.clone(), b.clone()).map_err(|e| e.to_string())?);
            check(fig.verify_eq2_eq4(), format!("equilateral/sum identity failed at a={a} b={b}"))?;
            check(fig.verify_similarity_ratio(), format!("similarity ratio failed at a={a} b={b}"))?;
            let circle = &fig.circle;
            let [p1, p2, p3, p4] = fig.quadrilateral();
            check(
                verify_ptolemy(circle, [p1, p2, p3, p4]) == Ok(true),
                format!("ptolemy failed at a={a} b={b}"),
            )?;
            let mut off = p3.clone();
            off.x = &off.x + &bisect120::exactnum::QSqrt3::one();
            check(
                verify_ptolemy(circle, [p1, p2, &off, p4]) == Err(Error::NotConcyclic(2)),
                format!("off-circle control not rejected at a={a} b={b}"),
            )?;
            check(
                verify_ptolemy(circle, [p1, p3, p2, p4]) == Err(Error::Order),
                format!("order control not rejected at a={a} b={b}"),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} quadrilaterals, 0 failures, {} negative controls rejected", 2 * cases))
}

fn ac6_section8_audit() -> Outcome {
    let bounds = AuditBounds { r_max: 30, t_max: 10, k_max: 3 };
    let report = audit_section8(bounds);
    let bad: Vec<_> = report.inconsistent(Variant::Corrected).collect();
    check(bad.is_empty(), format!("{} corrected inconsistencies, first {:?}", bad.len(), bad.first()))?;
    check(report.oracle_triples_checked > 0, "induced bound checks no oracle triple")?;
    check(report.only_if_holds(), format!("unreached oracle triples {:?}", report.unreached))?;

    let again = audit_section8(bounds);
    check(report.render_text() == again.render_text(), "text report differs between runs")?;
    check(report.rows() == again.rows(), "rows differ between runs")?;

    let printed = eval_section8(Case::A, Variant::AsPrinted, 1, 4, 1).map_err(|e| e.to_string())?;
    check(
        !printed.oracle_consistent
            && printed.d == Rational::from(36u64)
            && printed.z == Rational::from(80u64)
            && printed.induced_bisector == Some(Rational::new(240, 7).unwrap()),
        format!("as_printed (A, 1, 4, 1): {printed:?}"),
    )?;
    let in_report = report
        .inconsistent(Variant::AsPrinted)
        .any(|e| (e.case, e.k, e.r, e.t) == (Case::A, 1, 4, 1));
    check(in_report, "(A, 1, 4, 1) not flagged in the report")?;
    let corrected = eval_section8(Case::A, Variant::Corrected, 1, 4, 1).map_err(|e| e.to_string())?;
    check(
        corrected.oracle_consistent && corrected.d == Rational::from(84u64) && corrected.z == Rational::from(80u64),
        format!("corrected (A, 1, 4, 1): {corrected:?}"),
    )?;
    let (_, printed_bad_a) = report.summary(Case::A, Variant::AsPrinted);
    let (_, printed_bad_b) = report.summary(Case::B, Variant::AsPrinted);
    Ok(format!(
        "{} evaluations, corrected 0 inconsistent, as_printed inconsistent A={printed_bad_a} B={printed_bad_b}, \
         only-if c<={} ({} oracle triples) all reached",
        report.evaluations.len(),
        report.induced_c_bound,
        report.oracle_triples_checked
    ))
}

fn ac7_gcd_scope() -> Outcome {
    let mut checked = 0;
    for r in 1..=100u64 {
        for t in 1..=100u64 {
            for family in [Family::F1, Family::F2] {
                let Ok(red) = reduce_ratio(family, r, t) else { continue };
                let expected = if r % 3 == 0 { 3 } else { 1 };
                check(red.g == expected, format!("{family} r={r} t={t}: g={}", red.g))?;
                checked += 1;
            }
        }
    }
    let f3 = reduce_ratio(Family::F3, 5, 1).map_err(|e| e.to_string())?;
    check(f3.g == 4, format!("F3 r=5 t=1: g={}", f3.g))?;
    let report = audit_section8(AuditBounds { r_max: 30, t_max: 10, k_max: 3 });
    let recorded = report
        .unusual_gcds
        .iter()
        .any(|o| (o.family, o.r, o.t, o.g) == (Family::F3, 5, 1, 4));
    check(recorded, "F3 r=5 t=1 g=4 missing from the audit report")?;
    Ok(format!(
        "{checked} F1/F2 inputs with g in {{1,3}} and g=3 iff 3|r; {} F3/F4 inputs with g outside {{1,3}} recorded",
        report.unusual_gcds.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("AC1", "unit-fraction completeness", Duration::from_secs(5), ac1_unit_fraction_completeness),
        ("AC2", "family coverage", Duration::from_secs(10), ac2_family_coverage),
        ("AC3", "bisector characterization", Duration::from_secs(30), ac3_bisector_characterization),
        ("AC4", "bisector identity on rational grid", Duration::from_secs(60), ac4_prop1_grid),
        ("AC5", "ptolemy and far-side identities", Duration::from_secs(60), ac5_ptolemy_grid),
        ("AC6", "closed-form audit", Duration::from_secs(30), ac6_section8_audit),
        ("AC7", "side-ratio gcd scope", Duration::from_secs(30), ac7_gcd_scope),
    ];
    let mut failures = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("{id} PASS {name}: {detail} [{:.2}s, budget {}s]", elapsed.as_secs_f64(), budget.as_secs()),
            Err(why) => {
                failures += 1;
                println!("{id} FAIL {name}: {why} [{:.2}s]", elapsed.as_secs_f64());
            }
        }
        if elapsed > budget {
            println!("{id} note: exceeded expected runtime of {}s", budget.as_secs());
        }
    }
    println!("acceptance: {} passed, {failures} failed", 7 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
