//! Acceptance criteria, one test per criterion. Each prints a single
//! pass/fail line (visible with `--nocapture`) and enforces its runtime
//! budget.

use std::time::{Duration, Instant};

use charwalk::verify::{self, Scope};

fn report(criterion: &str, start: Instant, budget: Duration, checks: &[verify::Check]) {
    let elapsed = start.elapsed();
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    let status = if failed.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {status} ({} checks, {:.2?})",
        checks.len(),
        elapsed
    );
    for c in checks {
        println!(
            "  [{}] {} {}: {}",
            if c.passed { "ok" } else { "FAILED" },
            c.suite,
            c.name,
            c.detail
        );
    }
    assert!(failed.is_empty(), "failed checks: {failed:#?}");
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

/// Exact reproduction of the closed-form anchor values: the signed
/// holding value -1, the hypercube quarter-root and bounded-step bounds,
/// and the Hamming inputs and both bound formulas. Each item must finish
/// within one second.
#[test]
fn criterion_1_exact_values() {
    let start = Instant::now();
    let mut checks = Vec::new();
    for (name, item) in verify::exact_value_items() {
        let t = Instant::now();
        let result = item();
        let took = t.elapsed();
        let passed = result.is_ok();
        checks.push(verify::Check {
            suite: "bounds",
            name: name.into(),
            passed,
            detail: match result {
                Ok(d) => format!("{d} ({took:.2?})"),
                Err(e) => e.to_string(),
            },
        });
        assert!(
            took <= Duration::from_secs(1),
            "{name} exceeded its 1s budget: {took:?}"
        );
    }
    report("1 (exact values)", start, Duration::from_secs(4), &checks);
}

/// The orthogonality identity suite, exact with zero tolerance, at the
/// stated desk-scale ranges.
#[test]
fn criterion_2_orthogonality() {
    let start = Instant::now();
    let checks = verify::orthogonality_suite(&Scope::default());
    report(
        "2 (orthogonality)",
        start,
        Duration::from_secs(120),
        &checks,
    );
}

/// The chain suite: stochasticity, reversibility, linear regressions with
/// the stated constants, variance identity, and eigenvector relations.
#[test]
fn criterion_3_chains() {
    let start = Instant::now();
    let checks = verify::chains_suite(&Scope::default());
    report("3 (chains)", start, Duration::from_secs(180), &checks);
}

/// The cross-oracle suite: closed-form moment statistics against direct
/// pair sums, spectral walk occupancies against enumeration, and the
/// structural identities tying them together.
#[test]
fn criterion_4_cross_oracles() {
    let start = Instant::now();
    let checks = verify::moments_suite(&Scope::default());
    report(
        "4 (cross-oracles)",
        start,
        Duration::from_secs(600),
        &checks,
    );
}

/// The domination suite: exact Kolmogorov distances stay below the
/// assembled bounds at float tolerance 1e-12, across all five families.
#[test]
fn criterion_5_domination() {
    let start = Instant::now();
    let checks = verify::bounds_domination(&Scope::default());
    assert_eq!(checks.len(), 5, "one domination check per structure family");
    report("5 (domination)", start, Duration::from_secs(300), &checks);
}

/// The scaling reports: the rescaled columns must be produced and finite;
/// no numeric assertion is made on their limits.
#[test]
fn criterion_6_scaling_reports() {
    let start = Instant::now();
    let checks = verify::bounds_sweeps(&Scope::default());
    assert_eq!(checks.len(), 3);
    let tables = [
        verify::sweep_limgroup(2, 6, 12).unwrap(),
        verify::sweep_cltgel(2, 4, 12).unwrap(),
        verify::sweep_projerror(1, 6, 10).unwrap(),
    ];
    for t in &tables {
        assert!(!t.rows.is_empty());
        for row in &t.rows {
            assert!(row.total_scaled.is_finite() && row.term1_scaled.is_finite());
        }
        println!(
            "sweep {}: n = {}..{}, total*n^(1/4) in [{:.4}, {:.4}]",
            t.variant,
            t.rows.first().unwrap().size,
            t.rows.last().unwrap().size,
            t.rows
                .iter()
                .map(|r| r.total_scaled)
                .fold(f64::INFINITY, f64::min),
            t.rows
                .iter()
                .map(|r| r.total_scaled)
                .fold(f64::NEG_INFINITY, f64::max),
        );
    }
    report(
        "6 (scaling reports)",
        start,
        Duration::from_secs(300),
        &checks,
    );
}
