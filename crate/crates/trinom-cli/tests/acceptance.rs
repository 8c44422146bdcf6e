//! Acceptance suite: one test per shipped guarantee, each printing a
//! PASS/FAIL line (visible with `--nocapture`; the test name doubles as the
//! line under the default harness). All algebra is exact, so every
//! comparison is equality; the stated wall-clock budgets are asserted too.
//!
//! Run with `cargo test -p trinom-cli --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use trinom::criteria;
use trinom::gf2poly::Gf2Poly;
use trinom::oracle;
use trinom::order;
use trinom::verify::{run_suite, Suite, SweepOptions};

fn sweep(suite: Suite, budget: Duration) -> (u64, Duration) {
    let start = Instant::now();
    let report = run_suite(suite, &SweepOptions::default()).unwrap();
    let elapsed = start.elapsed();
    assert!(
        report.counterexamples.is_empty(),
        "suite {suite} found counterexamples: {:#?}",
        report.counterexamples
    );
    assert!(
        elapsed <= budget,
        "suite {suite} took {elapsed:?}, budget {budget:?}"
    );
    (report.cases, elapsed)
}

fn pass(name: &str, detail: String) {
    println!("acceptance {name}: PASS ({detail})");
}

#[test]
fn criterion_01_selfreciprocal_divisibility_sweep() {
    // every irreducible of degree 2..=13: the order-multiple-of-3 test agrees
    // with the exhaustive search for a self-reciprocal trinomial of degree < e
    let (cases, elapsed) = sweep(Suite::Thm1, Duration::from_secs(60));
    assert!(cases >= 1375, "expected the full sweep, ran {cases}");
    pass("01 selfreciprocal-divisibility", format!("{cases} polys in {elapsed:?}"));
}

#[test]
fn criterion_02_unique_selfreciprocal_multiple() {
    // whenever 3 | e the search finds exactly one multiple, at (2e/3, e/3)
    let (cases, elapsed) = sweep(Suite::Lemma1, Duration::from_secs(60));
    assert!(cases >= 398, "expected every order divisible by 3, ran {cases}");
    pass("02 unique-selfreciprocal-multiple", format!("{cases} polys in {elapsed:?}"));
}

#[test]
fn criterion_03_cyclotomic_recomposition() {
    // x^{2m}+x^m+1 recomposes bit-exactly for every m <= 1024, and for odd m
    // the factor degrees sum to 2m
    let (cases, elapsed) = sweep(Suite::Thm2, Duration::from_secs(30));
    assert_eq!(cases, 1024);
    pass("03 cyclotomic-recomposition", format!("m <= {cases} in {elapsed:?}"));
}

#[test]
fn criterion_04_welch_count_matches_enumeration() {
    // half the Welch gcd degree equals the enumerated count for every
    // irreducible of degree <= 13; the gcd is even-degree and squarefree
    let (cases, elapsed) = sweep(Suite::Thm3, Duration::from_secs(60));
    assert!(cases >= 1376, "expected the full sweep, ran {cases}");
    pass("04 welch-count", format!("{cases} polys in {elapsed:?}"));
}

#[test]
fn criterion_05_primitive_count_formula() {
    // every primitive polynomial of degree k = 2..=12 divides exactly
    // 2^(k-1) - 1 trinomials of degree < 2^k - 1; degree 12 has all 144
    let (cases, elapsed) = sweep(Suite::Cor3, Duration::from_secs(60));
    assert!(cases >= 479, "expected every primitive through degree 12, ran {cases}");
    pass("05 primitive-count", format!("{cases} polys in {elapsed:?}"));
}

#[test]
fn criterion_06_single_multiple_is_selfreciprocal() {
    // count 1 forces 3 | e and the one multiple is self-reciprocal
    let (cases, elapsed) = sweep(Suite::Thm4, Duration::from_secs(60));
    assert!(cases >= 1376);
    pass("06 single-multiple", format!("{cases} polys in {elapsed:?}"));
}

#[test]
fn criterion_07_necessary_condition_soundness() {
    // 10^4 random tuples failing the necessary condition: direct division
    // never contradicts it
    let (cases, elapsed) = sweep(Suite::Thm5, Duration::from_secs(60));
    assert_eq!(cases, 10_000);
    pass("07 necessary-condition", format!("{cases} tuples in {elapsed:?}"));
}

#[test]
fn criterion_08_extended_welch_equivalence() {
    // gcd criterion vs brute witness search for every irreducible of degree
    // <= 10 and all multipliers a, b <= 12
    let (cases, elapsed) = sweep(Suite::Thm6, Duration::from_secs(120));
    assert!(cases >= 225 * 144, "expected the full grid, ran {cases}");
    pass("08 extended-welch", format!("{cases} cases in {elapsed:?}"));
}

#[test]
fn criterion_09_mod3_rule() {
    // the residue rule for x^2+x+1 matches direct division for all
    // 1 <= k < n <= 200
    let (cases, elapsed) = sweep(Suite::Cor4, Duration::from_secs(60));
    assert_eq!(cases, 199);
    pass("09 mod3-rule", format!("n <= 200 in {elapsed:?}"));
}

#[test]
fn criterion_10_welch_consistency() {
    // welch(e) = ext_welch(e, 1, 1) for every odd e <= 2001, and every
    // realized order that is a multiple of 3 passes the Welch test
    let (cases, elapsed) = sweep(Suite::Cor5, Duration::from_secs(60));
    assert!(cases >= 1001 + 1376);
    pass("10 welch-consistency", format!("{cases} cases in {elapsed:?}"));
}

#[test]
fn criterion_11_performance_budgets() {
    // the quadratic gcd at e = 2^18 - 1 in <= 10 s
    let start = Instant::now();
    let g = criteria::welch_gcd((1 << 18) - 1).unwrap();
    let gcd_elapsed = start.elapsed();
    assert_eq!(g.degree(), Some((1 << 18) - 2));
    assert!(
        gcd_elapsed <= Duration::from_secs(10),
        "welch_gcd(2^18-1) took {gcd_elapsed:?}"
    );

    // the enumeration path on a full-period degree-20 irreducible in <= 30 s
    let f = (1..20u64)
        .map(|k| Gf2Poly::from_exponents(&[20, k, 0]).unwrap())
        .find(|f| {
            order::is_irreducible(f).unwrap() && order::certify(f).unwrap().primitive
        })
        .expect("a primitive trinomial of degree 20 exists");
    let info = order::certify(&f).unwrap();
    assert_eq!(info.order, (1 << 20) - 1);
    let start = Instant::now();
    let multiples = oracle::brute_trinomial_multiples(&info).unwrap();
    let oracle_elapsed = start.elapsed();
    assert_eq!(multiples.len() as u64, (1 << 19) - 1); // 2^(k-1) - 1 again
    assert!(
        oracle_elapsed <= Duration::from_secs(30),
        "degree-20 enumeration took {oracle_elapsed:?}"
    );
    pass(
        "11 performance",
        format!("gcd {gcd_elapsed:?}, enumeration {oracle_elapsed:?}"),
    );
}

#[test]
fn criterion_12_redundant_search_is_certified() {
    // no irreducible trinomial of degree 8 exists, so the search must fall
    // back on reducible ones -- and find some by degree 24
    let out = Command::new(env!("CARGO_BIN_EXE_trinom"))
        .args(["--format", "json", "search-redundant", "8", "--max-degree", "24"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    let reported: Vec<Gf2Poly> = record["outputs"]["trinomials"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap().parse().unwrap())
        .collect();
    assert!(!reported.is_empty(), "degree-8 redundant trinomials exist by degree 24");

    // independent certification: enumerate the degree-8 irreducibles by
    // trial division, certify each reported trinomial's factor, divide
    let degree8: Vec<Gf2Poly> = (0..1u64 << 7)
        .map(|mid| Gf2Poly::from_bits((1 << 8) | (mid << 1) | 1))
        .filter(|f| oracle::brute_irreducible(f).unwrap())
        .collect();
    assert_eq!(degree8.len(), 30);
    for t in &reported {
        assert!(t.degree().unwrap() <= 24);
        let factor = degree8
            .iter()
            .find(|f| t.is_divisible_by(f).unwrap())
            .unwrap_or_else(|| panic!("{t} has no irreducible degree-8 factor"));
        let info = order::certify(factor).unwrap();
        assert_eq!(info.degree, 8);
        let (q, r) = t.div_rem(factor).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(factor), *t);
    }
    // no irreducible trinomial of degree 8 hides among them
    for t in &reported {
        if t.degree() == Some(8) {
            assert!(!order::is_irreducible(t).unwrap());
        }
    }
    pass(
        "12 redundant-search",
        format!("{} trinomials, every factor certified", reported.len()),
    );
}
