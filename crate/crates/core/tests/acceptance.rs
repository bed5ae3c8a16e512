//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are always printed.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use multicore::partition::partitions_of;
use multicore::paths::{count_rect_paths, diagonal_partition, enumerate_rect_paths};
use multicore::verify::{CheckReport, Suite, SuiteLimits};
use multicore::{GapPoset, HookSet, Partition, QPoly};

const PAIR_LIMIT: Duration = Duration::from_secs(10);
const KREWERAS_LIMIT: Duration = Duration::from_secs(5);
const QDET_LIMIT: Duration = Duration::from_secs(5);
const POPOVICIU_LIMIT: Duration = Duration::from_secs(10);
const SYMMETRY_LIMIT: Duration = Duration::from_secs(5);
const GD_LIMIT: Duration = Duration::from_secs(30);
const CONJECTURE_LIMIT: Duration = Duration::from_secs(60);

/// Pairs small enough to scan every partition up to the largest core size.
const SCAN_MAX_SUM: u64 = 11;

type Criterion = fn() -> (Outcome, String);

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(note.into());
        }
    }

    fn reports(&mut self, reports: &[CheckReport]) {
        for r in reports {
            if !r.passed() {
                let kind = if r.has_counterexample() { "counterexample" } else { "failure" };
                let first = r.counterexample.clone().unwrap_or_else(|| "no instances".into());
                self.require(false, format!("{} {kind}: {first}", r.id));
            }
        }
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.require(elapsed < limit, format!("took {:.2}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()));
    }
}

fn run_suites(suites: &[Suite]) -> (Vec<CheckReport>, Duration) {
    let limits = SuiteLimits::default();
    let start = Instant::now();
    let reports = suites.iter().map(|s| s.run(&limits, 1)).collect();
    (reports, start.elapsed())
}

fn summary(reports: &[CheckReport]) -> String {
    reports
        .iter()
        .map(|r| format!("{} {}/{}", r.id, r.instances.iter().filter(|i| i.pass).count(), r.instances.len()))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Counts `(s,t)`-cores by scanning every partition of size at most
/// `(s^2-1)(t^2-1)/24`.
fn scan_pair_cores(s: u64, t: u64) -> usize {
    let bound = ((s * s - 1) * (t * t - 1) / 24) as usize;
    let gens = [s as usize, t as usize];
    (0..=bound).flat_map(partitions_of).filter(|p| p.is_multicore(&gens)).count()
}

fn equinumerosity_pairs() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, elapsed) = run_suites(&[Suite::EquinumerousPairs]);
    o.reports(&reports);
    let mut scanned = 0;
    for t in 2..SCAN_MAX_SUM {
        for s in 1..t {
            if num_integer::gcd(s, t) != 1 || s + t > SCAN_MAX_SUM {
                continue;
            }
            let scan = scan_pair_cores(s, t);
            let formula = count_rect_paths(s, t).unwrap();
            o.require(BigInt::from(scan) == formula, format!("({s},{t}): partition scan {scan}, formula {formula}"));
            scanned += 1;
        }
    }
    o.within(elapsed, PAIR_LIMIT);
    (
        o,
        format!(
            "{}; partition scan on {scanned} pairs with s+t <= {SCAN_MAX_SUM}; {:.2}s",
            summary(&reports),
            elapsed.as_secs_f64()
        ),
    )
}

fn kreweras() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, elapsed) = run_suites(&[Suite::Kreweras]);
    o.reports(&reports);
    o.require(reports[0].instances.len() == 252, format!("{} shapes, expected 252", reports[0].instances.len()));
    o.within(elapsed, KREWERAS_LIMIT);
    (o, format!("{}; {:.2}s", summary(&reports), elapsed.as_secs_f64()))
}

fn qdet() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, elapsed) = run_suites(&[Suite::QDeterminant]);
    o.reports(&reports);
    o.require(reports[0].instances.len() == 70, format!("{} shapes, expected 70", reports[0].instances.len()));
    o.within(elapsed, QDET_LIMIT);
    (o, format!("{}; {:.2}s", summary(&reports), elapsed.as_secs_f64()))
}

fn coarea() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, _) = run_suites(&[Suite::Coarea]);
    o.reports(&reports);
    let mut coeffs = vec![0i64; 5];
    for p in enumerate_rect_paths(3, 5, usize::MAX).unwrap() {
        coeffs[p.coarea()] += 1;
    }
    let got = QPoly::from_i64s(&coeffs);
    o.require(got == QPoly::from_i64s(&[1, 1, 2, 2, 1]), format!("(3,5) coarea polynomial {got}"));
    (o, format!("{}; (3,5) gives {got}", summary(&reports)))
}

fn catalan_identity() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, _) = run_suites(&[Suite::CatalanIdentity, Suite::HessenbergCatalan]);
    o.reports(&reports);
    (o, summary(&reports))
}

fn popoviciu() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, elapsed) = run_suites(&[Suite::Popoviciu, Suite::FrobeniusSylvester]);
    o.reports(&reports);
    o.within(elapsed, POPOVICIU_LIMIT);
    (o, format!("{}; {:.2}s", summary(&reports), elapsed.as_secs_f64()))
}

fn symmetry() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, elapsed) = run_suites(&[Suite::Symmetry]);
    o.reports(&reports);
    o.require(reports[0].instances.len() == 12, "expected the 12 odd values 3..=25");
    o.within(elapsed, SYMMETRY_LIMIT);
    (o, format!("{}; {:.2}s", summary(&reports), elapsed.as_secs_f64()))
}

fn multi_catalan() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, _) = run_suites(&[Suite::MultiCatalan, Suite::Motzkin]);
    o.reports(&reports);
    (o, summary(&reports))
}

fn generating_function() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, _) = run_suites(&[Suite::GeneratingFunction]);
    o.reports(&reports);
    (o, summary(&reports))
}

fn generalized_paths() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, elapsed) =
        run_suites(&[Suite::GdCounts, Suite::GdSmallN, Suite::GdBijection, Suite::EquinumerousConsecutive]);
    o.reports(&reports);
    o.within(elapsed, GD_LIMIT);
    (o, format!("{}; {:.2}s", summary(&reports), elapsed.as_secs_f64()))
}

fn conjecture() -> (Outcome, String) {
    let mut o = Outcome::new();
    let (reports, elapsed) = run_suites(&[Suite::Conjecture]);
    o.reports(&reports);
    let r = &reports[0];
    let at = |s: &str| r.instances.iter().find(|i| i.params == s).map(|i| i.detail.clone()).unwrap_or_default();
    o.require(at("s=3").contains("lhs 5 ") && at("s=3").ends_with("rhs 5"), format!("s=3: {}", at("s=3")));
    o.require(at("s=4").contains("lhs 25 ") && at("s=4").ends_with("rhs 25"), format!("s=4: {}", at("s=4")));
    o.within(elapsed, CONJECTURE_LIMIT);
    (o, format!("{}; {:.2}s", summary(&reports), elapsed.as_secs_f64()))
}

fn anchors() -> (Outcome, String) {
    let mut o = Outcome::new();
    let poset = GapPoset::from_generators(&[5, 7, 13]).unwrap();
    let ideal = poset.lower_ideal([1, 4, 6, 11]).unwrap();
    let core = poset.ideal_to_core(&ideal);
    o.require(core.parts() == [8, 4, 3, 1], format!("{{1,4,6,11}} maps to {core}"));
    let back = poset.core_to_ideal(&Partition::new(vec![8, 4, 3, 1]).unwrap()).unwrap();
    o.require(back.elements() == [1, 4, 6, 11], format!("(8,4,3,1) maps to {:?}", back.elements()));

    let four = Partition::new(vec![6, 3, 1, 1]).unwrap();
    o.require(four.is_core(4), "(6,3,1,1) is not a 4-core");
    o.require(four.first_column_hooks() == HookSet::new([1, 2, 5, 9]).unwrap(), "(6,3,1,1) first column hooks differ");
    o.require(Partition::from_hooks(&HookSet::new([1, 2, 5, 9]).unwrap()) == four, "{1,2,5,9} does not give (6,3,1,1)");

    let diag = diagonal_partition(7, 5).unwrap();
    o.require(diag.parts() == [5, 4, 2, 1], format!("diagonal_partition(7,5) = {diag}"));
    (o, format!("(8,4,3,1) <-> {{1,4,6,11}}, (6,3,1,1) hooks {{1,2,5,9}}, diagonal (7,5) = {diag}"))
}

fn main() {
    let criteria: [(&str, Criterion); 12] = [
        ("equinumerosity of pairs", equinumerosity_pairs),
        ("kreweras determinant", kreweras),
        ("q-determinant", qdet),
        ("coarea distribution", coarea),
        ("catalan identity", catalan_identity),
        ("popoviciu, frobenius, sylvester", popoviciu),
        ("symmetry for (s,s+2)", symmetry),
        ("multi-catalan consistency", multi_catalan),
        ("generating function", generating_function),
        ("generalized dyck paths", generalized_paths),
        ("total size conjecture", conjecture),
        ("anchor values", anchors),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let (outcome, detail) = check();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {:>2} {name}: {detail}", n + 1);
        for note in &outcome.notes {
            println!("     {note}");
        }
        if !outcome.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
