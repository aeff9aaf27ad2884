//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//!     cargo test -p betti-stab-core --test acceptance

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use betti_stab::betti::multigraded_betti;
use betti_stab::hilbert::numerator_from_betti;
use betti_stab::io::{parse_rendered_table, render_table, Layout};
use betti_stab::lab::{
    rees_bound_check, square_cover_index, stabilization_scan_with, unimodality_from_shapes,
    CoverIndex, ReesBettiData, ScanOptions, ShapeSet, StabilizationReport,
};
use betti_stab::{
    examples, graded_betti, hilbert_numerator, lcm_lattice_betti, FieldConfig, GradedBettiTable,
    HilbertOptions, Limits, Monomial, MonomialIdeal,
};

type Outcome = Result<String, String>;
type Criterion<'a> = Box<dyn FnOnce() -> Outcome + 'a>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn field() -> FieldConfig {
    FieldConfig::default()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn golden_match(table: &GradedBettiTable, file: &str, layout: Layout) -> Result<(), String> {
    let expected = common::golden(file);
    let parsed = parse_rendered_table(&expected, layout, table.ring_dim(), table.field())
        .map_err(|e| format!("{file}: {e}"))?;
    ensure!(&parsed == table, "{file}: entries differ from the computed table");
    let rendered = render_table(table, layout).map_err(|e| e.to_string())?;
    ensure!(rendered == expected, "{file}: rendering differs\n{rendered}");
    Ok(())
}

fn five_cubics_golden(powers: std::ops::RangeInclusive<u32>, budget: Duration) -> Outcome {
    let ideal = examples::five_cubics();
    let mut total = Duration::ZERO;
    for d in powers.clone() {
        let power = ideal.power(d).map_err(|e| e.to_string())?;
        let (table, t) = timed(|| graded_betti(&power, &field()));
        total += t;
        golden_match(&table.map_err(|e| e.to_string())?, &format!("five_cubics_d{d}.txt"), Layout::QuotientCompact)?;
    }
    ensure!(total <= budget, "took {total:?}, budget {budget:?}");
    Ok(format!("d={}..{} exact, {:.1?}", powers.start(), powers.end(), total))
}

fn sturmfels_golden() -> Outcome {
    let ideal = examples::sturmfels();
    let (res, t) = timed(|| -> Result<_, String> {
        let one = graded_betti(&ideal, &field()).map_err(|e| e.to_string())?;
        let two = graded_betti(&ideal.power(2).map_err(|e| e.to_string())?, &field())
            .map_err(|e| e.to_string())?;
        Ok((one, two))
    });
    let (one, two) = res?;
    // rows of the R/I display: row ρ, column c holds β_{c-1, c+ρ}(I)
    let row = |t: &GradedBettiTable, rho: u32, cols: std::ops::RangeInclusive<u32>| -> Vec<u64> {
        cols.map(|c| t.get(c as usize - 1, c + rho)).collect()
    };
    ensure!(row(&one, 2, 1..=3) == [8, 11, 4], "I row 2 is {:?}", row(&one, 2, 1..=3));
    ensure!(row(&two, 5, 1..=5) == [36, 84, 75, 32, 6], "I^2 row 5 is {:?}", row(&two, 5, 1..=5));
    ensure!(row(&two, 6, 2..=6) == [1, 4, 6, 4, 1], "I^2 row 6 is {:?}", row(&two, 6, 2..=6));
    golden_match(&one, "sturmfels_d1.txt", Layout::Quotient)?;
    golden_match(&two, "sturmfels_d2.txt", Layout::Quotient)?;
    ensure!(t <= Duration::from_secs(120), "took {t:?}");
    Ok(format!("rows exact, {t:.1?}"))
}

fn five_cubics_scan() -> Result<StabilizationReport, String> {
    let opts = ScanOptions {
        ideal_id: "five_cubics".into(),
        ..ScanOptions::new(6)
    };
    stabilization_scan_with(&examples::five_cubics(), &opts).map_err(|e| e.to_string())
}

fn stabilization(report: &StabilizationReport) -> Outcome {
    ensure!(!report.is_partial(), "scan is partial: {:?}", report.partial);
    ensure!(report.empirical_stab == Some(3), "empirical stab {:?}", report.empirical_stab);
    let expected: Vec<i64> = (1..=6).map(|d| 3 * d + 2).collect();
    ensure!(report.regularity() == expected, "regularity {:?}", report.regularity());

    let opts = ScanOptions {
        ideal_id: "sturmfels".into(),
        ..ScanOptions::new(2)
    };
    let sturm = stabilization_scan_with(&examples::sturmfels(), &opts).map_err(|e| e.to_string())?;
    ensure!(sturm.shape_changes() == [2], "Sturmfels shape changes {:?}", sturm.shape_changes());
    Ok("five cubics: stab 3, reg 3d+2 for d<=6; Sturmfels changes at d=2".into())
}

fn oracle_equivalence(corpus: &[MonomialIdeal]) -> Outcome {
    let mut mismatches = 0;
    for ideal in corpus {
        let a = multigraded_betti(ideal, &field()).map_err(|e| e.to_string())?;
        let b = lcm_lattice_betti(ideal, &field(), &Limits::default()).map_err(|e| e.to_string())?;
        if a != b {
            mismatches += 1;
        }
    }
    ensure!(mismatches == 0, "{mismatches} mismatches out of {}", corpus.len());
    Ok(format!("{} ideals, 0 mismatches", corpus.len()))
}

fn conservation(corpus: &[MonomialIdeal]) -> Outcome {
    let opts = HilbertOptions {
        allow_fallback: false,
        ..HilbertOptions::default()
    };
    for (k, ideal) in corpus.iter().enumerate() {
        let table = graded_betti(ideal, &field()).map_err(|e| e.to_string())?;
        let num = hilbert_numerator(ideal, &opts).map_err(|e| e.to_string())?;
        ensure!(num.independent, "ideal {k}: numerator not independent");
        ensure!(
            numerator_from_betti(&table) == num.poly,
            "ideal {k}: {} vs {}",
            numerator_from_betti(&table),
            num.poly
        );
    }
    Ok(format!("{} ideals", corpus.len()))
}

fn rees_bound() -> Outcome {
    let xy = examples::maximal(2);
    let xy_data = ReesBettiData::new(1, 1, [((0, 0, 0), 1), ((1, 1, 1), 1)]).unwrap();
    let principal = MonomialIdeal::minimalize(vec![Monomial::new(vec![2, 1])], 2).unwrap();
    let principal_data = ReesBettiData::new(0, 3, [((0, 0, 0), 1)]).unwrap();
    for d in 1..=20u32 {
        let r = rees_bound_check(&xy, d, &xy_data, &field()).map_err(|e| e.to_string())?;
        ensure!(r.holds(), "(x,y) d={d}: violations {:?}", r.violations);
        let e = r.entry(1, 1).ok_or(format!("(x,y) d={d}: no entry at (1,1)"))?;
        ensure!(e.actual == u64::from(d), "(x,y) d={d}: actual {}", e.actual);
        ensure!(e.slack == 0.into(), "(x,y) d={d}: slack {}", e.slack);

        let r = rees_bound_check(&principal, d, &principal_data, &field()).map_err(|e| e.to_string())?;
        let e = r.entry(0, 0).ok_or(format!("principal d={d}: no entry at (0,0)"))?;
        ensure!(r.holds() && e.slack == 0.into(), "principal d={d}: slack {}", e.slack);
    }
    Ok("slack 0 at (1,1) and (0,0) for d<=20".into())
}

fn square_cover() -> Outcome {
    let edge = MonomialIdeal::minimalize(vec![Monomial::new(vec![1, 1])], 2).unwrap();
    for (name, ideal, want) in [
        ("single edge", edge, 2),
        ("triangle", examples::triangle(), 3),
        ("five cubics", examples::five_cubics(), 6),
    ] {
        let got = square_cover_index(&ideal).map_err(|e| e.to_string())?.value();
        let oracle = common::cover_oracle(&ideal, 2 * ideal.ring_dim() as u32);
        ensure!(got == Some(want) && oracle == Some(want), "{name}: search {got:?}, oracle {oracle:?}");
    }
    let corpus = common::random_edges(30, 7, 12, 500);
    for (k, ideal) in corpus.iter().enumerate() {
        let n_max = 2 * ideal.ring_dim() as u32;
        let got = square_cover_index(ideal).map_err(|e| e.to_string())?;
        let oracle = common::cover_oracle(ideal, n_max);
        ensure!(got.value() == oracle, "random edge ideal {k}: search {got:?}, oracle {oracle:?}");
        ensure!(!matches!(got, CoverIndex::NoneUpTo { .. }), "random edge ideal {k}: no cover");
    }
    Ok("2, 3, 6 confirmed; 30 random edge ideals agree".into())
}

fn unimodality(report: &StabilizationReport) -> Outcome {
    let bad: Vec<_> = report.unimodality.iter().filter(|f| f.is_violation()).collect();
    ensure!(bad.is_empty(), "five cubics: violations {bad:?}");
    for (k, ideal) in common::random_edges(20, 6, 8, 900).iter().enumerate() {
        let opts = ScanOptions {
            ideal_id: format!("edges{k}"),
            ..ScanOptions::new(5)
        };
        let rep = stabilization_scan_with(ideal, &opts).map_err(|e| e.to_string())?;
        ensure!(!rep.is_partial(), "random edge ideal {k}: partial scan");
        let bad: Vec<_> = rep.unimodality.iter().filter(|f| f.is_violation()).collect();
        ensure!(bad.is_empty(), "random edge ideal {k}: violations {bad:?}");
    }
    let gapped: Vec<ShapeSet> = [&[(0, 0), (1, 1)][..], &[(0, 0)], &[(0, 0), (1, 1)]]
        .iter()
        .enumerate()
        .map(|(k, s)| ShapeSet::new(2, k as u32 + 1, s.iter().copied()).unwrap())
        .collect();
    let flagged: Vec<_> = unimodality_from_shapes(&gapped)
        .into_iter()
        .filter(|f| f.is_violation())
        .map(|f| f.position())
        .collect();
    ensure!(flagged == [(1, 1)], "gapped fixture flagged {flagged:?}");
    Ok("five cubics and 20 random edge ideals clean; gapped fixture flagged".into())
}

fn main() {
    let corpus = common::random_corpus(60);
    let mut report: Option<StabilizationReport> = None;
    let criteria: Vec<(&str, Criterion<'_>)> = vec![
        (
            "golden tables, five cubics, d=1..4",
            Box::new(|| five_cubics_golden(1..=4, Duration::from_secs(300))),
        ),
        (
            "golden tables, five cubics extended, d=5..6",
            Box::new(|| five_cubics_golden(5..=6, Duration::from_secs(1800))),
        ),
        ("golden tables, Sturmfels", Box::new(sturmfels_golden)),
        (
            "stabilization scans",
            Box::new(|| {
                let r = five_cubics_scan()?;
                let out = stabilization(&r);
                report = Some(r);
                out
            }),
        ),
        ("oracle equivalence", Box::new(|| oracle_equivalence(&corpus))),
        ("conservation", Box::new(|| conservation(&corpus))),
        ("Rees bound", Box::new(rees_bound)),
        ("square-cover index", Box::new(square_cover)),
    ];
    let mut failed = 0;
    let mut run = |name: &str, f: Criterion<'_>| {
        let (outcome, t) = timed(|| catch_unwind(AssertUnwindSafe(f)));
        match outcome {
            Ok(Ok(detail)) => println!("PASS  {name}: {detail} [{t:.1?}]"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL  {name}: {why} [{t:.1?}]");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL  {name}: panicked [{t:.1?}]");
            }
        }
    };
    for (name, f) in criteria {
        run(name, f);
    }
    run(
        "unimodality",
        Box::new(|| match &report {
            Some(r) => unimodality(r),
            None => Err("no five-cubics report".into()),
        }),
    );
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
