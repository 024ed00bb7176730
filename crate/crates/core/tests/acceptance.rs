//! Exit criteria. Run with `cargo test -p arrowhead-core --test acceptance`;
//! prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use arrowhead_core::cayley::{Directedness, Family, GraphSpec, TorusVertex, Variant};
use arrowhead_core::{formulas, metrics, verify};

type Outcome = Result<String, String>;

fn graph(n: u32, family: Family) -> GraphSpec {
    GraphSpec::family(n, family, 12).expect("level within ceiling")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// 1. Oracle diameters of T_0..T_7; D_8, D_9 closed form against recurrence.
fn diameter_table() -> Outcome {
    const TABLE: [u64; 10] = [0, 1, 2, 5, 10, 21, 42, 85, 170, 341];
    let mut observed = Vec::new();
    for n in 0..=7 {
        let d = u64::from(metrics::diameter_oracle(&graph(n, Family::UndirectedT)).unwrap());
        ensure(d == TABLE[n as usize], || {
            format!("T_{n}: oracle {d}, table {}", TABLE[n as usize])
        })?;
        observed.push(d);
    }
    let rec = formulas::diameter_recurrence_table(9).unwrap();
    for n in 8..=9u32 {
        let closed = formulas::undirected_diameter(n).unwrap().value;
        ensure(
            closed == TABLE[n as usize] && rec[n as usize].value == closed,
            || {
                format!(
                    "D_{n}: closed {closed}, recurrence {}",
                    rec[n as usize].value
                )
            },
        )?;
    }
    Ok(format!(
        "oracle D_0..D_7 = {observed:?}; D_8 = 170, D_9 = 341 by formula and recurrence"
    ))
}

/// 2. Recurrence and both relations for n = 1..64, pure integers.
fn closed_form_identities() -> Outcome {
    let d = |n: u32| u128::from(formulas::undirected_diameter(n).unwrap().value);
    for n in 1..=64u32 {
        ensure(d(n) == 2 * d(n - 1) + u128::from(n % 2), || {
            format!("recurrence fails at n = {n}")
        })?;
        ensure(d(n - 1) + d(n) == (1u128 << n) - 1, || {
            format!("D_(n-1) + D_n fails at n = {n}")
        })?;
        if n >= 2 {
            ensure(d(n) - d(n - 2) == 1u128 << (n - 1), || {
                format!("D_n - D_(n-2) fails at n = {n}")
            })?;
        }
    }
    Ok("recurrence, sum and step relations hold for n = 1..64".into())
}

/// 3. Oriented diameters 2^n - 1 for n = 1..7.
fn oriented_diameters() -> Outcome {
    for n in 1..=7 {
        for family in [Family::DirectedAT, Family::DirectedDT] {
            let d = metrics::diameter_oracle(&graph(n, family)).unwrap();
            ensure(d == (1 << n) - 1, || format!("{family}_{n}: oracle {d}"))?;
        }
    }
    Ok("ATdir_n and DTdir_n diameters = 2^n - 1 for n = 1..7".into())
}

/// 4. Antipodal counts.
fn antipodal_counts() -> Outcome {
    for n in 1..=7u32 {
        let t = match n {
            1 => 3,
            2 => 9,
            n if n % 2 == 1 => 6,
            _ => 12,
        };
        let at = if n == 1 { 3 } else { 6 };
        let dt = (1usize << (n + 1)) - 1;
        for (family, want) in [
            (Family::UndirectedT, t),
            (Family::DirectedAT, at),
            (Family::DirectedDT, dt),
        ] {
            let got = metrics::antipodals_oracle(&graph(n, family)).unwrap().len();
            ensure(got == want, || {
                format!("{family}_{n}: {got} antipodals, expected {want}")
            })?;
            ensure(
                formulas::antipodal_count(family, n).unwrap() == want as u128,
                || format!("{family}_{n}: closed-form count disagrees"),
            )?;
        }
    }
    Ok("T: 3,9,6,12,6,12,6; ATdir: 3,6,...; DTdir: 2^(n+1)-1 for n = 1..7".into())
}

/// 5. (D_{n-1}, D_n) and (D_n, D_{n-1}) are antipodal in T_n.
fn antipodal_anchors() -> Outcome {
    for n in 1..=7u32 {
        let antipodals = metrics::antipodals_oracle(&graph(n, Family::UndirectedT)).unwrap();
        let prev = formulas::undirected_diameter(n - 1).unwrap().value as u32;
        let cur = formulas::undirected_diameter(n).unwrap().value as u32;
        for v in [TorusVertex::new(prev, cur), TorusVertex::new(cur, prev)] {
            ensure(antipodals.contains(&v), || {
                format!("{v} not antipodal in T_{n}")
            })?;
        }
    }
    Ok("anchors and inverses are antipodal for n = 1..7".into())
}

/// 6. DTdir shells are 1, 3, 5, ... and max(x, y) is the exact distance.
fn diamond_shells() -> Outcome {
    for n in 1..=7u32 {
        let g = graph(n, Family::DirectedDT);
        let field = metrics::bfs_from(&g, TorusVertex::ORIGIN).unwrap();
        let want: Vec<u64> = (0..1u64 << n).map(|p| 2 * p + 1).collect();
        ensure(field.histogram().counts == want, || {
            format!("DTdir_{n}: shells {:?}", field.histogram().counts)
        })?;
        for v in g.vertices() {
            let closed = formulas::directed_diamond_distance(n, v).unwrap();
            ensure(closed == field.get(v), || {
                format!(
                    "DTdir_{n}: max(x,y) = {closed} but BFS = {} at {v}",
                    field.get(v)
                )
            })?;
        }
    }
    Ok("shell sizes 2p+1 and distance max(x,y) on every vertex, n = 1..7".into())
}

/// 7. Undirected arrowhead and diamond have the same edge multiset.
fn undirected_identity() -> Outcome {
    for n in 1..=6 {
        let at = GraphSpec::new(n, Variant::Arrowhead, Directedness::Undirected)
            .unwrap()
            .edges();
        let dt = GraphSpec::new(n, Variant::Diamond, Directedness::Undirected)
            .unwrap()
            .edges();
        ensure(at == dt, || format!("edge multisets differ at n = {n}"))?;
        ensure(at.len() == 3 << (2 * n), || {
            format!("n = {n}: {} edges", at.len())
        })?;
    }
    Ok("sorted edge multisets equal for n = 1..6".into())
}

/// 8. Scaling embedding of T_{n-k} into T_n has dilation <= 2^k.
fn embedding_dilation() -> Outcome {
    let mut maxima = Vec::new();
    for n in 0..=6u32 {
        let mut row = Vec::new();
        for k in 0..=n {
            let worst = verify::embedding_dilation(Family::UndirectedT, n, k, 12).unwrap();
            ensure(worst <= 1 << k, || {
                format!("n = {n}, k = {k}: dilation {worst} > {}", 1 << k)
            })?;
            row.push(worst);
        }
        maxima.push(row);
    }
    Ok(format!("observed maxima per n (k = 0..n): {maxima:?}"))
}

/// 9. Histograms from 8 seeded random origins equal the origin's.
fn transitivity() -> Outcome {
    for n in 0..=6u32 {
        for family in Family::ALL {
            let bad = metrics::transitivity_sample(&graph(n, family), 8, 42).unwrap();
            ensure(bad.is_empty(), || {
                format!("{family}_{n}: histogram differs from {bad:?}")
            })?;
        }
    }
    Ok("8 origins (seed 42) per family, n = 0..6".into())
}

/// 10. `verify --n 1..6 --seed 42` is byte-deterministic.
fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    let mut stdouts = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("report{i}.txt"));
        let out = Command::new(env!("CARGO_BIN_EXE_arrowhead"))
            .args(["verify", "--n", "1..6", "--seed", "42", "--out"])
            .arg(&path)
            .output()
            .unwrap();
        ensure(out.status.code() == Some(0), || {
            format!("run {i} exited with {:?}", out.status)
        })?;
        reports.push(std::fs::read(&path).unwrap());
        stdouts.push(out.stdout);
    }
    ensure(reports[0] == reports[1], || "report files differ".into())?;
    ensure(stdouts[0] == stdouts[1], || {
        "standard output differs".into()
    })?;
    let lines: BTreeSet<_> = String::from_utf8_lossy(&reports[0])
        .lines()
        .map(str::to_owned)
        .collect();
    ensure(
        lines
            .iter()
            .any(|l| l.starts_with("summary ") && l.contains("failed=0")),
        || "report has failures".into(),
    )?;
    Ok(format!(
        "two runs, {} byte reports identical",
        reports[0].len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1 diameter table", diameter_table),
        (
            "AC2 closed form, recurrence, relations",
            closed_form_identities,
        ),
        ("AC3 oriented diameters", oriented_diameters),
        ("AC4 antipodal counts", antipodal_counts),
        ("AC5 antipodal anchors", antipodal_anchors),
        ("AC6 diamond shell structure", diamond_shells),
        ("AC7 undirected variants identical", undirected_identity),
        ("AC8 embedding dilation", embedding_dilation),
        ("AC9 vertex transitivity sample", transitivity),
        ("AC10 report determinism", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(detail) => println!("PASS  {name:<40} ({ms:.0} ms) {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name:<40} ({ms:.0} ms) {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
