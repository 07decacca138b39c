//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p symte-cli --test acceptance`.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symte_cli::ingest::ingest_csv;
use symte_core::entropy::transfer_entropy_pair;
use symte_core::{
    advise_max_m, alphabet_size, factorial, generate, mse, ordinal_symbol, principal_symbol,
    sliding_te, surrogate_pvalue, symbolic_transfer_entropy, symbolize, CoupledSystemSpec,
    Direction, EmbeddingConfig, SymbolSequence, Symbolizer, SystemKind, TimeSeries,
};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if elapsed > limit {
        out.pass = false;
    }
    out.detail = format!("{} [{:.3?} / limit {:?}]", out.detail, elapsed, limit);
    out
}

// 1 -------------------------------------------------------------------------

fn alphabet_formulas() -> Outcome {
    timed(Duration::from_millis(1), || {
        let ordinal = alphabet_size(&Symbolizer::Ordinal, 4).unwrap();
        let principal = alphabet_size(&Symbolizer::Principal { extremes: 1 }, 4).unwrap();
        let m_star = advise_max_m(21_600_000).unwrap();
        let f10 = factorial(10).unwrap();
        let pass = ordinal == 24 && principal == 12 && m_star == 10 && f10 == 3_628_800;
        outcome(
            pass,
            format!("ordinal(4)={ordinal} principal(4,1)={principal} m*={m_star} 10!={f10}"),
        )
    })
}

// 2 -------------------------------------------------------------------------

fn permutations(m: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..m).collect();
    // Heap's algorithm.
    fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<f64>>) {
        if k == 1 {
            out.push(perm.iter().map(|&v| v as f64).collect());
            return;
        }
        heap(k - 1, perm, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
            heap(k - 1, perm, out);
        }
    }
    heap(m, &mut perm, &mut out);
    out
}

fn codec_bijectivity() -> Outcome {
    timed(Duration::from_secs(10), || {
        let mut checked = 0;
        for m in 2..=7usize {
            let windows = permutations(m);
            let size = factorial(m as u64).unwrap() as usize;
            let mut hits = vec![0u32; size];
            for w in &windows {
                hits[ordinal_symbol(w).unwrap() as usize] += 1;
            }
            if windows.len() != size || hits.iter().any(|&h| h != 1) {
                return outcome(false, format!("ordinal not bijective at m={m}"));
            }
            checked += 1;
            for t in 1..=m / 2 {
                // Each window determines a tuple of 2t extreme indices; the
                // codec must be injective on tuples and cover its alphabet.
                let size =
                    alphabet_size(&Symbolizer::Principal { extremes: t }, m).unwrap() as usize;
                let mut owner: Vec<Option<Vec<usize>>> = vec![None; size];
                for w in &windows {
                    let order = symte_core::symbolize::stable_argsort(w);
                    let tuple: Vec<usize> =
                        (0..t).flat_map(|r| [order[m - 1 - r], order[r]]).collect();
                    let s = principal_symbol(w, t).unwrap() as usize;
                    match &owner[s] {
                        Some(prev) if *prev != tuple => {
                            return outcome(false, format!("principal collision at m={m} t={t}"));
                        }
                        _ => owner[s] = Some(tuple),
                    }
                }
                if owner.iter().any(Option::is_none) {
                    return outcome(false, format!("principal misses symbols at m={m} t={t}"));
                }
                checked += 1;
            }
        }
        outcome(
            true,
            format!("{checked} (m, method) cases exhaustive for m <= 7"),
        )
    })
}

// 3 -------------------------------------------------------------------------

fn dense_te(xs: &[u64], ys: &[u64], ax: usize, ay: usize, delta: usize) -> f64 {
    let n = xs.len() - delta;
    let mut joint = vec![0.0f64; ax * ax * ay];
    let at = |f: usize, x: usize, y: usize| (f * ax + x) * ay + y;
    for i in 0..n {
        joint[at(xs[i + delta] as usize, xs[i] as usize, ys[i] as usize)] += 1.0;
    }
    let mut te = 0.0;
    for f in 0..ax {
        for x in 0..ax {
            for y in 0..ay {
                let c = joint[at(f, x, y)];
                if c == 0.0 {
                    continue;
                }
                let c_xy: f64 = (0..ax).map(|g| joint[at(g, x, y)]).sum();
                let c_fx: f64 = (0..ay).map(|z| joint[at(f, x, z)]).sum();
                let c_x: f64 = (0..ax)
                    .map(|g| (0..ay).map(|z| joint[at(g, x, z)]).sum::<f64>())
                    .sum();
                te += c / n as f64 * ((c / c_xy) / (c_fx / c_x)).log2();
            }
        }
    }
    te
}

fn oracle_equivalence() -> Outcome {
    timed(Duration::from_secs(5), || {
        let mut rng = ChaCha8Rng::seed_from_u64(31337);
        let mut worst: f64 = 0.0;
        for _ in 0..50 {
            let len = rng.random_range(20..=500);
            let (ax, ay) = (rng.random_range(2..=8usize), rng.random_range(2..=8usize));
            let ys: Vec<u64> = (0..len).map(|_| rng.random_range(0..ay as u64)).collect();
            let xs: Vec<u64> = (0..len)
                .map(|i| {
                    if i > 0 && rng.random_bool(0.4) {
                        ys[i - 1] % ax as u64
                    } else {
                        rng.random_range(0..ax as u64)
                    }
                })
                .collect();
            let sx = SymbolSequence::new(xs.clone(), ax as u64).unwrap();
            let sy = SymbolSequence::new(ys.clone(), ay as u64).unwrap();
            let pair = transfer_entropy_pair(&sx, &sy, 1).unwrap();
            worst = worst.max((pair.yx - dense_te(&xs, &ys, ax, ay, 1)).abs());
            worst = worst.max((pair.xy - dense_te(&ys, &xs, ay, ax, 1)).abs());
        }
        outcome(
            worst <= 1e-12,
            format!("max |fast - oracle| = {worst:.3e} over 50 instances (tol 1e-12)"),
        )
    })
}

// 4 -------------------------------------------------------------------------

fn principal_ordinal_boundary() -> Outcome {
    timed(Duration::from_secs(10), || {
        let spec = CoupledSystemSpec {
            kind: SystemKind::ArUnidir,
            n: 10_000,
            coupling: 0.5,
            seed: 12,
            ..Default::default()
        };
        let (x, y) = generate(&spec).unwrap();
        let tie_free = |s: &TimeSeries| {
            let mut v = s.values().to_vec();
            v.sort_by(f64::total_cmp);
            v.windows(2).all(|w| w[0] != w[1])
        };
        if !tie_free(&x) || !tie_free(&y) {
            return outcome(false, "input has ties");
        }
        let mut worst: f64 = 0.0;
        for m in [2usize, 4, 6] {
            let c = EmbeddingConfig::new(m, 1, 1).unwrap();
            let o = symbolic_transfer_entropy(&x, &y, &c, &Symbolizer::Ordinal).unwrap();
            let p =
                symbolic_transfer_entropy(&x, &y, &c, &Symbolizer::Principal { extremes: m / 2 })
                    .unwrap();
            worst = worst.max((o.xy - p.xy).abs()).max((o.yx - p.yx).abs());
        }
        outcome(
            worst <= 1e-12,
            format!("max |principal - ordinal| = {worst:.3e} for m in {{2,4,6}} (tol 1e-12)"),
        )
    })
}

// 5 -------------------------------------------------------------------------

fn null_calibration() -> Outcome {
    timed(Duration::from_secs(60), || {
        let c = EmbeddingConfig::new(3, 1, 1).unwrap();
        let mut below = 0;
        let mut worst: f64 = 0.0;
        for seed in 0..100 {
            let spec = CoupledSystemSpec {
                kind: SystemKind::IndependentNoise,
                n: 100_000,
                seed,
                ..Default::default()
            };
            let (x, y) = generate(&spec).unwrap();
            let te = symbolic_transfer_entropy(&x, &y, &c, &Symbolizer::Ordinal).unwrap();
            worst = worst.max(te.xy).max(te.yx);
            below += (te.xy < 0.02 && te.yx < 0.02) as usize;
        }
        outcome(
            below >= 95,
            format!("{below}/100 runs with both TEs < 0.02 bits (need >= 95); max {worst:.5}"),
        )
    })
}

// 6 -------------------------------------------------------------------------

fn directionality_at(coupling: f64) -> (usize, usize, f64, f64) {
    let c = EmbeddingConfig::new(3, 1, 1).unwrap();
    let (mut gap_ok, mut p_ok) = (0, 0);
    let (mut min_gap, mut max_p) = (f64::INFINITY, 0.0f64);
    for seed in 0..100 {
        let (x, y) = generate(&CoupledSystemSpec {
            n: 50_000,
            coupling,
            seed,
            ..Default::default()
        })
        .unwrap();
        let te = symbolic_transfer_entropy(&x, &y, &c, &Symbolizer::Ordinal).unwrap();
        let p =
            surrogate_pvalue(&x, &y, &c, &Symbolizer::Ordinal, Direction::Xy, 99, seed).unwrap();
        gap_ok += (te.xy - te.yx > 0.05) as usize;
        p_ok += (p <= 0.05) as usize;
        min_gap = min_gap.min(te.xy - te.yx);
        max_p = max_p.max(p);
    }
    (gap_ok, p_ok, min_gap, max_p)
}

fn directionality() -> Outcome {
    timed(Duration::from_secs(300), || {
        let (gap_ok, p_ok, min_gap, max_p) = directionality_at(0.5);
        outcome(
            gap_ok >= 95 && p_ok >= 95,
            format!(
                "c=0.5: te_xy - te_yx > 0.05 in {gap_ok}/100, p <= 0.05 in {p_ok}/100 (need >= 95 each); \
                 min gap {min_gap:.4}, max p {max_p:.2}"
            ),
        )
    })
}

// 7 -------------------------------------------------------------------------

fn mse_pair(
    x: &TimeSeries,
    y: &TimeSeries,
    m: usize,
    method: Symbolizer,
    window: usize,
) -> (f64, f64) {
    let c = EmbeddingConfig::new(m, 1, 1).unwrap();
    let reference = sliding_te(x, y, &c, &Symbolizer::Ordinal, window, window).unwrap();
    let trace = sliding_te(x, y, &c, &method, window, window).unwrap();
    (
        mse(&trace, &reference, Direction::Xy).unwrap(),
        mse(&trace, &reference, Direction::Yx).unwrap(),
    )
}

fn strictly_decreasing(v: &[(f64, f64)]) -> bool {
    v.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 > w[1].1)
}

fn mse_trend() -> Outcome {
    timed(Duration::from_secs(120), || {
        let spec = CoupledSystemSpec {
            kind: SystemKind::ArUnidir,
            n: 50_000,
            coupling: 0.5,
            seed: 7,
            ..Default::default()
        };
        let (x, y) = generate(&spec).unwrap();
        let binning: Vec<(f64, f64)> = [4, 5, 6]
            .iter()
            .map(|&b| mse_pair(&x, &y, 5, Symbolizer::Binning { bins: b }, 5000))
            .collect();
        let principal: Vec<(f64, f64)> = [1, 2]
            .iter()
            .map(|&t| mse_pair(&x, &y, 6, Symbolizer::Principal { extremes: t }, 5000))
            .collect();
        let fmt = |v: &[(f64, f64)]| {
            v.iter()
                .map(|(a, b)| format!("({a:.4},{b:.4})"))
                .collect::<Vec<_>>()
                .join(" > ")
        };
        outcome(
            strictly_decreasing(&binning) && strictly_decreasing(&principal),
            format!(
                "binning m=5 b=4,5,6 (xy,yx): {}; principal m=6 t=1,2: {}",
                fmt(&binning),
                fmt(&principal)
            ),
        )
    })
}

// 8 -------------------------------------------------------------------------

fn principal_performance() -> Outcome {
    timed(Duration::from_secs(30), || {
        let (x, y) = generate(&CoupledSystemSpec {
            n: 1_000_000,
            seed: 1,
            ..Default::default()
        })
        .unwrap();
        let c = EmbeddingConfig::new(10, 1, 1).unwrap();
        let method = Symbolizer::Principal { extremes: 2 };
        let sx = symbolize(&x, &c, &method).unwrap();
        let sy = symbolize(&y, &c, &method).unwrap();
        let te = transfer_entropy_pair(&sx, &sy, 1).unwrap();
        let alphabet = sx.alphabet();
        let distinct = sx.distinct().max(sy.distinct());
        let ordinal = alphabet_size(&Symbolizer::Ordinal, 10).unwrap();
        outcome(
            alphabet == 5040 && distinct as u64 <= alphabet && ordinal == 3_628_800,
            format!("alphabet {alphabet} (ordinal {ordinal}), distinct {distinct}, te_xy {:.4}, te_yx {:.4}", te.xy, te.yx),
        )
    })
}

// 9 -------------------------------------------------------------------------

fn symte(args: &[&str]) -> Result<String, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_symte"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !o.status.success() {
        return Err(format!("{args:?}: {}", String::from_utf8_lossy(&o.stderr)));
    }
    String::from_utf8(o.stdout).map_err(|e| e.to_string())
}

fn cli_round_trip_and_goldens() -> Outcome {
    let run = || -> Result<String, String> {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let path = |n: &str| dir.path().join(n).to_string_lossy().into_owned();

        let logistic = path("logistic.csv");
        symte(&[
            "synth",
            "--n",
            "20000",
            "--coupling",
            "0.3",
            "--seed",
            "7",
            "--output",
            &logistic,
        ])?;
        let ingested = ingest_csv(Path::new(&logistic), "x", "y").map_err(|e| e.to_string())?;
        let (x, y) = generate(&CoupledSystemSpec {
            n: 20_000,
            coupling: 0.3,
            seed: 7,
            ..Default::default()
        })
        .map_err(|e| e.to_string())?;
        let exact = |a: &TimeSeries, b: &TimeSeries| {
            a.len() == b.len()
                && a.values()
                    .iter()
                    .zip(b.values())
                    .all(|(p, q)| p.to_bits() == q.to_bits())
        };
        if !exact(&ingested.x, &x) || !exact(&ingested.y, &y) {
            return Err("synth -> ingest is not bit-exact".into());
        }

        let ar = path("ar.csv");
        symte(&[
            "synth",
            "--kind",
            "ar",
            "--n",
            "50000",
            "--coupling",
            "0.5",
            "--seed",
            "7",
            "--output",
            &ar,
        ])?;
        let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
        let cases: Vec<(&str, Vec<&str>)> = vec![
            (
                "alphabet.csv",
                vec![
                    "alphabet",
                    "--m",
                    "2-10",
                    "--bins",
                    "4,5,6",
                    "--t-extremes",
                    "1,2,3",
                ],
            ),
            ("alphabet_ordinal.csv", vec!["alphabet"]),
            (
                "compute_ordinal.csv",
                vec![
                    "compute",
                    "--input",
                    &logistic,
                    "--surrogates",
                    "99",
                    "--seed",
                    "1",
                ],
            ),
            (
                "compute_principal.csv",
                vec![
                    "compute",
                    "--input",
                    &logistic,
                    "--m",
                    "6",
                    "--method",
                    "principal",
                    "--t-extremes",
                    "2",
                ],
            ),
            (
                "compare.csv",
                vec![
                    "compare",
                    "--input",
                    &ar,
                    "--m",
                    "5",
                    "--window",
                    "5000",
                    "--bins",
                    "4,5,6",
                    "--t-extremes",
                    "1,2",
                ],
            ),
        ];
        for (name, args) in &cases {
            let expected =
                std::fs::read_to_string(golden.join(name)).map_err(|e| format!("{name}: {e}"))?;
            if symte(args)? != expected {
                return Err(format!("{name} differs from golden file"));
            }
        }
        let last = std::fs::read_to_string(golden.join("alphabet_ordinal.csv"))
            .map_err(|e| e.to_string())?;
        if last.lines().last().and_then(|l| l.split(',').nth(1)) != Some("3628800") {
            return Err("alphabet column does not end at 3628800".into());
        }
        Ok(format!(
            "round trip bit-exact (20000 rows); {} golden files match",
            cases.len()
        ))
    };
    match run() {
        Ok(detail) => outcome(true, detail),
        Err(detail) => outcome(false, detail),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("alphabet formulas exact", alphabet_formulas),
        ("codec bijectivity", codec_bijectivity),
        ("oracle equivalence", oracle_equivalence),
        ("principal-ordinal boundary", principal_ordinal_boundary),
        ("null calibration", null_calibration),
        ("directionality", directionality),
        ("MSE trend vs ordinal", mse_trend),
        ("principal performance", principal_performance),
        (
            "CLI round trip and golden files",
            cli_round_trip_and_goldens,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += !o.pass as usize;
        println!(
            "[{}] {}. {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
