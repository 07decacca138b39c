//! Subcommand implementations. Each returns the rendered output text.

use anyhow::Context;
use serde::Serialize;
use serde_json::json;
use symte_core::alphabet::alphabet_size;
use symte_core::entropy::{surrogate_pvalues, TePair};
use symte_core::{
    generate, mse, sliding_te, symbolize, CoupledSystemSpec, Direction, EmbeddingConfig, Error,
    KMeansParams, Symbolizer, SystemKind, TeTrace, TimeSeries,
};

use crate::args::{
    AlphabetArgs, CompareArgs, ComputeArgs, EmbeddingArgs, Format, MethodArgs, MethodKind,
    SynthArgs, SynthKind, TraceArgs,
};
use crate::ingest::{ingest_csv, Ingested};

/// Exit 2 for usage problems, 1 for failures while estimating.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Runtime(e) => write!(f, "{e:#}"),
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Runtime(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameters(msg) => CliError::Usage(msg),
            other => CliError::Runtime(other.into()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// Fixed-precision rendering used in every table.
pub fn fmt_real(v: f64) -> String {
    format!("{v:.12}")
}

fn embedding(args: &EmbeddingArgs) -> CliResult<EmbeddingConfig> {
    Ok(EmbeddingConfig::new(args.m, args.tau, args.delta)?)
}

/// Builds the symbolizer from `--method` and its parameter flags, rejecting
/// parameters that do not belong to the chosen method.
pub fn method_from_args(args: &MethodArgs, m: usize) -> CliResult<Symbolizer> {
    let stray = |flag: &str| {
        usage(format!("{flag} is not used by --method {:?}", args.method).to_lowercase())
    };
    let method = match args.method {
        MethodKind::Ordinal | MethodKind::Binning | MethodKind::Principal if args.k.is_some() => {
            return stray("--k")
        }
        MethodKind::Ordinal | MethodKind::Principal | MethodKind::Kmeans if args.bins.is_some() => {
            return stray("--bins")
        }
        MethodKind::Ordinal | MethodKind::Binning | MethodKind::Kmeans
            if args.t_extremes.is_some() =>
        {
            return stray("--t-extremes")
        }
        MethodKind::Ordinal => Symbolizer::Ordinal,
        MethodKind::Binning => match args.bins {
            Some(bins) => Symbolizer::Binning { bins },
            None => return usage("--method binning requires --bins"),
        },
        MethodKind::Principal => match args.t_extremes {
            Some(extremes) => Symbolizer::Principal { extremes },
            None => return usage("--method principal requires --t-extremes"),
        },
        MethodKind::Kmeans => match args.k {
            Some(k) => Symbolizer::KMeans(KMeansParams {
                k,
                seed: args.seed,
                max_iter: args.max_iter,
            }),
            None => return usage("--method kmeans requires --k"),
        },
    };
    method.validate(m)?;
    Ok(method)
}

fn load(input: &crate::args::InputArgs) -> CliResult<Ingested> {
    let data = ingest_csv(&input.input, &input.x_col, &input.y_col)
        .with_context(|| format!("reading {}", input.input.display()))?;
    if data.dropped > 0 {
        eprintln!(
            "warning: dropped {} row(s) with missing or non-numeric values",
            data.dropped
        );
    }
    Ok(data)
}

fn json_text(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct Named<'a> {
    name: &'a str,
    values: Vec<f64>,
}

pub fn compute(args: &ComputeArgs) -> CliResult<String> {
    let config = embedding(&args.embedding)?;
    let method = method_from_args(&args.method, config.m)?;
    if matches!(args.surrogates, Some(n) if n < 19) {
        return usage("--surrogates must be at least 19");
    }
    let data = load(&args.input)?;
    let (x, y) = (&data.x, &data.y);
    let sx = symbolize(x, &config, &method)?;
    let sy = symbolize(y, &config, &method)?;
    let te = symte_core::entropy::transfer_entropy_pair(&sx, &sy, config.delta)?;
    let pvalues: Option<TePair> = match args.surrogates {
        Some(n) => Some(surrogate_pvalues(
            x,
            y,
            &config,
            &method,
            n,
            args.method.seed,
        )?),
        None => None,
    };
    let alphabet = sx.alphabet();

    Ok(match args.output.format {
        Format::Csv => {
            let mut header = "method,m,tau,delta,n,alphabet,te_xy,te_yx,distinct_x,distinct_y,occupancy_x,occupancy_y".to_string();
            let mut row = format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                method,
                config.m,
                config.tau,
                config.delta,
                x.len(),
                alphabet,
                fmt_real(te.xy),
                fmt_real(te.yx),
                sx.distinct(),
                sy.distinct(),
                fmt_real(sx.occupancy()),
                fmt_real(sy.occupancy()),
            );
            if let Some(p) = pvalues {
                header.push_str(",surrogates,p_xy,p_yx");
                row.push_str(&format!(
                    ",{},{},{}",
                    args.surrogates.unwrap_or(0),
                    fmt_real(p.xy),
                    fmt_real(p.yx)
                ));
            }
            format!("{header}\n{row}\n")
        }
        Format::Json => json_text(&json!({
            "config": {
                "embedding": config,
                "method": method,
                "alphabet": alphabet,
                "n": x.len(),
                "x": x.name(),
                "y": y.name(),
                "surrogates": args.surrogates,
            },
            "schedule": [0],
            "series": [
                Named { name: "te_xy", values: vec![te.xy] },
                Named { name: "te_yx", values: vec![te.yx] },
            ],
            "occupancy": {
                "distinct_x": sx.distinct(),
                "distinct_y": sy.distinct(),
                "x": sx.occupancy(),
                "y": sy.occupancy(),
            },
            "p_values": pvalues,
        })),
    })
}

fn trace_json(trace: &TeTrace) -> serde_json::Value {
    json!({
        "config": trace.config,
        "schedule": trace.window_starts,
        "series": [
            Named { name: "te_xy", values: trace.te_xy.clone() },
            Named { name: "te_yx", values: trace.te_yx.clone() },
        ],
    })
}

pub fn trace(args: &TraceArgs) -> CliResult<String> {
    let config = embedding(&args.embedding)?;
    let method = method_from_args(&args.method, config.m)?;
    let stride = args.window.stride.unwrap_or(args.window.window);
    let data = load(&args.input)?;
    let trace = run_trace(
        &data.x,
        &data.y,
        &config,
        &method,
        args.window.window,
        stride,
    )?;
    Ok(match args.output.format {
        Format::Csv => {
            let mut out = String::from("window_start,te_xy,te_yx\n");
            for i in 0..trace.len() {
                out.push_str(&format!(
                    "{},{},{}\n",
                    trace.window_starts[i],
                    fmt_real(trace.te_xy[i]),
                    fmt_real(trace.te_yx[i])
                ));
            }
            out
        }
        Format::Json => json_text(&trace_json(&trace)),
    })
}

fn run_trace(
    x: &TimeSeries,
    y: &TimeSeries,
    config: &EmbeddingConfig,
    method: &Symbolizer,
    window: usize,
    stride: usize,
) -> CliResult<TeTrace> {
    if stride == 0 {
        return usage("--stride must be >= 1");
    }
    match sliding_te(x, y, config, method, window, stride) {
        Err(e @ Error::WindowTooSmall { .. }) => usage(e.to_string()),
        other => Ok(other?),
    }
}

pub fn compare(args: &CompareArgs) -> CliResult<String> {
    let config = embedding(&args.embedding)?;
    let mut methods = vec![Symbolizer::Ordinal];
    methods.extend(args.bins.iter().map(|&bins| Symbolizer::Binning { bins }));
    methods.extend(
        args.t_extremes
            .iter()
            .map(|&extremes| Symbolizer::Principal { extremes }),
    );
    methods.extend(args.k.iter().map(|&k| {
        Symbolizer::KMeans(KMeansParams {
            k,
            seed: args.seed,
            max_iter: args.max_iter,
        })
    }));
    if methods.len() == 1 {
        return usage("compare needs at least one of --bins, --t-extremes, --k");
    }
    for method in &methods {
        method.validate(config.m)?;
    }
    let stride = args.window.stride.unwrap_or(args.window.window);
    let data = load(&args.input)?;
    let traces = methods
        .iter()
        .map(|method| {
            run_trace(
                &data.x,
                &data.y,
                &config,
                method,
                args.window.window,
                stride,
            )
        })
        .collect::<CliResult<Vec<_>>>()?;
    let reference = &traces[0];
    let identical = traces.iter().all(|t| t.same_schedule(reference));
    if !identical {
        return Err(CliError::Runtime(anyhow::anyhow!(
            "window schedules differ between methods"
        )));
    }
    let rows = methods
        .iter()
        .zip(&traces)
        .map(|(method, trace)| {
            Ok((
                method,
                alphabet_size(method, config.m)?,
                mse(trace, reference, Direction::Xy)?,
                mse(trace, reference, Direction::Yx)?,
            ))
        })
        .collect::<Result<Vec<_>, Error>>()?;

    Ok(match args.output.format {
        Format::Csv => {
            let mut out = String::from(
                "method,alphabet,windows,window_len,stride,schedule_identical,mse_xy,mse_yx\n",
            );
            for (method, alphabet, xy, yx) in rows {
                out.push_str(&format!(
                    "{method},{alphabet},{},{},{stride},{identical},{},{}\n",
                    reference.len(),
                    args.window.window,
                    fmt_real(xy),
                    fmt_real(yx)
                ));
            }
            out
        }
        Format::Json => json_text(&json!({
            "config": {
                "embedding": config,
                "window_len": args.window.window,
                "stride": stride,
                "reference": Symbolizer::Ordinal,
                "schedule_identical": identical,
            },
            "schedule": reference.window_starts,
            "series": methods.iter().zip(&traces).map(|(method, trace)| json!({
                "method": method,
                "te_xy": trace.te_xy,
                "te_yx": trace.te_yx,
            })).collect::<Vec<_>>(),
            "mse": rows.iter().map(|(method, alphabet, xy, yx)| json!({
                "method": method,
                "alphabet": alphabet,
                "xy": xy,
                "yx": yx,
            })).collect::<Vec<_>>(),
        })),
    })
}

fn parse_m_range(spec: &str) -> CliResult<(usize, usize)> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("bad --m value `{spec}`")))
    };
    let (lo, hi) = match spec.split_once('-') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(spec)?;
            (v, v)
        }
    };
    if lo < 2 || hi < lo {
        return usage(format!(
            "--m range must satisfy 2 <= LO <= HI, got `{spec}`"
        ));
    }
    Ok((lo, hi))
}

pub fn alphabet(args: &AlphabetArgs) -> CliResult<String> {
    let (lo, hi) = parse_m_range(&args.m)?;
    if let Some(b) = args.bins.iter().find(|&&b| b < 2) {
        return usage(format!("--bins must be >= 2, got {b}"));
    }
    if args.t_extremes.contains(&0) {
        return usage("--t-extremes must be >= 1");
    }
    let mut columns: Vec<(String, Symbolizer)> = vec![("ordinal".into(), Symbolizer::Ordinal)];
    columns.extend(
        args.bins
            .iter()
            .map(|&b| (format!("binning_b{b}"), Symbolizer::Binning { bins: b })),
    );
    columns.extend(args.t_extremes.iter().map(|&t| {
        (
            format!("principal_t{t}"),
            Symbolizer::Principal { extremes: t },
        )
    }));

    // None: parameters invalid for this m; Some(Err): overflow.
    let cell = |method: &Symbolizer, m: usize| -> Option<Result<u64, Error>> {
        match alphabet_size(method, m) {
            Err(Error::InvalidParameters(_)) => None,
            other => Some(other),
        }
    };

    Ok(match args.output.format {
        Format::Csv => {
            let mut out = String::from("m");
            for (name, _) in &columns {
                out.push(',');
                out.push_str(name);
            }
            out.push('\n');
            for m in lo..=hi {
                out.push_str(&m.to_string());
                for (_, method) in &columns {
                    out.push(',');
                    match cell(method, m) {
                        Some(Ok(v)) => out.push_str(&v.to_string()),
                        Some(Err(_)) => out.push_str("overflow"),
                        None => {}
                    }
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let series: Vec<_> = columns
                .iter()
                .map(|(name, method)| {
                    let values: Vec<serde_json::Value> = (lo..=hi)
                        .map(|m| match cell(method, m) {
                            Some(Ok(v)) => json!(v),
                            Some(Err(_)) => json!("overflow"),
                            None => serde_json::Value::Null,
                        })
                        .collect();
                    json!({ "name": name, "values": values })
                })
                .collect();
            json_text(&json!({
                "config": { "m_min": lo, "m_max": hi, "bins": args.bins, "t_extremes": args.t_extremes },
                "schedule": (lo..=hi).collect::<Vec<_>>(),
                "series": series,
            }))
        }
    })
}

/// Seventeen significant digits, enough to round-trip every `f64`.
pub fn fmt_exact(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn synth(args: &SynthArgs) -> CliResult<String> {
    let kind = match args.kind {
        SynthKind::Logistic => SystemKind::LogisticUnidir,
        SynthKind::Ar => SystemKind::ArUnidir,
        SynthKind::Noise => SystemKind::IndependentNoise,
    };
    let spec = CoupledSystemSpec {
        kind,
        n: args.n,
        coupling: args.coupling,
        noise_std: args.noise_std,
        seed: args.seed,
        burn_in: args.burn_in,
    };
    let (x, y) = generate(&spec)?;
    let mut out = String::with_capacity(args.n * 50);
    out.push_str("x,y\n");
    for (a, b) in x.values().iter().zip(y.values()) {
        out.push_str(&fmt_exact(*a));
        out.push(',');
        out.push_str(&fmt_exact(*b));
        out.push('\n');
    }
    Ok(out)
}
