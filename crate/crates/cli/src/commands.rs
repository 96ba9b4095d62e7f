//! Implementations of the three commands.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use stieltjes_core::report::IdentityReport;
use stieltjes_core::suite;
use stieltjes_core::{Error, PrecisionConfig, Real};

use crate::args::{Cli, Command, Common, Format};
use crate::cache::{Cache, Lookup};
use crate::request::{evaluate, render_err, result_document, ComputeRequest, Number, Outcome, Quantity};
use crate::{exit_code, EXIT_IDENTITY_FAILED, EXIT_KERNEL, EXIT_OK, EXIT_USAGE};

/// Output streams of a command.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli, io: &mut Io<'_>) -> u8 {
    let common = &cli.common;
    match cli.command {
        Command::Compute { quantity, params, x, angle } => {
            let params = params.with_x(x, angle);
            match ComputeRequest::new(quantity, &params, common.method.as_deref(), common.digits, common.max_terms) {
                Ok(req) => compute(&req, common, io),
                Err(e) => usage(io, &e),
            }
        }
        Command::Validate { suite, out, list } => {
            if list {
                for s in suite::SUITES {
                    let _ = writeln!(io.out, "{:<12} {}", s.name, s.description);
                }
                return EXIT_OK;
            }
            validate(&suite, out.as_deref(), common, io)
        }
        Command::Table { quantity, params, grid, format, out } => {
            let params = params.with_x(Some("1".into()), None);
            let req = ComputeRequest::new(quantity, &params, common.method.as_deref(), common.digits, common.max_terms);
            match (req, parse_grid(&grid, common.digits)) {
                (Ok(req), Ok(points)) => table(&req, &points, format, out.as_deref(), io),
                (Err(e), _) | (_, Err(e)) => usage(io, &e),
            }
        }
    }
}

fn usage(io: &mut Io<'_>, e: &Error) -> u8 {
    let _ = writeln!(io.err, "error: {e}");
    exit_code(e)
}

fn print_json(out: &mut dyn Write, v: &impl Serialize) {
    let _ = serde_json::to_writer_pretty(&mut *out, v);
    let _ = writeln!(out);
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn compute(req: &ComputeRequest, common: &Common, io: &mut Io<'_>) -> u8 {
    let start = Instant::now();
    let cache = if common.no_cache { None } else { common.cache_dir.as_ref().map(Cache::new) };
    let key = req.cache_key();
    let mut cache_state = if cache.is_some() { "miss" } else { "off" };

    let mut cached = None;
    if let Some(cache) = &cache {
        match cache.get(&key, req.digits) {
            Lookup::Hit(doc) => cached = Some(doc),
            Lookup::Miss => {}
            Lookup::Unusable(why) => {
                let _ = writeln!(io.err, "warning: ignoring cache entry: {why}; recomputing");
            }
        }
    }

    let (mut doc, code) = match cached {
        Some(doc) => {
            cache_state = "hit";
            (doc, EXIT_OK)
        }
        None => match evaluate(req) {
            Ok(outcome) => {
                let doc = result_document(req, &outcome);
                let code = if outcome.result.converged { EXIT_OK } else { EXIT_KERNEL };
                if let (Some(cache), EXIT_OK) = (&cache, code) {
                    if let Err(e) = cache.put(&key, req.digits, &doc) {
                        let _ = writeln!(io.err, "warning: cannot write cache entry in {}: {e}", cache.dir().display());
                    }
                }
                (doc, code)
            }
            Err(Error::NonConvergence(partial)) => {
                let _ = writeln!(io.err, "error: {}", Error::NonConvergence(partial.clone()));
                (result_document(req, &Outcome::from(*partial)), EXIT_KERNEL)
            }
            Err(e) => return usage(io, &e),
        },
    };
    doc["metadata"] = json!({
        "elapsed_ms": elapsed_ms(start),
        "cache": cache_state,
        "version": env!("CARGO_PKG_VERSION"),
    });
    print_json(io.out, &doc);
    code
}

/// Report file written by `validate`.
#[derive(Serialize)]
struct ReportFile<'a> {
    suites: Vec<&'static str>,
    digits: u32,
    precision_bits: u32,
    summary: Summary,
    reports: &'a [IdentityReport],
    metadata: Value,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
    known_discrepancies: usize,
    unexpected: Vec<String>,
}

fn summarize(reports: &[IdentityReport]) -> Summary {
    Summary {
        total: reports.len(),
        passed: reports.iter().filter(|r| r.pass).count(),
        failed: reports.iter().filter(|r| !r.pass).count(),
        known_discrepancies: reports.iter().filter(|r| r.known_discrepancy).count(),
        unexpected: reports.iter().filter(|r| !r.as_expected()).map(|r| r.id.clone()).collect(),
    }
}

fn validate(names: &[String], out: Option<&Path>, common: &Common, io: &mut Io<'_>) -> u8 {
    let start = Instant::now();
    let suites = match suite::resolve(names) {
        Ok(s) => s,
        Err(e) => return usage(io, &e),
    };
    let cfg = match PrecisionConfig::new(common.digits).and_then(|c| match common.max_terms {
        Some(n) => c.with_max_terms(n),
        None => Ok(c),
    }) {
        Ok(c) => c,
        Err(e) => return usage(io, &e),
    };
    if !crate::request::DIGITS_RANGE.contains(&common.digits) {
        return usage(io, &Error::Config(format!("--digits must be in 10..=200, got {}", common.digits)));
    }

    let runs: Vec<_> = suites.par_iter().map(|s| s.run(&cfg).map_err(|e| (s.name, e))).collect();
    let mut reports = Vec::new();
    for run in runs {
        match run {
            Ok(r) => reports.extend(r),
            Err((name, e)) => {
                let _ = writeln!(io.err, "error: suite {name}: {e}");
                return EXIT_KERNEL;
            }
        }
    }
    suite::sort_reports(&mut reports);

    let file = ReportFile {
        suites: suites.iter().map(|s| s.name).collect(),
        digits: common.digits,
        precision_bits: cfg.prec(),
        summary: summarize(&reports),
        reports: &reports,
        metadata: json!({
            "timestamp": chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            "elapsed_ms": elapsed_ms(start),
            "versions": {
                "stieltjes-cli": env!("CARGO_PKG_VERSION"),
                "stieltjes-core": stieltjes_core::VERSION,
            },
        }),
    };
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&file).expect("report serializes") + "\n";
        if let Err(e) = fs::write(path, text) {
            let _ = writeln!(io.err, "error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    if common.json {
        print_json(io.out, &file);
    } else {
        for r in &reports {
            let verdict = match (r.pass, r.known_discrepancy) {
                (true, false) => "PASS",
                (false, true) => "XFAIL",
                (true, true) => "XPASS",
                (false, false) => "FAIL",
            };
            let at = r.x.as_ref().map(|x| format!(" x={}", x.to_decimal(8))).unwrap_or_default();
            let meta = if r.meta.is_empty() { String::new() } else { format!(" ({})", r.meta) };
            let _ = writeln!(io.out, "{verdict:<5} {}{at} residual={}{meta}", r.id, render_err(&r.residual));
        }
        let s = &file.summary;
        let _ = writeln!(
            io.out,
            "{} identities: {} passed, {} failed ({} known discrepancies)",
            s.total, s.passed, s.failed, s.known_discrepancies
        );
    }
    if file.summary.unexpected.is_empty() {
        EXIT_OK
    } else {
        EXIT_IDENTITY_FAILED
    }
}

/// Parses `start:stop:count` into grid points rendered as decimals.
pub fn parse_grid(spec: &str, digits: u32) -> Result<Vec<Number>, Error> {
    let bad = |why: &str| Error::Parse(format!("bad grid {spec:?}: {why} (expected start:stop:count)"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, count] = parts[..] else {
        return Err(bad("need three fields"));
    };
    let count: usize = count.trim().parse().map_err(|_| bad("count is not a positive integer"))?;
    if count == 0 {
        return Err(bad("count must be positive"));
    }
    let prec = PrecisionConfig::new(digits.max(10))?.prec();
    let start_n: Number = start.parse().map_err(|_| bad("start is not a number"))?;
    let stop_n: Number = stop.parse().map_err(|_| bad("stop is not a number"))?;
    let (a, b) = (start_n.to_real(prec), stop_n.to_real(prec));
    if !a.is_positive() {
        return Err(bad("start must be positive"));
    }
    if count > 1 && b < a {
        return Err(bad("stop is below start"));
    }
    if count == 1 {
        return Ok(vec![start_n]);
    }
    let step = (&b - &a) / (count as u64 - 1);
    Ok((0..count)
        .map(|i| match i {
            0 => start_n.clone(),
            _ if i == count - 1 => stop_n.clone(),
            _ => Number::Decimal((&a + &step * i as u64).to_decimal(digits as usize)),
        })
        .collect())
}

#[derive(Serialize)]
struct Row {
    x: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    imag: Option<String>,
    err_estimate: String,
    terms_used: u64,
    converged: bool,
}

fn table(req: &ComputeRequest, points: &[Number], format: Format, out: Option<&Path>, io: &mut Io<'_>) -> u8 {
    let digits = req.digits as usize;
    let rows: Vec<Result<Row, Error>> = points
        .par_iter()
        .map(|x| {
            let o = evaluate(&req.with_x(x.clone()))?;
            Ok(Row {
                x: x.to_string(),
                value: o.result.value.to_decimal(digits),
                imag: o.imag.as_ref().map(|v: &Real| v.to_decimal(digits)),
                err_estimate: render_err(&o.result.err_estimate),
                terms_used: o.result.terms_used,
                converged: o.result.converged,
            })
        })
        .collect();
    let mut ok = Vec::with_capacity(rows.len());
    for (x, r) in points.iter().zip(rows) {
        match r {
            Ok(row) => ok.push(row),
            Err(e) => {
                let _ = writeln!(io.err, "error: at x = {x}: {e}");
                return exit_code(&e);
            }
        }
    }

    let text = match format {
        Format::Json => {
            let mut params = req.params();
            params.remove("x");
            let doc = json!({
                "quantity": req.quantity.as_str(),
                "params": params,
                "method": req.method,
                "digits": req.digits,
                "rows": ok,
            });
            serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let complex = req.quantity == Quantity::SondowGamma;
            let mut header = vec!["x", "value"];
            if complex {
                header.push("imag");
            }
            header.extend(["err_estimate", "terms_used", "converged"]);
            let _ = w.write_record(&header);
            for r in &ok {
                let mut rec = vec![r.x.clone(), r.value.clone()];
                if complex {
                    rec.push(r.imag.clone().unwrap_or_default());
                }
                rec.extend([r.err_estimate.clone(), r.terms_used.to_string(), r.converged.to_string()]);
                let _ = w.write_record(&rec);
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 csv")
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                let _ = writeln!(io.err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = io.out.write_all(text.as_bytes());
        }
    }
    if ok.iter().all(|r| r.converged) {
        EXIT_OK
    } else {
        EXIT_KERNEL
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        let g = parse_grid("0.1:0.9:9", 20).unwrap();
        let xs: Vec<String> = g.iter().map(|n| n.to_string()).collect();
        assert_eq!(xs, ["0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9"]);
        assert_eq!(parse_grid("1:5:1", 20).unwrap().len(), 1);
        assert_eq!(parse_grid("1/4:3/4:3", 20).unwrap()[1].to_string(), "0.5");
        for bad in ["0:1:3", "-1:1:3", "1:2", "1:2:0", "1:2:x", "2:1:3", "a:1:2"] {
            assert!(parse_grid(bad, 20).is_err(), "{bad}");
        }
    }
}
