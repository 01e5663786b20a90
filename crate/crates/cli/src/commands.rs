use std::io::Write;
use std::path::Path;
use std::time::Instant;

use recdet::dsl::{load, LoadError, LoadedSpec};
use recdet::families::{family_matrix, family_oracle, FamilyId, FamilyParams};
use recdet::hessenberg::{random_hessenberg, MatrixJson, LAPLACE_MAX_SIZE};
use recdet::recurrence::verify_spec_with;
use recdet::ring::count_ops;
use recdet::{det_hessenberg_fast, DetMethod, RingKind, RingValue, SquareMatrix};
use serde::Serialize;

use crate::output;
use crate::{CliError, Format};

pub struct Options {
    pub format: Format,
    pub ring: Option<RingKind>,
    pub color: bool,
}

type CmdResult = Result<(), CliError>;

fn io_err(e: std::io::Error) -> CliError {
    CliError::Usage(format!("cannot write output: {e}"))
}

fn read_spec(path: &Path) -> Result<LoadedSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    load(&text).map_err(|e| match e {
        LoadError::Parse(p) => CliError::Usage(format!("{}: {p}", path.display())),
        LoadError::Spec(s) => CliError::Eval(format!("{}: {s}", path.display())),
    })
}

fn convert(v: RingValue, ring: Option<RingKind>) -> Result<RingValue, CliError> {
    match ring {
        None => Ok(v),
        Some(r) => v.into_kind(r).map_err(|e| CliError::Eval(e.to_string())),
    }
}

fn positive(name: &str, v: usize) -> CmdResult {
    if v == 0 {
        return Err(CliError::Usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn no_latex(format: Format, cmd: &str) -> CmdResult {
    if format == Format::Latex {
        return Err(CliError::Usage(format!("{cmd} has no latex output; use text or json")));
    }
    Ok(())
}

pub fn eval(out: &mut impl Write, opts: &Options, path: &Path, n: usize) -> CmdResult {
    positive("n", n)?;
    let loaded = read_spec(path)?;
    let terms = loaded
        .spec
        .eval(n)
        .map_err(|e| CliError::Eval(e.to_string()))?
        .into_terms()
        .into_iter()
        .map(|v| convert(v, opts.ring))
        .collect::<Result<Vec<_>, _>>()?;
    let text = match opts.format {
        Format::Json => {
            let terms: Vec<String> = terms.iter().map(ToString::to_string).collect();
            format!("{}\n", serde_json::json!({ "n": n, "terms": terms }))
        }
        f => output::indexed_lines(&terms, f),
    };
    out.write_all(text.as_bytes()).map_err(io_err)
}

pub fn matrix(out: &mut impl Write, opts: &Options, path: &Path, k: usize) -> CmdResult {
    positive("k", k)?;
    let loaded = read_spec(path)?;
    let m = loaded.spec.matrix(k).map_err(|e| CliError::Eval(e.to_string()))?;
    let ring = opts.ring.unwrap_or(loaded.ring);
    let entries = m
        .entries()
        .iter()
        .map(|v| convert(v.clone(), Some(ring)))
        .collect::<Result<Vec<_>, _>>()?;
    let m = SquareMatrix::upper_hessenberg(k, entries).map_err(|e| CliError::Eval(e.to_string()))?;
    let text = match opts.format {
        Format::Text => m.to_text(),
        Format::Latex => m.to_latex(),
        Format::Json => format!("{}\n", MatrixJson::from_matrix(&m, ring).to_json()),
    };
    out.write_all(text.as_bytes()).map_err(io_err)
}

pub fn verify(out: &mut impl Write, opts: &Options, path: &Path, max_n: usize, method: DetMethod) -> CmdResult {
    positive("max-n", max_n)?;
    no_latex(opts.format, "verify")?;
    if method == DetMethod::Laplace && max_n > LAPLACE_MAX_SIZE {
        return Err(CliError::Usage(format!(
            "laplace handles sizes up to {LAPLACE_MAX_SIZE}; lower --max-n or pick another method"
        )));
    }
    let loaded = read_spec(path)?;
    let name = path.file_stem().map_or_else(|| "spec".into(), |s| s.to_string_lossy().into_owned());
    let report = verify_spec_with(&name, &loaded.spec, max_n, method, loaded.perturbation.as_ref())
        .map_err(|e| CliError::Eval(e.to_string()))?;
    let text = match opts.format {
        Format::Json => format!("{}\n", report.to_json()),
        _ => {
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| vec![c.k.to_string(), c.direct.clone(), c.det.clone(), output::status(c.ok, opts.color)])
                .collect();
            let mut t = output::table(&["k", "direct", "det", "status"], &rows);
            match report.first_failure() {
                None => t.push_str(&format!("PASS  {max_n} of {max_n} sizes agree ({})\n", method.as_str())),
                Some(k) => t.push_str(&format!("FAIL  first mismatch at k = {k} ({})\n", method.as_str())),
            }
            t
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    match report.first_failure() {
        None => Ok(()),
        Some(k) => Err(CliError::Mismatch(format!("{name}: determinant differs from the direct term at k = {k}"))),
    }
}

fn parse_params(text: &str) -> Result<Vec<RingValue>, CliError> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<RingValue>()
                .map_err(|e| CliError::Usage(format!("bad parameter '{}': {e}", p.trim())))
        })
        .collect()
}

pub fn family(out: &mut impl Write, opts: &Options, name: &str, n: usize, params: Option<&str>, check: bool) -> CmdResult {
    positive("n", n)?;
    let id: FamilyId = name.parse().map_err(|_| {
        let names: Vec<&str> = FamilyId::ALL.iter().map(|f| f.name()).collect();
        CliError::Usage(format!("unknown family '{name}'; valid names: {}", names.join(", ")))
    })?;
    let params = match params {
        Some(p) => FamilyParams::coeffs(parse_params(p)?),
        None => FamilyParams::none(),
    };
    let mut values = Vec::with_capacity(n);
    for j in 1..=n {
        let m = family_matrix(id, j, &params).map_err(|e| CliError::Usage(e.to_string()))?;
        let det = det_hessenberg_fast(&m).map_err(|e| CliError::Eval(e.to_string()))?;
        if check {
            let oracle = family_oracle(id, j, &params).map_err(|e| CliError::Usage(e.to_string()))?;
            if oracle != det {
                return Err(CliError::Mismatch(format!(
                    "{id} at n = {j}: determinant {det} differs from closed form {oracle}"
                )));
            }
        }
        values.push(convert(det, opts.ring)?);
    }
    let text = match opts.format {
        Format::Json => {
            let values: Vec<String> = values.iter().map(ToString::to_string).collect();
            format!("{}\n", serde_json::json!({ "family": id.name(), "values": values }))
        }
        f => output::indexed_lines(&values, f),
    };
    out.write_all(text.as_bytes()).map_err(io_err)
}

#[derive(Debug, Serialize)]
pub struct BenchRecord {
    pub method: &'static str,
    pub size: usize,
    pub ring_ops: u64,
    pub ms: f64,
    pub max_bits: u64,
}

pub fn bench(out: &mut impl Write, opts: &Options, sizes: &[usize], methods: &[DetMethod], seed: u64) -> CmdResult {
    no_latex(opts.format, "bench")?;
    let ring = opts.ring.unwrap_or(RingKind::Rational);
    let mut records = Vec::new();
    let mut refused = Vec::new();
    for &size in sizes {
        let m = (size > 0).then(|| random_hessenberg(size, ring, seed));
        for &method in methods {
            let Some(m) = m.as_ref().filter(|_| !(method == DetMethod::Laplace && size > LAPLACE_MAX_SIZE)) else {
                eprintln!("refused: {} at size {size}", method.as_str());
                refused.push(format!("{}@{size}", method.as_str()));
                continue;
            };
            let start = Instant::now();
            let (det, ops) = count_ops(|| method.det(m));
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let det = det.map_err(|e| CliError::Eval(e.to_string()))?;
            eprintln!("det {} size {size}: {det}", method.as_str());
            records.push(BenchRecord {
                method: method.as_str(),
                size,
                ring_ops: ops.adds + ops.muls + ops.divs,
                ms: (ms * 1e3).round() / 1e3,
                max_bits: ops.max_bits,
            });
        }
    }
    match opts.format {
        Format::Json => {
            let text = serde_json::to_string(&records).expect("records serialize");
            writeln!(out, "{text}").map_err(io_err)?;
        }
        _ => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &records {
                w.serialize(r).map_err(|e| CliError::Usage(e.to_string()))?;
            }
            if records.is_empty() {
                w.write_record(["method", "size", "ring_ops", "ms", "max_bits"])
                    .map_err(|e| CliError::Usage(e.to_string()))?;
            }
            w.flush().map_err(io_err)?;
        }
    }
    if refused.is_empty() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "refused {} (laplace is limited to size {LAPLACE_MAX_SIZE}, sizes must be positive)",
            refused.join(", ")
        )))
    }
}
