use std::fmt::Write as _;
use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use coxeter_core::codes::{
    code_from_matrix, enumerate_selfdual_codes, family_from_code, family_inverse_closed,
    format_codes, orthogonal_witness, sd_membership, sd_membership_distances,
};
use coxeter_core::gamma::{
    classify_pair, diameter_closed, distance_ambient, distance_bfs, distance_closed,
    eccentricity_bfs, enumerate_vertices, export_graph, geodesic, neighbors,
};
use coxeter_core::gf2::is_alternate;
use coxeter_core::{
    run_suite, GraphConfig, SelfDualCode, Suite, SuiteReport, SymMatrix, VerifyOptions, Vertex,
};
use serde_json::{json, Value};

use crate::cli::{Command, Format};
use crate::error::CliError;
use crate::input::{check_stdin_once, read_code, read_vertex, same_dimension};

/// Everything a command prints, in both formats.
pub struct Report {
    pub inputs: Value,
    pub result: Value,
    pub details: Value,
    pub human: String,
    /// Set when the report is printed but the run still fails.
    pub failure: Option<CliError>,
}

impl Report {
    fn new(inputs: Value, result: Value, details: Value, human: String) -> Self {
        Self {
            inputs,
            result,
            details,
            human,
            failure: None,
        }
    }
}

fn rows(m: &SymMatrix) -> Value {
    json!(m.row_strings())
}

fn code_rows(c: &SelfDualCode) -> Value {
    json!(c.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>())
}

fn pair(a: &Path, b: &Path) -> Result<(Vertex, Vertex), CliError> {
    check_stdin_once(&[a, b])?;
    let (a, b) = (read_vertex(a)?, read_vertex(b)?);
    same_dimension(&a, &b)?;
    Ok((a, b))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(command: &Command, format: Format, config: &GraphConfig) -> Result<Report, CliError> {
    match command {
        Command::Dist { pair: p, bfs } => {
            let (a, b) = pair(&p.a, &p.b)?;
            let d = distance_closed(&a, &b)?;
            let class = classify_pair(&a, &b)?;
            let ambient = distance_ambient(a.mat(), b.mat())?;
            let by_bfs = bfs.then(|| distance_bfs(&a, &b, config)).transpose()?;
            let mut human = format!("{d}\n");
            if let Some(x) = by_bfs {
                writeln!(human, "bfs {x}").unwrap();
            }
            let details = json!({ "class": class.label(), "rank": class.rank(), "ambient": ambient, "bfs": by_bfs });
            Ok(Report::new(
                json!({ "a": rows(a.mat()), "b": rows(b.mat()) }),
                json!(d),
                details,
                human,
            ))
        }
        Command::Classify { pair: p } => {
            let (a, b) = pair(&p.a, &p.b)?;
            let class = classify_pair(&a, &b)?;
            let human = format!("{class} distance {}\n", class.distance());
            let details = json!({ "label": class.label(), "rank": class.rank(), "distance": class.distance() });
            Ok(Report::new(
                json!({ "a": rows(a.mat()), "b": rows(b.mat()) }),
                json!(class.to_string()),
                details,
                human,
            ))
        }
        Command::Neighbors { a } => {
            let a = read_vertex(a)?;
            let nbrs: Vec<Vertex> = neighbors(&a).collect();
            let human = nbrs
                .iter()
                .map(|v| format!("{}\n", v.mat().to_compact()))
                .collect();
            let result = json!(nbrs.iter().map(|v| rows(v.mat())).collect::<Vec<_>>());
            let details = json!({ "count": nbrs.len(), "alternate": is_alternate(a.mat()) });
            Ok(Report::new(
                json!({ "a": rows(a.mat()) }),
                result,
                details,
                human,
            ))
        }
        Command::Geodesic { pair: p } => {
            let (a, b) = pair(&p.a, &p.b)?;
            let path = geodesic(&a, &b)?;
            let human = path
                .iter()
                .map(|v| format!("{}\n", v.mat().to_compact()))
                .collect();
            let result = json!(path.iter().map(|v| rows(v.mat())).collect::<Vec<_>>());
            let details = json!({ "length": path.len() - 1 });
            Ok(Report::new(
                json!({ "a": rows(a.mat()), "b": rows(b.mat()) }),
                result,
                details,
                human,
            ))
        }
        Command::Diameter { n, bfs } => {
            let d = diameter_closed(*n)?;
            let ecc = bfs
                .then(|| eccentricity_bfs(&Vertex::identity(*n), config))
                .transpose()?;
            let mut human = format!("{d}\n");
            if let Some(e) = ecc {
                writeln!(human, "bfs eccentricity of I {e}").unwrap();
            }
            Ok(Report::new(
                json!({ "n": n }),
                json!(d),
                json!({ "bfs_eccentricity": ecc }),
                human,
            ))
        }
        Command::Enumerate { n, count } => {
            let vertices = enumerate_vertices(*n, config)?;
            let ratio = vertices.len() as f64 / 2f64.powi((n * (n + 1) / 2) as i32);
            let details = json!({ "count": vertices.len(), "ratio": ratio });
            let (result, human) = if *count {
                (json!(vertices.len()), format!("{}\n", vertices.len()))
            } else {
                (
                    json!(vertices.iter().map(|v| rows(v.mat())).collect::<Vec<_>>()),
                    vertices
                        .iter()
                        .map(|v| format!("{}\n", v.mat().to_compact()))
                        .collect(),
                )
            };
            Ok(Report::new(
                json!({ "n": n, "count_only": count }),
                result,
                details,
                human,
            ))
        }
        Command::ExportGraph { n, out } => {
            config.check(*n)?;
            let summary = match out {
                Some(path) => {
                    let file = File::create(path).map_err(|source| CliError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    export_graph(*n, config, &mut BufWriter::new(file))?
                }
                None if format == Format::Json => {
                    return Err(CliError::Usage(
                        "export-graph with --format json needs --out".into(),
                    ));
                }
                None => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    export_graph(*n, config, &mut lock)?;
                    return Ok(Report::new(
                        json!({ "n": n }),
                        Value::Null,
                        json!({}),
                        String::new(),
                    ));
                }
            };
            let path = out.as_ref().map(|p| p.display().to_string());
            let human = format!(
                "wrote {} vertices and {} edges to {}\n",
                summary.vertices,
                summary.edges,
                path.as_deref().unwrap_or("-")
            );
            let result = json!({ "vertices": summary.vertices, "edges": summary.edges });
            Ok(Report::new(
                json!({ "n": n, "out": path }),
                result,
                json!({}),
                human,
            ))
        }
        Command::CodesList { length } => {
            let codes = enumerate_selfdual_codes(*length)?;
            let result = json!(codes.iter().map(code_rows).collect::<Vec<_>>());
            let human = format_codes(&codes);
            Ok(Report::new(
                json!({ "length": length }),
                result,
                json!({ "count": codes.len() }),
                human,
            ))
        }
        Command::CodesFamily { code, a } => {
            let (code, inputs) = match (code, a) {
                (Some(path), _) => {
                    let c = read_code(path)?;
                    let inputs = json!({ "code": code_rows(&c) });
                    (c, inputs)
                }
                (None, Some(path)) => {
                    let a = read_vertex(path)?;
                    (code_from_matrix(&a)?, json!({ "a": rows(a.mat()) }))
                }
                (None, None) => {
                    return Err(CliError::Usage("codes-family needs --code or --a".into()))
                }
            };
            family_report(&code, inputs)
        }
        Command::CodesWitness { from, to } => {
            check_stdin_once(&[from, to])?;
            let (c, ct) = (read_code(from)?, read_code(to)?);
            let p = orthogonal_witness(&c, &ct)?;
            let human = format!("{}\n", p.row_strings().join("\n"));
            let inputs = json!({ "from": code_rows(&c), "to": code_rows(&ct) });
            Ok(Report::new(
                inputs,
                json!(p.row_strings()),
                json!({ "n": p.rows() }),
                human,
            ))
        }
        Command::Verify {
            suite,
            n,
            iters,
            seed,
        } => {
            let suites = if suite.is_empty() || suite.iter().any(|s| s == "all") {
                Suite::ALL.to_vec()
            } else {
                suite
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<Suite>, _>>()?
            };
            let opts = VerifyOptions {
                n: *n,
                iters: *iters,
                seed: *seed,
                config: *config,
            };
            let reports = suites
                .iter()
                .map(|&s| run_suite(s, &opts))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(verify_report(&suites, &opts, &reports))
        }
    }
}

fn family_report(code: &SelfDualCode, inputs: Value) -> Result<Report, CliError> {
    let family = family_from_code(code)?;
    let closed = family_inverse_closed(code)?;
    let identity = Vertex::identity(code.n());
    let mut members = Vec::new();
    let mut human = String::new();
    writeln!(
        human,
        "code {}",
        code.rows()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join("/")
    )
    .unwrap();
    writeln!(
        human,
        "n {}, {} members, inverse-closed {}",
        code.n(),
        family.members.len(),
        yes_no(closed)
    )
    .unwrap();
    let width = (code.n() * code.n() + code.n() - 1).max(6);
    writeln!(
        human,
        "{:<width$}  {:<4}  {:<12}  d(A,I)",
        "member", "SD", "by distances"
    )
    .unwrap();
    for m in &family.members {
        let sd = sd_membership(m)?;
        let by_distances = sd_membership_distances(m)?;
        let d = distance_closed(m, &identity)?;
        writeln!(
            human,
            "{:<width$}  {:<4}  {:<12}  {d}",
            m.mat().to_compact(),
            yes_no(sd),
            yes_no(by_distances)
        )
        .unwrap();
        members.push(json!({ "matrix": rows(m.mat()), "sd": sd, "sd_by_distances": by_distances, "distance_to_identity": d }));
    }
    let result = json!(family
        .members
        .iter()
        .map(|m| rows(m.mat()))
        .collect::<Vec<_>>());
    let details = json!({ "code": code_rows(code), "n": code.n(), "size": family.members.len(), "inverse_closed": closed, "members": members });
    Ok(Report::new(inputs, result, details, human))
}

fn verify_report(suites: &[Suite], opts: &VerifyOptions, reports: &[SuiteReport]) -> Report {
    let mut human = String::new();
    let mut details = Vec::new();
    for r in reports {
        let n = r.n.map(|n| format!(" n={n}")).unwrap_or_default();
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            human,
            "{status} {}{n}: {} checks, {} failures ({:.2} s)",
            r.suite,
            r.checks(),
            r.failures(),
            r.elapsed.as_secs_f64()
        )
        .unwrap();
        for c in &r.counts {
            writeln!(
                human,
                "    {:<40} {:>8} checks {:>4} failures",
                c.name, c.checks, c.failures
            )
            .unwrap();
        }
        for m in &r.messages {
            writeln!(human, "    ! {m}").unwrap();
        }
        let counts: Vec<Value> = r
            .counts
            .iter()
            .map(|c| json!({ "name": c.name, "checks": c.checks, "failures": c.failures }))
            .collect();
        details.push(json!({
            "suite": r.suite.name(),
            "n": r.n,
            "passed": r.passed(),
            "checks": r.checks(),
            "failures": r.failures(),
            "counts": counts,
            "messages": r.messages,
        }));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let inputs = json!({
        "suites": suites.iter().map(|s| s.name()).collect::<Vec<_>>(),
        "n": opts.n,
        "iters": opts.iters,
        "seed": opts.seed,
    });
    let mut report = Report::new(
        inputs,
        json!({ "passed": failed == 0 }),
        json!(details),
        human,
    );
    if failed > 0 {
        report.failure = Some(CliError::VerifyFailed {
            failed,
            total: reports.len(),
        });
    }
    report
}
