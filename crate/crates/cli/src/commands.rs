use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use chute_core::crystal::crystal_graph;
use chute_core::keylab::decompose_unchecked;
use chute_core::rfc::{enumerate_rfc, schubert_compatible, schubert_rfc};
use chute_core::verify::sweep;
use chute_core::*;

use crate::{Cli, Command, Format, Method};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    VerificationFailed = 2,
}

pub fn run(cli: &Cli) -> Result<Status> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let format = cli.format.unwrap_or(match cli.command {
        Command::Crystal { .. } => Format::Dot,
        _ => Format::Text,
    });
    if format == Format::Dot && !matches!(cli.command, Command::Crystal { .. }) {
        bail!("--format dot is only available for `crystal`");
    }
    let (body, status) = match &cli.command {
        Command::Schubert {
            w,
            method,
            check_all,
        } => schubert(&permutation(w)?, *method, *check_all, format),
        Command::Pipedreams { w } => (pipedreams(&permutation(w)?, format), Status::Ok),
        Command::Crystal { w } => (crystal(&permutation(w)?, format)?, Status::Ok),
        Command::Decompose { w } => decompose(&permutation(w)?, format)?,
        Command::Rfc { w } => (rfcs(&permutation(w)?, format), Status::Ok),
        Command::Phi { input, n } => (phi_command(input, *n, format)?, Status::Ok),
        Command::Verify { n, failures } => verify(*n, failures.as_deref(), format)?,
    };
    emit(&body, cli.out.as_deref())?;
    Ok(status)
}

fn permutation(s: &str) -> Result<Permutation> {
    s.parse()
        .with_context(|| format!("reading permutation {s:?}"))
}

fn emit(body: &str, out: Option<&Path>) -> Result<()> {
    let mut text = body.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn schubert(w: &Permutation, method: Method, check_all: bool, format: Format) -> (String, Status) {
    let compute = |m: Method| match m {
        Method::Pipedreams => schubert_pipedreams(w),
        Method::Compatible => schubert_compatible(w),
        Method::Rfc => schubert_rfc(w),
        Method::Divdiff => schubert_divdiff(w),
    };
    if !check_all {
        let p = compute(method);
        let body = match format {
            Format::Json => {
                pretty(&json!({"w": w.window(), "method": name(method), "polynomial": p.to_json()}))
            }
            _ => p.to_text(),
        };
        return (body, Status::Ok);
    }
    let all = [
        Method::Pipedreams,
        Method::Compatible,
        Method::Rfc,
        Method::Divdiff,
    ];
    let results: Vec<(Method, SparsePolynomial)> = all.iter().map(|&m| (m, compute(m))).collect();
    let agree = results.iter().all(|(_, p)| *p == results[0].1);
    let status = if agree {
        Status::Ok
    } else {
        Status::VerificationFailed
    };
    let body = match format {
        Format::Json => pretty(&json!({
            "w": w.window(),
            "agree": agree,
            "polynomials": results.iter().map(|(m, p)| (name(*m).to_string(), p.to_json())).collect::<serde_json::Map<_, _>>(),
        })),
        _ if agree => "OK: 4 methods agree".to_string(),
        _ => {
            let mut lines = vec!["MISMATCH: methods disagree".to_string()];
            lines.extend(
                results
                    .iter()
                    .map(|(m, p)| format!("{}: {}", name(*m), p.to_text())),
            );
            lines.join("\n")
        }
    };
    (body, status)
}

fn name(m: Method) -> &'static str {
    match m {
        Method::Pipedreams => "pipedreams",
        Method::Compatible => "compatible",
        Method::Rfc => "rfc",
        Method::Divdiff => "divdiff",
    }
}

fn pipe_dream_json(d: &PipeDream) -> Value {
    let mut v = serde_json::to_value(d).expect("pipe dreams serialize");
    v["weight"] = json!(d.weight().parts());
    v
}

fn pipedreams(w: &Permutation, format: Format) -> String {
    let rp = enumerate_rp(w);
    match format {
        Format::Json => pretty(&json!({
            "w": w.window(),
            "count": rp.len(),
            "pipe_dreams": rp.iter().map(pipe_dream_json).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = format!("{} reduced pipe dreams for {}\n", rp.len(), w.one_line());
            for d in &rp {
                out.push_str(&format!(
                    "\n{} wt {}\n{}\n",
                    d.cross_list_string(),
                    d.weight(),
                    d.to_ascii()
                ));
            }
            out
        }
    }
}

fn crystal(w: &Permutation, format: Format) -> Result<String> {
    let graph = crystal_graph(w);
    Ok(match format {
        Format::Dot => graph.to_dot(),
        Format::Json => pretty(&graph.to_json()),
        Format::Text => {
            let components = graph.components()?;
            let mut lines = vec![format!(
                "{}: {} vertices, {} edges, {} components",
                w.one_line(),
                graph.vertices.len(),
                graph.edges.len(),
                components.len()
            )];
            for e in &graph.edges {
                lines.push(format!(
                    "{} -{}-> {}",
                    graph.vertices[e.source].cross_list_string(),
                    e.label,
                    graph.vertices[e.target].cross_list_string()
                ));
            }
            lines.join("\n")
        }
    })
}

fn decompose(w: &Permutation, format: Format) -> Result<(String, Status)> {
    let dec = decompose_unchecked(w)?;
    let status = if dec.verified() {
        Status::Ok
    } else {
        Status::VerificationFailed
    };
    let body = match format {
        Format::Json => pretty(&dec.to_json()),
        _ => {
            let mut lines = vec![format!(
                "{}: {} pipe dreams, {} components",
                w.one_line(),
                dec.graph.vertices.len(),
                dec.components.len()
            )];
            for (k, c) in dec.components.iter().enumerate() {
                let word = c.pi.reduced_expression();
                let pi = if word.is_empty() {
                    "id".to_string()
                } else {
                    word.letters()
                        .iter()
                        .map(|a| format!("s{a}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                lines.push(format!(
                    "component {}: highest {} lambda {} pi {} {} a_D {} size {} {}",
                    k + 1,
                    c.highest.cross_list_string(),
                    c.lambda,
                    pi,
                    c.pi.one_line(),
                    c.a,
                    c.members.len(),
                    if c.verified() {
                        "verified"
                    } else {
                        "NOT VERIFIED"
                    }
                ));
                lines.push(format!("  key {}", c.key.to_text()));
                if !c.verified() {
                    lines.push(format!("  component character {}", c.character.to_text()));
                }
            }
            lines.push(format!("schubert {}", dec.schubert.to_text()));
            lines.push(if dec.verified() {
                "OK: sum of keys equals the Schubert polynomial".to_string()
            } else {
                "FAILED: sum of keys differs from the Schubert polynomial".to_string()
            });
            lines.join("\n")
        }
    };
    Ok((body, status))
}

fn rfcs(w: &Permutation, format: Format) -> String {
    let all = enumerate_rfc(&w.inverse());
    match format {
        Format::Json => pretty(&json!({
            "w": w.window(),
            "count": all.len(),
            "factorizations": all.iter().map(|r| json!({
                "n": r.n(),
                "blocks": r.blocks(),
                "word": r.reading_word().letters(),
                "weight": r.weight().parts(),
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut lines = vec![format!(
                "{} factorizations for {}^-1 = {}",
                all.len(),
                w.one_line(),
                w.inverse().one_line()
            )];
            lines.extend(
                all.iter()
                    .map(|r| format!("{}  wt {}", r.to_text(), r.weight())),
            );
            lines.join("\n")
        }
    }
}

/// Parsed `phi` input.
enum PhiInput {
    PipeDream(PipeDream),
    Rfc(Rfc),
}

fn parse_phi_input(input: &str, n: Option<usize>) -> Result<PhiInput> {
    let trimmed = input.trim();
    if trimmed.starts_with('(') {
        return Ok(PhiInput::Rfc(
            trimmed.parse().context("reading factorization")?,
        ));
    }
    let value: Value =
        serde_json::from_str(trimmed).context("input is neither JSON nor a factorization")?;
    if value.get("blocks").is_some() {
        return Ok(PhiInput::Rfc(
            serde_json::from_value(value).context("reading factorization JSON")?,
        ));
    }
    if value.get("crosses").is_some() {
        return Ok(PhiInput::PipeDream(
            serde_json::from_value(value).context("reading pipe dream JSON")?,
        ));
    }
    let crosses: Vec<[usize; 2]> =
        serde_json::from_value(value).context("expected a list of [row, column] pairs")?;
    let fit = crosses.iter().map(|[r, c]| r + c).max().unwrap_or(2).max(2);
    let d = PipeDream::new(n.unwrap_or(fit), crosses.iter().map(|&[r, c]| (r, c)))?;
    Ok(PhiInput::PipeDream(d))
}

fn phi_command(input: &str, n: Option<usize>, format: Format) -> Result<String> {
    let (d, r, forward) = match parse_phi_input(input, n)? {
        PhiInput::PipeDream(d) => {
            if !d.is_reduced() {
                bail!("pipe dream {} is not reduced", d.cross_list_string());
            }
            let r = phi(&d);
            (d, r, true)
        }
        PhiInput::Rfc(r) => {
            if r.permutation().is_none() {
                bail!("factorization {} does not read a reduced word", r.to_text());
            }
            let d = phi_inverse(&r);
            if !d.is_reduced() {
                bail!(
                    "factorization {} does not come from a reduced pipe dream",
                    r.to_text()
                );
            }
            (d, r, false)
        }
    };
    let w = d.trace_pipes();
    Ok(match format {
        Format::Json => pretty(&json!({
            "w": w.window(),
            "pipe_dream": pipe_dream_json(&d),
            "rfc": {"n": r.n(), "blocks": r.blocks(), "text": r.to_text()},
        })),
        _ => {
            let pd = format!(
                "{} in RP({})\n{}",
                d.cross_list_string(),
                w.one_line(),
                d.to_ascii()
            );
            if forward {
                format!("{}\n{pd}", r.to_text())
            } else {
                format!("{pd}\n{}", r.to_text())
            }
        }
    })
}

fn verify(n: usize, failures: Option<&Path>, format: Format) -> Result<(String, Status)> {
    if !(2..=7).contains(&n) {
        bail!("verify supports 2 <= n <= 7, got {n}");
    }
    let report = sweep(n);
    let status = if report.all_passed() {
        Status::Ok
    } else {
        Status::VerificationFailed
    };
    let mut body = match format {
        Format::Json => pretty(&report.to_json()),
        _ => report.to_text(),
    };
    if !report.all_passed() {
        let path = failures
            .map(Path::to_path_buf)
            .unwrap_or_else(|| PathBuf::from(format!("chute-verify-n{n}-failures.json")));
        fs::write(&path, pretty(&report.failures_json()))
            .with_context(|| format!("writing {}", path.display()))?;
        if format != Format::Json {
            body.push_str(&format!("\nfailures written to {}", path.display()));
        }
    }
    Ok((body, status))
}
