//! The `gkm` command-line front end.
//!
//! Exit codes: 0 when everything passes, 1 for a mathematical failure (an
//! axiom, an exactness check, or a mismatch with an expected report), 2 for
//! unusable input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::builders::{example, EXAMPLE_NAMES};
use crate::cohomology::{
    beta_map, check_local_sequence, cohomology_report, godement_crosscheck, hn_vanishing,
    reflexivity_evidence, sheaf_floor, SummandLabel, DEFAULT_CUTOFF,
};
use crate::document::{
    poly_to_doc, AxiomDoc, CheckDoc, Conventions, EdgeTable, EdgeVerdict, GeneratorDoc,
    GeneratorList, Ingested, ReportDocument, SheafDocument,
};
use crate::graded::{HilbertFunction, ProbeVerdict};
use crate::sheaf::{validate_axioms, GkmSheaf};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "gkm",
    version,
    about = "Cohomology of GKM-sheaves on GKM-hypergraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the sheaf axioms and list the non-degenerate edges.
    Validate { file: PathBuf },
    /// Hilbert tables of H^0, H^1, local H^1 and the vertex sections.
    Cohomology {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        max_degree: i64,
        /// Also compute minimal generators of H^0 up to the cutoff.
        #[arg(long)]
        generators: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exactness, cross-check, reflexivity and vanishing verdicts.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        max_degree: i64,
        #[arg(long)]
        json: bool,
        /// Compare the Hilbert tables with a previously saved JSON report.
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Write a built-in example document.
    Example {
        name: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_PASS
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Validate { file } => cmd_validate(&file, out, err),
        Command::Cohomology {
            file,
            max_degree,
            generators,
            json,
        } => cmd_cohomology(&file, max_degree, generators, json, out, err),
        Command::Check {
            file,
            max_degree,
            json,
            expect,
        } => cmd_check(&file, max_degree, json, expect.as_deref(), out, err),
        Command::Example { name, output } => cmd_example(&name, output.as_deref(), out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

type CmdResult = std::result::Result<i32, String>;

fn load(path: &Path, err: &mut dyn Write) -> std::result::Result<Ingested, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let ingested = SheafDocument::from_json(&text)
        .and_then(|d| d.ingest())
        .map_err(|e| format!("{}: {e}", path.display()))?;
    for w in &ingested.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    Ok(ingested)
}

fn check_cutoff(d: i64) -> std::result::Result<(), String> {
    if d < 0 || d % 2 != 0 {
        return Err(format!(
            "--max-degree must be a nonnegative even integer, got {d}"
        ));
    }
    Ok(())
}

fn axiom_doc(sheaf: &GkmSheaf) -> AxiomDoc {
    let report = validate_axioms(sheaf);
    AxiomDoc {
        passed: report.all_pass(),
        nondegenerate_edges: report.nondegenerate.iter().map(|e| e.to_string()).collect(),
        edges: report
            .localization
            .iter()
            .map(|c| EdgeVerdict {
                edge: c.edge.to_string(),
                verdict: c.localization.to_string(),
            })
            .collect(),
    }
}

fn write_axioms(doc: &AxiomDoc, out: &mut dyn Write) -> std::io::Result<()> {
    for e in &doc.edges {
        writeln!(out, "  {}: {}", e.edge, e.verdict)?;
    }
    let n = doc.nondegenerate_edges.len();
    writeln!(out, "ℰ^nd = {n} edge{}", if n == 1 { "" } else { "s" })?;
    writeln!(out, "axioms: {}", if doc.passed { "PASS" } else { "FAIL" })
}

fn cmd_validate(file: &Path, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let ing = load(file, err)?;
    let doc = axiom_doc(&ing.sheaf);
    write_axioms(&doc, out).map_err(|e| e.to_string())?;
    Ok(if doc.passed { EXIT_PASS } else { EXIT_FAIL })
}

/// Tabulated degrees: only even ones when every generator degree is even.
fn table_degrees(sheaf: &GkmSheaf, cutoff: i64) -> Vec<i64> {
    let edge_degs = sheaf
        .edges()
        .iter()
        .flat_map(|d| d.stalk.generator_degrees().iter());
    let all_even = sheaf
        .vertex_stalks()
        .values()
        .flat_map(|m| m.generator_degrees().iter())
        .chain(edge_degs)
        .all(|d| d % 2 == 0);
    let start = sheaf_floor(sheaf);
    (start..=cutoff)
        .filter(|d| !all_even || d % 2 == 0)
        .collect()
}

fn column(h: &HilbertFunction, degrees: &[i64]) -> Vec<usize> {
    degrees
        .iter()
        .map(|&d| h.dim(d).expect("within cutoff"))
        .collect()
}

fn summand_label(label: &SummandLabel) -> String {
    match label {
        SummandLabel::Vertex(v) => format!("vertex {v}"),
        SummandLabel::Edge(e) => format!("edge {e}"),
        SummandLabel::EdgeVertex(e, v) => format!("edge {e} at {v}"),
    }
}

/// Report on a validated sheaf.
pub fn build_report(ing: &Ingested, cutoff: i64, generators: bool) -> ReportDocument {
    let sheaf = &ing.sheaf;
    let report = cohomology_report(sheaf, cutoff, generators);
    let degrees = table_degrees(sheaf, cutoff);
    let h0_generators = report.h0_generators.as_ref().map(|k| {
        let beta = beta_map(sheaf);
        GeneratorList {
            complete_up_to_degree: cutoff,
            domain: beta
                .domain
                .iter()
                .map(|s| (summand_label(&s.label), s.module.rank()))
                .collect(),
            generators: k
                .generators()
                .iter()
                .map(|g| GeneratorDoc {
                    degree: g.degree,
                    coordinates: g.coords.iter().map(poly_to_doc).collect(),
                })
                .collect(),
        }
    });
    ReportDocument {
        name: ing.name.clone(),
        torus_rank: sheaf.torus_rank(),
        cutoff,
        conventions: Conventions::default(),
        h0: column(&report.h0, &degrees),
        h1: column(&report.h1, &degrees),
        local_h1: column(&report.local_h1.total, &degrees),
        vertex_sections: column(&report.vertex_sections, &degrees),
        local_h1_per_edge: report
            .local_h1
            .per_edge
            .iter()
            .map(|(e, h)| EdgeTable {
                edge: e.to_string(),
                dims: column(h, &degrees),
            })
            .collect(),
        axioms: axiom_doc(sheaf),
        h0_generators,
        check: None,
        degrees,
    }
}

/// Plain-text rendering of a report; encodes the same numbers as the JSON.
pub fn render_report(doc: &ReportDocument) -> String {
    let mut s = String::new();
    let title = doc.name.as_deref().unwrap_or("sheaf");
    s.push_str(&format!(
        "{title} (torus rank {}, cutoff {})\n",
        doc.torus_rank, doc.cutoff
    ));
    let rows: Vec<(String, &[usize])> = std::iter::once(("H^0".to_string(), doc.h0.as_slice()))
        .chain(std::iter::once(("H^1".to_string(), doc.h1.as_slice())))
        .chain(std::iter::once((
            "H^1_E".to_string(),
            doc.local_h1.as_slice(),
        )))
        .chain(std::iter::once((
            "vertex".to_string(),
            doc.vertex_sections.as_slice(),
        )))
        .chain(
            doc.local_h1_per_edge
                .iter()
                .map(|t| (format!("  {}", t.edge), t.dims.as_slice())),
        )
        .collect();
    let label_width = rows
        .iter()
        .map(|(l, _)| l.chars().count())
        .max()
        .unwrap_or(0)
        .max(6);
    let width = |j: usize| {
        let mut w = doc.degrees[j].to_string().len();
        for (_, r) in &rows {
            w = w.max(r[j].to_string().len());
        }
        w
    };
    let widths: Vec<usize> = (0..doc.degrees.len()).map(width).collect();
    s.push_str(&format!("{:<label_width$}", "degree"));
    for (d, w) in doc.degrees.iter().zip(&widths) {
        s.push_str(&format!(" {d:>w$}"));
    }
    s.push('\n');
    for (label, values) in &rows {
        s.push_str(&format!("{label:<label_width$}"));
        for (v, w) in values.iter().zip(&widths) {
            s.push_str(&format!(" {v:>w$}"));
        }
        s.push('\n');
    }
    if let Some(g) = &doc.h0_generators {
        s.push_str(&format!(
            "H^0 generators ({}), complete up to degree {}:\n",
            g.generators.len(),
            g.complete_up_to_degree
        ));
        for gen in &g.generators {
            let mut parts = Vec::new();
            let mut offset = 0;
            for (label, rank) in &g.domain {
                if let Some(v) = label.strip_prefix("vertex ") {
                    let coords: Vec<String> = gen.coordinates[offset..offset + rank]
                        .iter()
                        .map(render_poly)
                        .collect();
                    parts.push(format!("{v}: [{}]", coords.join(", ")));
                }
                offset += rank;
            }
            s.push_str(&format!("  degree {}: {}\n", gen.degree, parts.join(", ")));
        }
    }
    s
}

fn render_poly(p: &crate::document::PolyDoc) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in p.iter().enumerate() {
        let (neg, mag) = match t.coeff.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, t.coeff.as_str()),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let vars: Vec<String> = t
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(k, e)| {
                if *e == 1 {
                    format!("x{}", k + 1)
                } else {
                    format!("x{}^{e}", k + 1)
                }
            })
            .collect();
        if vars.is_empty() {
            out.push_str(mag);
        } else {
            if mag != "1" {
                out.push_str(mag);
                out.push('*');
            }
            out.push_str(&vars.join("*"));
        }
    }
    out
}

fn cmd_cohomology(
    file: &Path,
    cutoff: i64,
    generators: bool,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    check_cutoff(cutoff)?;
    let ing = load(file, err)?;
    let report = build_report(&ing, cutoff, generators);
    if !report.axioms.passed {
        let _ = writeln!(err, "the sheaf fails the axioms:");
        write_axioms(&report.axioms, err).map_err(|e| e.to_string())?;
        return Ok(EXIT_FAIL);
    }
    let text = if json {
        report.to_json()
    } else {
        render_report(&report)
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    Ok(EXIT_PASS)
}

/// All verdicts of `check` on one sheaf.
pub fn check_doc(sheaf: &GkmSheaf, cutoff: i64) -> CheckDoc {
    let exactness = check_local_sequence(sheaf, cutoff);
    let cross = godement_crosscheck(sheaf, cutoff);
    let refl = reflexivity_evidence(sheaf, cutoff);
    let higher_vanishing = (2..=5)
        .filter(|&n| hn_vanishing(sheaf, n).map(|c| c.holds()).unwrap_or(false))
        .collect::<Vec<_>>();
    let first_inexact_degree = exactness.iter().find(|e| !e.passed()).map(|e| e.degree);
    let exactness_passed = first_inexact_degree.is_none();
    let crosscheck_passed = cross.passed();
    let torsion_probe = match refl.probe {
        ProbeVerdict::Pass => "PASS".to_string(),
        ProbeVerdict::Fail {
            degree,
            torsion_dim,
        } => {
            format!("FAIL in degree {degree} (torsion dimension {torsion_dim})")
        }
    };
    CheckDoc {
        passed: exactness_passed
            && crosscheck_passed
            && refl.passed()
            && higher_vanishing.len() == 4,
        exactness_passed,
        alternating_sums: exactness.iter().map(|e| e.alternating_sum).collect(),
        first_inexact_degree,
        crosscheck_passed,
        first_crosscheck_mismatch: cross.first_mismatch(),
        torsion_probe,
        free_source_degrees: refl.free_source.generator_degrees().to_vec(),
        free_target_degrees: refl.free_target.generator_degrees().to_vec(),
        higher_vanishing,
    }
}

/// Differences between the Hilbert tables of two reports.
pub fn compare_tables(expected: &ReportDocument, actual: &ReportDocument) -> Vec<String> {
    let mut diffs = Vec::new();
    if expected.cutoff != actual.cutoff {
        diffs.push(format!(
            "cutoff: expected {}, computed {}",
            expected.cutoff, actual.cutoff
        ));
    }
    let tables: [(&str, &[usize], &[usize]); 4] = [
        ("H^0", &expected.h0, &actual.h0),
        ("H^1", &expected.h1, &actual.h1),
        ("H^1_E", &expected.local_h1, &actual.local_h1),
        ("vertex", &expected.vertex_sections, &actual.vertex_sections),
    ];
    for (name, e, a) in tables {
        for (i, d) in actual.degrees.iter().enumerate() {
            let j = expected.degrees.iter().position(|x| x == d);
            let ev = j.and_then(|j| e.get(j));
            if ev != a.get(i) {
                let shown = ev.map_or("nothing".to_string(), |v| v.to_string());
                diffs.push(format!(
                    "{name} in degree {d}: expected {shown}, computed {}",
                    a[i]
                ));
            }
        }
    }
    diffs
}

fn cmd_check(
    file: &Path,
    cutoff: i64,
    json: bool,
    expect: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    check_cutoff(cutoff)?;
    let expected = match expect {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            Some(ReportDocument::from_json(&text).map_err(|e| format!("{}: {e}", p.display()))?)
        }
        None => None,
    };
    let ing = load(file, err)?;
    let mut report = build_report(&ing, cutoff, false);
    if !report.axioms.passed {
        let _ = writeln!(err, "the sheaf fails the axioms:");
        write_axioms(&report.axioms, err).map_err(|e| e.to_string())?;
        return Ok(EXIT_FAIL);
    }
    let check = check_doc(&ing.sheaf, cutoff);
    let diffs = expected
        .as_ref()
        .map(|e| compare_tables(e, &report))
        .unwrap_or_default();
    let passed = check.passed && diffs.is_empty();
    report.check = Some(check.clone());
    let io = |e: std::io::Error| e.to_string();
    if json {
        out.write_all(report.to_json().as_bytes()).map_err(io)?;
    } else {
        let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
        match check.first_inexact_degree {
            None => writeln!(
                out,
                "exactness: PASS in every degree {}..{cutoff}",
                sheaf_floor(&ing.sheaf)
            ),
            Some(d) => writeln!(out, "exactness: FAIL in degree {d}"),
        }
        .map_err(io)?;
        match check.first_crosscheck_mismatch {
            None => writeln!(out, "cross-check: PASS"),
            Some(d) => writeln!(out, "cross-check: FAIL in degree {d}"),
        }
        .map_err(io)?;
        writeln!(
            out,
            "reflexivity: H^0 = ker(F0 -> F1), F0 degrees {:?}, F1 degrees {:?}; torsion probe {}",
            check.free_source_degrees, check.free_target_degrees, check.torsion_probe
        )
        .map_err(io)?;
        writeln!(
            out,
            "vanishing: {} H^n = 0 for n in {:?}",
            verdict(check.higher_vanishing.len() == 4),
            check.higher_vanishing
        )
        .map_err(io)?;
        if expect.is_some() {
            writeln!(out, "expected tables: {}", verdict(diffs.is_empty())).map_err(io)?;
        }
    }
    for d in &diffs {
        let _ = writeln!(err, "mismatch: {d}");
    }
    Ok(if passed { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_example(
    name: &str,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let Some(sheaf) = example(name) else {
        let _ = writeln!(
            err,
            "error: unknown example {name:?}; choose one of: {}",
            EXAMPLE_NAMES.join(", ")
        );
        return Ok(EXIT_INPUT);
    };
    let doc = SheafDocument::from_sheaf(
        &sheaf,
        Some(name.to_string()),
        Some(example_description(name).into()),
    );
    let text = doc.to_json();
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string())?,
    }
    Ok(EXIT_PASS)
}

fn example_description(name: &str) -> &'static str {
    match name {
        "point" => "a single fixed point over a rank-one torus",
        "sphere" => "the 2-sphere with a rank-one torus acting by rotation",
        "theta" => "two vertices joined by edges of weights x1 and x2; synthetic, with H^1 nonzero",
        "cp1" => "CP^1 with the standard rank-two torus action",
        "cp2" => "CP^2 with the standard rank-three torus action",
        "cp3" => "CP^3 with the standard rank-four torus action",
        "identity" => "two vertices whose edges all restrict by the identity",
        _ => "",
    }
}
