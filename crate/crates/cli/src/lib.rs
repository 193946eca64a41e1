//! Input assembly and output rendering for the `symadapt` command.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{Context, Result};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use symadapt_core::verify::Report;
use symadapt_core::{class_spectrum, CGTable, Configuration, OrbitBasis, StateAlphabet, StateOperator};

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Everything a command needs: the orbit basis in its final ordering and
/// the requested state operators.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub config_text: String,
    pub basis: OrbitBasis,
    pub state_ops: Vec<StateOperator>,
}

impl RunSpec {
    pub fn build(
        config: &str,
        alphabet: Option<&str>,
        order: Option<&PathBuf>,
        state_ops: Option<&str>,
    ) -> Result<Self> {
        let alphabet = match alphabet {
            Some(text) => StateAlphabet::from_text(text)?,
            None => StateAlphabet::inferred_from(config)?,
        };
        let configuration = Configuration::parse(config, &alphabet)?;
        let mut basis = OrbitBasis::orbit(&alphabet, &configuration)?;
        if let Some(path) = order {
            let text =
                std::fs::read_to_string(path).with_context(|| format!("reading ordering file {}", path.display()))?;
            basis = basis.with_ordering_text(&text)?;
        }
        let state_ops = match state_ops {
            Some(text) => StateOperator::parse_list(text, &alphabet)?,
            None => Vec::new(),
        };
        Ok(Self {
            config_text: alphabet.render(&configuration),
            basis,
            state_ops,
        })
    }
}

fn number(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

/// `c/√N`, or `0`.
pub fn render_coefficient(c: &BigInt, norm_sq: &BigInt) -> String {
    if c.sign() == num_bigint::Sign::NoSign {
        "0".to_owned()
    } else {
        format!("{c}/√{norm_sq}")
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// Canonical JSON value of a table (object keys sorted, integers exact).
pub fn table_json(table: &CGTable, config_text: &str) -> Value {
    let alphabet = table.basis.alphabet();
    let vectors: Vec<Value> = table
        .vectors
        .iter()
        .map(|v| {
            json!({
                "nu": v.chain.nu,
                "state_eigenvalues": v.chain.state_labels,
                "tableau": v.tableau.rows(),
                "coeffs": v.coeffs.iter().map(number).collect::<Vec<_>>(),
                "norm_sq": number(&v.norm_sq),
                "labeled": v.is_labeled(),
            })
        })
        .collect();
    json!({
        "group": format!("S_{}", table.basis.degree()),
        "configuration": config_text,
        "ordering": table.basis.words(),
        "state_operators": table
            .state_operators
            .iter()
            .map(|op| op.render(alphabet))
            .collect::<Vec<_>>(),
        "vectors": vectors,
        "complete": table.complete,
    })
}

/// Pretty-printed canonical JSON followed by a newline.
pub fn to_json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn render_table(table: &CGTable, config_text: &str, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(to_json_text(&table_json(table, config_text))),
        Format::Csv => table_csv(table),
        Format::Text => Ok(table_text(table, config_text)),
    }
}

fn table_text(table: &CGTable, config_text: &str) -> String {
    let alphabet = table.basis.alphabet();
    let words = table.basis.words();
    let width = words.iter().map(|w| w.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "group: S_{}", table.basis.degree());
    let _ = writeln!(out, "configuration: {config_text}");
    let _ = writeln!(out, "ordering: {}", words.join(" "));
    let ops: Vec<String> = table.state_operators.iter().map(|o| o.render(alphabet)).collect();
    let _ = writeln!(
        out,
        "state operators: {}",
        if ops.is_empty() {
            "none".to_owned()
        } else {
            ops.join("; ")
        }
    );
    let _ = writeln!(out, "complete: {}", if table.complete { "yes" } else { "no" });
    for (i, v) in table.vectors.iter().enumerate() {
        let _ = write!(out, "\nvector {}  {}", i + 1, v.chain);
        if let Some(r) = v.residue_index {
            let _ = write!(out, "  unlabeled #{}", r + 1);
        }
        out.push('\n');
        let _ = writeln!(out, "{}", v.tableau);
        for (w, c) in words.iter().zip(&v.coeffs) {
            let _ = writeln!(out, "  {w:<width$}  {}", render_coefficient(c, &v.norm_sq));
        }
    }
    out
}

fn table_csv(table: &CGTable) -> Result<String> {
    let words = table.basis.words();
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["vector_id", "nu_chain", "tableau", "ket", "coeff_numerator", "norm_sq"])?;
    for (i, v) in table.vectors.iter().enumerate() {
        let nu = join(&v.chain.nu, " ");
        let tableau = v
            .tableau
            .rows()
            .iter()
            .map(|r| join(r, " "))
            .collect::<Vec<_>>()
            .join("/");
        for (w, c) in words.iter().zip(&v.coeffs) {
            writer.write_record([
                (i + 1).to_string(),
                nu.clone(),
                tableau.clone(),
                w.clone(),
                c.to_string(),
                v.norm_sq.to_string(),
            ])?;
        }
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

/// Realized eigenvalues of `C(k)` with multiplicities, largest `|ν|` first
/// and positive before negative.
pub fn spectrum(basis: &OrbitBasis, k: usize) -> Result<Vec<(i64, usize)>> {
    let mut out: Vec<(i64, usize)> = class_spectrum(basis, k)?.into_iter().collect();
    let total: usize = out.iter().map(|&(_, m)| m).sum();
    anyhow::ensure!(
        total == basis.len(),
        "eigenspaces of C({k}) cover {total} of {} dimensions",
        basis.len()
    );
    out.sort_by_key(|&(nu, _)| (std::cmp::Reverse(nu.abs()), std::cmp::Reverse(nu)));
    Ok(out)
}

pub fn render_spectrum(spectrum: &[(i64, usize)], k: usize, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => {
            let parts: Vec<String> = spectrum.iter().map(|(nu, m)| format!("{nu}:{m}")).collect();
            format!("{}\n", parts.join(", "))
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(["k", "eigenvalue", "multiplicity"])?;
            for (nu, m) in spectrum {
                writer.write_record([k.to_string(), nu.to_string(), m.to_string()])?;
            }
            String::from_utf8(writer.into_inner()?)?
        }
        Format::Json => to_json_text(&json!({
            "k": k,
            "eigenvalues": spectrum
                .iter()
                .map(|(nu, m)| json!({"value": nu, "multiplicity": m}))
                .collect::<Vec<_>>(),
        })),
    })
}

pub fn render_report(report: &Report, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => {
            let verdict = if report.passed() {
                "all checks passed"
            } else {
                "verification failed"
            };
            format!("{report}{verdict}\n")
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(["check", "status", "detail"])?;
            for c in &report.checks {
                writer.write_record([c.name.as_str(), &c.status.to_string(), c.detail.as_str()])?;
            }
            String::from_utf8(writer.into_inner()?)?
        }
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    let mut m = Map::new();
                    m.insert("name".into(), c.name.clone().into());
                    m.insert("status".into(), c.status.to_string().into());
                    m.insert("detail".into(), c.detail.clone().into());
                    Value::Object(m)
                })
                .collect();
            to_json_text(&json!({"checks": checks, "passed": report.passed()}))
        }
    })
}

/// Per-shape vector counts, for the verbose summary.
pub fn shape_summary(table: &CGTable) -> BTreeMap<Vec<usize>, usize> {
    let mut out = BTreeMap::new();
    for v in &table.vectors {
        *out.entry(v.tableau.shape()).or_insert(0) += 1;
    }
    out
}
