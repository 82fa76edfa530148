//! Serialization of classification records as JSON, CSV, Markdown and DOT.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classifier::{Contraction, GaloisCase};
use crate::groups::IsoType;
use crate::lattice::CurveId;
use crate::petersen::build_graph;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unknown report format {0:?} (expected json, csv, md or dot)")]
    UnknownFormat(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
    Dot,
}

impl FromStr for Format {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            "dot" => Ok(Format::Dot),
            _ => Err(ReportError::UnknownFormat(s.to_string())),
        }
    }
}

/// The flat, stable view of a [`GaloisCase`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportRow {
    pub class_id: usize,
    pub class_name: String,
    pub subgroup: String,
    pub order: usize,
    pub orbits: Vec<Vec<CurveId>>,
    pub k_curves: Vec<CurveId>,
    pub rk_ns: usize,
    pub aut_type: IsoType,
    pub aut_order: usize,
    pub rk_ns_aut: usize,
    pub mfs: bool,
    pub aut_mfs: bool,
    pub contractions: Vec<Contraction>,
    pub model: String,
}

impl From<&GaloisCase> for ReportRow {
    fn from(c: &GaloisCase) -> Self {
        ReportRow {
            class_id: c.subgroup.class_id,
            class_name: c.subgroup.class_name.to_string(),
            subgroup: c.subgroup.generator_string(),
            order: c.subgroup.order(),
            orbits: c.orbit_partition.clone(),
            k_curves: c.k_curves.clone(),
            rk_ns: c.rk_ns,
            aut_type: c.aut_type,
            aut_order: c.equivariant_aut.order(),
            rk_ns_aut: c.rk_ns_aut,
            mfs: c.is_mfs,
            aut_mfs: c.is_aut_mfs,
            contractions: c.stable_contractions.clone(),
            model: c.model_tag.to_string(),
        }
    }
}

fn curves(cs: &[CurveId]) -> String {
    cs.iter().map(|c| c.name()).collect::<Vec<_>>().join(",")
}

fn orbit_string(orbits: &[Vec<CurveId>]) -> String {
    orbits
        .iter()
        .map(|o| format!("{{{}}}", curves(o)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn contraction_string(cs: &[Contraction]) -> String {
    cs.iter()
        .map(|c| format!("{{{}}}->{}", curves(&c.curves), c.target_degree))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct CsvRow<'a> {
    class_id: usize,
    class_name: &'a str,
    subgroup: &'a str,
    order: usize,
    orbits: String,
    k_curves: String,
    rk_ns: usize,
    aut_type: &'a str,
    aut_order: usize,
    rk_ns_aut: usize,
    mfs: bool,
    aut_mfs: bool,
    contractions: String,
    model: &'a str,
}

pub fn emit_report(cases: &[GaloisCase], format: Format) -> Result<String, ReportError> {
    let rows: Vec<ReportRow> = cases.iter().map(ReportRow::from).collect();
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&rows)? + "\n"),
        Format::Csv => emit_csv(&rows),
        Format::Md => Ok(emit_markdown(&rows)),
        Format::Dot => Ok(cases.iter().map(emit_dot).collect()),
    }
}

pub fn parse_json_report(text: &str) -> Result<Vec<ReportRow>, ReportError> {
    Ok(serde_json::from_str(text)?)
}

fn emit_csv(rows: &[ReportRow]) -> Result<String, ReportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(CsvRow {
            class_id: r.class_id,
            class_name: &r.class_name,
            subgroup: &r.subgroup,
            order: r.order,
            orbits: orbit_string(&r.orbits),
            k_curves: curves(&r.k_curves),
            rk_ns: r.rk_ns,
            aut_type: r.aut_type.label(),
            aut_order: r.aut_order,
            rk_ns_aut: r.rk_ns_aut,
            mfs: r.mfs,
            aut_mfs: r.aut_mfs,
            contractions: contraction_string(&r.contractions),
            model: &r.model,
        })?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn emit_markdown(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    out.push_str(
        "| # | H | \\|H\\| | orbits | rk NS | Aut | rk NS^Aut | MFS | Aut-MFS | model |\n",
    );
    out.push_str("|---|---|---|---|---|---|---|---|---|---|\n");
    let yn = |b: bool| if b { "yes" } else { "no" };
    for r in rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.class_id,
            r.subgroup,
            r.order,
            orbit_string(&r.orbits),
            r.rk_ns,
            r.aut_type,
            r.rk_ns_aut,
            yn(r.mfs),
            yn(r.aut_mfs),
            r.model
        );
    }
    out
}

const PALETTE: [&str; 10] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf",
    "#999999", "#66c2a5",
];

/// The diagram with each vertex filled by the color of its orbit index.
pub fn emit_dot(case: &GaloisCase) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph petersen_{} {{", case.subgroup.class_id);
    let _ = writeln!(out, "  label=\"H = {}\";", case.subgroup.generator_string());
    for c in CurveId::ALL {
        let idx = case
            .orbit_partition
            .iter()
            .position(|o| o.contains(&c))
            .expect("orbits cover every curve");
        let _ = writeln!(
            out,
            "  {c} [label=\"{c}\", style=filled, fillcolor=\"{}\", comment=\"orbit {idx}\"];",
            PALETTE[idx % PALETTE.len()]
        );
    }
    for (a, b) in build_graph().edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{classify_all, classify_case};
    use crate::groups::{generate, parse_generators};

    #[test]
    fn json_keys_and_round_trip() {
        let cases = classify_all();
        let text = emit_report(&cases, Format::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let first = value[0].as_object().unwrap();
        for key in [
            "subgroup",
            "orbits",
            "rk_ns",
            "aut_type",
            "rk_ns_aut",
            "mfs",
            "aut_mfs",
            "contractions",
            "model",
        ] {
            assert!(first.contains_key(key), "{key}");
        }
        let rows = parse_json_report(&text).unwrap();
        assert_eq!(rows, cases.iter().map(ReportRow::from).collect::<Vec<_>>());
    }

    #[test]
    fn markdown_has_a_row_per_case() {
        let md = emit_report(&classify_all(), Format::Md).unwrap();
        assert_eq!(md.lines().count(), 2 + 19);
    }

    #[test]
    fn csv_has_header_and_rows() {
        let text = emit_report(&classify_all(), Format::Csv).unwrap();
        let mut r = csv::Reader::from_reader(text.as_bytes());
        assert_eq!(r.headers().unwrap().len(), 14);
        assert_eq!(r.records().count(), 19);
    }

    #[test]
    fn dot_colors_by_orbit() {
        let case = classify_case(&generate(&parse_generators("(1 2 3 4 5)").unwrap()));
        let dot = emit_dot(&case);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 15);
        assert_eq!(dot.matches(PALETTE[0]).count(), 5);
        assert_eq!(dot.matches(PALETTE[1]).count(), 5);
    }

    #[test]
    fn format_names() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!(matches!(
            "yaml".parse::<Format>(),
            Err(ReportError::UnknownFormat(_))
        ));
    }
}
