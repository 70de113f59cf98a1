use std::fmt::Write;

use anyhow::{bail, Result};
use serde::Serialize;
use solidcone::extremal::{
    barnes_min_det, enumerate_vertex_classes, enumerate_vertices, min_det_vertex, FacetSystem, VertexClass,
};
use solidcone::linalg::{format_rational, parse_rational, render_bracket, Rational};

use crate::input::parse_list;
use crate::output::Output;

#[derive(clap::Args, Debug)]
pub struct MinDetArgs {
    /// Sorted positive diagonal, comma separated: `1,3/2,2`.
    pub diagonal: String,
}

#[derive(Serialize)]
pub struct MinDetReport {
    pub diagonal: Vec<String>,
    /// Closed-form minimum.
    pub formula: String,
    /// Minimum of the exact determinant over the domain's vertices.
    pub vertex_minimum: String,
    pub agree: bool,
    pub vertices: usize,
    /// Minimizing forms, bracket encoded.
    pub minimizers: Vec<String>,
}

pub fn mindet(args: MinDetArgs) -> Result<Output> {
    let d = parse_list(&args.diagonal)?;
    let formula = barnes_min_det(&d)?;
    let system = FacetSystem::fixed_diagonal(&d)?;
    let zero = Rational::from_integer(0.into());
    let vertices: usize = enumerate_vertices(&system, &zero).iter().map(|c| c.multiplicity).sum();
    let min = min_det_vertex(&system, &zero).expect("bounded domain has vertices");
    let minimizers: Vec<String> =
        min.classes.iter().map(|c| render_bracket(&system.assemble(&c.coords_at(&zero), &zero))).collect();
    let report = MinDetReport {
        diagonal: d.iter().map(format_rational).collect(),
        formula: format_rational(&formula),
        vertex_minimum: format_rational(&min.value),
        agree: formula == min.value,
        vertices,
        minimizers,
    };
    let mut text = String::new();
    writeln!(text, "diagonal        {}", report.diagonal.join(", "))?;
    writeln!(text, "formula         {}", report.formula)?;
    writeln!(text, "vertex minimum  {} over {} vertices", report.vertex_minimum, report.vertices)?;
    writeln!(text, "agree           {}", if report.agree { "yes" } else { "NO" })?;
    for m in &report.minimizers {
        writeln!(text, "  {m}")?;
    }
    Ok(Output::new(text, &report)?.code(if report.agree { 0 } else { 1 }))
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum SystemName {
    /// Unit diagonal rank 4, variables (a1, a2, a3, b1, b2), parameter c1.
    UnitRank4,
    /// Unit diagonal rank 4 with a1 = 1/2, variables (a2, a3, b1, b2).
    A1Half,
    /// The reduced domain for the diagonal given by --diagonal.
    Diagonal,
}

#[derive(clap::Args, Debug)]
pub struct VerticesArgs {
    #[arg(long, value_enum, default_value = "unit-rank4")]
    pub system: SystemName,
    /// Diagonal for `--system diagonal`.
    #[arg(long)]
    pub diagonal: Option<String>,
    /// Evaluate at this c1 instead of listing classes valid on the whole range.
    #[arg(long)]
    pub c1: Option<String>,
}

#[derive(Serialize)]
pub struct ClassReport {
    pub coords: String,
    pub det: String,
    pub multiplicity: usize,
    pub det_at_c1: Option<String>,
}

#[derive(Serialize)]
pub struct VerticesReport {
    pub system: String,
    pub variables: Vec<String>,
    pub c1: Option<String>,
    pub classes: Vec<ClassReport>,
    pub vertices: usize,
    pub min_det: Option<String>,
    pub minimizers: Vec<String>,
}

fn class_report(system: &FacetSystem, c: &VertexClass, c1: Option<&Rational>) -> ClassReport {
    ClassReport {
        coords: c.coords_string(),
        det: c.det_poly.to_string(),
        multiplicity: c.multiplicity,
        det_at_c1: c1.map(|t| format_rational(&system.assemble(&c.coords_at(t), t).exact_determinant().expect("exact"))),
    }
}

pub fn vertices(args: VerticesArgs) -> Result<Output> {
    let system = match (args.system, &args.diagonal) {
        (SystemName::UnitRank4, None) => FacetSystem::unit_rank4(),
        (SystemName::A1Half, None) => FacetSystem::unit_rank4_a1_half(),
        (SystemName::Diagonal, Some(d)) => FacetSystem::fixed_diagonal(&parse_list(d)?)?,
        (SystemName::Diagonal, None) => bail!("--system diagonal needs --diagonal"),
        (_, Some(_)) => bail!("--diagonal only applies to --system diagonal"),
    };
    let fixed = matches!(args.system, SystemName::Diagonal);
    let c1 = match (&args.c1, fixed) {
        (Some(t), _) => Some(parse_rational(t)?),
        (None, true) => Some(Rational::from_integer(0.into())),
        (None, false) => None,
    };
    let classes = match &c1 {
        Some(t) => enumerate_vertices(&system, t),
        None => enumerate_vertex_classes(&system),
    };
    let min = c1.as_ref().and_then(|t| min_det_vertex(&system, t));
    let report = VerticesReport {
        system: system.name.clone(),
        variables: system.vars.clone(),
        c1: if fixed { None } else { c1.as_ref().map(format_rational) },
        classes: classes.iter().map(|c| class_report(&system, c, c1.as_ref())).collect(),
        vertices: classes.iter().map(|c| c.multiplicity).sum(),
        min_det: min.as_ref().map(|m| format_rational(&m.value)),
        minimizers: min.iter().flat_map(|m| m.classes.iter().map(|c| c.coords_string())).collect(),
    };
    let mut text = String::new();
    writeln!(text, "system    {} ({})", report.system, report.variables.join(", "))?;
    if let Some(t) = &report.c1 {
        writeln!(text, "c1        {t}")?;
    }
    writeln!(text, "vertices  {} in {} classes", report.vertices, report.classes.len())?;
    for c in &report.classes {
        let at = c.det_at_c1.as_ref().map_or(String::new(), |d| format!(" = {d}"));
        writeln!(text, "  {:<28} x{:<2} det {}{}", c.coords, c.multiplicity, c.det, at)?;
    }
    if let Some(m) = &report.min_det {
        writeln!(text, "min det   {m} at {}", report.minimizers.join(" "))?;
    }
    Ok(Output::new(text, &report)?)
}
