use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use specht_core::report::{analyze, AnalyzeOptions, FrameRecord};
use specht_core::rootsys::RootSystem;
use specht_core::subsys::enumerate_subsystems;
use specht_core::tabloid::Frame;
use specht_core::weyl::{ClassJson, ReflectionGroup};
use specht_core::Result;

use crate::config::{build_group, Plan, Verb};

/// A command result in both output forms.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("result records serialize")
}

/// Runs a validated plan, building the group only when the verb needs it.
pub fn run(plan: &Plan, cap: usize) -> Result<Output> {
    match plan.verb {
        Verb::Roots => Ok(roots(&RootSystem::new(plan.cartan)?)),
        verb => {
            let group = build_group(plan.cartan, cap)?;
            run_with_group(plan, verb, &group)
        }
    }
}

pub fn run_with_group(plan: &Plan, verb: Verb, group: &ReflectionGroup) -> Result<Output> {
    match verb {
        Verb::Roots => Ok(roots(group.root_system())),
        Verb::Subsystems => subsystems(group),
        Verb::Classes => Ok(classes(group)),
        Verb::Specht => specht(plan, group),
    }
}

pub fn roots(rs: &RootSystem) -> Output {
    let json = rs.to_json();
    let mut text = format!(
        "{}: {} roots, {} positive, ambient dimension {}\nsimple: {}\n",
        json.r#type,
        json.num_roots,
        json.num_positive,
        json.ambient_dim,
        json.simple.join(", ")
    );
    let width = json.roots.iter().map(|r| r.notation.len()).max().unwrap_or(0);
    for (i, r) in json.roots.iter().enumerate() {
        let sign = if r.positive { '+' } else { '-' };
        let _ = writeln!(text, "{:>3}  {sign}  {:<width$}  ({})", i + 1, r.notation, r.ambient.join(","));
    }
    Output {
        text,
        json: to_value(&json),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemRow {
    pub index: usize,
    #[serde(rename = "type")]
    pub label: String,
    pub simple_roots: Vec<String>,
    pub num_roots: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemListing {
    #[serde(rename = "type")]
    pub system: String,
    pub classes: Vec<SubsystemRow>,
}

pub fn subsystems(group: &ReflectionGroup) -> Result<Output> {
    let rs = group.root_system();
    let rows: Vec<SubsystemRow> = enumerate_subsystems(group)?
        .iter()
        .enumerate()
        .map(|(i, s)| SubsystemRow {
            index: i + 1,
            label: s.type_label(),
            simple_roots: s.to_json(rs).simple_roots,
            num_roots: s.len(),
        })
        .collect();
    let mut text = format!("{}: {} conjugacy classes of subsystems\n", rs.cartan_type(), rows.len());
    for r in &rows {
        let _ = writeln!(text, "({}) {} with simple system {{{}}}", r.index, r.label, r.simple_roots.join(","));
    }
    let listing = SubsystemListing {
        system: rs.cartan_type().to_string(),
        classes: rows,
    };
    Ok(Output {
        text,
        json: to_value(&listing),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassListing {
    #[serde(rename = "type")]
    pub system: String,
    pub order: usize,
    pub classes: Vec<ClassJson>,
}

pub fn classes(group: &ReflectionGroup) -> Output {
    let listing = ClassListing {
        system: group.root_system().cartan_type().to_string(),
        order: group.order(),
        classes: group.classes_json(),
    };
    let mut text = format!("{}: |W| = {}, {} classes\n", listing.system, listing.order, listing.classes.len());
    for c in &listing.classes {
        let _ = writeln!(text, "C{:<3} size {:<5} length {:<3} {}", c.index, c.size, c.length, c.representative);
    }
    Output {
        json: to_value(&listing),
        text,
    }
}

pub fn specht(plan: &Plan, group: &ReflectionGroup) -> Result<Output> {
    let frame = Frame::parse(group.root_system(), &plan.rows, &plan.cols)?;
    let opts = AnalyzeOptions {
        field: plan.field,
        list_tabloids: plan.list_tabloids,
        list_polytabloid: plan.list_polytabloid,
    };
    let record = analyze(group, frame, opts)?;
    Ok(Output {
        text: format_record(&record),
        json: to_value(&record),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

pub fn format_record(r: &FrameRecord) -> String {
    let mut s = format!("{} frame {{{};{}}} over {}\n", r.system, r.rows, r.columns, r.field);
    let _ = writeln!(s, "useful: {}", yes_no(r.useful));
    let _ = writeln!(s, "good: {}", yes_no(r.good));
    let _ = writeln!(s, "dim M = {}, dim S = {}, dim D = {}", r.dim_m, opt(r.dim_s), opt(r.dim_d));
    if let Some(ch) = &r.character {
        let vals: Vec<String> = ch.iter().map(i64::to_string).collect();
        let _ = writeln!(s, "character: ({})", vals.join(","));
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "witness: {w}");
    }
    if let Some(z) = r.polytabloid_zero {
        let _ = writeln!(s, "polytabloid zero: {}", yes_no(z));
    }
    if let Some(ts) = &r.tabloids {
        let _ = writeln!(s, "tabloids ({}):", ts.len());
        for t in ts {
            let _ = writeln!(s, "  {t}");
        }
    }
    if let Some(p) = &r.polytabloid {
        let _ = writeln!(s, "e = {p}");
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}
