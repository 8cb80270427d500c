//! Per-dimension size table: formula bound, classical size, and what each
//! construction reaches at that dimension.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use serde::Serialize;
use sidonkit::families::{self, FamilySpec};
use sidonkit::{FieldContext, PointSet, VectorialBooleanFunction};

use crate::commands::Report;

/// Largest field degree whose graph is built and sliced instead of using the closed form.
const COMPUTE_N_MAX: u32 = 10;

#[derive(Serialize)]
struct Entry {
    name: String,
    size: u64,
    /// `computed` (built and Sidon-verified here) or `formula`.
    source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    sidon: Option<bool>,
}

impl Entry {
    fn computed(name: impl Into<String>, set: &PointSet) -> Self {
        Self {
            name: name.into(),
            size: set.len() as u64,
            source: "computed",
            sidon: Some(set.is_sidon()),
        }
    }

    fn formula(name: impl Into<String>, size: u64) -> Self {
        Self {
            name: name.into(),
            size,
            source: "formula",
            sidon: None,
        }
    }
}

#[derive(Serialize)]
struct Row {
    t: u32,
    bound: u64,
    classical: u64,
    constructions: Vec<Entry>,
}

#[derive(Serialize)]
struct TableReport {
    rows: Vec<Row>,
}

fn slice_size(n: u32, linearity: u64) -> u64 {
    (1u64 << (n - 1)) + linearity / 2
}

fn sliced(f: &VectorialBooleanFunction) -> Result<PointSet> {
    Ok(families::apn_slice_sidon(f)?.sliced)
}

fn gold_linearity(n: u32) -> u64 {
    if n % 2 == 1 {
        1 << n.div_ceil(2)
    } else {
        1 << (n / 2 + 1)
    }
}

fn constructions(t: u32) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    if t.is_multiple_of(2) {
        let name = FamilySpec::MultSubgroup.to_string();
        out.push(Entry::computed(
            name,
            &families::mult_subgroup_sidon(t / 2)?,
        ));
        return Ok(out);
    }

    let n = t.div_ceil(2);
    let gold = FamilySpec::Gold(1).to_string();
    let ctx = (n <= COMPUTE_N_MAX)
        .then(|| FieldContext::with_default_modulus(n))
        .transpose()?;
    match &ctx {
        Some(ctx) => out.push(Entry::computed(
            gold,
            &sliced(&families::gold_function(ctx, 1)?)?,
        )),
        None => out.push(Entry::formula(gold, slice_size(n, gold_linearity(n)))),
    }

    if n >= 5 && n % 2 == 1 {
        let name = FamilySpec::Inverse.to_string();
        match &ctx {
            Some(ctx) => out.push(Entry::computed(
                name,
                &sliced(&families::inverse_function(ctx))?,
            )),
            None => out.push(Entry::formula(
                name,
                slice_size(n, families::inverse_linearity_formula(n)?),
            )),
        }
    }

    if n.is_multiple_of(5) {
        let name = FamilySpec::Dobbertin.to_string();
        match &ctx {
            Some(ctx) => out.push(Entry::computed(
                name,
                &sliced(&families::dobbertin_function(ctx)?)?,
            )),
            None => out.push(Entry::formula(
                name,
                slice_size(n, families::dobbertin_conjectured_linearity(n)?),
            )),
        }
    }
    Ok(out)
}

pub fn run(t_max: u32) -> Result<Report> {
    if !(3..=sidonkit::MAX_DIM).contains(&t_max) {
        bail!("t-max must lie in 3..={}, got {t_max}", sidonkit::MAX_DIM);
    }
    let mut rows = Vec::new();
    for t in 3..=t_max {
        rows.push(Row {
            t,
            bound: families::sidon_upper_bound(t)?,
            classical: families::classical_size(t)?,
            constructions: constructions(t)?,
        });
    }

    let mut text = format!(
        "{:>3} {:>7} {:>9}  constructions\n",
        "t", "bound", "classical"
    );
    for row in &rows {
        let _ = write!(text, "{:>3} {:>7} {:>9} ", row.t, row.bound, row.classical);
        for e in &row.constructions {
            let _ = write!(text, " {}={}", e.name, e.size);
            match e.sidon {
                Some(false) => text.push_str("(NOT SIDON)"),
                Some(true) => {}
                None => text.push_str("(formula)"),
            }
        }
        text.push('\n');
    }
    let status = if rows
        .iter()
        .flat_map(|r| &r.constructions)
        .any(|e| e.sidon == Some(false))
    {
        1
    } else {
        0
    };
    Report::new(&TableReport { rows }, text, status)
}
