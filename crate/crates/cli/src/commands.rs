use std::fmt::Write as _;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use sidonkit::families::{self, FamilySpec};
use sidonkit::{
    codes, FieldContext, HyperplaneSlice, MinDistance, PointSet, VectorialBooleanFunction,
};

/// Rendered output of one subcommand plus its exit status.
pub struct Report {
    pub text: String,
    pub json: String,
    pub status: u8,
}

impl Report {
    pub fn new<T: Serialize>(value: &T, text: String, status: u8) -> Result<Self> {
        Ok(Self {
            text,
            json: serde_json::to_string(value)?,
            status,
        })
    }
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

fn read_point_set(path: &str) -> Result<PointSet> {
    PointSet::parse(&read(path)?).with_context(|| format!("parsing point set {path}"))
}

fn read_truth_table(path: &str) -> Result<VectorialBooleanFunction> {
    VectorialBooleanFunction::parse(&read(path)?)
        .with_context(|| format!("parsing truth table {path}"))
}

fn write(path: &str, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {path}"))
}

#[derive(Serialize)]
struct VerifyReport {
    t: u32,
    size: usize,
    sidon: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    maximal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sum_free: Option<bool>,
}

pub fn verify(path: &str, maximal: bool, sum_free: bool) -> Result<Report> {
    let set = read_point_set(path)?;
    let sidon = set.is_sidon();
    let report = VerifyReport {
        t: set.dim(),
        size: set.len(),
        sidon,
        // a set that is not Sidon is not a maximal Sidon set
        maximal: maximal.then(|| sidon && set.is_maximal_sidon().unwrap_or(false)),
        sum_free: sum_free.then(|| set.is_sum_free()),
    };
    let mut text = format!("t={} size={} sidon={}", report.t, report.size, report.sidon);
    if let Some(m) = report.maximal {
        let _ = write!(text, " maximal={m}");
    }
    if let Some(s) = report.sum_free {
        let _ = write!(text, " sum_free={s}");
    }
    text.push('\n');
    Report::new(&report, text, if sidon { 0 } else { 1 })
}

#[derive(Serialize)]
struct FunctionSummary {
    n: u32,
    modulus: Option<String>,
    apn: bool,
    differential_uniformity: u32,
    linearity: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadratic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    linearity_bound_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula_linearity: Option<u64>,
}

#[derive(Serialize)]
struct SetSummary {
    dim: u32,
    size: usize,
    sidon: bool,
}

impl SetSummary {
    fn of(set: &PointSet) -> Self {
        Self {
            dim: set.dim(),
            size: set.len(),
            sidon: set.is_sidon(),
        }
    }

    fn line(&self, label: &str) -> String {
        format!(
            "{label} dim={} size={} sidon={}\n",
            self.dim, self.size, self.sidon
        )
    }
}

#[derive(Serialize)]
struct SliceSummary {
    normal: u32,
    side: u32,
    walsh_value: i32,
    dim: u32,
    size: usize,
    sidon: bool,
}

impl SliceSummary {
    fn of(slice: &HyperplaneSlice) -> Self {
        Self {
            normal: slice.normal,
            side: slice.side,
            walsh_value: slice.walsh_value,
            dim: slice.sliced.dim(),
            size: slice.sliced.len(),
            sidon: slice.sliced.is_sidon(),
        }
    }

    fn line(&self) -> String {
        format!(
            "slice normal={} side={} walsh={} dim={} size={} sidon={}\n",
            self.normal, self.side, self.walsh_value, self.dim, self.size, self.sidon
        )
    }
}

#[derive(Serialize)]
struct ConstructReport {
    family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    function: Option<FunctionSummary>,
    set: SetSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    sum_free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    slice: Option<SliceSummary>,
}

fn field(n: Option<u32>, family: &FamilySpec) -> Result<FieldContext> {
    let n = n.ok_or_else(|| anyhow!("family {family} needs a degree n"))?;
    Ok(FieldContext::with_default_modulus(n)?)
}

fn summarize(
    f: &VectorialBooleanFunction,
    ctx: Option<&FieldContext>,
    formula: Option<u64>,
) -> Result<FunctionSummary> {
    let n = f.input_dim();
    let du = f.differential_uniformity()?;
    let apn = f.input_dim() == f.output_dim() && du == 2;
    let linearity = f.linearity()?;
    Ok(FunctionSummary {
        n,
        modulus: ctx.map(|c| format!("{:#x}", c.modulus())),
        apn,
        differential_uniformity: du,
        linearity,
        quadratic: (f.input_dim() == f.output_dim() && n <= 16)
            .then(|| f.is_quadratic())
            .transpose()?,
        linearity_bound_holds: apn.then(|| linearity as u64 + 4 <= 1u64 << n),
        formula_linearity: formula,
    })
}

pub fn construct(family: &str, n: Option<u32>, slice: bool, out: Option<&str>) -> Result<Report> {
    let spec: FamilySpec = family.parse()?;
    let (function, ctx, formula) = match &spec {
        FamilySpec::MultSubgroup => (None, None, None),
        FamilySpec::FromFile(path) => {
            let f = read_truth_table(&path.to_string_lossy())?;
            if let Some(n) = n {
                if n != f.input_dim() {
                    bail!(
                        "truth table has n = {}, but n = {n} was given",
                        f.input_dim()
                    );
                }
            }
            (Some(f), None, None)
        }
        FamilySpec::Gold(k) => {
            let ctx = field(n, &spec)?;
            (Some(families::gold_function(&ctx, *k)?), Some(ctx), None)
        }
        FamilySpec::Inverse => {
            let ctx = field(n, &spec)?;
            let d = ctx.degree();
            let formula = (d >= 5 && d % 2 == 1)
                .then(|| families::inverse_linearity_formula(d))
                .transpose()?;
            (Some(families::inverse_function(&ctx)), Some(ctx), formula)
        }
        FamilySpec::Dobbertin => {
            let ctx = field(n, &spec)?;
            let formula = families::dobbertin_conjectured_linearity(ctx.degree())?;
            (
                Some(families::dobbertin_function(&ctx)?),
                Some(ctx),
                Some(formula),
            )
        }
    };

    let mut text = format!("family={spec}");
    let (set, summary) = match &function {
        Some(f) => {
            let summary = summarize(f, ctx.as_ref(), formula)?;
            let _ = write!(text, " n={}", summary.n);
            if let Some(m) = &summary.modulus {
                let _ = write!(text, " modulus={m}");
            }
            text.push('\n');
            let _ = write!(
                text,
                "linearity={} apn={} differential_uniformity={}",
                summary.linearity, summary.apn, summary.differential_uniformity
            );
            if let Some(q) = summary.quadratic {
                let _ = write!(text, " quadratic={q}");
            }
            if let Some(b) = summary.linearity_bound_holds {
                let _ = write!(text, " linearity_bound_holds={b}");
            }
            if let Some(v) = summary.formula_linearity {
                let _ = write!(text, " formula_linearity={v}");
            }
            text.push('\n');
            (families::graph(f)?, Some(summary))
        }
        None => {
            let n = n.ok_or_else(|| anyhow!("mult-subgroup needs n"))?;
            let _ = writeln!(text, " n={n}");
            (families::mult_subgroup_sidon(n)?, None)
        }
    };
    let set_summary = SetSummary::of(&set);
    let label = if function.is_some() { "graph" } else { "set" };
    text.push_str(&set_summary.line(label));
    let sum_free = function.is_none().then(|| set.is_sum_free());
    if let Some(s) = sum_free {
        let _ = writeln!(text, "sum_free={s}");
    }

    let mut status = 0;
    let mut output = set.clone();
    let mut slice_summary = None;
    if slice {
        if summary.as_ref().is_some_and(|s| !s.apn) {
            text.push_str("slice skipped: function is not APN\n");
            status = 1;
        } else {
            let cut = set.best_hyperplane_slice()?;
            let s = SliceSummary::of(&cut);
            text.push_str(&s.line());
            slice_summary = Some(s);
            output = cut.sliced;
        }
    }
    if let Some(path) = out {
        write(path, &output.to_text())?;
    }

    let report = ConstructReport {
        family: spec.to_string(),
        function: summary,
        set: set_summary,
        sum_free,
        slice: slice_summary,
    };
    Report::new(&report, text, status)
}

#[derive(Serialize)]
struct SliceReport {
    input: SetSummary,
    linearity: u32,
    slice: SliceSummary,
}

pub fn slice(path: &str, out: Option<&str>) -> Result<Report> {
    let set = read_point_set(path)?;
    let cut = set.best_hyperplane_slice()?;
    let report = SliceReport {
        input: SetSummary::of(&set),
        linearity: cut.walsh_value.unsigned_abs(),
        slice: SliceSummary::of(&cut),
    };
    let mut text = report.input.line("input");
    let _ = writeln!(text, "linearity={}", report.linearity);
    text.push_str(&report.slice.line());
    if let Some(out) = out {
        write(out, &cut.sliced.to_text())?;
    }
    Report::new(&report, text, 0)
}

#[derive(Serialize)]
struct WalshReport {
    n: u32,
    m: u32,
    linearity: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    apn: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadratic: Option<bool>,
    differential_uniformity: u32,
    /// `(value, count)` over all `a` and all `b != 0`, ascending by value.
    histogram: Vec<(i32, u64)>,
}

pub fn walsh(path: &str) -> Result<Report> {
    let f = read_truth_table(path)?;
    let square = f.input_dim() == f.output_dim();
    let du = f.differential_uniformity()?;
    let report = WalshReport {
        n: f.input_dim(),
        m: f.output_dim(),
        linearity: f.linearity()?,
        apn: square.then_some(du == 2),
        quadratic: (square && f.input_dim() <= 16)
            .then(|| f.is_quadratic())
            .transpose()?,
        differential_uniformity: du,
        histogram: f.walsh_histogram()?.into_iter().collect(),
    };
    let mut text = format!(
        "n={} m={}\nlinearity={}",
        report.n, report.m, report.linearity
    );
    if let Some(a) = report.apn {
        let _ = write!(text, " apn={a}");
    }
    if let Some(q) = report.quadratic {
        let _ = write!(text, " quadratic={q}");
    }
    let _ = writeln!(
        text,
        " differential_uniformity={}",
        report.differential_uniformity
    );
    text.push_str("histogram");
    for (v, c) in &report.histogram {
        let _ = write!(text, " {v}:{c}");
    }
    text.push('\n');
    Report::new(&report, text, 0)
}

#[derive(Serialize)]
struct CodeReport {
    t: u32,
    length: usize,
    dimension: usize,
    distance_ge5: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_distance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

/// Weight limit for `code --exact-distance`.
const DISTANCE_CAP: u32 = 5;

pub fn code(path: &str, out: Option<&str>, exact: bool) -> Result<Report> {
    let set = read_point_set(path)?;
    let mut code = codes::sidon_to_code(&set)?;
    let ge5 = code.verify_distance_ge5();
    let mut min_distance = None;
    let mut witness = None;
    if exact {
        let support = code.min_weight_codeword(DISTANCE_CAP)?;
        let d = code.certify_min_distance(DISTANCE_CAP)?;
        min_distance = Some(d);
        witness = support;
    }
    let report = CodeReport {
        t: code.check_bits(),
        length: code.length(),
        dimension: code.dimension(),
        distance_ge5: ge5,
        min_distance: min_distance.map(|d: MinDistance| d.to_string()),
        witness,
    };
    let mut text = format!(
        "t={} length={} dimension={} distance_ge5={}",
        report.t, report.length, report.dimension, report.distance_ge5
    );
    if let Some(d) = &report.min_distance {
        let _ = write!(text, " min_distance={d}");
    }
    text.push('\n');
    if let Some(w) = &report.witness {
        let cols: Vec<String> = w.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(text, "witness_columns={}", cols.join(","));
    }
    if let Some(out) = out {
        write(out, &code.to_text())?;
    }
    Report::new(&report, text, if ge5 { 0 } else { 1 })
}
