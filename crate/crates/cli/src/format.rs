//! Plain, JSON and LaTeX renderings, plus JSON readers for round trips.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Number, Value};
use spiked_core::exactnum::{parse_fraction, rational_to_fraction_string};
use spiked_core::measure::{GramReport, MeasureSpec};
use spiked_core::{BigRational, LaurentSeries, PiScalar};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Latex,
}

fn big(n: &BigInt) -> Value {
    // arbitrary_precision keeps every digit.
    Value::Number(n.to_str_radix(10).parse::<Number>().expect("integer literal is a JSON number"))
}

fn read_big(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => BigInt::parse_bytes(n.as_str().as_bytes(), 10),
        _ => None,
    }
}

pub fn series_json(f: &LaurentSeries) -> Value {
    json!({
        "pos": f.pos().iter().map(big).collect::<Vec<_>>(),
        "neg": f.neg().iter().map(big).collect::<Vec<_>>(),
    })
}

pub fn series_from_json(v: &Value) -> Option<LaurentSeries> {
    let list = |key: &str| -> Option<Vec<BigInt>> { v.get(key)?.as_array()?.iter().map(read_big).collect() };
    Some(LaurentSeries::from_parts(list("pos")?, list("neg")?))
}

/// `L [0,2] [1] -- 2x + 1/x`
pub fn series_plain(f: &LaurentSeries) -> String {
    format!("{} -- {}", f.list_form(), f)
}

pub fn series_latex(f: &LaurentSeries) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (n, c)) in f.display_terms().enumerate() {
        let m = c.abs();
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let coeff = if m.is_one() { String::new() } else { m.to_string() };
        let _ = match n {
            0 => write!(out, "{m}"),
            1 => write!(out, "{coeff}x"),
            n if n > 1 => write!(out, "{coeff}x^{{{n}}}"),
            -1 => write!(out, "\\frac{{{m}}}{{x}}"),
            n => write!(out, "\\frac{{{m}}}{{x^{{{}}}}}", -n),
        };
    }
    out
}

pub fn scalar_json(x: &PiScalar) -> Value {
    json!({
        "rat": rational_to_fraction_string(x.rat_part()),
        "pi": rational_to_fraction_string(x.pi_part()),
    })
}

pub fn scalar_from_json(v: &Value) -> Option<PiScalar> {
    let part = |key: &str| parse_fraction(v.get(key)?.as_str()?);
    Some(PiScalar::new(part("rat")?, part("pi")?))
}

fn rational_latex(q: &BigRational) -> String {
    let sign = if q.is_negative() { "-" } else { "" };
    let n = q.numer().abs();
    if q.denom().is_one() {
        format!("{sign}{n}")
    } else {
        format!("{sign}\\frac{{{n}}}{{{}}}", q.denom())
    }
}

pub fn scalar_latex(x: &PiScalar) -> String {
    let (r, p) = (x.rat_part(), x.pi_part());
    let pi = |q: &BigRational| match q {
        q if q.is_one() => "\\sqrt{\\pi}".to_string(),
        q if (-q).is_one() => "-\\sqrt{\\pi}".to_string(),
        q => format!("{}\\sqrt{{\\pi}}", rational_latex(q)),
    };
    match (r.is_zero(), p.is_zero()) {
        (true, true) => "0".into(),
        (false, true) => rational_latex(r),
        (true, false) => pi(p),
        (false, false) if p.is_negative() => format!("{} - {}", rational_latex(r), pi(&-p)),
        (false, false) => format!("{} + {}", rational_latex(r), pi(p)),
    }
}

fn braces(class: &[u32]) -> String {
    let items: Vec<String> = class.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// `{"dim","l","ks","matrix","partition"}`, partition `"none"` when there is no pattern.
pub fn gram_json(r: &GramReport) -> Value {
    let mut m = Map::new();
    m.insert("dim".into(), json!(r.spec.dim()));
    m.insert("l".into(), json!(r.l));
    m.insert("ks".into(), json!(r.ks));
    let matrix: Vec<Vec<Value>> = r.matrix.iter().map(|row| row.iter().map(scalar_json).collect()).collect();
    m.insert("matrix".into(), json!(matrix));
    m.insert(
        "partition".into(),
        match r.partition() {
            Some(p) => json!(p),
            None => json!("none"),
        },
    );
    Value::Object(m)
}

/// The pieces of a Gram report that survive JSON.
#[derive(Debug, PartialEq)]
pub struct GramRecord {
    pub spec: MeasureSpec,
    pub l: u32,
    pub ks: Vec<u32>,
    pub matrix: Vec<Vec<PiScalar>>,
    pub partition: Option<Vec<Vec<u32>>>,
}

impl From<&GramReport> for GramRecord {
    fn from(r: &GramReport) -> Self {
        GramRecord {
            spec: r.spec,
            l: r.l,
            ks: r.ks.clone(),
            matrix: r.matrix.clone(),
            partition: r.partition().map(<[_]>::to_vec),
        }
    }
}

pub fn gram_from_json(v: &Value) -> Option<GramRecord> {
    let small = |v: &Value| v.as_u64().and_then(|x| u32::try_from(x).ok());
    let ks_of = |v: &Value| -> Option<Vec<u32>> { v.as_array()?.iter().map(small).collect() };
    let matrix = v
        .get("matrix")?
        .as_array()?
        .iter()
        .map(|row| row.as_array()?.iter().map(scalar_from_json).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let partition = match v.get("partition")? {
        Value::String(s) if s == "none" => None,
        p => Some(p.as_array()?.iter().map(ks_of).collect::<Option<Vec<_>>>()?),
    };
    Some(GramRecord {
        spec: MeasureSpec::new(small(v.get("dim")?)?),
        l: small(v.get("l")?)?,
        ks: ks_of(v.get("ks")?)?,
        matrix,
        partition,
    })
}

pub fn gram_plain(r: &GramReport) -> String {
    let mut out = String::new();
    let ks: Vec<String> = r.ks.iter().map(u32::to_string).collect();
    let _ = writeln!(out, "dim {} l {} ks {}", r.spec.dim(), r.l, ks.join(" "));
    for (k, row) in r.ks.iter().zip(&r.matrix) {
        let cells: Vec<String> = row.iter().map(PiScalar::to_string).collect();
        let _ = writeln!(out, "{k}:\t{}", cells.join("\t"));
    }
    let _ = writeln!(out, "partition {}", partition_plain(r.partition()));
    out
}

pub fn gram_latex(r: &GramReport) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    for row in &r.matrix {
        let cells: Vec<String> = row.iter().map(scalar_latex).collect();
        let _ = writeln!(out, "  {} \\\\", cells.join(" & "));
    }
    out.push_str("\\end{pmatrix}\n");
    out
}

pub fn partition_plain(p: Option<&[Vec<u32>]>) -> String {
    match p {
        Some(classes) => classes.iter().map(|c| braces(c)).collect::<Vec<_>>().join(","),
        None => "none".into(),
    }
}

/// Bases in table order: even `k` first, then odd, each by smallest member.
pub fn table_order(classes: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut v = classes.to_vec();
    v.sort_by_key(|c| (c[0] % 2, c[0]));
    v
}

pub fn bases_latex(l: u32, classes: &[Vec<u32>]) -> String {
    let mut out = String::from("\\begin{tabular}{|l|l|l|}\n\\hline\n");
    for class in classes {
        let ks: Vec<String> = class.iter().map(u32::to_string).collect();
        let es: Vec<String> = class.iter().map(|&k| spiked_core::operators::energy(l, k).to_string()).collect();
        let _ = writeln!(out, "$l = {l}$ & $k = {} ...$ & $E_{{{l},k}} = {} ...$ \\\\", ks.join(","), es.join(","));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}
