use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::error::CliError;

/// Something the CLI prints in any of the three formats.
pub trait Report: Serialize {
    fn text(&self) -> String;
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

pub fn render<R: Report>(report: &R, format: Format) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(report.text()),
        Format::Json => to_json(report),
        Format::Csv => to_csv(report.csv_header(), report.csv_rows()),
    }
}

/// Pretty JSON with a trailing newline. Key order follows field order.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn to_csv(header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandReport {
    pub xi: Vec<usize>,
    pub m: usize,
    pub mu: usize,
    pub mu1: usize,
    pub mu0: usize,
    pub t: usize,
    pub k: i64,
    pub alphas: Vec<usize>,
    pub order: usize,
    pub routes: Vec<String>,
    pub coefficients: Vec<String>,
}

impl Report for ExpandReport {
    fn text(&self) -> String {
        format!(
            "xi: ({})\nm: {}\nmu: {}\nmu1: {}\nmu0: {}\nt: {}\nk: {}\nalphas: {}\norder: {}\nroutes: {}\ncoefficients: {}\n",
            join(&self.xi),
            self.m,
            self.mu,
            self.mu1,
            self.mu0,
            self.t,
            self.k,
            join(&self.alphas),
            self.order,
            self.routes.join(","),
            self.coefficients.join(",")
        )
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["r", "coefficient"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.coefficients.iter().enumerate().map(|(r, c)| vec![r.to_string(), c.clone()]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultReport {
    pub xi: Vec<usize>,
    pub m: usize,
    pub n: i64,
    /// `(|xi| - n) / 2` when it is a nonnegative integer.
    pub index: Option<usize>,
    pub family: String,
    pub value: String,
}

impl Report for MultReport {
    fn text(&self) -> String {
        format!(
            "xi: ({})\nm: {}\nn: {}\nindex: {}\nfamily: {}\nvalue: {}\n",
            join(&self.xi),
            self.m,
            self.n,
            self.index.map_or_else(|| "none".into(), |i| i.to_string()),
            self.family,
            self.value
        )
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["xi", "m", "n", "index", "family", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            join(&self.xi),
            self.m.to_string(),
            self.n.to_string(),
            opt(&self.index),
            self.family.clone(),
            self.value.clone(),
        ]]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub xi: Vec<usize>,
    pub m: usize,
    pub mu: usize,
    pub k: i64,
    pub class: String,
    pub degree_bound: Option<usize>,
    pub horizon: Option<usize>,
    /// Smallest `r0` with `a_r > 0` on `r0..=horizon`, if any.
    pub r0: Option<usize>,
}

impl Report for ClassifyReport {
    fn text(&self) -> String {
        let mut s = format!(
            "xi: ({})\nm: {}\nmu: {}\nk: {}\nclass: {}\n",
            join(&self.xi),
            self.m,
            self.mu,
            self.k,
            self.class
        );
        if let Some(d) = self.degree_bound {
            s += &format!("degree_bound: {d}\n");
        }
        if let Some(h) = self.horizon {
            match self.r0 {
                Some(r0) => s += &format!("threshold: a_r > 0 for {r0} <= r <= {h}\n"),
                None => s += &format!("threshold: unresolved at horizon {h}\n"),
            }
        }
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["xi", "m", "mu", "k", "class", "degree_bound", "horizon", "r0"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            join(&self.xi),
            self.m.to_string(),
            self.mu.to_string(),
            self.k.to_string(),
            self.class.clone(),
            opt(&self.degree_bound),
            opt(&self.horizon),
            opt(&self.r0),
        ]]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamiliesReport {
    pub kind: String,
    pub m: usize,
    pub t: usize,
    pub s: usize,
    pub rs: Vec<usize>,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub xi: Vec<usize>,
    pub weight: i64,
    pub q: i64,
    pub rho: usize,
    pub pairs: Option<String>,
    pub value: String,
    pub tuple_count: Option<String>,
}

impl Report for FamiliesReport {
    fn text(&self) -> String {
        format!(
            "kind: {}\nm: {}\nt: {}\ns: {}\nrs: {}\nN: {}\nxi: ({})\nweight: {}\nq: {}\nrho: {}\npairs: {}\nvalue: {}\ntuple_count: {}\n",
            self.kind,
            self.m,
            self.t,
            self.s,
            join(&self.rs),
            self.big_n,
            join(&self.xi),
            self.weight,
            self.q,
            self.rho,
            self.pairs.as_deref().unwrap_or("none"),
            self.value,
            self.tuple_count.as_deref().unwrap_or("none"),
        )
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["kind", "m", "t", "s", "rs", "N", "xi", "weight", "q", "rho", "pairs", "value", "tuple_count"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.kind.clone(),
            self.m.to_string(),
            self.t.to_string(),
            self.s.to_string(),
            join(&self.rs),
            self.big_n.to_string(),
            join(&self.xi),
            self.weight.to_string(),
            self.q.to_string(),
            self.rho.to_string(),
            opt(&self.pairs),
            self.value.clone(),
            opt(&self.tuple_count),
        ]]
    }
}

pub const TABLE_HEADER: [&str; 6] = ["xi", "m", "n", "value", "class", "family"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub xi: String,
    pub m: usize,
    pub n: usize,
    pub value: String,
    pub class: String,
    pub family: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Table(pub Vec<TableRow>);

impl Report for Table {
    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.0 {
            s += &format!("xi=({}) m={} n={} value={} class={} family={}\n", r.xi, r.m, r.n, r.value, r.class, r.family);
        }
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        TABLE_HEADER.to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0
            .iter()
            .map(|r| {
                vec![
                    r.xi.clone(),
                    r.m.to_string(),
                    r.n.to_string(),
                    r.value.clone(),
                    r.class.clone(),
                    r.family.clone(),
                ]
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub cases: usize,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

impl Report for VerifyReport {
    fn text(&self) -> String {
        let mut s = format!("seed: {}\ncases: {}\n", self.seed, self.cases);
        for suite in &self.suites {
            let status = if suite.passed { "pass" } else { "FAIL" };
            s += &format!("{}: {} checks, {status}\n", suite.name, suite.checks);
            if let Some(c) = &suite.counterexample {
                s += &format!("  first counterexample: {c}\n");
            }
        }
        s += &format!("result: {}\n", if self.passed { "pass" } else { "FAIL" });
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["suite", "checks", "passed", "counterexample"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.suites
            .iter()
            .map(|s| vec![s.name.clone(), s.checks.to_string(), s.passed.to_string(), opt(&s.counterexample)])
            .collect()
    }
}
