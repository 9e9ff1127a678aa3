use serde::Serialize;

use crate::args::{Format, GlobalOpts};

/// Echo of the settings a report was produced with.
#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub gamma: f64,
    pub tol: Option<f64>,
    pub radial_nodes: usize,
    pub angular_nodes: usize,
    pub trunc: usize,
    pub seed: u64,
}

impl From<&GlobalOpts> for RunConfig {
    fn from(g: &GlobalOpts) -> Self {
        Self {
            gamma: g.gamma.gamma(),
            tol: g.tol,
            radial_nodes: g.radial_nodes,
            angular_nodes: g.angular_nodes,
            trunc: g.trunc,
            seed: g.seed,
        }
    }
}

#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

pub struct Report {
    pub command: &'static str,
    pub passed: bool,
    pub tol: f64,
    pub body: serde_json::Value,
    pub table: Table,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    command: &'a str,
    config: RunConfig,
    tol: f64,
    status: &'a str,
    #[serde(flatten)]
    body: &'a serde_json::Value,
}

impl Report {
    pub fn render(&self, opts: &GlobalOpts) -> String {
        match opts.format {
            Format::Json => {
                let env = Envelope {
                    schema_version: 1,
                    command: self.command,
                    config: opts.into(),
                    tol: self.tol,
                    status: if self.passed { "pass" } else { "fail" },
                    body: &self.body,
                };
                let mut s = serde_json::to_string_pretty(&env).expect("reports always serialize");
                s.push('\n');
                s
            }
            Format::Csv => render_csv(&self.table),
        }
    }
}

pub fn render_csv(t: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.header).expect("in-memory write");
    for r in &t.rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn num(x: f64) -> String {
    format!("{x}")
}
