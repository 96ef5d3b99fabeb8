use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use spinweave::charclass::ObstructionRow;
use spinweave::{Aggregate, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

pub fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn aggregate_table(agg: &Aggregate) -> String {
    let mut s = String::new();
    let w = agg.reports.iter().map(|r| r.check_name.len()).max().unwrap_or(5).max(5);
    let _ = writeln!(s, "{:<6} {:<w$} signature", "status", "check");
    for r in &agg.reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(s, "{:<6} {:<w$} {}", status, r.check_name, r.signature.as_deref().unwrap_or("-"));
    }
    let _ = writeln!(s, "{} passed, {} failed", agg.passed, agg.failed);
    s
}

fn tf(b: bool) -> &'static str {
    if b {
        "T"
    } else {
        "F"
    }
}

pub fn obstruction_table(rows: &[ObstructionRow]) -> String {
    let mut s = String::new();
    let w = rows.iter().map(|r| r.name.len()).max().unwrap_or(8).max(8);
    let _ = writeln!(s, "{:<w$} dim orient spin pin+ pin- spinc pinc lpin", "manifold");
    for r in rows {
        let lpin = match (&r.lpin_witness, r.lpin) {
            (Some(wit), true) => format!("T:{wit}"),
            _ => tf(r.lpin).to_string(),
        };
        let _ = writeln!(
            s,
            "{:<w$} {:>3} {:<6} {:<4} {:<4} {:<4} {:<5} {:<4} {}",
            r.name,
            r.dim,
            tf(r.orientable),
            tf(r.spin),
            tf(r.pin_plus),
            tf(r.pin_minus),
            tf(r.spin_c),
            tf(r.pin_c),
            lpin
        );
    }
    s
}

pub fn representation_table(rep: &Representation) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "signature {} kind {} dim {}", rep.sig, rep.kind.name(), rep.dim);
    let labels: Vec<String> = if rep.kind.is_weyl() {
        let m = rep.sig.dim();
        (1..m).map(|j| format!("e{j}e{m}")).collect()
    } else {
        (1..=rep.images.len()).map(|j| format!("e{j}")).collect()
    };
    for (label, img) in labels.iter().zip(&rep.images) {
        let _ = writeln!(s, "{label}:");
        for row in img.to_strings() {
            let _ = writeln!(s, "  [{}]", row.join(", "));
        }
    }
    s
}
