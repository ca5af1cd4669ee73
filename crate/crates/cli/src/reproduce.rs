//! Regeneration of the committed tables under `fixtures/`.

use std::fmt::Write as _;

use bwtrun_core::primitivity::is_recognizable;
use bwtrun_core::sensitivity::{
    fibonacci_dollar_experiment, necklace_table, rho_experiment, sensitivity,
};
use bwtrun_core::sync::circular_factorizations;
use bwtrun_core::Morphism;
use serde_json::json;

use crate::cli::Target;
use crate::commands::{experiment_output, necklace_rows_table};
use crate::error::CliError;
use crate::letters::{Letters, MorphismText};
use crate::output::{ratio, Output, Table};

pub const TABLE1: &str = include_str!("../fixtures/table1.tsv");
pub const FIGURES: &str = include_str!("../fixtures/figures_2_3.tsv");
pub const RHO_SQRT: &str = include_str!("../fixtures/rho_sqrt.csv");
pub const FIB_DOLLAR: &str = include_str!("../fixtures/fib_dollar.csv");

pub const FIGURE_WORDS: [(&str, &str, &str); 3] = [
    ("2a", "a=baa,b=abb", "baaabbabbbaa"),
    ("2b", "a=baa,b=aba", "baabaabaabaa"),
    ("3a", "a=ab,b=ba", "abababababab"),
];

fn check(name: &str, got: &str, fixture: &str) -> Result<(), CliError> {
    if got == fixture {
        Ok(())
    } else {
        Err(CliError::domain(format!(
            "regenerated {name} differs from the committed fixture:\n{got}"
        )))
    }
}

pub fn reproduce(target: Target) -> Result<Output, CliError> {
    let ab = Letters::declared("ab")?;
    match target {
        Target::Table1 => {
            let pi = Morphism::period_doubling();
            let t = necklace_rows_table(&ab, &necklace_table(&pi, 5)?, "pi");
            let body = t.to_tsv();
            check("table1.tsv", &body, TABLE1)?;
            let row = sensitivity(&pi, 5)?;
            let mut text = body;
            writeln!(
                text,
                "# AS_pi(5)={} MS_pi(5)={}",
                row.as_value,
                ratio(&row.ms_value)
            )
            .unwrap();
            text.push_str("# matches fixtures/table1.tsv\n");
            let rows: Vec<_> = t.rows.iter().map(|r| json!(r)).collect();
            Ok(Output {
                text,
                json: vec![json!({
                    "target": "table1",
                    "matches_fixture": true,
                    "header": t.header,
                    "rows": rows,
                    "summary": {"as": row.as_value, "ms": ratio(&row.ms_value)},
                })],
                table: Some(t),
            })
        }
        Target::RhoSqrt => {
            let table = rho_experiment(2, 6..=12)?;
            let out = experiment_output("rho", &table, |k| format!("w_{k}"));
            let csv = out.table.as_ref().expect("experiment table").to_csv()?;
            check("rho_sqrt.csv", &csv, RHO_SQRT)?;
            let bound = table
                .rows
                .iter()
                .all(|r| r.delta_plus >= 2 * (r.param as i64 - 2));
            let growing = table
                .rows
                .windows(2)
                .all(|p| p[1].delta_plus > p[0].delta_plus);
            if !(bound && growing) {
                return Err(CliError::domain(
                    "delta_plus fell below 2(k-2) or stopped growing",
                ));
            }
            summarize(
                out,
                "rho-sqrt",
                csv,
                "# delta_plus >= 2(k-2), strictly increasing\n",
            )
        }
        Target::FibDollar => {
            let table = fibonacci_dollar_experiment([4, 6, 8, 10])?;
            let out = experiment_output("fib-dollar", &table, |k| format!("f_{}$", 2 * k));
            let csv = out.table.as_ref().expect("experiment table").to_csv()?;
            check("fib_dollar.csv", &csv, FIB_DOLLAR)?;
            let growing = table
                .rows
                .windows(2)
                .all(|p| p[1].delta_times > p[0].delta_times);
            if !growing {
                return Err(CliError::domain("r ratio is not strictly increasing"));
            }
            summarize(
                out,
                "fib-dollar",
                csv,
                "# r(f_{2k+1}$)/r(f_{2k}$) strictly increasing\n",
            )
        }
        Target::Figures23 => {
            let mut t = Table::new(&[
                "figure",
                "morphism",
                "word",
                "factorizations",
                "recognizable",
            ]);
            let mut counts = Vec::new();
            for (fig, text, word) in FIGURE_WORDS {
                let m = MorphismText::parse(text)?.bind(&ab)?;
                let n = circular_factorizations(&ab.word(word)?, &m)?.len();
                let rec = is_recognizable(&m)?.recognizable;
                counts.push(n);
                t.push(vec![
                    fig.to_string(),
                    text.to_string(),
                    word.to_string(),
                    n.to_string(),
                    rec.to_string(),
                ]);
            }
            let body = t.to_tsv();
            check("figures_2_3.tsv", &body, FIGURES)?;
            let mut text = body;
            writeln!(
                text,
                "# factorization counts: {}",
                counts
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )
            .unwrap();
            text.push_str("# matches fixtures/figures_2_3.tsv\n");
            Ok(Output {
                text,
                json: vec![json!({
                    "target": "figures-2-3",
                    "matches_fixture": true,
                    "header": t.header,
                    "rows": t.rows,
                    "summary": {"counts": counts},
                })],
                table: Some(t),
            })
        }
    }
}

fn summarize(mut out: Output, target: &str, csv: String, note: &str) -> Result<Output, CliError> {
    let rows = out.json.pop().expect("experiment json")["rows"].take();
    out.text = format!(
        "{csv}{note}# matches fixtures/{}.csv\n",
        target.replace('-', "_")
    );
    out.json = vec![json!({
        "target": target,
        "matches_fixture": true,
        "header": out.table.as_ref().map(|t| t.header.clone()),
        "rows": rows,
        "summary": {"note": note.trim_start_matches("# ").trim_end()},
    })];
    Ok(out)
}
