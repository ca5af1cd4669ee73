//! One function per subcommand, each building an [`Output`].

use std::fmt::Write as _;

use bwtrun_core::morphism::compose;
use bwtrun_core::primitivity::{
    classify_holub_form, holub_test_set, is_primitivity_preserving, is_recognizable, mu_powers,
    NotRecognizable,
};
use bwtrun_core::sensitivity::{
    is_bwt_run_preserving, necklace_table, wk_experiment, ExperimentTable, NecklaceTableRow,
    RunPreservation, SensitivityRow, WordDomain,
};
use bwtrun_core::sync::{
    circular_factorizations, decide_sync_finite_delay, sync_delay_for_word_in, sync_splits,
    LanguageDescriptor, SyncReason,
};
use bwtrun_core::{bwt, circular_factors, inverse_bwt, BifixStatus, Morphism, OrderClass, Word};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::letters::Letters;
use crate::output::{ratio, Output, Table};
use crate::sweep::{default_cutoff, sensitivity_par};

pub fn bwt_words(letters: &Letters, words: &[String]) -> Result<Output, CliError> {
    let mut out = Output::default();
    for s in words {
        let w = letters.word(s)?;
        let b = bwt(&w)?;
        let t = letters.render(&b.transformed);
        let r = b.run_count();
        writeln!(out.text, "{t} (r={r})").unwrap();
        writeln!(out.text, "index {}", b.primary_index).unwrap();
        let runs: Vec<Value> = b
            .runs()
            .runs
            .iter()
            .map(|&(c, n)| json!([letters.letter(c).to_string(), n]))
            .collect();
        out.json.push(json!({
            "input": s,
            "bwt": t,
            "index": b.primary_index,
            "r": r,
            "rle": runs,
        }));
    }
    Ok(out)
}

pub fn inverse(letters: &Letters, word: &str, index: usize) -> Result<Output, CliError> {
    let w = inverse_bwt(&letters.word(word)?, index)?;
    let s = letters.render(&w);
    Ok(Output {
        text: format!("{s}\n"),
        json: vec![json!({"bwt": word, "index": index, "word": s})],
        table: None,
    })
}

pub fn apply(letters: &Letters, m: &Morphism, words: &[String]) -> Result<Output, CliError> {
    let mut out = Output::default();
    let name = letters.render_morphism(m);
    for s in words {
        let image = letters.render(&m.apply(&letters.word(s)?)?);
        writeln!(out.text, "{image}").unwrap();
        out.json
            .push(json!({"morphism": name, "input": s, "image": image}));
    }
    Ok(out)
}

pub fn compose_chain(letters: &Letters, chain: &[Morphism]) -> Result<Output, CliError> {
    let (last, rest) = chain.split_last().expect("clap requires two morphisms");
    let mut acc = last.clone();
    for outer in rest.iter().rev() {
        acc = compose(outer, &acc)?;
    }
    let s = letters.render_morphism(&acc);
    let names: Vec<String> = chain.iter().map(|m| letters.render_morphism(m)).collect();
    Ok(Output {
        text: format!("{s}\n"),
        json: vec![json!({"chain": names, "composed": s})],
        table: None,
    })
}

fn require_binary(m: &Morphism) -> Result<(), CliError> {
    if m.is_binary() {
        Ok(())
    } else {
        Err(CliError::domain("this command needs a binary morphism"))
    }
}

fn opt_word(letters: &Letters, w: &Option<Word>) -> Value {
    w.as_ref()
        .map_or(Value::Null, |w| Value::String(letters.render(w)))
}

pub fn classify(letters: &Letters, m: &Morphism) -> Result<Output, CliError> {
    require_binary(m)?;
    let name = letters.render_morphism(m);
    let injective = m.is_injective_binary()?;
    let cyclic = m.is_cyclic();
    let mut report = serde_json::Map::new();
    report.insert("morphism".into(), json!(name));
    report.insert("injective".into(), json!(injective));
    report.insert("cyclic".into(), opt_word(letters, &cyclic));

    let mut text = format!("morphism: {name}\ninjective: {}\n", yes(injective));
    if let Some(z) = &cyclic {
        writeln!(text, "cyclic: yes, images in {}+", letters.render(z)).unwrap();
    } else {
        text.push_str("cyclic: no\n");
    }

    let bifix = match m.bifix_status()? {
        BifixStatus::PrefixOnly => "prefix",
        BifixStatus::SuffixOnly => "suffix",
        BifixStatus::Bifix => "bifix",
        BifixStatus::Neither => "neither",
    };
    report.insert("bifix".into(), json!(bifix));

    if injective {
        let order = match m.abelian_order_class()? {
            OrderClass::Preserving => "preserving",
            OrderClass::Reversing => "reversing",
        };
        let sturmian = m.sturmian_decomposition()?;
        let pp = is_primitivity_preserving(m)?;
        let pmu = mu_powers(m)?;
        let form = classify_holub_form(m)?;
        let rec = is_recognizable(m)?;
        let tau = m.factor_through_tau()?;

        writeln!(text, "order class: {order}").unwrap();
        writeln!(text, "code type: {bifix}").unwrap();
        match &sturmian {
            Some(d) => {
                let mut names: Vec<&str> = d.steps.iter().rev().map(|e| e.name()).collect();
                if d.exchange {
                    names.insert(0, "E");
                }
                writeln!(text, "sturmian: yes ({})", names.join(" . ")).unwrap();
            }
            None => text.push_str("sturmian: no\n"),
        }
        match &pp.witness {
            None => text.push_str("primitivity preserving: yes\n"),
            Some(w) => writeln!(
                text,
                "primitivity preserving: no, witness {} -> {}",
                letters.render(w),
                letters.render(&m.apply(w)?)
            )
            .unwrap(),
        }
        writeln!(text, "P^mu case: {}", pmu.case_tag.label()).unwrap();
        match &form {
            Some(f) => writeln!(
                text,
                "holub form: case {} p={} q={} m={} n={} k={}",
                f.case,
                letters.render(&f.p),
                letters.render(&f.q),
                f.m,
                f.n,
                f.k
            )
            .unwrap(),
            None => text.push_str("holub form: none\n"),
        }
        let (reason, reason_text) = match &rec.reason {
            None => (Value::Null, String::new()),
            Some(NotRecognizable::NotPrimitivityPreserving { witness }) => (
                json!({"kind": "not-primitivity-preserving", "witness": letters.render(witness)}),
                format!(", {} maps to a power", letters.render(witness)),
            ),
            Some(NotRecognizable::ConjugateImages) => (
                json!({"kind": "conjugate-images"}),
                ", images are conjugate".to_string(),
            ),
        };
        writeln!(text, "recognizable: {}{reason_text}", yes(rec.recognizable)).unwrap();
        if let Some(psi) = &tau {
            writeln!(
                text,
                "factors through thue-morse: {}",
                letters.render_morphism(psi)
            )
            .unwrap();
        }

        report.insert("order_class".into(), json!(order));
        report.insert("sturmian".into(), json!(sturmian.is_some()));
        report.insert(
            "sturmian_steps".into(),
            sturmian.as_ref().map_or(Value::Null, |d| {
                json!({
                    "innermost_first": d.steps.iter().map(|e| e.name()).collect::<Vec<_>>(),
                    "exchange": d.exchange,
                })
            }),
        );
        report.insert("primitivity_preserving".into(), json!(pp.preserving));
        report.insert("pp_witness".into(), opt_word(letters, &pp.witness));
        report.insert("pmu_case".into(), json!(pmu.case_tag.label()));
        report.insert(
            "holub_form".into(),
            form.as_ref().map_or(Value::Null, |f| {
                json!({
                    "case": f.case,
                    "p": letters.render(&f.p),
                    "q": letters.render(&f.q),
                    "m": f.m,
                    "n": f.n,
                    "k": f.k,
                })
            }),
        );
        report.insert("recognizable".into(), json!(rec.recognizable));
        report.insert("recognizable_reason".into(), reason);
        report.insert(
            "tau_factor".into(),
            tau.as_ref()
                .map_or(Value::Null, |p| json!(letters.render_morphism(p))),
        );
    } else {
        writeln!(text, "code type: {bifix}").unwrap();
        for key in [
            "order_class",
            "sturmian",
            "sturmian_steps",
            "primitivity_preserving",
            "pp_witness",
            "pmu_case",
            "holub_form",
            "recognizable",
            "recognizable_reason",
            "tau_factor",
        ] {
            report.insert(key.into(), Value::Null);
        }
    }

    let preservation = is_bwt_run_preserving(m)?;
    let (kind, extra) = match &preservation {
        RunPreservation::Preserving => ("preserving", Value::Null),
        RunPreservation::NotPreserving { witness } => {
            ("not-preserving", json!(letters.render(witness)))
        }
        RunPreservation::Cyclic { additive } => ("cyclic", json!(additive)),
    };
    match &preservation {
        RunPreservation::Cyclic { additive } => {
            writeln!(text, "bwt-run preserving: yes, AS constant {additive}").unwrap()
        }
        p => writeln!(text, "bwt-run preserving: {}", yes(p.is_preserving())).unwrap(),
    }
    report.insert(
        "bwt_run_preserving".into(),
        json!({"kind": kind, "detail": extra}),
    );
    Ok(Output {
        text,
        json: vec![Value::Object(report)],
        table: None,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn powers(letters: &Letters, m: &Morphism) -> Result<Output, CliError> {
    require_binary(m)?;
    let p = mu_powers(m)?;
    let set = holub_test_set(m)?;
    let name = letters.render_morphism(m);
    let letter_w: Vec<String> = p
        .letter_witnesses
        .iter()
        .map(|&c| letters.letter(c).to_string())
        .collect();
    let elements: Vec<String> = p.elements().iter().map(|w| letters.render(w)).collect();
    let mut text = format!("morphism: {name}\ncase: {}\n", p.case_tag.label());
    writeln!(text, "letters: {}", list(&letter_w)).unwrap();
    match (&p.rotation_witness, &p.z, p.k) {
        (Some(w), Some(z), Some(k)) => writeln!(
            text,
            "rotation class of {} (image {})",
            letters.render(w),
            power(&letters.render(z), k)
        )
        .unwrap(),
        _ => text.push_str("rotation class: none\n"),
    }
    writeln!(text, "elements: {}", list(&elements)).unwrap();
    let pairs: Vec<String> = set
        .pairs
        .iter()
        .map(|(l, k)| format!("({l},{k})"))
        .collect();
    writeln!(
        text,
        "test set: u={} v={} pairs {}",
        letters.render(&set.u),
        letters.render(&set.v),
        pairs.join(" ")
    )
    .unwrap();
    Ok(Output {
        text,
        json: vec![json!({
            "morphism": name,
            "case": p.case_tag.label(),
            "letter_witnesses": letter_w,
            "rotation_witness": opt_word(letters, &p.rotation_witness),
            "z": opt_word(letters, &p.z),
            "k": p.k,
            "elements": elements,
            "test_set": {
                "u": letters.render(&set.u),
                "v": letters.render(&set.v),
                "swapped": set.swapped,
                "pairs": set.pairs,
            },
        })],
        table: None,
    })
}

fn power(z: &str, k: usize) -> String {
    if z.chars().count() == 1 {
        format!("{z}^{k}")
    } else {
        format!("({z})^{k}")
    }
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "none".to_string()
    } else {
        items.join(" ")
    }
}

/// A parsed `--scope` together with its spelling.
pub struct Scope {
    pub spelling: String,
    pub language: LanguageDescriptor,
}

pub fn sync(
    letters: &Letters,
    m: &Morphism,
    word: &str,
    scope: &Scope,
) -> Result<Output, CliError> {
    require_binary(m)?;
    let w = letters.word(word)?;
    let image = m.apply(&w)?;
    let name = letters.render_morphism(m);
    let mut text = format!("morphism: {name}\nimage: {}\n", letters.render(&image));

    let facts = circular_factorizations(&image, m)?;
    writeln!(text, "circular factorizations: {}", facts.len()).unwrap();
    let mut fact_json = Vec::new();
    for f in &facts {
        let rotated = image.rotation(f.rotation_offset);
        let mut pieces = Vec::new();
        let mut at = 0;
        for &c in &f.codeword_sequence {
            let len = m.image(c).expect("decoded codeword").len();
            pieces.push(letters.render(&rotated.slice(at, at + len)));
            at += len;
        }
        let codes: String = f
            .codeword_sequence
            .iter()
            .map(|&c| letters.letter(c))
            .collect();
        writeln!(
            text,
            "  offset {}: {} ({codes})",
            f.rotation_offset,
            pieces.join("|")
        )
        .unwrap();
        fact_json.push(json!({
            "offset": f.rotation_offset,
            "codewords": codes,
            "pieces": pieces,
        }));
    }

    let mut lengths = Vec::new();
    writeln!(text, "sync pairs ({}):", scope.spelling).unwrap();
    for len in 1..=image.len() {
        let mut synced = 0;
        let mut shown = Vec::new();
        let mut factors_json = Vec::new();
        let factors = circular_factors(&image, len)?;
        for f in &factors {
            let splits = sync_splits(f, m, &scope.language)?;
            let fs = letters.render(f);
            match splits.first() {
                Some(&j) => {
                    synced += 1;
                    shown.push(format!(
                        "{}|{}",
                        &fs[..char_offset(&fs, j)],
                        &fs[char_offset(&fs, j)..]
                    ));
                }
                None => shown.push(format!("{fs}:-")),
            }
            factors_json.push(json!({"factor": fs, "splits": splits}));
        }
        writeln!(
            text,
            "  {len}: {synced}/{} {}",
            factors.len(),
            shown.join(" ")
        )
        .unwrap();
        lengths.push(json!({
            "length": len,
            "factors": factors.len(),
            "synchronizing": synced,
            "pairs": factors_json,
        }));
    }
    let delay = sync_delay_for_word_in(m, &w, &scope.language)?;
    match delay {
        Some(k) => writeln!(text, "delay: {k}").unwrap(),
        None => text.push_str("delay: none\n"),
    }
    Ok(Output {
        text,
        json: vec![json!({
            "morphism": name,
            "word": word,
            "image": letters.render(&image),
            "scope": scope.spelling,
            "factorizations": fact_json,
            "lengths": lengths,
            "delay": delay,
        })],
        table: None,
    })
}

fn char_offset(s: &str, n: usize) -> usize {
    s.char_indices().nth(n).map_or(s.len(), |(i, _)| i)
}

pub fn decide_delay(letters: &Letters, m: &Morphism, scope: &Scope) -> Result<Output, CliError> {
    require_binary(m)?;
    let d = decide_sync_finite_delay(m, &scope.language)?;
    let name = letters.render_morphism(m);
    let bound = |b: Option<usize>| b.map_or("inf".to_string(), |k| k.to_string());
    let (reason, why) = match &d.reason {
        SyncReason::Recognizable => (json!({"kind": "recognizable"}), "recognizable".to_string()),
        SyncReason::ConjugateImages { max_a, max_b } => (
            json!({"kind": "conjugate-images", "max_a": max_a, "max_b": max_b}),
            format!(
                "conjugate images, letter runs bounded by {}:{}",
                bound(*max_a),
                bound(*max_b)
            ),
        ),
        SyncReason::MuPowers { unbounded } => (
            json!({"kind": "mu-powers", "unbounded": opt_word(letters, unbounded)}),
            match unbounded {
                Some(w) => format!("all powers of {} occur", letters.render(w)),
                None => "powers of every mu-power are bounded".to_string(),
            },
        ),
    };
    Ok(Output {
        text: format!(
            "morphism: {name}\nscope: {}\nfinite delay: {} ({why})\n",
            scope.spelling,
            yes(d.finite_delay)
        ),
        json: vec![json!({
            "morphism": name,
            "scope": scope.spelling,
            "finite_delay": d.finite_delay,
            "reason": reason,
        })],
        table: None,
    })
}

pub struct SensitivityArgs {
    pub n_from: Option<usize>,
    pub n_to: Option<usize>,
    pub table1: bool,
    pub include_constant: bool,
    pub max_n: Option<usize>,
}

pub fn necklace_rows_table(letters: &Letters, rows: &[NecklaceTableRow], name: &str) -> Table {
    let mut t = Table::new(&[
        "w",
        "bwt(w)",
        "r(w)",
        &format!("{name}(w)"),
        &format!("bwt({name}(w))"),
        &format!("r({name}(w))"),
    ]);
    for r in rows {
        t.push(vec![
            letters.render(&r.word),
            letters.render(&r.bwt),
            r.r.to_string(),
            letters.render(&r.image),
            letters.render(&r.image_bwt),
            r.image_r.to_string(),
        ]);
    }
    t
}

pub fn sensitivity(
    letters: &Letters,
    m: &Morphism,
    a: &SensitivityArgs,
) -> Result<Output, CliError> {
    let min = bwtrun_core::sensitivity::min_length(m);
    let from = a.n_from.unwrap_or(min);
    let to = a.n_to.unwrap_or(from);
    if from < min {
        return Err(CliError::domain(format!("n must be at least {min}")));
    }
    if from > to {
        return Err(CliError::parse(format!("empty range {from}..{to}")));
    }
    let cutoff = a.max_n.unwrap_or_else(|| default_cutoff(m.source().len()));
    if to > cutoff {
        return Err(CliError::domain(format!(
            "n = {to} is above the enumeration cutoff {cutoff}; raise it with --max-n"
        )));
    }
    let domain = if a.include_constant {
        WordDomain::All
    } else {
        WordDomain::NonConstant
    };
    let name = letters.render_morphism(m);
    let rows: Vec<SensitivityRow> = (from..=to)
        .map(|n| sensitivity_par(m, n, domain))
        .collect::<Result<_, _>>()?;

    let mut out = Output::default();
    let mut csv = if a.table1 {
        Table::new(&["n", "w", "bwt", "r", "image", "image_bwt", "image_r"])
    } else {
        Table::new(&["n", "as", "ms_num", "ms_den", "as_witness", "ms_witness"])
    };
    let mut json_rows = Vec::new();
    if !a.table1 {
        out.text.push_str("n\tAS\tMS\tAS witness\tMS witness\n");
    }
    for row in &rows {
        let (asw, msw) = (
            letters.render(&row.as_witness),
            letters.render(&row.ms_witness),
        );
        let mut jr = json!({
            "n": row.n,
            "as": row.as_value,
            "ms": ratio(&row.ms_value),
            "ms_num": row.ms_value.numer(),
            "ms_den": row.ms_value.denom(),
            "as_witness": asw,
            "ms_witness": msw,
        });
        if a.table1 {
            let table = necklace_table(m, row.n)?;
            let t = necklace_rows_table(letters, &table, "mu");
            out.text.push_str(&t.to_tsv());
            writeln!(
                out.text,
                "AS_mu({n})={} MS_mu({n})={}",
                row.as_value,
                ratio(&row.ms_value),
                n = row.n
            )
            .unwrap();
            for r in &t.rows {
                let mut cells = vec![row.n.to_string()];
                cells.extend(r.iter().cloned());
                csv.push(cells);
            }
            jr["necklaces"] = Value::Array(
                t.rows
                    .iter()
                    .map(|r| {
                        json!({
                            "w": r[0], "bwt": r[1], "r": r[2].parse::<usize>().unwrap(),
                            "image": r[3], "image_bwt": r[4], "image_r": r[5].parse::<usize>().unwrap(),
                        })
                    })
                    .collect(),
            );
        } else {
            writeln!(
                out.text,
                "{}\t{}\t{}\t{asw}\t{msw}",
                row.n,
                row.as_value,
                ratio(&row.ms_value)
            )
            .unwrap();
            csv.push(vec![
                row.n.to_string(),
                row.as_value.to_string(),
                row.ms_value.numer().to_string(),
                row.ms_value.denom().to_string(),
                asw,
                msw,
            ]);
        }
        json_rows.push(jr);
    }
    out.json.push(json!({
        "morphism": name,
        "domain": if a.include_constant { "all" } else { "non-constant" },
        "rows": json_rows,
    }));
    out.table = Some(csv);
    Ok(out)
}

/// `family` names the measured word of row `k`, e.g. `w_6`.
pub fn experiment_output(
    kind: &str,
    table: &ExperimentTable,
    family: impl Fn(usize) -> String,
) -> Output {
    let mut t = Table::new(&[
        "k",
        "as",
        "ms_num",
        "ms_den",
        "as_witness",
        "ms_witness",
        "length",
        "r_before",
        "r_after",
    ]);
    let mut text = String::from("k\tlength\tr_before\tr_after\tdelta_plus\tdelta_times\n");
    let mut rows = Vec::new();
    for r in &table.rows {
        let name = family(r.param);
        t.push(vec![
            r.param.to_string(),
            r.delta_plus.to_string(),
            r.delta_times.numer().to_string(),
            r.delta_times.denom().to_string(),
            name.clone(),
            name.clone(),
            r.length.to_string(),
            r.r_before.to_string(),
            r.r_after.to_string(),
        ]);
        writeln!(
            text,
            "{}\t{}\t{}\t{}\t{}\t{}",
            r.param,
            r.length,
            r.r_before,
            r.r_after,
            r.delta_plus,
            ratio(&r.delta_times)
        )
        .unwrap();
        rows.push(json!({
            "k": r.param,
            "word": name,
            "length": r.length,
            "r_before": r.r_before,
            "r_after": r.r_after,
            "delta_plus": r.delta_plus,
            "delta_times": ratio(&r.delta_times),
        }));
    }
    Output {
        text,
        json: vec![json!({"experiment": kind, "rows": rows})],
        table: Some(t),
    }
}

pub fn wk(m: &Morphism, (lo, hi): (usize, usize)) -> Result<Output, CliError> {
    let table = wk_experiment(m, lo..=hi)?;
    Ok(experiment_output("wk", &table, |k| format!("w_{k}")))
}
