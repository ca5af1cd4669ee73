//! Command-line front end for `bwtrun-core`: letter parsing, text/JSON/CSV
//! output, parallel sensitivity sweeps, reproduction of the committed tables
//! and run manifests.

pub mod cli;
pub mod commands;
pub mod error;
pub mod letters;
pub mod manifest;
pub mod output;
pub mod reproduce;
pub mod sweep;

use std::io::Write;

use bwtrun_core::sensitivity::{fibonacci_dollar_experiment, rho_experiment};
use bwtrun_core::sync::LanguageDescriptor;
use clap::Parser;

use crate::cli::{read_lines, strip_manifest, Cli, Command, Experiment};
use crate::commands::{Scope, SensitivityArgs};
use crate::error::CliError;
use crate::letters::{Letters, MorphismText};
use crate::manifest::RunManifest;
use crate::output::{Format, Output};

/// Parses `argv` (program name first), runs the command and writes its
/// output. Returns the exit code: 0 on success, 2 for malformed input, 1 for
/// everything else.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli, &argv) {
        Ok(bytes) => match out.write_all(bytes.as_bytes()).and_then(|_| out.flush()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "{}", CliError::from(e));
                1
            }
        },
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

/// Raw inputs seen by a command, for alphabet inference and the manifest.
#[derive(Default)]
struct Inputs {
    texts: Vec<String>,
    digests: Vec<(String, Vec<u8>)>,
}

impl Inputs {
    fn arg(&mut self, name: &str, value: &str) {
        self.digests
            .push((name.to_string(), value.as_bytes().to_vec()));
    }

    fn morphism(&mut self, arg: &str) -> Result<MorphismText, CliError> {
        self.arg("morphism", arg);
        let m = MorphismText::parse(arg)?;
        self.texts.push(m.letters());
        Ok(m)
    }

    fn words(
        &mut self,
        words: &[String],
        file: &Option<std::path::PathBuf>,
    ) -> Result<Vec<String>, CliError> {
        let mut all = words.to_vec();
        for w in words {
            self.arg("word", w);
        }
        if let Some(path) = file {
            let (lines, bytes) = read_lines(path)?;
            self.digests.push((path.display().to_string(), bytes));
            all.extend(lines);
        }
        if all.is_empty() {
            return Err(CliError::parse("no words given"));
        }
        self.texts.extend(all.iter().cloned());
        Ok(all)
    }

    fn scope(&mut self, arg: &str) -> Result<ScopeText, CliError> {
        self.arg("scope", arg);
        if arg == "full" {
            return Ok(ScopeText::Full);
        }
        if let Some(rest) = arg.strip_prefix("runs:") {
            let bound = |s: &str| -> Result<Option<usize>, CliError> {
                if s == "inf" {
                    Ok(None)
                } else {
                    s.parse()
                        .map(Some)
                        .map_err(|_| CliError::parse(format!("run bound {s:?}")))
                }
            };
            let (a, b) = rest
                .split_once(':')
                .ok_or_else(|| CliError::parse("expected runs:<a>:<b>"))?;
            return Ok(ScopeText::Runs(bound(a)?, bound(b)?));
        }
        if let Some(path) = arg.strip_prefix("file:") {
            let (lines, bytes) = read_lines(path.as_ref())?;
            self.digests.push((path.to_string(), bytes));
            if lines.is_empty() {
                return Err(CliError::parse(format!("{path}: no words")));
            }
            self.texts.extend(lines.iter().cloned());
            return Ok(ScopeText::List(lines));
        }
        Err(CliError::parse(format!(
            "scope {arg:?}: expected full, runs:<a>:<b> or file:<path>"
        )))
    }

    fn letters(&self, declared: &Option<String>) -> Result<Letters, CliError> {
        match declared {
            Some(a) => Letters::declared(a),
            None => Letters::inferred(self.texts.iter().map(String::as_str)),
        }
    }
}

enum ScopeText {
    Full,
    Runs(Option<usize>, Option<usize>),
    List(Vec<String>),
}

impl ScopeText {
    fn bind(self, spelling: &str, letters: &Letters) -> Result<Scope, CliError> {
        let language = match self {
            ScopeText::Full => LanguageDescriptor::FullBinary,
            ScopeText::Runs(max_a, max_b) => LanguageDescriptor::BoundedLetterRuns { max_a, max_b },
            ScopeText::List(words) => LanguageDescriptor::FiniteList(
                words
                    .iter()
                    .map(|w| letters.word(w))
                    .collect::<Result<_, _>>()?,
            ),
        };
        Ok(Scope {
            spelling: spelling.to_string(),
            language,
        })
    }
}

fn execute(cli: &Cli, argv: &[String]) -> Result<String, CliError> {
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let mut inputs = Inputs::default();
    let (output, letters): (Output, Letters) = match &cli.command {
        Command::Bwt { words, file } => {
            let words = inputs.words(words, file)?;
            let l = inputs.letters(&cli.alphabet)?;
            (commands::bwt_words(&l, &words)?, l)
        }
        Command::InverseBwt { word, index } => {
            let words = inputs.words(std::slice::from_ref(word), &None)?;
            let l = inputs.letters(&cli.alphabet)?;
            (commands::inverse(&l, &words[0], *index)?, l)
        }
        Command::Apply {
            morphism,
            words,
            file,
        } => {
            let m = inputs.morphism(morphism)?;
            let words = inputs.words(words, file)?;
            let l = inputs.letters(&cli.alphabet)?;
            (commands::apply(&l, &m.bind(&l)?, &words)?, l)
        }
        Command::Compose { morphisms } => {
            let texts = morphisms
                .iter()
                .map(|m| inputs.morphism(m))
                .collect::<Result<Vec<_>, _>>()?;
            let l = inputs.letters(&cli.alphabet)?;
            let chain = texts
                .iter()
                .map(|t| t.bind(&l))
                .collect::<Result<Vec<_>, _>>()?;
            (commands::compose_chain(&l, &chain)?, l)
        }
        Command::Classify { morphism } => {
            let m = inputs.morphism(morphism)?;
            let l = inputs.letters(&cli.alphabet)?;
            (commands::classify(&l, &m.bind(&l)?)?, l)
        }
        Command::MuPowers { morphism } => {
            let m = inputs.morphism(morphism)?;
            let l = inputs.letters(&cli.alphabet)?;
            (commands::powers(&l, &m.bind(&l)?)?, l)
        }
        Command::Sync {
            morphism,
            word,
            scope,
        } => {
            let m = inputs.morphism(morphism)?;
            inputs.arg("word", word);
            inputs.texts.push(word.clone());
            let s = inputs.scope(scope)?;
            let l = inputs.letters(&cli.alphabet)?;
            let s = s.bind(scope, &l)?;
            (commands::sync(&l, &m.bind(&l)?, word, &s)?, l)
        }
        Command::DecideDelay { morphism, scope } => {
            let m = inputs.morphism(morphism)?;
            let s = inputs.scope(scope)?;
            let l = inputs.letters(&cli.alphabet)?;
            let s = s.bind(scope, &l)?;
            (commands::decide_delay(&l, &m.bind(&l)?, &s)?, l)
        }
        Command::Sensitivity {
            morphism,
            n_from,
            n_to,
            table1,
            include_constant,
            max_n,
        } => {
            let m = inputs.morphism(morphism)?;
            let l = inputs.letters(&cli.alphabet)?;
            let args = SensitivityArgs {
                n_from: *n_from,
                n_to: *n_to,
                table1: *table1,
                include_constant: *include_constant,
                max_n: *max_n,
            };
            (commands::sensitivity(&l, &m.bind(&l)?, &args)?, l)
        }
        Command::Experiment { kind } => match kind {
            Experiment::Rho { p, k: (lo, hi) } => {
                let t = rho_experiment(*p, *lo..=*hi)?;
                let out = commands::experiment_output("rho", &t, |k| format!("w_{k}"));
                (out, Letters::declared("ab")?)
            }
            Experiment::Wk { morphism, k } => {
                let m = inputs.morphism(morphism)?;
                let l = inputs.letters(&cli.alphabet)?;
                (commands::wk(&m.bind(&l)?, *k)?, l)
            }
            Experiment::FibDollar { k: (lo, hi) } => {
                let ks: Vec<usize> = (*lo..=*hi).filter(|k| k % 2 == 0).collect();
                if ks.is_empty() {
                    return Err(CliError::domain("no even k in the range"));
                }
                let t = fibonacci_dollar_experiment(ks)?;
                let out =
                    commands::experiment_output("fib-dollar", &t, |k| format!("f_{}$", 2 * k));
                (out, Letters::declared("$ab")?)
            }
        },
        Command::Reproduce { target } => (reproduce::reproduce(*target)?, Letters::declared("ab")?),
    };
    let rendered = output.render(format)?;
    if let Some(path) = &cli.manifest {
        let manifest = RunManifest::new(
            strip_manifest(argv),
            letters.declaration(),
            inputs.digests,
            rendered.as_bytes(),
        );
        let body = serde_json::to_string_pretty(&manifest)? + "\n";
        std::fs::write(path, body)?;
    }
    Ok(rendered)
}
