//! Letters at the command-line boundary: the declared alphabet order, word
//! parsing and rendering, and the morphism text/JSON formats.

use std::collections::BTreeSet;

use bwtrun_core::{Alphabet, Morphism, Symbol, Word};
use serde_json::Value;

use crate::error::CliError;

/// Named morphisms and their text form over `a < b`.
pub const NAMED: &[(&str, &str)] = &[
    ("fibonacci", "a=ab,b=a"),
    ("fibonacci-tilde", "a=ba,b=a"),
    ("exchange", "a=b,b=a"),
    ("thue-morse", "a=ab,b=ba"),
    ("period-doubling", "a=ab,b=aa"),
    ("fib-dollar", "$=$,a=ab,b=a"),
];

/// The ordered letters of a run; symbol `i` renders as `letters[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letters {
    letters: Vec<char>,
}

impl Letters {
    /// An explicit order, e.g. `$ab`.
    pub fn declared(decl: &str) -> Result<Self, CliError> {
        let letters: Vec<char> = decl.chars().collect();
        let distinct: BTreeSet<char> = letters.iter().copied().collect();
        if letters.is_empty() || distinct.len() != letters.len() {
            return Err(CliError::parse(format!(
                "alphabet {decl:?} must list distinct letters"
            )));
        }
        if letters.len() > usize::from(u8::MAX) {
            return Err(CliError::parse("alphabet too large"));
        }
        for &c in &letters {
            check_letter(c)?;
        }
        Ok(Letters { letters })
    }

    /// ASCII order of every letter in `inputs`; `a < b` when nothing shows up.
    pub fn inferred<'a>(inputs: impl IntoIterator<Item = &'a str>) -> Result<Self, CliError> {
        let mut seen = BTreeSet::new();
        for s in inputs {
            for c in s.chars() {
                check_letter(c)?;
                seen.insert(c);
            }
        }
        if seen.len() < 2 {
            seen.extend(['a', 'b']);
        }
        Letters::declared(&seen.into_iter().collect::<String>())
    }

    pub fn chars(&self) -> &[char] {
        &self.letters
    }

    pub fn declaration(&self) -> String {
        self.letters.iter().collect()
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::range(self.letters.len() as u8)
    }

    pub fn symbol(&self, c: char) -> Result<Symbol, CliError> {
        self.letters
            .iter()
            .position(|&l| l == c)
            .map(|i| Symbol(i as u8))
            .ok_or_else(|| {
                CliError::parse(format!(
                    "letter {c:?} is not in the alphabet {:?}",
                    self.declaration()
                ))
            })
    }

    pub fn word(&self, s: &str) -> Result<Word, CliError> {
        s.chars().map(|c| self.symbol(c)).collect()
    }

    pub fn render(&self, w: &Word) -> String {
        w.iter().map(|s| self.letters[s.0 as usize]).collect()
    }

    pub fn letter(&self, s: Symbol) -> char {
        self.letters[s.0 as usize]
    }

    /// `a=ab,b=ba` in source order.
    pub fn render_morphism(&self, m: &Morphism) -> String {
        m.source()
            .symbols()
            .iter()
            .zip(m.images())
            .map(|(&s, img)| format!("{}={}", self.letter(s), self.render(img)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn check_letter(c: char) -> Result<(), CliError> {
    if c.is_whitespace() || c == ',' || c == '=' || c.is_control() {
        return Err(CliError::parse(format!("{c:?} cannot be used as a letter")));
    }
    Ok(())
}

/// A morphism as written by the user, before it is bound to an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismText {
    pub pairs: Vec<(char, String)>,
}

impl MorphismText {
    /// Accepts a named morphism, `rho:<p>`, `tm-like:<p>:<q>`, the
    /// `a=ab,b=ba` format, inline JSON, or a path to a file with either.
    pub fn parse(arg: &str) -> Result<Self, CliError> {
        let arg = arg.trim();
        if let Some(text) = named(arg)? {
            return Self::parse_pairs(&text);
        }
        if arg.starts_with('{') {
            return Self::parse_json(arg);
        }
        if !arg.contains('=') && std::path::Path::new(arg).is_file() {
            let body =
                std::fs::read_to_string(arg).map_err(|e| CliError::parse(format!("{arg}: {e}")))?;
            let body = body.trim();
            return if body.starts_with('{') {
                Self::parse_json(body)
            } else {
                Self::parse_pairs(body)
            };
        }
        Self::parse_pairs(arg)
    }

    fn parse_pairs(s: &str) -> Result<Self, CliError> {
        let mut pairs = Vec::new();
        for item in s.split(',') {
            let (lhs, rhs) = item
                .split_once('=')
                .ok_or_else(|| CliError::parse(format!("expected letter=image, got {item:?}")))?;
            let mut chars = lhs.trim().chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(CliError::parse(format!("{lhs:?} is not a single letter")));
            };
            pairs.push((c, rhs.trim().to_string()));
        }
        Self::checked(pairs)
    }

    fn parse_json(s: &str) -> Result<Self, CliError> {
        let v: Value =
            serde_json::from_str(s).map_err(|e| CliError::parse(format!("morphism JSON: {e}")))?;
        let images = v
            .get("images")
            .and_then(Value::as_object)
            .ok_or_else(|| CliError::parse("morphism JSON needs an \"images\" object"))?;
        let mut pairs = Vec::new();
        for (k, img) in images {
            let mut chars = k.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(CliError::parse(format!("{k:?} is not a single letter")));
            };
            let img = img
                .as_str()
                .ok_or_else(|| CliError::parse(format!("image of {k:?} is not a string")))?;
            pairs.push((c, img.to_string()));
        }
        Self::checked(pairs)
    }

    fn checked(pairs: Vec<(char, String)>) -> Result<Self, CliError> {
        let mut seen = BTreeSet::new();
        for (c, _) in &pairs {
            if !seen.insert(*c) {
                return Err(CliError::parse(format!("letter {c:?} mapped twice")));
            }
        }
        if pairs.is_empty() {
            return Err(CliError::parse("empty morphism"));
        }
        Ok(MorphismText { pairs })
    }

    /// Every letter the morphism mentions.
    pub fn letters(&self) -> String {
        self.pairs
            .iter()
            .flat_map(|(c, img)| std::iter::once(*c).chain(img.chars()))
            .collect()
    }

    /// Binds the text to `letters`. The source listing must follow the
    /// alphabet order; the target is the source when the images stay inside
    /// it and the whole alphabet otherwise.
    pub fn bind(&self, letters: &Letters) -> Result<Morphism, CliError> {
        let source: Vec<Symbol> = self
            .pairs
            .iter()
            .map(|(c, _)| letters.symbol(*c))
            .collect::<Result<_, _>>()?;
        if source.windows(2).any(|p| p[0] >= p[1]) {
            return Err(CliError::parse(format!(
                "morphism letters must be listed in alphabet order {:?}",
                letters.declaration()
            )));
        }
        let images: Vec<Word> = self
            .pairs
            .iter()
            .map(|(_, img)| letters.word(img))
            .collect::<Result<_, _>>()?;
        let closed = images
            .iter()
            .all(|img| img.iter().all(|s| source.contains(&s)));
        let source = Alphabet::new(source).map_err(CliError::domain)?;
        let target = if closed {
            source.clone()
        } else {
            letters.alphabet()
        };
        Morphism::new(source, target, images).map_err(CliError::domain)
    }
}

fn named(arg: &str) -> Result<Option<String>, CliError> {
    if let Some((_, text)) = NAMED.iter().find(|(n, _)| *n == arg) {
        return Ok(Some(text.to_string()));
    }
    let mut parts = arg.split(':');
    let head = parts.next().unwrap_or_default();
    let nums: Vec<&str> = parts.collect();
    let num = |s: &str| -> Result<usize, CliError> {
        match s.parse::<usize>() {
            Ok(p) if p >= 1 => Ok(p),
            _ => Err(CliError::parse(format!(
                "{arg}: {s:?} is not a positive integer"
            ))),
        }
    };
    match (head, nums.as_slice()) {
        ("rho", [p]) => Ok(Some(format!("a=a,b={}", "b".repeat(num(p)?)))),
        ("tm-like", [p, q]) => Ok(Some(format!(
            "a=a{},b=b{}",
            "b".repeat(num(p)?),
            "a".repeat(num(q)?)
        ))),
        ("rho" | "tm-like", _) => Err(CliError::parse(format!(
            "{arg}: wrong number of parameters"
        ))),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inferred_order_is_ascii() {
        let l = Letters::inferred(["ba$", "c"]).unwrap();
        assert_eq!(l.declaration(), "$abc");
        assert_eq!(Letters::inferred([""]).unwrap().declaration(), "ab");
        assert_eq!(Letters::inferred(["aaa"]).unwrap().declaration(), "ab");
    }

    #[test]
    fn text_and_json_agree() {
        let a = MorphismText::parse("a=ab,b=ba").unwrap();
        let b = MorphismText::parse(r#"{"images": {"a": "ab", "b": "ba"}}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(MorphismText::parse("thue-morse").unwrap(), a);
    }

    #[test]
    fn parameterised_names() {
        let l = Letters::inferred(["ab"]).unwrap();
        let rho = MorphismText::parse("rho:3").unwrap().bind(&l).unwrap();
        assert_eq!(rho, Morphism::rho(3));
        let tm = MorphismText::parse("tm-like:1:2")
            .unwrap()
            .bind(&l)
            .unwrap();
        assert_eq!(tm, Morphism::tm_like(1, 2));
        assert!(MorphismText::parse("rho:0").is_err());
        assert!(MorphismText::parse("rho:1:2").is_err());
    }

    #[test]
    fn listing_must_follow_alphabet() {
        let l = Letters::inferred(["ab"]).unwrap();
        assert!(MorphismText::parse("b=a,a=b").unwrap().bind(&l).is_err());
        let round = MorphismText::parse("a=ab,b=a").unwrap().bind(&l).unwrap();
        assert_eq!(l.render_morphism(&round), "a=ab,b=a");
    }

    #[test]
    fn dollar_alphabet() {
        let l = Letters::declared("$ab").unwrap();
        let m = MorphismText::parse("fib-dollar").unwrap().bind(&l).unwrap();
        assert_eq!(m, bwtrun_core::sensitivity::fibonacci_dollar());
        assert!(Letters::declared("aa").is_err());
    }
}
