//! Framework file formats and result rendering.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::argset::ArgSet;
use crate::bbu::ExtensionSet;
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::labelling::{Labelling, LabellingSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    #[default]
    Tgf,
    Apx,
}

pub fn parse(text: &str, format: InputFormat) -> Result<Framework> {
    match format {
        InputFormat::Tgf => parse_tgf(text),
        InputFormat::Apx => parse_apx(text),
    }
}

/// Trivial Graph Format: one argument per line, a `#` line, then `attacker target` lines.
/// Blank lines are skipped and anything after the first token of an argument line (or the
/// second token of an attack line) is ignored as a label.
pub fn parse_tgf(text: &str) -> Result<Framework> {
    let mut args: Vec<&str> = Vec::new();
    let mut attacks = Vec::new();
    let mut in_attacks = false;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if in_attacks {
                return Err(Error::parse(i + 1, "second `#` separator"));
            }
            in_attacks = true;
            continue;
        }
        let mut tokens = line.split_whitespace();
        if in_attacks {
            match (tokens.next(), tokens.next()) {
                (Some(a), Some(b)) => attacks.push((a, b, i + 1)),
                _ => return Err(Error::parse(i + 1, "attack lines need two arguments")),
            }
        } else {
            args.push(tokens.next().unwrap_or_default());
        }
    }
    if !in_attacks {
        return Err(Error::parse(
            text.lines().count().max(1),
            "missing `#` separator",
        ));
    }
    build(args, attacks)
}

fn build(args: Vec<&str>, attacks: Vec<(&str, &str, usize)>) -> Result<Framework> {
    let declared: std::collections::HashSet<&str> = args.iter().copied().collect();
    for &(a, b, line) in &attacks {
        for end in [a, b] {
            if !declared.contains(end) {
                return Err(Error::parse(line, format!("undeclared argument `{end}`")));
            }
        }
    }
    Framework::new(args, attacks.into_iter().map(|(a, b, _)| (a, b)))
}

/// Aspartix facts `arg(x).` and `att(x,y).` in any order; `%` starts a comment.
pub fn parse_apx(text: &str) -> Result<Framework> {
    let mut args = Vec::new();
    let mut attacks = Vec::new();
    let mut fact = String::new();
    let mut fact_line = 0;
    for (i, line) in text.lines().enumerate() {
        let line = line.split('%').next().unwrap_or_default();
        for ch in line.chars() {
            if ch == '.' {
                parse_fact(&fact, fact_line, &mut args, &mut attacks)?;
                fact.clear();
            } else if !ch.is_whitespace() {
                if fact.is_empty() {
                    fact_line = i + 1;
                }
                fact.push(ch);
            }
        }
    }
    if !fact.is_empty() {
        return Err(Error::parse(
            fact_line,
            format!("unterminated fact `{fact}`"),
        ));
    }
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let attacks = attacks
        .iter()
        .map(|(a, b, l): &(String, String, usize)| (a.as_str(), b.as_str(), *l))
        .collect();
    build(args, attacks)
}

fn parse_fact(
    fact: &str,
    line: usize,
    args: &mut Vec<String>,
    attacks: &mut Vec<(String, String, usize)>,
) -> Result<()> {
    let bad = || Error::parse(line, format!("malformed fact `{fact}`"));
    let (head, rest) = fact.split_once('(').ok_or_else(bad)?;
    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
    if inner.contains(['(', ')']) {
        return Err(bad());
    }
    match head {
        "arg" if !inner.is_empty() && !inner.contains(',') => args.push(inner.to_string()),
        "att" => {
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            if a.is_empty() || b.is_empty() || b.contains(',') {
                return Err(bad());
            }
            attacks.push((a.to_string(), b.to_string(), line));
        }
        _ => return Err(bad()),
    }
    Ok(())
}

pub fn emit_tgf(fw: &Framework) -> String {
    let mut out = String::new();
    for name in fw.names() {
        writeln!(out, "{name}").unwrap();
    }
    out.push_str("#\n");
    for (a, b) in fw.attack_names() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

pub fn emit_apx(fw: &Framework) -> String {
    let mut out = String::new();
    for name in fw.names() {
        writeln!(out, "arg({name}).").unwrap();
    }
    for (a, b) in fw.attack_names() {
        writeln!(out, "att({a},{b}).").unwrap();
    }
    out
}

/// Names of the members, sorted.
pub fn sorted_names(fw: &Framework, set: &ArgSet) -> Vec<String> {
    let mut names: Vec<String> = fw.names_of(set).into_iter().map(String::from).collect();
    names.sort();
    names
}

fn labelling_value(fw: &Framework, l: &Labelling) -> Value {
    let named = l.named(fw);
    json!({ "in": named.ins, "out": named.outs, "undec": named.undecs })
}

/// `{"in":[..],"out":[..],"undec":[..]}` with each list sorted by name.
pub fn labelling_json(fw: &Framework, l: &Labelling) -> String {
    labelling_value(fw, l).to_string()
}

pub fn labelling_text(fw: &Framework, l: &Labelling) -> String {
    let named = l.named(fw);
    format!(
        "in=[{}] out=[{}] undec=[{}]",
        named.ins.join(","),
        named.outs.join(","),
        named.undecs.join(",")
    )
}

/// Members ordered by their sorted in-list.
pub fn sorted_labellings<'a>(fw: &Framework, set: &'a LabellingSet) -> Vec<&'a Labelling> {
    let mut items: Vec<(Vec<String>, &Labelling)> = set
        .iter()
        .map(|l| (sorted_names(fw, &l.in_set()), l))
        .collect();
    items.sort();
    items.into_iter().map(|(_, l)| l).collect()
}

pub fn labellings_json(fw: &Framework, set: &LabellingSet) -> String {
    Value::Array(
        sorted_labellings(fw, set)
            .into_iter()
            .map(|l| labelling_value(fw, l))
            .collect(),
    )
    .to_string()
}

pub fn labellings_text(fw: &Framework, set: &LabellingSet) -> String {
    sorted_labellings(fw, set)
        .into_iter()
        .map(|l| labelling_text(fw, l) + "\n")
        .collect()
}

pub fn sorted_extensions(fw: &Framework, exts: &ExtensionSet) -> Vec<Vec<String>> {
    let mut items: Vec<Vec<String>> = exts.iter().map(|e| sorted_names(fw, e)).collect();
    items.sort();
    items
}

pub fn extension_json(fw: &Framework, e: &ArgSet) -> String {
    json!(sorted_names(fw, e)).to_string()
}

pub fn extension_text(fw: &Framework, e: &ArgSet) -> String {
    format!("[{}]", sorted_names(fw, e).join(","))
}

pub fn extensions_json(fw: &Framework, exts: &ExtensionSet) -> String {
    json!(sorted_extensions(fw, exts)).to_string()
}

pub fn extensions_text(fw: &Framework, exts: &ExtensionSet) -> String {
    sorted_extensions(fw, exts)
        .into_iter()
        .map(|e| format!("[{}]\n", e.join(",")))
        .collect()
}

pub fn yes_no(answer: bool) -> &'static str {
    if answer {
        "YES"
    } else {
        "NO"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tgf_basic() {
        let fw = parse_tgf("a\nb\n#\na b\n").unwrap();
        assert_eq!(fw.attack_names().collect::<Vec<_>>(), [("a", "b")]);
        let selfish = parse_tgf("a\n#\na a\n").unwrap();
        assert!(selfish.attacks_arg(0, 0));
    }

    #[test]
    fn tgf_errors() {
        assert!(matches!(parse_tgf("a\nb\na b\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_tgf("a\n#\na c\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_tgf("a\n#\na\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn apx_order_insensitive() {
        let x = parse_apx("arg(a). arg(b). att(a,b).").unwrap();
        let y = parse_apx("att(a,b).\narg(a). % comment. with dots\n arg( b ).").unwrap();
        assert_eq!(x, y);
        assert!(parse_apx("arg(a). att(a,b).").is_err());
        assert!(parse_apx("arg(a) arg(b).").is_err());
        assert!(parse_apx("arg(a").is_err());
    }

    #[test]
    fn labelling_json_is_sorted() {
        let fw = parse_tgf("c\nb\na\n#\na b\n").unwrap();
        let l = Labelling::from_names(&fw, ["c", "a"], ["b"]).unwrap();
        assert_eq!(
            labelling_json(&fw, &l),
            r#"{"in":["a","c"],"out":["b"],"undec":[]}"#
        );
        let fw2 = parse_tgf("a\nb\n#\n").unwrap();
        assert_eq!(
            labelling_json(&fw2, &Labelling::all_undec(2)),
            r#"{"in":[],"out":[],"undec":["a","b"]}"#
        );
    }

    #[test]
    fn emit_round_trips() {
        let fw = parse_tgf("x\ny\nz\n#\nx y\ny z\nz z\n").unwrap();
        assert_eq!(parse_tgf(&emit_tgf(&fw)).unwrap(), fw);
        assert_eq!(parse_apx(&emit_apx(&fw)).unwrap(), fw);
    }
}
