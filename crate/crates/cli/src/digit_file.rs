//! Digit files and the compact digit notation.
//!
//! A digit file is line oriented and starts with a version header:
//!
//! ```text
//! # bcf digits v1
//! m = 3
//! head[1] = 1
//! head[2] = 1
//! head[3] = 1
//! cycle[1] = 1 1 2
//! cycle[2] = 0 0 1
//! cycle[3] = 0 0 1
//! source = alg:...
//! ```
//!
//! `m`, `head[k]`, `cycle[k]` and `terminated` carry the digits; any other
//! key is metadata, kept in order. Files written by [`DigitFile::to_text`]
//! load and save byte-identically.
//!
//! The compact notation writes each sequence as head digits followed by an
//! optional parenthesised cycle, sequences separated by `/`, e.g.
//! `1(112)/(100)/(100)`. Digits are single characters unless the sequence
//! contains spaces or commas, in which case those separate the digits.

use bcf_core::evaluation::DigitSpec;
use num_bigint::BigInt;
use serde_json::Value;

use crate::{CliError, CliResult};

pub const HEADER: &str = "# bcf digits v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitFile {
    pub spec: DigitSpec,
    pub terminated_at: Option<usize>,
    pub meta: Vec<(String, String)>,
}

fn err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

impl DigitFile {
    pub fn new(spec: DigitSpec) -> Self {
        DigitFile {
            spec,
            terminated_at: None,
            meta: Vec::new(),
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<String>) -> Self {
        self.meta.push((key.to_string(), value.into()));
        self
    }

    /// Reads either the text format or a JSON document carrying `head` and
    /// optional `cycle`.
    pub fn parse(text: &str) -> CliResult<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    fn parse_text(text: &str) -> CliResult<Self> {
        let mut lines = text.lines();
        if lines.next() != Some(HEADER) {
            return Err(err(format!("digit file must start with '{HEADER}'")));
        }
        let mut m: Option<usize> = None;
        let mut head: Vec<Option<Vec<BigInt>>> = Vec::new();
        let mut cycle: Vec<Option<Vec<BigInt>>> = Vec::new();
        let mut terminated_at = None;
        let mut meta = Vec::new();
        for (n, line) in lines.enumerate() {
            let lineno = n + 2;
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(" =")
                .ok_or_else(|| err(format!("line {lineno}: expected 'key = value'")))?;
            let value = value.strip_prefix(' ').unwrap_or(value);
            if key == "m" {
                let order: usize = value
                    .parse()
                    .map_err(|_| err(format!("line {lineno}: bad order")))?;
                if order == 0 || m.is_some() {
                    return Err(err(format!("line {lineno}: bad or repeated m")));
                }
                m = Some(order);
                head = vec![None; order];
                cycle = vec![None; order];
            } else if key == "terminated" {
                terminated_at = Some(
                    value
                        .parse()
                        .map_err(|_| err(format!("line {lineno}: bad step index")))?,
                );
            } else if let Some((kind, k)) = indexed_key(key) {
                let order = m.ok_or_else(|| err(format!("line {lineno}: m must come first")))?;
                if k == 0 || k > order {
                    return Err(err(format!("line {lineno}: sequence index out of range")));
                }
                let slot = if kind == "head" {
                    &mut head[k - 1]
                } else {
                    &mut cycle[k - 1]
                };
                if slot.replace(parse_digit_list(value, lineno)?).is_some() {
                    return Err(err(format!("line {lineno}: repeated {key}")));
                }
            } else {
                meta.push((key.to_string(), value.to_string()));
            }
        }
        m.ok_or_else(|| err("digit file lacks m"))?;
        let head: Vec<Vec<BigInt>> = head
            .into_iter()
            .map(|s| s.ok_or_else(|| err("every head[k] line is required")))
            .collect::<CliResult<_>>()?;
        let cycle = if cycle.iter().all(Option::is_none) {
            None
        } else {
            Some(
                cycle
                    .into_iter()
                    .map(|s| s.ok_or_else(|| err("cycle must list every sequence")))
                    .collect::<CliResult<Vec<_>>>()?,
            )
        };
        Ok(DigitFile {
            spec: DigitSpec::new(head, cycle)?,
            terminated_at,
            meta,
        })
    }

    fn parse_json(text: &str) -> CliResult<Self> {
        let doc: Value = serde_json::from_str(text).map_err(|e| err(format!("bad JSON: {e}")))?;
        let seqs = |v: &Value| -> CliResult<Vec<Vec<BigInt>>> {
            v.as_array()
                .ok_or_else(|| err("expected an array of digit arrays"))?
                .iter()
                .map(|seq| {
                    seq.as_array()
                        .ok_or_else(|| err("expected a digit array"))?
                        .iter()
                        .map(json_digit)
                        .collect()
                })
                .collect()
        };
        let head = seqs(
            doc.get("head")
                .ok_or_else(|| err("JSON digits need 'head'"))?,
        )?;
        let cycle = match doc.get("cycle") {
            None | Some(Value::Null) => None,
            Some(c) => Some(seqs(c)?),
        };
        if let Some(m) = doc.get("m").and_then(Value::as_u64) {
            if m as usize != head.len() {
                return Err(err("'m' disagrees with 'head'"));
            }
        }
        let terminated_at = doc
            .get("terminated_at")
            .and_then(Value::as_u64)
            .map(|t| t as usize);
        Ok(DigitFile {
            spec: DigitSpec::new(head, cycle)?,
            terminated_at,
            meta: Vec::new(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(HEADER);
        out.push('\n');
        out.push_str(&format!("m = {}\n", self.spec.order()));
        for (k, seq) in self.spec.head().iter().enumerate() {
            out.push_str(&kv(&format!("head[{}]", k + 1), &digit_list(seq)));
        }
        if let Some(cycle) = self.spec.cycle() {
            for (k, seq) in cycle.iter().enumerate() {
                out.push_str(&kv(&format!("cycle[{}]", k + 1), &digit_list(seq)));
            }
        }
        if let Some(t) = self.terminated_at {
            out.push_str(&kv("terminated", &t.to_string()));
        }
        for (key, value) in &self.meta {
            out.push_str(&kv(key, value));
        }
        out
    }
}

fn kv(key: &str, value: &str) -> String {
    if value.is_empty() {
        format!("{key} =\n")
    } else {
        format!("{key} = {value}\n")
    }
}

fn indexed_key(key: &str) -> Option<(&str, usize)> {
    let (kind, rest) = key.split_once('[')?;
    if kind != "head" && kind != "cycle" {
        return None;
    }
    let index = rest.strip_suffix(']')?.parse().ok()?;
    Some((kind, index))
}

fn parse_digit_list(value: &str, lineno: usize) -> CliResult<Vec<BigInt>> {
    value
        .split_whitespace()
        .map(|d| {
            d.parse::<BigInt>()
                .map_err(|_| err(format!("line {lineno}: bad digit '{d}'")))
        })
        .collect()
}

fn json_digit(v: &Value) -> CliResult<BigInt> {
    match v {
        Value::String(s) => s.parse().map_err(|_| err(format!("bad digit '{s}'"))),
        Value::Number(n) if n.is_u64() => Ok(BigInt::from(n.as_u64().unwrap())),
        other => Err(err(format!("bad digit {other}"))),
    }
}

fn digit_list(seq: &[BigInt]) -> String {
    seq.iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Compact notation such as `1(112)/(100)/(100)`. Each sequence is shown
/// with its shortest head: trailing head digits that continue the cycle
/// backwards are folded into a rotated cycle.
pub fn notation(spec: &DigitSpec) -> String {
    let all_small = spec
        .head()
        .iter()
        .chain(spec.cycle().into_iter().flatten())
        .flatten()
        .all(|d| *d < BigInt::from(10));
    let render = |seq: &[BigInt]| {
        let sep = if all_small { "" } else { " " };
        seq.iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    };
    (0..spec.order())
        .map(|k| {
            let mut head = spec.head()[k].clone();
            let Some(cycle) = spec.cycle() else {
                return render(&head);
            };
            let mut cycle = cycle[k].clone();
            while head.last().is_some() && head.last() == cycle.last() {
                head.pop();
                cycle.rotate_right(1);
            }
            let mut s = render(&head);
            if !all_small && !s.is_empty() {
                s.push(' ');
            }
            format!("{s}({})", render(&cycle))
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Parses the compact notation. Sequences may have heads and cycles of
/// different lengths; they are aligned to a common head and a cycle whose
/// length is the lcm of the individual ones.
pub fn parse_notation(text: &str) -> CliResult<DigitSpec> {
    let bad = |why: &str| err(format!("bad digit notation '{text}': {why}"));
    let mut heads = Vec::new();
    let mut cycles = Vec::new();
    for part in text.split('/') {
        let part = part.trim();
        let (head, cycle) = match part.find('(') {
            Some(open) => {
                let close = part.rfind(')').ok_or_else(|| bad("unclosed '('"))?;
                if close != part.len() - 1 || close < open {
                    return Err(bad("cycle must close the sequence"));
                }
                (&part[..open], Some(&part[open + 1..close]))
            }
            None => (part, None),
        };
        let split = |s: &str| -> CliResult<Vec<BigInt>> {
            if s.contains([' ', ',']) {
                s.split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| bad("bad digit")))
                    .collect()
            } else {
                s.trim()
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(BigInt::from)
                            .ok_or_else(|| bad("bad digit"))
                    })
                    .collect()
            }
        };
        heads.push(split(head)?);
        cycles.push(cycle.map(split).transpose()?);
    }
    match cycles.iter().filter(|c| c.is_some()).count() {
        0 => Ok(DigitSpec::new(heads, None)?),
        n if n == cycles.len() => {
            let cycles: Vec<Vec<BigInt>> = cycles.into_iter().map(Option::unwrap).collect();
            if cycles.iter().any(Vec::is_empty) {
                return Err(bad("empty cycle"));
            }
            let lead = heads.iter().map(Vec::len).max().unwrap_or(0);
            let period = cycles.iter().map(Vec::len).fold(1, num_integer::lcm);
            let at = |k: usize, i: usize| -> BigInt {
                let (h, c) = (&heads[k], &cycles[k]);
                if i < h.len() {
                    h[i].clone()
                } else {
                    c[(i - h.len()) % c.len()].clone()
                }
            };
            let order = heads.len();
            let head = (0..order)
                .map(|k| (0..lead).map(|i| at(k, i)).collect())
                .collect();
            let cycle = (0..order)
                .map(|k| (lead..lead + period).map(|i| at(k, i)).collect())
                .collect();
            Ok(DigitSpec::new(head, Some(cycle))?)
        }
        _ => Err(bad("either every sequence has a cycle or none does")),
    }
}
