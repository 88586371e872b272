//! Plain-text formats for codes, partitions, and construction requests.
//!
//! All formats share the same skeleton: `#` starts a comment, blank lines
//! are skipped, the first significant line is a `key=value` header, and
//! every other line is a word written as space-separated symbols.
//!
//! Code file:
//!
//! ```text
//! q=2 n=3
//! 0 0 0
//! 1 1 1
//! ```
//!
//! Partition file (parts in file order, `part <name>` opens a block):
//!
//! ```text
//! q=2 n=3 parts=2
//! part P1
//! 0 0 0
//! part P2
//! 1 1 1
//! ```
//!
//! Construction file, either kind:
//!
//! ```text
//! spec=embed q=2 m=4        spec=partition q=2 s=1
//! 0 0 0                     part 1
//! 1 1 1                     0
//!                           part 2
//!                           1
//! ```
//!
//! Single words and projective points also have a compact dotted form for
//! command lines: `1.0.2` is the word (1, 0, 2).

use crate::error::{Error, Result};
use crate::geometry::ProjPoint;
use crate::gf::{create_field, El, FieldSpec};
use crate::word::Word;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

/// Parses "1.0.2" into a word over the given field.
pub fn word_from_dots(f: &FieldSpec, text: &str) -> Result<Word> {
    let symbols = text
        .split('.')
        .map(|t| {
            t.parse::<El>().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad symbol {t:?} in {text:?}"),
            })
        })
        .collect::<Result<Vec<El>>>()?;
    Word::new(f, symbols)
}

/// Formats a word in the dotted command-line form.
pub fn word_to_dots(w: &Word) -> String {
    let mut out = String::new();
    for (i, s) in w.symbols().iter().enumerate() {
        if i > 0 {
            out.push('.');
        }
        let _ = write!(out, "{s}");
    }
    out
}

/// Parses "1.0.2" into a projective point (the coordinates must already be
/// normalized: first nonzero symbol 1).
pub fn point_from_dots(f: &FieldSpec, text: &str) -> Result<ProjPoint> {
    ProjPoint::new(f, word_from_dots(f, text)?)
}

/// Significant lines of a file: (1-based line number, trimmed text) with
/// comments and blanks removed.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if stripped.is_empty() {
            None
        } else {
            Some((i + 1, stripped))
        }
    })
}

fn parse_header<'a>(line: usize, text: &'a str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let mut seen = HashMap::new();
    for token in text.split_whitespace() {
        let (k, v) = token.split_once('=').ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected key=value, got {token:?}"),
        })?;
        if seen.insert(k, v).is_some() {
            return Err(Error::Parse { line, msg: format!("duplicate header key {k:?}") });
        }
    }
    keys.iter()
        .map(|&k| {
            seen.get(k).copied().ok_or_else(|| Error::Parse {
                line,
                msg: format!("header is missing {k}="),
            })
        })
        .collect()
}

fn parse_usize(line: usize, text: &str, what: &str) -> Result<usize> {
    text.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what} value {text:?}"),
    })
}

fn parse_row(f: &FieldSpec, line: usize, text: &str, n: usize) -> Result<Word> {
    let symbols = text
        .split_whitespace()
        .map(|t| {
            t.parse::<El>().map_err(|_| Error::Parse {
                line,
                msg: format!("bad symbol {t:?}"),
            })
        })
        .collect::<Result<Vec<El>>>()?;
    if symbols.len() != n {
        return Err(Error::Parse {
            line,
            msg: format!("expected {n} symbols, got {}", symbols.len()),
        });
    }
    Word::new(f, symbols).map_err(|e| Error::Parse { line, msg: e.to_string() })
}

fn push_row(f: &mut String, w: &Word) {
    for (i, s) in w.symbols().iter().enumerate() {
        if i > 0 {
            f.push(' ');
        }
        let _ = write!(f, "{s}");
    }
    f.push('\n');
}

/// A set of words of one length over one field.
#[derive(Debug, Clone)]
pub struct CodeFile {
    pub field: FieldSpec,
    pub n: usize,
    pub words: Vec<Word>,
}

impl CodeFile {
    pub fn new(field: FieldSpec, n: usize, mut words: Vec<Word>) -> Result<CodeFile> {
        for w in &words {
            w.expect_shape(&field, n)?;
        }
        words.sort();
        Ok(CodeFile { field, n, words })
    }

    pub fn parse(text: &str) -> Result<CodeFile> {
        let mut lines = significant_lines(text);
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty file: expected a q=.. n=.. header".into(),
        })?;
        let vals = parse_header(hline, header, &["q", "n"])?;
        let q = parse_usize(hline, vals[0], "q")?;
        let n = parse_usize(hline, vals[1], "n")?;
        let field = create_field(q as u64)
            .map_err(|e| Error::Parse { line: hline, msg: e.to_string() })?;
        let mut words = Vec::new();
        let mut first_seen: HashMap<Word, usize> = HashMap::new();
        for (lineno, row) in lines {
            let w = parse_row(&field, lineno, row, n)?;
            if let Some(&prev) = first_seen.get(&w) {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("duplicate word, first listed on line {prev}"),
                });
            }
            first_seen.insert(w.clone(), lineno);
            words.push(w);
        }
        words.sort();
        Ok(CodeFile { field, n, words })
    }

    /// Serializes with the words in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("q={} n={}\n", self.field.q(), self.n);
        let mut sorted: Vec<&Word> = self.words.iter().collect();
        sorted.sort();
        for w in sorted {
            push_row(&mut out, w);
        }
        out
    }

    pub fn load(path: &Path) -> Result<CodeFile> {
        CodeFile::parse(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        Ok(std::fs::write(path, self.to_text())?)
    }
}

/// Named blocks of words, all of one length over one field. Nothing here
/// enforces that the blocks tile the space; that is
/// [`crate::partition::build_partition`]'s job.
#[derive(Debug, Clone)]
pub struct PartitionFile {
    pub field: FieldSpec,
    pub n: usize,
    pub parts: Vec<(String, Vec<Word>)>,
}

impl PartitionFile {
    pub fn parse(text: &str) -> Result<PartitionFile> {
        let mut lines = significant_lines(text);
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty file: expected a q=.. n=.. parts=.. header".into(),
        })?;
        let vals = parse_header(hline, header, &["q", "n", "parts"])?;
        let q = parse_usize(hline, vals[0], "q")?;
        let n = parse_usize(hline, vals[1], "n")?;
        let count = parse_usize(hline, vals[2], "parts")?;
        let field = create_field(q as u64)
            .map_err(|e| Error::Parse { line: hline, msg: e.to_string() })?;
        let mut parts: Vec<(String, Vec<Word>)> = Vec::new();
        let mut first_seen: HashMap<Word, usize> = HashMap::new();
        for (lineno, row) in lines {
            if let Some(name) = row.strip_prefix("part ") {
                let name = name.trim();
                if name.is_empty() {
                    return Err(Error::Parse { line: lineno, msg: "part needs a name".into() });
                }
                if parts.iter().any(|(p, _)| p == name) {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("duplicate part name {name:?}"),
                    });
                }
                parts.push((name.to_string(), Vec::new()));
                continue;
            }
            let w = parse_row(&field, lineno, row, n)?;
            if let Some(&prev) = first_seen.get(&w) {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("duplicate word, first listed on line {prev}"),
                });
            }
            first_seen.insert(w.clone(), lineno);
            match parts.last_mut() {
                Some((_, words)) => words.push(w),
                None => {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "word before the first part line".into(),
                    })
                }
            }
        }
        if parts.len() != count {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header promises {count} parts, file has {}", parts.len()),
            });
        }
        for (_, words) in &mut parts {
            words.sort();
        }
        Ok(PartitionFile { field, n, parts })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "q={} n={} parts={}\n",
            self.field.q(),
            self.n,
            self.parts.len()
        );
        for (name, words) in &self.parts {
            let _ = writeln!(out, "part {name}");
            let mut sorted: Vec<&Word> = words.iter().collect();
            sorted.sort();
            for w in sorted {
                push_row(&mut out, w);
            }
        }
        out
    }

    pub fn load(path: &Path) -> Result<PartitionFile> {
        PartitionFile::parse(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        Ok(std::fs::write(path, self.to_text())?)
    }
}

/// A construction request: either embed one code, or lift a partition.
#[derive(Debug, Clone)]
pub enum Construction {
    /// Embed the distance >= 3 code (words of length m - 1) into a
    /// 1-perfect code of length (q^m - 1)/(q - 1).
    Embed {
        field: FieldSpec,
        m: usize,
        code: Vec<Word>,
    },
    /// Lift a partition of F^s into a partition of F^n, n = (q^(s+1) - 1)/
    /// (q - 1). Classes keep their file order.
    Partition {
        field: FieldSpec,
        s: usize,
        classes: Vec<Vec<Word>>,
    },
}

impl Construction {
    pub fn parse(text: &str) -> Result<Construction> {
        let mut lines = significant_lines(text);
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty file: expected a spec=.. header".into(),
        })?;
        let kind = parse_header(hline, header, &["spec"])?[0];
        match kind {
            "embed" => {
                let vals = parse_header(hline, header, &["q", "m"])?;
                let q = parse_usize(hline, vals[0], "q")?;
                let m = parse_usize(hline, vals[1], "m")?;
                let field = create_field(q as u64)
                    .map_err(|e| Error::Parse { line: hline, msg: e.to_string() })?;
                if m < 2 {
                    return Err(Error::Parse { line: hline, msg: "embed needs m >= 2".into() });
                }
                let mut code = Vec::new();
                for (lineno, row) in lines {
                    code.push(parse_row(&field, lineno, row, m - 1)?);
                }
                Ok(Construction::Embed { field, m, code })
            }
            "partition" => {
                let vals = parse_header(hline, header, &["q", "s"])?;
                let q = parse_usize(hline, vals[0], "q")?;
                let s = parse_usize(hline, vals[1], "s")?;
                let field = create_field(q as u64)
                    .map_err(|e| Error::Parse { line: hline, msg: e.to_string() })?;
                let mut classes: Vec<Vec<Word>> = Vec::new();
                for (lineno, row) in lines {
                    if row.starts_with("part") {
                        classes.push(Vec::new());
                        continue;
                    }
                    let w = parse_row(&field, lineno, row, s)?;
                    match classes.last_mut() {
                        Some(c) => c.push(w),
                        None => {
                            return Err(Error::Parse {
                                line: lineno,
                                msg: "word before the first part line".into(),
                            })
                        }
                    }
                }
                Ok(Construction::Partition { field, s, classes })
            }
            other => Err(Error::Parse {
                line: hline,
                msg: format!("unknown spec kind {other:?} (expected embed or partition)"),
            }),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Construction::Embed { field, m, code } => {
                let mut out = format!("spec=embed q={} m={m}\n", field.q());
                let mut sorted: Vec<&Word> = code.iter().collect();
                sorted.sort();
                for w in sorted {
                    push_row(&mut out, w);
                }
                out
            }
            Construction::Partition { field, s, classes } => {
                let mut out = format!("spec=partition q={} s={s}\n", field.q());
                for (j, class) in classes.iter().enumerate() {
                    let mut sorted: Vec<&Word> = class.iter().collect();
                    sorted.sort();
                    if let Some(anchor) = sorted.first() {
                        let _ = writeln!(out, "part {} # anchor {}", j + 1, word_to_dots(anchor));
                    } else {
                        let _ = writeln!(out, "part {}", j + 1);
                    }
                    for w in sorted {
                        push_row(&mut out, w);
                    }
                }
                out
            }
        }
    }

    pub fn load(path: &Path) -> Result<Construction> {
        Construction::parse(&std::fs::read_to_string(path)?)
    }
}
