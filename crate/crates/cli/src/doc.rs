//! The matrix document format: a small line-based key/value file that
//! either lists every strict upper-triangle entry of a skew-symmetric
//! matrix or names one of the built-in entry patterns.
//!
//! ```text
//! # comments run to end of line, blank lines are skipped
//! size = 6
//! pattern = generic          # generic | ones | xiyj | xdiff | xydiff | block-det
//! ```
//!
//! or, with explicit entries (one per upper position, `i < j`):
//!
//! ```text
//! size = 4
//! 1,2 = 0
//! 1,3 = l + 3
//! 1,4 = 1
//! 2,3 = x[1]*y[2]
//! 2,4 = -2
//! 3,4 = 1
//! ```
//!
//! A document carries either a pattern or entries, never both.

use lambda_pfaffian::identities;
use lambda_pfaffian::pfaffian::SkewMatrix;
use lambda_pfaffian::ring::Polynomial;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PatternName {
    Generic,
    Ones,
    Xiyj,
    Xdiff,
    Xydiff,
    BlockDet,
}

impl PatternName {
    pub fn parse(s: &str) -> Option<PatternName> {
        match s {
            "generic" => Some(PatternName::Generic),
            "ones" => Some(PatternName::Ones),
            "xiyj" => Some(PatternName::Xiyj),
            "xdiff" => Some(PatternName::Xdiff),
            "xydiff" => Some(PatternName::Xydiff),
            "block-det" => Some(PatternName::BlockDet),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum DocBody {
    Pattern(PatternName),
    Entries(BTreeMap<(u32, u32), Polynomial>),
}

#[derive(Clone, Debug)]
pub struct MatrixDocument {
    pub size: u32,
    pub body: DocBody,
}

pub fn parse_document(text: &str) -> Result<MatrixDocument, String> {
    let mut size: Option<u32> = None;
    let mut pattern: Option<PatternName> = None;
    let mut entries: BTreeMap<(u32, u32), Polynomial> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("line {lineno}: expected 'key = value'"));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "size" => {
                let n: u32 = value
                    .parse()
                    .map_err(|_| format!("line {lineno}: size must be a positive integer"))?;
                if size.replace(n).is_some() {
                    return Err(format!("line {lineno}: duplicate size"));
                }
            }
            "pattern" => {
                let p = PatternName::parse(value).ok_or_else(|| {
                    format!(
                        "line {lineno}: unknown pattern '{value}' \
                         (generic|ones|xiyj|xdiff|xydiff|block-det)"
                    )
                })?;
                if pattern.replace(p).is_some() {
                    return Err(format!("line {lineno}: duplicate pattern"));
                }
            }
            _ => {
                let Some((i, j)) = key.split_once(',') else {
                    return Err(format!("line {lineno}: unknown key '{key}'"));
                };
                let i: u32 = i
                    .trim()
                    .parse()
                    .map_err(|_| format!("line {lineno}: bad row index"))?;
                let j: u32 = j
                    .trim()
                    .parse()
                    .map_err(|_| format!("line {lineno}: bad column index"))?;
                if !(i >= 1 && i < j) {
                    return Err(format!("line {lineno}: entry key must satisfy 1 <= i < j"));
                }
                let poly = Polynomial::parse(value)
                    .map_err(|e| format!("line {lineno}: {e}"))?;
                if entries.insert((i, j), poly).is_some() {
                    return Err(format!("line {lineno}: duplicate entry {i},{j}"));
                }
            }
        }
    }
    let Some(size) = size else {
        return Err("document is missing 'size'".to_string());
    };
    if size == 0 || size % 2 != 0 {
        return Err(format!("size must be even and positive, got {size}"));
    }
    match (pattern, entries.is_empty()) {
        (Some(p), true) => Ok(MatrixDocument { size, body: DocBody::Pattern(p) }),
        (None, false) => Ok(MatrixDocument { size, body: DocBody::Entries(entries) }),
        (Some(_), false) => Err("document has both a pattern and explicit entries".to_string()),
        (None, true) => Err("document needs a pattern or explicit entries".to_string()),
    }
}

pub fn build_matrix(doc: &MatrixDocument) -> Result<SkewMatrix, String> {
    let n_pairs = doc.size / 2;
    match &doc.body {
        DocBody::Pattern(p) => Ok(match p {
            PatternName::Generic => SkewMatrix::generic(n_pairs),
            PatternName::Ones => identities::ones_matrix(n_pairs),
            PatternName::Xiyj => identities::xiyj_matrix(n_pairs),
            PatternName::Xdiff => identities::xdiff_matrix(n_pairs),
            PatternName::Xydiff => identities::xydiff_matrix(n_pairs),
            PatternName::BlockDet => identities::block_matrix(n_pairs),
        }),
        DocBody::Entries(entries) => {
            let index_set: Vec<u32> = (1..=doc.size).collect();
            let listed: Vec<((u32, u32), Polynomial)> =
                entries.iter().map(|(&k, p)| (k, p.clone())).collect();
            SkewMatrix::new(index_set, listed).map_err(|e| e.to_string())
        }
    }
}
