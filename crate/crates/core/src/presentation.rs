//! Line-oriented presentation files:
//!
//! ```text
//! # Pham–Brieskorn surface
//! field: Q
//! vars: x y z
//! weights: 6 10 15
//! rel: x^5 + y^3 + z^2
//! ```
//!
//! `field:` and `vars:` come first, `weights:` is optional, and any number
//! of `rel:` lines follow (none means a polynomial ring).

use std::fmt;

use crate::graded::{homogeneity, Homogeneity, PresentedAlgebra, WeightVector};
use crate::parse::parse_poly;
use crate::poly::{Poly, Ring};
use crate::scalar::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationError {
    pub message: String,
    /// 1-based; 0 means the end of the file.
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "end of file: {}", self.message)
        } else {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        }
    }
}

impl std::error::Error for PresentationError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> PresentationError {
    PresentationError {
        message: message.into(),
        line,
        column,
    }
}

pub fn parse_presentation(text: &str) -> Result<PresentedAlgebra, PresentationError> {
    let mut field: Option<FieldSpec> = None;
    let mut ring: Option<std::sync::Arc<Ring>> = None;
    let mut weights: Option<(usize, WeightVector)> = None;
    let mut rels: Vec<(usize, usize, Poly)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(err(lineno, 1, "expected `key: value`"));
        };
        let vcol = key.len() + 2 + (value.len() - value.trim_start().len());
        let value = value.trim();
        match key.trim() {
            "field" => {
                if field.is_some() {
                    return Err(err(lineno, 1, "duplicate `field:` line"));
                }
                field = Some(value.parse().map_err(|e: crate::Error| err(lineno, vcol, e.to_string()))?);
            }
            "vars" => {
                let f = field.ok_or_else(|| err(lineno, 1, "`field:` must come before `vars:`"))?;
                if ring.is_some() {
                    return Err(err(lineno, 1, "duplicate `vars:` line"));
                }
                let names: Vec<&str> = value.split_whitespace().collect();
                if names.is_empty() {
                    return Err(err(lineno, vcol, "no variables given"));
                }
                ring = Some(Ring::new(f, names).map_err(|e| err(lineno, vcol, e.to_string()))?);
            }
            "weights" => {
                let r = ring.as_ref().ok_or_else(|| err(lineno, 1, "`vars:` must come before `weights:`"))?;
                if weights.is_some() {
                    return Err(err(lineno, 1, "duplicate `weights:` line"));
                }
                if !rels.is_empty() {
                    return Err(err(lineno, 1, "`weights:` must come before `rel:` lines"));
                }
                let ws = value
                    .split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| err(lineno, vcol, format!("bad weight `{t}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                if ws.len() != r.nvars() {
                    return Err(err(lineno, vcol, format!("{} weights for {} variables", ws.len(), r.nvars())));
                }
                weights = Some((lineno, ws.into()));
            }
            "rel" => {
                let r = ring.as_ref().ok_or_else(|| err(lineno, 1, "`vars:` must come before `rel:`"))?;
                let p = parse_poly(value, r).map_err(|e| err(lineno, vcol + e.position().unwrap_or(0), e.to_string()))?;
                if p.is_zero() {
                    return Err(err(lineno, vcol, "relation is zero"));
                }
                if let Some((_, w)) = &weights {
                    if homogeneity(&p, w).map_err(|e| err(lineno, vcol, e.to_string()))? == Homogeneity::NotHomogeneous {
                        return Err(err(lineno, vcol, format!("relation `{p}` is not homogeneous under weights {w}")));
                    }
                }
                rels.push((lineno, vcol, p));
            }
            other => return Err(err(lineno, 1, format!("unknown key `{other}`"))),
        }
    }
    field.ok_or_else(|| err(0, 0, "missing `field:` line"))?;
    let ring = ring.ok_or_else(|| err(0, 0, "missing `vars:` line"))?;
    let relations = rels.into_iter().map(|(_, _, p)| p).collect();
    PresentedAlgebra::new(ring, relations, weights.map(|(_, w)| w)).map_err(|e| err(0, 0, e.to_string()))
}

/// Inverse of [`parse_presentation`]; `notes` become leading comments.
pub fn format_presentation(alg: &PresentedAlgebra, notes: &[String]) -> String {
    let mut out = String::new();
    for n in notes {
        out.push_str(&format!("# {n}\n"));
    }
    out.push_str(&format!("field: {}\n", alg.ring().field()));
    out.push_str(&format!("vars: {}\n", alg.ring().vars().join(" ")));
    if let Some(w) = alg.weights() {
        let ws: Vec<String> = w.as_slice().iter().map(i64::to_string).collect();
        out.push_str(&format!("weights: {}\n", ws.join(" ")));
    }
    for r in alg.relations() {
        out.push_str(&format!("rel: {r}\n"));
    }
    out
}
