//! The object descriptor language of the command line.
//!
//! * `delta:<p>`: `Z[Δ^p]`
//! * `nerve:z<n>`: the linearized nerve of `Z/n`
//! * `const:Z`: the constant module `Z`
//! * `complex:[r0,r1,..;d1;d2;..]`: a chain complex. Rows of `d_n` are
//!   separated by `/`, entries by `,`; an empty token is an empty matrix.

use std::sync::Arc;

use crate::chain::{moore_model, ChainComplex};
use crate::dold_kan::gamma;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::monoid::SimplicialRing;
use crate::simplicial::{constant_z, free_on_nerve, free_on_standard_simplex, FiniteMonoid, SimplicialModule};

/// Largest supported simplex and cyclic group; beyond these the tensor
/// products at the default levels stop being desk-sized.
pub const MAX_SIMPLEX: usize = 6;
pub const MAX_CYCLIC: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectKind {
    Delta(usize),
    Nerve(usize),
    ConstZ,
    Complex(ChainComplex),
}

/// A parsed descriptor, materialized at whatever truncation a check needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectSpec {
    pub descriptor: String,
    pub kind: ObjectKind,
}

impl ObjectSpec {
    pub fn is_complex(&self) -> bool {
        matches!(self.kind, ObjectKind::Complex(_))
    }

    /// The simplicial module; complexes go through Γ.
    pub fn module(&self, d: usize) -> Result<Arc<SimplicialModule>> {
        let m = match &self.kind {
            ObjectKind::Delta(p) => free_on_standard_simplex(*p, d),
            ObjectKind::Nerve(n) => free_on_nerve(&FiniteMonoid::cyclic(*n), d),
            ObjectKind::ConstZ => constant_z(d),
            ObjectKind::Complex(c) => gamma(c, d)?,
        };
        Ok(Arc::new(m.renamed(self.descriptor.clone())))
    }

    /// The chain complex; simplicial modules go through the Moore model.
    pub fn complex(&self, d: usize) -> Result<Arc<ChainComplex>> {
        match &self.kind {
            ObjectKind::Complex(c) => Ok(Arc::new(c.resized(d))),
            _ => {
                let m = moore_model(self.module(d)?.as_ref())?;
                Ok(Arc::new(m.complex.as_ref().clone().renamed(self.descriptor.clone())))
            }
        }
    }

    /// Only nerves of monoids carry a ring structure here.
    pub fn ring(&self, d: usize) -> Result<Option<SimplicialRing>> {
        match &self.kind {
            ObjectKind::Nerve(n) => {
                let mut r = SimplicialRing::from_nerve(&FiniteMonoid::cyclic(*n), d)?;
                let name = self.descriptor.clone();
                r.module = Arc::new(r.module.as_ref().clone().renamed(name));
                Ok(Some(r))
            }
            _ => Ok(None),
        }
    }
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a natural number for {what}, got `{s}`")))
}

pub fn parse_object(desc: &str) -> Result<ObjectSpec> {
    let desc = desc.trim();
    let kind = if let Some(p) = desc.strip_prefix("delta:") {
        let p = parse_usize(p, "delta")?;
        if p > MAX_SIMPLEX {
            return Err(Error::Parse(format!("delta:{p} exceeds the supported delta:{MAX_SIMPLEX}")));
        }
        ObjectKind::Delta(p)
    } else if let Some(n) = desc.strip_prefix("nerve:z") {
        let n = parse_usize(n, "nerve")?;
        if n == 0 || n > MAX_CYCLIC {
            return Err(Error::Parse(format!("nerve:z{n} is outside z1..z{MAX_CYCLIC}")));
        }
        ObjectKind::Nerve(n)
    } else if desc == "const:Z" {
        ObjectKind::ConstZ
    } else if let Some(body) = desc.strip_prefix("complex:") {
        ObjectKind::Complex(parse_complex(desc, body)?)
    } else {
        return Err(Error::Parse(format!("unknown object `{desc}`")));
    };
    Ok(ObjectSpec {
        descriptor: desc.to_string(),
        kind,
    })
}

fn parse_complex(name: &str, body: &str) -> Result<ChainComplex> {
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("complex literal `{body}` needs brackets")))?;
    let mut parts = inner.split(';');
    let ranks: Vec<usize> = parts
        .next()
        .unwrap_or("")
        .split(',')
        .map(|r| parse_usize(r, "a rank"))
        .collect::<Result<_>>()?;
    let diffs: Vec<&str> = parts.collect();
    if diffs.len() + 1 != ranks.len() {
        return Err(Error::Parse(format!(
            "complex with {} ranks needs {} differentials, got {}",
            ranks.len(),
            ranks.len() - 1,
            diffs.len()
        )));
    }
    let mats = diffs
        .iter()
        .enumerate()
        .map(|(k, text)| {
            let n = k + 1;
            let (rows, cols) = (ranks[n - 1], ranks[n]);
            let text = text.trim();
            if text.is_empty() {
                return if rows == 0 || cols == 0 {
                    Ok(Matrix::zeros(rows, cols))
                } else {
                    Err(Error::Parse(format!("d{n} is empty but should be {rows}x{cols}")))
                };
            }
            let entries: Vec<Vec<i64>> = text
                .split('/')
                .map(|row| {
                    row.split(',')
                        .map(|e| {
                            e.trim()
                                .parse::<i64>()
                                .map_err(|_| Error::Parse(format!("bad entry `{e}` in d{n}")))
                        })
                        .collect()
                })
                .collect::<Result<_>>()?;
            if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
                return Err(Error::Parse(format!("d{n} should be {rows}x{cols}")));
            }
            Ok(Matrix::from_rows(&entries))
        })
        .collect::<Result<Vec<_>>>()?;
    ChainComplex::new(name, ranks, mats).map_err(|e| Error::Parse(format!("{name}: {e}")))
}

/// Splits on commas that are not inside brackets.
pub fn split_objects(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in list.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur);
    }
    out.into_iter().map(|s| s.trim().to_string()).collect()
}

pub fn parse_objects(list: &str) -> Result<Vec<ObjectSpec>> {
    split_objects(list).iter().map(|d| parse_object(d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        assert_eq!(parse_object("delta:2").unwrap().kind, ObjectKind::Delta(2));
        assert_eq!(parse_object("nerve:z2").unwrap().kind, ObjectKind::Nerve(2));
        assert_eq!(parse_object("const:Z").unwrap().kind, ObjectKind::ConstZ);
        assert!(parse_object("delta:x").is_err());
        assert!(parse_object("sphere:2").is_err());
        assert!(parse_object("delta:99").is_err());
    }

    #[test]
    fn complex_literals() {
        let c = parse_object("complex:[1,1;2]").unwrap();
        let ObjectKind::Complex(c) = c.kind else { panic!() };
        assert_eq!(c.ranks(), &[1, 1]);
        assert_eq!(c.differential(1), &Matrix::from_rows(&[vec![2]]));
        let c = parse_object("complex:[0,1;]").unwrap();
        assert!(c.is_complex());
        let c = parse_object("complex:[2,1;-1/1]").unwrap();
        let ObjectKind::Complex(c) = c.kind else { panic!() };
        assert_eq!(c.differential(1).shape(), (2, 1));
        // d∘d must vanish
        assert!(parse_object("complex:[1,1,1;1;1]").is_err());
        assert!(parse_object("complex:[1,1;1,2]").is_err());
    }

    #[test]
    fn splitting_respects_brackets() {
        let parts = split_objects("delta:1, complex:[1,1;2],nerve:z2");
        assert_eq!(parts, vec!["delta:1", "complex:[1,1;2]", "nerve:z2"]);
        assert!(parse_objects("delta:1,,delta:2").is_err());
    }

    #[test]
    fn materialization() {
        let o = parse_object("complex:[1,1;2]").unwrap();
        let m = o.module(3).unwrap();
        assert_eq!(m.name(), "complex:[1,1;2]");
        assert!(m.validate().passed());
        let c = parse_object("delta:1").unwrap().complex(2).unwrap();
        assert_eq!(c.ranks(), &[2, 1, 0]);
        assert!(parse_object("delta:1").unwrap().ring(2).unwrap().is_none());
        assert!(parse_object("nerve:z2").unwrap().ring(2).unwrap().is_some());
    }
}
