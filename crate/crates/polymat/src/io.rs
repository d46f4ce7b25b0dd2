//! File formats for the CLI: polymatroid input files and structured
//! polynomial/table output.
//!
//! Subset keys are ascending comma-separated 1-based indices (`"1,3"`); the
//! empty set is omitted. Exactly one of `rank` and `base_points` must be
//! present. All serialized output is deterministic.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::point::PointSet;
use crate::poly::SparsePoly;
use crate::polymatroid::{rank_from_points, subset_display, Polymatroid, PolymatroidError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Domain(#[from] PolymatroidError),
}

/// On-disk description of a polymatroid: either a total rank table or a
/// base-point list (which must be M-convex).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PolymatroidFile {
    pub p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cage: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<BTreeMap<String, i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_points: Option<Vec<Vec<i64>>>,
}

/// Parses a subset key like `"1,3"` into a bitmask, enforcing ascending
/// 1-based indices within `[p]`.
pub fn parse_subset_key(key: &str, p: usize) -> Result<u32, FormatError> {
    let mut mask = 0u32;
    let mut last = 0usize;
    for part in key.split(',') {
        let idx: usize = part
            .trim()
            .parse()
            .map_err(|_| FormatError::Malformed(format!("bad subset key {key:?}")))?;
        if idx == 0 || idx > p {
            return Err(FormatError::Malformed(format!(
                "subset key {key:?} references element {idx} outside [{p}]"
            )));
        }
        if idx <= last {
            return Err(FormatError::Malformed(format!(
                "subset key {key:?} is not strictly ascending"
            )));
        }
        last = idx;
        mask |= 1 << (idx - 1);
    }
    Ok(mask)
}

impl PolymatroidFile {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str(text).map_err(|e| FormatError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_polymatroid(&self) -> Result<Polymatroid, FormatError> {
        match (&self.rank, &self.base_points) {
            (Some(rank), None) => {
                let mut table = BTreeMap::new();
                for (key, &value) in rank {
                    table.insert(parse_subset_key(key, self.p)?, value);
                }
                Ok(Polymatroid::validate(self.p, self.cage.clone(), &table)?)
            }
            (None, Some(points)) => {
                let set = point_set_checked(self.p, points)?;
                let inferred = rank_from_points(&set)?;
                match &self.cage {
                    None => Ok(inferred),
                    Some(cage) => Ok(Polymatroid::from_rank_oracle(
                        self.p,
                        Some(cage.clone()),
                        |mask| inferred.rank(mask),
                    )?),
                }
            }
            _ => Err(FormatError::Malformed(
                "exactly one of `rank` and `base_points` must be present".into(),
            )),
        }
    }

    /// Canonical rank-table representation of a polymatroid.
    pub fn from_polymatroid(p: &Polymatroid) -> Self {
        let dim = p.ground_set_size();
        let mut rank = BTreeMap::new();
        for mask in 1..(1u32 << dim) {
            let key = subset_display(mask);
            rank.insert(key[1..key.len() - 1].to_string(), p.rank(mask));
        }
        PolymatroidFile {
            p: dim,
            cage: Some(p.cage().to_vec()),
            rank: Some(rank),
            base_points: None,
        }
    }
}

fn point_set_checked(p: usize, points: &[Vec<i64>]) -> Result<PointSet, FormatError> {
    for pt in points {
        if pt.len() != p {
            return Err(FormatError::Malformed(format!(
                "point {pt:?} does not have {p} coordinates"
            )));
        }
        if pt.iter().any(|&c| c < 0) {
            return Err(FormatError::Malformed(format!(
                "point {pt:?} has a negative coordinate"
            )));
        }
    }
    Ok(PointSet::new(p, points.to_vec()))
}

/// Structured polynomial output: terms in descending lexicographic order on
/// exponents, coefficients rendered exactly (`"3"` or `"-1/2"`).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolynomialOutput {
    pub vars: Vec<String>,
    pub terms: Vec<PolynomialTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolynomialTerm {
    pub exp: Vec<i64>,
    pub coeff: String,
}

/// Variable names `t_1, …, t_p`, or `t_0, …, t_p` for homogenized output.
pub fn var_names(nvars: usize, homogenized: bool) -> Vec<String> {
    if homogenized {
        (0..nvars).map(|i| format!("t{i}")).collect()
    } else {
        (1..=nvars).map(|i| format!("t{i}")).collect()
    }
}

impl PolynomialOutput {
    pub fn from_poly(f: &SparsePoly, vars: Vec<String>) -> Self {
        assert_eq!(vars.len(), f.nvars());
        let terms = f
            .terms_desc()
            .map(|(exp, c)| PolynomialTerm {
                exp: exp.clone(),
                coeff: render_rational(c),
            })
            .collect();
        PolynomialOutput { vars, terms }
    }

    pub fn to_poly(&self) -> Result<SparsePoly, FormatError> {
        let mut f = SparsePoly::zero(self.vars.len());
        for term in &self.terms {
            if term.exp.len() != self.vars.len() {
                return Err(FormatError::Malformed(format!(
                    "term exponent {:?} does not match {} variables",
                    term.exp,
                    self.vars.len()
                )));
            }
            let coeff: BigRational = term
                .coeff
                .parse()
                .map_err(|_| FormatError::Malformed(format!("bad coefficient {:?}", term.coeff)))?;
            f.add_term(term.exp.clone(), coeff);
        }
        Ok(f)
    }
}

pub fn render_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// CSV rows for a Möbius table: `n1,…,np,value`.
pub fn mobius_csv(table: &crate::invariants::MobiusTable) -> String {
    let mut out = String::new();
    let header: Vec<String> = (1..=table.dim()).map(|i| format!("n{i}")).collect();
    out.push_str(&header.join(","));
    out.push_str(",mu\n");
    for (n, v) in table.iter() {
        let coords: Vec<String> = n.iter().map(|c| c.to_string()).collect();
        out.push_str(&coords.join(","));
        out.push_str(&format!(",{v}\n"));
    }
    out
}

/// CSV rows for a Betti table: `i,b1,…,bp,value`.
pub fn betti_csv(table: &crate::syzygy::BettiTable, nvars: usize) -> String {
    let mut out = String::from("i,");
    let header: Vec<String> = (1..=nvars).map(|i| format!("b{i}")).collect();
    out.push_str(&header.join(","));
    out.push_str(",beta\n");
    for (i, b, v) in table.iter() {
        let coords: Vec<String> = b.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("{i},{},{v}\n", coords.join(",")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::rat;

    #[test]
    fn rank_table_round_trip() {
        let p = fixtures::paper_example();
        let file = PolymatroidFile::from_polymatroid(&p);
        let json = file.to_json();
        let reparsed = PolymatroidFile::from_json(&json).unwrap();
        assert_eq!(reparsed, file);
        assert_eq!(reparsed.to_polymatroid().unwrap(), p);
    }

    #[test]
    fn base_points_input() {
        let file = PolymatroidFile {
            p: 2,
            cage: None,
            rank: None,
            base_points: Some(vec![vec![1, 0], vec![0, 1]]),
        };
        assert_eq!(file.to_polymatroid().unwrap(), fixtures::u12());
    }

    #[test]
    fn base_points_must_be_mconvex() {
        let file = PolymatroidFile {
            p: 2,
            cage: None,
            rank: None,
            base_points: Some(vec![vec![2, 0], vec![0, 2]]),
        };
        assert!(matches!(
            file.to_polymatroid().unwrap_err(),
            FormatError::Domain(PolymatroidError::NotMConvex)
        ));
    }

    #[test]
    fn both_or_neither_input_is_malformed() {
        let neither = PolymatroidFile {
            p: 2,
            cage: None,
            rank: None,
            base_points: None,
        };
        assert!(matches!(
            neither.to_polymatroid().unwrap_err(),
            FormatError::Malformed(_)
        ));
    }

    #[test]
    fn subset_keys_are_validated() {
        assert_eq!(parse_subset_key("1,3", 3).unwrap(), 0b101);
        assert!(parse_subset_key("3,1", 3).is_err());
        assert!(parse_subset_key("0", 3).is_err());
        assert!(parse_subset_key("4", 3).is_err());
        assert!(parse_subset_key("x", 3).is_err());
    }

    #[test]
    fn polynomial_output_round_trip() {
        let f = fixtures::printed_cave_dual();
        let out = PolynomialOutput::from_poly(&f, var_names(3, false));
        let json = serde_json::to_string(&out).unwrap();
        let reparsed: PolynomialOutput = serde_json::from_str(&json).unwrap();
        assert_eq!(reparsed.to_poly().unwrap(), f);
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(render_rational(&rat(-2)), "-2");
        assert_eq!(
            render_rational(&BigRational::new(1.into(), 2.into())),
            "1/2"
        );
    }
}
