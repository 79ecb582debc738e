//! JSON schemas for algebras and semigroups.
//!
//! Algebra files store the sparse bracket list with 0-based indices `i < j`
//! and reduced `num`/`den` rationals. Semigroup files store the raw
//! multiplication table with 1-based element values. Expanded algebras add
//! an `expansion` annotation carrying the base and the semigroup.

use std::path::Path;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::expansion::{s_expand, ExpandedAlgebra};
use crate::liecore::LieAlgebra;
use crate::ratlin::{rat, Rat};
use crate::semigroups::Semigroup;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub k: usize,
    pub num: i64,
    pub den: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraJson {
    pub name: String,
    pub dim: usize,
    pub generators: Vec<String>,
    pub brackets: Vec<BracketJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expansion: Option<Box<ExpansionJson>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExpansionJson {
    pub semigroup: SemigroupJson,
    pub base: AlgebraJson,
    pub index_map: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SemigroupJson {
    pub name: String,
    pub order: usize,
    /// 1-based element values.
    pub table: Vec<Vec<usize>>,
}

fn rat_to_pair(r: &Rat) -> Result<(i64, i64)> {
    let num = r.numer().to_i64();
    let den = r.denom().to_i64();
    match (num, den) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(Error::Parse("rational constant does not fit a 64-bit pair".into())),
    }
}

pub fn algebra_to_json(l: &LieAlgebra) -> Result<AlgebraJson> {
    let mut brackets = Vec::new();
    for (i, j, terms) in l.stored_brackets() {
        let mut out = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            let (num, den) = rat_to_pair(c)?;
            out.push(TermJson { k: *k, num, den });
        }
        brackets.push(BracketJson { i, j, terms: out });
    }
    Ok(AlgebraJson {
        name: l.name().to_string(),
        dim: l.dim(),
        generators: l.generator_names().to_vec(),
        brackets,
        expansion: None,
    })
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<LieAlgebra> {
    if j.generators.len() != j.dim {
        return Err(Error::Parse(format!(
            "dim {} does not match {} generator names",
            j.dim,
            j.generators.len()
        )));
    }
    let mut entries = Vec::new();
    for b in &j.brackets {
        for t in &b.terms {
            if t.den == 0 {
                return Err(Error::Parse(format!(
                    "zero denominator in bracket ({}, {})",
                    b.i, b.j
                )));
            }
            entries.push((b.i, b.j, t.k, rat(t.num, t.den)));
        }
    }
    LieAlgebra::new(j.name.clone(), j.generators.clone(), entries)
}

pub fn semigroup_to_json(s: &Semigroup) -> SemigroupJson {
    SemigroupJson {
        name: s.name().to_string(),
        order: s.order(),
        table: s
            .table()
            .iter()
            .map(|row| row.iter().map(|&v| v + 1).collect())
            .collect(),
    }
}

/// Decode a semigroup file; fails on malformed tables but defers the
/// associativity verdict to [`crate::semigroups::validate_semigroup`].
pub fn semigroup_table_from_json(j: &SemigroupJson) -> Result<Vec<Vec<usize>>> {
    if j.table.len() != j.order {
        return Err(Error::Parse(format!(
            "order {} does not match a {}-row table",
            j.order,
            j.table.len()
        )));
    }
    let mut table = Vec::new();
    for row in &j.table {
        let mut out = Vec::new();
        for &v in row {
            if v == 0 || v > j.order {
                return Err(Error::Parse(format!(
                    "table value {v} outside 1..={}",
                    j.order
                )));
            }
            out.push(v - 1);
        }
        table.push(out);
    }
    Ok(table)
}

pub fn semigroup_from_json(j: &SemigroupJson) -> Result<Semigroup> {
    Semigroup::new(j.name.clone(), semigroup_table_from_json(j)?)
}

pub fn expanded_to_json(e: &ExpandedAlgebra) -> Result<AlgebraJson> {
    let mut j = algebra_to_json(&e.algebra)?;
    j.expansion = Some(Box::new(ExpansionJson {
        semigroup: semigroup_to_json(&e.semigroup),
        base: algebra_to_json(&e.base)?,
        index_map: "A*P+alpha".into(),
    }));
    Ok(j)
}

/// Any structure a JSON input file can hold.
#[derive(Clone, Debug)]
pub enum Loaded {
    Algebra(LieAlgebra),
    Semigroup(Semigroup),
    Expanded(ExpandedAlgebra),
}

/// Schema-sniffing loader: `table` marks a semigroup, `brackets` an algebra,
/// an `expansion` block an expanded algebra.
pub fn parse_value(text: &str) -> Result<Loaded> {
    let raw: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = raw.as_object().ok_or_else(|| Error::Parse("top level is not an object".into()))?;
    if obj.contains_key("table") {
        let j: SemigroupJson =
            serde_json::from_value(raw.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(Loaded::Semigroup(semigroup_from_json(&j)?));
    }
    if obj.contains_key("brackets") {
        let j: AlgebraJson =
            serde_json::from_value(raw).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(exp) = &j.expansion {
            let base = algebra_from_json(&exp.base)?;
            let semigroup = semigroup_from_json(&exp.semigroup)?;
            let rebuilt = s_expand(&semigroup, &base);
            // the stored constants must agree with the rebuild
            let stored = algebra_from_json(&j)?;
            for i in 0..stored.dim() {
                for jj in (i + 1)..stored.dim() {
                    for k in 0..stored.dim() {
                        if stored.structure_constant(i, jj, k)
                            != rebuilt.algebra.structure_constant(i, jj, k)
                        {
                            return Err(Error::Parse(format!(
                                "expansion annotation does not match the stored constants at ({i}, {jj}, {k})"
                            )));
                        }
                    }
                }
            }
            return Ok(Loaded::Expanded(rebuilt));
        }
        return Ok(Loaded::Algebra(algebra_from_json(&j)?));
    }
    Err(Error::Parse("object is neither an algebra nor a semigroup".into()))
}

pub fn load_path(path: &Path) -> Result<Loaded> {
    parse_value(&std::fs::read_to_string(path)?)
}

/// Canonical text form: two-space pretty printing with a trailing newline;
/// rationals are emitted reduced with positive denominators.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::standard_algebra;
    use crate::semigroups::z2;

    #[test]
    fn algebra_round_trip() {
        for name in ["so3", "sl2", "heisenberg3", "so5"] {
            let l = standard_algebra(name).unwrap();
            let j = algebra_to_json(&l).unwrap();
            let text = to_canonical_string(&j);
            match parse_value(&text).unwrap() {
                Loaded::Algebra(back) => assert_eq!(back, l),
                other => panic!("wrong kind: {other:?}"),
            }
            // byte stability
            let again = match parse_value(&text).unwrap() {
                Loaded::Algebra(back) => to_canonical_string(&algebra_to_json(&back).unwrap()),
                _ => unreachable!(),
            };
            assert_eq!(text, again);
        }
    }

    #[test]
    fn semigroup_round_trip() {
        let s = z2();
        let j = semigroup_to_json(&s);
        assert_eq!(j.table, vec![vec![1, 2], vec![2, 1]]);
        let text = to_canonical_string(&j);
        match parse_value(&text).unwrap() {
            Loaded::Semigroup(back) => assert_eq!(back, s),
            other => panic!("wrong kind: {other:?}"),
        }
    }

    #[test]
    fn expanded_round_trip() {
        let e = s_expand(&z2(), &standard_algebra("so3").unwrap());
        let j = expanded_to_json(&e).unwrap();
        let text = to_canonical_string(&j);
        match parse_value(&text).unwrap() {
            Loaded::Expanded(back) => {
                assert_eq!(back.algebra, e.algebra);
                assert_eq!(back.base, e.base);
                assert_eq!(back.semigroup, e.semigroup);
            }
            other => panic!("wrong kind: {other:?}"),
        }
    }

    #[test]
    fn parse_failures() {
        assert!(matches!(parse_value("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_value("[1, 2]"), Err(Error::Parse(_))));
        assert!(matches!(parse_value("{\"a\": 1}"), Err(Error::Parse(_))));
        // 1-based table values: 0 is out of range
        let bad = r#"{"name": "x", "order": 2, "table": [[0, 1], [1, 0]]}"#;
        assert!(matches!(parse_value(bad), Err(Error::Parse(_))));
        // zero denominator
        let bad = r#"{"name": "x", "dim": 2, "generators": ["a", "b"],
                      "brackets": [{"i": 0, "j": 1, "terms": [{"k": 0, "num": 1, "den": 0}]}]}"#;
        assert!(matches!(parse_value(bad), Err(Error::Parse(_))));
    }

    #[test]
    fn rationals_stay_reduced() {
        let j = TermJson { k: 0, num: 2, den: 4 };
        // the schema itself does not reduce; the writers do, via Rat
        let r = rat(j.num, j.den);
        let (num, den) = rat_to_pair(&r).unwrap();
        assert_eq!((num, den), (1, 2));
    }
}
