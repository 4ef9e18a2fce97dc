//! JSON and CSV forms of the artifact's data.
//!
//! Rationals are written as lowest-terms `"p"` / `"p/q"` strings and maps are
//! emitted in key order, so equal values serialize to identical bytes.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{SparseFunction, StarKind};
use crate::perm::Permutation;
use crate::pi::PiSpec;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::reconstruction::ReconstructionMatrix;
use crate::specht::{Tabloid, TabloidSum};

struct OrderedEntries<'a>(&'a BTreeMap<Permutation, Rational>);

impl Serialize for OrderedEntries<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(&k.to_string(), &format_rational(v))?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct FunctionOut<'a> {
    n: usize,
    variant: StarKind,
    entries: OrderedEntries<'a>,
}

#[derive(Deserialize)]
struct FunctionIn {
    n: usize,
    #[serde(default = "default_variant")]
    variant: StarKind,
    entries: BTreeMap<String, String>,
}

fn default_variant() -> StarKind {
    StarKind::StarS
}

/// A permutation-indexed value table that keeps explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueTable {
    pub n: usize,
    pub variant: StarKind,
    pub entries: BTreeMap<Permutation, Rational>,
}

pub fn value_table_to_json(t: &ValueTable) -> Result<String> {
    Ok(serde_json::to_string_pretty(&FunctionOut {
        n: t.n,
        variant: t.variant,
        entries: OrderedEntries(&t.entries),
    })?)
}

pub fn value_table_from_json(s: &str) -> Result<ValueTable> {
    let raw: FunctionIn = serde_json::from_str(s)?;
    let mut entries = BTreeMap::new();
    for (k, v) in raw.entries {
        let pi: Permutation = k
            .parse()
            .map_err(|e| Error::parse("entries", format!("key {k:?}: {e}")))?;
        if pi.len() != raw.n {
            return Err(Error::parse("entries", format!("key {k:?} has size {}, expected n = {}", pi.len(), raw.n)));
        }
        let value = parse_rational(&v).map_err(|e| Error::parse("entries", format!("value for {k}: {e}")))?;
        entries.insert(pi, value);
    }
    Ok(ValueTable {
        n: raw.n,
        variant: raw.variant,
        entries,
    })
}

pub fn sparse_to_json(f: &SparseFunction) -> Result<String> {
    Ok(serde_json::to_string_pretty(&FunctionOut {
        n: f.n(),
        variant: f.variant(),
        entries: OrderedEntries(f.entries()),
    })?)
}

/// Zero entries are dropped.
pub fn sparse_from_json(s: &str) -> Result<SparseFunction> {
    let t = value_table_from_json(s)?;
    let mut f = SparseFunction::new(t.n, t.variant);
    for (pi, v) in t.entries {
        f.set(pi, v)?;
    }
    Ok(f)
}

pub fn specs_to_json(specs: &[PiSpec]) -> Result<String> {
    Ok(serde_json::to_string_pretty(specs)?)
}

pub fn specs_from_json(s: &str) -> Result<Vec<PiSpec>> {
    Ok(serde_json::from_str(s)?)
}

/// One spec or a list of specs.
pub fn spec_or_specs_from_json(s: &str) -> Result<Vec<PiSpec>> {
    let v: serde_json::Value = serde_json::from_str(s)?;
    if v.is_array() {
        Ok(serde_json::from_value(v)?)
    } else {
        Ok(vec![serde_json::from_value(v)?])
    }
}

#[derive(Serialize, Deserialize)]
struct TabloidTerm {
    rows: Vec<Vec<usize>>,
    coeff: String,
}

pub fn tabloid_sum_to_json(x: &TabloidSum) -> Result<String> {
    let terms: Vec<TabloidTerm> = x
        .terms()
        .iter()
        .map(|(t, c)| TabloidTerm {
            rows: t.rows().to_vec(),
            coeff: c.to_string(),
        })
        .collect();
    Ok(serde_json::to_string_pretty(&terms)?)
}

pub fn tabloid_sum_from_json(s: &str) -> Result<TabloidSum> {
    let terms: Vec<TabloidTerm> = serde_json::from_str(s)?;
    let mut out = TabloidSum::zero();
    for (idx, term) in terms.into_iter().enumerate() {
        let c: i64 = term
            .coeff
            .trim()
            .parse()
            .map_err(|_| Error::parse("coeff", format!("term {idx}: {:?} is not an integer", term.coeff)))?;
        // validates the filling
        let t = crate::specht::Tableau::from_rows(term.rows)
            .map_err(|e| Error::parse("rows", format!("term {idx}: {e}")))?;
        out.add_term(Tabloid::of(&t), c);
    }
    Ok(out)
}

/// `f_i^{j,k}` label of an `m = 1` spec.
pub fn single_label(spec: &PiSpec) -> String {
    let (k, j) = spec.pairs()[0];
    format!("f_{}^{{{},{}}}", spec.values()[0], j, k)
}

fn parse_single_label(n: usize, s: &str) -> Result<PiSpec> {
    let bad = || Error::parse("rows", format!("bad label {s:?}"));
    let rest = s.trim().strip_prefix("f_").ok_or_else(bad)?;
    let (i, jk) = rest.split_once("^{").ok_or_else(bad)?;
    let (j, k) = jk.strip_suffix('}').ok_or_else(bad)?.split_once(',').ok_or_else(bad)?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    PiSpec::single(n, StarKind::StarS, num(i)?, num(j)?, num(k)?)
}

/// Integer CSV with `#`-prefixed header lines for `n`, row and column labels.
pub fn matrix_to_csv(m: &ReconstructionMatrix) -> String {
    let mut out = format!("# n={}\n", m.n);
    let rows: Vec<String> = m.row_labels.iter().map(single_label).collect();
    out.push_str(&format!("# rows: {}\n", rows.join(";")));
    let cols: Vec<String> = m.col_labels.iter().map(Permutation::to_string).collect();
    out.push_str(&format!("# cols: {}\n", cols.join(";")));
    for row in &m.entries {
        let line: Vec<String> = row.iter().map(i64::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_from_csv(s: &str) -> Result<ReconstructionMatrix> {
    let mut n = None;
    let mut row_labels = Vec::new();
    let mut col_labels = Vec::new();
    let mut entries = Vec::new();
    for (lineno, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(h) = line.strip_prefix('#') {
            let h = h.trim();
            if let Some(v) = h.strip_prefix("n=") {
                n = Some(v.parse::<usize>().map_err(|_| Error::parse("n", format!("bad size {v:?}")))?);
            } else if let Some(v) = h.strip_prefix("rows:") {
                let n = n.ok_or_else(|| Error::parse("rows", "row labels before n"))?;
                row_labels = v.split(';').map(|l| parse_single_label(n, l)).collect::<Result<_>>()?;
            } else if let Some(v) = h.strip_prefix("cols:") {
                col_labels = v
                    .split(';')
                    .map(|l| l.trim().parse::<Permutation>())
                    .collect::<Result<_>>()
                    .map_err(|e| Error::parse("cols", e.to_string()))?;
            }
            continue;
        }
        let row = line
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::parse("entries", format!("line {}: bad integer {x:?}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        entries.push(row);
    }
    let n = n.ok_or_else(|| Error::parse("n", "missing # n= header"))?;
    let size = entries.len();
    if entries.iter().any(|r| r.len() != size) || row_labels.len() != size || col_labels.len() != size {
        return Err(Error::parse("entries", format!("expected a square matrix with {size} labels per side")));
    }
    Ok(ReconstructionMatrix {
        n,
        entries,
        row_labels,
        col_labels,
    })
}
