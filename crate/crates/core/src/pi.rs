//! PI-eigenfunctions.
//!
//! A spec pairs each tracked value `i_t` with two positions `(j_t, k_t)`. At a
//! permutation π the function is zero unless every `i_t` sits at `j_t` or at
//! `k_t`; otherwise it is `(-1)^w` where `w` counts the values sitting at
//! their *first* position `j_t`. On `S_n` the positions avoid position 1, on
//! `S_n^JM` they avoid position n, and the eigenvalue is `n - m - 1`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SparseFunction, StarKind, VertexFunction};
use crate::perm::Permutation;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PiSpecRepr", into = "PiSpecRepr")]
pub struct PiSpec {
    n: usize,
    variant: StarKind,
    values: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct PiSpecRepr {
    n: usize,
    variant: StarKind,
    #[serde(rename = "I")]
    values: Vec<usize>,
    #[serde(rename = "P")]
    pairs: Vec<(usize, usize)>,
}

impl TryFrom<PiSpecRepr> for PiSpec {
    type Error = Error;
    fn try_from(r: PiSpecRepr) -> Result<Self> {
        PiSpec::new(r.n, r.variant, r.values, r.pairs)
    }
}

impl From<PiSpec> for PiSpecRepr {
    fn from(s: PiSpec) -> Self {
        PiSpecRepr {
            n: s.n,
            variant: s.variant,
            values: s.values,
            pairs: s.pairs,
        }
    }
}

impl PiSpec {
    /// Builds and validates a spec.
    pub fn new(
        n: usize,
        variant: StarKind,
        values: Vec<usize>,
        pairs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let spec = PiSpec {
            n,
            variant,
            values,
            pairs,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// `f_i^{j,k}`: `+1` if `π_j = i`, `-1` if `π_k = i`.
    ///
    /// This is the `m = 1` spec with the pair written as `(k, j)`: a single
    /// value at its first position has odd weight.
    pub fn single(n: usize, variant: StarKind, i: usize, j: usize, k: usize) -> Result<Self> {
        Self::new(n, variant, vec![i], vec![(k, j)])
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        let (n, m) = (self.n, self.values.len());
        if self.pairs.len() != m {
            return bad(format!(
                "|I| = {m} but |P| = {} pairs",
                self.pairs.len()
            ));
        }
        if m == 0 {
            return bad("m must be at least 1".into());
        }
        if n < 3 {
            return bad(format!("n = {n} < 3"));
        }
        if n <= 2 * m {
            return bad(format!("n = {n} <= 2m = {}", 2 * m));
        }
        let mut seen = vec![false; n + 1];
        for &v in &self.values {
            if v == 0 || v > n {
                return bad(format!("value {v} outside 1..={n}"));
            }
            if seen[v] {
                return bad(format!("value {v} repeated in I"));
            }
            seen[v] = true;
        }
        let pivot = self.variant.pivot(n);
        let mut seen = vec![false; n + 1];
        for &(j, k) in &self.pairs {
            for x in [j, k] {
                if x == 0 || x > n {
                    return bad(format!("position {x} outside 1..={n}"));
                }
                if x == pivot {
                    return bad(format!(
                        "position {x} is the pivot of {}",
                        self.variant
                    ));
                }
                if seen[x] {
                    return bad(format!("position {x} repeated in P"));
                }
                seen[x] = true;
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn variant(&self) -> StarKind {
        self.variant
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The eigenvalue `n - m - 1`.
    pub fn eigenvalue(&self) -> i64 {
        self.n as i64 - self.m() as i64 - 1
    }

    /// The same spec with `(j_t, k_t)` exchanged for pair `t`; negates `eval`.
    pub fn with_pair_flipped(&self, t: usize) -> Self {
        let mut out = self.clone();
        let (j, k) = out.pairs[t];
        out.pairs[t] = (k, j);
        out
    }

    pub fn eval(&self, pi: &Permutation) -> i8 {
        debug_assert_eq!(pi.len(), self.n);
        let mut odd = false;
        for (&i, &(j, k)) in self.values.iter().zip(&self.pairs) {
            if pi.apply(j) == i {
                odd = !odd;
            } else if pi.apply(k) != i {
                return 0;
            }
        }
        if odd {
            -1
        } else {
            1
        }
    }

    /// Permutations with nonzero value, lexicographic.
    pub fn support_vec(&self) -> Result<Vec<Permutation>> {
        // place each i_t at j_t or k_t, then fill the rest freely
        let m = self.m();
        let mut out = Vec::new();
        let free_values: Vec<usize> = (1..=self.n).filter(|v| !self.values.contains(v)).collect();
        for mask in 0u32..(1 << m) {
            let mut word = vec![0usize; self.n];
            for (t, (&i, &(j, k))) in self.values.iter().zip(&self.pairs).enumerate() {
                let pos = if mask >> t & 1 == 1 { j } else { k };
                word[pos - 1] = i;
            }
            let open: Vec<usize> = (0..self.n).filter(|&p| word[p] == 0).collect();
            for fill in crate::perm::enumerate_symmetric_group(free_values.len())? {
                for (slot, &p) in open.iter().enumerate() {
                    word[p] = free_values[fill.apply(slot + 1) - 1];
                }
                out.push(Permutation::from_word(&word).expect("valid by construction"));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Materializes the function on all of `Sym_n`.
    pub fn as_sparse(&self, ceiling: usize) -> Result<SparseFunction> {
        SparseFunction::materialize(self, self.variant, ceiling)
    }

    /// A uniformly random valid spec.
    pub fn random<R: Rng + ?Sized>(
        n: usize,
        m: usize,
        variant: StarKind,
        rng: &mut R,
    ) -> Result<Self> {
        let pivot = variant.pivot(n);
        let mut values: Vec<usize> = (1..=n).collect();
        values.shuffle(rng);
        values.truncate(m);
        let mut positions: Vec<usize> = (1..=n).filter(|&p| p != pivot).collect();
        positions.shuffle(rng);
        let pairs = positions
            .chunks(2)
            .take(m)
            .map(|c| (c[0], c.get(1).copied().unwrap_or(0)))
            .collect();
        Self::new(n, variant, values, pairs)
    }

    /// Every valid spec for `(n, m, variant)`, as ordered tuples.
    pub fn enumerate_all(n: usize, m: usize, variant: StarKind) -> Vec<Self> {
        let pivot = variant.pivot(n);
        let positions: Vec<usize> = (1..=n).filter(|&p| p != pivot).collect();
        let mut out = Vec::new();
        for values in arrangements(&(1..=n).collect::<Vec<_>>(), m) {
            for flat in arrangements(&positions, 2 * m) {
                let pairs = flat.chunks(2).map(|c| (c[0], c[1])).collect();
                if let Ok(spec) = Self::new(n, variant, values.clone(), pairs) {
                    out.push(spec);
                }
            }
        }
        out
    }
}

/// Ordered selections of `len` distinct items.
fn arrangements(items: &[usize], len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (idx, &x) in items.iter().enumerate() {
        let rest: Vec<usize> = items
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, &v)| v)
            .collect();
        for mut tail in arrangements(&rest, len - 1) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

impl fmt::Display for PiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f[{}; n={}; I=(", self.variant, self.n)?;
        for (t, v) in self.values.iter().enumerate() {
            if t > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("); P=(")?;
        for (t, (j, k)) in self.pairs.iter().enumerate() {
            if t > 0 {
                f.write_str(",")?;
            }
            write!(f, "({j},{k})")?;
        }
        f.write_str(")]")
    }
}

impl VertexFunction for PiSpec {
    fn size(&self) -> usize {
        self.n
    }
    fn value(&self, pi: &Permutation) -> Rational {
        int(self.eval(pi) as i64)
    }
    fn support(&self) -> Option<Vec<Permutation>> {
        self.support_vec().ok()
    }
}

/// `f_i^{j,k}(π)`: `+1` if `π_j = i`, `-1` if `π_k = i`, else 0.
pub fn eval_single(i: usize, j: usize, k: usize, pi: &Permutation) -> i8 {
    if pi.apply(j) == i {
        1
    } else if pi.apply(k) == i {
        -1
    } else {
        0
    }
}

/// The `(n-1)(n-2)` functions `f_i^{2,k}` on `S_n`, grouped in cohorts by
/// `i = 2..n`. Cohort 2 is `k = 3..n`; cohort `i >= 3` leads with `k = i`
/// and continues with `k = 3..n`, skipping `i`.
pub fn f2_basis(n: usize) -> Result<Vec<PiSpec>> {
    if n < 3 {
        return Err(Error::EmptyDomain(format!("F_2 basis needs n >= 3, got {n}")));
    }
    let mut out = Vec::with_capacity((n - 1) * (n - 2));
    for i in 2..=n {
        let ks: Vec<usize> = if i == 2 {
            (3..=n).collect()
        } else {
            std::iter::once(i)
                .chain((3..=n).filter(|&k| k != i))
                .collect()
        };
        for k in ks {
            out.push(PiSpec::single(n, StarKind::StarS, i, 2, k)?);
        }
    }
    Ok(out)
}
