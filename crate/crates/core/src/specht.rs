//! Partitions, tableaux, tabloids and polytabloids, together with the
//! Jucys-Murphy operator `J_n = (1 n) + ... + (n-1 n)` on the permutation
//! module and on the group algebra.
//!
//! Permutations act on tableaux by replacing every entry `v` with `σ(v)`.
//! `τ_t` is the permutation sending the entry of each cell of `t` to the
//! entry of the same cell of `id_λ`, so that `τ_{σ(t)} = τ_t ∘ σ⁻¹`. The
//! embedding `φ({t}) = Σ_{t' ∈ {t}} τ_{t'}` therefore satisfies
//! `φ({σ(t)}) = φ({t}) ∘ σ⁻¹`, and `J_n` acts on group-algebra elements by
//! right composition with `(i n)`. Under the function view `π ↦ y_π` that is
//! exactly the adjacency operator of `S_n^JM`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::VertexFunction;
use crate::perm::{factorial, Permutation};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidShape("empty partition".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidShape(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows `s`.
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        Partition {
            parts: (0..cols)
                .map(|c| self.parts.iter().filter(|&&p| p > c).count())
                .collect(),
        }
    }

    /// `k`: number of columns longer than one cell.
    pub fn long_columns(&self) -> usize {
        self.parts.get(1).copied().unwrap_or(0)
    }

    /// `m = n - λ_1`, the cells outside the first row.
    pub fn m(&self) -> usize {
        self.n() - self.parts[0]
    }

    /// `s >= 2` and `λ_1 > λ_2`.
    pub fn has_strict_first_row(&self) -> bool {
        self.parts.len() >= 2 && self.parts[0] > self.parts[1]
    }

    /// `λ_1! λ_2! ... λ_s!`, the size of a tabloid.
    pub fn tabloid_size(&self) -> u128 {
        self.parts.iter().map(|&p| factorial(p)).product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse("partition", format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

fn check_budget(what: &'static str, needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded {
            what,
            needed,
            budget,
        });
    }
    Ok(())
}

/// All permutations of `points` as permutations of `1..=n`, fixing the rest.
fn symmetric_group_on(n: usize, points: &[usize]) -> Vec<Permutation> {
    let k = points.len();
    if k <= 1 {
        return vec![Permutation::identity(n)];
    }
    crate::perm::enumerate_with_ceiling(k, usize::MAX)
        .expect("k >= 1")
        .map(|p| {
            let mut word: Vec<usize> = (1..=n).collect();
            for (i, &x) in points.iter().enumerate() {
                word[x - 1] = points[p.apply(i + 1) - 1];
            }
            Permutation::from_word(&word).expect("valid by construction")
        })
        .collect()
}

/// Direct product of subgroups acting on disjoint point sets.
pub(crate) fn product_of(factors: &[Vec<Permutation>], n: usize) -> Vec<Permutation> {
    let mut acc = vec![Permutation::identity(n)];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for a in &acc {
            for g in f {
                next.push(a.compose(g).expect("same n"));
            }
        }
        acc = next;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be 1..={n}, each once: {rows:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Tableau { rows })
    }

    /// `id_λ`: consecutive integers row by row.
    pub fn identity(shape: &Partition) -> Self {
        let mut next = 0;
        Tableau {
            rows: shape
                .parts()
                .iter()
                .map(|&len| {
                    let row: Vec<usize> = (next + 1..=next + len).collect();
                    next += len;
                    row
                })
                .collect(),
        }
    }

    /// The tableau `t'` with `τ_{t'} = π`.
    pub fn from_tau(shape: &Partition, pi: &Permutation) -> Self {
        let inv = pi.inverse();
        let id = Tableau::identity(shape);
        Tableau {
            rows: id
                .rows
                .iter()
                .map(|row| row.iter().map(|&v| inv.apply(v)).collect())
                .collect(),
        }
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Columns, top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.rows[0].len())
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect()
    }

    /// 0-based `(row, column)` of value `v`.
    pub fn cell_of(&self, v: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&x| x == v).map(|c| (r, c))
        })
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// `n` sits at the right end of the first row.
    pub fn has_max_upper_right(&self) -> bool {
        self.rows[0].last() == Some(&self.n())
    }

    /// The preconditions under which `e_t` is a `J_n` eigenvector with
    /// eigenvalue `n - m - 1`: `λ_1 > λ_2`, `t` standard, `n` upper right.
    pub fn check_eigen_preconditions(&self) -> Result<()> {
        let shape = self.shape();
        if !shape.has_strict_first_row() {
            return Err(Error::Precondition(format!(
                "shape {shape} needs at least two rows and λ_1 > λ_2"
            )));
        }
        if !self.is_standard() {
            return Err(Error::Precondition(format!("{self} is not standard")));
        }
        if !self.has_max_upper_right() {
            return Err(Error::Precondition(format!(
                "{self} does not have {} in its upper right cell",
                self.n()
            )));
        }
        Ok(())
    }

    pub fn apply(&self, sigma: &Permutation) -> Result<Tableau> {
        sigma.check_size(self.n())?;
        Ok(Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| sigma.apply(v)).collect())
                .collect(),
        })
    }

    /// `τ_t`: sends the entry of each cell to the entry of `id_λ` there.
    pub fn tau(&self) -> Permutation {
        let id = Tableau::identity(&self.shape());
        let mut word = vec![0; self.n()];
        for (row, id_row) in self.rows.iter().zip(&id.rows) {
            for (&v, &w) in row.iter().zip(id_row) {
                word[v - 1] = w;
            }
        }
        Permutation::from_word(&word).expect("tableau is a bijection")
    }

    /// `X_t`: entries of columns longer than one cell.
    pub fn x_set(&self) -> BTreeSet<usize> {
        self.columns()
            .into_iter()
            .filter(|c| c.len() > 1)
            .flatten()
            .collect()
    }

    /// `Y_t`: entries of single-cell columns, except the last column.
    pub fn y_set(&self) -> BTreeSet<usize> {
        let cols = self.columns();
        let last = cols.len() - 1;
        cols.into_iter()
            .enumerate()
            .filter(|(c, col)| col.len() == 1 && *c != last)
            .map(|(_, col)| col[0])
            .collect()
    }

    /// Per-column symmetric groups, one factor per column of length > 1.
    pub fn column_factors(&self) -> Vec<Vec<Permutation>> {
        let n = self.n();
        self.columns()
            .iter()
            .filter(|c| c.len() > 1)
            .map(|c| symmetric_group_on(n, c))
            .collect()
    }

    pub fn column_stabilizer_size(&self) -> u128 {
        self.shape().conjugate().parts().iter().map(|&c| factorial(c)).product()
    }

    /// `C_t`, all permutations preserving every column setwise.
    pub fn column_stabilizer(&self, budget: u128) -> Result<Vec<Permutation>> {
        check_budget("column stabilizer", self.column_stabilizer_size(), budget)?;
        Ok(product_of(&self.column_factors(), self.n()))
    }

    /// `R_t(2) × ... × R_t(s)`: rows after the first, each permuted setwise.
    pub fn row_stabilizer_tail(&self, budget: u128) -> Result<Vec<Permutation>> {
        let size: u128 = self.rows[1..].iter().map(|r| factorial(r.len())).product();
        check_budget("row stabilizer", size, budget)?;
        let n = self.n();
        let factors: Vec<Vec<Permutation>> = self.rows[1..]
            .iter()
            .map(|r| symmetric_group_on(n, r))
            .collect();
        Ok(product_of(&factors, n))
    }

    /// Standard tableaux of `shape`, lexicographic in their row reading.
    pub fn standard(shape: &Partition) -> Vec<Tableau> {
        fn rec(v: usize, n: usize, parts: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
            if v > n {
                out.push(Tableau { rows: rows.clone() });
                return;
            }
            for r in 0..parts.len() {
                let len = rows[r].len();
                if len < parts[r] && (r == 0 || rows[r - 1].len() > len) {
                    rows[r].push(v);
                    rec(v + 1, n, parts, rows, out);
                    rows[r].pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut rows = vec![Vec::new(); shape.num_rows()];
        rec(1, shape.n(), shape.parts(), &mut rows, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows separated by `/`, entries by `,`: `"1,2,5/3,4"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|v| {
                        v.trim().parse::<usize>().map_err(|_| {
                            Error::parse("tableau", format!("bad entry {v:?} in {s:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(rows)
    }
}

/// Row-equivalence class of tableaux, kept with ascending rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn of(t: &Tableau) -> Self {
        Tabloid::from_rows(t.rows.clone())
    }

    pub fn from_rows(mut rows: Vec<Vec<usize>>) -> Self {
        for r in &mut rows {
            r.sort_unstable();
        }
        Tabloid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn apply(&self, sigma: &Permutation) -> Tabloid {
        Tabloid::from_rows(
            self.rows
                .iter()
                .map(|r| r.iter().map(|&v| sigma.apply(v)).collect())
                .collect(),
        )
    }

    /// Row index of value `v`.
    pub fn row_of(&self, v: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&v))
    }

    /// Every tableau in the class.
    pub fn members(&self, budget: u128) -> Result<Vec<Tableau>> {
        let size: u128 = self.rows.iter().map(|r| factorial(r.len())).product();
        check_budget("tabloid members", size, budget)?;
        let n = self.n();
        let factors: Vec<Vec<Permutation>> =
            self.rows.iter().map(|r| symmetric_group_on(n, r)).collect();
        let base = Tableau {
            rows: self.rows.clone(),
        };
        Ok(product_of(&factors, n)
            .iter()
            .map(|g| base.apply(g).expect("same n"))
            .collect())
    }
}

/// Integer combination of tabloids: an element of `M^λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TabloidSum {
    terms: BTreeMap<Tabloid, i64>,
}

impl TabloidSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(t: Tabloid) -> Self {
        let mut s = Self::zero();
        s.add_term(t, 1);
        s
    }

    pub fn add_term(&mut self, t: Tabloid, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(t).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            // drop cancelled terms; the entry API has no remove-in-place
            let key = self
                .terms
                .iter()
                .find(|(_, &c)| c == 0)
                .map(|(k, _)| k.clone())
                .expect("just zeroed");
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &TabloidSum) -> TabloidSum {
        let mut out = self.clone();
        for (t, &c) in &other.terms {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> TabloidSum {
        if c == 0 {
            return TabloidSum::zero();
        }
        TabloidSum {
            terms: self.terms.iter().map(|(t, &v)| (t.clone(), v * c)).collect(),
        }
    }

    pub fn apply(&self, sigma: &Permutation) -> TabloidSum {
        TabloidSum {
            terms: self
                .terms
                .iter()
                .map(|(t, &c)| (t.apply(sigma), c))
                .collect(),
        }
    }

    pub fn coefficient(&self, t: &Tabloid) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Tabloid, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn n(&self) -> Option<usize> {
        self.terms.keys().next().map(Tabloid::n)
    }
}

/// Rational combination of permutations: an element of the group algebra,
/// read as the function `π ↦ y_π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermSum {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl PermSum {
    pub fn zero(n: usize) -> Self {
        PermSum {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, pi: Permutation, coeff: Rational) {
        debug_assert_eq!(pi.len(), self.n);
        let sum = self.coefficient(&pi) + coeff;
        if sum.is_zero() {
            self.terms.remove(&pi);
        } else {
            self.terms.insert(pi, sum);
        }
    }

    pub fn add(&self, other: &PermSum) -> PermSum {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> PermSum {
        if c.is_zero() {
            return PermSum::zero(self.n);
        }
        PermSum {
            n: self.n,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// `Σ y_π (π ∘ σ)`.
    pub fn right_compose(&self, sigma: &Permutation) -> PermSum {
        PermSum {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.compose(sigma).expect("same n"), c.clone()))
                .collect(),
        }
    }

    pub fn coefficient(&self, pi: &Permutation) -> Rational {
        self.terms.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl VertexFunction for PermSum {
    fn size(&self) -> usize {
        self.n
    }
    fn value(&self, pi: &Permutation) -> Rational {
        self.coefficient(pi)
    }
    fn support(&self) -> Option<Vec<Permutation>> {
        Some(self.terms.keys().cloned().collect())
    }
}

/// `e_t = Σ_{σ ∈ C_t} sgn(σ) {σ(t)}`.
pub fn polytabloid(t: &Tableau, budget: u128) -> Result<TabloidSum> {
    let mut out = TabloidSum::zero();
    for sigma in t.column_stabilizer(budget)? {
        out.add_term(Tabloid::of(&t.apply(&sigma)?), sigma.sign() as i64);
    }
    Ok(out)
}

/// The transpositions `(i n)`, `i = 1..n-1`.
pub fn jm_transpositions(n: usize) -> Vec<Permutation> {
    (1..n)
        .map(|i| Permutation::transposition(n, i, n).expect("i < n"))
        .collect()
}

/// `Σ_{i ∈ indices} (i n) · x` on `M^λ`.
pub fn jm_partial(x: &TabloidSum, indices: impl IntoIterator<Item = usize>) -> TabloidSum {
    let Some(n) = x.n() else {
        return TabloidSum::zero();
    };
    let mut out = TabloidSum::zero();
    for i in indices {
        let sigma = Permutation::transposition(n, i, n).expect("i < n");
        out = out.add(&x.apply(&sigma));
    }
    out
}

pub fn jm_on_tabloid_sum(x: &TabloidSum) -> TabloidSum {
    match x.n() {
        Some(n) => jm_partial(x, 1..n),
        None => TabloidSum::zero(),
    }
}

/// `J_n` on the group algebra; as a function this is the `S_n^JM`
/// adjacency operator.
pub fn jm_on_perm_sum(v: &PermSum) -> PermSum {
    let mut out = PermSum::zero(v.n);
    for sigma in jm_transpositions(v.n) {
        out = out.add(&v.right_compose(&sigma));
    }
    out
}

pub fn phi_tabloid(t: &Tabloid, budget: u128) -> Result<PermSum> {
    let mut out = PermSum::zero(t.n());
    for member in t.members(budget)? {
        out.add_term(member.tau(), int(1));
    }
    Ok(out)
}

/// Linear extension of `{t} ↦ Σ_{t' ∈ {t}} τ_{t'}`.
pub fn phi(x: &TabloidSum, n: usize, budget: u128) -> Result<PermSum> {
    if let Some(m) = x.n() {
        if m != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: m,
            });
        }
    }
    let mut out = PermSum::zero(n);
    for (t, &c) in x.terms() {
        out = out.add(&phi_tabloid(t, budget)?.scale(&int(c)));
    }
    Ok(out)
}

/// `φ(e_t)` computed as `Σ_{π ∈ C_t} sgn(π) φ({t}) ∘ π⁻¹`, without going
/// through the polytabloid.
pub fn phi_polytabloid_alt(t: &Tableau, budget: u128) -> Result<PermSum> {
    let base = phi_tabloid(&Tabloid::of(t), budget)?;
    let mut out = PermSum::zero(t.n());
    for pi in t.column_stabilizer(budget)? {
        out = out.add(&base.right_compose(&pi.inverse()).scale(&int(pi.sign() as i64)));
    }
    Ok(out)
}

/// `ψ(φ(e_t))(π)` without materializing `φ(e_t)`.
///
/// `π = τ_{t'}` for a unique tableau `t'`; the value is `sgn(σ)` for the
/// unique `σ ∈ C_t` with `{σ(t)} = {t'}`, or 0 when there is none.
pub fn eval_f_phi_e(t: &Tableau, pi: &Permutation) -> i64 {
    let shape = t.shape();
    let target = Tabloid::of(&Tableau::from_tau(&shape, pi));
    let n = t.n();
    let mut word: Vec<usize> = (1..=n).collect();
    // σ must send the entry in row r of each column to the column's unique
    // entry lying in row r of the target tabloid
    for col in t.columns() {
        for (r, &v) in col.iter().enumerate() {
            let mut hits = col.iter().filter(|&&w| target.row_of(w) == Some(r));
            match (hits.next(), hits.next()) {
                (Some(&w), None) => word[v - 1] = w,
                _ => return 0,
            }
        }
    }
    match Permutation::from_word(&word) {
        Ok(sigma) => sigma.sign() as i64,
        Err(_) => 0,
    }
}

/// Lazy `ψ(φ(e_t))`.
#[derive(Clone, Debug)]
pub struct PolytabloidFunction {
    t: Tableau,
}

impl PolytabloidFunction {
    pub fn new(t: Tableau) -> Self {
        PolytabloidFunction { t }
    }
}

impl VertexFunction for PolytabloidFunction {
    fn size(&self) -> usize {
        self.t.n()
    }
    fn value(&self, pi: &Permutation) -> Rational {
        int(eval_f_phi_e(&self.t, pi))
    }
}

#[derive(Clone, Debug)]
pub struct PolytabloidEigenReport {
    pub eigenvalue: i64,
    /// `J_n(e_t) = (n - m - 1) e_t`
    pub holds: bool,
    /// `J_n^X(e_t) = k e_t`
    pub x_part: bool,
    /// `J_n^Y(e_t) = (n - m - k - 1) e_t`
    pub y_part: bool,
    pub k: usize,
    pub terms: usize,
}

impl PolytabloidEigenReport {
    pub fn all_hold(&self) -> bool {
        self.holds && self.x_part && self.y_part
    }
}

pub fn verify_polytabloid_eigen(t: &Tableau, budget: u128) -> Result<PolytabloidEigenReport> {
    t.check_eigen_preconditions()?;
    let shape = t.shape();
    let (n, m, k) = (t.n(), shape.m(), shape.long_columns());
    let eigenvalue = n as i64 - m as i64 - 1;
    let e = polytabloid(t, budget)?;
    let x_part = jm_partial(&e, t.x_set());
    let y_part = jm_partial(&e, t.y_set());
    Ok(PolytabloidEigenReport {
        eigenvalue,
        holds: jm_on_tabloid_sum(&e) == e.scale(eigenvalue),
        x_part: x_part == e.scale(k as i64),
        y_part: y_part == e.scale(n as i64 - m as i64 - k as i64 - 1),
        k,
        terms: e.len(),
    })
}
