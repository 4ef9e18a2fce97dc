//! Coset codes and the expansion of `ψ(φ(e_t))` into PI-eigenfunctions of
//! `S_n^JM` with `I = (n-m+1, ..., n)`.
//!
//! Summands are indexed by `σ ∈ R_t(2) × ... × R_t(s)` and
//! `π' ∈ CA_{σ(t)}`, the even part of each column group. With
//! `π = σ⁻¹ π' σ ∈ CA_t` and `u = π(t)`, the pair attached to the cell `c`
//! (rows 2..s, reading order) is read at the cell `d` of `t` holding
//! `σ(t[c])`: `(u[1][col d], u[d])` when `c` is in row 2, and `(y_d, u[d])`
//! below, where `y_d` is the label of `Y_t` given to `d`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::config::Ceilings;
use crate::error::{Error, Result};
use crate::graph::StarKind;
use crate::perm::{enumerate_with_ceiling, Permutation};
use crate::pi::PiSpec;
use crate::specht::{eval_f_phi_e, phi, polytabloid, Tableau};

/// Entries at positions `n-m+1..n` of the inverse, shared by a left coset
/// of `Sym(X_λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetCode(Vec<usize>);

impl CosetCode {
    pub fn new(code: Vec<usize>) -> Result<Self> {
        let distinct: BTreeSet<_> = code.iter().collect();
        if distinct.len() != code.len() || code.contains(&0) {
            return Err(Error::parse("code", format!("entries must be distinct and positive: {code:?}")));
        }
        Ok(CosetCode(code))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn meets(&self, set: &BTreeSet<usize>) -> bool {
        self.0.iter().any(|z| set.contains(z))
    }

    /// All permutations of `{1..n}` carrying this code.
    pub fn members(&self, n: usize, ceiling: usize) -> Result<Vec<Permutation>> {
        let m = self.m();
        let free: Vec<usize> = (1..=n).filter(|v| !self.0.contains(v)).collect();
        if free.len() != n - m {
            return Err(Error::OutOfRange {
                what: "code entry",
                value: *self.0.iter().max().unwrap_or(&0),
                n,
            });
        }
        let mut out = Vec::new();
        let fill = enumerate_with_ceiling((n - m).max(1), ceiling)?;
        for arrangement in fill {
            let mut word = vec![0; n];
            for (idx, &z) in self.0.iter().enumerate() {
                word[z - 1] = n - m + idx + 1;
            }
            if n > m {
                for (idx, &x) in free.iter().enumerate() {
                    word[x - 1] = arrangement.apply(idx + 1);
                }
            }
            out.push(Permutation::from_word(&word)?);
            if n == m {
                break;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CosetCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, z) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{z}")?;
        }
        f.write_str(")")
    }
}

/// Rows 2..s of `t`, concatenated.
pub fn coset_code(t: &Tableau) -> CosetCode {
    CosetCode(t.rows()[1..].concat())
}

/// `(π⁻¹(n-m+1), ..., π⁻¹(n))`.
pub fn code_of_permutation(pi: &Permutation, m: usize) -> CosetCode {
    let n = pi.len();
    CosetCode((n - m + 1..=n).map(|v| pi.position_of(v)).collect())
}

/// `τ_{[t]}`: the `τ` of every tableau agreeing with `t` below row 1.
pub fn coset_of_tableau(t: &Tableau, ceiling: usize) -> Result<Vec<Permutation>> {
    let first = &t.rows()[0];
    let mut out = Vec::new();
    for p in enumerate_with_ceiling(first.len(), ceiling)? {
        let mut rows = t.rows().to_vec();
        rows[0] = (1..=first.len()).map(|i| first[p.apply(i) - 1]).collect();
        out.push(Tableau::from_rows(rows)?.tau());
    }
    Ok(out)
}

/// An element of a direct product kept together with its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPermutation {
    pub factors: Vec<Permutation>,
    pub product: Permutation,
}

/// `CA_t = CA_t(1) × ... × CA_t(k)`.
pub fn even_column_stabilizer(t: &Tableau, budget: u128) -> Result<Vec<FactoredPermutation>> {
    let factors: Vec<Vec<Permutation>> = t
        .column_factors()
        .into_iter()
        .map(|f| f.into_iter().filter(|p| p.sign() == 1).collect())
        .collect();
    let size: u128 = factors.iter().map(|f| f.len() as u128).product();
    if size > budget {
        return Err(Error::BudgetExceeded {
            what: "even column stabilizer",
            needed: size,
            budget,
        });
    }
    let n = t.n();
    let mut acc = vec![FactoredPermutation {
        factors: Vec::new(),
        product: Permutation::identity(n),
    }];
    for f in &factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for a in &acc {
            for g in f {
                let mut factors = a.factors.clone();
                factors.push(g.clone());
                next.push(FactoredPermutation {
                    factors,
                    product: a.product.compose(g)?,
                });
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Order in which `Y_t` labels the cells of rows 3..s.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum YAssignment {
    #[default]
    Ascending,
    Descending,
}

impl FromStr for YAssignment {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "asc" => Ok(YAssignment::Ascending),
            "desc" => Ok(YAssignment::Descending),
            _ => Err(Error::parse("y-assignment", format!("expected asc or desc, got {s:?}"))),
        }
    }
}

impl fmt::Display for YAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            YAssignment::Ascending => "asc",
            YAssignment::Descending => "desc",
        })
    }
}

type Cell = (usize, usize);

/// Labels from `Y_t` for the cells of `t` in rows 3..s.
pub fn y_labels(t: &Tableau, order: YAssignment) -> Result<BTreeMap<Cell, usize>> {
    let mut ys: Vec<usize> = t.y_set().into_iter().collect();
    if order == YAssignment::Descending {
        ys.reverse();
    }
    let cells: Vec<Cell> = t
        .rows()
        .iter()
        .enumerate()
        .skip(2)
        .flat_map(|(r, row)| (0..row.len()).map(move |c| (r, c)))
        .collect();
    if ys.len() < cells.len() {
        return Err(Error::Precondition(format!(
            "|Y_t| = {} is smaller than m - k = {}",
            ys.len(),
            cells.len()
        )));
    }
    Ok(cells.into_iter().zip(ys).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPiVector {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub pairs: Vec<(usize, usize)>,
    pub sigma: Permutation,
    /// Element of `CA_{σ(t)}`.
    pub pi: Permutation,
}

impl PPiVector {
    pub fn to_spec(&self) -> Result<PiSpec> {
        PiSpec::new(
            self.n,
            StarKind::StarJM,
            (self.n - self.m + 1..=self.n).collect(),
            self.pairs.clone(),
        )
    }

    /// `P_π^Ω`: bit `true` keeps the first coordinate.
    pub fn omega_code(&self, omega: &[bool]) -> Result<CosetCode> {
        if omega.len() != self.m {
            return Err(Error::SizeMismatch {
                expected: self.m,
                found: omega.len(),
            });
        }
        Ok(CosetCode(
            self.pairs
                .iter()
                .zip(omega)
                .map(|(&(a, b), &w)| if w { a } else { b })
                .collect(),
        ))
    }
}

fn p_pi_vector(
    t: &Tableau,
    ys: &BTreeMap<Cell, usize>,
    sigma: &Permutation,
    pi_prime: &Permutation,
) -> Result<PPiVector> {
    let shape = t.shape();
    let pi = sigma.inverse().compose(pi_prime)?.compose(sigma)?;
    let u = t.apply(&pi)?;
    let mut pairs = Vec::with_capacity(shape.m());
    for (r, row) in t.rows().iter().enumerate().skip(1) {
        for &v in row {
            let d = t.cell_of(sigma.apply(v)).expect("σ preserves rows");
            let below = u.rows()[d.0][d.1];
            let above = if r == 1 { u.rows()[0][d.1] } else { ys[&d] };
            pairs.push((above, below));
        }
    }
    Ok(PPiVector {
        n: t.n(),
        m: shape.m(),
        k: shape.long_columns(),
        pairs,
        sigma: sigma.clone(),
        pi: pi_prime.clone(),
    })
}

fn check_decomposable(t: &Tableau) -> Result<()> {
    t.check_eigen_preconditions()?;
    let (n, m) = (t.n(), t.shape().m());
    if n <= 2 * m {
        return Err(Error::Precondition(format!("needs n > 2m, got n = {n}, m = {m}")));
    }
    Ok(())
}

fn preserves_rows(t: &Tableau, sigma: &Permutation) -> bool {
    t.rows().iter().enumerate().all(|(r, row)| {
        row.iter()
            .all(|&v| if r == 0 { sigma.apply(v) == v } else { row.contains(&sigma.apply(v)) })
    })
}

fn is_even_column_element(t: &Tableau, p: &Permutation) -> bool {
    let cols = t.columns();
    let col_of = |v: usize| cols.iter().position(|c| c.contains(&v));
    (1..=t.n()).all(|v| col_of(v) == col_of(p.apply(v)))
        && cols.iter().all(|c| {
            let restricted: Vec<usize> = c.iter().map(|&v| c.iter().position(|&w| w == p.apply(v)).unwrap() + 1).collect();
            Permutation::from_word(&restricted).map_or(false, |q| q.sign() == 1)
        })
}

/// `P_π` for `σ ∈ R_t(2) × ... × R_t(s)` and `π ∈ CA_{σ(t)}`.
pub fn build_p_pi(
    t: &Tableau,
    sigma: &Permutation,
    pi: &Permutation,
    order: YAssignment,
) -> Result<PPiVector> {
    check_decomposable(t)?;
    sigma.check_size(t.n())?;
    pi.check_size(t.n())?;
    if !preserves_rows(t, sigma) {
        return Err(Error::Precondition(format!("{sigma} is not in R_t(2) x ... x R_t(s)")));
    }
    if !is_even_column_element(&t.apply(sigma)?, pi) {
        return Err(Error::Precondition(format!("{pi} is not in CA_σ(t)")));
    }
    p_pi_vector(t, &y_labels(t, order)?, sigma, pi)
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub tableau: Tableau,
    pub y_assignment: YAssignment,
    /// In `(σ, π)` enumeration order; repeats are kept.
    pub summands: Vec<PPiVector>,
    specs: Vec<PiSpec>,
}

impl Decomposition {
    pub fn specs(&self) -> &[PiSpec] {
        &self.specs
    }

    /// `Σ f^{P_π}(x)`.
    pub fn eval(&self, x: &Permutation) -> i64 {
        self.specs.iter().map(|s| s.eval(x) as i64).sum()
    }

    pub fn distinct_specs(&self) -> usize {
        self.specs.iter().map(|s| s.pairs()).collect::<BTreeSet<_>>().len()
    }

    /// Summands grouped by `σ`, in enumeration order.
    pub fn by_sigma(&self) -> Vec<(Permutation, Vec<&PiSpec>)> {
        let mut out: Vec<(Permutation, Vec<&PiSpec>)> = Vec::new();
        for (p, s) in self.summands.iter().zip(&self.specs) {
            match out.last_mut() {
                Some((sigma, group)) if *sigma == p.sigma => group.push(s),
                _ => out.push((p.sigma.clone(), vec![s])),
            }
        }
        out
    }
}

pub fn decompose(t: &Tableau, order: YAssignment, budget: u128) -> Result<Decomposition> {
    check_decomposable(t)?;
    let ys = y_labels(t, order)?;
    let tail = t.row_stabilizer_tail(budget)?;
    let per_sigma: u128 = t
        .shape()
        .conjugate()
        .parts()
        .iter()
        .map(|&c| crate::perm::factorial(c).div_ceil(2))
        .product();
    let total = tail.len() as u128 * per_sigma;
    if total > budget {
        return Err(Error::BudgetExceeded {
            what: "decomposition summands",
            needed: total,
            budget,
        });
    }
    let mut summands = Vec::new();
    for sigma in &tail {
        let st = t.apply(sigma)?;
        for pi in even_column_stabilizer(&st, budget)? {
            summands.push(p_pi_vector(t, &ys, sigma, &pi.product)?);
        }
    }
    let specs = summands.iter().map(PPiVector::to_spec).collect::<Result<Vec<_>>>()?;
    Ok(Decomposition {
        tableau: t.clone(),
        y_assignment: order,
        summands,
        specs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub summands: usize,
    pub distinct_summands: usize,
    pub checked: usize,
    pub mismatches: usize,
    /// First disagreeing vertex, if any.
    pub first_mismatch: Option<Permutation>,
    /// Vertices whose code meets `Y_t` and where some summand is nonzero.
    pub y_cosets_touched: usize,
    /// Of those, vertices where the summands fail to cancel.
    pub y_coset_failures: usize,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.mismatches == 0 && self.y_coset_failures == 0
    }
}

/// Pointwise comparison of the PI sum with `ψ(φ(e_t))` over all of `Sym_n`.
pub fn verify_decomposition(t: &Tableau, order: YAssignment, ceilings: &Ceilings) -> Result<DecompositionReport> {
    let d = decompose(t, order, ceilings.budget)?;
    let (n, m) = (t.n(), t.shape().m());
    let y = t.y_set();
    let mut report = DecompositionReport {
        summands: d.specs.len(),
        distinct_summands: d.distinct_specs(),
        checked: 0,
        mismatches: 0,
        first_mismatch: None,
        y_cosets_touched: 0,
        y_coset_failures: 0,
    };
    for x in enumerate_with_ceiling(n, ceilings.enumeration)? {
        report.checked += 1;
        let values: Vec<i64> = d.specs.iter().map(|s| s.eval(&x) as i64).collect();
        let sum: i64 = values.iter().sum();
        if sum != eval_f_phi_e(t, &x) {
            report.mismatches += 1;
            report.first_mismatch.get_or_insert(x.clone());
        }
        if code_of_permutation(&x, m).meets(&y) && values.iter().any(|&v| v != 0) {
            report.y_cosets_touched += 1;
            if sum != 0 {
                report.y_coset_failures += 1;
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport {
    pub checked: usize,
    /// `ψ(φ(e_t))` takes values in {-1, 0, 1}.
    pub ternary: bool,
    /// Its signed support is the union of cosets `[σ(π(t))]`, `π ∈ C_t`.
    pub polytabloid_cosets: bool,
    /// Each inner sum `f_σ` is ternary with support `[π(σ(t))]`,
    /// `π ∈ C_t`, signed by `sgn(π)`.
    pub inner_sums: bool,
    /// Distinct `σ` give disjoint supports.
    pub disjoint: bool,
    /// The supports of the `f_σ` cover the support of `ψ(φ(e_t))`, with
    /// equal values there.
    pub covering: bool,
    /// Every PI summand is ±1 exactly on its even/odd `Ω` cosets.
    pub pi_cosets: bool,
}

impl SupportReport {
    pub fn all_hold(&self) -> bool {
        self.ternary && self.polytabloid_cosets && self.inner_sums && self.disjoint && self.covering && self.pi_cosets
    }
}

/// Code → sign; `None` when a code appears with both signs.
fn signed_codes(entries: impl IntoIterator<Item = (CosetCode, i64)>) -> Option<HashMap<CosetCode, i64>> {
    let mut map = HashMap::new();
    for (code, s) in entries {
        if *map.entry(code).or_insert(s) != s {
            return None;
        }
    }
    Some(map)
}

fn all_omegas(m: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u64 << m).map(move |bits| (0..m).map(|i| bits >> i & 1 == 1).collect())
}

pub fn verify_support_partitions(t: &Tableau, ceilings: &Ceilings) -> Result<SupportReport> {
    let d = decompose(t, YAssignment::Ascending, ceilings.budget)?;
    let (n, m) = (t.n(), t.shape().m());
    let budget = ceilings.budget;
    let f = phi(&polytabloid(t, budget)?, n, budget)?;

    let mut poly = Vec::new();
    for c in t.column_stabilizer(budget)? {
        let ct = t.apply(&c)?;
        for s in ct.row_stabilizer_tail(budget)? {
            poly.push((coset_code(&ct.apply(&s)?), c.sign() as i64));
        }
    }
    let poly = signed_codes(poly);

    let groups = d.by_sigma();
    let mut inner_maps = Vec::new();
    for (sigma, _) in &groups {
        let st = t.apply(sigma)?;
        let entries = t
            .column_stabilizer(budget)?
            .into_iter()
            .map(|c| Ok((coset_code(&st.apply(&c)?), c.sign() as i64)))
            .collect::<Result<Vec<_>>>()?;
        inner_maps.push(signed_codes(entries));
    }

    let mut pi_maps = Vec::new();
    for p in &d.summands {
        let entries = all_omegas(m)
            .map(|w| {
                let sign = if w.iter().filter(|&&b| b).count() % 2 == 0 { 1 } else { -1 };
                Ok((p.omega_code(&w)?, sign))
            })
            .collect::<Result<Vec<_>>>()?;
        pi_maps.push(signed_codes(entries));
    }

    let mut report = SupportReport {
        checked: 0,
        ternary: true,
        polytabloid_cosets: poly.is_some(),
        inner_sums: inner_maps.iter().all(Option::is_some),
        disjoint: true,
        covering: true,
        pi_cosets: pi_maps.iter().all(Option::is_some),
    };
    let expect = |map: &Option<HashMap<CosetCode, i64>>, code: &CosetCode| {
        map.as_ref().map(|mp| mp.get(code).copied().unwrap_or(0))
    };

    for x in enumerate_with_ceiling(n, ceilings.enumeration)? {
        report.checked += 1;
        let code = code_of_permutation(&x, m);
        let fx = f.coefficient(&x);
        let v: i64 = if fx == crate::rational::int(1) {
            1
        } else if fx == crate::rational::int(-1) {
            -1
        } else if num_traits::Zero::is_zero(&fx) {
            0
        } else {
            report.ternary = false;
            continue;
        };
        if expect(&poly, &code).is_some_and(|e| e != v) {
            report.polytabloid_cosets = false;
        }
        for (p, map) in d.specs().iter().zip(&pi_maps) {
            if expect(map, &code).is_some_and(|e| e != p.eval(&x) as i64) {
                report.pi_cosets = false;
            }
        }
        let mut hits = 0;
        let mut covered = 0;
        for ((_, specs), map) in groups.iter().zip(&inner_maps) {
            let fs: i64 = specs.iter().map(|s| s.eval(&x) as i64).sum();
            if fs.abs() > 1 || expect(map, &code).is_some_and(|e| e != fs) {
                report.inner_sums = false;
            }
            if fs != 0 {
                hits += 1;
                covered = fs;
            }
        }
        if hits > 1 {
            report.disjoint = false;
        }
        if covered != v {
            report.covering = false;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_symmetric_group;
    use crate::specht::Partition;

    const BUDGET: u128 = 1_000_000;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn codes() {
        let id = Tableau::identity(&Partition::new(vec![3, 2]).unwrap());
        assert_eq!(coset_code(&id).entries(), &[4, 5]);
        let t = tab("2,3,5/4,1");
        assert_eq!(code_of_permutation(&t.tau(), 2), coset_code(&t));
        assert!(CosetCode::new(vec![1, 1]).is_err());
        assert_eq!(CosetCode::new(vec![4, 5]).unwrap().to_string(), "(4,5)");
    }

    #[test]
    fn coset_sets_match_codes() {
        let shape = Partition::new(vec![2, 2]).unwrap();
        let id = Tableau::identity(&shape);
        let tableaux: Vec<Tableau> = enumerate_symmetric_group(4).unwrap().map(|s| id.apply(&s).unwrap()).collect();
        for a in &tableaux {
            let ca: BTreeSet<_> = coset_of_tableau(a, 7).unwrap().into_iter().collect();
            let members: BTreeSet<_> = coset_code(a).members(4, 7).unwrap().into_iter().collect();
            assert_eq!(ca, members);
            for b in &tableaux {
                let cb: BTreeSet<_> = coset_of_tableau(b, 7).unwrap().into_iter().collect();
                assert_eq!(coset_code(a) == coset_code(b), ca == cb);
            }
        }
    }

    #[test]
    fn tabloid_is_union_of_cosets() {
        let t = tab("1,3,6,7/2,5/4");
        let tl = crate::specht::Tabloid::of(&t);
        let whole: BTreeSet<_> = tl.members(BUDGET).unwrap().iter().map(Tableau::tau).collect();
        let mut union = BTreeSet::new();
        for s in t.row_stabilizer_tail(BUDGET).unwrap() {
            for p in coset_of_tableau(&t.apply(&s).unwrap(), 7).unwrap() {
                assert!(union.insert(p));
            }
        }
        assert_eq!(whole, union);
    }

    #[test]
    fn action_on_cosets() {
        let t = tab("1,3,5/2,4");
        let pi: Permutation = "[5,3,1,2,4]".parse().unwrap();
        let lhs: BTreeSet<_> = coset_of_tableau(&t.apply(&pi).unwrap(), 7).unwrap().into_iter().collect();
        // τ_{π(t')} = τ_{t'} ∘ π⁻¹
        let rhs: BTreeSet<_> = coset_of_tableau(&t, 7)
            .unwrap()
            .iter()
            .map(|p| p.compose(&pi.inverse()).unwrap())
            .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn even_stabilizer_sizes() {
        assert_eq!(even_column_stabilizer(&tab("1,3/2,4"), BUDGET).unwrap().len(), 1);
        let ca = even_column_stabilizer(&tab("1,4,5/2/3"), BUDGET).unwrap();
        assert_eq!(ca.len(), 3);
        assert!(ca.iter().all(|p| p.product.sign() == 1 && p.factors.len() == 1));
        assert_eq!(even_column_stabilizer(&tab("1,4/2,5/3"), BUDGET).unwrap().len(), 3);
    }

    #[test]
    fn hook_decomposition() {
        for n in 3..=6 {
            for i in 2..n {
                let first: Vec<usize> = (1..=n).filter(|&v| v != i).collect();
                let t = Tableau::from_rows(vec![first, vec![i]]).unwrap();
                let d = decompose(&t, YAssignment::Ascending, BUDGET).unwrap();
                assert_eq!(d.specs().len(), 1);
                assert_eq!(d.specs()[0].pairs(), &[(1, i)]);
                for x in enumerate_symmetric_group(n).unwrap() {
                    let closed = if x.apply(i) == n { 1 } else if x.apply(1) == n { -1 } else { 0 };
                    assert_eq!(d.eval(&x), closed);
                }
            }
        }
    }

    #[test]
    fn two_row_decomposition_matches_example() {
        let n = 6;
        let (i, j, i2) = (2, 4, 3);
        let t = tab("1,3,5,6/2,4");
        let d = decompose(&t, YAssignment::Ascending, BUDGET).unwrap();
        let pairs: Vec<_> = d.specs().iter().map(|s| s.pairs().to_vec()).collect();
        assert_eq!(pairs, vec![vec![(1, i), (i2, j)], vec![(i2, j), (1, i)]]);
        // the example's own superscripts, read as pairs, give the same sum
        let lit = |p: Vec<(usize, usize)>| PiSpec::new(n, StarKind::StarJM, vec![n - 1, n], p).unwrap();
        let a = lit(vec![(i, 1), (j, i2)]);
        let b = lit(vec![(j, i2), (i, 1)]);
        for x in enumerate_symmetric_group(n).unwrap() {
            assert_eq!(a.eval(&x) as i64 + b.eval(&x) as i64, eval_f_phi_e(&t, &x));
        }
    }

    #[test]
    fn exhaustive_small_shapes() {
        let c = Ceilings::default();
        for s in ["1,2,5/3,4", "1,3,5/2,4", "1,2,3,6/4,5", "1,2,4,6/3,5", "1,3,4,6/2/5", "1,2,3,6/4/5"] {
            for order in [YAssignment::Ascending, YAssignment::Descending] {
                let r = verify_decomposition(&tab(s), order, &c).unwrap();
                assert!(r.holds(), "{s} {order}: {r:?}");
            }
        }
    }

    #[test]
    fn y_cosets_cancel_at_seven() {
        let r = verify_decomposition(&tab("1,3,6,7/2,5/4"), YAssignment::Ascending, &Ceilings::default()).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(r.y_cosets_touched > 0);
        assert_eq!(r.summands, 6);
    }

    #[test]
    fn omega_codes() {
        let t = tab("1,3,6,7/2,5/4");
        let d = decompose(&t, YAssignment::Ascending, BUDGET).unwrap();
        let y = t.y_set();
        for p in &d.summands {
            assert_eq!(p.omega_code(&[false; 3]).unwrap().entries(), p.pairs.iter().map(|q| q.1).collect::<Vec<_>>());
            let clean = all_omegas(3).filter(|w| !p.omega_code(w).unwrap().meets(&y)).count();
            assert_eq!(clean, 1 << p.k);
            assert!(p.omega_code(&[true]).is_err());
        }
    }

    #[test]
    fn build_p_pi_checks_membership() {
        let t = tab("1,2,5/3,4");
        let id = Permutation::identity(5);
        let p = build_p_pi(&t, &id, &id, YAssignment::Ascending).unwrap();
        assert_eq!(p.pairs, vec![(1, 3), (2, 4)]);
        let bad = Permutation::transposition(5, 1, 2).unwrap();
        assert!(build_p_pi(&t, &bad, &id, YAssignment::Ascending).is_err());
        assert!(build_p_pi(&t, &id, &Permutation::transposition(5, 1, 3).unwrap(), YAssignment::Ascending).is_err());
        assert!(matches!(
            decompose(&tab("1,4/2,3"), YAssignment::Ascending, BUDGET),
            Err(Error::Precondition(_))
        ));
        // n = 2m is outside the family
        assert!(decompose(&tab("1,2,6/3,4/5"), YAssignment::Ascending, BUDGET).is_err());
    }

    #[test]
    fn supports() {
        let c = Ceilings::default();
        for s in ["1,3/2", "1,2,5/3,4", "1,3,4,6/2/5", "1,2,4,6/3,5"] {
            let r = verify_support_partitions(&tab(s), &c).unwrap();
            assert!(r.all_hold(), "{s}: {r:?}");
        }
    }

    #[test]
    fn y_assignment_parsing() {
        assert_eq!("asc".parse::<YAssignment>().unwrap(), YAssignment::Ascending);
        assert_eq!("desc".parse::<YAssignment>().unwrap(), YAssignment::Descending);
        assert!("up".parse::<YAssignment>().is_err());
    }
}
