//! The two Star graph variants on `Sym_n` and exact eigenfunction checks.
//!
//! Both graphs are implicit. Adjacency is a position swap with the pivot
//! position: position 1 for [`StarKind::StarS`], position `n` for
//! [`StarKind::StarJM`]. A position swap is right composition with a
//! transposition, so left translations `π ↦ g ∘ π` are automorphisms.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{enumerate_with_ceiling, Permutation};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StarKind {
    /// Generators (1 i), pivot position 1.
    StarS,
    /// Generators (i n), pivot position n.
    StarJM,
}

impl StarKind {
    pub fn pivot(self, n: usize) -> usize {
        match self {
            StarKind::StarS => 1,
            StarKind::StarJM => n,
        }
    }
}

impl fmt::Display for StarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StarKind::StarS => "StarS",
            StarKind::StarJM => "StarJM",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphVariant {
    pub kind: StarKind,
    pub n: usize,
}

impl GraphVariant {
    pub fn new(kind: StarKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("Star graph needs n >= 2, got {n}")));
        }
        Ok(GraphVariant { kind, n })
    }

    pub fn star(n: usize) -> Result<Self> {
        Self::new(StarKind::StarS, n)
    }

    pub fn star_jm(n: usize) -> Result<Self> {
        Self::new(StarKind::StarJM, n)
    }

    pub fn pivot(&self) -> usize {
        self.kind.pivot(self.n)
    }

    pub fn degree(&self) -> usize {
        self.n - 1
    }

    /// Positions that get exchanged with the pivot, ascending.
    fn partners(&self) -> impl Iterator<Item = usize> {
        let pivot = self.pivot();
        (1..=self.n).filter(move |&s| s != pivot)
    }

    pub fn neighbors(&self, pi: &Permutation) -> Result<Vec<Permutation>> {
        pi.check_size(self.n)?;
        let pivot = self.pivot();
        self.partners()
            .map(|s| pi.swap_positions(pivot, s))
            .collect()
    }

    /// The 3-cycles `(1 r s)` around the identity, in block order: block
    /// `s = 2..n`, within a block `r` ascending over `{2..n} \ {s}`.
    pub fn second_neighborhood_identity(&self) -> Result<Vec<Permutation>> {
        if self.kind != StarKind::StarS {
            return Err(Error::Precondition(
                "second neighbourhood ordering is defined for StarS".into(),
            ));
        }
        second_neighborhood_identity(self.n)
    }
}

pub fn second_neighborhood_identity(n: usize) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::EmptyDomain(format!(
            "second neighbourhood needs n >= 3, got {n}"
        )));
    }
    let mut out = Vec::with_capacity((n - 1) * (n - 2));
    for s in 2..=n {
        for r in (2..=n).filter(|&r| r != s) {
            out.push(Permutation::from_cycle(n, &[1, r, s])?);
        }
    }
    Ok(out)
}

/// A real function on the vertices of `Sym_n`.
pub trait VertexFunction {
    fn size(&self) -> usize;

    fn value(&self, pi: &Permutation) -> Rational;

    /// Vertices where the function may be nonzero, when cheaply known.
    fn support(&self) -> Option<Vec<Permutation>> {
        None
    }
}

impl<F: VertexFunction + ?Sized> VertexFunction for &F {
    fn size(&self) -> usize {
        (**self).size()
    }
    fn value(&self, pi: &Permutation) -> Rational {
        (**self).value(pi)
    }
    fn support(&self) -> Option<Vec<Permutation>> {
        (**self).support()
    }
}

/// Adapts a closure to [`VertexFunction`].
pub struct FnFunction<F> {
    n: usize,
    f: F,
}

impl<F: Fn(&Permutation) -> Rational> FnFunction<F> {
    pub fn new(n: usize, f: F) -> Self {
        FnFunction { n, f }
    }
}

impl<F: Fn(&Permutation) -> Rational> VertexFunction for FnFunction<F> {
    fn size(&self) -> usize {
        self.n
    }
    fn value(&self, pi: &Permutation) -> Rational {
        (self.f)(pi)
    }
}

/// Finite map `Permutation -> Rational`; absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseFunction {
    n: usize,
    variant: StarKind,
    entries: BTreeMap<Permutation, Rational>,
}

impl SparseFunction {
    pub fn new(n: usize, variant: StarKind) -> Self {
        SparseFunction {
            n,
            variant,
            entries: BTreeMap::new(),
        }
    }

    /// Samples `f` on all of `Sym_n`.
    pub fn materialize<F: VertexFunction + ?Sized>(
        f: &F,
        variant: StarKind,
        ceiling: usize,
    ) -> Result<Self> {
        let mut out = SparseFunction::new(f.size(), variant);
        for pi in enumerate_with_ceiling(f.size(), ceiling)? {
            let v = f.value(&pi);
            if !v.is_zero() {
                out.entries.insert(pi, v);
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> StarKind {
        self.variant
    }

    pub fn with_variant(mut self, variant: StarKind) -> Self {
        self.variant = variant;
        self
    }

    /// Sets `f(pi) = value`; zero removes the entry.
    pub fn set(&mut self, pi: Permutation, value: Rational) -> Result<()> {
        pi.check_size(self.n)?;
        if value.is_zero() {
            self.entries.remove(&pi);
        } else {
            self.entries.insert(pi, value);
        }
        Ok(())
    }

    pub fn get(&self, pi: &Permutation) -> Rational {
        self.entries.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> &BTreeMap<Permutation, Rational> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &SparseFunction) -> Result<SparseFunction> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = self.clone();
        for (pi, v) in &other.entries {
            let sum = out.get(pi) + v;
            out.set(pi.clone(), sum)?;
        }
        Ok(out)
    }
}

impl VertexFunction for SparseFunction {
    fn size(&self) -> usize {
        self.n
    }
    fn value(&self, pi: &Permutation) -> Rational {
        self.get(pi)
    }
    fn support(&self) -> Option<Vec<Permutation>> {
        Some(self.entries.keys().cloned().collect())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub ceiling: usize,
    pub max_witnesses: usize,
    /// Check only `supp(f) ∪ N(supp(f))`; elsewhere both sides vanish.
    pub support_closure: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            ceiling: crate::config::Ceilings::default().enumeration,
            max_witnesses: 10,
            support_closure: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub vertex: Permutation,
    /// θ·f(x)
    pub lhs: Rational,
    /// Σ_{y ∈ N(x)} f(y)
    pub rhs: Rational,
}

#[derive(Clone, Debug)]
pub struct EigenReport {
    /// The local condition held at every checked vertex.
    pub holds: bool,
    pub nonzero: bool,
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl EigenReport {
    /// `holds` and `f ≢ 0`.
    pub fn is_eigenfunction(&self) -> bool {
        self.holds && self.nonzero
    }
}

/// Checks `θ·f(x) = Σ_{y ∈ N(x)} f(y)` exactly.
pub fn verify_eigenfunction<F: VertexFunction + ?Sized>(
    g: &GraphVariant,
    f: &F,
    theta: &Rational,
    opts: &VerifyOptions,
) -> Result<EigenReport> {
    if f.size() != g.n {
        return Err(Error::SizeMismatch {
            expected: g.n,
            found: f.size(),
        });
    }
    let mut report = EigenReport {
        holds: true,
        nonzero: false,
        checked: 0,
        failures: 0,
        witnesses: Vec::new(),
    };
    let mut check = |x: &Permutation, fx: Rational| -> Result<()> {
        let mut rhs = Rational::zero();
        for y in g.neighbors(x)? {
            rhs += f.value(&y);
        }
        let lhs = theta * &fx;
        report.checked += 1;
        if lhs != rhs {
            report.holds = false;
            report.failures += 1;
            if report.witnesses.len() < opts.max_witnesses {
                report.witnesses.push(Witness {
                    vertex: x.clone(),
                    lhs,
                    rhs,
                });
            }
        }
        Ok(())
    };

    if opts.support_closure {
        let support = f.support().ok_or_else(|| {
            Error::Precondition("support-closure mode needs a function with known support".into())
        })?;
        let mut region: BTreeSet<Permutation> = BTreeSet::new();
        for x in &support {
            if !f.value(x).is_zero() {
                report.nonzero = true;
            }
            region.insert(x.clone());
            region.extend(g.neighbors(x)?);
        }
        for x in &region {
            check(x, f.value(x))?;
        }
    } else {
        for x in enumerate_with_ceiling(g.n, opts.ceiling)? {
            let fx = f.value(&x);
            if !fx.is_zero() {
                report.nonzero = true;
            }
            check(&x, fx)?;
        }
    }
    Ok(report)
}

pub const INTEGRALITY_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub n: usize,
    pub multiplicities: BTreeMap<i64, usize>,
}

impl Spectrum {
    pub fn multiplicity(&self, theta: i64) -> usize {
        self.multiplicities.get(&theta).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.multiplicities.values().sum()
    }
}

/// Dense floating adjacency spectrum, rounded to integers.
pub fn spectrum_report(g: &GraphVariant, ceiling: usize) -> Result<Spectrum> {
    let vertices: Vec<Permutation> = enumerate_with_ceiling(g.n, ceiling)
        .map_err(|e| match e {
            Error::CeilingExceeded { n, ceiling, .. } => Error::CeilingExceeded {
                what: "dense spectrum",
                n,
                ceiling,
            },
            other => other,
        })?
        .collect();
    let index: HashMap<&Permutation, usize> =
        vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let size = vertices.len();
    let mut adj = DMatrix::<f64>::zeros(size, size);
    for (i, x) in vertices.iter().enumerate() {
        for y in g.neighbors(x)? {
            adj[(i, index[&y])] = 1.0;
        }
    }
    let eig = SymmetricEigen::new(adj);
    let mut multiplicities = BTreeMap::new();
    for &value in eig.eigenvalues.iter() {
        let rounded = value.round();
        if (value - rounded).abs() > INTEGRALITY_TOLERANCE {
            return Err(Error::IntegralityViolation {
                value,
                tolerance: INTEGRALITY_TOLERANCE,
            });
        }
        *multiplicities.entry(rounded as i64).or_insert(0) += 1;
    }
    Ok(Spectrum {
        n: g.n,
        multiplicities,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transport {
    StarToJm,
    JmToStar,
}

/// Relabels positions 1 and n: the isomorphism between the two variants.
pub fn exchange_end_positions(pi: &Permutation) -> Permutation {
    let n = pi.len();
    if n < 2 {
        return pi.clone();
    }
    pi.swap_positions(1, n).expect("positions in range")
}

/// Transports a function along [`exchange_end_positions`].
pub fn jm_isomorphism(f: &SparseFunction, direction: Transport) -> Result<SparseFunction> {
    let (source, target) = match direction {
        Transport::StarToJm => (StarKind::StarS, StarKind::StarJM),
        Transport::JmToStar => (StarKind::StarJM, StarKind::StarS),
    };
    if f.variant() != source {
        return Err(Error::Precondition(format!(
            "expected a {source} function, got {}",
            f.variant()
        )));
    }
    let mut out = SparseFunction::new(f.n(), target);
    for (pi, v) in f.entries() {
        out.set(exchange_end_positions(pi), v.clone())?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_symmetric_group;
    use crate::rational::int;
    use std::collections::VecDeque;

    fn p(w: &[usize]) -> Permutation {
        Permutation::from_word(w).unwrap()
    }

    fn sorted(mut v: Vec<Permutation>) -> Vec<Permutation> {
        v.sort();
        v
    }

    #[test]
    fn neighbor_examples() {
        let s = GraphVariant::star(3).unwrap();
        assert_eq!(
            sorted(s.neighbors(&p(&[1, 2, 3])).unwrap()),
            sorted(vec![p(&[2, 1, 3]), p(&[3, 2, 1])])
        );
        let jm = GraphVariant::star_jm(3).unwrap();
        assert_eq!(
            sorted(jm.neighbors(&p(&[1, 2, 3])).unwrap()),
            sorted(vec![p(&[3, 2, 1]), p(&[1, 3, 2])])
        );
        assert!(s.neighbors(&p(&[1, 2])).is_err());
    }

    #[test]
    fn graph_invariants() {
        for kind in [StarKind::StarS, StarKind::StarJM] {
            let g = GraphVariant::new(kind, 5).unwrap();
            for x in enumerate_symmetric_group(5).unwrap() {
                let nb = g.neighbors(&x).unwrap();
                assert_eq!(nb.len(), 4);
                assert_eq!(nb.iter().collect::<BTreeSet<_>>().len(), 4);
                for y in &nb {
                    assert_ne!(y, &x);
                    assert_eq!(y.sign(), -x.sign());
                    assert!(g.neighbors(y).unwrap().contains(&x));
                }
            }
        }
    }

    fn bfs_distances(g: &GraphVariant) -> HashMap<Permutation, usize> {
        let start = Permutation::identity(g.n);
        let mut dist = HashMap::from([(start.clone(), 0)]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for y in g.neighbors(&x).unwrap() {
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    #[test]
    fn second_neighbourhood_is_distance_two() {
        for n in 3..=6 {
            let g = GraphVariant::star(n).unwrap();
            let n2 = g.second_neighborhood_identity().unwrap();
            assert_eq!(n2.len(), (n - 1) * (n - 2));
            let dist = bfs_distances(&g);
            let at_two: BTreeSet<_> = dist
                .iter()
                .filter(|(_, &d)| d == 2)
                .map(|(x, _)| x.clone())
                .collect();
            assert_eq!(n2.iter().cloned().collect::<BTreeSet<_>>(), at_two);
        }
        let n3 = second_neighborhood_identity(3).unwrap();
        assert_eq!(n3, vec![p(&[3, 1, 2]), p(&[2, 3, 1])]);
        assert!(second_neighborhood_identity(2).is_err());
        assert!(GraphVariant::star_jm(4)
            .unwrap()
            .second_neighborhood_identity()
            .is_err());
    }

    #[test]
    fn constant_function_is_principal() {
        for kind in [StarKind::StarS, StarKind::StarJM] {
            let g = GraphVariant::new(kind, 4).unwrap();
            let one = FnFunction::new(4, |_| int(1));
            let r = verify_eigenfunction(&g, &one, &int(3), &VerifyOptions::default()).unwrap();
            assert!(r.is_eigenfunction());
            assert_eq!(r.checked, 24);
            let r = verify_eigenfunction(&g, &one, &int(2), &VerifyOptions::default()).unwrap();
            assert!(!r.holds);
            assert_eq!(r.failures, 24);
            assert_eq!(r.witnesses.len(), 10);
        }
    }

    #[test]
    fn zero_function_is_not_an_eigenfunction() {
        let g = GraphVariant::star(3).unwrap();
        let f = SparseFunction::new(3, StarKind::StarS);
        let r = verify_eigenfunction(&g, &f, &int(1), &VerifyOptions::default()).unwrap();
        assert!(r.holds);
        assert!(!r.is_eigenfunction());
    }

    #[test]
    fn ceiling_and_support_closure() {
        let g = GraphVariant::star(9).unwrap();
        let f = SparseFunction::new(9, StarKind::StarS);
        let opts = VerifyOptions::default();
        assert!(matches!(
            verify_eigenfunction(&g, &f, &int(1), &opts),
            Err(Error::CeilingExceeded { .. })
        ));
        let closure = VerifyOptions {
            support_closure: true,
            ..opts
        };
        assert!(verify_eigenfunction(&g, &f, &int(1), &closure).unwrap().holds);
        let lazy = FnFunction::new(9, |_| int(0));
        assert!(verify_eigenfunction(&g, &lazy, &int(1), &closure).is_err());
    }

    #[test]
    fn spectrum_small() {
        let spec = spectrum_report(&GraphVariant::star(3).unwrap(), 6).unwrap();
        // S_3 star graph is the 6-cycle
        assert_eq!(
            spec.multiplicities,
            BTreeMap::from([(-2, 1), (-1, 2), (1, 2), (2, 1)])
        );
        assert!(spectrum_report(&GraphVariant::star(7).unwrap(), 6).is_err());
    }

    #[test]
    fn transport_is_an_involution() {
        let mut f = SparseFunction::new(4, StarKind::StarS);
        f.set(p(&[2, 1, 3, 4]), int(1)).unwrap();
        f.set(p(&[4, 1, 3, 2]), int(-3)).unwrap();
        let there = jm_isomorphism(&f, Transport::StarToJm).unwrap();
        assert_eq!(there.variant(), StarKind::StarJM);
        assert_eq!(there.get(&p(&[4, 1, 3, 2])), int(1));
        let back = jm_isomorphism(&there, Transport::JmToStar).unwrap();
        assert_eq!(back, f);
        assert!(jm_isomorphism(&f, Transport::JmToStar).is_err());
    }

    #[test]
    fn transport_maps_adjacency() {
        let s = GraphVariant::star(5).unwrap();
        let jm = GraphVariant::star_jm(5).unwrap();
        for x in enumerate_symmetric_group(5).unwrap() {
            let mapped: BTreeSet<_> = jm
                .neighbors(&x)
                .unwrap()
                .iter()
                .map(exchange_end_positions)
                .collect();
            let direct: BTreeSet<_> = s
                .neighbors(&exchange_end_positions(&x))
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(mapped, direct);
        }
    }
}
