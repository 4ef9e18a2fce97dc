//! Permutations of `{1..n}` in one-line notation.
//!
//! All public indices are 1-based: `word[p]` is the value at position `p`.
//! Composition acts on values from the right first, `(a ∘ b)(x) = a(b(x))`.
//! Exchanging two *positions* of a word is `π ∘ (p q)`, so it is exposed as
//! [`Permutation::swap_positions`] rather than left to the caller.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hard limit for [`enumerate_symmetric_group`]; 8! = 40320 vertices.
pub const MAX_ENUMERATION_N: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // values 1..=n
    word: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "n = {n} too large");
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    pub fn from_word(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let not_bijection = || Error::NotABijection {
            n,
            word: word.to_vec(),
        };
        if n > u8::MAX as usize {
            return Err(not_bijection());
        }
        let mut seen = vec![false; n + 1];
        for &v in word {
            if v == 0 || v > n || seen[v] {
                return Err(not_bijection());
            }
            seen[v] = true;
        }
        Ok(Permutation {
            word: word.iter().map(|&v| v as u8).collect(),
        })
    }

    /// The transposition exchanging points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::Precondition(format!(
                "transposition needs two distinct points, got ({a} {b})"
            )));
        }
        Self::from_cycle(n, &[a, b])
    }

    /// `cycle[i] -> cycle[i + 1]`, last back to first; other points fixed.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for &c in cycle {
            if c == 0 || c > n {
                return Err(Error::OutOfRange {
                    what: "cycle point",
                    value: c,
                    n,
                });
            }
            if seen[c] {
                return Err(Error::RepeatedPoint(c));
            }
            seen[c] = true;
        }
        for (i, &c) in cycle.iter().enumerate() {
            word[c - 1] = cycle[(i + 1) % cycle.len()];
        }
        Self::from_word(&word)
    }

    /// Parses cycle notation such as `"(1 3 2)"` or `"(1 2)(3 4)"`.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let mut result = Self::identity(n);
        let mut rest = s.trim();
        if rest.is_empty() || rest == "()" {
            return Ok(result);
        }
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::parse("cycle", format!("expected '(...)' in {s:?}")))?;
            let points = inner
                .0
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| Error::parse("cycle", format!("bad point {p:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let c = Self::from_cycle(n, &points)?;
            result = result.compose(&c)?;
            rest = inner.1.trim_start();
        }
        Ok(result)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// π(x), equivalently the entry at position `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.word[x - 1] as usize
    }

    /// The position of value `v`, i.e. π⁻¹(v).
    pub fn position_of(&self, v: usize) -> usize {
        self.word
            .iter()
            .position(|&w| w as usize == v)
            .map(|p| p + 1)
            .expect("value out of range")
    }

    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v as usize).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { word: inv }
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_size(other.len())?;
        Ok(Permutation {
            word: other
                .word
                .iter()
                .map(|&x| self.word[x as usize - 1])
                .collect(),
        })
    }

    /// Exchanges the entries at positions `p` and `q`.
    pub fn swap_positions(&self, p: usize, q: usize) -> Result<Self> {
        let n = self.len();
        for x in [p, q] {
            if x == 0 || x > n {
                return Err(Error::OutOfRange {
                    what: "position",
                    value: x,
                    n,
                });
            }
        }
        if p == q {
            return Err(Error::Precondition(format!(
                "swap_positions needs distinct positions, got {p} twice"
            )));
        }
        let mut word = self.word.clone();
        word.swap(p - 1, q - 1);
        Ok(Permutation { word })
    }

    /// +1 for even, -1 for odd permutations.
    pub fn sign(&self) -> i32 {
        let n = self.word.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.word[x] as usize - 1;
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub(crate) fn check_size(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses `"[3,1,2]"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse("permutation", format!("expected '[..]', got {s:?}")))?;
        let word = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| {
                        Error::parse("permutation", format!("bad entry {p:?} in {s:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::from_word(&word)
    }
}

/// All of `Sym_n` in lexicographic order of one-line words.
pub fn enumerate_symmetric_group(n: usize) -> Result<SymmetricGroupIter> {
    enumerate_with_ceiling(n, MAX_ENUMERATION_N)
}

pub fn enumerate_with_ceiling(n: usize, ceiling: usize) -> Result<SymmetricGroupIter> {
    if n == 0 {
        return Err(Error::EmptyDomain("Sym_0".into()));
    }
    if n > ceiling {
        return Err(Error::CeilingExceeded {
            what: "full enumeration of Sym_n",
            n,
            ceiling,
        });
    }
    Ok(SymmetricGroupIter {
        next: Some((1..=n as u8).collect()),
    })
}

pub struct SymmetricGroupIter {
    next: Option<Vec<u8>>,
}

impl Iterator for SymmetricGroupIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        // standard next-permutation step
        if let Some(i) = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) {
            let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
            w.swap(i, j);
            w[i + 1..].reverse();
            self.next = Some(w);
        }
        Some(Permutation { word: current })
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn p(w: &[usize]) -> Permutation {
        Permutation::from_word(w).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(&[2, 1, 3]).compose(&p(&[1, 3, 2])).unwrap(), p(&[2, 3, 1]));
        let b = p(&[3, 1, 4, 2]);
        assert_eq!(Permutation::identity(4).compose(&b).unwrap(), b);
        assert_eq!(p(&[2, 1]).compose(&p(&[2, 1])).unwrap(), p(&[1, 2]));
        assert!(matches!(
            p(&[2, 1]).compose(&p(&[1, 2, 3])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn swap_positions_examples() {
        assert_eq!(p(&[3, 1, 2]).swap_positions(1, 2).unwrap(), p(&[1, 3, 2]));
        assert_eq!(
            Permutation::identity(5).swap_positions(1, 5).unwrap(),
            p(&[5, 2, 3, 4, 1])
        );
        let x = p(&[4, 2, 1, 3]);
        assert_eq!(x.swap_positions(2, 4).unwrap().swap_positions(2, 4).unwrap(), x);
        assert!(x.swap_positions(0, 2).is_err());
        assert!(x.swap_positions(2, 5).is_err());
        assert!(x.swap_positions(2, 2).is_err());
    }

    #[test]
    fn swap_is_right_composition_with_transposition() {
        let x = p(&[4, 2, 1, 3]);
        let t = Permutation::transposition(4, 1, 3).unwrap();
        assert_eq!(x.swap_positions(1, 3).unwrap(), x.compose(&t).unwrap());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(Permutation::from_cycle(4, &[1, 3, 2]).unwrap(), p(&[3, 1, 2, 4]));
        assert_eq!(Permutation::from_cycle(4, &[1, 2]).unwrap(), p(&[2, 1, 3, 4]));
        assert_eq!(Permutation::from_cycle(4, &[]).unwrap(), Permutation::identity(4));
        assert!(matches!(
            Permutation::from_cycle(4, &[1, 2, 1]),
            Err(Error::RepeatedPoint(1))
        ));
        assert!(Permutation::from_cycle(3, &[1, 4]).is_err());
        assert_eq!(
            Permutation::parse_cycles(4, "(1 3 2)").unwrap(),
            p(&[3, 1, 2, 4])
        );
        assert_eq!(
            Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap(),
            p(&[2, 1, 4, 3])
        );
    }

    #[test]
    fn text_form() {
        let x: Permutation = "[3,1,2]".parse().unwrap();
        assert_eq!(x, p(&[3, 1, 2]));
        assert_eq!(x.to_string(), "[3,1,2]");
        assert!(matches!(
            "[2,1,1]".parse::<Permutation>(),
            Err(Error::NotABijection { .. })
        ));
        assert!("3,1,2".parse::<Permutation>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_symmetric_group(3).unwrap().count(), 6);
        let one: Vec<_> = enumerate_symmetric_group(1).unwrap().collect();
        assert_eq!(one, vec![Permutation::identity(1)]);
        let five: HashSet<_> = enumerate_symmetric_group(5).unwrap().collect();
        assert_eq!(five.len(), 120);
        assert!(enumerate_symmetric_group(9).is_err());
        assert!(enumerate_with_ceiling(6, 5).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<_> = enumerate_symmetric_group(4).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all[0].is_identity());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|w| Permutation::from_word(&w).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)) {
            let ab = a.compose(&b).unwrap();
            prop_assert_eq!(ab.sign(), a.sign() * b.sign());
            prop_assert_eq!(
                ab.compose(&c).unwrap(),
                a.compose(&b.compose(&c).unwrap()).unwrap()
            );
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert_eq!(a.inverse().inverse(), a.clone());
        }

        #[test]
        fn swap_touches_exactly_two_positions(a in arb_perm(7), p in 1usize..=7, q in 1usize..=7) {
            prop_assume!(p != q);
            let s = a.swap_positions(p, q).unwrap();
            let diff: Vec<usize> = (1..=7).filter(|&x| s.apply(x) != a.apply(x)).collect();
            prop_assert_eq!(diff, { let mut v = vec![p, q]; v.sort(); v });
            prop_assert_eq!(s.sign(), -a.sign());
        }
    }
}
