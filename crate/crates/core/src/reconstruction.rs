//! The matrix `M_n` of the `F_2` basis restricted to the second
//! neighbourhood of the identity, and recovery of an `(n-2)`-eigenfunction
//! of `S_n` from its values there.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Ceilings;
use crate::error::{Error, Result};
use crate::graph::{second_neighborhood_identity, verify_eigenfunction, GraphVariant, SparseFunction, StarKind, VerifyOptions, VertexFunction};
use crate::linalg::{self, IntMatrix};
use crate::perm::{enumerate_with_ceiling, Permutation};
use crate::pi::{f2_basis, PiSpec};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionMatrix {
    pub n: usize,
    pub entries: Vec<Vec<i64>>,
    pub row_labels: Vec<PiSpec>,
    pub col_labels: Vec<Permutation>,
}

impl ReconstructionMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn to_big(&self) -> IntMatrix {
        linalg::to_big(&self.entries)
    }
}

/// Rows: `f2_basis(n)`. Columns: `N_2` of the identity. Entries by evaluation.
pub fn build_mn(n: usize) -> Result<ReconstructionMatrix> {
    let rows = f2_basis(n)?;
    let cols = second_neighborhood_identity(n)?;
    let entries = rows
        .iter()
        .map(|f| cols.iter().map(|x| f.eval(x) as i64).collect())
        .collect();
    Ok(ReconstructionMatrix {
        n,
        entries,
        row_labels: rows,
        col_labels: cols,
    })
}

/// Block `(i1, i2)` of `M_n` from its closed description, `i1, i2 ∈ 2..n`.
pub fn formula_block(n: usize, i1: usize, i2: usize) -> Vec<Vec<i64>> {
    let b = n - 2;
    let mut block = vec![vec![0; b]; b];
    for (r, row) in block.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = match (i1, i2) {
                // -I
                (2, 2) => -((r == c) as i64),
                // E: zero first column, ones elsewhere
                (2, _) => (c != 0) as i64,
                // D: first column ones, -I on the rest
                _ if i1 == i2 => {
                    if c == 0 {
                        1
                    } else {
                        -((r == c) as i64)
                    }
                }
                // C^l: a single row of -1 with a zero in column l
                _ => {
                    let l = if i1 > i2 { i1 - 2 } else { i1 - 1 };
                    if r == 0 && c + 1 != l {
                        -1
                    } else {
                        0
                    }
                }
            };
        }
    }
    block
}

pub fn formula_matrix(n: usize) -> Result<Vec<Vec<i64>>> {
    if n < 4 {
        return Err(Error::Precondition(format!("block description needs n >= 4, got {n}")));
    }
    let b = n - 2;
    let mut out = vec![vec![0; (n - 1) * b]; (n - 1) * b];
    for (bi, i1) in (2..=n).enumerate() {
        for (bj, i2) in (2..=n).enumerate() {
            for (r, row) in formula_block(n, i1, i2).into_iter().enumerate() {
                out[bi * b + r][bj * b..(bj + 1) * b].copy_from_slice(&row);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMismatch {
    pub row: usize,
    pub col: usize,
    pub evaluated: i64,
    pub formula: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub n: usize,
    pub cells: usize,
    pub first_mismatch: Option<CellMismatch>,
}

impl BlockReport {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn check_block_structure(m: &ReconstructionMatrix) -> Result<BlockReport> {
    let formula = formula_matrix(m.n)?;
    let mut first_mismatch = None;
    'scan: for (r, (a, b)) in m.entries.iter().zip(&formula).enumerate() {
        for (c, (&x, &y)) in a.iter().zip(b).enumerate() {
            if x != y {
                first_mismatch = Some(CellMismatch {
                    row: r,
                    col: c,
                    evaluated: x,
                    formula: y,
                });
                break 'scan;
            }
        }
    }
    Ok(BlockReport {
        n: m.n,
        cells: m.size() * m.size(),
        first_mismatch,
    })
}

pub fn det_exact(m: &ReconstructionMatrix) -> BigInt {
    linalg::determinant(&m.to_big())
}

/// `(-1)^{n-3} (n-2)^{n-2} (n^2 - 5n + 5)`.
pub fn det_closed_form(n: usize) -> BigInt {
    let n = n as i64;
    let sign = if (n - 3).rem_euclid(2) == 0 { 1 } else { -1 };
    BigInt::from(sign) * BigInt::from(n - 2).pow((n - 2) as u32) * BigInt::from(n * n - 5 * n + 5)
}

/// `N_2` of `base`: `base ∘ x` for `x ∈ N_2(id)`, in column order.
pub fn second_neighborhood(base: &Permutation) -> Result<Vec<Permutation>> {
    second_neighborhood_identity(base.len())?
        .iter()
        .map(|x| base.compose(x))
        .collect()
}

/// `Σ c_r f_r(base⁻¹ ∘ π)` over the `F_2` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Combination {
    pub n: usize,
    pub base: Permutation,
    pub basis: Vec<PiSpec>,
    pub coefficients: Vec<Rational>,
}

impl F2Combination {
    pub fn new(n: usize, coefficients: Vec<Rational>) -> Result<Self> {
        let basis = f2_basis(n)?;
        if coefficients.len() != basis.len() {
            return Err(Error::SizeMismatch {
                expected: basis.len(),
                found: coefficients.len(),
            });
        }
        Ok(F2Combination {
            n,
            base: Permutation::identity(n),
            basis,
            coefficients,
        })
    }

    pub fn to_sparse(&self, ceiling: usize) -> Result<SparseFunction> {
        SparseFunction::materialize(self, StarKind::StarS, ceiling)
    }
}

impl VertexFunction for F2Combination {
    fn size(&self) -> usize {
        self.n
    }
    fn value(&self, pi: &Permutation) -> Rational {
        let x = self.base.inverse().compose(pi).expect("same n");
        self.basis
            .iter()
            .zip(&self.coefficients)
            .filter(|(_, c)| !c.is_zero())
            .map(|(f, c)| c * int(f.eval(&x) as i64))
            .sum()
    }
}

/// Values of `f` on `N_2(base)`.
pub fn restrict<F: VertexFunction + ?Sized>(f: &F, base: &Permutation) -> Result<BTreeMap<Permutation, Rational>> {
    Ok(second_neighborhood(base)?
        .into_iter()
        .map(|x| {
            let v = f.value(&x);
            (x, v)
        })
        .collect())
}

/// Recovers the unique `F_2` combination with the given values on
/// `N_2(base)`. Keys must be exactly that set.
pub fn reconstruct(
    n: usize,
    boundary: &BTreeMap<Permutation, Rational>,
    base: &Permutation,
) -> Result<F2Combination> {
    base.check_size(n)?;
    let cols = second_neighborhood(base)?;
    let expected: BTreeSet<&Permutation> = cols.iter().collect();
    if let Some(extra) = boundary.keys().find(|k| !expected.contains(k)) {
        return Err(Error::Boundary(format!("{extra} is not in the second neighbourhood of {base}")));
    }
    if let Some(missing) = cols.iter().find(|c| !boundary.contains_key(c)) {
        return Err(Error::Boundary(format!("no boundary value for {missing}")));
    }
    let m = build_mn(n)?;
    let b: Vec<Rational> = cols.iter().map(|c| boundary[c].clone()).collect();
    let coefficients = linalg::solve(&linalg::transpose(&m.to_big()), &b)?;
    Ok(F2Combination {
        n,
        base: base.clone(),
        basis: m.row_labels,
        coefficients,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    /// Coefficients recovered exactly and the functions agree on all of `Sym_n`.
    pub exact: usize,
    /// Reconstructed function passes the eigen-check with `θ = n - 2`.
    pub eigen: usize,
}

impl ReconstructionReport {
    pub fn holds(&self) -> bool {
        self.exact == self.trials && self.eigen == self.trials
    }
}

pub fn random_coefficients(len: usize, rng: &mut impl Rng) -> Vec<Rational> {
    loop {
        let c: Vec<i64> = (0..len).map(|_| rng.gen_range(-9..=9)).collect();
        if c.iter().any(|&v| v != 0) {
            return c.into_iter().map(int).collect();
        }
    }
}

pub fn verify_reconstruction_theorem(n: usize, trials: usize, seed: u64, ceilings: &Ceilings) -> Result<ReconstructionReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis_len = (n - 1) * (n - 2);
    let g = GraphVariant::star(n)?;
    let opts = VerifyOptions {
        ceiling: ceilings.enumeration,
        ..VerifyOptions::default()
    };
    let theta = int(n as i64 - 2);
    let id = Permutation::identity(n);
    let mut report = ReconstructionReport {
        n,
        seed,
        trials,
        exact: 0,
        eigen: 0,
    };
    for _ in 0..trials {
        let f = F2Combination::new(n, random_coefficients(basis_len, &mut rng))?;
        let h = reconstruct(n, &restrict(&f, &id)?, &id)?;
        let agree = h.coefficients == f.coefficients
            && enumerate_with_ceiling(n, ceilings.enumeration)?.all(|x| h.value(&x) == f.value(&x));
        report.exact += agree as usize;
        report.eigen += verify_eigenfunction(&g, &h, &theta, &opts)?.is_eigenfunction() as usize;
    }
    Ok(report)
}

/// Largest absolute entry, for sanity output.
pub fn max_entry(m: &ReconstructionMatrix) -> BigInt {
    linalg::max_abs(&m.to_big()).abs()
}
