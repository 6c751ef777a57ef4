//! Monomial operators on `V(m, F_{1^l})`.
//!
//! Without addition the only linear maps whose action is always defined have
//! at most one nonzero entry per row and per column. The invertible ones are
//! [`MonomialMatrix`] values, `GL(m, F_{1^l}) = μ_l ≀ S_m`; the possibly
//! singular ones are [`SubunitalMatrix`] values.
//!
//! Both are stored by column: column `j` sends coordinate `j` to row
//! `π(j)` with scalar `s_j`, so the only nonzero entry of column `j` sits at
//! `(π(j), j)`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Budget, Error, Result};
use crate::f1_algebra::{Conjugation, F1Element};
use crate::frames::StateVector;

/// Operators that act on states without ever forming an undefined sum.
pub trait LinearOperator {
    fn dim(&self) -> usize;
    fn order(&self) -> u32;
    /// Nonzero entries as `(row, col, value)`, 0-based, sorted by row.
    fn nonzero_entries(&self) -> Vec<(usize, usize, F1Element)>;
    fn apply(&self, x: &StateVector) -> Result<StateVector>;
}

fn check_operand(dim: usize, order: u32, x: &StateVector) -> Result<()> {
    if x.order() != order {
        return Err(Error::OrderMismatch {
            left: order,
            right: x.order(),
        });
    }
    if x.dim() != dim {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: x.dim(),
        });
    }
    Ok(())
}

/// An invertible monomial matrix: a permutation with one unit scalar per column.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MonomialMatrix {
    order: u32,
    perm: Vec<usize>,
    scalars: Vec<F1Element>,
}

impl MonomialMatrix {
    /// `perm[j]` is the row of the nonzero entry in column `j`, whose value is `scalars[j]`.
    pub fn new(perm: Vec<usize>, scalars: Vec<F1Element>) -> Result<Self> {
        let m = perm.len();
        if m == 0 {
            return Err(Error::InvalidArgument("matrix dimension must be >= 1".into()));
        }
        if scalars.len() != m {
            return Err(Error::DimensionMismatch {
                left: m,
                right: scalars.len(),
            });
        }
        let mut seen = vec![false; m];
        for &row in &perm {
            if row >= m || seen[row] {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
            seen[row] = true;
        }
        let order = scalars[0].order();
        for s in &scalars {
            if s.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: s.order(),
                });
            }
            if s.is_zero() {
                return Err(Error::InvalidArgument(
                    "monomial matrix scalars must be units".into(),
                ));
            }
        }
        Ok(MonomialMatrix {
            order,
            perm,
            scalars,
        })
    }

    pub fn identity(m: usize, order: u32) -> Self {
        MonomialMatrix {
            order,
            perm: (0..m).collect(),
            scalars: vec![F1Element::one(order); m],
        }
    }

    pub fn permutation(perm: Vec<usize>, order: u32) -> Result<Self> {
        let scalars = vec![F1Element::one(order); perm.len()];
        Self::new(perm, scalars)
    }

    pub fn diagonal(scalars: Vec<F1Element>) -> Result<Self> {
        Self::new((0..scalars.len()).collect(), scalars)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scalars(&self) -> &[F1Element] {
        &self.scalars
    }

    pub fn entry(&self, row: usize, col: usize) -> F1Element {
        if self.perm[col] == row {
            self.scalars[col]
        } else {
            F1Element::zero(self.order)
        }
    }

    fn check_same_shape(&self, other: &MonomialMatrix) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &MonomialMatrix) -> Result<MonomialMatrix> {
        self.check_same_shape(other)?;
        let (perm, scalars) = (0..self.dim())
            .map(|j| {
                let mid = other.perm[j];
                (
                    self.perm[mid],
                    self.scalars[mid].mul_same_order(other.scalars[j]),
                )
            })
            .unzip();
        Ok(MonomialMatrix {
            order: self.order,
            perm,
            scalars,
        })
    }

    pub fn transpose(&self) -> MonomialMatrix {
        let m = self.dim();
        let mut perm = vec![0; m];
        let mut scalars = vec![F1Element::zero(self.order); m];
        for j in 0..m {
            let i = self.perm[j];
            perm[i] = j;
            scalars[i] = self.scalars[j];
        }
        MonomialMatrix {
            order: self.order,
            perm,
            scalars,
        }
    }

    /// Entry-wise application of a conjugation.
    pub fn conjugate(&self, sigma: Conjugation) -> Result<MonomialMatrix> {
        sigma.check_order(self.order)?;
        Ok(MonomialMatrix {
            order: self.order,
            perm: self.perm.clone(),
            scalars: self
                .scalars
                .iter()
                .map(|s| s.pow(sigma.exponent()))
                .collect(),
        })
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let t = self.transpose();
        MonomialMatrix {
            order: self.order,
            perm: t.perm,
            scalars: t
                .scalars
                .iter()
                .map(|s| s.inverse().expect("units"))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &i)| i == j)
            && self.scalars.iter().all(|s| s.is_one())
    }

    pub fn to_subunital(&self) -> SubunitalMatrix {
        SubunitalMatrix {
            order: self.order,
            columns: self
                .perm
                .iter()
                .zip(&self.scalars)
                .map(|(&i, &s)| Some((i, s)))
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        self.to_subunital().to_text()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson::from_operator(self)
    }
}

impl LinearOperator for MonomialMatrix {
    fn dim(&self) -> usize {
        self.perm.len()
    }

    fn order(&self) -> u32 {
        self.order
    }

    fn nonzero_entries(&self) -> Vec<(usize, usize, F1Element)> {
        let mut out: Vec<_> = (0..self.dim())
            .map(|j| (self.perm[j], j, self.scalars[j]))
            .collect();
        out.sort_by_key(|e| (e.0, e.1));
        out
    }

    fn apply(&self, x: &StateVector) -> Result<StateVector> {
        check_operand(self.dim(), self.order, x)?;
        let mut out = vec![F1Element::zero(self.order); self.dim()];
        for (j, xj) in x.entries().iter().enumerate() {
            out[self.perm[j]] = self.scalars[j].mul_same_order(*xj);
        }
        Ok(StateVector::from_parts(self.order, out))
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl TryFrom<SubunitalMatrix> for MonomialMatrix {
    type Error = Error;

    fn try_from(value: SubunitalMatrix) -> Result<Self> {
        let mut perm = Vec::with_capacity(value.dim());
        let mut scalars = Vec::with_capacity(value.dim());
        for col in value.columns {
            let (i, s) = col.ok_or_else(|| {
                Error::InvalidArgument("singular matrix is not in GL(m, F_1^l)".into())
            })?;
            perm.push(i);
            scalars.push(s);
        }
        MonomialMatrix::new(perm, scalars)
    }
}

impl FromStr for MonomialMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MonomialMatrix::try_from(s.parse::<SubunitalMatrix>()?)
    }
}

/// A square matrix with at most one nonzero entry per row and per column.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubunitalMatrix {
    order: u32,
    /// Column `j` holds `Some((row, value))` or nothing.
    columns: Vec<Option<(usize, F1Element)>>,
}

impl SubunitalMatrix {
    pub fn zero(dim: usize, order: u32) -> Result<Self> {
        if dim == 0 || order == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimension and field order must be >= 1".into(),
            ));
        }
        Ok(SubunitalMatrix {
            order,
            columns: vec![None; dim],
        })
    }

    /// Builds from `(row, col, value)` triples (0-based). Zero values are skipped.
    pub fn from_entries(
        dim: usize,
        order: u32,
        entries: impl IntoIterator<Item = (usize, usize, F1Element)>,
    ) -> Result<Self> {
        let mut matrix = Self::zero(dim, order)?;
        let mut row_used = vec![false; dim];
        for (i, j, value) in entries {
            if i >= dim || j >= dim {
                return Err(Error::InvalidArgument(format!(
                    "entry ({}, {}) outside a {dim}x{dim} matrix",
                    i + 1,
                    j + 1
                )));
            }
            if value.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: value.order(),
                });
            }
            if value.is_zero() {
                continue;
            }
            if row_used[i] || matrix.columns[j].is_some() {
                return Err(Error::InvalidArgument(format!(
                    "second nonzero entry in row {} or column {}",
                    i + 1,
                    j + 1
                )));
            }
            row_used[i] = true;
            matrix.columns[j] = Some((i, value));
        }
        Ok(matrix)
    }

    pub fn column(&self, j: usize) -> Option<(usize, F1Element)> {
        self.columns[j]
    }

    pub fn is_nonsingular(&self) -> bool {
        self.columns.iter().all(Option::is_some)
    }

    /// Diagonal with every nonzero entry equal to `1`.
    pub fn is_diagonal_projection(&self) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(j, c)| c.is_none_or(|(i, s)| i == j && s.is_one()))
    }

    /// The principal submatrix on `indices` (sorted, 0-based) if it is
    /// nonsingular, reindexed to `0..indices.len()`.
    pub fn nonsingular_principal_submatrix(&self, indices: &[usize]) -> Option<MonomialMatrix> {
        let position = |row: usize| indices.iter().position(|&k| k == row);
        let mut perm = Vec::with_capacity(indices.len());
        let mut scalars = Vec::with_capacity(indices.len());
        for &j in indices {
            let (i, s) = self.columns[j]?;
            perm.push(position(i)?);
            scalars.push(s);
        }
        // injective columns into an equally sized index set form a bijection
        Some(MonomialMatrix {
            order: self.order,
            perm,
            scalars,
        })
    }

    /// Text format: a `dim D @L` header, then `row col w^k` per nonzero entry (1-based).
    pub fn to_text(&self) -> String {
        let mut out = format!("dim {} @{}\n", self.dim(), self.order);
        for (i, j, s) in self.nonzero_entries() {
            out.push_str(&format!("{} {} {}\n", i + 1, j + 1, s));
        }
        out
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson::from_operator(self)
    }
}

impl LinearOperator for SubunitalMatrix {
    fn dim(&self) -> usize {
        self.columns.len()
    }

    fn order(&self) -> u32 {
        self.order
    }

    fn nonzero_entries(&self) -> Vec<(usize, usize, F1Element)> {
        let mut out: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.map(|(i, s)| (i, j, s)))
            .collect();
        out.sort_by_key(|e| (e.0, e.1));
        out
    }

    fn apply(&self, x: &StateVector) -> Result<StateVector> {
        check_operand(self.dim(), self.order, x)?;
        let mut out = vec![F1Element::zero(self.order); self.dim()];
        for (j, xj) in x.entries().iter().enumerate() {
            if let Some((i, s)) = self.columns[j] {
                out[i] = s.mul_same_order(*xj);
            }
        }
        Ok(StateVector::from_parts(self.order, out))
    }
}

impl fmt::Display for SubunitalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for SubunitalMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let mut parts = header.split_whitespace();
        let (dim, order) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some("dim"), Some(d), Some(l), None) => {
                let dim: usize = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad dimension in `{header}`")))?;
                let order: u32 = l
                    .strip_prefix('@')
                    .and_then(|l| l.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad field order in `{header}`")))?;
                (dim, order)
            }
            _ => {
                return Err(Error::Parse(format!(
                    "expected `dim D @L` header, got `{header}`"
                )))
            }
        };
        if order == 0 {
            return Err(Error::Parse("field order must be >= 1".into()));
        }
        let mut entries = Vec::new();
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [row, col, value] = fields[..] else {
                return Err(Error::Parse(format!("expected `row col w^k`, got `{line}`")));
            };
            let index = |t: &str| -> Result<usize> {
                match t.parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(k - 1),
                    _ => Err(Error::Parse(format!("bad index `{t}` in `{line}`"))),
                }
            };
            entries.push((index(row)?, index(col)?, F1Element::parse(value, order)?));
        }
        SubunitalMatrix::from_entries(dim, order, entries)
    }
}

/// JSON mirror of the text format.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub l: u32,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EntryJson {
    pub row: usize,
    pub col: usize,
    pub exp: u32,
}

impl MatrixJson {
    pub fn from_operator(op: &impl LinearOperator) -> Self {
        MatrixJson {
            dim: op.dim(),
            l: op.order(),
            entries: op
                .nonzero_entries()
                .into_iter()
                .map(|(i, j, s)| EntryJson {
                    row: i + 1,
                    col: j + 1,
                    exp: s.exponent().expect("nonzero entry"),
                })
                .collect(),
        }
    }

    pub fn to_subunital(&self) -> Result<SubunitalMatrix> {
        if self.l == 0 {
            return Err(Error::InvalidArgument("field order must be >= 1".into()));
        }
        let entries = self
            .entries
            .iter()
            .map(|e| {
                if e.row == 0 || e.col == 0 {
                    Err(Error::Parse("matrix indices are 1-based".into()))
                } else {
                    Ok((e.row - 1, e.col - 1, F1Element::unit(self.l, e.exp as u64)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SubunitalMatrix::from_entries(self.dim, self.l, entries)
    }
}

/// `|GL(m, F_{1^l})| = m! · l^m`, saturating.
pub fn gl_order(m: usize, order: u32) -> u128 {
    let fact = (1..=m as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
    let powers = (order as u128).checked_pow(m as u32);
    match (fact, powers) {
        (Some(f), Some(p)) => f.saturating_mul(p),
        _ => u128::MAX,
    }
}

/// Every element of `GL(m, F_{1^l})`, ordered by permutation (lexicographic)
/// and then by scalar exponents (lexicographic).
pub fn enumerate_gl(m: usize, order: u32, budget: Budget) -> Result<Vec<MonomialMatrix>> {
    if m == 0 || order == 0 {
        return Err(Error::InvalidArgument("m and l must be >= 1".into()));
    }
    budget.check(gl_order(m, order))?;
    let scalar_count = (order as u64).pow(m as u32);
    let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    Ok(perms
        .into_par_iter()
        .flat_map_iter(|perm| {
            (0..scalar_count).map(move |mut index| {
                let mut exps = vec![0u64; m];
                for slot in exps.iter_mut().rev() {
                    *slot = index % order as u64;
                    index /= order as u64;
                }
                MonomialMatrix {
                    order,
                    perm: perm.clone(),
                    scalars: exps.into_iter().map(|e| F1Element::unit(order, e)).collect(),
                }
            })
        })
        .collect())
}

/// `σ(Aᵀ) · A = id`, computed as a matrix product.
pub fn is_unitary(a: &MonomialMatrix, sigma: Conjugation) -> Result<bool> {
    Ok(a.transpose().conjugate(sigma)?.compose(a)?.is_identity())
}

/// The scalar-wise reduction of [`is_unitary`]: `σ(s) · s = 1` for every entry `s`.
pub fn scalars_are_unitary(a: &MonomialMatrix, sigma: Conjugation) -> Result<bool> {
    sigma.check_order(a.order)?;
    Ok(a
        .scalars
        .iter()
        .all(|s| s.pow(sigma.exponent()).mul_same_order(*s).is_one()))
}

/// `H = σ(Hᵀ)`.
pub fn is_observable(h: &MonomialMatrix, sigma: Conjugation) -> Result<bool> {
    Ok(*h == h.transpose().conjugate(sigma)?)
}

/// Unitary elements of `GL(m, F_{1^l})` with respect to `sigma`, in enumeration order.
pub fn unitaries(
    m: usize,
    order: u32,
    sigma: Conjugation,
    budget: Budget,
) -> Result<Vec<MonomialMatrix>> {
    sigma.check_order(order)?;
    filter_gl(m, order, budget, |a| is_unitary(a, sigma))
}

/// Observables of `GL(m, F_{1^l})` with respect to `sigma`, in enumeration order.
pub fn observables(
    m: usize,
    order: u32,
    sigma: Conjugation,
    budget: Budget,
) -> Result<Vec<MonomialMatrix>> {
    sigma.check_order(order)?;
    filter_gl(m, order, budget, |a| is_observable(a, sigma))
}

fn filter_gl(
    m: usize,
    order: u32,
    budget: Budget,
    keep: impl Fn(&MonomialMatrix) -> Result<bool> + Sync,
) -> Result<Vec<MonomialMatrix>> {
    let all = enumerate_gl(m, order, budget)?;
    let flags = all.par_iter().map(&keep).collect::<Result<Vec<bool>>>()?;
    Ok(all
        .into_iter()
        .zip(flags)
        .filter_map(|(a, k)| k.then_some(a))
        .collect())
}

/// `U(m, F_{1^{r(r+2)}})` for the involution `v ↦ v^{r+1}`, found by filtering
/// `GL(m, F_{1^{r(r+2)}})`.
pub fn unitary_group(m: usize, r: u32, budget: Budget) -> Result<Vec<MonomialMatrix>> {
    let order = r
        .checked_mul(r + 2)
        .ok_or_else(|| Error::InvalidArgument(format!("r = {r} is too large")))?;
    let sigma = Conjugation::frobenius(order, r)?;
    unitaries(m, order, sigma, budget)
}

/// `|S(r+2, m)| = (r+2)^m · m!`.
pub fn unitary_group_order(m: usize, r: u32) -> u128 {
    gl_order(m, r + 2)
}

/// `A ⊗ B`, indexed row-major like [`crate::frames::tensor`].
pub fn kronecker(a: &MonomialMatrix, b: &MonomialMatrix) -> Result<MonomialMatrix> {
    if a.order != b.order {
        return Err(Error::OrderMismatch {
            left: a.order,
            right: b.order,
        });
    }
    let n = b.dim();
    let (perm, scalars) = (0..a.dim())
        .cartesian_product(0..n)
        .map(|(j1, j2)| {
            (
                a.perm[j1] * n + b.perm[j2],
                a.scalars[j1].mul_same_order(b.scalars[j2]),
            )
        })
        .unzip();
    Ok(MonomialMatrix {
        order: a.order,
        perm,
        scalars,
    })
}

/// Number of square matrices of dimension `dim` over `F_{1^l}` with at most
/// one nonzero entry per row and column: `Σ_k C(dim, k)² · k! · l^k`, saturating.
pub fn subunital_count(dim: usize, order: u32) -> u128 {
    let binom = |n: u128, k: u128| (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1));
    (0..=dim as u128)
        .map(|k| {
            let c = binom(dim as u128, k);
            let fact = (1..=k).fold(1u128, |acc, i| acc.saturating_mul(i));
            c.saturating_mul(c)
                .saturating_mul(fact)
                .saturating_mul((order as u128).saturating_pow(k as u32))
        })
        .fold(0u128, |acc, x| acc.saturating_add(x))
}

/// Every [`SubunitalMatrix`] of dimension `dim` over `F_{1^l}`. Column `j`
/// ranges over "empty" and then each free row with each unit, in that order.
pub fn enumerate_subunital(dim: usize, order: u32, budget: Budget) -> Result<Vec<SubunitalMatrix>> {
    if dim == 0 || order == 0 {
        return Err(Error::InvalidArgument("dimension and l must be >= 1".into()));
    }
    budget.check(subunital_count(dim, order))?;

    fn extend(
        col: usize,
        order: u32,
        columns: &mut Vec<Option<(usize, F1Element)>>,
        row_used: &mut [bool],
        out: &mut Vec<SubunitalMatrix>,
    ) {
        if col == row_used.len() {
            out.push(SubunitalMatrix {
                order,
                columns: columns.clone(),
            });
            return;
        }
        columns.push(None);
        extend(col + 1, order, columns, row_used, out);
        columns.pop();
        for row in 0..row_used.len() {
            if row_used[row] {
                continue;
            }
            row_used[row] = true;
            for k in 0..order as u64 {
                columns.push(Some((row, F1Element::unit(order, k))));
                extend(col + 1, order, columns, row_used, out);
                columns.pop();
            }
            row_used[row] = false;
        }
    }

    let mut out = Vec::new();
    extend(0, order, &mut Vec::with_capacity(dim), &mut vec![false; dim], &mut out);
    Ok(out)
}
