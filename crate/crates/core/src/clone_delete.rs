//! Cloning and deletion on composite systems `H_A ⊗ H_B` over `F_{1^l}`.
//!
//! Linear cloning already fails on global factors (`α² = α` is false for
//! every `α ≠ 1`), so the searches below work with projective rays. They
//! are exhaustive at desk scale. A permutation matrix preserves support
//! size, which is what every negative result here hinges on.
//!
//! The deletion side provides the explicit singular operator that keeps
//! the coordinates `(i, 1)` of `φ ⊗ φ`, the almost-unitary predicate it
//! satisfies, and the exact probability that a uniformly chosen ray is
//! deleted rather than annihilated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Budget, Error, Result};
use crate::f1_algebra::{Conjugation, F1Element};
use crate::frames::{enumerate_rays, enumerate_states, ray_of, simple_rays, tensor, ProjectiveRay, StateVector};
use crate::operators::{
    enumerate_subunital, gl_order, is_unitary, subunital_count, unitaries, LinearOperator,
    MonomialMatrix, SubunitalMatrix,
};

/// Dimension bound for the principal-subset scan in [`principal_subsets_unitary`].
pub const DEFAULT_SUBSET_BOUND: usize = 12;

/// Units `α ∈ μ_l` with `α² ≠ α`. Vectorial cloning of `α·φ` would force `α² = α`.
pub fn scalar_obstruction(l: u32) -> Vec<F1Element> {
    (0..l as u64)
        .map(|k| F1Element::unit(l, k))
        .filter(|a| a.mul_same_order(*a) != *a)
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CloneScope {
    AllRays,
    SimpleRays,
}

impl CloneScope {
    pub fn targets(self, m: usize, l: u32) -> Vec<ProjectiveRay> {
        match self {
            CloneScope::AllRays => enumerate_rays(m, l),
            CloneScope::SimpleRays => simple_rays(m, l),
        }
    }
}

/// A unitary on `H_A ⊗ H_B` together with a blank state of `H_B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CloneWitness {
    pub unitary: MonomialMatrix,
    pub blank: StateVector,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CloneSearch {
    pub scope: CloneScope,
    pub unitaries_checked: usize,
    pub blanks_checked: usize,
    pub targets: usize,
    /// First witness in enumeration order (unitaries outer, blanks inner).
    pub witness: Option<CloneWitness>,
}

/// `ray(U(φ ⊗ e)) = ray(φ ⊗ φ)` for every target ray `φ`.
pub fn clones_projectively(
    u: &impl LinearOperator,
    blank: &StateVector,
    targets: &[ProjectiveRay],
) -> Result<bool> {
    for phi in targets {
        let phi = phi.representative();
        let image = u.apply(&tensor(phi, blank)?)?;
        if image.is_zero() || ray_of(&image)? != ray_of(&tensor(phi, phi)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ray(U(φ ⊗ φ)) = ray(φ ⊗ e)` for every target ray `φ`.
pub fn deletes_projectively(
    u: &impl LinearOperator,
    blank: &StateVector,
    targets: &[ProjectiveRay],
) -> Result<bool> {
    for phi in targets {
        let phi = phi.representative();
        let image = u.apply(&tensor(phi, phi)?)?;
        if image.is_zero() || ray_of(&image)? != ray_of(&tensor(phi, blank)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn first_pair<P>(
    candidates: &[MonomialMatrix],
    blanks: &[StateVector],
    works: P,
) -> Result<Option<CloneWitness>>
where
    P: Fn(&MonomialMatrix, &StateVector) -> Result<bool> + Sync,
{
    candidates
        .par_iter()
        .map(|u| -> Result<Option<CloneWitness>> {
            for e in blanks {
                if works(u, e)? {
                    return Ok(Some(CloneWitness {
                        unitary: u.clone(),
                        blank: e.clone(),
                    }));
                }
            }
            Ok(None)
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()
        .map(Option::flatten)
}

/// Searches all unitaries of `H_A ⊗ H_B` (dimension `m²`) and all nonzero
/// blanks for a projective cloner of the rays in `scope`.
pub fn search_projective_cloner(
    m: usize,
    l: u32,
    sigma: Conjugation,
    scope: CloneScope,
    budget: Budget,
) -> Result<CloneSearch> {
    if m == 0 || l == 0 {
        return Err(Error::InvalidArgument("m and l must be >= 1".into()));
    }
    let blanks: Vec<StateVector> = enumerate_states(m, l).collect();
    budget.check(gl_order(m * m, l).saturating_mul(blanks.len() as u128))?;
    let candidates = unitaries(m * m, l, sigma, budget)?;
    let targets = scope.targets(m, l);
    let witness = first_pair(&candidates, &blanks, |u, e| clones_projectively(u, e, &targets))?;
    Ok(CloneSearch {
        scope,
        unitaries_checked: candidates.len(),
        blanks_checked: blanks.len(),
        targets: targets.len(),
        witness,
    })
}

/// Like [`search_projective_cloner`] but for the deletion equation
/// `ray(U(φ ⊗ φ)) = ray(φ ⊗ e)` on every ray. A unitary deleter would
/// invert to a cloner.
pub fn search_unitary_deleter(
    m: usize,
    l: u32,
    sigma: Conjugation,
    budget: Budget,
) -> Result<CloneSearch> {
    if m == 0 || l == 0 {
        return Err(Error::InvalidArgument("m and l must be >= 1".into()));
    }
    let blanks: Vec<StateVector> = enumerate_states(m, l).collect();
    budget.check(gl_order(m * m, l).saturating_mul(blanks.len() as u128))?;
    let candidates = unitaries(m * m, l, sigma, budget)?;
    let targets = enumerate_rays(m, l);
    let witness = first_pair(&candidates, &blanks, |u, e| deletes_projectively(u, e, &targets))?;
    Ok(CloneSearch {
        scope: CloneScope::AllRays,
        unitaries_checked: candidates.len(),
        blanks_checked: blanks.len(),
        targets: targets.len(),
        witness,
    })
}

/// The explicit simple-ray cloner: blank `e_1`, and the permutation that
/// swaps `e_i ⊗ e_1` with `e_i ⊗ e_i` for each `i`.
pub fn simple_cloner(m: usize, l: u32) -> Result<CloneWitness> {
    if m == 0 || l == 0 {
        return Err(Error::InvalidArgument("m and l must be >= 1".into()));
    }
    let mut perm: Vec<usize> = (0..m * m).collect();
    for i in 1..m {
        perm.swap(i * m, i * m + i);
    }
    Ok(CloneWitness {
        unitary: MonomialMatrix::permutation(perm, l)?,
        blank: StateVector::simple(m, l, 0)?,
    })
}

/// Why no unitary with a simple blank clones a non-simple ray.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NonSimpleCounterexample {
    #[serde(serialize_with = "serialize_display")]
    pub ray: ProjectiveRay,
    /// `|supp(φ' ⊗ e)|` for simple `e`; unitaries preserve it.
    pub input_support: usize,
    /// `|supp(φ' ⊗ φ')|`.
    pub target_support: usize,
}

fn serialize_display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// The ray `[1 : w : 0 : … : 0]` and the support sizes that rule out cloning it.
pub fn nonsimple_defeats_cloner(m: usize, l: u32) -> Result<NonSimpleCounterexample> {
    if m < 2 {
        return Err(Error::InvalidArgument("non-simple states need m >= 2".into()));
    }
    if l == 0 {
        return Err(Error::InvalidArgument("l must be >= 1".into()));
    }
    let mut entries = vec![F1Element::zero(l); m];
    entries[0] = F1Element::one(l);
    entries[1] = F1Element::unit(l, 1);
    let phi = StateVector::new(entries)?;
    let blank = StateVector::simple(m, l, 0)?;
    let input_support = tensor(&phi, &blank)?.support_size();
    let target_support = tensor(&phi, &phi)?.support_size();
    if input_support == target_support {
        return Err(Error::Invariant("support sizes coincide".into()));
    }
    Ok(NonSimpleCounterexample {
        ray: ray_of(&phi)?,
        input_support,
        target_support,
    })
}

/// Checks the support argument directly: no unitary and no simple blank
/// clones `ray`. Returns the number of `(U, e)` pairs examined.
pub fn confirm_no_cloner_for_ray(
    ray: &ProjectiveRay,
    sigma: Conjugation,
    budget: Budget,
) -> Result<Option<usize>> {
    let (m, l) = (ray.representative().dim(), ray.representative().order());
    let blanks: Vec<StateVector> = enumerate_states(m, l).filter(|e| e.is_simple()).collect();
    budget.check(gl_order(m * m, l).saturating_mul(blanks.len() as u128))?;
    let candidates = unitaries(m * m, l, sigma, budget)?;
    let target = [ray.clone()];
    let witness = first_pair(&candidates, &blanks, |u, e| clones_projectively(u, e, &target))?;
    Ok(witness.is_none().then_some(candidates.len() * blanks.len()))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlmostUnitaryCloneSearch {
    pub matrices_checked: usize,
    pub almost_unitary: usize,
    pub blanks_checked: usize,
    pub witness: Option<(SubunitalMatrix, StateVector)>,
}

/// Exhaustive search over every almost-unitary [`SubunitalMatrix`] on
/// `H_A ⊗ H_B` and every simple blank for a cloner of the single ray `target`.
pub fn search_almost_unitary_cloner(
    target: &ProjectiveRay,
    sigma: Conjugation,
    budget: Budget,
) -> Result<AlmostUnitaryCloneSearch> {
    let (m, l) = (target.representative().dim(), target.representative().order());
    let blanks: Vec<StateVector> = enumerate_states(m, l).filter(|e| e.is_simple()).collect();
    budget.check(subunital_count(m * m, l).saturating_mul(blanks.len() as u128))?;
    let all = enumerate_subunital(m * m, l, budget)?;
    let flags = all
        .par_iter()
        .map(|a| is_almost_unitary(a, sigma))
        .collect::<Result<Vec<bool>>>()?;
    let candidates: Vec<&SubunitalMatrix> = all
        .iter()
        .zip(&flags)
        .filter_map(|(a, &ok)| ok.then_some(a))
        .collect();
    let targets = [target.clone()];
    let witness = candidates
        .par_iter()
        .map(|a| -> Result<Option<(SubunitalMatrix, StateVector)>> {
            for e in &blanks {
                if clones_projectively(*a, e, &targets)? {
                    return Ok(Some(((*a).clone(), e.clone())));
                }
            }
            Ok(None)
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()?
        .flatten();
    Ok(AlmostUnitaryCloneSearch {
        matrices_checked: all.len(),
        almost_unitary: candidates.len(),
        blanks_checked: blanks.len(),
        witness,
    })
}

/// Every nonsingular principal submatrix `A[S, S]` is unitary, checked over
/// all `2^dim` index subsets. Fails if `dim > bound`.
pub fn principal_subsets_unitary(a: &SubunitalMatrix, sigma: Conjugation, bound: usize) -> Result<bool> {
    let n = a.dim();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "dimension",
            value: n as u64,
            bound: bound as u64,
        });
    }
    sigma.check_order(a.order())?;
    for mask in 1u64..(1u64 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if let Some(sub) = a.nonsingular_principal_submatrix(&subset) {
            if !is_unitary(&sub, sigma)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Almost unitarity with a shortcut for diagonal `0/1` matrices, whose
/// nonsingular principal submatrices are all identities.
pub fn is_almost_unitary(a: &SubunitalMatrix, sigma: Conjugation) -> Result<bool> {
    sigma.check_order(a.order())?;
    if a.is_diagonal_projection() {
        return Ok(true);
    }
    principal_subsets_unitary(a, sigma, DEFAULT_SUBSET_BOUND)
}

/// The `m² × m²` deleter for the blank `e_{b}` (0-based `blank_index`):
/// ones on the diagonal at the positions of `e_i ⊗ e_b`, zeros elsewhere.
pub fn build_deletion_operator_for_blank(m: usize, l: u32, blank_index: usize) -> Result<SubunitalMatrix> {
    if m == 0 || l == 0 {
        return Err(Error::InvalidArgument("m and l must be >= 1".into()));
    }
    if blank_index >= m {
        return Err(Error::InvalidArgument(format!(
            "blank index {blank_index} out of range for m = {m}"
        )));
    }
    SubunitalMatrix::from_entries(
        m * m,
        l,
        (0..m).map(|i| (i * m + blank_index, i * m + blank_index, F1Element::one(l))),
    )
}

/// Deleter for the blank `e = (1, 0, …, 0)`: ones at the 1-based diagonal
/// positions `1, m+1, 2m+1, …, m²−m+1`.
pub fn build_deletion_operator(m: usize, l: u32) -> Result<SubunitalMatrix> {
    build_deletion_operator_for_blank(m, l, 0)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeletionOutcome {
    /// `U(φ ⊗ φ)` lies on the ray of `φ ⊗ e`.
    Deleted,
    /// `U(φ ⊗ φ) = ω`, so the ray has no image.
    Annihilated,
    /// Nonzero image on the wrong ray. Never produced by the built operator.
    Failed,
}

/// Outcome of the deleter on every ray of `V(m, F_{1^l})`, in ray order.
pub fn deletion_outcomes(m: usize, l: u32) -> Result<Vec<(ProjectiveRay, DeletionOutcome)>> {
    let u = build_deletion_operator(m, l)?;
    let blank = StateVector::simple(m, l, 0)?;
    enumerate_rays(m, l)
        .into_iter()
        .map(|ray| {
            let phi = ray.representative();
            let image = u.apply(&tensor(phi, phi)?)?;
            let outcome = if image.is_zero() {
                DeletionOutcome::Annihilated
            } else if ray_of(&image)? == ray_of(&tensor(phi, &blank)?)? {
                DeletionOutcome::Deleted
            } else {
                DeletionOutcome::Failed
            };
            Ok((ray, outcome))
        })
        .collect()
}

/// An exact rational that serializes as `{"num": …, "den": …}` with
/// arbitrary-size JSON integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fraction(pub BigRational);

impl Fraction {
    pub fn from_integers(num: u64, den: u64) -> Self {
        Fraction(BigRational::new(num.into(), den.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Lossy, for display.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::{Error as _, SerializeStruct};
        let number = |n: &BigInt| {
            n.to_string()
                .parse::<serde_json::Number>()
                .map_err(S::Error::custom)
        };
        let mut st = serializer.serialize_struct("Fraction", 2)?;
        st.serialize_field("num", &number(self.numer())?)?;
        st.serialize_field("den", &number(self.denom())?)?;
        st.end()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Limits {
    /// `lim_{m→∞} P_{a1} = l / (l + 1)`
    pub m_inf: Fraction,
    /// `lim_{l→∞} P_{a1} = 1`
    pub l_inf: Fraction,
}

impl Limits {
    pub fn new(l: u32) -> Self {
        Limits {
            m_inf: Fraction::from_integers(l as u64, l as u64 + 1),
            l_inf: Fraction::from_integers(1, 1),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DeletionReport {
    pub m: usize,
    pub l: u32,
    pub deleted: usize,
    pub annihilated: usize,
    pub probability: Fraction,
    pub limits: Limits,
    #[serde(skip)]
    pub failed: usize,
    #[serde(skip)]
    pub operator: SubunitalMatrix,
    #[serde(skip)]
    pub blank: StateVector,
}

/// Runs the deleter on every ray and tallies outcomes. The probability is
/// the fraction of rays deleted.
pub fn verify_deletion(m: usize, l: u32) -> Result<DeletionReport> {
    let outcomes = deletion_outcomes(m, l)?;
    let count = |o: DeletionOutcome| outcomes.iter().filter(|(_, x)| *x == o).count();
    let (deleted, annihilated, failed) = (
        count(DeletionOutcome::Deleted),
        count(DeletionOutcome::Annihilated),
        count(DeletionOutcome::Failed),
    );
    Ok(DeletionReport {
        m,
        l,
        deleted,
        annihilated,
        probability: Fraction(BigRational::new(deleted.into(), outcomes.len().into())),
        limits: Limits::new(l),
        failed,
        operator: build_deletion_operator(m, l)?,
        blank: StateVector::simple(m, l, 0)?,
    })
}

/// `P_{a1} = l(l+1)^{m-1} / ((l+1)^m − 1)`: the share of rays of
/// `P^{m-1}(F_{1^l})` with nonzero first coordinate.
pub fn probability_a1(m: u32, l: u32) -> Result<BigRational> {
    if m == 0 || l == 0 {
        return Err(Error::InvalidArgument("m and l must be >= 1".into()));
    }
    let base = BigInt::from(l) + BigInt::one();
    let affine = BigInt::from(l) * num_traits::pow(base.clone(), m as usize - 1);
    let total = num_traits::pow(base, m as usize) - BigInt::one();
    Ok(BigRational::new(affine, total))
}

/// The same quantity written as `l / (l + (1 − 1/(l+1)^{m−1}))`.
pub fn probability_a1_continued(m: u32, l: u32) -> Result<BigRational> {
    if m == 0 || l == 0 {
        return Err(Error::InvalidArgument("m and l must be >= 1".into()));
    }
    let l = BigRational::from_integer(l.into());
    let base = num_traits::pow(l.clone() + BigRational::one(), m as usize - 1);
    let denom = l.clone() + (BigRational::one() - base.recip());
    if denom.is_zero() {
        return Err(Error::Invariant("zero denominator".into()));
    }
    Ok(l / denom)
}
