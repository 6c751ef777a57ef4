//! State frames `V(m, F_{1^l})`: tuples of field elements, their supports,
//! the partial standard form, orthogonality, perp spaces, projective rays and
//! tensor products.
//!
//! The standard form `σ(x_1)y_1 + … + σ(x_m)y_m` only has a value when at
//! most one term is nonzero; otherwise it is [`FormValue::Undefined`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::f1_algebra::{Conjugation, F1Element};

/// A point of `V(m, F_{1^l})`. The zero vector is representable but is not a state.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct StateVector {
    order: u32,
    entries: Vec<F1Element>,
}

impl StateVector {
    pub fn new(entries: Vec<F1Element>) -> Result<Self> {
        let first = entries
            .first()
            .ok_or_else(|| Error::InvalidArgument("a state needs m >= 1 entries".into()))?;
        let order = first.order();
        if let Some(bad) = entries.iter().find(|e| e.order() != order) {
            return Err(Error::OrderMismatch {
                left: order,
                right: bad.order(),
            });
        }
        Ok(StateVector { order, entries })
    }

    /// Builds a vector from element codes (`0` = zero, `k + 1` = `w^k`).
    pub fn from_codes(order: u32, codes: &[u32]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("field order must be >= 1".into()));
        }
        Self::new(
            codes
                .iter()
                .map(|&c| F1Element::from_code(order, c))
                .collect(),
        )
    }

    /// Builds a vector from optional exponents (`None` = zero).
    pub fn from_exponents(order: u32, exps: &[Option<u32>]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("field order must be >= 1".into()));
        }
        Self::new(
            exps.iter()
                .map(|e| match e {
                    None => F1Element::zero(order),
                    Some(k) => F1Element::unit(order, *k as u64),
                })
                .collect(),
        )
    }

    pub fn zero(dim: usize, order: u32) -> Result<Self> {
        Self::new(vec![F1Element::zero(order); dim])
    }

    /// The simple point with `1` at `index` (0-based).
    pub fn simple(dim: usize, order: u32, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::InvalidArgument(format!(
                "index {index} out of range for dimension {dim}"
            )));
        }
        let mut v = Self::zero(dim, order)?;
        v.entries[index] = F1Element::one(order);
        Ok(v)
    }

    pub(crate) fn from_parts(order: u32, entries: Vec<F1Element>) -> Self {
        debug_assert!(entries.iter().all(|e| e.order() == order));
        StateVector { order, entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn entries(&self) -> &[F1Element] {
        &self.entries
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.entries[i].is_unit()).collect()
    }

    pub fn support_size(&self) -> usize {
        self.entries.iter().filter(|e| e.is_unit()).count()
    }

    pub fn support_complement(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.entries[i].is_zero()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_simple(&self) -> bool {
        self.support_size() == 1
    }

    /// Multiplies every entry by `s`.
    pub fn scale(&self, s: F1Element) -> Result<StateVector> {
        let entries = self
            .entries
            .iter()
            .map(|e| s.mul(*e))
            .collect::<Result<Vec<_>>>()?;
        Ok(StateVector::from_parts(self.order, entries))
    }

    fn check_compatible(&self, other: &StateVector) -> Result<()> {
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
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")@{}", self.order)
    }
}

impl FromStr for StateVector {
    type Err = Error;

    /// Parses `(e1,…,em)@l` with entries `0` or `w^k`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, order) = s
            .rsplit_once('@')
            .ok_or_else(|| Error::Parse(format!("missing `@l` suffix in `{s}`")))?;
        let order: u32 = order
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad field order in `{s}`")))?;
        if order == 0 {
            return Err(Error::Parse("field order must be >= 1".into()));
        }
        let inner = body
            .trim()
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected parentheses in `{s}`")))?;
        let entries = inner
            .split(',')
            .map(|t| F1Element::parse(t, order))
            .collect::<Result<Vec<_>>>()?;
        StateVector::new(entries)
    }
}

/// Value of the partial standard form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormValue {
    Defined(F1Element),
    /// Two or more terms of the sum are nonzero.
    Undefined,
}

impl FormValue {
    pub fn is_defined_zero(&self) -> bool {
        matches!(self, FormValue::Defined(v) if v.is_zero())
    }
}

/// `⟨x|y⟩ = σ(x_1)y_1 + … + σ(x_m)y_m`, defined only when at most one term is nonzero.
pub fn standard_form(x: &StateVector, y: &StateVector, sigma: Conjugation) -> Result<FormValue> {
    x.check_compatible(y)?;
    sigma.check_order(x.order())?;
    let mut nonzero = x
        .entries
        .iter()
        .zip(&y.entries)
        .map(|(a, b)| a.pow(sigma.exponent()).mul_same_order(*b))
        .filter(|t| t.is_unit());
    Ok(match (nonzero.next(), nonzero.next()) {
        (None, _) => FormValue::Defined(F1Element::zero(x.order())),
        (Some(t), None) => FormValue::Defined(t),
        (Some(_), Some(_)) => FormValue::Undefined,
    })
}

/// Orthogonality is disjointness of supports.
pub fn orthogonal(x: &StateVector, y: &StateVector) -> Result<bool> {
    x.check_compatible(y)?;
    Ok(x
        .entries
        .iter()
        .zip(&y.entries)
        .all(|(a, b)| a.is_zero() || b.is_zero()))
}

/// `x^⊥`: the vectors supported inside `suppᶜ(x)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PerpSpace {
    ambient_dim: usize,
    order: u32,
    complement: Vec<usize>,
}

impl PerpSpace {
    pub fn dimension(&self) -> usize {
        self.complement.len()
    }

    /// Simple points `e_j` for `j ∈ suppᶜ(x)`.
    pub fn basis(&self) -> Vec<StateVector> {
        self.complement
            .iter()
            .map(|&j| StateVector::simple(self.ambient_dim, self.order, j).expect("index in range"))
            .collect()
    }

    pub fn contains(&self, y: &StateVector) -> Result<bool> {
        if y.order() != self.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: y.order(),
            });
        }
        if y.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: y.dim(),
            });
        }
        Ok(y.support().iter().all(|i| self.complement.contains(i)))
    }

    /// `(l + 1)^dimension`, the zero vector included.
    pub fn member_count(&self) -> u128 {
        (self.order as u128 + 1).pow(self.dimension() as u32)
    }
}

pub fn perp_space(x: &StateVector) -> Result<PerpSpace> {
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(PerpSpace {
        ambient_dim: x.dim(),
        order: x.order(),
        complement: x.support_complement(),
    })
}

/// A nonzero vector up to a global factor from `μ_l`. The stored
/// representative has first nonzero entry equal to `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjectiveRay {
    representative: StateVector,
}

impl ProjectiveRay {
    pub fn representative(&self) -> &StateVector {
        &self.representative
    }

    pub fn into_representative(self) -> StateVector {
        self.representative
    }

    pub fn is_simple(&self) -> bool {
        self.representative.is_simple()
    }
}

impl fmt::Display for ProjectiveRay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

pub fn ray_of(x: &StateVector) -> Result<ProjectiveRay> {
    let lead = x
        .entries
        .iter()
        .find(|e| e.is_unit())
        .ok_or(Error::ZeroVector)?;
    let inv = lead.inverse().expect("lead entry is a unit");
    Ok(ProjectiveRay {
        representative: x.scale(inv)?,
    })
}

pub fn rays_equal(p: &ProjectiveRay, q: &ProjectiveRay) -> bool {
    p == q
}

/// All `(l + 1)^m` vectors of `V(m, F_{1^l})` in lexicographic code order,
/// the zero vector first.
pub fn enumerate_vectors(m: usize, order: u32) -> impl Iterator<Item = StateVector> {
    assert!(order >= 1, "F_1^l requires l >= 1");
    let base = order + 1;
    let mut codes = vec![0u32; m];
    let mut done = m == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let v = StateVector::from_parts(
            order,
            codes.iter().map(|&c| F1Element::from_code(order, c)).collect(),
        );
        // odometer, last coordinate fastest
        let mut i = m;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            codes[i] += 1;
            if codes[i] < base {
                break;
            }
            codes[i] = 0;
        }
        Some(v)
    })
}

/// Nonzero vectors of `V(m, F_{1^l})`.
pub fn enumerate_states(m: usize, order: u32) -> impl Iterator<Item = StateVector> {
    enumerate_vectors(m, order).filter(|v| !v.is_zero())
}

/// Every ray of `V(m, F_{1^l})` once, in lexicographic order of canonical representatives.
pub fn enumerate_rays(m: usize, order: u32) -> Vec<ProjectiveRay> {
    enumerate_vectors(m, order)
        .filter(|v| v.entries.iter().find(|e| e.is_unit()).is_some_and(|e| e.is_one()))
        .map(|representative| ProjectiveRay { representative })
        .collect()
}

/// The `m` simple rays.
pub fn simple_rays(m: usize, order: u32) -> Vec<ProjectiveRay> {
    (0..m)
        .map(|i| ProjectiveRay {
            representative: StateVector::simple(m, order, i).expect("index in range"),
        })
        .collect()
}

/// `((l + 1)^m - 1) / l`.
pub fn ray_count(m: u32, order: u32) -> u128 {
    ((order as u128 + 1).pow(m) - 1) / order as u128
}

/// Row-major tensor product: entry `i·n + j` (0-based) is `x_i · y_j`.
pub fn tensor(x: &StateVector, y: &StateVector) -> Result<StateVector> {
    if x.order() != y.order() {
        return Err(Error::OrderMismatch {
            left: x.order(),
            right: y.order(),
        });
    }
    let entries = x
        .entries
        .iter()
        .flat_map(|a| y.entries.iter().map(move |b| a.mul_same_order(*b)))
        .collect();
    Ok(StateVector::from_parts(x.order(), entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> StateVector {
        s.parse().unwrap()
    }

    #[test]
    fn text_format() {
        let x = v("(w^0,0,w^1)@2");
        assert_eq!(x.dim(), 3);
        assert_eq!(x.support(), vec![0, 2]);
        assert_eq!(x.to_string(), "(w^0,0,w^1)@2");
        assert!("(w^0,0)".parse::<StateVector>().is_err());
        assert!("w^0,0@2".parse::<StateVector>().is_err());
        assert!("()@2".parse::<StateVector>().is_err());
        assert!("(w^0)@0".parse::<StateVector>().is_err());
    }

    #[test]
    fn standard_form_examples() {
        let id = Conjugation::Identity;
        assert_eq!(
            standard_form(&v("(w^0,0,w^1)@2"), &v("(0,w^0,0)@2"), id).unwrap(),
            FormValue::Defined(F1Element::zero(2))
        );
        assert_eq!(
            standard_form(&v("(w^0,w^0,0)@2"), &v("(w^0,w^1,0)@2"), id).unwrap(),
            FormValue::Undefined
        );
        assert_eq!(
            standard_form(&v("(w^1,0)@2"), &v("(w^1,0)@2"), id).unwrap(),
            FormValue::Defined(F1Element::one(2))
        );
        assert!(standard_form(&v("(w^1,0)@2"), &v("(w^1,0,0)@2"), id).is_err());
        assert!(standard_form(&v("(w^1,0)@2"), &v("(w^1,0)@3"), id).is_err());
    }

    #[test]
    fn standard_form_with_frobenius() {
        let sigma = Conjugation::frobenius(3, 1).unwrap();
        let x = v("(w^1,0)@3");
        // σ(w)·w = w^2·w = 1
        assert_eq!(
            standard_form(&x, &x, sigma).unwrap(),
            FormValue::Defined(F1Element::one(3))
        );
        assert!(standard_form(&v("(w^1)@2"), &v("(w^1)@2"), sigma).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        assert!(orthogonal(&v("(w^0,0)@2"), &v("(0,w^1)@2")).unwrap());
        assert!(!orthogonal(&v("(w^0,w^1)@2"), &v("(0,w^1)@2")).unwrap());
    }

    #[test]
    fn orthogonality_matches_form_and_definedness() {
        for m in 1..=3 {
            for l in 1..=3 {
                let all: Vec<_> = enumerate_vectors(m, l).collect();
                for x in &all {
                    for y in &all {
                        let form = standard_form(x, y, Conjugation::Identity).unwrap();
                        let orth = orthogonal(x, y).unwrap();
                        assert_eq!(orth, form.is_defined_zero());
                        assert_eq!(orth, orthogonal(y, x).unwrap());
                        let overlap = x.support().iter().filter(|i| y.support().contains(i)).count();
                        assert_eq!(form != FormValue::Undefined, overlap <= 1);
                    }
                    let omega = StateVector::zero(m, l).unwrap();
                    assert!(orthogonal(&omega, x).unwrap());
                }
            }
        }
    }

    #[test]
    fn perp_examples() {
        let simple = StateVector::simple(4, 2, 1).unwrap();
        assert_eq!(perp_space(&simple).unwrap().dimension(), 3);

        let full = v("(w^0,w^1,w^0)@2");
        let perp = perp_space(&full).unwrap();
        assert_eq!(perp.dimension(), 0);
        assert_eq!(perp.member_count(), 1);

        let x = v("(w^0,w^1,0)@2");
        let perp = perp_space(&x).unwrap();
        assert_eq!(perp.dimension(), 1);
        assert_eq!(perp.basis(), vec![StateVector::simple(3, 2, 2).unwrap()]);
        let counted = enumerate_vectors(3, 2)
            .filter(|y| perp.contains(y).unwrap())
            .count();
        assert_eq!(counted, 3);
        assert_eq!(perp.member_count(), 3);

        assert_eq!(perp_space(&StateVector::zero(3, 2).unwrap()), Err(Error::ZeroVector));
    }

    #[test]
    fn perp_membership_matches_form() {
        for x in enumerate_states(3, 2) {
            let perp = perp_space(&x).unwrap();
            let members = enumerate_vectors(3, 2)
                .filter(|y| {
                    standard_form(&x, y, Conjugation::Identity)
                        .unwrap()
                        .is_defined_zero()
                })
                .count() as u128;
            assert_eq!(members, perp.member_count());
        }
    }

    #[test]
    fn ray_examples() {
        assert_eq!(
            ray_of(&v("(w^1,w^1)@2")).unwrap(),
            ray_of(&v("(w^0,w^0)@2")).unwrap()
        );
        assert_eq!(enumerate_rays(2, 2).len(), 4);
        assert_eq!(ray_count(2, 2), 4);
        for (m, l) in [(1, 1), (3, 2), (4, 3), (2, 5)] {
            let simple = enumerate_rays(m, l).into_iter().filter(|r| r.is_simple()).count();
            assert_eq!(simple, m);
            assert_eq!(simple_rays(m, l).len(), m);
        }
        assert_eq!(ray_of(&StateVector::zero(2, 2).unwrap()), Err(Error::ZeroVector));
    }

    #[test]
    fn ray_counts() {
        for m in 1..=5usize {
            for l in 1..=4u32 {
                let rays = enumerate_rays(m, l);
                assert_eq!(rays.len() as u128 * l as u128, (l as u128 + 1).pow(m as u32) - 1);
                assert_eq!(rays.len() as u128, ray_count(m as u32, l));
                assert!(rays.windows(2).all(|w| w[0] < w[1]));
            }
        }
        // μ_1 is trivial: rays are the nonzero vectors
        assert_eq!(enumerate_rays(4, 1).len(), enumerate_states(4, 1).count());
    }

    #[test]
    fn every_state_lands_on_an_enumerated_ray() {
        let rays = enumerate_rays(3, 3);
        for x in enumerate_states(3, 3) {
            assert!(rays.contains(&ray_of(&x).unwrap()));
        }
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            tensor(&v("(w^0,w^1)@2"), &v("(w^0,0)@2")).unwrap(),
            v("(w^0,0,w^1,0)@2")
        );
        assert_eq!(
            tensor(&v("(w^0,w^1)@2"), &v("(w^0,w^1)@2")).unwrap(),
            v("(w^0,w^1,w^1,w^0)@2")
        );
        assert!(tensor(&v("(w^0)@2"), &v("(w^0)@3")).is_err());
        let s = tensor(&StateVector::simple(2, 3, 1).unwrap(), &StateVector::simple(3, 3, 2).unwrap()).unwrap();
        assert!(s.is_simple());
        assert_eq!(s.support(), vec![5]);
    }

    fn state(m: usize, l: u32) -> impl Strategy<Value = StateVector> {
        proptest::collection::vec(0..=l, m)
            .prop_filter("nonzero", |c| c.iter().any(|&x| x > 0))
            .prop_map(move |c| StateVector::from_codes(l, &c).unwrap())
    }

    proptest! {
        #[test]
        fn tensor_respects_rays(
            (l, x, y, a, b) in (1u32..5).prop_flat_map(|l| (Just(l), state(3, l), state(2, l), 0..l as u64, 0..l as u64))
        ) {
            let alpha = F1Element::unit(l, a);
            let beta = F1Element::unit(l, b);
            let scaled = tensor(&x.scale(alpha).unwrap(), &y.scale(beta).unwrap()).unwrap();
            prop_assert_eq!(ray_of(&scaled).unwrap(), ray_of(&tensor(&x, &y).unwrap()).unwrap());
            let t = tensor(&x, &y).unwrap();
            prop_assert_eq!(t.support_size(), x.support_size() * y.support_size());
        }

        #[test]
        fn tensor_is_associative(
            (x, y, z) in (1u32..4).prop_flat_map(|l| (state(2, l), state(2, l), state(3, l)))
        ) {
            let left = tensor(&tensor(&x, &y).unwrap(), &z).unwrap();
            let right = tensor(&x, &tensor(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn text_round_trip(x in (1u32..9).prop_flat_map(|l| state(5, l))) {
            prop_assert_eq!(x.to_string().parse::<StateVector>().unwrap(), x);
        }
    }
}
