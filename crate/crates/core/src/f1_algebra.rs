//! Arithmetic of the monoid fields `F_{1^l} = {0} ∪ μ_l`.
//!
//! A unit is stored as an exponent of a fixed primitive `l`-th root of
//! unity `w`, so `w^a · w^b = w^{(a+b) mod l}`. Nothing here ever adds two
//! elements: the only operation is multiplication.
//!
//! The module also provides the power maps `u ↦ u^d` (absolute Frobenius
//! endomorphisms), the automorphism group of `F_{1^l}`, and the arithmetic
//! classification of the power maps that are nontrivial involutions,
//! together with element-wise brute-force counterparts used as oracles.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted by [`involution_brute_force`] unless the
/// caller supplies a different bound.
pub const DEFAULT_BRUTE_FORCE_BOUND: u32 = 64;

/// An element of `F_{1^l}`: zero or a root of unity `w^k` with `0 <= k < l`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct F1Element {
    order: u32,
    exponent: Option<u32>,
}

impl F1Element {
    /// # Panics
    ///
    /// Panics if `order == 0`.
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "F_1^l requires l >= 1");
        F1Element {
            order,
            exponent: None,
        }
    }

    pub fn one(order: u32) -> Self {
        Self::unit(order, 0)
    }

    /// The unit `w^exponent`, with the exponent reduced mod `order`.
    ///
    /// # Panics
    ///
    /// Panics if `order == 0`.
    pub fn unit(order: u32, exponent: u64) -> Self {
        assert!(order >= 1, "F_1^l requires l >= 1");
        F1Element {
            order,
            exponent: Some((exponent % order as u64) as u32),
        }
    }

    /// Decodes the enumeration code used throughout the crate:
    /// `0` is zero and `k + 1` is `w^k`.
    pub fn from_code(order: u32, code: u32) -> Self {
        if code == 0 {
            Self::zero(order)
        } else {
            Self::unit(order, (code - 1) as u64)
        }
    }

    pub fn code(self) -> u32 {
        self.exponent.map_or(0, |k| k + 1)
    }

    pub fn order(self) -> u32 {
        self.order
    }

    pub fn exponent(self) -> Option<u32> {
        self.exponent
    }

    pub fn is_zero(self) -> bool {
        self.exponent.is_none()
    }

    pub fn is_unit(self) -> bool {
        self.exponent.is_some()
    }

    pub fn is_one(self) -> bool {
        self.exponent == Some(0)
    }

    /// Product in `F_{1^l}`. Both factors must live in the same field.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: F1Element) -> Result<F1Element> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(self.mul_same_order(other))
    }

    pub(crate) fn mul_same_order(self, other: F1Element) -> F1Element {
        debug_assert_eq!(self.order, other.order);
        match (self.exponent, other.exponent) {
            (Some(a), Some(b)) => F1Element::unit(self.order, a as u64 + b as u64),
            _ => F1Element::zero(self.order),
        }
    }

    /// `self^d`. `x^0` is `1` for every `x`, including zero.
    pub fn pow(self, d: u64) -> F1Element {
        match self.exponent {
            _ if d == 0 => F1Element::one(self.order),
            None => self,
            Some(k) => {
                let order = self.order as u64;
                F1Element::unit(self.order, ((k as u64) * (d % order)) % order)
            }
        }
    }

    pub fn inverse(self) -> Option<F1Element> {
        self.exponent
            .map(|k| F1Element::unit(self.order, (self.order - k) as u64))
    }

    /// Multiplicative order of a unit inside `μ_l`.
    pub fn unit_order(self) -> Option<u32> {
        self.exponent.map(|k| self.order / k.gcd(&self.order))
    }

    /// Image under the inclusion `F_{1^d} ⊆ F_{1^n}` for `d | n`.
    pub fn embed(self, target_order: u32) -> Result<F1Element> {
        if target_order == 0 || !target_order.is_multiple_of(self.order) {
            return Err(Error::InvalidArgument(format!(
                "F_1^{} is not a subfield of F_1^{}",
                self.order, target_order
            )));
        }
        let scale = (target_order / self.order) as u64;
        Ok(match self.exponent {
            None => F1Element::zero(target_order),
            Some(k) => F1Element::unit(target_order, k as u64 * scale),
        })
    }

    /// Parses `0` or `w^k` as an element of `F_{1^order}`.
    pub fn parse(text: &str, order: u32) -> Result<F1Element> {
        if order == 0 {
            return Err(Error::InvalidArgument("field order must be >= 1".into()));
        }
        let text = text.trim();
        if text == "0" {
            return Ok(F1Element::zero(order));
        }
        let exp = text
            .strip_prefix("w^")
            .ok_or_else(|| Error::Parse(format!("expected `0` or `w^k`, got `{text}`")))?;
        let k: u64 = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in `{text}`")))?;
        Ok(F1Element::unit(order, k))
    }
}

impl PartialOrd for F1Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for F1Element {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.order, self.code()).cmp(&(other.order, other.code()))
    }
}

impl fmt::Display for F1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            None => write!(f, "0"),
            Some(k) => write!(f, "w^{k}"),
        }
    }
}

/// Checked product of two elements of the same field.
pub fn multiply(x: F1Element, y: F1Element) -> Result<F1Element> {
    x.mul(y)
}

/// All `l + 1` elements of `F_{1^l}` in code order: `0, w^0, w^1, …`.
pub fn elements(order: u32) -> impl Iterator<Item = F1Element> {
    (0..=order).map(move |c| F1Element::from_code(order, c))
}

/// The power map `u ↦ u^degree` on `F_{1^l}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FrobeniusMap {
    degree: u64,
    source_order: u32,
}

impl FrobeniusMap {
    pub fn new(degree: u64, source_order: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("Frobenius degree must be >= 1".into()));
        }
        if source_order == 0 {
            return Err(Error::InvalidArgument("field order must be >= 1".into()));
        }
        Ok(FrobeniusMap {
            degree,
            source_order,
        })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn source_order(&self) -> u32 {
        self.source_order
    }

    pub fn apply(&self, x: F1Element) -> Result<F1Element> {
        if x.order() != self.source_order {
            return Err(Error::OrderMismatch {
                left: self.source_order,
                right: x.order(),
            });
        }
        Ok(x.pow(self.degree))
    }

    /// `self ∘ other`, i.e. the power map of degree `self.degree * other.degree`.
    pub fn compose(&self, other: &FrobeniusMap) -> Result<FrobeniusMap> {
        if self.source_order != other.source_order {
            return Err(Error::OrderMismatch {
                left: self.source_order,
                right: other.source_order,
            });
        }
        FrobeniusMap::new(self.degree * other.degree, self.source_order)
    }

    pub fn is_automorphism(&self) -> bool {
        (self.degree % self.source_order as u64).gcd(&(self.source_order as u64)) == 1
    }
}

/// `x^d`.
pub fn frobenius(d: u64, x: F1Element) -> F1Element {
    x.pow(d)
}

/// Elements of `F_{1^level}` fixed by `u ↦ u^{l+1}`. When `l | level` these
/// are exactly the image of `F_{1^l}`, which is how a finite level of the
/// algebraic closure sees the subfield.
pub fn frobenius_fixed_points(level: u32, l: u32) -> Vec<F1Element> {
    elements(level)
        .filter(|x| x.pow(l as u64 + 1) == *x)
        .collect()
}

/// Exponents `d ∈ [1, l]` coprime to `l`; each names the automorphism `u ↦ u^d`.
pub fn automorphism_group(l: u32) -> Vec<u32> {
    (1..=l).filter(|d| d.gcd(&l) == 1).collect()
}

/// Euler's totient by trial factorisation.
pub fn euler_totient(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Every multiplicative permutation of `F_{1^l}`, found by a backtracking
/// search over permutations of its `l + 1` elements.
///
/// Each map is returned as its table of images indexed by element code.
/// The search knows nothing about power maps. It only prunes partial
/// assignments that already break `φ(xy) = φ(x)φ(y)`.
pub fn automorphisms_by_search(l: u32) -> Vec<Vec<F1Element>> {
    let size = l as usize + 1;
    let elems: Vec<F1Element> = elements(l).collect();
    let product = |a: usize, b: usize| elems[a].mul_same_order(elems[b]).code() as usize;

    fn extend(
        next: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        product: &dyn Fn(usize, usize) -> usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let size = used.len();
        if next == size {
            out.push(images.clone());
            return;
        }
        for candidate in 0..size {
            if used[candidate] {
                continue;
            }
            images.push(candidate);
            used[candidate] = true;
            let consistent = (0..=next).all(|a| {
                (0..=next).all(|b| {
                    let ab = product(a, b);
                    ab > next || product(images[a], images[b]) == images[ab]
                })
            });
            if consistent {
                extend(next + 1, images, used, product, out);
            }
            used[candidate] = false;
            images.pop();
        }
    }

    let mut found = Vec::new();
    extend(
        0,
        &mut Vec::with_capacity(size),
        &mut vec![false; size],
        &product,
        &mut found,
    );
    found
        .into_iter()
        .map(|table| table.into_iter().map(|c| elems[c]).collect())
        .collect()
}

/// The power map `v ↦ v^{r+1}` on `F_{1^m}` together with the two
/// divisibility conditions that make it a nontrivial involution.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct InvolutionSpec {
    pub m: u32,
    pub r: u32,
    /// `m | r(r+2)`
    pub sub_ok: bool,
    /// `m ∤ r`
    pub ntriv_ok: bool,
}

impl InvolutionSpec {
    pub fn is_valid(&self) -> bool {
        self.sub_ok && self.ntriv_ok
    }

    pub fn map_exponent(&self) -> u64 {
        self.r as u64 + 1
    }

    pub fn apply(&self, x: F1Element) -> Result<F1Element> {
        if x.order() != self.m {
            return Err(Error::OrderMismatch {
                left: self.m,
                right: x.order(),
            });
        }
        Ok(x.pow(self.map_exponent()))
    }

    /// `|μ_{gcd(m, r)}|`; the fixed field of a valid spec is `F_{1^{gcd(m,r)}}`.
    pub fn fixed_field_order(&self) -> u32 {
        self.m.gcd(&self.r)
    }

    pub fn fixed_points(&self) -> Vec<F1Element> {
        elements(self.m)
            .filter(|x| x.pow(self.map_exponent()) == *x)
            .collect()
    }
}

/// Arithmetic classification of `Fr^{r+1}` on `F_{1^m}`.
pub fn classify_involution(m: u32, r: u32) -> Result<InvolutionSpec> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidArgument("m and r must be >= 1".into()));
    }
    let (m64, r64) = (m as u64, r as u64);
    Ok(InvolutionSpec {
        m,
        r,
        sub_ok: (r64 * (r64 + 2)) % m64 == 0,
        ntriv_ok: r64 % m64 != 0,
    })
}

/// Decides element by element whether `v ↦ v^{r+1}` is a nontrivial
/// multiplicative involution of `F_{1^m}`, with `m <= bound`.
///
/// Powers are taken by repeated multiplication so the check does not share
/// the exponent arithmetic used by [`classify_involution`].
pub fn involution_brute_force(m: u32, r: u32, bound: u32) -> Result<bool> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidArgument("m and r must be >= 1".into()));
    }
    if m > bound {
        return Err(Error::BoundExceeded {
            what: "m",
            value: m as u64,
            bound: bound as u64,
        });
    }
    let elems: Vec<F1Element> = elements(m).collect();
    let power = |x: F1Element| {
        (0..r).fold(x, |acc, _| acc.mul_same_order(x))
    };
    let image: Vec<F1Element> = elems.iter().map(|&x| power(x)).collect();

    let mut seen = vec![false; elems.len()];
    for y in &image {
        let c = y.code() as usize;
        if seen[c] {
            return Ok(false);
        }
        seen[c] = true;
    }
    let multiplicative = elems.iter().enumerate().all(|(i, &x)| {
        elems.iter().enumerate().all(|(j, &y)| {
            let xy = x.mul_same_order(y).code() as usize;
            image[xy] == image[i].mul_same_order(image[j])
        })
    });
    if !multiplicative {
        return Ok(false);
    }
    let squares_to_identity = image
        .iter()
        .zip(&elems)
        .all(|(y, x)| image[y.code() as usize] == *x);
    let nontrivial = image.iter().zip(&elems).any(|(y, x)| y != x);
    Ok(squares_to_identity && nontrivial)
}

/// The conjugation used by standard forms and unitarity: either the
/// identity (the `F_{1^2}` setting) or a valid power involution.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Conjugation {
    Identity,
    Frobenius(InvolutionSpec),
}

impl Conjugation {
    /// `Fr^{r+1}` on `F_{1^m}`; rejects specs that are not nontrivial involutions.
    pub fn frobenius(m: u32, r: u32) -> Result<Conjugation> {
        let spec = classify_involution(m, r)?;
        if !spec.is_valid() {
            return Err(Error::InvalidArgument(format!(
                "v -> v^{} is not a nontrivial involution of F_1^{m}",
                r + 1
            )));
        }
        Ok(Conjugation::Frobenius(spec))
    }

    /// Power applied to each entry: `1` for the identity, `r + 1` otherwise.
    pub fn exponent(&self) -> u64 {
        match self {
            Conjugation::Identity => 1,
            Conjugation::Frobenius(spec) => spec.map_exponent(),
        }
    }

    /// Fails when a Frobenius conjugation is used on a field of another order.
    pub fn check_order(&self, order: u32) -> Result<()> {
        match self {
            Conjugation::Frobenius(spec) if spec.m != order => Err(Error::OrderMismatch {
                left: spec.m,
                right: order,
            }),
            _ => Ok(()),
        }
    }

    pub fn apply(&self, x: F1Element) -> Result<F1Element> {
        self.check_order(x.order())?;
        Ok(x.pow(self.exponent()))
    }
}

impl fmt::Display for Conjugation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conjugation::Identity => write!(f, "identity"),
            Conjugation::Frobenius(spec) => write!(f, "v -> v^{}", spec.map_exponent()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn multiplication_examples() {
        let a = F1Element::unit(2, 1);
        assert!(a.mul(a).unwrap().is_one());
        for l in 1..6 {
            for x in elements(l) {
                assert!(F1Element::zero(l).mul(x).unwrap().is_zero());
            }
        }
        let p = F1Element::unit(3, 1).mul(F1Element::unit(3, 2)).unwrap();
        assert_eq!(p, F1Element::one(3));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let err = multiply(F1Element::one(2), F1Element::one(3)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 2, right: 3 });
    }

    #[test]
    fn exponents_are_reduced() {
        assert_eq!(F1Element::unit(5, 13).exponent(), Some(3));
        assert_eq!(F1Element::parse("w^7", 3).unwrap(), F1Element::unit(3, 1));
        assert!(F1Element::parse("a", 3).is_err());
        assert!(F1Element::parse("w^x", 3).is_err());
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius(2, F1Element::unit(3, 1)), F1Element::unit(3, 2));
        let a = F1Element::unit(2, 1);
        assert_eq!(frobenius(3, a), a);
        for x in elements(4) {
            assert_eq!(frobenius(5, x), x);
        }
        let fr = FrobeniusMap::new(5, 4).unwrap();
        assert!(fr.apply(F1Element::one(3)).is_err());
        assert!(FrobeniusMap::new(0, 4).is_err());
    }

    #[test]
    fn closure_level_fixed_points_are_the_subfield() {
        for level in [12u32, 24, 30] {
            for l in (1..=level).filter(|l| level % l == 0) {
                let embedded: Vec<F1Element> =
                    elements(l).map(|x| x.embed(level).unwrap()).collect();
                let mut fixed = frobenius_fixed_points(level, l);
                let mut expected = embedded.clone();
                fixed.sort();
                expected.sort();
                assert_eq!(fixed, expected, "level {level}, l {l}");
            }
        }
        assert!(F1Element::one(4).embed(6).is_err());
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(automorphism_group(2), vec![1]);
        assert_eq!(automorphism_group(1), vec![1]);
        assert_eq!(automorphism_group(12), vec![1, 5, 7, 11]);
    }

    #[test]
    fn automorphism_search_for_twelve() {
        let maps = automorphisms_by_search(12);
        let mut generators: Vec<u32> = maps
            .iter()
            .map(|m| m[F1Element::unit(12, 1).code() as usize].exponent().unwrap())
            .collect();
        generators.sort();
        assert_eq!(generators, vec![1, 5, 7, 11]);
    }

    #[test]
    fn totient_matches_group_size() {
        for l in 1..=24 {
            assert_eq!(automorphism_group(l).len() as u32, euler_totient(l), "l = {l}");
            for d in automorphism_group(l) {
                let fr = FrobeniusMap::new(d as u64, l).unwrap();
                assert!(fr.is_automorphism());
                let image: std::collections::BTreeSet<_> =
                    elements(l).map(|x| fr.apply(x).unwrap()).collect();
                assert_eq!(image.len(), l as usize + 1);
                for x in elements(l) {
                    for y in elements(l) {
                        assert_eq!(
                            fr.apply(x.mul(y).unwrap()).unwrap(),
                            fr.apply(x).unwrap().mul(fr.apply(y).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn involution_examples() {
        let inv = classify_involution(3, 1).unwrap();
        assert!(inv.is_valid());
        assert_eq!(inv.fixed_field_order(), 1);
        assert_eq!(inv.apply(F1Element::unit(3, 1)).unwrap(), F1Element::unit(3, 2));

        let trivial = classify_involution(2, 2).unwrap();
        assert!(trivial.sub_ok && !trivial.ntriv_ok);
        assert!(!involution_brute_force(2, 2, DEFAULT_BRUTE_FORCE_BOUND).unwrap());

        let eight = classify_involution(8, 2).unwrap();
        assert!(eight.is_valid());
        assert!(involution_brute_force(8, 2, DEFAULT_BRUTE_FORCE_BOUND).unwrap());
        assert!(involution_brute_force(3, 1, DEFAULT_BRUTE_FORCE_BOUND).unwrap());
    }

    #[test]
    fn brute_force_bound_is_enforced() {
        assert!(matches!(
            involution_brute_force(65, 1, DEFAULT_BRUTE_FORCE_BOUND),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(classify_involution(0, 1).is_err());
    }

    #[test]
    fn predicate_agrees_with_brute_force() {
        for m in 1..=36 {
            for r in 1..=12 {
                let spec = classify_involution(m, r).unwrap();
                let brute = involution_brute_force(m, r, DEFAULT_BRUTE_FORCE_BOUND).unwrap();
                assert_eq!(spec.is_valid(), brute, "m = {m}, r = {r}");
            }
        }
    }

    #[test]
    fn sub_implies_coprime_exponent() {
        for m in 1..=60u32 {
            for r in 1..=30u32 {
                if classify_involution(m, r).unwrap().sub_ok {
                    assert_eq!((r + 1).gcd(&m), 1, "m = {m}, r = {r}");
                }
            }
        }
    }

    #[test]
    fn fixed_set_is_gcd_subfield() {
        for m in 1..=36 {
            for r in 1..=12 {
                let spec = classify_involution(m, r).unwrap();
                if !spec.is_valid() {
                    continue;
                }
                let g = spec.fixed_field_order();
                let mut expected: Vec<F1Element> =
                    elements(g).map(|x| x.embed(m).unwrap()).collect();
                expected.sort();
                assert_eq!(spec.fixed_points(), expected, "m = {m}, r = {r}");
            }
        }
    }

    #[test]
    fn conjugation_rejects_invalid_specs() {
        assert!(Conjugation::frobenius(2, 2).is_err());
        let c = Conjugation::frobenius(8, 2).unwrap();
        assert_eq!(c.exponent(), 3);
        assert!(c.apply(F1Element::one(4)).is_err());
        assert_eq!(Conjugation::Identity.apply(F1Element::unit(5, 2)).unwrap(), F1Element::unit(5, 2));
    }

    proptest! {
        #[test]
        fn frobenius_composes(l in 1u32..30, code in 0u32..30, d1 in 1u64..=10, d2 in 1u64..=10) {
            let x = F1Element::from_code(l, code % (l + 1));
            prop_assert_eq!(frobenius(d1, frobenius(d2, x)), frobenius(d1 * d2, x));
            let f1 = FrobeniusMap::new(d1, l).unwrap();
            let f2 = FrobeniusMap::new(d2, l).unwrap();
            prop_assert_eq!(f1.compose(&f2).unwrap().apply(x).unwrap(), frobenius(d1 * d2, x));
        }

        #[test]
        fn units_form_a_group(l in 1u32..40, a in 0u64..100, b in 0u64..100, c in 0u64..100) {
            let (x, y, z) = (F1Element::unit(l, a), F1Element::unit(l, b), F1Element::unit(l, c));
            prop_assert_eq!(x.mul(y).unwrap(), y.mul(x).unwrap());
            prop_assert_eq!(x.mul(y).unwrap().mul(z).unwrap(), x.mul(y.mul(z).unwrap()).unwrap());
            prop_assert!(x.mul(x.inverse().unwrap()).unwrap().is_one());
        }
    }
}
