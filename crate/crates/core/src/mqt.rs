//! Modal quantum theory over `F_{q^2}` for small primes `q`.
//!
//! `F_{q^2}` is built as `F_q[x] / (x^2 + bx + c)` for the lexicographically
//! least irreducible `(b, c)`. Conjugation is `v ↦ v^q` with fixed field
//! `F_q`. Unlike `F_{1^l}` this structure has addition, so the Hermitian
//! form is total. The comparison with the absolute side sets `r = q - 1`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Budget, Error, Result};
use crate::f1_algebra::{classify_involution, Conjugation};
use crate::operators::{gl_order, unitaries};

pub const MAX_PRIME: u32 = 13;

/// `c0 + c1·x` with residues mod `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct GfElement {
    pub c0: u32,
    pub c1: u32,
}

impl fmt::Display for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c1, self.c0) {
            (0, c0) => write!(f, "{c0}"),
            (1, 0) => write!(f, "x"),
            (1, c0) => write!(f, "x+{c0}"),
            (c1, 0) => write!(f, "{c1}x"),
            (c1, c0) => write!(f, "{c1}x+{c0}"),
        }
    }
}

/// `F_p` (degree 1) or `F_{p^2}` (degree 2).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GfField {
    p: u32,
    degree: u8,
    /// `(b, c)` for the modulus `x^2 + bx + c`; unused in degree 1.
    modulus: (u32, u32),
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn check_prime(q: u32) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::InvalidArgument(format!("q = {q} is not prime")));
    }
    if q > MAX_PRIME {
        return Err(Error::BoundExceeded {
            what: "q",
            value: q as u64,
            bound: MAX_PRIME as u64,
        });
    }
    Ok(())
}

impl GfField {
    pub fn prime(p: u32) -> Result<GfField> {
        check_prime(p)?;
        Ok(GfField {
            p,
            degree: 1,
            modulus: (0, 0),
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn size(&self) -> u32 {
        self.p.pow(self.degree as u32)
    }

    pub fn modulus(&self) -> Option<(u32, u32)> {
        (self.degree == 2).then_some(self.modulus)
    }

    /// `x^2+bx+c` with zero terms dropped, or `None` for a prime field.
    pub fn modulus_string(&self) -> Option<String> {
        self.modulus().map(|(b, c)| {
            let mut s = "x^2".to_string();
            match b {
                0 => {}
                1 => s.push_str("+x"),
                b => s.push_str(&format!("+{b}x")),
            }
            if c != 0 {
                s.push_str(&format!("+{c}"));
            }
            s
        })
    }

    pub fn zero(&self) -> GfElement {
        GfElement { c0: 0, c1: 0 }
    }

    pub fn one(&self) -> GfElement {
        GfElement { c0: 1, c1: 0 }
    }

    pub fn element(&self, c0: u32, c1: u32) -> Result<GfElement> {
        if self.degree == 1 && !c1.is_multiple_of(self.p) {
            return Err(Error::InvalidArgument(format!(
                "F_{} has no x-component",
                self.p
            )));
        }
        Ok(GfElement {
            c0: c0 % self.p,
            c1: c1 % self.p,
        })
    }

    /// All elements, ordered by `(c1, c0)`.
    pub fn elements(&self) -> Vec<GfElement> {
        let top = if self.degree == 2 { self.p } else { 1 };
        (0..top)
            .flat_map(|c1| (0..self.p).map(move |c0| GfElement { c0, c1 }))
            .collect()
    }

    pub fn units(&self) -> Vec<GfElement> {
        self.elements().into_iter().filter(|x| *x != self.zero()).collect()
    }

    pub fn add(&self, a: GfElement, b: GfElement) -> GfElement {
        GfElement {
            c0: (a.c0 + b.c0) % self.p,
            c1: (a.c1 + b.c1) % self.p,
        }
    }

    pub fn neg(&self, a: GfElement) -> GfElement {
        GfElement {
            c0: (self.p - a.c0) % self.p,
            c1: (self.p - a.c1) % self.p,
        }
    }

    pub fn sub(&self, a: GfElement, b: GfElement) -> GfElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: GfElement, b: GfElement) -> GfElement {
        let p = self.p as u64;
        let (a0, a1, b0, b1) = (a.c0 as u64, a.c1 as u64, b.c0 as u64, b.c1 as u64);
        let (mb, mc) = (self.modulus.0 as u64, self.modulus.1 as u64);
        // x^2 = -b x - c
        let top = a1 * b1 % p;
        let c0 = (a0 * b0 + (p - mc) * top) % p;
        let c1 = (a0 * b1 + a1 * b0 + (p - mb) * top) % p;
        GfElement {
            c0: c0 as u32,
            c1: c1 as u32,
        }
    }

    pub fn pow(&self, a: GfElement, mut e: u64) -> GfElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: GfElement) -> Option<GfElement> {
        (a != self.zero()).then(|| self.pow(a, self.size() as u64 - 2))
    }

    /// `v ↦ v^p`; the identity on a prime field.
    pub fn conj(&self, a: GfElement) -> GfElement {
        self.pow(a, self.p as u64)
    }

    pub fn is_fixed(&self, a: GfElement) -> bool {
        self.conj(a) == a
    }

    pub fn multiplicative_order(&self, a: GfElement) -> Option<u32> {
        if a == self.zero() {
            return None;
        }
        let mut k = 1;
        let mut x = a;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Least element (in `(c1, c0)` order) generating the unit group.
    pub fn generator(&self) -> Option<GfElement> {
        let n = self.size() - 1;
        self.units()
            .into_iter()
            .find(|&a| self.multiplicative_order(a) == Some(n))
    }

    /// Units `s` with `s^k = 1`.
    pub fn roots_of_unity(&self, k: u64) -> Vec<GfElement> {
        self.units()
            .into_iter()
            .filter(|&s| self.pow(s, k) == self.one())
            .collect()
    }
}

fn has_root(p: u32, b: u32, c: u32) -> bool {
    (0..p).any(|x| (x * x + b * x + c).is_multiple_of(p))
}

/// `F_{q^2}` for a prime `q <= 13`, using the lexicographically least
/// irreducible monic quadratic `x^2 + bx + c` ordered by `(b, c)`.
pub fn gf_build(q: u32) -> Result<GfField> {
    check_prime(q)?;
    let (b, c) = (0..q)
        .cartesian_product(0..q)
        .find(|&(b, c)| !has_root(q, b, c))
        .ok_or_else(|| Error::Invariant(format!("no irreducible quadratic over F_{q}")))?;
    let field = GfField {
        p: q,
        degree: 2,
        modulus: (b, c),
    };
    for a in field.units() {
        let inv = field.inv(a).expect("nonzero");
        if field.mul(a, inv) != field.one() {
            return Err(Error::Invariant(format!("{a} has no inverse in F_{}", field.size())));
        }
    }
    Ok(field)
}

/// `⟨x|y⟩ = x_1^q y_1 + … + x_m^q y_m`.
pub fn hermitian_form(field: &GfField, x: &[GfElement], y: &[GfElement]) -> Result<GfElement> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter()
        .zip(y)
        .fold(field.zero(), |acc, (a, b)| field.add(acc, field.mul(field.conj(*a), *b))))
}

/// `σ(⟨x|y⟩) · ⟨x|y⟩`, the analogue of `|⟨x|y⟩|^2`. Always in `F_q`.
pub fn born_value(field: &GfField, x: &[GfElement], y: &[GfElement]) -> Result<GfElement> {
    let h = hermitian_form(field, x, y)?;
    Ok(field.mul(field.conj(h), h))
}

/// All vectors of length `m` over `field`.
pub fn vectors(field: &GfField, m: usize) -> Vec<Vec<GfElement>> {
    (0..m)
        .map(|_| field.elements())
        .multi_cartesian_product()
        .collect()
}

type Dense = Vec<Vec<GfElement>>;

fn dense_monomial(field: &GfField, perm: &[usize], scalars: &[GfElement]) -> Dense {
    let m = perm.len();
    let mut a = vec![vec![field.zero(); m]; m];
    for (j, (&i, &s)) in perm.iter().zip(scalars).enumerate() {
        a[i][j] = s;
    }
    a
}

/// `σ(Uᵀ) · U = id`, as a full matrix product with field addition.
fn dense_is_unitary(field: &GfField, u: &Dense) -> bool {
    let m = u.len();
    (0..m).all(|i| {
        (0..m).all(|j| {
            let entry = (0..m).fold(field.zero(), |acc, k| {
                field.add(acc, field.mul(field.conj(u[k][i]), u[k][j]))
            });
            entry == if i == j { field.one() } else { field.zero() }
        })
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MonomialUnitaryScan {
    pub q: u32,
    pub m: usize,
    pub matrices_checked: u128,
    pub unitary_matrices: u128,
    /// Scalars that occur in some unitary monomial matrix.
    pub allowed_scalars: Vec<GfElement>,
    /// `s` with `s^{q+1} = 1`.
    pub roots_of_unity: Vec<GfElement>,
}

impl MonomialUnitaryScan {
    pub fn scalars_are_roots_of_unity(&self) -> bool {
        self.allowed_scalars == self.roots_of_unity
    }
}

/// Filters every monomial `m × m` matrix over `F_{q^2}` for unitarity with
/// respect to the standard Hermitian form and collects the scalars that survive.
pub fn monomial_unitary_entries(q: u32, m: usize, budget: Budget) -> Result<MonomialUnitaryScan> {
    if m == 0 || m > 4 {
        return Err(Error::InvalidArgument(format!("m = {m} must lie in 1..=4")));
    }
    let field = gf_build(q)?;
    let units = field.units();
    let total = gl_order(m, units.len() as u32);
    budget.check(total)?;
    let mut allowed = std::collections::BTreeSet::new();
    let mut unitary = 0u128;
    let mut checked = 0u128;
    for perm in (0..m).permutations(m) {
        for scalars in (0..m).map(|_| units.iter().copied()).multi_cartesian_product() {
            checked += 1;
            if dense_is_unitary(&field, &dense_monomial(&field, &perm, &scalars)) {
                unitary += 1;
                allowed.extend(scalars);
            }
        }
    }
    let mut roots = field.roots_of_unity(q as u64 + 1);
    roots.sort();
    Ok(MonomialUnitaryScan {
        q,
        m,
        matrices_checked: checked,
        unitary_matrices: unitary,
        allowed_scalars: allowed.into_iter().collect(),
        roots_of_unity: roots,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TheoryRow {
    pub theory: String,
    pub k: String,
    pub sigma: String,
    pub k_sigma: String,
    pub standard_form: String,
    /// Order of the scalar group of monomial unitaries, where computed.
    pub unitary_scalar_order: Option<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DictionaryChecks {
    /// `|F_{q^2}| = |F_{1^{r(r+2)}}| = q^2`
    pub field_sizes_match: bool,
    /// `|F_q| = |F_{1^r}| = q`
    pub fixed_field_sizes_match: bool,
    /// both involutions are `v ↦ v^q`
    pub involution_exponents_match: bool,
    /// `v ↦ v^{r+1}` is a nontrivial involution of `F_{1^{r(r+2)}}`
    pub absolute_involution_valid: bool,
    /// `q + 1 = r + 2`, both groups cyclic
    pub unitary_scalar_orders_match: bool,
}

impl DictionaryChecks {
    pub fn all(&self) -> bool {
        self.field_sizes_match
            && self.fixed_field_sizes_match
            && self.involution_exponents_match
            && self.absolute_involution_valid
            && self.unitary_scalar_orders_match
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DictionaryTable {
    pub q: u32,
    pub r: u32,
    pub modulus: String,
    pub rows: Vec<TheoryRow>,
    pub checks: DictionaryChecks,
}

/// Number of monomial rows used when the dictionary scans unitaries.
const DICTIONARY_SCAN_DIM: usize = 2;

/// Instantiates the modal row at `q` and the absolute row at `r = q - 1`
/// and checks that they line up.
pub fn dictionary_table(q: u32) -> Result<DictionaryTable> {
    let field = gf_build(q)?;
    let r = q - 1;
    let l = r * (r + 2);

    let modal_fixed = field.elements().into_iter().filter(|a| field.is_fixed(*a)).count() as u32;
    let scan = monomial_unitary_entries(q, DICTIONARY_SCAN_DIM, Budget::DEFAULT)?;
    let modal_scalars = scan.allowed_scalars.len() as u32;
    let modal_cyclic = scan
        .allowed_scalars
        .iter()
        .any(|s| field.multiplicative_order(*s) == Some(modal_scalars));

    let spec = classify_involution(l, r)?;
    let absolute_fixed = spec.fixed_points().len() as u32;
    let abs_sigma = Conjugation::frobenius(l, r)?;
    let absolute_scalars = unitaries(1, l, abs_sigma, Budget::DEFAULT)?.len() as u32;

    let modal = TheoryRow {
        theory: "Modal Quantum Theory".into(),
        k: format!("F_{}", field.size()),
        sigma: format!("v -> v^{q}"),
        k_sigma: format!("F_{q}"),
        standard_form: format!("x_1^{q} y_1 + ... + x_m^{q} y_m"),
        unitary_scalar_order: Some(modal_scalars),
    };
    let absolute = TheoryRow {
        theory: "Absolute Quantum Theory".into(),
        k: format!("F_1^{l}"),
        sigma: format!("v -> v^{}", r + 1),
        k_sigma: format!("F_1^{r}"),
        standard_form: format!("x_1^{} y_1 + ... + x_m^{} y_m", r + 1, r + 1),
        unitary_scalar_order: Some(absolute_scalars),
    };
    let actual = TheoryRow {
        theory: "Actual Quantum Theory".into(),
        k: "C".into(),
        sigma: "v -> conj(v)".into(),
        k_sigma: "R".into(),
        standard_form: "conj(x_1) y_1 + ... + conj(x_m) y_m".into(),
        unitary_scalar_order: None,
    };
    let general = TheoryRow {
        theory: "General Quantum Theory".into(),
        k: "division ring with involution".into(),
        sigma: "sigma".into(),
        k_sigma: "k_sigma".into(),
        standard_form: "x_1^sigma y_1 + ... + x_m^sigma y_m".into(),
        unitary_scalar_order: None,
    };

    let checks = DictionaryChecks {
        field_sizes_match: field.size() == l + 1,
        fixed_field_sizes_match: modal_fixed == q && absolute_fixed == r + 1,
        involution_exponents_match: spec.map_exponent() == q as u64,
        absolute_involution_valid: spec.is_valid(),
        unitary_scalar_orders_match: scan.scalars_are_roots_of_unity()
            && modal_cyclic
            && modal_scalars == q + 1
            && absolute_scalars == r + 2,
    };
    Ok(DictionaryTable {
        q,
        r,
        modulus: field.modulus_string().expect("degree 2"),
        rows: vec![actual, modal, general, absolute],
        checks,
    })
}

impl DictionaryTable {
    pub fn to_markdown(&self) -> String {
        let mut out = String::from(
            "| Quantum Theory | k | sigma | k_sigma | standard form | unitary scalars |\n\
             |---|---|---|---|---|---|\n",
        );
        for row in &self.rows {
            let order = row
                .unitary_scalar_order
                .map_or_else(|| "-".to_string(), |n| format!("cyclic of order {n}"));
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                row.theory, row.k, row.sigma, row.k_sigma, row.standard_form, order
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let rows = self.rows.iter().map(|row| {
            [
                row.theory.clone(),
                row.k.clone(),
                row.sigma.clone(),
                row.k_sigma.clone(),
                row.standard_form.clone(),
                row.unitary_scalar_order.map_or_else(String::new, |n| n.to_string()),
            ]
        });
        w.write_record(["theory", "k", "sigma", "k_sigma", "standard_form", "unitary_scalar_order"])
            .and_then(|_| rows.into_iter().try_for_each(|r| w.write_record(r)))
            .expect("writing to memory");
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn build_examples() {
        let f4 = gf_build(2).unwrap();
        assert_eq!(f4.modulus(), Some((1, 1)));
        assert_eq!(f4.modulus_string().unwrap(), "x^2+x+1");
        let f9 = gf_build(3).unwrap();
        assert_eq!(f9.modulus(), Some((0, 1)));
        assert_eq!(f9.modulus_string().unwrap(), "x^2+1");
        for q in [5, 7, 11, 13] {
            let f = gf_build(q).unwrap();
            let (b, c) = f.modulus().unwrap();
            assert!(!has_root(q, b, c));
            // nothing smaller is irreducible
            for (b2, c2) in (0..q).cartesian_product(0..q).take_while(|&x| x != (b, c)) {
                assert!(has_root(q, b2, c2));
            }
        }
        assert!(gf_build(4).is_err());
        assert!(gf_build(1).is_err());
        assert!(matches!(gf_build(17), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn conjugation_on_f4() {
        let f = gf_build(2).unwrap();
        let w = f.element(0, 1).unwrap();
        assert_eq!(f.conj(w), f.mul(w, w));
        assert_eq!(f.pow(w, 3), f.one());
    }

    fn check_axioms(f: &GfField, elems: &[GfElement]) {
        for &a in elems {
            assert_eq!(f.add(a, f.zero()), a);
            assert_eq!(f.mul(a, f.one()), a);
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            if a != f.zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
            for &b in elems {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in elems {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2, 3] {
            let f = gf_build(q).unwrap();
            check_axioms(&f, &f.elements());
            let base = GfField::prime(q).unwrap();
            check_axioms(&base, &base.elements());
        }
    }

    #[test]
    fn unit_groups_are_cyclic_and_conjugation_is_involutive() {
        for q in [2, 3, 5, 7, 11, 13] {
            let f = gf_build(q).unwrap();
            assert_eq!(f.elements().len() as u32, q * q);
            let g = f.generator().expect("cyclic unit group");
            assert_eq!(f.multiplicative_order(g), Some(q * q - 1));
            let fixed: Vec<GfElement> = f.elements().into_iter().filter(|a| f.is_fixed(*a)).collect();
            assert_eq!(fixed.len() as u32, q);
            assert!(fixed.iter().all(|a| a.c1 == 0));
            for a in f.elements() {
                assert_eq!(f.conj(f.conj(a)), a);
                for b in f.elements().into_iter().step_by(7) {
                    assert_eq!(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)));
                    assert_eq!(f.conj(f.add(a, b)), f.add(f.conj(a), f.conj(b)));
                }
            }
        }
    }

    #[test]
    fn hermitian_form_examples() {
        let f = gf_build(2).unwrap();
        let (zero, one, w) = (f.zero(), f.one(), f.element(0, 1).unwrap());
        assert_eq!(hermitian_form(&f, &[one, zero], &[one, zero]).unwrap(), one);
        assert_eq!(hermitian_form(&f, &[w, zero], &[w, zero]).unwrap(), one);
        assert_eq!(hermitian_form(&f, &[w, zero], &[zero, w]).unwrap(), zero);
        assert!(hermitian_form(&f, &[w], &[w, zero]).is_err());
    }

    #[test]
    fn hermitian_form_is_reflexive() {
        let f = gf_build(2).unwrap();
        for m in 1..=3 {
            let vs = vectors(&f, m);
            for x in &vs {
                for y in &vs {
                    assert_eq!(
                        hermitian_form(&f, y, x).unwrap(),
                        f.conj(hermitian_form(&f, x, y).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn born_values_land_in_fixed_field() {
        let f = gf_build(2).unwrap();
        let w = f.element(0, 1).unwrap();
        assert_eq!(f.mul(f.conj(w), w), f.one());
        for q in [2, 3] {
            let f = gf_build(q).unwrap();
            let vs = vectors(&f, 2);
            let mut pairs = 0;
            for x in &vs {
                for y in &vs {
                    assert!(f.is_fixed(born_value(&f, x, y).unwrap()));
                    pairs += 1;
                }
            }
            assert_eq!(pairs, (q * q).pow(4));
        }
    }

    #[test]
    fn monomial_unitary_scalars() {
        let scan = monomial_unitary_entries(2, 2, Budget::DEFAULT).unwrap();
        assert_eq!(scan.allowed_scalars.len(), 3);
        assert_eq!(scan.matrices_checked, 18);
        assert_eq!(scan.unitary_matrices, 18);
        assert!(scan.scalars_are_roots_of_unity());

        let scan = monomial_unitary_entries(3, 2, Budget::DEFAULT).unwrap();
        assert_eq!(scan.allowed_scalars.len(), 4);
        assert_eq!(scan.unitary_matrices, 32);
        assert!(scan.scalars_are_roots_of_unity());

        let f = gf_build(5).unwrap();
        let identity = dense_monomial(&f, &[0, 1, 2], &[f.one(); 3]);
        assert!(dense_is_unitary(&f, &identity));
        assert!(monomial_unitary_entries(2, 5, Budget::DEFAULT).is_err());
        assert!(monomial_unitary_entries(13, 4, Budget::DEFAULT).is_err());
    }

    #[test]
    fn dictionary_rows() {
        let t = dictionary_table(2).unwrap();
        let modal = &t.rows[1];
        let absolute = &t.rows[3];
        assert_eq!((modal.k.as_str(), modal.sigma.as_str(), modal.k_sigma.as_str()), ("F_4", "v -> v^2", "F_2"));
        assert_eq!(
            (absolute.k.as_str(), absolute.sigma.as_str(), absolute.k_sigma.as_str()),
            ("F_1^3", "v -> v^2", "F_1^1")
        );
        assert!(t.checks.all());

        let t = dictionary_table(3).unwrap();
        assert_eq!(t.rows[1].k, "F_9");
        assert_eq!(t.rows[3].k, "F_1^8");
        assert_eq!(t.rows[3].sigma, "v -> v^3");
        assert_eq!(t.rows[3].k_sigma, "F_1^2");
        assert_eq!(t.rows[1].unitary_scalar_order, Some(4));
        assert_eq!(t.rows[3].unitary_scalar_order, Some(4));
        assert!(t.checks.all());
        assert!(t.to_markdown().contains("| Absolute Quantum Theory | F_1^8 |"));
        assert_eq!(t.to_csv().lines().count(), 5);

        for q in [5, 7, 11, 13] {
            assert!(dictionary_table(q).unwrap().checks.all(), "q = {q}");
        }
    }

    proptest! {
        #[test]
        fn field_axioms_random(
            qi in 0usize..4,
            a in (0u32..13, 0u32..13),
            b in (0u32..13, 0u32..13),
            c in (0u32..13, 0u32..13),
        ) {
            let q = [5, 7, 11, 13][qi];
            let f = gf_build(q).unwrap();
            let (a, b, c) = (
                f.element(a.0, a.1).unwrap(),
                f.element(b.0, b.1).unwrap(),
                f.element(c.0, c.1).unwrap(),
            );
            check_axioms(&f, &[a, b, c]);
        }
    }
}
