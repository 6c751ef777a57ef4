//! Bundled exhaustive checks, one per acceptance criterion.
//!
//! Each check returns a [`CriterionReport`]; a check that errors is reported
//! as failed with the error text as its detail.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::clone_delete::{
    build_deletion_operator, clones_projectively, deletion_outcomes, is_almost_unitary,
    principal_subsets_unitary, probability_a1, scalar_obstruction, search_projective_cloner, simple_cloner, verify_deletion,
    CloneScope, DeletionOutcome, DEFAULT_SUBSET_BOUND,
};
use crate::error::{Budget, Error, Result};
use crate::f1_algebra::{
    automorphism_group, automorphisms_by_search, classify_involution, euler_totient, frobenius,
    involution_brute_force, Conjugation, F1Element, DEFAULT_BRUTE_FORCE_BOUND,
};
use crate::frames::{enumerate_rays, simple_rays};
use crate::mqt::{born_value, gf_build, monomial_unitary_entries, vectors};
use crate::operators::{
    enumerate_gl, gl_order, is_observable, unitaries, unitary_group, unitary_group_order,
};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u64,
    pub limit_ms: u64,
}

impl CriterionReport {
    pub fn within_limit(&self) -> bool {
        self.elapsed_ms <= self.limit_ms
    }
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub limit: Duration,
    check: fn() -> Result<String>,
}

pub const CRITERIA: [Criterion; 6] = [
    Criterion {
        id: 1,
        title: "involution predicate agrees with brute force",
        limit: Duration::from_secs(5),
        check: involution_predicate,
    },
    Criterion {
        id: 2,
        title: "automorphism group has order phi(l)",
        limit: Duration::from_secs(30),
        check: automorphism_counts,
    },
    Criterion {
        id: 3,
        title: "unitary and observable counts",
        limit: Duration::from_secs(10),
        check: unitary_groups,
    },
    Criterion {
        id: 4,
        title: "no universal projective cloner",
        limit: Duration::from_secs(60),
        check: no_cloning,
    },
    Criterion {
        id: 5,
        title: "almost-unitary deletion",
        limit: Duration::from_secs(30),
        check: deletion,
    },
    Criterion {
        id: 6,
        title: "modal dictionary alignment",
        limit: Duration::from_secs(10),
        check: dictionary,
    },
];

fn fail(msg: String) -> Error {
    Error::Invariant(msg)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

fn involution_predicate() -> Result<String> {
    let mut cases = 0;
    let mut valid = 0;
    for m in 1..=36 {
        for r in 1..=12 {
            let predicate = classify_involution(m, r)?.is_valid();
            let brute = involution_brute_force(m, r, DEFAULT_BRUTE_FORCE_BOUND)?;
            ensure(predicate == brute, || format!("disagreement at m = {m}, r = {r}"))?;
            cases += 1;
            valid += predicate as u32;
        }
    }
    Ok(format!("{cases} cases, {valid} involutions, 0 disagreements"))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn automorphism_counts() -> Result<String> {
    for l in 1..=24 {
        let coprime = (1..=l).filter(|&d| gcd(d, l) == 1).count() as u32;
        let group = automorphism_group(l);
        ensure(group.len() as u32 == euler_totient(l) && coprime == euler_totient(l), || {
            format!("|Aut| mismatch at l = {l}")
        })?;
    }
    for l in 1..=12 {
        let found = automorphisms_by_search(l);
        ensure(found.len() as u32 == euler_totient(l), || {
            format!("search found {} automorphisms at l = {l}", found.len())
        })?;
        for table in &found {
            let matches_power = automorphism_group(l).into_iter().any(|d| {
                table
                    .iter()
                    .enumerate()
                    .all(|(code, img)| frobenius(d as u64, F1Element::from_code(l, code as u32)) == *img)
            });
            ensure(matches_power, || format!("non-power automorphism at l = {l}"))?;
        }
    }
    Ok("l <= 24 by formula, l <= 12 by permutation search, 0 disagreements".into())
}

fn unitary_groups() -> Result<String> {
    for ((m, r), expected) in [((2, 1), 18u128), ((3, 1), 162), ((2, 2), 32)] {
        let count = unitary_group(m, r, Budget::DEFAULT)?.len() as u128;
        ensure(count == expected && count == unitary_group_order(m, r), || {
            format!("|U({m})| = {count} at r = {r}, expected {expected}")
        })?;
    }
    let sigma = Conjugation::Identity;
    let mut observables = 0;
    for m in 1..=4 {
        let all = enumerate_gl(m, 2, Budget::DEFAULT)?;
        let u = unitaries(m, 2, sigma, Budget::DEFAULT)?;
        ensure(u.len() == all.len() && all.len() as u128 == gl_order(m, 2), || {
            format!("U != GL at m = {m}")
        })?;
        for h in &all {
            if is_observable(h, sigma)? {
                observables += 1;
                ensure(h.compose(h)?.is_identity(), || format!("H^2 != id for {}", h.to_text()))?;
            }
        }
    }
    Ok(format!(
        "counts 18/162/32; U = GL for m <= 4; {observables} observables square to id"
    ))
}

fn no_cloning() -> Result<String> {
    let sigma = Conjugation::Identity;
    let all = search_projective_cloner(2, 2, sigma, CloneScope::AllRays, Budget::DEFAULT)?;
    ensure(all.unitaries_checked == 384 && all.blanks_checked == 8, || {
        format!("searched {} x {}", all.unitaries_checked, all.blanks_checked)
    })?;
    ensure(all.witness.is_none(), || "universal cloner found".into())?;

    let simple = search_projective_cloner(2, 2, sigma, CloneScope::SimpleRays, Budget::DEFAULT)?;
    let witness = simple.witness.ok_or_else(|| fail("no simple-ray cloner".into()))?;
    let targets = simple_rays(2, 2);
    ensure(clones_projectively(&witness.unitary, &witness.blank, &targets)?, || {
        "simple witness fails on re-application".into()
    })?;
    let explicit = simple_cloner(2, 2)?;
    ensure(clones_projectively(&explicit.unitary, &explicit.blank, &targets)?, || {
        "explicit swap cloner fails".into()
    })?;

    for l in 2..=24 {
        ensure(!scalar_obstruction(l).is_empty(), || format!("empty obstruction at l = {l}"))?;
    }
    Ok("384 x 8 pairs, no universal cloner; simple witness re-verified; obstruction nonempty for 2 <= l <= 24".into())
}

fn deletion() -> Result<String> {
    for m in 1..=3 {
        for l in 1..=3 {
            let u = build_deletion_operator(m, l)?;
            let mut sigmas = vec![Conjugation::Identity];
            if l == 3 {
                sigmas.push(Conjugation::frobenius(3, 1)?);
            }
            for sigma in sigmas {
                let fast = is_almost_unitary(&u, sigma)?;
                let full = principal_subsets_unitary(&u, sigma, DEFAULT_SUBSET_BOUND)?;
                ensure(fast && full, || format!("deleter not almost unitary at m = {m}, l = {l}"))?;
            }
            let generic = u.nonsingular_principal_submatrix(&(0..m * m).collect::<Vec<_>>());
            ensure(m == 1 || generic.is_none(), || "deleter is nonsingular".into())?;
        }
    }
    for m in 1..=4 {
        for l in 1..=4 {
            for (ray, outcome) in deletion_outcomes(m, l)? {
                let expected = if ray.representative().entries()[0].is_zero() {
                    DeletionOutcome::Annihilated
                } else {
                    DeletionOutcome::Deleted
                };
                ensure(outcome == expected, || format!("{ray} gave {outcome:?} at m = {m}, l = {l}"))?;
            }
            let report = verify_deletion(m, l)?;
            let counted = enumerate_rays(m, l)
                .iter()
                .filter(|r| !r.representative().entries()[0].is_zero())
                .count();
            let oracle = BigRational::new(counted.into(), enumerate_rays(m, l).len().into());
            let formula = probability_a1(m as u32, l)?;
            ensure(report.probability.0 == formula && formula == oracle, || {
                format!("probability {} vs {formula} at m = {m}, l = {l}", report.probability)
            })?;
        }
    }
    let p22 = probability_a1(2, 2)?;
    ensure(p22 == BigRational::new(3.into(), 4.into()), || format!("P(2, 2) = {p22}"))?;

    let gap = (probability_a1(1000, 2)? - BigRational::new(2.into(), 3.into())).abs();
    // 1e-6
    let tolerance = BigRational::new(1.into(), 1_000_000.into());
    ensure(gap < tolerance, || "P(1000, 2) not near 2/3".into())?;

    let mut previous = BigRational::zero();
    for l in 1..=64 {
        let p = probability_a1(3, l)?;
        ensure(p > previous && p < BigRational::one(), || format!("not monotone at l = {l}"))?;
        previous = p;
    }
    Ok("almost unitary for m, l <= 3; outcomes exact for m, l <= 4; P(2, 2) = 3/4; |P(1000, 2) - 2/3| < 1e-6".into())
}

fn dictionary() -> Result<String> {
    for q in [2, 3] {
        let scan = monomial_unitary_entries(q, 2, Budget::DEFAULT)?;
        let r = q - 1;
        let l = r * (r + 2);
        let absolute = unitaries(1, l, Conjugation::frobenius(l, r)?, Budget::DEFAULT)?.len() as u32;
        let modal = scan.allowed_scalars.len() as u32;
        ensure(modal == q + 1 && absolute == r + 2 && scan.scalars_are_roots_of_unity(), || {
            format!("scalar orders {modal} vs {absolute} at q = {q}")
        })?;
    }
    let field = gf_build(2)?;
    let vs = vectors(&field, 2);
    let mut pairs = 0;
    for x in &vs {
        for y in &vs {
            let b = born_value(&field, x, y)?;
            ensure(field.is_fixed(b), || format!("born value {b} outside F_2"))?;
            pairs += 1;
        }
    }
    ensure(pairs == 256, || format!("{pairs} pairs"))?;
    Ok("scalar groups of order 3 and 4 match mu_{r+2}; 256 born values in F_2".into())
}

pub fn run(criterion: &Criterion) -> CriterionReport {
    let start = Instant::now();
    let outcome = (criterion.check)();
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (passed, detail) = match outcome {
        Ok(detail) => (true, detail),
        Err(e) => (false, e.to_string()),
    };
    CriterionReport {
        id: criterion.id,
        title: criterion.title,
        passed,
        detail,
        elapsed_ms,
        limit_ms: criterion.limit.as_millis() as u64,
    }
}

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().map(run).collect()
}
