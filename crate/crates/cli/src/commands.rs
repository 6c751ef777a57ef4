use std::fmt::Write as _;

use f1qt_core::clone_delete::{
    build_deletion_operator, is_almost_unitary, probability_a1, search_projective_cloner,
    verify_deletion, CloneScope, Fraction, Limits,
};
use f1qt_core::f1_algebra::{automorphism_group, classify_involution, elements, euler_totient};
use f1qt_core::mqt::dictionary_table;
use f1qt_core::operators::{self, gl_order, unitary_group_order, MatrixJson};
use f1qt_core::selftest;
use f1qt_core::{Budget, Conjugation, Error, Result, StateVector};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Ok,
    Counterexample,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Counterexample => "counterexample",
        }
    }

    fn unless(bad: bool) -> Status {
        if bad {
            Status::Counterexample
        } else {
            Status::Ok
        }
    }
}

pub struct Output {
    pub status: Status,
    pub json: String,
    pub text: String,
    pub csv: Option<String>,
}

impl Output {
    fn new(status: Status, payload: &impl Serialize, text: String) -> Result<Output> {
        let json = serde_json::to_string_pretty(payload)
            .map_err(|e| Error::Invariant(format!("serialization failed: {e}")))?;
        Ok(Output {
            status,
            json,
            text,
            csv: None,
        })
    }

    fn with_csv(mut self, csv: String) -> Output {
        self.csv = Some(csv);
        self
    }
}

fn sigma_for(l: u32, r: Option<u32>) -> Result<Conjugation> {
    match r {
        None => Ok(Conjugation::Identity),
        Some(r) => Conjugation::frobenius(l, r),
    }
}

#[derive(Serialize)]
struct FieldInfo {
    l: u32,
    elements: Vec<String>,
    unit_group_order: u32,
    automorphisms: Vec<u32>,
    euler_totient: u32,
    involutions: Vec<u32>,
}

pub fn field_info(l: u32, budget: Budget) -> Result<Output> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be >= 1".into()));
    }
    budget.check(l as u128 + 1)?;
    let involutions = (1..=l)
        .map(|r| classify_involution(l, r).map(|s| (r, s.is_valid())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(r, ok)| ok.then_some(r))
        .collect();
    let info = FieldInfo {
        l,
        elements: elements(l).map(|x| x.to_string()).collect(),
        unit_group_order: l,
        automorphisms: automorphism_group(l),
        euler_totient: euler_totient(l),
        involutions,
    };
    let mut text = String::new();
    writeln!(text, "F_1^{l} = {{{}}}", info.elements.join(", ")).ok();
    writeln!(text, "units: cyclic of order {l}").ok();
    writeln!(
        text,
        "automorphisms v -> v^d: d in {:?} ({} = phi({l}))",
        info.automorphisms,
        info.automorphisms.len()
    )
    .ok();
    writeln!(text, "involutions v -> v^(r+1): r in {:?}", info.involutions).ok();
    Output::new(Status::Ok, &info, text)
}

#[derive(Serialize)]
struct InvolutionRow {
    r: u32,
    exponent: u64,
    sub: bool,
    ntriv: bool,
    valid: bool,
    fixed_field_order: u32,
}

#[derive(Serialize)]
struct InvolutionTable {
    m: u32,
    rows: Vec<InvolutionRow>,
}

pub fn involutions(m: u32, r: Option<u32>) -> Result<Output> {
    let rs: Vec<u32> = match r {
        Some(r) => vec![r],
        None => (1..=m).collect(),
    };
    let rows = rs
        .into_iter()
        .map(|r| {
            let spec = classify_involution(m, r)?;
            Ok(InvolutionRow {
                r,
                exponent: r as u64 + 1,
                sub: spec.sub_ok,
                ntriv: spec.ntriv_ok,
                valid: spec.is_valid(),
                fixed_field_order: spec.fixed_field_order(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut text = format!("involutions v -> v^(r+1) of F_1^{m}\n r  SUB    NTRIV  valid  fixed field\n");
    for row in &rows {
        writeln!(
            text,
            "{:>2}  {:<5}  {:<5}  {:<5}  {}",
            row.r,
            row.sub,
            row.ntriv,
            row.valid,
            if row.valid {
                format!("F_1^{}", row.fixed_field_order)
            } else {
                "-".into()
            }
        )
        .ok();
    }
    Output::new(Status::Ok, &InvolutionTable { m, rows }, text)
}

#[derive(Serialize)]
struct UnitaryGroupReport {
    m: usize,
    r: u32,
    l: u32,
    sigma: String,
    expected_order: u128,
    filtered_count: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<MatrixJson>>,
}

pub fn unitary_group(m: usize, r: u32, enumerate: bool, budget: Budget) -> Result<Output> {
    let group = operators::unitary_group(m, r, budget)?;
    let l = r * (r + 2);
    let sigma = Conjugation::frobenius(l, r)?;
    let report = UnitaryGroupReport {
        m,
        r,
        l,
        sigma: sigma.to_string(),
        expected_order: unitary_group_order(m, r),
        filtered_count: group.len() as u128,
        elements: enumerate.then(|| group.iter().map(|u| u.to_json()).collect()),
    };
    let mut text = format!(
        "U({m}, F_1^{l}) under {}: {} of {} monomial matrices (expected (r+2)^m m! = {})\n",
        report.sigma,
        report.filtered_count,
        gl_order(m, l),
        report.expected_order
    );
    if enumerate {
        for u in &group {
            text.push('\n');
            text.push_str(&u.to_text());
        }
    }
    let status = Status::unless(report.filtered_count != report.expected_order);
    Output::new(status, &report, text)
}

#[derive(Serialize)]
struct ObservableReport {
    m: usize,
    l: u32,
    sigma: String,
    gl_order: u128,
    count: usize,
    square_to_identity: usize,
    elements: Vec<MatrixJson>,
}

pub fn observables(m: usize, l: u32, r: Option<u32>, budget: Budget) -> Result<Output> {
    let sigma = sigma_for(l, r)?;
    let found = operators::observables(m, l, sigma, budget)?;
    let mut involutive = 0;
    for h in &found {
        involutive += h.compose(h)?.is_identity() as usize;
    }
    let report = ObservableReport {
        m,
        l,
        sigma: sigma.to_string(),
        gl_order: gl_order(m, l),
        count: found.len(),
        square_to_identity: involutive,
        elements: found.iter().map(|h| h.to_json()).collect(),
    };
    let text = format!(
        "observables in GL({m}, F_1^{l}) under {}: {} of {}; {} satisfy H^2 = id\n",
        report.sigma, report.count, report.gl_order, report.square_to_identity
    );
    // Over F_{1^2} with the identity every observable is an involution.
    let bad = l == 2 && sigma == Conjugation::Identity && involutive != found.len();
    Output::new(Status::unless(bad), &report, text)
}

#[derive(Serialize)]
struct WitnessJson {
    unitary: MatrixJson,
    blank: String,
}

#[derive(Serialize)]
struct NocloneReport {
    m: usize,
    l: u32,
    sigma: String,
    scope: CloneScope,
    unitaries_checked: usize,
    blanks_checked: usize,
    search_space: u128,
    targets: usize,
    cloner_found: bool,
    witness: Option<WitnessJson>,
}

pub fn noclone(m: usize, l: u32, scope: CloneScope, r: Option<u32>, budget: Budget) -> Result<Output> {
    let sigma = sigma_for(l, r)?;
    let search = search_projective_cloner(m, l, sigma, scope, budget)?;
    let report = NocloneReport {
        m,
        l,
        sigma: sigma.to_string(),
        scope,
        unitaries_checked: search.unitaries_checked,
        blanks_checked: search.blanks_checked,
        search_space: search.unitaries_checked as u128 * search.blanks_checked as u128,
        targets: search.targets,
        cloner_found: search.witness.is_some(),
        witness: search.witness.as_ref().map(|w| WitnessJson {
            unitary: w.unitary.to_json(),
            blank: w.blank.to_string(),
        }),
    };
    let which = match scope {
        CloneScope::AllRays => "rays",
        CloneScope::SimpleRays => "simple rays",
    };
    let mut text = format!(
        "searched {} unitaries x {} blanks against {} {which}\n",
        report.unitaries_checked, report.blanks_checked, report.targets
    );
    match &search.witness {
        None => text.push_str("no cloner\n"),
        Some(w) => {
            writeln!(text, "cloner found with blank {}", w.blank).ok();
            text.push_str(&w.unitary.to_text());
        }
    }
    // A universal cloner would contradict the support-size argument.
    let bad = scope == CloneScope::AllRays && l >= 2 && m >= 2 && report.cloner_found;
    Output::new(Status::unless(bad), &report, text)
}

fn blank(m: usize, l: u32) -> Result<StateVector> {
    StateVector::simple(m, l, 0)
}

#[derive(Serialize)]
struct DeleteBuild {
    m: usize,
    l: u32,
    blank: String,
    almost_unitary: bool,
    operator: MatrixJson,
}

pub fn delete_build(m: usize, l: u32) -> Result<Output> {
    let u = build_deletion_operator(m, l)?;
    let report = DeleteBuild {
        m,
        l,
        blank: blank(m, l)?.to_string(),
        almost_unitary: is_almost_unitary(&u, Conjugation::Identity)?,
        operator: u.to_json(),
    };
    let text = format!("# blank {}\n{}", report.blank, u.to_text());
    Output::new(Status::unless(!report.almost_unitary), &report, text)
}

#[derive(Serialize)]
struct DeleteVerify {
    m: usize,
    l: u32,
    blank: String,
    rays: usize,
    deleted: usize,
    annihilated: usize,
    failed: usize,
    probability: Fraction,
    formula_agrees: bool,
    limits: Limits,
}

pub fn delete_verify(m: usize, l: u32) -> Result<Output> {
    let report = verify_deletion(m, l)?;
    let formula = probability_a1(m as u32, l)?;
    let out = DeleteVerify {
        m,
        l,
        blank: report.blank.to_string(),
        rays: report.deleted + report.annihilated + report.failed,
        deleted: report.deleted,
        annihilated: report.annihilated,
        failed: report.failed,
        formula_agrees: report.probability.0 == formula,
        probability: report.probability,
        limits: report.limits,
    };
    let text = format!(
        "{} rays: {} deleted, {} annihilated, {} failed\nprobability {} (formula {})\n",
        out.rays,
        out.deleted,
        out.annihilated,
        out.failed,
        out.probability,
        if out.formula_agrees { "agrees" } else { "disagrees" }
    );
    Output::new(Status::unless(out.failed > 0 || !out.formula_agrees), &out, text)
}

#[derive(Serialize)]
struct DeleteProb {
    probability: Fraction,
    m: usize,
    l: u32,
    approx: f64,
    limits: Limits,
}

pub fn delete_prob(m: usize, l: u32) -> Result<Output> {
    let m32 = u32::try_from(m).map_err(|_| Error::InvalidArgument(format!("m = {m} is too large")))?;
    let probability = Fraction(probability_a1(m32, l)?);
    let out = DeleteProb {
        approx: probability.approx(),
        probability,
        m,
        l,
        limits: Limits::new(l),
    };
    let text = format!(
        "P = {} ~ {:.9}\nm -> inf: {}\nl -> inf: {}\n",
        out.probability, out.approx, out.limits.m_inf, out.limits.l_inf
    );
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["m", "l", "num", "den", "approx"])
        .and_then(|_| {
            w.write_record([
                m.to_string(),
                l.to_string(),
                out.probability.numer().to_string(),
                out.probability.denom().to_string(),
                out.approx.to_string(),
            ])
        })
        .map_err(|e| Error::Invariant(format!("csv: {e}")))?;
    let csv = w
        .into_inner()
        .map_err(|e| Error::Invariant(format!("csv: {e}")))
        .and_then(|b| String::from_utf8(b).map_err(|e| Error::Invariant(e.to_string())))?;
    Ok(Output::new(Status::Ok, &out, text)?.with_csv(csv))
}

pub fn dictionary(q: u32) -> Result<Output> {
    let table = dictionary_table(q)?;
    let mut text = table.to_markdown();
    writeln!(
        text,
        "\nq = {q}, r = {}, F_{} = F_{q}[x]/({}); checks {}",
        table.r,
        q * q,
        table.modulus,
        if table.checks.all() { "pass" } else { "FAIL" }
    )
    .ok();
    let csv = table.to_csv();
    Ok(Output::new(Status::unless(!table.checks.all()), &table, text)?.with_csv(csv))
}

#[derive(Serialize)]
struct SelftestRow {
    id: u8,
    title: &'static str,
    passed: bool,
    limit_ms: u64,
    detail: String,
}

pub fn selftest() -> Result<Output> {
    let reports = selftest::run_all();
    let rows: Vec<SelftestRow> = reports
        .iter()
        .map(|r| SelftestRow {
            id: r.id,
            title: r.title,
            passed: r.passed,
            limit_ms: r.limit_ms,
            detail: r.detail.clone(),
        })
        .collect();
    let mut text = String::new();
    for r in &reports {
        writeln!(
            text,
            "{} {}. {} ({} ms / {} ms): {}",
            if r.passed && r.within_limit() { "PASS" } else { "FAIL" },
            r.id,
            r.title,
            r.elapsed_ms,
            r.limit_ms,
            r.detail
        )
        .ok();
    }
    let bad = rows.iter().any(|r| !r.passed);
    Output::new(Status::unless(bad), &rows, text)
}
