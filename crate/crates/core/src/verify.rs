//! Named checks with a uniform, serializable outcome.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{format_rational, int};
use crate::characters::{self, generate_group};
use crate::cluster;
use crate::error::{CoxError, Result};
use crate::root_poset::{self, RootPoset};
use crate::root_system::{tabulated_full_reflections, Family, RootSystem};
use crate::symfunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Formula,
    AntichainLemmas,
    PMobius,
    Hf,
    Main,
    BLemmas,
    Gerst,
    Bonzero,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Formula,
        Check::AntichainLemmas,
        Check::PMobius,
        Check::Hf,
        Check::Main,
        Check::BLemmas,
        Check::Gerst,
        Check::Bonzero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Formula => "formula",
            Check::AntichainLemmas => "antichain-lemmas",
            Check::PMobius => "p-mobius",
            Check::Hf => "hf",
            Check::Main => "main",
            Check::BLemmas => "b-lemmas",
            Check::Gerst => "gerst",
            Check::Bonzero => "bonzero",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = CoxError;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CoxError::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check does not apply to this type or exceeds a capacity limit.
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub type_label: String,
    pub status: Status,
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub details: Value,
    pub timing_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_degree: u32,
    pub allow_large: bool,
    /// Record wall-clock time; off by default so output is reproducible.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_degree: symfunc::DEFAULT_MAX_DEGREE,
            allow_large: false,
            timing: false,
        }
    }
}

/// Errors meaning "cannot be checked here" rather than "checked and false".
pub fn is_capability_error(e: &CoxError) -> bool {
    matches!(
        e,
        CoxError::UnsupportedType(_)
            | CoxError::NotApplicable(_)
            | CoxError::UnknownCheck(_)
            | CoxError::NonCrystallographic(_)
            | CoxError::RankTooLarge { .. }
            | CoxError::GroupTooLarge { .. }
            | CoxError::CapacityExceeded(_)
    )
}

fn error_kind(e: &CoxError) -> &'static str {
    match e {
        CoxError::NotDivisible { .. } => "NotDivisible",
        CoxError::DegreeOverflow { .. } => "DegreeOverflow",
        CoxError::UnsupportedType(_) => "UnsupportedType",
        CoxError::NotApplicable(_) => "NotApplicable",
        CoxError::UnknownCheck(_) => "UnknownCheck",
        CoxError::NonCrystallographic(_) => "NonCrystallographic",
        CoxError::RankTooLarge { .. } => "RankTooLarge",
        CoxError::InvariantBroken(_) => "InvariantBroken",
        CoxError::NonTermination(_) => "NonTermination",
        CoxError::GroupTooLarge { .. } => "GroupTooLarge",
        CoxError::CapacityExceeded(_) => "CapacityExceeded",
        CoxError::ConstantTermInInner => "ConstantTermInInner",
        CoxError::NeitherMatches(_) => "NeitherMatches",
        CoxError::LemmaViolation { .. } => "LemmaViolation",
        CoxError::ConjectureFails { .. } => "ConjectureFails",
        CoxError::IdentityFails { .. } => "IdentityFails",
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn check_formula(rs: &RootSystem) -> Result<Value> {
    let counted = rs.full_reflection_count();
    let formula = rs.formula_value();
    let table = tabulated_full_reflections(rs.kind());
    if formula != int(counted as i64) || counted != table {
        return Err(CoxError::IdentityFails {
            witness: format!(
                "{}: counted {counted}, formula {}, table {table}",
                rs.label(),
                format_rational(&formula)
            ),
        });
    }
    let (lhs, rhs) = characters::check_identity_class_formula(rs)?;
    Ok(json!({
        "counted": counted,
        "formula": format_rational(&formula),
        "table": table,
        "identity_class": { "lhs": lhs.to_string(), "rhs": rhs.to_string() },
    }))
}

fn check_antichain_lemmas(rs: &RootSystem) -> Result<Value> {
    let poset = RootPoset::new(rs)?;
    let tally = poset.enumerate_antichains();
    let catalan = rs.catalan_number();
    if int(tally.total() as i64) != catalan {
        return Err(CoxError::LemmaViolation {
            clause: format!("{} antichain total = product formula", rs.label()),
            witness: format!("{} antichains, formula {}", tally.total(), format_rational(&catalan)),
        });
    }
    let report = root_poset::check_antichain_lemmas(&poset, &tally, rs.full_reflection_count())?;
    Ok(to_value(&report))
}

fn check_p_mobius(rs: &RootSystem) -> Result<Value> {
    let poset = RootPoset::new(rs)?;
    let tally = poset.enumerate_antichains();
    let direct = root_poset::p_polynomial_direct(&tally, poset.full_edge_mask());
    let mobius = root_poset::p_polynomial_mobius(&poset);
    if direct != mobius {
        let diff = &direct - &mobius;
        return Err(CoxError::IdentityFails {
            witness: format!("{}: P direct - P Mobius = {diff}", rs.label()),
        });
    }
    Ok(json!({ "p": direct.to_json(), "display": direct.to_string() }))
}

fn check_b_lemmas(rs: &RootSystem) -> Result<Value> {
    if rs.kind().family != Family::B {
        return Err(CoxError::NotApplicable(format!("{} is not of type B", rs.label())));
    }
    let group = generate_group(rs)?;
    let chi_r = characters::check_b_lemma(rs, &group)?;
    let g_prime = characters::check_b_gprime_lemma(rs)?;
    Ok(json!({ "chi_r_lemma": to_value(&chi_r), "g_prime_lemma": to_value(&g_prime) }))
}

fn check_gerst(opts: &VerifyOptions) -> Result<Value> {
    let (calibration, bundle) = symfunc::calibrated_bundle(opts.max_degree)?;
    let n = opts.max_degree;
    let com = symfunc::verify_com_derivative(&bundle, n)?;
    let lie = symfunc::verify_lie_derivative(&bundle, n)?;
    let second = symfunc::verify_second_derivative_identity(&bundle, n)?;
    Ok(json!({
        "calibration": to_value(&calibration),
        "identities": [to_value(&com), to_value(&lie), to_value(&second)],
    }))
}

fn check_bonzero(opts: &VerifyOptions) -> Result<Value> {
    let (calibration, bundle) = symfunc::calibrated_bundle(opts.max_degree)?;
    let report = symfunc::verify_bonzero(&bundle, opts.max_degree)?;
    Ok(json!({ "calibration": to_value(&calibration), "bonzero": to_value(&report) }))
}

fn dispatch(check: Check, rs: &RootSystem, opts: &VerifyOptions) -> Result<Value> {
    match check {
        Check::Formula => check_formula(rs),
        Check::AntichainLemmas => check_antichain_lemmas(rs),
        Check::PMobius => check_p_mobius(rs),
        Check::Hf => cluster::verify_hf_conjecture(rs, opts.allow_large).map(|r| to_value(&r)),
        Check::Main => characters::verify_main_conjecture(rs).map(|r| to_value(&r)),
        Check::BLemmas => check_b_lemmas(rs),
        Check::Gerst => check_gerst(opts),
        Check::Bonzero => check_bonzero(opts),
    }
}

/// Runs one check. Capability errors surface as `Err`; a false statement
/// surfaces as a failing report carrying the witness.
pub fn run_check(check: Check, rs: &RootSystem, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let outcome = dispatch(check, rs, opts);
    let timing_ms = opts.timing.then(|| start.elapsed().as_millis() as u64);
    let (status, witnesses, details) = match outcome {
        Ok(details) => (Status::Pass, Vec::new(), details),
        Err(e) if is_capability_error(&e) => return Err(e),
        Err(e) => (
            Status::Fail,
            vec![json!({ "error": error_kind(&e), "detail": e.to_string() })],
            Value::Null,
        ),
    };
    Ok(VerificationReport {
        check: check.name().to_string(),
        type_label: rs.label(),
        status,
        witnesses,
        reason: None,
        details,
        timing_ms,
    })
}

/// Runs every check in order; checks that cannot run on this type are
/// reported as skipped with the reason.
pub fn run_all(rs: &RootSystem, opts: &VerifyOptions) -> Vec<VerificationReport> {
    Check::ALL
        .into_iter()
        .map(|check| {
            run_check(check, rs, opts).unwrap_or_else(|e| VerificationReport {
                check: check.name().to_string(),
                type_label: rs.label(),
                status: Status::Skipped,
                witnesses: Vec::new(),
                reason: Some(e.to_string()),
                details: Value::Null,
                timing_ms: None,
            })
        })
        .collect()
}
