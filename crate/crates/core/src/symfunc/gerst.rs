//! The Gerst series `Com o Sigma_t Lie`, its calibration against the
//! Orlik-Solomon oracle, and the `d/dp_1` identities it satisfies.

use num_traits::{One, Zero};
use serde::Serialize;

use super::{characteristic, chi_r_type_a, class_function, com, sigma_t_lie, SymFunc, Twist};
use crate::arith::{format_rational, int, partitions_of, Partition, Rational, UniPoly};
use crate::characters::{generate_group, os_graded_character, AmbientCoords};
use crate::error::{CoxError, Result};
use crate::root_system::RootSystem;

pub const DEFAULT_MAX_DEGREE: u32 = 7;
pub const CALIBRATION_DEGREE: u32 = 4;

#[derive(Clone, Debug)]
pub struct SeriesBundle {
    pub twist: Twist,
    pub max_degree: u32,
    pub com: SymFunc,
    pub sigma_t_lie: SymFunc,
    pub gerst: SymFunc,
}

impl SeriesBundle {
    pub fn new(twist: Twist, max_degree: u32) -> Result<Self> {
        let com = com(max_degree);
        let sigma_t_lie = sigma_t_lie(twist, max_degree);
        let gerst = com.plethysm(&sigma_t_lie)?;
        Ok(Self {
            twist,
            max_degree,
            com,
            sigma_t_lie,
            gerst,
        })
    }

    /// Class function of the degree-`n` component of Gerst.
    pub fn gerst_class_function(&self, n: u32) -> Vec<(Partition, UniPoly)> {
        class_function(&self.gerst, n)
    }
}

/// Graded OS character of the braid arrangement in `C^n`, indexed by cycle type.
pub fn oracle_class_function(n: u32) -> Result<Vec<(Partition, UniPoly)>> {
    if n == 1 {
        return Ok(vec![(Partition::new(vec![1]), UniPoly::one())]);
    }
    let rs = RootSystem::build(&format!("A{}", n - 1))?;
    let group = generate_group(&rs)?;
    let gc = os_graded_character(&rs, &group)?;
    let coords = AmbientCoords::new(&rs).ok_or_else(|| CoxError::UnsupportedType(rs.label()))?;
    let mut out: Vec<(Partition, UniPoly)> = group
        .classes
        .classes
        .iter()
        .zip(&gc.values)
        .map(|(class, chi)| (coords.cycle_type(&class.representative), chi.clone()))
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct CalibrationStep {
    pub n: u32,
    pub literal_matches: bool,
    pub omega_matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Calibration {
    pub twist: Twist,
    pub steps: Vec<CalibrationStep>,
}

/// Compares both sign conventions with the oracle for `n <= max_n` and keeps
/// the one that agrees in every degree.
pub fn calibrate_sigma_t_lie(max_n: u32) -> Result<Calibration> {
    let literal = SeriesBundle::new(Twist::Literal, max_n)?;
    let omega = SeriesBundle::new(Twist::Omega, max_n)?;
    let mut literal_ok = true;
    let mut omega_ok = true;
    let mut steps = Vec::new();
    for n in 1..=max_n {
        let oracle = characteristic(&oracle_class_function(n)?, max_n);
        let l = literal.gerst.component(n) == oracle;
        let o = omega.gerst.component(n) == oracle;
        literal_ok &= l;
        omega_ok &= o;
        steps.push(CalibrationStep {
            n,
            literal_matches: l,
            omega_matches: o,
        });
        if !literal_ok && !omega_ok {
            return Err(CoxError::NeitherMatches(n as usize));
        }
    }
    let twist = if literal_ok { Twist::Literal } else { Twist::Omega };
    Ok(Calibration { twist, steps })
}

/// Calibrates, then builds the bundle to degree `max_degree + 2` so that
/// second derivatives are exact through `max_degree`.
pub fn calibrated_bundle(max_degree: u32) -> Result<(Calibration, SeriesBundle)> {
    let calibration = calibrate_sigma_t_lie(CALIBRATION_DEGREE)?;
    let bundle = SeriesBundle::new(calibration.twist, max_degree + 2)?;
    Ok((calibration, bundle))
}

fn first_difference(lhs: &SymFunc, rhs: &SymFunc) -> Option<String> {
    let diff = lhs - rhs;
    let first = diff.terms().next().map(|(lambda, c)| {
        let k = (0..c.coeffs().len()).find(|&k| !c.coeff(k).is_zero()).unwrap_or(0);
        format!(
            "p{lambda} t^{k}: lhs {}, rhs {}",
            format_rational(&lhs.coeff(lambda).coeff(k)),
            format_rational(&rhs.coeff(lambda).coeff(k))
        )
    });
    first
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub max_degree: u32,
    pub twist: Twist,
    pub terms_compared: usize,
}

fn p1_times_t(max_degree: u32) -> SymFunc {
    SymFunc::term(Partition::new(vec![1]), UniPoly::monomial(int(1), 1), max_degree)
}

/// `d/dp_1 Com = 1 + Com`.
pub fn verify_com_derivative(bundle: &SeriesBundle, max_degree: u32) -> Result<IdentityReport> {
    let lhs = bundle.com.dp1().with_max_degree(max_degree);
    let rhs = &SymFunc::one(max_degree) + &bundle.com.with_max_degree(max_degree);
    compare("d/dp1 Com = 1 + Com", bundle, max_degree, &lhs, &rhs)
}

/// `d/dp_1 Sigma_t Lie = 1 / (1 + p_1 t)`.
pub fn verify_lie_derivative(bundle: &SeriesBundle, max_degree: u32) -> Result<IdentityReport> {
    let lhs = bundle.sigma_t_lie.dp1().with_max_degree(max_degree);
    let rhs = p1_times_t(max_degree).one_plus_inverse()?;
    compare("d/dp1 Sigma_t Lie = 1/(1 + p1 t)", bundle, max_degree, &lhs, &rhs)
}

/// `d^2/dp_1^2 Gerst = (1 - t) (1 + p_1 t)^{-2} (1 + Com) o Sigma_t Lie`.
pub fn verify_second_derivative_identity(bundle: &SeriesBundle, max_degree: u32) -> Result<IdentityReport> {
    if bundle.max_degree < max_degree + 2 {
        return Err(CoxError::InvariantBroken(format!(
            "bundle truncated at {} cannot check degree {max_degree}",
            bundle.max_degree
        )));
    }
    let lhs = bundle.gerst.dp1().dp1().with_max_degree(max_degree);
    let one_plus_com = &SymFunc::one(max_degree) + &bundle.com.with_max_degree(max_degree);
    let composed = one_plus_com.plethysm(&bundle.sigma_t_lie.with_max_degree(max_degree))?;
    let inv = p1_times_t(max_degree).one_plus_inverse()?;
    let rhs = (&(&inv * &inv) * &composed).scale(&UniPoly::one_minus_t());
    compare(
        "d2/dp1^2 Gerst = (1 - t)(1 + p1 t)^-2 (1 + Com) o Sigma_t Lie",
        bundle,
        max_degree,
        &lhs,
        &rhs,
    )
}

fn compare(
    identity: &str,
    bundle: &SeriesBundle,
    max_degree: u32,
    lhs: &SymFunc,
    rhs: &SymFunc,
) -> Result<IdentityReport> {
    if let Some(w) = first_difference(lhs, rhs) {
        return Err(CoxError::IdentityFails {
            witness: format!("{identity}: {w}"),
        });
    }
    Ok(IdentityReport {
        identity: identity.to_string(),
        max_degree,
        twist: bundle.twist,
        terms_compared: lhs.terms().count(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeAProducts {
    pub n: u32,
    /// `(cycle type, chi_R * chi_G')` per class.
    pub products: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BonzeroReport {
    pub max_degree: u32,
    pub twist: Twist,
    /// Coefficients of `p_1^k` in `(1 - t)^{-1} d^2/dp_1^2 Gerst` at `t = 1`.
    pub p1_coefficients: Vec<String>,
    pub gerst_at_one_is_p1: bool,
    pub type_a: Vec<TypeAProducts>,
}

/// `(1 - t)^{-1} d^2/dp_1^2 Gerst` at `t = 1` equals `1 / (1 + p_1)`; as a
/// consequence `chi_R chi_G'` is supported on the identity for `S_n`, `n <= N`.
pub fn verify_bonzero(bundle: &SeriesBundle, max_degree: u32) -> Result<BonzeroReport> {
    if bundle.max_degree < max_degree + 2 {
        return Err(CoxError::InvariantBroken(format!(
            "bundle truncated at {} cannot check degree {max_degree}",
            bundle.max_degree
        )));
    }
    let fail = |witness: String| CoxError::LemmaViolation {
        clause: "bonzero".into(),
        witness,
    };
    let one = Rational::one();
    let p1 = SymFunc::p(1, bundle.max_degree);
    let at_one = bundle.gerst.eval_t(&one);
    if let Some(w) = first_difference(&at_one, &p1) {
        return Err(fail(format!("Gerst at t = 1 differs from p1: {w}")));
    }

    let d2 = bundle.gerst.dp1().dp1().with_max_degree(max_degree);
    let value = d2.divide_one_minus_t()?.eval_t(&one);
    let expected = SymFunc::p(1, max_degree).one_plus_inverse()?;
    if let Some(w) = first_difference(&value, &expected) {
        return Err(fail(w));
    }
    let p1_coefficients = (0..=max_degree)
        .map(|k| format_rational(&value.coeff(&Partition::new(vec![1; k as usize])).coeff(0)))
        .collect();

    let mut type_a = Vec::new();
    for n in 2..=max_degree {
        let g_prime = bundle.gerst.component(n).divide_one_minus_t()?.eval_t(&one);
        let mut products = Vec::new();
        for lambda in partitions_of(n) {
            let chi = g_prime.coeff(&lambda).coeff(0) * Rational::from_integer(lambda.z());
            let product = int(chi_r_type_a(&lambda)) * chi;
            let identity = lambda.ones() == n;
            let expected = if identity {
                let order: i64 = (1..=n as i64).product();
                int(if n % 2 == 0 { order } else { -order })
            } else {
                Rational::zero()
            };
            if product != expected {
                return Err(fail(format!(
                    "S_{n} class {lambda}: chi_R chi_G' = {}, expected {}",
                    format_rational(&product),
                    format_rational(&expected)
                )));
            }
            products.push((lambda.to_string(), format_rational(&product)));
        }
        type_a.push(TypeAProducts { n, products });
    }

    Ok(BonzeroReport {
        max_degree,
        twist: bundle.twist,
        p1_coefficients,
        gerst_at_one_is_p1: true,
        type_a,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeClassFunction {
    pub n: u32,
    /// `(cycle type, chi(t))` with `chi` in `UniPoly` JSON form.
    pub classes: Vec<(String, crate::arith::unipoly::UniPolyJson)>,
}

/// Per-degree class functions of Gerst, `1 <= n <= max_degree`.
pub fn gerst_class_functions(bundle: &SeriesBundle, max_degree: u32) -> Vec<DegreeClassFunction> {
    (1..=max_degree.min(bundle.max_degree))
        .map(|n| DegreeClassFunction {
            n,
            classes: bundle
                .gerst_class_function(n)
                .into_iter()
                .map(|(lambda, chi)| (lambda.to_string(), chi.to_json()))
                .collect(),
        })
        .collect()
}
