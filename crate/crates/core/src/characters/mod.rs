//! Reflection groups as root permutations, their conjugacy classes, and the
//! graded character of the Orlik-Solomon algebra.

mod group;
pub mod os;

pub use group::*;
pub use os::{hyperplane_permutation, HyperplaneMatroid, OsAlgebra};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{format_rational, int, Partition, Rational, UniPoly};
use crate::error::{CoxError, Result};
use crate::root_system::{Family, RootSystem};

pub const MAX_OS_HYPERPLANES: usize = 16;
pub const MAX_OS_TOTAL_DIM: u64 = 2_000;

/// Per-class graded character `sum_k tr(g | OS_k) (-t)^k`.
#[derive(Clone, Debug)]
pub struct GradedCharacter {
    pub type_label: String,
    pub labels: Vec<String>,
    pub sizes: Vec<u64>,
    pub values: Vec<UniPoly>,
    pub dims: Vec<usize>,
}

impl GradedCharacter {
    pub fn value(&self, class: usize) -> &UniPoly {
        &self.values[class]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `chi(g) / (1 - t)`; fails if some class is not divisible.
    pub fn quotient(&self, class: usize) -> Result<UniPoly> {
        self.values[class].divide_exact(&UniPoly::one_minus_t())
    }

    /// Trace on degree `k` of the `(1-t)`-quotient module.
    pub fn quotient_trace(&self, class: usize, k: usize) -> Result<Rational> {
        let q = self.quotient(class)?;
        let c = q.coeff(k);
        Ok(if k.is_multiple_of(2) { c } else { -c })
    }
}

pub fn check_os_capacity(rs: &RootSystem) -> Result<()> {
    let total: u64 = rs.exponents().iter().map(|&e| 1 + e as u64).product();
    if rs.num_positive() > MAX_OS_HYPERPLANES || total > MAX_OS_TOTAL_DIM {
        return Err(CoxError::CapacityExceeded(format!(
            "{}: {} hyperplanes, total dimension {total}",
            rs.label(),
            rs.num_positive()
        )));
    }
    Ok(())
}

pub fn os_graded_character(rs: &RootSystem, group: &CoxeterGroup) -> Result<GradedCharacter> {
    check_os_capacity(rs)?;
    let os = OsAlgebra::for_root_system(rs);
    let classes = &group.classes.classes;
    let values = classes
        .iter()
        .map(|class| {
            let perm = hyperplane_permutation(rs, &class.representative);
            let coeffs: Vec<Rational> = (0..=os.top_degree())
                .map(|k| {
                    let tr = os.trace(&perm, k);
                    int(if k % 2 == 0 { tr } else { -tr })
                })
                .collect();
            UniPoly::new(coeffs)
        })
        .collect();
    Ok(GradedCharacter {
        type_label: rs.label(),
        labels: classes.iter().map(|c| c.label.clone()).collect(),
        sizes: classes.iter().map(|c| c.size).collect(),
        values,
        dims: os.dims(),
    })
}

/// Value of `chi / (1-t)` at `t = 1`, class by class.
pub fn g_prime_character(gc: &GradedCharacter) -> Result<Vec<Rational>> {
    (0..gc.len())
        .map(|c| Ok(gc.quotient(c)?.eval(&Rational::one())))
        .collect()
}

/// `prod (1 - t e_i)`.
pub fn identity_character(exponents: &[u32]) -> UniPoly {
    exponents
        .iter()
        .fold(UniPoly::one(), |acc, &e| &acc * &UniPoly::from_ints(&[1, -(e as i64)]))
}

/// Everything the `os-character` command prints.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: CoxeterGroup,
    pub chi_r: Vec<i64>,
    pub graded: GradedCharacter,
    pub g_prime: Vec<Rational>,
}

pub fn character_table(rs: &RootSystem) -> Result<CharacterTable> {
    check_os_capacity(rs)?;
    let group = generate_group(rs)?;
    let graded = os_graded_character(rs, &group)?;
    let g_prime = g_prime_character(&graded)?;
    Ok(CharacterTable {
        chi_r: chi_r_by_class(&group),
        group,
        graded,
        g_prime,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub label: String,
    pub size: u64,
    pub chi_r: i64,
    pub chi_g_prime: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MainConjectureReport {
    pub type_label: String,
    pub full_reflections: u64,
    pub group_order: usize,
    pub rows: Vec<ClassRow>,
}

/// `chi_R * chi_G' = (-1)^(n-1) f_W chi_Reg` on every class.
pub fn verify_main_conjecture(rs: &RootSystem) -> Result<MainConjectureReport> {
    let table = character_table(rs)?;
    let f_w = rs.full_reflection_count();
    let order = table.group.order();
    let sign: i64 = if rs.rank() % 2 == 1 { 1 } else { -1 };
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for (i, class) in table.group.classes.classes.iter().enumerate() {
        let lhs = int(table.chi_r[i]) * &table.g_prime[i];
        let reg = if class.is_identity() { order as i64 } else { 0 };
        let rhs = int(sign * f_w as i64 * reg);
        if lhs != rhs {
            bad.push(format!(
                "class {} (size {}): chi_R = {}, chi_G' = {}, lhs = {}, rhs = {}",
                class.label,
                class.size,
                table.chi_r[i],
                format_rational(&table.g_prime[i]),
                format_rational(&lhs),
                format_rational(&rhs)
            ));
        }
        rows.push(ClassRow {
            label: class.label.clone(),
            size: class.size,
            chi_r: table.chi_r[i],
            chi_g_prime: format_rational(&table.g_prime[i]),
            lhs: format_rational(&lhs),
            rhs: format_rational(&rhs),
        });
    }
    if !bad.is_empty() {
        return Err(CoxError::ConjectureFails {
            witness: format!("{}: {}", rs.label(), bad.join("; ")),
        });
    }
    Ok(MainConjectureReport {
        type_label: rs.label(),
        full_reflections: f_w,
        group_order: order,
        rows,
    })
}

/// Identity-class instance: `(n h) prod_i (1 - e_i) = (-1)^(n-1) f_W |W|`,
/// with the product over all exponents but the smallest.
pub fn check_identity_class_formula(rs: &RootSystem) -> Result<(BigInt, BigInt)> {
    let mut exps = rs.exponents().to_vec();
    exps.sort_unstable();
    let n = rs.rank() as i64;
    let mut lhs = BigInt::from(n * rs.coxeter_number as i64);
    for &e in &exps[1..] {
        lhs *= BigInt::from(1 - e as i64);
    }
    let mut rhs = BigInt::from(rs.full_reflection_count()) * BigInt::from(rs.group_order);
    if rs.rank().is_multiple_of(2) {
        rhs = -rhs;
    }
    if lhs != rhs {
        return Err(CoxError::IdentityFails {
            witness: format!("{}: nh prod(1-e_i) = {lhs}, (-1)^(n-1) f_W |W| = {rhs}", rs.label()),
        });
    }
    Ok((lhs, rhs))
}

fn require_type_b(rs: &RootSystem) -> Result<AmbientCoords> {
    if rs.kind().family != Family::B {
        return Err(CoxError::NotApplicable(format!("{} is not of type B", rs.label())));
    }
    AmbientCoords::new(rs).ok_or_else(|| CoxError::UnsupportedType(rs.label()))
}

fn has_short_positive_cycle(positive: &Partition) -> bool {
    positive.parts().iter().any(|&p| p <= 2)
}

#[derive(Clone, Debug, Serialize)]
pub struct BClassRow {
    pub label: String,
    pub positive_cycles: String,
    pub negative_cycles: String,
    pub chi_r: i64,
    pub chi_g_prime: Option<String>,
    pub one_minus_t_multiplicity: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BLemmaReport {
    pub type_label: String,
    pub rows: Vec<BClassRow>,
}

/// `chi_R(g) != 0` iff `g` has a positive cycle of length 1 or 2.
pub fn check_b_lemma(rs: &RootSystem, group: &CoxeterGroup) -> Result<BLemmaReport> {
    let coords = require_type_b(rs)?;
    let chi = chi_r_by_class(group);
    let mut rows = Vec::new();
    for (class, &value) in group.classes.classes.iter().zip(&chi) {
        let (pos, neg) = coords.signed_cycle_type(&class.representative);
        if (value != 0) != has_short_positive_cycle(&pos) {
            return Err(CoxError::LemmaViolation {
                clause: format!("{} chi_R != 0 iff positive 1- or 2-cycle", rs.label()),
                witness: format!("class {} ({pos}|{neg}): chi_R = {value}", class.label),
            });
        }
        rows.push(BClassRow {
            label: class.label.clone(),
            positive_cycles: pos.to_string(),
            negative_cycles: neg.to_string(),
            chi_r: value,
            chi_g_prime: None,
            one_minus_t_multiplicity: None,
        });
    }
    Ok(BLemmaReport {
        type_label: rs.label(),
        rows,
    })
}

/// On non-identity classes with a positive 1- or 2-cycle `chi_G'` vanishes,
/// and a positive 2-cycle forces `(1-t)^2 | chi`.
pub fn check_b_gprime_lemma(rs: &RootSystem) -> Result<BLemmaReport> {
    let coords = require_type_b(rs)?;
    let table = character_table(rs)?;
    let mut rows = Vec::new();
    for (i, class) in table.group.classes.classes.iter().enumerate() {
        let (pos, neg) = coords.signed_cycle_type(&class.representative);
        let value = &table.g_prime[i];
        let mult = table.graded.values[i].multiplicity_at_one();
        let witness = || {
            format!(
                "class {} ({pos}|{neg}): chi = {}, chi_G' = {}",
                class.label,
                table.graded.values[i],
                format_rational(value)
            )
        };
        if !class.is_identity() && has_short_positive_cycle(&pos) && !value.is_zero() {
            return Err(CoxError::LemmaViolation {
                clause: format!("{} chi_G' = 0 on classes with a positive 1- or 2-cycle", rs.label()),
                witness: witness(),
            });
        }
        if pos.parts().contains(&2) && mult.is_some_and(|m| m < 2) {
            return Err(CoxError::LemmaViolation {
                clause: format!("{} (1-t)^2 divides chi for a positive 2-cycle", rs.label()),
                witness: witness(),
            });
        }
        rows.push(BClassRow {
            label: class.label.clone(),
            positive_cycles: pos.to_string(),
            negative_cycles: neg.to_string(),
            chi_r: table.chi_r[i],
            chi_g_prime: Some(format_rational(value)),
            one_minus_t_multiplicity: mult,
        });
    }
    Ok(BLemmaReport {
        type_label: rs.label(),
        rows,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralRow {
    pub label: String,
    pub chi: String,
    pub trace_degree_0: String,
    pub trace_degree_1: String,
    pub chi_g_prime: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralReport {
    pub type_label: String,
    pub reflection_classes: Vec<DihedralRow>,
}

/// For every reflection class of `I2(m)`: traces 1 in degrees 0 and 1 of the
/// `(1-t)`-quotient, and `chi_G' = 0`.
pub fn verify_dihedral_traces(rs: &RootSystem) -> Result<DihedralReport> {
    if rs.kind().family != Family::I {
        return Err(CoxError::NotApplicable(format!("{} is not dihedral", rs.label())));
    }
    let table = character_table(rs)?;
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    let one = Rational::one();
    for (i, class) in table.group.classes.classes.iter().enumerate() {
        // reflections are exactly the length-one classes
        if class.min_length != 1 {
            continue;
        }
        let t0 = table.graded.quotient_trace(i, 0)?;
        let t1 = table.graded.quotient_trace(i, 1)?;
        let gp = table.g_prime[i].clone();
        let row = DihedralRow {
            label: class.label.clone(),
            chi: table.graded.values[i].to_string(),
            trace_degree_0: format_rational(&t0),
            trace_degree_1: format_rational(&t1),
            chi_g_prime: format_rational(&gp),
        };
        if t0 != one || t1 != one || !gp.is_zero() {
            bad.push(format!(
                "class {}: chi = {}, traces ({}, {}), chi_G' = {}",
                row.label, row.chi, row.trace_degree_0, row.trace_degree_1, row.chi_g_prime
            ));
        }
        rows.push(row);
    }
    if !bad.is_empty() {
        return Err(CoxError::IdentityFails {
            witness: format!("{}: {}", rs.label(), bad.join("; ")),
        });
    }
    Ok(DihedralReport {
        type_label: rs.label(),
        reflection_classes: rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(label: &str) -> (RootSystem, CharacterTable) {
        let rs = RootSystem::build(label).unwrap();
        let t = character_table(&rs).unwrap();
        (rs, t)
    }

    fn class_of(t: &CharacterTable, label: &str) -> usize {
        t.group.classes.classes.iter().position(|c| c.label == label).unwrap()
    }

    #[test]
    fn a1_character() {
        let (_, t) = table("A1");
        assert_eq!(t.graded.values, vec![UniPoly::from_ints(&[1, -1]); 2]);
    }

    #[test]
    fn b2_identity_character() {
        let (_, t) = table("B2");
        let id = t.group.classes.identity_class();
        assert_eq!(t.graded.values[id], UniPoly::from_ints(&[1, -4, 3]));
    }

    #[test]
    fn identity_class_is_product_formula() {
        for label in ["A2", "A3", "A4", "B3", "B4", "D4", "H3", "I2(7)"] {
            let (rs, t) = table(label);
            let id = t.group.classes.identity_class();
            assert_eq!(t.graded.values[id], identity_character(rs.exponents()), "{label}");
        }
    }

    #[test]
    fn every_class_divisible_by_one_minus_t() {
        for label in ["A3", "B3", "D4", "H3", "I2(5)", "I2(8)"] {
            let (_, t) = table(label);
            for v in &t.graded.values {
                assert!(v.multiplicity_at_one().is_none_or(|m| m >= 1), "{label}: {v}");
            }
        }
    }

    #[test]
    fn g_prime_examples() {
        let (_, t) = table("B3");
        assert_eq!(t.g_prime[t.group.classes.identity_class()], int(8));
        let (_, t) = table("A2");
        assert_eq!(t.g_prime[t.group.classes.identity_class()], int(-1));
    }

    #[test]
    fn even_dihedral_reflections() {
        let (_, t) = table("I2(6)");
        for (i, c) in t.group.classes.classes.iter().enumerate() {
            if c.min_length == 1 {
                assert_eq!(t.graded.values[i], UniPoly::from_ints(&[1, -2, 1]));
                assert!(t.g_prime[i].is_zero());
            }
        }
    }

    #[test]
    fn odd_dihedral_reflection_has_unit_g_prime() {
        let rs = RootSystem::build("I2(5)").unwrap();
        let (_, t) = table("I2(5)");
        let refl = t.group.classes.classes.iter().position(|c| c.min_length == 1).unwrap();
        assert_eq!(t.graded.values[refl], UniPoly::from_ints(&[1, -1]));
        assert_eq!(t.g_prime[refl], int(1));
        assert_eq!(t.chi_r[refl], 0);
        assert!(matches!(verify_dihedral_traces(&rs), Err(CoxError::IdentityFails { .. })));
        assert!(verify_main_conjecture(&rs).is_ok());
    }

    #[test]
    fn main_conjecture_examples() {
        for label in ["A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(6)", "I2(7)", "I2(8)"] {
            let rs = RootSystem::build(label).unwrap();
            let report = verify_main_conjecture(&rs).unwrap_or_else(|e| panic!("{label}: {e}"));
            assert!(report.rows.iter().any(|r| r.lhs != "0/1"));
        }
        let (rs, t) = table("B3");
        let id = t.group.classes.identity_class();
        assert_eq!(int(t.chi_r[id]) * &t.g_prime[id], int(144));
        assert_eq!(rs.full_reflection_count() * 48, 144);
    }

    #[test]
    fn identity_class_formula_holds() {
        for label in ["A1", "A5", "B4", "D5", "E6", "E8", "F4", "G2", "H3", "H4", "I2(9)"] {
            let rs = RootSystem::build(label).unwrap();
            check_identity_class_formula(&rs).unwrap();
        }
    }

    #[test]
    fn type_b_lemmas() {
        for label in ["B2", "B3", "B4"] {
            let rs = RootSystem::build(label).unwrap();
            let group = generate_group(&rs).unwrap();
            check_b_lemma(&rs, &group).unwrap();
            check_b_gprime_lemma(&rs).unwrap();
        }
    }

    #[test]
    fn b_lemma_rejects_other_types() {
        let rs = RootSystem::build("A3").unwrap();
        let group = generate_group(&rs).unwrap();
        assert!(matches!(check_b_lemma(&rs, &group), Err(CoxError::NotApplicable(_))));
    }

    #[test]
    fn capacity_limits() {
        for label in ["F4", "B5", "D5"] {
            let rs = RootSystem::build(label).unwrap();
            assert!(matches!(character_table(&rs), Err(CoxError::CapacityExceeded(_))), "{label}");
        }
    }

    #[test]
    fn transposition_character_in_a2() {
        let (_, t) = table("A2");
        let s = class_of(&t, "(2,1)");
        // one fixed hyperplane, and the quotient forces the top coefficient
        assert_eq!(t.graded.values[s], UniPoly::from_ints(&[1, -1]));
    }
}
