use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Rat, SignedPerm, Vec3};
use crate::group::{build_group, FamilyId};

use super::regularity::regularity_witness;

#[derive(Clone, Debug, Serialize)]
pub struct NamedRegularReport {
    pub case: FamilyId,
    pub a: Rat,
    pub name: String,
    pub twist_translation: Vec3,
    pub expected_twist: Vec3,
    pub witness: Option<SignedPerm>,
    pub expected_witness: SignedPerm,
    /// Period of `S₁²S₂²`.
    pub petrie_period: Option<usize>,
    pub expected_period: Option<usize>,
    pub passed: bool,
}

/// Checks a twist-generated regular polyhedron: `S₁` raised to the order of
/// its linear part is the expected translation, the witness search returns
/// the expected reflection, and `S₁²S₂²` has the expected period.
pub fn verify_named_regular(case: FamilyId, a: &Rat) -> Result<NamedRegularReport> {
    let (twist, witness, period, name) = match case {
        FamilyId::TWI_33STAR => ((-1, -1, 1), [3, 2, 1], Some(2), "{∞,6}_{4,4}"),
        FamilyId::TWI_34 => ((-4, 0, 0), [2, 1, 3], Some(3), "{∞,6}_{6,3}"),
        FamilyId::TWI_33 => ((-2, -2, -2), [1, 2, -3], None, "{∞,4}_{6,4}"),
        f => {
            return Err(Error::UnsupportedSource {
                op: "named-regular".into(),
                family: f.to_string(),
            })
        }
    };
    let g = build_group(case, (a.clone(), Rat::zero()))?;
    let p = g.s1.linear.order();
    let s1p = g.s1.pow(p as i64);
    let expected_twist = Vec3::ints(twist.0, twist.1, twist.2).scale(a);
    let petrie = g.s1.pow(2).then(&g.s2.pow(2));
    let petrie_period = petrie.period(24);
    let found = regularity_witness(&g).map(|r| r.linear);
    let expected_witness = SignedPerm::from_images(witness);
    let passed = s1p.is_translation()
        && !s1p.trans.is_zero()
        && s1p.trans == expected_twist
        && found == Some(expected_witness)
        && petrie_period.is_some()
        && (period.is_none() || petrie_period == period);
    Ok(NamedRegularReport {
        case,
        a: a.clone(),
        name: name.into(),
        twist_translation: s1p.trans,
        expected_twist,
        witness: found,
        expected_witness,
        petrie_period,
        expected_period: period,
        passed,
    })
}
