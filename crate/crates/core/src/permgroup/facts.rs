//! Structural facts about the three resolvent settings, checked by
//! enumeration.

use serde::Serialize;

use crate::polyring::{poly, MultiPoly};

use super::action::{orbit_sum, stabilizer_of_poly};
use super::catalog::{adelmann, deg4_invariants, holq8, holq8_p3, warmup, warmup_invariant, ResolventSetting};
use super::quotient::CayleyTable;
use super::{GroupError, PermGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Which {
    Warmup,
    Adelmann,
    Holq8,
}

impl std::str::FromStr for Which {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "warmup" => Ok(Which::Warmup),
            "adelmann" => Ok(Which::Adelmann),
            "holq8" => Ok(Which::Holq8),
            _ => Err(format!("unknown setting `{s}` (expected warmup, adelmann or holq8)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SettingFacts {
    pub label: String,
    pub g_order: usize,
    pub h_order: usize,
    pub h_normal: bool,
    pub h_abelian: bool,
    pub h_involutions: usize,
    pub h_elementary_abelian: bool,
    pub f_order: usize,
    pub index: usize,
    /// Name of the symmetric group `G/H` is isomorphic to, if any.
    pub quotient: Option<String>,
    /// Images of the elements of `G/H` (coset order) in `S_n` (element order).
    pub quotient_isomorphism: Option<Vec<usize>>,
    pub invariant: String,
    pub stabilizer_is_f: bool,
    pub transversal_valid: bool,
}

fn facts_of(label: &str, s: &ResolventSetting, invariant: &MultiPoly) -> Result<SettingFacts, GroupError> {
    let h_normal = s.g.is_normal(&s.h)?;
    let (quotient, quotient_isomorphism) = if h_normal {
        let q = CayleyTable::quotient(&s.g, &s.h)?;
        [3usize, 4]
            .into_iter()
            .find_map(|n| {
                let sym = CayleyTable::of_group(&PermGroup::symmetric(n));
                q.isomorphism_to(&sym).map(|m| (Some(format!("S{n}")), Some(m)))
            })
            .unwrap_or((None, None))
    } else {
        (None, None)
    };
    let stab = stabilizer_of_poly(&s.g, invariant)?;
    Ok(SettingFacts {
        label: label.to_string(),
        g_order: s.g.order(),
        h_order: s.h.order(),
        h_normal,
        h_abelian: s.h.is_abelian(),
        h_involutions: s.h.involution_count(),
        h_elementary_abelian: s.h.is_elementary_abelian_2(),
        f_order: s.f.order(),
        index: s.g.order() / s.f.order(),
        quotient,
        quotient_isomorphism,
        invariant: invariant.to_string(),
        stabilizer_is_f: stab.same_elements(&s.f),
        transversal_valid: s.g.is_left_transversal(&s.f, &s.reps),
    })
}

/// Facts for each `(G, H, F, P)` of a setting; three entries for `Hol(Q8)`.
pub fn group_facts(which: Which) -> Result<Vec<SettingFacts>, GroupError> {
    match which {
        Which::Warmup => Ok(vec![facts_of("S4 / V4", &warmup(), &warmup_invariant())?]),
        Which::Adelmann => {
            let s = adelmann();
            let p = orbit_sum(&s.f, &poly("x1*x2"))?.plain;
            Ok(vec![facts_of("PGL2(Z/4Z) on six points", &s, &p)?])
        }
        Which::Holq8 => {
            let [p1, p2] = deg4_invariants();
            let ps = [p1, p2, holq8_p3()];
            holq8()
                .iter()
                .zip(&ps)
                .enumerate()
                .map(|(i, (s, p))| facts_of(&format!("Hol(Q8), H{}", i + 1), s, p))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn warmup_facts() {
        let f = &group_facts(Which::Warmup).unwrap()[0];
        assert_eq!((f.g_order, f.h_order, f.f_order, f.index), (24, 4, 8, 3));
        assert!(f.h_normal && f.stabilizer_is_f && f.transversal_valid);
        assert_eq!(f.quotient.as_deref(), Some("S3"));
        assert_eq!("holq8".parse::<Which>(), Ok(Which::Holq8));
        assert!("x".parse::<Which>().is_err());
    }
}
