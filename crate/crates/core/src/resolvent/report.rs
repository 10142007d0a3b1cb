//! Result record of one resolvent pipeline run.

use serde::Serialize;
use serde_json::{json, Value};

use crate::permgroup::catalog::ResolventSetting;
use crate::polyring::MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Symmetric,
    InvariantTable,
    SignSpecialize,
    SemiInvariant,
    Ansatz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Equal to the reference polynomial as written.
    ExactMatch,
    /// Equal to the reference polynomial modulo the curve relation.
    CurveMatch,
    /// Confirmed by the numeric oracle only.
    OracleConfirmed,
    /// Computed without a reference to compare against.
    Unchecked,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupLabels {
    pub g_order: usize,
    pub h_order: usize,
    pub f_order: usize,
    pub representatives: Vec<String>,
}

impl GroupLabels {
    pub fn of(setting: &ResolventSetting) -> Self {
        GroupLabels {
            g_order: setting.g.order(),
            h_order: setting.h.order(),
            f_order: setting.f.order(),
            representatives: setting.reps.iter().map(|p| p.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventReport {
    pub name: String,
    pub group: GroupLabels,
    pub invariant: MultiPoly,
    pub conjugates: Vec<MultiPoly>,
    /// Monic in `variable`.
    pub resolvent: MultiPoly,
    pub variable: String,
    /// Engine used for the coefficient of `variable^k`, ascending `k`.
    pub engines: Vec<Engine>,
    pub status: Status,
    pub notes: Vec<String>,
}

impl ResolventReport {
    pub fn degree(&self) -> u32 {
        self.resolvent.degree_in(&self.variable)
    }

    pub fn is_monic(&self) -> bool {
        let cs = self.resolvent.coefficients_in(&self.variable);
        cs.last().is_some_and(|c| *c == MultiPoly::one())
    }

    /// Resolvent written as a sum over powers of the main variable.
    pub fn display(&self) -> String {
        format_collected(&self.resolvent, &self.variable)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "group": self.group,
            "invariant": self.invariant.to_string(),
            "conjugates": self.conjugates.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "variable": self.variable,
            "resolvent": self.resolvent.to_string(),
            "engines": self.engines,
            "status": self.status,
            "notes": self.notes,
        })
    }
}

/// `var^n + (c)*var^(n-1) + ...`, descending powers, each coefficient in
/// canonical form; parses back to the same polynomial.
pub fn format_collected(p: &MultiPoly, var: &str) -> String {
    let cs = p.coefficients_in(var);
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (k, c) in cs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let text = c.to_string();
        let (neg, body) = if c.num_terms() == 1 {
            match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text.clone()),
            }
        } else {
            (false, format!("({text})"))
        };
        let term = if power.is_empty() {
            body
        } else if body == "1" {
            power
        } else {
            format!("{body}*{power}")
        };
        parts.push((neg, term));
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, t)) in parts.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(t);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly;

    #[test]
    fn collected_form() {
        let g = poly("x^3 - a2*x^2 + (a1*a3 - 4*a0)*x - a1^2 + 4*a0*a2 - a0*a3^2");
        let s = format_collected(&g, "x");
        assert_eq!(s, "x^3 - a2*x^2 + (a1*a3 - 4*a0)*x + (-a0*a3^2 + 4*a0*a2 - a1^2)");
        assert_eq!(poly(&s), g);
        assert_eq!(format_collected(&poly("x^3 - 4*x"), "x"), "x^3 - 4*x");
        assert_eq!(format_collected(&poly("0"), "x"), "0");
    }
}
