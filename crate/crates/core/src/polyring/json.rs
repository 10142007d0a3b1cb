//! JSON form of a polynomial:
//! `{"vars": [...], "terms": [{"exps": [...], "num": "..", "den": ".."}]}`,
//! terms in descending graded-lex order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::poly::MultiPoly;
use super::rational::BigRat;
use super::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&MultiPoly> for PolyJson {
    fn from(p: &MultiPoly) -> Self {
        PolyJson {
            vars: p.vars().to_vec(),
            terms: p
                .terms_desc()
                .map(|(e, c)| TermJson {
                    exps: e.to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for MultiPoly {
    type Error = PolyError;
    fn try_from(j: &PolyJson) -> Result<Self, Self::Error> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exps.len() != j.vars.len() {
                return Err(PolyError::Json(format!(
                    "exponent vector of length {} for {} variables",
                    t.exps.len(),
                    j.vars.len()
                )));
            }
            let num: BigInt = t.num.parse().map_err(|_| PolyError::Json(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t.den.parse().map_err(|_| PolyError::Json(format!("bad denominator {:?}", t.den)))?;
            if den == BigInt::from(0) {
                return Err(PolyError::Json("zero denominator".into()));
            }
            terms.push((t.exps.clone(), BigRat::new(num, den)));
        }
        Ok(MultiPoly::from_terms(j.vars.clone(), terms))
    }
}

pub fn to_json(p: &MultiPoly) -> serde_json::Value {
    serde_json::to_value(PolyJson::from(p)).expect("polynomial JSON is always serializable")
}

pub fn from_json(value: &serde_json::Value) -> Result<MultiPoly, PolyError> {
    let j: PolyJson = serde_json::from_value(value.clone()).map_err(|e| PolyError::Json(e.to_string()))?;
    MultiPoly::try_from(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::text::poly;

    #[test]
    fn json_round_trip() {
        let p = poly("Y^4 - 4*Delta*Y - 12*a*Delta + 3/7");
        let j = to_json(&p);
        assert_eq!(j["vars"], serde_json::json!(["Delta", "Y", "a"]));
        assert_eq!(j["terms"][0]["exps"], serde_json::json!([0, 4, 0]));
        assert_eq!(j["terms"][3]["den"], "7");
        assert_eq!(from_json(&j).unwrap(), p);
    }

    #[test]
    fn json_rejects_bad_shapes() {
        let bad = serde_json::json!({"vars": ["x"], "terms": [{"exps": [1, 2], "num": "1", "den": "1"}]});
        assert!(matches!(from_json(&bad), Err(PolyError::Json(_))));
        let bad = serde_json::json!({"vars": ["x"], "terms": [{"exps": [1], "num": "1", "den": "0"}]});
        assert!(matches!(from_json(&bad), Err(PolyError::Json(_))));
    }
}
