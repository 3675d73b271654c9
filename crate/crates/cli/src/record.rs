//! JSON shapes written to standard output.
//!
//! Integers are JSON numbers of arbitrary size; rationals are `"num/den"` strings.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use seshadri::scalar::fmt_ratio;
use seshadri::PiecewiseLinear;

pub fn number(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("integer literal")
}

/// `{"surface", "coeffs", "l_squared", "epsilon", "witnesses", "weak_submaximal"?}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub surface: String,
    pub coeffs: Vec<Number>,
    pub l_squared: Number,
    pub epsilon: Number,
    pub witnesses: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weak_submaximal: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvesRecord {
    pub surface: String,
    pub coeffs: Vec<Number>,
    pub l_squared: Number,
    pub weak: bool,
    pub curves: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentRecord {
    pub slope: String,
    pub intercept: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossSectionRecord {
    pub lambda: String,
    pub mu_max: String,
    pub breakpoints: Vec<String>,
    pub segments: Vec<SegmentRecord>,
}

impl From<&PiecewiseLinear> for CrossSectionRecord {
    fn from(f: &PiecewiseLinear) -> Self {
        CrossSectionRecord {
            lambda: fmt_ratio(&f.lambda),
            mu_max: fmt_ratio(&f.mu_max),
            breakpoints: f.breakpoints.iter().map(fmt_ratio).collect(),
            segments: f
                .segments
                .iter()
                .map(|s| SegmentRecord {
                    slope: fmt_ratio(&s.slope),
                    intercept: fmt_ratio(&s.intercept),
                    witness: s.witness.label(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn output_record_round_trips() {
        let rec = OutputRecord {
            surface: "nocm".into(),
            coeffs: [7, 6, -3].iter().map(|&v| number(&BigInt::from(v))).collect(),
            l_squared: number(&BigInt::from(6)),
            epsilon: number(&"123456789012345678901234567890".parse().unwrap()),
            witnesses: vec!["N_{1,1}".into()],
            weak_submaximal: Some(vec!["N_{1,1}".into()]),
        };
        let text = serde_json::to_string(&rec).unwrap();
        assert!(text.contains("\"epsilon\":123456789012345678901234567890"));
        assert_eq!(serde_json::from_str::<OutputRecord>(&text).unwrap(), rec);

        let cm = OutputRecord { weak_submaximal: None, ..rec };
        let text = serde_json::to_string(&cm).unwrap();
        assert!(!text.contains("weak_submaximal"));
        assert_eq!(serde_json::from_str::<OutputRecord>(&text).unwrap(), cm);
    }
}
