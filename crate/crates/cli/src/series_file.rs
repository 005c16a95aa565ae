//! JSON description of a weighted series:
//! `{"upper": [...], "lower": [...], "weight": [...], "scale": "..."}` with
//! rational strings throughout. `weight` (constant term first) defaults to
//! `["1"]` and `scale` to `"1"`; `normalization_exempt` allows `Q(0) ≠ 1`.

use hyperlift_core::arith::{format_rational, parse_rational, Polynomial, Rational};
use hyperlift_core::hyperseries::WeightedSeries;
use hyperlift_core::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDescription {
    pub upper: Vec<String>,
    pub lower: Vec<String>,
    #[serde(default = "unit_weight")]
    pub weight: Vec<String>,
    #[serde(default = "unit_scale")]
    pub scale: String,
    #[serde(default)]
    pub normalization_exempt: bool,
}

fn unit_weight() -> Vec<String> {
    vec!["1".into()]
}

fn unit_scale() -> String {
    "1".into()
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

impl SeriesDescription {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("series description: {e}")))
    }

    pub fn to_series(&self) -> Result<WeightedSeries<Rational>> {
        let one = Rational::from_integer(1.into());
        let weight = Polynomial::new(parse_all(&self.weight)?);
        let s = WeightedSeries::new(parse_all(&self.upper)?, parse_all(&self.lower)?, &one)
            .with_scale(parse_rational(&self.scale)?);
        if self.normalization_exempt {
            Ok(s.with_exempt_weight(weight))
        } else {
            s.with_weight(weight)
        }
    }

    pub fn from_series(s: &WeightedSeries<Rational>) -> Self {
        let fmt = |v: &[Rational]| v.iter().map(format_rational).collect();
        SeriesDescription {
            upper: fmt(s.upper.entries()),
            lower: fmt(s.lower.entries()),
            weight: fmt(s.weight.coeffs()),
            scale: format_rational(&s.scale),
            normalization_exempt: s.normalization_exempt,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialization")
    }
}
