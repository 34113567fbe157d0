//! The JSON fit report: a faithful, versioned serialization of a
//! [`MixtureFit`](crate::select::MixtureFit) with events referred to by name.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{CbnError, Result};
use crate::select::{BootstrapSummary, MixtureFit};

/// Serializable fit summary. Field order is the JSON field order; the
/// encoding is stable so identical fits produce identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub schema_version: u32,
    /// Names of the fitted events; merged events are joined with `+`.
    pub event_names: Vec<String>,
    pub cover_relations: Vec<(String, String)>,
    pub theta_hat: Vec<f64>,
    pub lambda_hat: f64,
    pub epsilon: f64,
    /// Present when a scan collapsed a run of tolerances onto one poset:
    /// the fit is identical for every ε in `[epsilon, epsilon_max]`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub epsilon_max: Option<f64>,
    #[serde(with = "extended_real")]
    pub log_lik: f64,
    /// Decimal string: lattice sizes overflow u64 long before the model
    /// does anything else useful, but the report stays honest.
    pub lattice_size: String,
    pub n_compatible: f64,
    pub n_total: f64,
    pub unidentified_events: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub merge_groups: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bootstrap: Option<BootstrapSummary>,
}

pub const SCHEMA_VERSION: u32 = 1;

impl FitReport {
    /// Renders a fit against the original (pre-merge) event names.
    pub fn from_fit(
        fit: &MixtureFit,
        original_names: &[String],
        seed: Option<u64>,
        bootstrap: Option<BootstrapSummary>,
    ) -> Result<Self> {
        let names = working_names(fit, original_names)?;
        let cover_relations = fit
            .poset
            .cover_relations()
            .into_iter()
            .map(|(e, f)| (names[e].clone(), names[f].clone()))
            .collect();
        let unidentified_events =
            fit.unidentified_events.iter().map(|&e| names[e].clone()).collect();
        let merge_groups = fit.merge.as_ref().map(|m| {
            m.groups
                .iter()
                .map(|grp| grp.iter().map(|&e| original_names[e].clone()).collect())
                .collect()
        });
        Ok(FitReport {
            schema_version: SCHEMA_VERSION,
            event_names: names,
            cover_relations,
            theta_hat: fit.theta_hat.clone(),
            lambda_hat: fit.lambda_hat,
            epsilon: fit.epsilon,
            epsilon_max: None,
            log_lik: fit.log_lik,
            lattice_size: fit.lattice_size.to_string(),
            n_compatible: fit.n_compatible,
            n_total: fit.n_total,
            unidentified_events,
            merge_groups,
            seed,
            bootstrap,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write_json(&self, w: &mut dyn Write) -> Result<()> {
        w.write_all(self.to_json().as_bytes())?;
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CbnError::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }
}

/// Post-merge display names: each merged class is named by joining its
/// members with `+` in index order.
fn working_names(fit: &MixtureFit, original_names: &[String]) -> Result<Vec<String>> {
    let original_n = match &fit.merge {
        Some(m) => m.mapping.len(),
        None => fit.poset.n(),
    };
    if original_names.len() != original_n {
        return Err(CbnError::DimensionMismatch {
            expected: original_n,
            got: original_names.len(),
        });
    }
    match &fit.merge {
        None => Ok(original_names.to_vec()),
        Some(m) => Ok(m
            .groups
            .iter()
            .map(|grp| {
                grp.iter()
                    .map(|&e| original_names[e].as_str())
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect()),
    }
}

/// JSON has no ±∞, but log-likelihoods can be −∞ (e.g. a pure model facing
/// incompatible data). Finite values serialize as numbers, infinities as
/// the strings "-inf"/"inf".
mod extended_real {
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if *v == f64::NEG_INFINITY {
            s.serialize_str("-inf")
        } else if *v == f64::INFINITY {
            s.serialize_str("inf")
        } else {
            Err(serde::ser::Error::custom("NaN log-likelihood"))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = f64;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a number or \"inf\"/\"-inf\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
                Ok(v)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
                match v {
                    "inf" => Ok(f64::INFINITY),
                    "-inf" => Ok(f64::NEG_INFINITY),
                    other => Err(E::custom(format!("bad extended real {other:?}"))),
                }
            }
        }
        d.deserialize_any(V)
    }
}
