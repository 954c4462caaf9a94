//! Weight distributions and the machine-readable reports shared by the
//! enumeration oracle and the closed-form predictors.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Association from Lee weight to frequency, kept sorted by weight.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightDistribution {
    counts: BTreeMap<u64, u64>,
}

impl WeightDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut d = Self::new();
        for (w, f) in pairs {
            d.add(w, f);
        }
        d
    }

    /// Accumulate `frequency` codewords of weight `weight`.
    pub fn add(&mut self, weight: u64, frequency: u64) {
        if frequency > 0 {
            *self.counts.entry(weight).or_insert(0) += frequency;
        }
    }

    pub fn merge(&mut self, other: &WeightDistribution) {
        for (&w, &f) in &other.counts {
            self.add(w, f);
        }
    }

    pub fn frequency(&self, weight: u64) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// Total number of codewords accounted for.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Minimum nonzero weight.
    pub fn min_nonzero_weight(&self) -> Option<u64> {
        self.counts.keys().find(|&&w| w > 0).copied()
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    pub fn num_nonzero_weights(&self) -> usize {
        self.counts.keys().filter(|&&w| w > 0).count()
    }

    /// Ascending `(weight, frequency)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&w, &f)| (w, f))
    }

    /// The weight enumerator as sparse coefficients of `z^w`, ascending.
    pub fn enumerator_coefficients(&self) -> Vec<(u64, u64)> {
        self.iter().collect()
    }

    /// Conventional enumerator string, e.g. `1+4z^36+72z^48+4z^72`.
    pub fn enumerator_string(&self) -> String {
        let mut out = String::new();
        for (w, f) in self.iter() {
            if !out.is_empty() {
                out.push('+');
            }
            if w == 0 {
                out.push_str(&f.to_string());
            } else {
                if f != 1 {
                    out.push_str(&f.to_string());
                }
                out.push_str(&format!("z^{w}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Derived parameters of a code specification, serialized in stable order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CodeParams {
    pub p: u64,
    pub s: u32,
    pub m: u32,
    pub e: u64,
    pub q: u64,
    pub r: u64,
    pub n: u64,
    #[serde(rename = "N")]
    pub gcd_em: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightEntry {
    pub weight: u64,
    pub frequency: u64,
}

/// How a predicted distribution was obtained.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Provenance {
    /// Which predictor produced it (`gcd=1` .. `gcd=4`, or `general`).
    pub theorem: String,
    /// Branch within the predictor.
    pub case: String,
    /// How a sign ambiguity was resolved, when one existed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
    /// Exact Gaussian periods by class index (all rational for valid specs).
    pub periods: Vec<i64>,
}

/// The stable JSON report for a spectrum, from either route.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub params: CodeParams,
    pub gray_length: u64,
    pub dimension: u32,
    pub distribution: Vec<WeightEntry>,
    pub min_distance: u64,
    pub codeword_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub erratum: Option<String>,
}

impl SpectrumReport {
    pub fn new(
        params: CodeParams,
        gray_length: u64,
        dimension: u32,
        dist: &WeightDistribution,
        codeword_count: u64,
    ) -> Self {
        SpectrumReport {
            params,
            gray_length,
            dimension,
            distribution: dist
                .iter()
                .map(|(weight, frequency)| WeightEntry { weight, frequency })
                .collect(),
            min_distance: dist.min_nonzero_weight().unwrap_or(0),
            codeword_count,
            provenance: None,
            erratum: None,
        }
    }

    pub fn distribution(&self) -> WeightDistribution {
        WeightDistribution::from_pairs(self.distribution.iter().map(|e| (e.weight, e.frequency)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
