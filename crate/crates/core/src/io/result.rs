//! JSON result files. An infinite cost is written as the string `"inf"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{ClusteringResult, Partition};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub n: usize,
    pub k: usize,
    pub labels: Vec<usize>,
    pub split: f64,
    pub diameter: f64,
    #[serde(with = "cost_repr")]
    pub cost: f64,
    pub split_trace: Vec<f64>,
    pub algorithm: String,
    pub seed: Option<u64>,
}

impl ResultFile {
    pub fn from_result(r: &ClusteringResult, algorithm: &str, seed: Option<u64>) -> Self {
        Self {
            n: r.partition.len(),
            k: r.partition.k(),
            labels: r.partition.labels().to_vec(),
            split: r.split,
            diameter: r.diameter,
            cost: r.cost,
            split_trace: r.split_trace.clone(),
            algorithm: algorithm.to_string(),
            seed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("result file serializes");
        s.push('\n');
        s
    }

    /// Parses and checks that the labels are canonical and agree with
    /// `n` and `k`.
    pub fn from_json(text: &str) -> Result<Self> {
        let r: Self = serde_json::from_str(text).map_err(|e| Error::ResultFile(e.to_string()))?;
        if r.labels.len() != r.n {
            return Err(Error::ResultFile(format!(
                "{} labels for n = {}",
                r.labels.len(),
                r.n
            )));
        }
        let p = Partition::from_labels(r.labels.clone())
            .map_err(|e| Error::ResultFile(e.to_string()))?;
        if p.labels() != r.labels.as_slice() || p.k() != r.k {
            return Err(Error::ResultFile(
                "labels are not canonical or do not match k".into(),
            ));
        }
        Ok(r)
    }
}

mod cost_repr {
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() && *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(*v)
        }
    }

    struct CostVisitor;

    impl Visitor<'_> for CostVisitor {
        type Value = f64;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a number or \"inf\"")
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
            Ok(v)
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
            Ok(v as f64)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
            Ok(v as f64)
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
            match v {
                "inf" => Ok(f64::INFINITY),
                other => Err(E::invalid_value(de::Unexpected::Str(other), &self)),
            }
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        d.deserialize_any(CostVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample(cost: f64) -> ResultFile {
        ResultFile {
            n: 4,
            k: 2,
            labels: vec![0, 0, 1, 1],
            split: 9.0,
            diameter: 1.0,
            cost,
            split_trace: vec![9.0],
            algorithm: "mrsd-exact".into(),
            seed: None,
        }
    }

    #[test]
    fn infinite_cost_is_a_string() {
        let json = sample(f64::INFINITY).to_json();
        assert!(json.contains("\"cost\": \"inf\""));
        assert_eq!(ResultFile::from_json(&json).unwrap(), sample(f64::INFINITY));
    }

    #[test]
    fn keys_present() {
        let v: serde_json::Value = serde_json::from_str(&sample(9.0).to_json()).unwrap();
        for key in [
            "n",
            "k",
            "labels",
            "split",
            "diameter",
            "cost",
            "split_trace",
            "algorithm",
            "seed",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["cost"], 9.0);
    }

    #[test]
    fn rejects_inconsistent_files() {
        let mut r = sample(9.0);
        r.labels = vec![1, 1, 0, 0];
        assert!(ResultFile::from_json(&r.to_json()).is_err());
        let mut r = sample(9.0);
        r.k = 3;
        assert!(ResultFile::from_json(&r.to_json()).is_err());
        let mut r = sample(9.0);
        r.n = 5;
        assert!(ResultFile::from_json(&r.to_json()).is_err());
        let bad = r#"{"n":2,"k":2,"labels":[0,1],"split":1,"diameter":0,"cost":"nan","split_trace":[],"algorithm":"x","seed":null}"#;
        assert!(ResultFile::from_json(bad).is_err());
        assert!(ResultFile::from_json(&bad.replace("\"nan\"", "\"inf\"")).is_ok());
    }

    proptest! {
        #[test]
        fn round_trip(split in 0.0f64..1e9, dia in 0.0f64..1e9, trace in prop::collection::vec(0.0f64..1e9, 0..5), seed in prop::option::of(any::<u64>())) {
            let mut r = sample(crate::metric::cost(split, dia));
            r.split = split;
            r.diameter = dia;
            r.split_trace = trace;
            r.seed = seed;
            prop_assert_eq!(ResultFile::from_json(&r.to_json()).unwrap(), r);
        }
    }
}
