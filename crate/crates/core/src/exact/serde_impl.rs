use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CycNum, Rational};

#[derive(Serialize, Deserialize)]
struct Wire {
    conductor: u32,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for CycNum {
    /// `{"conductor": N, "coeffs": [["num","den"], ...]}` with decimal strings.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            conductor: self.conductor(),
            coeffs: self
                .coeffs()
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(w.coeffs.len());
        for [n, den] in &w.coeffs {
            let n: BigInt = n.parse().map_err(D::Error::custom)?;
            let den: BigInt = den.parse().map_err(D::Error::custom)?;
            if den == BigInt::from(0) {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(Rational::new(n, den));
        }
        CycNum::from_coeffs(w.conductor, coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema() {
        let a = &CycNum::zeta(3, 1) + &CycNum::from_int(2);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"conductor":3,"coeffs":[["2","1"],["1","1"]]}"#);
        let back: CycNum = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn rejects_wrong_length() {
        let bad = r#"{"conductor":5,"coeffs":[["1","1"]]}"#;
        assert!(serde_json::from_str::<CycNum>(bad).is_err());
    }
}
