//! Serde helpers rendering big integers as decimal strings, so JSON
//! consumers never face numbers past their native precision.

pub mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse()
            .map_err(|_| serde::de::Error::custom(format!("invalid integer {text:?}")))
    }
}

pub mod bigint_string_opt {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Option<BigInt>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.serialize_some(&v.to_string()),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<BigInt>, D::Error> {
        let text: Option<String> = Option::deserialize(deserializer)?;
        text.map(|t| {
            t.parse()
                .map_err(|_| serde::de::Error::custom(format!("invalid integer {t:?}")))
        })
        .transpose()
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Wrapper {
        #[serde(with = "super::bigint_string")]
        value: BigInt,
        #[serde(with = "super::bigint_string_opt")]
        maybe: Option<BigInt>,
    }

    #[test]
    fn decimal_string_round_trip() {
        let w = Wrapper {
            value: BigInt::from(3).pow(64),
            maybe: Some(BigInt::from(-7)),
        };
        let json = serde_json::to_string(&w).unwrap();
        assert!(json.contains("\"3433683820292512484657849089281\""), "{json}");
        assert!(json.contains("\"-7\""), "{json}");
        let back: Wrapper = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);

        let none = Wrapper {
            value: BigInt::from(0),
            maybe: None,
        };
        let json = serde_json::to_string(&none).unwrap();
        let back: Wrapper = serde_json::from_str(&json).unwrap();
        assert_eq!(back, none);
    }
}
